from majca.models.requests import (
    ClassifyRequest,
    EnumerateRequest,
    RunRequest,
    VerifyRequest,
)
from majca.models.responses import (
    ClassifyResult,
    CommandResponse,
    EnumerateResult,
    RunResult,
)
