from typing import Any

from pydantic import BaseModel, Field


class CommandResponse(BaseModel):
    command: str
    message: str = "Success"
    error: str | None = None
    result: Any | None = None


class RunResult(BaseModel):
    """Recorded trajectory of a `run` invocation"""
    rule: str
    radius: int
    n: int
    steps: int
    states: list[str]
    labels: list[str] | None = Field(description="Stability letters per step, when overlaid", default=None)
    preperiod: int | None = Field(description="First index of the detected cycle", default=None)
    period: int | None = Field(description="Detected cycle length, 1 or 2", default=None)


class ClassifyResult(BaseModel):
    """Temporal class, structure-theorem case and stability labels of one configuration"""
    config: str
    rule: str
    radius: int
    temporal_class: str
    partner: str | None = None
    case: str
    spatial_period: int | None = None
    max_unstable_run: int | None = None
    labels: str


class EnumerateResult(BaseModel):
    """Temporally periodic configurations of one ring size"""
    n: int
    radius: int
    rule: str
    method: str
    canonical: bool
    brute: list[str] | None = None
    pattern: list[str] | None = None
    match: bool | None = Field(description="Whether both methods agree, when both ran", default=None)
