from majca.verification.laws import LAWS
from majca.verification.suite import (
    CheckResult,
    ConvergenceStats,
    VerificationReport,
    run_suite,
)

__all__ = ["CheckResult", "ConvergenceStats", "LAWS", "VerificationReport", "run_suite"]
