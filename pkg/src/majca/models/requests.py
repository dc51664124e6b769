from typing import Literal

from pydantic import BaseModel, Field, model_validator

from majca.core.automaton import RuleKind


class RunRequest(BaseModel):
    rule: RuleKind = RuleKind.MAJORITY
    radius: int = Field(ge=1)
    init: str | None = None
    pattern: str | None = None
    copies: int = Field(default=1, ge=1)
    steps: int = Field(ge=0)
    format: Literal["text", "svg", "pgm", "json"] = "text"
    overlay: bool = False
    cell_size: int = Field(default=10, ge=1)
    output: str | None = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.init is None) == (self.pattern is None):
            raise ValueError("exactly one of --init and --pattern is required")
        if self.init is not None and self.copies != 1:
            raise ValueError("--copies only applies to --pattern")
        return self

    @property
    def text(self) -> str:
        return self.init if self.init is not None else self.pattern


class ClassifyRequest(BaseModel):
    rule: RuleKind = RuleKind.MAJORITY
    radius: int = Field(ge=1)
    init: str
    format: Literal["text", "json"] = "text"


class EnumerateRequest(BaseModel):
    radius: int = Field(ge=1)
    n: int = Field(ge=1)
    method: Literal["brute", "pattern", "both"] = "brute"
    canonical: bool = False
    rule: RuleKind = RuleKind.MAJORITY
    format: Literal["text", "json"] = "text"


class VerifyRequest(BaseModel):
    radius: int = Field(ge=1)
    n_max: int = Field(ge=1)
    samples: int = Field(default=1000, ge=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    trajectory_n: int = Field(default=512, ge=1)
    format: Literal["text", "json"] = "text"
