from majca.core.automaton import (
    CellInterval,
    Configuration,
    Rule,
    RuleKind,
    Trajectory,
    complement,
    count_states,
    evolve,
    mirror,
    parse_configuration,
    rotate,
    simulate,
    step,
    step_twice,
)
from majca.core.kernel import step_words

__all__ = [
    "CellInterval",
    "Configuration",
    "Rule",
    "RuleKind",
    "Trajectory",
    "complement",
    "count_states",
    "evolve",
    "mirror",
    "parse_configuration",
    "rotate",
    "simulate",
    "step",
    "step_twice",
    "step_words",
]
