"""
The property suite run by ``majca verify``.

Laws are checked over every ring of size 1..n_max, over seeded random rings,
over seeded random rings of a fixed larger size (trajectory laws only),
over every non-homogeneous periodic ring found by the exhaustive scan (copied
until block intervals cannot wrap) and, per ring size, over the two
enumerators.
"""

from collections.abc import Iterable, Iterator

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from majca.analysis.stability import StabilityLabel, classify_stability, count_labels
from majca.analysis.structure import blocks
from majca.core.automaton import (
    Configuration,
    Rule,
    Trajectory,
    evolve,
    parse_configuration,
    step,
)
from majca.enumeration.bruteforce import enumerate_bruteforce
from majca.enumeration.canonical import canonicalize
from majca.enumeration.patterns import GeneratorSet, enumerate_from_patterns, generate_patterns
from majca.exceptions import BudgetExceeded, MajcaError
from majca.utils.config import settings
from majca.verification.laws import LAWS, min_pair_ring

MAX_COUNTEREXAMPLES = 5
RANDOM_MAX_N = 128
TRAJECTORY_N = 512


class CheckResult(BaseModel):
    name: str
    instances: int = 0
    violations: int = 0
    counterexamples: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, subject: str, problems: list[str]):
        self.instances += 1
        if problems:
            self.violations += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(f"{subject}: {problems[0]}")


class ConvergenceStats(BaseModel):
    """Observed steps to reach a cycle; a measurement, not a bound.

    `unstable_plateaus` counts transient rings with a step that does not lower
    the number of unstable cells.
    """

    instances: int = 0
    failures: int = 0
    max_preperiod: int = 0
    max_preperiod_ratio: float = 0.0
    worst: str | None = None
    unstable_plateaus: int = 0
    plateau_example: str | None = None

    def record(self, cfg: Configuration, preperiod: int):
        self.instances += 1
        ratio = preperiod / cfg.n
        if preperiod > self.max_preperiod:
            self.max_preperiod = preperiod
        if ratio > self.max_preperiod_ratio:
            self.max_preperiod_ratio = round(ratio, 6)
            self.worst = str(cfg)

    def record_unstable(self, cfg: Configuration, counts: list[int]):
        if any(b >= a > 0 for a, b in zip(counts, counts[1:])):
            self.unstable_plateaus += 1
            if self.plateau_example is None:
                self.plateau_example = str(cfg)


class VerificationReport(BaseModel):
    radius: int
    n_max: int
    samples: int
    trajectory_n: int
    seed: int
    passed: bool
    checks: list[CheckResult]
    convergence: ConvergenceStats


def exhaustive_configurations(n_max: int) -> Iterator[Configuration]:
    for n in range(1, n_max + 1):
        for bits in range(1 << n):
            yield Configuration.packed(n, bits)


def random_configurations(samples: int, seed: int, max_n: int = RANDOM_MAX_N) -> Iterator[Configuration]:
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        n = int(rng.integers(1, max_n + 1))
        yield Configuration.from_cells(rng.integers(0, 2, size=n).tolist())


def random_rings(samples: int, seed: int, n: int = TRAJECTORY_N) -> Iterator[Configuration]:
    """Seeded rings of exactly n cells, drawn from a stream apart from random_configurations."""
    rng = np.random.default_rng([seed, 1])
    for _ in range(samples):
        yield Configuration.from_cells(rng.integers(0, 2, size=n).tolist())


def pair_instances(periodic: Iterable[Configuration], r: int) -> Iterator[Configuration]:
    """Non-homogeneous periodic rings, copied up to a size where intervals cannot wrap."""
    seen: set[str] = set()
    for cfg in periodic:
        if cfg.is_homogeneous():
            continue
        copies = -(-min_pair_ring(r) // cfg.n)
        grown = parse_configuration(cfg.to_text(), copies)
        if grown.to_text() not in seen:
            seen.add(grown.to_text())
            yield grown


def _converge(cfg: Configuration, rule: Rule, convergence: ConvergenceStats) -> Trajectory | None:
    try:
        trajectory = evolve(cfg, rule)
    except MajcaError as e:
        logger.warning(f"No convergence measured for {cfg}: {e}")
        convergence.failures += 1
        return None
    convergence.record(cfg, trajectory.preperiod)
    return trajectory


def _check_enumerators(
    n: int, r: int, generators: GeneratorSet | None, checks: dict[str, CheckResult]
) -> list[Configuration]:
    majority = enumerate_bruteforce(n, r, Rule.majority(r))
    minority = enumerate_bruteforce(n, r, Rule.minority(r))
    subject = f"n={n}"

    checks["minority_periodic_set"].record(
        subject, [] if majority == minority else ["periodic sets differ between rules"]
    )
    if generators is not None:
        from_patterns = enumerate_from_patterns(n, r, generators)
        problems = []
        if set(from_patterns) != set(majority):
            extra = {str(c) for c in from_patterns} ^ {str(c) for c in majority}
            problems.append(f"enumerators disagree on {sorted(extra)[:3]}")
        checks["oracle_equivalence"].record(subject, problems)
    return majority


def _check_generators(generators: GeneratorSet, checks: dict[str, CheckResult]):
    r = generators.radius
    rule = Rule.majority(r)
    for pattern in generators.generators:
        problems = []
        for copies in range(1, 64 // len(pattern) + 1):
            cfg = parse_configuration(pattern, copies)
            if step(step(cfg, rule), rule) != cfg:
                problems.append(f"{copies} copies are not periodic")
                break
        for image in (parse_configuration(pattern).mirror(), parse_configuration(pattern).complement()):
            if canonicalize(image).representative.to_text() not in generators:
                problems.append(f"image {image} of the generator is missing")
        if max(block.length for block in blocks(parse_configuration(pattern))) > r:
            problems.append("generator has a run longer than r")
        if len(pattern) > generators.max_length:
            problems.append("generator longer than 2r(r+1)")
        checks["generators"].record(pattern, problems)


def run_suite(
    r: int,
    n_max: int,
    samples: int = 1000,
    seed: int | None = None,
    trajectory_n: int = TRAJECTORY_N,
) -> VerificationReport:
    seed = settings.default_seed if seed is None else seed
    if n_max > settings.bruteforce_max_n:
        raise BudgetExceeded(
            f"Exhaustive checks up to n={n_max} are beyond the brute-force budget",
            budget=settings.bruteforce_max_n,
            what="verify",
        )
    logger.info(f"Verifying r={r} up to n={n_max} with {samples} samples (seed {seed})")

    checks: dict[str, CheckResult] = {}
    for group in LAWS.values():
        for name in group:
            checks[name] = CheckResult(name=name)
    for name in ("minority_periodic_set", "oracle_equivalence", "generators"):
        checks[name] = CheckResult(name=name)
    convergence = ConvergenceStats()

    majority = Rule.majority(r)
    configuration_laws = LAWS["configuration"]
    instances = 0
    for source in (exhaustive_configurations(n_max), random_configurations(samples, seed)):
        for cfg in source:
            for name, check in configuration_laws.items():
                try:
                    problems = check(cfg, r)
                except MajcaError as e:
                    problems = [str(e)]
                checks[name].record(str(cfg), problems)
            trajectory = _converge(cfg, majority, convergence)
            if trajectory is not None and trajectory.preperiod:
                counts = [
                    count_labels(classify_stability(state, majority))[StabilityLabel.UNSTABLE]
                    for state in trajectory.states[: trajectory.preperiod + 1]
                ]
                convergence.record_unstable(cfg, counts)
            instances += 1
    logger.info(f"Checked configuration laws on {instances} rings")

    trajectory_check = LAWS["configuration"]["trajectory"]
    for cfg in random_rings(samples, seed, trajectory_n):
        checks["trajectory"].record(str(cfg), trajectory_check(cfg, r))
        _converge(cfg, majority, convergence)
    logger.info(f"Checked trajectories of {samples} rings of {trajectory_n} cells")

    generators = None
    if r <= settings.pattern_max_radius:
        generators = generate_patterns(r)
        _check_generators(generators, checks)
    else:
        logger.warning(f"Skipping pattern checks: r={r} is beyond the pattern search budget")

    periodic: list[Configuration] = []
    for n in range(1, n_max + 1):
        periodic.extend(_check_enumerators(n, r, generators, checks))

    for cfg in pair_instances(periodic, r):
        for name, check in LAWS["periodic"].items():
            try:
                problems = check(cfg, r)
            except MajcaError as e:
                problems = [str(e)]
            checks[name].record(str(cfg), problems)

    results = list(checks.values())
    passed = all(check.passed for check in results)
    if not passed:
        failed = [check.name for check in results if not check.passed]
        logger.error(f"Verification failed: {', '.join(failed)}")
    return VerificationReport(
        radius=r,
        n_max=n_max,
        samples=samples,
        trajectory_n=trajectory_n,
        seed=seed,
        passed=passed,
        checks=results,
        convergence=convergence,
    )
