"""
Executable laws of majority dynamics.

Every law takes a configuration and a radius and returns the list of
violations it found, empty when the law holds. Laws are registered by group:
``configuration`` laws hold for every ring, ``periodic`` laws for every
non-homogeneous temporally periodic ring large enough that no block interval
can wrap onto itself.
"""

from collections.abc import Callable

from majca.analysis.mappings import (
    aligned_index,
    alternating_sum,
    block_interval_size,
    block_length_for_periodic_pair,
    difference_sum,
    difference_vectors,
    forward_alignment,
    iterate_alignment,
    make_aligned_pair,
    mapped_indices,
    varsigma,
)
from majca.analysis.periodicity import (
    ClassificationCase,
    TemporalTag,
    classify_theorem,
    flip_count,
    is_balanced_weakly_stable,
    potential2,
    spatial_period,
    temporal_class,
)
from majca.analysis.stability import (
    StabilityLabel,
    classify_stability,
    count_labels,
    strongly_stable_cells,
    unstable_runs,
)
from majca.analysis.structure import (
    bias,
    blocks,
    block_length_vector,
    predict_block_length,
    predict_switch_point,
    reconstruct,
    switch_points,
    switch_points_within,
)
from majca.core.automaton import (
    CellInterval,
    Configuration,
    Rule,
    evolve,
    step,
    step_twice,
)
from majca.exceptions import MajcaError

Law = Callable[[Configuration, int], list[str]]

LAWS: dict[str, dict[str, Law]] = {"configuration": {}, "periodic": {}}


def law(group: str, name: str):
    def register(fn: Law) -> Law:
        LAWS[group][name] = fn
        return fn

    return register


def min_pair_ring(r: int) -> int:
    """Smallest ring on which a block interval of a periodic pair cannot wrap."""
    return 4 * r + 2


# === CONFIGURATION LAWS ===


@law("configuration", "rule_symmetries")
def rule_symmetries(cfg: Configuration, r: int) -> list[str]:
    majority, minority = Rule.majority(r), Rule.minority(r)
    found = []
    successor = step(cfg, majority)
    if step(cfg.complement(), majority) != successor.complement():
        found.append("step does not commute with complement")
    if step(cfg, minority) != successor.complement():
        found.append("minority step is not the complement of the majority step")
    if step_twice(cfg, minority) != step_twice(cfg, majority):
        found.append("two minority steps differ from two majority steps")
    for k in {1, cfg.n // 2}:
        if step(cfg.rotate(k), majority) != successor.rotate(k):
            found.append(f"step does not commute with rotation by {k}")
    if step(cfg.mirror(), majority) != successor.mirror():
        found.append("step does not commute with mirroring")
    return found


@law("configuration", "switch_points")
def switch_point_laws(cfg: Configuration, r: int) -> list[str]:
    n, successor = cfg.n, step(cfg, Rule.majority(r))
    found = []
    for i, j in switch_points(successor):
        if cfg[i - r] != successor[i] or cfg[i + 1 + r] != successor[j]:
            found.append(f"switch point ({i},{j}) not forced by cells {i - r}, {i + 1 + r}")
        if bias(cfg, CellInterval.span(i - r + 1, i + r, n)) != 0:
            found.append(f"window around switch point ({i},{j}) is unbalanced")
    for i in range(n):
        predicted = predict_switch_point(cfg, i, r)
        if predicted is not None and predicted != (successor[i], successor[i + 1]):
            found.append(f"predicted switch point at ({i},{i + 1}) did not appear")
    if blocks(successor).count > blocks(cfg).count:
        found.append("block count grew")
    return found


@law("configuration", "block_lengths")
def block_length_laws(cfg: Configuration, r: int) -> list[str]:
    successor = step(cfg, Rule.majority(r))
    decomposition = blocks(successor)
    found = []
    if reconstruct(block_length_vector(cfg)) != cfg:
        found.append("block-length vector does not rebuild the configuration")
    if decomposition.count < 2:
        return found
    for block in decomposition:
        if block.length <= 2 * r + 1:
            predicted = predict_block_length(cfg, successor, block, r)
            if predicted != block.length:
                found.append(f"block {block} predicted length {predicted}")
    return found


@law("configuration", "mappings")
def mapping_laws(cfg: Configuration, r: int) -> list[str]:
    successor = step(cfg, Rule.majority(r))
    decomposition = blocks(successor)
    if decomposition.count < 2:
        return []
    prev_blocks = blocks(cfg)
    found = []
    lefts, rights = [], []
    for block in decomposition:
        left, right = mapped_indices(prev_blocks, block, r)
        lefts.append(left)
        rights.append(right)
        if prev_blocks[left].value != block.value or prev_blocks[right].value != block.value:
            found.append(f"mapped blocks of {block} change value")
        size = block_interval_size(prev_blocks, block, r)
        if size % 2 == 0:
            found.append(f"block interval of {block} has even size {size}")
        middle = prev_blocks[aligned_index(prev_blocks, block, r)]
        expected = block.value if (size // 2) % 2 == 0 else 1 - block.value
        if middle.value != expected:
            found.append(f"aligned block of {block} has value {middle.value}")
    if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
        found.append("left or right mapping is not one-to-one")
    return found


@law("configuration", "stability")
def stability_laws(cfg: Configuration, r: int) -> list[str]:
    majority, minority = Rule.majority(r), Rule.minority(r)
    labels = classify_stability(cfg, majority)
    found = []
    if labels.labels != classify_stability(cfg, minority).labels:
        found.append("majority and minority stability labels differ")
    periodic = step_twice(cfg, majority) == cfg
    runs = unstable_runs(labels)
    if periodic == bool(runs):
        found.append("unstable cells do not match transience")
    if any(run.length > 2 * r for run in runs):
        found.append(f"unstable run longer than {2 * r}")
    if not periodic:
        successor = step(cfg, majority)
        before = count_labels(labels)
        after = count_labels(classify_stability(successor, majority))
        # one step may keep the unstable count (0010101 at r=1)
        try:
            final = evolve(cfg, majority).final
        except MajcaError as e:
            found.append(str(e))
        else:
            if count_labels(classify_stability(final, majority))[StabilityLabel.UNSTABLE]:
                found.append("unstable cells remain once the trajectory cycles")
        strong = before[StabilityLabel.STRONGLY_STABLE]
        if strong and after[StabilityLabel.STRONGLY_STABLE] < strong:
            found.append("strongly stable cell count decreased")
    return found


@law("configuration", "trajectory")
def trajectory_laws(cfg: Configuration, r: int) -> list[str]:
    try:
        trajectory = evolve(cfg, Rule.majority(r))
    except MajcaError as e:
        return [str(e)]
    found = []
    if trajectory.period not in (1, 2):
        found.append(f"period {trajectory.period}")
    states = trajectory.states
    for t in range(1, len(states) - 1):
        gain = potential2(states[t], states[t + 1], r) - potential2(states[t - 1], states[t], r)
        if gain < flip_count(states[t - 1], states[t + 1]):
            found.append(f"potential grew by {gain} at t={t}")
    strong = strongly_stable_cells(cfg, r)
    for state in states[1:]:
        if any(state[i] != cfg[i] for i in strong):
            found.append("a strongly stable cell changed state")
            break
    if strong and trajectory.preperiod:
        final = classify_theorem(trajectory.final, r)
        if final.case != ClassificationCase.STRONGLY_STABLE_FIXED_FORM:
            found.append("did not settle into the strongly stable form")
    return found


@law("configuration", "theorem")
def theorem_laws(cfg: Configuration, r: int) -> list[str]:
    try:
        result = classify_theorem(cfg, r)
    except MajcaError as e:
        return [str(e)]
    found = []
    tag = temporal_class(cfg, Rule.majority(r)).tag
    if (result.case == ClassificationCase.TRANSIENT) != (tag == TemporalTag.TRANSIENT):
        found.append(f"case {result.case.value} disagrees with {tag.value}")
    if result.case == ClassificationCase.STRONGLY_STABLE_FIXED_FORM:
        if tag != TemporalTag.FIXED_POINT:
            found.append("strongly stable form is not a fixed point")
        minority = temporal_class(cfg, Rule.minority(r))
        if minority.tag != TemporalTag.TWO_CYCLE or minority.partner != cfg.complement():
            found.append("strongly stable form is not a minority 2-cycle with its complement")
    if result.case == ClassificationCase.WEAKLY_STABLE_PERIODIC:
        period = result.spatial_period
        if period > 2 * r * (r + 1) or cfg.n % period:
            found.append(f"spatial period {period} out of bounds")
        if period != spatial_period(cfg):
            found.append("reported spatial period is not minimal")
        # the swap is per cell: cells kept by one majority step move under minority
        kept = ~(cfg.bits ^ step(cfg, Rule.majority(r)).bits)
        moved = cfg.bits ^ step(cfg, Rule.minority(r)).bits
        if (kept ^ moved) & ((1 << cfg.n) - 1):
            found.append("minority does not swap the temporal period of every cell")
        minority_tag = temporal_class(cfg, Rule.minority(r)).tag
        if tag == TemporalTag.FIXED_POINT and minority_tag != TemporalTag.TWO_CYCLE:
            found.append("majority fixed point is not a minority 2-cycle")
        if not is_balanced_weakly_stable(cfg, r):
            found.append("weakly stable configuration is not balanced")
    if result.case == ClassificationCase.TRANSIENT and result.max_unstable_run > 2 * r:
        found.append(f"unstable run of {result.max_unstable_run} cells")
    return found


# === PERIODIC PAIR LAWS ===


@law("periodic", "aligned_pair")
def aligned_pair_laws(cfg: Configuration, r: int) -> list[str]:
    try:
        pair = make_aligned_pair(cfg, r)
    except MajcaError as e:
        return [str(e)]
    sigma_blocks, next_blocks = blocks(pair.sigma), blocks(pair.sigma_next)
    found = []
    sizes = {block_interval_size(sigma_blocks, block, r) for block in next_blocks}
    sizes |= {block_interval_size(next_blocks, block, r) for block in sigma_blocks}
    if sizes != {2 * pair.horizon + 1}:
        found.append(f"block interval sizes {sorted(sizes)} are not constant")
    if pair.horizon > r:
        found.append(f"horizon {pair.horizon} exceeds r")
    if len(pair.v) != len(pair.v_next):
        found.append("block-length vectors differ in length")
    m = pair.block_count
    for k in range(m):
        if pair.correspondence[(k + 1) % m] != (pair.correspondence[k] + 1) % m:
            found.append(f"aligned blocks {k}, {k + 1} are not adjacent in order")
            break
    for block in next_blocks:
        if iterate_alignment(pair, block, 2) != block:
            found.append(f"alignment applied twice moves {block}")
        if iterate_alignment(pair, block, 4) != block:
            found.append(f"alignment applied four times moves {block}")
    for block in sigma_blocks:
        if forward_alignment(pair.sigma, pair.sigma_next, block, r) is None:
            found.append(f"block {block} has no forward alignment")
    for k, block in enumerate(next_blocks):
        if block_length_for_periodic_pair(pair, k) != block.length:
            found.append(f"periodic block-length sum fails for {block}")
        i, j = block.start, block.start + block.length - 1
        for interval in (
            CellInterval.span(i - r - 1, j - r, cfg.n),
            CellInterval.span(i + r, j + r + 1, cfg.n),
        ):
            if switch_points_within(pair.sigma, interval) != 1:
                found.append(f"edge interval {interval} of {block} lacks a single switch point")
    return found


@law("periodic", "weakly_stable_vectors")
def weakly_stable_vector_laws(cfg: Configuration, r: int) -> list[str]:
    if max(block.length for block in blocks(cfg)) > r:
        return []
    try:
        pair = make_aligned_pair(cfg, r)
        vectors = difference_vectors(pair)
    except MajcaError as e:
        return [str(e)]
    v, w, delta = pair.v, pair.v_next, pair.horizon
    d, d_prime = vectors.delta, vectors.delta_prime
    m = len(v)
    found = []
    for i in range(m):
        if w[i] != alternating_sum(pair, i):
            found.append(f"alternating sum fails at {i}")
        if sum((-1) ** (j + delta) * w[i + j] for j in range(-delta, delta + 1)) != v[i]:
            found.append(f"reverse alternating sum fails at {i}")
        if w[i] + w[i + 1] != v[i - delta] + v[i + delta + 1]:
            found.append(f"pair sum fails at {i}")
        if v[i] + v[i + 1] != w[i - delta] + w[i + delta + 1]:
            found.append(f"reverse pair sum fails at {i}")
        if d_prime[i] != d[(i - delta) % m] or d[i] != d_prime[(i - delta) % m]:
            found.append(f"difference vectors are not shifts of each other at {i}")
        if delta and d[(i + 2 * delta) % m] != d[i]:
            found.append(f"difference vector is not {2 * delta}-periodic at {i}")
        if varsigma(pair, i, vectors) != 0:
            found.append(f"difference sum from {i} is nonzero")
        for steps in range(2 * delta + 2):
            telescoped = v[i] + difference_sum(pair, i, steps, vectors)
            if telescoped != v[i + 2 * steps * (delta + 1)]:
                found.append(f"difference sum of {steps} pairs from {i} does not telescope")
        if sum(v[i + j] for j in range(2 * delta)) > 2 * r:
            found.append(f"{2 * delta} blocks from {i} exceed {2 * r} cells")
    if not is_balanced_weakly_stable(cfg, r):
        found.append("configuration is not balanced")
    return found
