from majca.analysis.mappings import (
    AlignedPair,
    BlockInterval,
    DifferenceVectors,
    alignment,
    block_interval,
    block_length_for_periodic_pair,
    difference_sum,
    difference_vectors,
    forward_alignment,
    iterate_alignment,
    left_right_mapping,
    make_aligned_pair,
    varsigma,
)
from majca.analysis.periodicity import (
    ClassificationCase,
    ClassificationResult,
    PotentialValue,
    TemporalClass,
    TemporalTag,
    classify_theorem,
    is_balanced_weakly_stable,
    potential2,
    potential_trajectory,
    spatial_period,
    temporal_class,
)
from majca.analysis.stability import (
    StabilityLabel,
    StabilityMap,
    classify_stability,
    count_labels,
    stability_grid,
    unstable_runs,
)
from majca.analysis.structure import (
    Block,
    BlockDecomposition,
    BlockLengthVector,
    bias,
    block_length_vector,
    blocks,
    configurations_for_lengths,
    predict_block_length,
    predict_switch_point,
    reconstruct,
    switch_points,
)
