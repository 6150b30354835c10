"""Linear codes over Z_{p^2}: Lee and Hamming metrics, Gray map, exact
covering radii by independent brute-force methods, repetition-code builders,
and a claim audit suite with structured reports."""

from .codes import (
    GeneratorMatrix,
    LinearCode,
    WeightDistribution,
    classify_type,
    dual,
    generator_matrix,
    linear_code,
    load_generator_file,
    min_distance,
    parse_generator_text,
    save_generator_file,
    span,
    weight_distribution,
    word_weight,
)
from .constructions import (
    ConstructionSpec,
    block_repetition_drop_last,
    block_repetition_full,
    block_repetition_mixed,
    cartesian_product,
    field_block_repetition_code,
    field_block_repetition_radius,
    field_repetition_code,
    field_repetition_radius,
    stacked_construction,
    unit_repetition,
    zero_divisor_repetition,
)
from .covering import (
    BoundReport,
    CoveringResult,
    covering_radius_cosets,
    covering_radius_exhaustive,
    covering_radius_gray,
    external_distance_bound,
    lee_ball_volume,
    min_distance_to,
    sphere_covering_bound,
    verify_witness,
)
from .errors import (
    ConfigError,
    InvalidParameterError,
    ResourceLimitError,
    UndefinedDistanceError,
    Zp2CoverError,
)
from .harness import (
    TheoremReport,
    audit,
    default_config,
    run_suite,
    verify_counterexample,
)
from .ring import (
    HAMMING,
    LEE,
    RingContext,
    Word,
    distance,
    gray_element,
    gray_word,
    hamming_weight,
    is_prime,
    lee_weight,
    lee_weight_word,
    make_ring,
    word,
)

__version__ = "0.1.0"
