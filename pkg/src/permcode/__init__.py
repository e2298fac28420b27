"""Permutation error-correcting codes in the block permutation and
generalized Cayley metrics: metric computation, coset-code syndrome
encoding/decoding over a prime field, systematic encoding via permutation
extensions, and desk-scale verification of the underlying bounds.
"""

from .analysis import (
    BallReport,
    LcmCheck,
    RateReport,
    ball_bounds,
    block_weight_count,
    block_weight_histogram,
    cayley_distance_table,
    exact_block_ball,
    exact_cayley_ball,
    exact_cayley_distance,
    lcm_bound_check,
    log2_factorial_bounds,
    min_distance,
    rate_bounds,
)
from .coset import (
    CodeParams,
    DecodeTrace,
    PairLabeling,
    decode_detailed,
    enumerate_codebook,
    labels_of,
    reconstruct_permutation,
    syndrome,
)
from .coset import decode as coset_decode
from .errors import DecodeFailure, EnumerationCapError, ParameterError
from .gfq import (
    Poly,
    char_polynomial,
    elementary_symmetric,
    find_roots,
    is_prime,
    linear_solve,
    next_prime,
    poly_gcd,
    power_sums,
    power_sums_to_elementary,
    root_multiplicities,
    smallest_field_prime,
)
from .perms import (
    all_generalized_transpositions,
    block_distance,
    block_weight,
    channel_block,
    channel_cayley,
    characteristic_set,
    check_permutation,
    compose,
    extend,
    generalized_transposition,
    hamming_set,
    identity,
    inverse,
    is_minimal,
    is_permutation,
    jump_set,
    permutation_from_json,
    permutation_to_json,
    random_permutation,
    recover_extension_sequence,
    truncate,
)
from .systematic import (
    AuxParams,
    anchors_to_residues,
    crt_residues,
    gamma_digits,
    gamma_of,
    recover_gamma_crt,
    recover_gamma_exhaustive,
    residues_to_anchors,
    syndrome_anchor_sequence,
)
from .systematic import decode as systematic_decode
from .systematic import encode as systematic_encode

__version__ = "0.1.0"
