"""LP-based decoders and the brute-force ML reference."""

from .adaptive import (
    ConstraintPool,
    branching_index,
    decode_alp,
    decode_ml_bruteforce,
    decode_nsa,
    decode_static_lp,
    nsa_problem,
    alp_problem,
    run_nsa,
)
from .multi import (
    adapt_matrix,
    adapted_matrix,
    decode_alp_perm,
    decode_bb,
    decode_diversity,
    nearest_candidate,
    sampler_for,
)
from .outcome import DecodeOutcome, DecoderConfig, DecodeStats, DecodeTrace, IterationRecord
from .presets import BB_DEPTH, decode, decode_preset, preset_config

__all__ = [
    "BB_DEPTH",
    "ConstraintPool",
    "DecodeOutcome",
    "DecodeStats",
    "DecodeTrace",
    "DecoderConfig",
    "IterationRecord",
    "adapt_matrix",
    "adapted_matrix",
    "alp_problem",
    "branching_index",
    "decode",
    "decode_alp",
    "decode_alp_perm",
    "decode_bb",
    "decode_diversity",
    "decode_ml_bruteforce",
    "decode_nsa",
    "decode_preset",
    "decode_static_lp",
    "nearest_candidate",
    "nsa_problem",
    "preset_config",
    "run_nsa",
    "sampler_for",
]
