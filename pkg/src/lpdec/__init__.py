"""Adaptive linear-programming decoders for high-density parity-check codes."""

from .channel import ChannelConfig, CostVector, RngStream, cost_from_received, modulate, sigma_from_ebn0, transmit
from .codes import LinearCode, bch_parity_matrix, builtin_code, enumerate_codewords, is_codeword, load_code
from .decoders import (
    DecodeOutcome,
    DecoderConfig,
    adapt_matrix,
    decode,
    decode_alp,
    decode_alp_perm,
    decode_bb,
    decode_diversity,
    decode_ml_bruteforce,
    decode_nsa,
    decode_preset,
    decode_static_lp,
)
from .lp import LpConstraint, LpProblem, LpSolution, LpVariable, is_integral, solve

__version__ = "0.1.0"
