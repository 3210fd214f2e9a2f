"""Named decoder compositions and a single dispatch entry point."""

from __future__ import annotations

import numpy as np

from ..codes import LinearCode
from ..errors import ConfigError, UnknownPreset
from .adaptive import as_cost, decode_alp, decode_ml_bruteforce, decode_nsa, decode_static_lp
from .multi import adapted_matrix, decode_alp_perm, decode_bb, decode_diversity
from .outcome import DecodeOutcome, DecoderConfig, DecodeTrace

# branch-and-bound depth used by preset B per code; other codes use the fallback
BB_DEPTH = {"bch_63_39": 4, "bch_63_36": 6}
BB_DEPTH_FALLBACK = 4
DIVERSITY_ORDER = 5


def preset_config(name: str, code: LinearCode | None = None, **overrides) -> DecoderConfig:
    """A: diversity N=5 + adaptation + pruning.  B: branch and bound +
    adaptation.  C: NSA + adaptation + pruning."""
    if name == "A":
        base = dict(variant="diversity", N=DIVERSITY_ORDER, adapt_matrix=True, prune_inactive=True)
    elif name == "B":
        depth = BB_DEPTH.get(code.name, BB_DEPTH_FALLBACK) if code is not None else BB_DEPTH_FALLBACK
        base = dict(variant="bb", depth=depth, adapt_matrix=True, prune_inactive=False)
    elif name == "C":
        base = dict(variant="nsa", adapt_matrix=True, prune_inactive=True)
    else:
        raise UnknownPreset(name)
    base["label"] = name
    base.update({k: v for k, v in overrides.items() if v is not None})
    return DecoderConfig(**base)


def decode(
    config: DecoderConfig,
    code: LinearCode,
    c,
    r=None,
    rng: np.random.Generator | None = None,
    trace: DecodeTrace | None = None,
) -> DecodeOutcome:
    """Run the decoder described by ``config``.

    ``r`` (received word) is needed only by ``diversity``; it defaults to
    ``-c``.  ``rng`` drives automorphism sampling.
    """
    cost = as_cost(c)
    received = -cost if r is None else np.asarray(r, dtype=np.float64)
    rng = np.random.default_rng(0) if rng is None else rng
    H = adapted_matrix(code.H, cost) if config.adapt_matrix else code.H
    v = config.variant
    kw = dict(max_iterations=config.max_iterations, trace=trace)
    if v == "ml":
        return decode_ml_bruteforce(code, cost)
    if v == "static_lp":
        return decode_static_lp(H, cost)
    if v == "alp":
        return decode_alp(H, cost, prune_inactive=config.prune_inactive, **kw)
    if v == "nsa":
        return decode_nsa(H, cost, prune_inactive=config.prune_inactive, **kw)
    if v == "diversity":
        return decode_diversity(
            code, cost, received, config.N, rng, H=H, prune_inactive=config.prune_inactive,
            distance_space=config.distance_space, **kw,
        )
    if v == "alp_perm":
        return decode_alp_perm(code, cost, config.N, rng, H=H, prune_inactive=config.prune_inactive, **kw)
    if v == "bb":
        depth = BB_DEPTH.get(code.name, BB_DEPTH_FALLBACK) if config.depth is None else config.depth
        return decode_bb(code, cost, depth, H=H, prune_inactive=config.prune_inactive, **kw)
    raise ConfigError(f"unknown variant {v!r}")


def decode_preset(
    name: str,
    code: LinearCode,
    c,
    r=None,
    rng: np.random.Generator | None = None,
    **overrides,
) -> DecodeOutcome:
    """Decoder A, B or C; ``overrides`` replace any config field (e.g. ``N=1``)."""
    return decode(preset_config(name, code, **overrides), code, c, r, rng)
