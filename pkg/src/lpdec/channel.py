"""BPSK over AWGN: modulation, noise, cost vectors and reproducible streams.

Bits map to symbols as 0 -> -1 and 1 -> +1, so the cost vector of a
received word is simply its negation.  The true LLR differs from that cost
by the positive factor 2 / sigma^2, which leaves every decoder's argmin
unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRate


def sigma_from_ebn0(ebn0_db: float, rate: float) -> float:
    if not 0.0 < rate <= 1.0:
        raise InvalidRate(f"rate must lie in (0, 1], got {rate}")
    return math.sqrt(1.0 / (2.0 * rate * 10.0 ** (ebn0_db / 10.0)))


@dataclass(frozen=True)
class ChannelConfig:
    ebn0_db: float
    rate: float

    def __post_init__(self):
        if not 0.0 < self.rate <= 1.0:
            raise InvalidRate(f"rate must lie in (0, 1], got {self.rate}")

    @property
    def sigma(self) -> float:
        return sigma_from_ebn0(self.ebn0_db, self.rate)


@dataclass(frozen=True)
class RngStream:
    """Counter-style random stream: a pure function of ``(seed, stream_index)``.

    ``substream`` separates independent uses within one frame (noise versus
    decoder-internal sampling) without touching the frame's noise draws.
    """

    seed: int
    stream_index: int = 0

    def generator(self, substream: int = 0) -> np.random.Generator:
        ss = np.random.SeedSequence([self.seed & 0xFFFFFFFFFFFFFFFF, self.stream_index, substream])
        return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class CostVector:
    c: np.ndarray
    source_received: np.ndarray


def modulate(bits) -> np.ndarray:
    b = np.asarray(bits, dtype=np.float64).reshape(-1)
    return 2.0 * b - 1.0


def transmit(symbols, cfg: ChannelConfig | float, rng) -> np.ndarray:
    """Add white Gaussian noise.  ``cfg`` may be a config or a bare sigma.

    ``rng`` is an :class:`RngStream` (noise drawn from its substream 0) or
    a numpy ``Generator``.
    """
    s = np.asarray(symbols, dtype=np.float64).reshape(-1)
    sigma = cfg.sigma if isinstance(cfg, ChannelConfig) else float(cfg)
    if sigma < 0:
        raise ValueError("noise deviation must be non-negative")
    gen = rng.generator(0) if isinstance(rng, RngStream) else rng
    return s + sigma * gen.standard_normal(s.size)


def cost_from_received(received) -> CostVector:
    r = np.asarray(received, dtype=np.float64).reshape(-1)
    return CostVector(c=-r, source_received=r.copy())


def hard_decision(received) -> np.ndarray:
    return (np.asarray(received) > 0).astype(np.uint8)
