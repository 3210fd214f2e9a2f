"""Coordinate permutations and automorphism samplers.

A permutation is stored as ``mapping`` with ``mapping[i] = pi(i)``.  Acting
on a vector it pushes entries forward: ``result[pi(i)] = v[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import LinearCode, is_codeword
from .errors import InvalidParameters, LengthMismatch

MAX_RESAMPLES = 1000


@dataclass(frozen=True, eq=False)
class Permutation:
    mapping: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mapping, dtype=np.int64).reshape(-1)
        if not np.array_equal(np.sort(m), np.arange(m.size)):
            raise ValueError("mapping is not a bijection on 0..n-1")
        m.setflags(write=False)
        object.__setattr__(self, "mapping", m)

    @property
    def n(self) -> int:
        return self.mapping.size

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(n))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read the literal form: whitespace separated images, e.g. ``"1 2 3 0"``."""
        return cls(np.array([int(t) for t in text.split()], dtype=np.int64))

    def format(self) -> str:
        return " ".join(str(int(v)) for v in self.mapping)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.mapping, np.arange(self.n)))

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.mapping)
        inv[self.mapping] = np.arange(self.n)
        return Permutation(inv)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        if other.n != self.n:
            raise LengthMismatch("permutations of different lengths")
        return Permutation(self.mapping[other.mapping])

    def __matmul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self.mapping, other.mapping)

    def __hash__(self):
        return hash(self.mapping.tobytes())

    def __repr__(self):
        return f"Permutation({self.format()!r})"


def apply_to_vector(pi: Permutation, v) -> np.ndarray:
    v = np.asarray(v)
    if v.shape[-1] != pi.n:
        raise LengthMismatch(f"vector length {v.shape[-1]} != permutation length {pi.n}")
    out = np.empty_like(v)
    out[..., pi.mapping] = v
    return out


def apply_to_columns(pi: Permutation, H) -> np.ndarray:
    """Column ``i`` of ``H`` becomes column ``pi(i)`` of the result."""
    H = np.asarray(H)
    if H.shape[1] != pi.n:
        raise LengthMismatch(f"matrix has {H.shape[1]} columns, permutation length {pi.n}")
    out = np.empty_like(H)
    out[:, pi.mapping] = H
    return out


def cyclic_shift(n: int, step: int = 1) -> Permutation:
    return Permutation((np.arange(n) + step) % n)


def frobenius(n: int) -> Permutation:
    """i -> 2i mod n; an automorphism of every binary cyclic code of odd length."""
    if n % 2 == 0:
        raise InvalidParameters("doubling is a permutation only for odd n")
    return Permutation((2 * np.arange(n)) % n)


def affine_map(matrix, shift: int, m: int) -> Permutation:
    """x -> A x + b on GF(2)^m, coordinates indexed by the integer with bit j = x_j."""
    A = np.asarray(matrix, dtype=np.int64)
    n = 1 << m
    images = []
    for i in range(n):
        bits = np.array([(i >> j) & 1 for j in range(m)])
        y = (A @ bits) % 2
        images.append(int(sum(int(b) << j for j, b in enumerate(y))) ^ shift)
    return Permutation(np.array(images))


def extended_hamming_generators() -> dict[str, Permutation]:
    """Generators of the affine group AGL(3, 2) acting on the 8 positions.

    Position ``i`` of the built-in [8,4,4] matrix has column (1, bit0, bit1,
    bit2) of ``i``, so each affine map of the bit vector preserves the code.
    """
    eye = np.eye(3, dtype=np.int64)
    rotate = np.roll(eye, 1, axis=0)  # bit j -> bit j+1
    swap = eye[[1, 0, 2]]
    transvection = eye.copy()
    transvection[0, 1] = 1  # bit0 += bit1
    return {
        "translate": affine_map(eye, 1, 3),
        "rotate": affine_map(rotate, 0, 3),
        "swap": affine_map(swap, 0, 3),
        "transvection": affine_map(transvection, 0, 3),
    }


def cyclic_generators(n: int) -> dict[str, Permutation]:
    return {"shift": cyclic_shift(n), "doubling": frobenius(n)}


class AutomorphismSampler:
    """Random words over a generator set, composed left to right."""

    def __init__(self, n: int, generators: dict[str, Permutation], max_word_length: int = 8):
        if not generators:
            raise InvalidParameters("generator set is empty")
        if max_word_length < 1:
            raise InvalidParameters("max_word_length must be >= 1")
        for name, g in generators.items():
            if g.n != n:
                raise LengthMismatch(f"generator {name} has length {g.n}, expected {n}")
        self.n = n
        self.generators = dict(generators)
        self.max_word_length = max_word_length
        self._gens = list(self.generators.values())

    def _word(self, rng: np.random.Generator) -> Permutation:
        length = int(rng.integers(1, self.max_word_length + 1))
        picks = rng.integers(0, len(self._gens), size=length)
        result = Permutation.identity(self.n)
        for p in picks:
            # left to right: earlier letters act first
            result = self._gens[int(p)].compose(result)
        return result

    def sample(self, rng: np.random.Generator) -> Permutation:
        """Random non-identity word; identities are redrawn."""
        for _ in range(MAX_RESAMPLES):
            pi = self._word(rng)
            if not pi.is_identity():
                return pi
        raise InvalidParameters("generator set only produces the identity")

    @classmethod
    def for_code(cls, code: LinearCode, max_word_length: int = 8, validate: bool = True) -> "AutomorphismSampler":
        """Generator set chosen by code family, checked against the code."""
        gens = default_generators(code)
        if validate:
            for name, g in gens.items():
                if not verify_automorphism(code, g):
                    raise InvalidParameters(f"generator {name} is not an automorphism of {code.name}")
        return cls(code.n, gens, max_word_length)


def default_generators(code: LinearCode) -> dict[str, Permutation]:
    n = code.n
    if n == 8 and _is_rm13(code):
        return extended_hamming_generators()
    if n % 2 == 1 and verify_automorphism(code, cyclic_shift(n)):
        return cyclic_generators(n)
    if verify_automorphism(code, cyclic_shift(n)):
        return {"shift": cyclic_shift(n)}
    raise InvalidParameters(f"no known automorphism generators for {code.name}")


def _is_rm13(code: LinearCode) -> bool:
    return code.k == 4 and all(verify_automorphism(code, g) for g in extended_hamming_generators().values())


def sample(sampler: AutomorphismSampler, rng: np.random.Generator) -> Permutation:
    return sampler.sample(rng)


def verify_automorphism(code: LinearCode, pi: Permutation, trials: int = 64, rng: np.random.Generator | None = None) -> bool:
    """Whether ``pi`` maps codewords into the code.

    Exhaustive over all codewords when k <= 16, else over ``trials`` random
    codewords plus the generator rows.
    """
    if pi.n != code.n:
        return False
    if code.m == 0:
        return True
    if code.k <= 16:
        words = code.codewords
    else:
        rng = np.random.default_rng(0) if rng is None else rng
        info = rng.integers(0, 2, size=(trials, code.k))
        words = np.vstack([code.generator, (info @ code.generator) % 2]).astype(np.uint8)
    images = apply_to_vector(pi, words)
    return not ((images.astype(np.int64) @ code.H.T.astype(np.int64)) % 2).any()


def compose_all(perms: Sequence[Permutation], n: int) -> Permutation:
    """pi_1 o pi_2 o ... o pi_k (rightmost applied first)."""
    out = Permutation.identity(n)
    for p in perms:
        out = out.compose(p)
    return out
