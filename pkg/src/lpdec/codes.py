"""Binary linear codes: construction, codeword enumeration and matrix I/O."""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import gf2
from .errors import DimensionTooLarge, InvalidParameters, LengthMismatch, UnknownCode
from .gf2m import field as gf_field, poly_divmod, poly_mul, poly_degree

MAX_ENUMERATION_DIM = 24


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An (n, k) binary linear code given by a parity-check matrix ``H``."""

    H: np.ndarray
    name: str = "code"
    n: int = dc_field(init=False)
    k: int = dc_field(init=False)

    def __post_init__(self):
        H = gf2.as_bitmatrix(self.H)
        H.setflags(write=False)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "n", H.shape[1])
        r = gf2.rank(H) if H.shape[0] else 0
        object.__setattr__(self, "k", H.shape[1] - r)

    @property
    def m(self) -> int:
        return self.H.shape[0]

    @property
    def rate(self) -> float:
        return self.k / self.n

    @cached_property
    def generator(self) -> np.ndarray:
        """k x n generator matrix (rows span the null space of H)."""
        if self.H.shape[0] == 0:
            return np.eye(self.n, dtype=np.uint8)
        return gf2.null_space(self.H)

    @cached_property
    def codewords(self) -> np.ndarray:
        """All 2^k codewords, cached; see :func:`enumerate_codewords`."""
        words = enumerate_codewords(self)
        words.setflags(write=False)
        return words

    def encode(self, info_bits) -> np.ndarray:
        u = np.asarray(info_bits, dtype=np.int64).reshape(-1)
        if u.size != self.k:
            raise LengthMismatch(f"expected {self.k} information bits, got {u.size}")
        return gf2.matmul(u, self.generator)

    def with_matrix(self, H, name: str | None = None) -> "LinearCode":
        return LinearCode(H, name=self.name if name is None else name)

    def __repr__(self):
        return f"LinearCode(name={self.name!r}, n={self.n}, k={self.k}, m={self.m})"


def enumerate_codewords(code: LinearCode) -> np.ndarray:
    """All codewords as a ``(2**k, n)`` uint8 array.

    Word ``t`` is the combination of generator rows selected by the binary
    digits of ``t``, most significant digit on generator row 0.
    """
    k = code.k
    if k > MAX_ENUMERATION_DIM:
        raise DimensionTooLarge(f"k = {k} exceeds enumeration limit {MAX_ENUMERATION_DIM}")
    G = code.generator.astype(np.uint8)
    t = np.arange(1 << k, dtype=np.int64)
    words = np.zeros((1 << k, code.n), dtype=np.uint8)
    for row in range(k):
        bit = ((t >> (k - 1 - row)) & 1).astype(bool)
        words[bit] ^= G[row]
    return words


def is_codeword(code: LinearCode, x) -> bool:
    x = np.asarray(x).reshape(-1)
    if x.size != code.n:
        raise LengthMismatch(f"word length {x.size} != n = {code.n}")
    if code.m == 0:
        return True
    return not gf2.syndrome(code.H, x.astype(np.int64)).any()


def cyclic_parity_matrix(n: int, generator_poly: int) -> np.ndarray:
    """(n-k) x n parity-check matrix of the cyclic code generated by ``g(x)``.

    With h(x) = (x^n - 1) / g(x) of degree k, row i holds the coefficients of
    x^i * h*(x), where h*(x) = x^k h(1/x) is the reciprocal parity polynomial.
    Coefficient of x^j sits in column j.
    """
    h, rem = poly_divmod((1 << n) | 1, generator_poly)
    if rem:
        raise InvalidParameters("generator polynomial does not divide x^n - 1")
    k = poly_degree(h)
    recip = [(h >> (k - j)) & 1 for j in range(k + 1)]
    H = np.zeros((n - k, n), dtype=np.uint8)
    for i in range(n - k):
        H[i, i : i + k + 1] = recip
    return H


def bch_generator_poly(m: int, design_distance: int) -> int:
    """LCM of the minimal polynomials of alpha, ..., alpha^(design_distance-1)."""
    gf = gf_field(m)
    n = gf.order
    g = 1
    seen: set[int] = set()
    for s in range(1, design_distance):
        if s % n in seen:
            continue
        coset = gf.cyclotomic_coset(s)
        seen.update(coset)
        g = poly_mul(g, gf.minimal_polynomial(s))
    return g


def bch_parity_matrix(m: int, n: int | None = None, design_distance: int = 3) -> LinearCode:
    """Narrow-sense primitive binary BCH code of length 2^m - 1."""
    if not 2 <= m <= 8:
        raise InvalidParameters(f"m must be in [2, 8], got {m}")
    full = (1 << m) - 1
    if n is None:
        n = full
    if n != full:
        raise InvalidParameters(f"only primitive length n = {full} is supported, got {n}")
    if design_distance < 3 or design_distance % 2 == 0:
        raise InvalidParameters("design distance must be odd and >= 3")
    if design_distance > n:
        raise InvalidParameters("design distance exceeds code length")
    g = bch_generator_poly(m, design_distance)
    H = cyclic_parity_matrix(n, g)
    k = n - poly_degree(g)
    return LinearCode(H, name=f"bch_{n}_{k}")


EXTENDED_HAMMING_8_4 = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 1, 1, 1, 1],
    ],
    dtype=np.uint8,
)

_BUILTIN_BCH = {
    "hamming_7_4": (3, 3),
    "bch_15_7": (4, 5),
    "bch_15_11": (4, 3),
    "bch_31_21": (5, 5),
    "bch_63_39": (6, 9),
    "bch_63_36": (6, 11),
}

BUILTIN_CODES = ("hamming_7_4", "hamming_8_4_paper", "bch_15_7", "bch_15_11", "bch_31_21", "bch_63_39", "bch_63_36")


def builtin_code(name: str) -> LinearCode:
    """Named codes.  ``hamming_7_4`` is the cyclic Hamming code (BCH with m=3)."""
    if name == "hamming_8_4_paper":
        return LinearCode(EXTENDED_HAMMING_8_4.copy(), name=name)
    if name not in _BUILTIN_BCH:
        raise UnknownCode(name)
    m, delta = _BUILTIN_BCH[name]
    code = bch_parity_matrix(m, design_distance=delta)
    return LinearCode(code.H, name=name)


def load_code(spec: str) -> LinearCode:
    """Resolve a builtin name or a matrix file (``.alist`` or plain text)."""
    if spec in BUILTIN_CODES:
        return builtin_code(spec)
    if os.path.exists(spec):
        base = os.path.splitext(os.path.basename(spec))[0]
        if spec.endswith(".alist"):
            return LinearCode(read_alist(spec), name=base)
        return LinearCode(load_matrix(spec), name=base)
    raise UnknownCode(spec)


# --- plain text format: "m n" header, then m rows of space separated bits ---


def format_matrix(H) -> str:
    H = gf2.as_bitmatrix(H)
    lines = [f"{H.shape[0]} {H.shape[1]}"]
    lines += [" ".join(str(int(b)) for b in row) for row in H]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        m, n = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != m or any(len(r) != n for r in rows):
        raise ValueError(f"expected {m} rows of {n} entries")
    return gf2.as_bitmatrix(np.array(rows, dtype=np.uint8).reshape(m, n))


def save_matrix(H, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(H))


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        return parse_matrix(fh.read())


# --- alist format (MacKay) ---


def parse_alist(text: str) -> np.ndarray:
    nums = [int(t) for t in text.split()]
    pos = 0

    def take(count):
        nonlocal pos
        out = nums[pos : pos + count]
        if len(out) != count:
            raise ValueError("truncated alist data")
        pos += count
        return out

    n, m = take(2)
    max_col, max_row = take(2)
    col_deg = take(n)
    row_deg = take(m)
    H = np.zeros((m, n), dtype=np.uint8)
    for j in range(n):
        entries = take(max_col)
        for r in entries[: col_deg[j]]:
            H[r - 1, j] = 1
    # row lists are redundant; read them if present and check consistency
    if pos + m * max_row <= len(nums):
        for i in range(m):
            entries = take(max_row)
            for c in entries[: row_deg[i]]:
                if H[i, c - 1] != 1:
                    raise ValueError("alist row and column lists disagree")
    return H


def format_alist(H) -> str:
    H = gf2.as_bitmatrix(H)
    m, n = H.shape
    cols = [list(np.flatnonzero(H[:, j]) + 1) for j in range(n)]
    rows = [list(np.flatnonzero(H[i]) + 1) for i in range(m)]
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)
    out = [f"{n} {m}", f"{max_col} {max_row}"]
    out.append(" ".join(str(len(c)) for c in cols))
    out.append(" ".join(str(len(r)) for r in rows))
    for c in cols:
        out.append(" ".join(str(v) for v in c + [0] * (max_col - len(c))))
    for r in rows:
        out.append(" ".join(str(v) for v in r + [0] * (max_row - len(r))))
    return "\n".join(out) + "\n"


def read_alist(path) -> np.ndarray:
    with open(path) as fh:
        return parse_alist(fh.read())


def write_alist(H, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_alist(H))
