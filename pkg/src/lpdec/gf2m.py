"""Arithmetic in GF(2^m) and binary polynomials packed into Python ints.

Polynomials over GF(2) are ints whose bit ``i`` is the coefficient of x^i.
Field elements use the polynomial basis modulo a fixed primitive polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameters

# One primitive polynomial per degree, fixed so BCH matrices are reproducible.
PRIMITIVE_POLYS = {
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0x13,  # x^4 + x + 1
    5: 0x25,  # x^5 + x^2 + 1
    6: 0x43,  # x^6 + x + 1
    7: 0x89,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        shift = poly_degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def is_irreducible(p: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(p)//2."""
    d = poly_degree(p)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(p, q) == 0:
            return False
    return True


def poly_to_bits(p: int, length: int | None = None) -> list[int]:
    """Coefficient list, lowest degree first."""
    if length is None:
        length = max(poly_degree(p) + 1, 1)
    return [(p >> i) & 1 for i in range(length)]


class GF2m:
    """The field GF(2^m) with exp/log tables over a primitive polynomial."""

    def __init__(self, m: int, primitive_poly: int | None = None):
        if not 2 <= m <= 16:
            raise InvalidParameters(f"extension degree must be in [2, 16], got {m}")
        poly = PRIMITIVE_POLYS[m] if primitive_poly is None else primitive_poly
        if poly_degree(poly) != m:
            raise InvalidParameters(f"polynomial {poly:#x} does not have degree {m}")
        if not is_irreducible(poly):
            raise InvalidParameters(f"polynomial {poly:#x} is reducible over GF(2)")
        self.m = m
        self.poly = poly
        self.order = (1 << m) - 1
        exp = [0] * (2 * self.order)
        log = [-1] * (1 << m)
        v = 1
        for i in range(self.order):
            if log[v] != -1:
                raise InvalidParameters(f"polynomial {poly:#x} is not primitive")
            exp[i] = v
            log[v] = i
            v <<= 1
            if v >> m:
                v ^= poly
        for i in range(self.order, 2 * self.order):
            exp[i] = exp[i - self.order]
        self._exp = exp
        self._log = log

    def alpha_pow(self, e: int) -> int:
        return self._exp[e % self.order]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^m)")
        return self._exp[(self.order - self._log[a]) % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def element(self, value: int) -> "FieldElement2m":
        return FieldElement2m(self, value)

    def cyclotomic_coset(self, s: int, n: int | None = None) -> list[int]:
        n = self.order if n is None else n
        coset = []
        e = s % n
        while e not in coset:
            coset.append(e)
            e = (2 * e) % n
        return coset

    def minimal_polynomial(self, s: int) -> int:
        """Minimal polynomial of alpha^s over GF(2), as a packed int."""
        # product of (x + alpha^e) over the coset; coefficients are field elements
        coeffs = [1]
        for e in self.cyclotomic_coset(s):
            root = self.alpha_pow(e)
            nxt = [0] * (len(coeffs) + 1)
            for i, a in enumerate(coeffs):
                nxt[i + 1] ^= a
                nxt[i] ^= self.mul(a, root)
            coeffs = nxt
        if any(c not in (0, 1) for c in coeffs):
            raise ArithmeticError("minimal polynomial has non-binary coefficients")
        return sum(c << i for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class FieldElement2m:
    field: GF2m
    value: int

    def __post_init__(self):
        if not 0 <= self.value <= self.field.order:
            raise InvalidParameters(f"value {self.value} outside GF(2^{self.field.m})")

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def primitive_poly(self) -> int:
        return self.field.poly

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement2m):
            if other.field is not self.field and other.field.poly != self.field.poly:
                raise InvalidParameters("elements from different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement2m(self.field, self.value ^ self._coerce(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other):
        return FieldElement2m(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement2m(self.field, self.field.mul(self.value, self.field.inv(self._coerce(other))))

    def __pow__(self, e: int):
        if self.value == 0:
            return FieldElement2m(self.field, 0 if e else 1)
        return FieldElement2m(self.field, self.field.alpha_pow(self.field.log(self.value) * e))

    def __eq__(self, other):
        if isinstance(other, FieldElement2m):
            return self.field.poly == other.field.poly and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.poly, self.value))


@lru_cache(maxsize=None)
def field(m: int) -> GF2m:
    """Shared field instance for the default primitive polynomial."""
    return GF2m(m)
