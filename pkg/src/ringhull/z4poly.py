"""Polynomials over the integers modulo 4.

A polynomial is stored as a tuple of residues in ascending degree, so that
``coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial is the
empty tuple.  The compact string form used in the tables lists the same
coefficients as digits, lowest degree first: ``x^4+3x^3+2x^2+x+1`` is
``"11231"``.

Binary reductions are returned as Python ints, bit ``i`` holding the
coefficient of ``x**i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, InexactDivision, InvalidDigit, NonUnitConstantTerm, NotMonic

_INV = {1: 1, 3: 3}


def _canon(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) % 4 for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Z4Poly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canon(self.coeffs))

    @classmethod
    def one(cls) -> Z4Poly:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Z4Poly:
        return cls((0,) * k + (c,))

    @classmethod
    def x_n_minus_1(cls, n: int) -> Z4Poly:
        return cls((3,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: Z4Poly) -> Z4Poly:
        return add(self, other)

    def __sub__(self, other: Z4Poly) -> Z4Poly:
        return add(self, other.scale(3))

    def __neg__(self) -> Z4Poly:
        return self.scale(3)

    def __mul__(self, other: Z4Poly | int) -> Z4Poly:
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: int) -> Z4Poly:
        return Z4Poly(c * a for a in self.coeffs)

    def mod_xn_minus_1(self, n: int) -> tuple[int, ...]:
        """Length-``n`` coefficient vector of this polynomial in Z4[x]/(x^n - 1)."""
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            out[i % n] = (out[i % n] + a) % 4
        return tuple(out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Z4Poly({format_poly(self)!r})"


def parse_poly(text: str) -> Z4Poly:
    """Parse a compact ascending-degree digit string such as ``"11231"``."""
    if not text:
        raise EmptyInput("empty polynomial string")
    for ch in text:
        if ch not in "0123":
            raise InvalidDigit(f"invalid digit {ch!r} in {text!r}")
    return Z4Poly(int(ch) for ch in text)


def format_poly(p: Z4Poly) -> str:
    if p.is_zero():
        return "0"
    return "".join(str(a) for a in p.coeffs)


def add(a: Z4Poly, b: Z4Poly) -> Z4Poly:
    m = max(len(a.coeffs), len(b.coeffs))
    return Z4Poly(a[i] + b[i] for i in range(m))


def mul(a: Z4Poly, b: Z4Poly) -> Z4Poly:
    if a.is_zero() or b.is_zero():
        return Z4Poly()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return Z4Poly(out)


def product(polys: Iterable[Z4Poly]) -> Z4Poly:
    out = Z4Poly.one()
    for p in polys:
        out = mul(out, p)
    return out


def divmod_monic(a: Z4Poly, b: Z4Poly) -> tuple[Z4Poly, Z4Poly]:
    """Long division by a monic divisor; returns ``(quotient, remainder)``."""
    if not b.is_monic():
        raise NotMonic(f"divisor {format_poly(b)} is not monic")
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return Z4Poly(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % 4
        if c:
            q[k - db] = c
            for i, y in enumerate(b.coeffs):
                r[k - db + i] -= c * y
    return Z4Poly(q), Z4Poly(r[:db])


def divexact(a: Z4Poly, b: Z4Poly) -> Z4Poly:
    q, r = divmod_monic(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{format_poly(b)} does not divide {format_poly(a)}")
    return q


def reciprocal(h: Z4Poly) -> Z4Poly:
    """Monic-normalised reversal ``a0^{-1} x^deg h(1/x)``."""
    a0 = h[0]
    if a0 not in _INV:
        raise NonUnitConstantTerm(f"constant term of {format_poly(h)} is not a unit")
    return Z4Poly(_INV[a0] * c for c in reversed(h.coeffs))


def mod2_reduce(p: Z4Poly) -> int:
    bits = 0
    for i, a in enumerate(p.coeffs):
        if a & 1:
            bits |= 1 << i
    return bits


def from_binary(bits: int) -> Z4Poly:
    """Lift a binary polynomial to Z4[x] with coefficients in {0, 1}."""
    return Z4Poly(int(b) for b in reversed(bin(bits)[2:])) if bits else Z4Poly()


def from_vector(v: Sequence[int]) -> Z4Poly:
    return Z4Poly(v)
