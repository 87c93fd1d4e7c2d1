"""Factorization of x^n - 1 over Z4 for odd n.

The binary factors are minimal polynomials of the powers of a primitive
n-th root of unity in GF(2^m), m = ord_n(2), one per 2-cyclotomic coset.
Each binary factor is then lifted to the unique monic basic irreducible
factor over Z4 whose roots are again n-th roots of unity (Graeffe
root-squaring).  Divisors of x^n - 1 are represented as bit masks over
the factor list, so gcd and lcm of divisors are set operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import EvenLength, EvenModulus, NotADivisor, NotCoprime, TableMismatch
from .z4poly import (
    Z4Poly,
    divmod_monic,
    format_poly,
    from_binary,
    mod2_reduce,
    mul,
    parse_poly,
    product,
    reciprocal,
)

# ---------------------------------------------------------------------------
# elementary number theory


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(j: int) -> int:
    if j < 1:
        raise ValueError("euler_phi needs j >= 1")
    out = j
    for p in prime_factors(j):
        out = out // p * (p - 1)
    return out


def mult_order(base: int, j: int) -> int:
    """Least e >= 1 with base**e == 1 (mod j); 1 for j == 1."""
    if j < 1:
        raise ValueError("modulus must be positive")
    if math.gcd(base, j) != 1:
        raise NotCoprime(f"gcd({base}, {j}) != 1")
    if j == 1:
        return 1
    e, x = 1, base % j
    while x != 1:
        x = x * base % j
        e += 1
    return e


def in_N2(l: int) -> bool:
    """True iff l divides 2**i + 1 for some i >= 1."""
    if l % 2 == 0:
        raise EvenModulus(f"{l} is even")
    if l == 1:
        return True
    x = 1
    for _ in range(mult_order(2, l)):
        x = 2 * x % l
        if x == l - 1:
            return True
    return False


def _check_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise EvenLength(n)


def compute_B(n: int) -> int:
    """Sum of phi(j) over the divisors j of n lying in N2."""
    _check_odd(n)
    return sum(euler_phi(j) for j in divisors(n) if in_N2(j))


def cyclotomic_cosets(n: int) -> list[tuple[int, ...]]:
    """2-cyclotomic cosets modulo n, each ordered from its least element."""
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        coset, t = [], s
        while t not in coset:
            coset.append(t)
            t = 2 * t % n
        seen.update(coset)
        out.append(tuple(coset))
    return out


# ---------------------------------------------------------------------------
# binary polynomials as ints, and GF(2^m) = GF(2)[x]/(modulus)


def _deg(a: int) -> int:
    return a.bit_length() - 1


def gf2_mul(a: int, b: int) -> int:
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def gf2_mod(a: int, m: int) -> int:
    dm = _deg(m)
    while a and _deg(a) >= dm:
        a ^= m << (_deg(a) - dm)
    return a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_mulmod(a: int, b: int, m: int) -> int:
    return gf2_mod(gf2_mul(a, b), m)


def gf2_powmod(a: int, e: int, m: int) -> int:
    r = 1
    a = gf2_mod(a, m)
    while e:
        if e & 1:
            r = gf2_mulmod(r, a, m)
        a = gf2_mulmod(a, a, m)
        e >>= 1
    return r


def gf2_is_irreducible(f: int) -> bool:
    """Rabin's test."""
    d = _deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    x = 2
    # x^(2^d) == x mod f
    t = x
    for _ in range(d):
        t = gf2_mulmod(t, t, f)
    if t != x:
        return False
    for p in prime_factors(d):
        t = x
        for _ in range(d // p):
            t = gf2_mulmod(t, t, f)
        if gf2_gcd(f, t ^ x) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def gf2_irreducible(m: int) -> int:
    """Smallest irreducible binary polynomial of degree m (as an int)."""
    for f in range((1 << m) | 1, 1 << (m + 1), 2):
        if gf2_is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _root_of_unity(n: int, modulus: int) -> int:
    m = _deg(modulus)
    q1 = (1 << m) - 1
    primes = prime_factors(n)
    for g in range(1, 1 << m):
        beta = gf2_powmod(g, q1 // n, modulus)
        if n == 1 or all(gf2_powmod(beta, n // p, modulus) != 1 for p in primes):
            return beta
    raise AssertionError("no element of order n found")


def _minimal_poly(roots: list[int], modulus: int) -> int:
    # coefficients of prod (X - r) in GF(2^m)[X], ascending
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] ^= c
            nxt[i] ^= gf2_mulmod(c, r, modulus)
        coeffs = nxt
    bits = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise AssertionError("minimal polynomial is not binary")
        bits |= c << i
    return bits


def binary_factors(n: int) -> list[tuple[int, int]]:
    """Binary irreducible factors of x^n - 1 as ``(bits, j)`` pairs.

    ``j`` is the multiplicative order of the factor's roots, i.e.
    n / gcd(s, n) for the coset leader s.
    """
    _check_odd(n)
    m = mult_order(2, n)
    modulus = gf2_irreducible(m)
    beta = _root_of_unity(n, modulus)
    out = []
    for coset in cyclotomic_cosets(n):
        roots = [gf2_powmod(beta, s, modulus) for s in coset]
        out.append((_minimal_poly(roots, modulus), n // math.gcd(coset[0], n)))
    return out


def graeffe_lift(f2: int) -> Z4Poly:
    """Lift a binary factor of x^n - 1 (n odd) to its basic irreducible factor over Z4.

    With f = e(x^2) + x o(x^2) the lift is (-1)^d (e(x)^2 - x o(x)^2) mod 4,
    whose roots are the squares of the Teichmuller lifts of the roots of f.
    """
    d = _deg(f2)
    coeffs = [(f2 >> i) & 1 for i in range(d + 1)]
    e = Z4Poly(coeffs[0::2])
    o = Z4Poly(coeffs[1::2])
    g = mul(e, e) - mul(Z4Poly.monomial(1), mul(o, o))
    return g if d % 2 == 0 else -g


# ---------------------------------------------------------------------------
# factor table


@dataclass(frozen=True)
class Factor:
    poly: Z4Poly
    j: int
    partner: int | None  # index of the reciprocal partner, None when self-reciprocal

    @property
    def self_reciprocal(self) -> bool:
        return self.partner is None

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return format_poly(self.poly)


@dataclass(frozen=True)
class DivisorStats:
    j: int
    ord: int
    phi: int
    in_N2: bool
    gamma: int | None
    beta: int | None


@dataclass(frozen=True, eq=False)
class FactorTable:
    n: int
    factors: tuple[Factor, ...]
    divisor_stats: tuple[DivisorStats, ...]
    B_n: int

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def full(self) -> DivisorMask:
        return DivisorMask(self, (1 << len(self.factors)) - 1)

    @property
    def empty(self) -> DivisorMask:
        return DivisorMask(self, 0)

    def mask(self, indices: Iterable[int]) -> DivisorMask:
        bits = 0
        for i in indices:
            bits |= 1 << i
        return DivisorMask(self, bits)

    def index_of(self, poly: Z4Poly | str) -> int:
        if isinstance(poly, str):
            poly = parse_poly(poly)
        for i, f in enumerate(self.factors):
            if f.poly == poly:
                return i
        raise NotADivisor(f"{format_poly(poly)} is not a factor of x^{self.n}-1")

    def mask_of(self, poly: Z4Poly | str) -> DivisorMask:
        """Decompose a monic divisor of x^n - 1 into its factor mask."""
        text = poly if isinstance(poly, str) else format_poly(poly)
        if isinstance(poly, str):
            poly = parse_poly(poly)
        if not poly.is_monic():
            raise NotADivisor(f"{text} is not a monic divisor of x^{self.n}-1")
        rest, bits = poly, 0
        for i, f in enumerate(self.factors):
            q, r = divmod_monic(rest, f.poly)
            if r.is_zero():
                rest, bits = q, bits | (1 << i)
        if rest != Z4Poly.one():
            raise NotADivisor(f"{text} is not a divisor of x^{self.n}-1")
        return DivisorMask(self, bits)

    def stats_for(self, j: int) -> DivisorStats:
        for s in self.divisor_stats:
            if s.j == j:
                return s
        raise KeyError(j)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "factors": [
                {
                    "poly": format_poly(f.poly),
                    "degree": f.degree,
                    "j": f.j,
                    "class": "self-reciprocal" if f.self_reciprocal else "pair",
                    "partner": None if f.self_reciprocal else format_poly(self.factors[f.partner].poly),
                }
                for f in self.factors
            ],
            "divisors": [
                {
                    "j": s.j,
                    "ord": s.ord,
                    "phi": s.phi,
                    "in_N2": s.in_N2,
                    "gamma": s.gamma,
                    "beta": s.beta,
                }
                for s in self.divisor_stats
            ],
            "B_n": self.B_n,
        }


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int) -> FactorTable:
    _check_odd(n)
    lifted = [(graeffe_lift(bits), j) for bits, j in binary_factors(n)]
    by_j: dict[int, list[Z4Poly]] = {}
    for poly, j in lifted:
        by_j.setdefault(j, []).append(poly)

    factors: list[Factor] = []
    for j in sorted(by_j):
        polys = {format_poly(p): p for p in by_j[j]}
        groups = []
        done = set()
        for s in sorted(polys):
            if s in done:
                continue
            star = format_poly(reciprocal(polys[s]))
            if star == s:
                groups.append((s,))
            else:
                groups.append((s, star))
            done.update(groups[-1])
        for g in groups:
            base = len(factors)
            if len(g) == 1:
                factors.append(Factor(polys[g[0]], j, None))
            else:
                factors.append(Factor(polys[g[0]], j, base + 1))
                factors.append(Factor(polys[g[1]], j, base))

    stats = []
    for j in divisors(n):
        o, ph, inn = mult_order(2, j), euler_phi(j), in_N2(j)
        stats.append(
            DivisorStats(
                j=j,
                ord=o,
                phi=ph,
                in_N2=inn,
                gamma=ph // o if inn else None,
                beta=None if inn else ph // (2 * o),
            )
        )
    B = sum(f.degree for f in factors if f.self_reciprocal)
    return FactorTable(n, tuple(factors), tuple(stats), B)


# ---------------------------------------------------------------------------
# divisor masks


@dataclass(frozen=True)
class DivisorMask:
    table: FactorTable = field(compare=False, repr=False)
    bits: int
    n: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "n", self.table.n)

    def indices(self) -> list[int]:
        return [i for i in range(len(self.table.factors)) if self.bits >> i & 1]

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    @property
    def poly(self) -> Z4Poly:
        return product(self.table.factors[i].poly for i in self.indices())

    @property
    def degree(self) -> int:
        return sum(self.table.factors[i].degree for i in self.indices())

    def __and__(self, other: DivisorMask) -> DivisorMask:
        return mask_gcd(self, other)

    def __or__(self, other: DivisorMask) -> DivisorMask:
        return mask_lcm(self, other)

    def __invert__(self) -> DivisorMask:
        return mask_complement(self)

    def __str__(self) -> str:
        return format_poly(self.poly)


def _same(a: DivisorMask, b: DivisorMask) -> None:
    if a.n != b.n:
        raise TableMismatch(f"masks for n={a.n} and n={b.n}")


def mask_gcd(a: DivisorMask, b: DivisorMask) -> DivisorMask:
    _same(a, b)
    return DivisorMask(a.table, a.bits & b.bits)


def mask_lcm(a: DivisorMask, b: DivisorMask) -> DivisorMask:
    _same(a, b)
    return DivisorMask(a.table, a.bits | b.bits)


def mask_complement(a: DivisorMask) -> DivisorMask:
    return DivisorMask(a.table, a.table.full.bits & ~a.bits)


def mask_reciprocal(a: DivisorMask) -> DivisorMask:
    bits = 0
    for i in a.indices():
        p = a.table.factors[i].partner
        bits |= 1 << (i if p is None else p)
    return DivisorMask(a.table, bits)


def is_binary_irreducible(p: Z4Poly) -> bool:
    return gf2_is_irreducible(mod2_reduce(p))


__all__ = [
    "DivisorMask",
    "DivisorStats",
    "Factor",
    "FactorTable",
    "binary_factors",
    "compute_B",
    "cyclotomic_cosets",
    "divisors",
    "euler_phi",
    "factor_xn_minus_1",
    "from_binary",
    "graeffe_lift",
    "in_N2",
    "mask_complement",
    "mask_gcd",
    "mask_lcm",
    "mask_reciprocal",
    "mult_order",
]
