"""Cyclic codes of odd length over Z4.

A code is stored as an ordered partition (f, g, h) of the factors of
x^n - 1 with ``C = <f g, 2 f>``, so ``|C| = 4^deg h * 2^deg g``.  Duals and
hulls are mask operations on the partition.  Codewords are materialised
as ``uint8`` numpy arrays of shape ``(count, n)``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .cyclotomic import (
    DivisorMask,
    FactorTable,
    mask_complement,
    mask_gcd,
    mask_lcm,
    mask_reciprocal,
)
from .errors import CodeTooLarge, IncompleteAssignment, TableMismatch
from .z4poly import Z4Poly, divmod_monic, mul

DEFAULT_MAX_CODEWORDS = 1 << 24


def max_codewords(override: int | None = None) -> int:
    """Enumeration cap: explicit value, else ``RINGHULL_MAX_CODEWORDS``, else 2**24."""
    if override is not None:
        return int(override)
    env = os.environ.get("RINGHULL_MAX_CODEWORDS")
    return int(env) if env else DEFAULT_MAX_CODEWORDS


@dataclass(frozen=True)
class CyclicCodeZ4:
    f: DivisorMask
    g: DivisorMask
    h: DivisorMask

    def __post_init__(self):
        if not (self.f.n == self.g.n == self.h.n):
            raise TableMismatch("masks from different tables")
        full = self.f.table.full.bits
        if self.f.bits & self.g.bits or self.f.bits & self.h.bits or self.g.bits & self.h.bits:
            raise IncompleteAssignment("f, g, h must be disjoint")
        if self.f.bits | self.g.bits | self.h.bits != full:
            raise IncompleteAssignment("f, g, h must cover every factor")

    @property
    def table(self) -> FactorTable:
        return self.f.table

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def type(self) -> tuple[int, int]:
        return code_type(self)

    @property
    def dim2(self) -> int:
        k4, k2 = code_type(self)
        return 2 * k4 + k2

    @property
    def size(self) -> int:
        return 1 << self.dim2

    def generators(self) -> tuple[Z4Poly, Z4Poly]:
        """The pair ``(f g, 2 f)``."""
        f = self.f.poly
        return mul(f, self.g.poly), f.scale(2)

    def roles(self) -> str:
        out = []
        for i in range(self.table.m):
            out.append("F" if i in self.f else "G" if i in self.g else "H")
        return "".join(out)

    def __repr__(self) -> str:
        return f"CyclicCodeZ4(n={self.n}, roles={self.roles()!r})"


def make_code(table: FactorTable, assignment: Mapping[int, str] | Sequence[str] | str) -> CyclicCodeZ4:
    """Build a code from a factor-index -> role map, roles being F, G or H."""
    if isinstance(assignment, Mapping):
        roles = [assignment.get(i) for i in range(table.m)]
    else:
        roles = list(assignment)
        if len(roles) != table.m:
            raise IncompleteAssignment(f"need {table.m} roles, got {len(roles)}")
    masks = {"F": 0, "G": 0, "H": 0}
    for i, r in enumerate(roles):
        if r is None:
            raise IncompleteAssignment(f"factor {i} has no role")
        r = r.upper()
        if r not in masks:
            raise IncompleteAssignment(f"unknown role {r!r} for factor {i}")
        masks[r] |= 1 << i
    return CyclicCodeZ4(
        DivisorMask(table, masks["F"]), DivisorMask(table, masks["G"]), DivisorMask(table, masks["H"])
    )


def code_from_divisors(f: DivisorMask, g: DivisorMask) -> CyclicCodeZ4:
    """Code ``<f g, 2 f>``; h is the complementary divisor."""
    return CyclicCodeZ4(f, g, mask_complement(mask_lcm(f, g)))


def all_codes(table: FactorTable) -> Iterator[CyclicCodeZ4]:
    """Every cyclic code of length n, 3^m of them, in a fixed order."""
    for roles in itertools.product("FGH", repeat=table.m):
        yield make_code(table, roles)


def whole_space(table: FactorTable) -> CyclicCodeZ4:
    return make_code(table, "H" * table.m)


def zero_code(table: FactorTable) -> CyclicCodeZ4:
    return make_code(table, "F" * table.m)


def code_type(c: CyclicCodeZ4) -> tuple[int, int]:
    return c.h.degree, c.g.degree


def dual(c: CyclicCodeZ4) -> CyclicCodeZ4:
    return CyclicCodeZ4(mask_reciprocal(c.h), mask_reciprocal(c.g), mask_reciprocal(c.f))


def hull(c: CyclicCodeZ4) -> CyclicCodeZ4:
    """Hull from the divisor lattice.

    The hull is ``<lcm(fg, h*g*), 2 lcm(f, h*)>`` with quaternary part
    ``gcd(h, f*)``; as a partition that is f' = lcm(f, h*), h' = gcd(h, f*).
    """
    f_h = mask_lcm(c.f, mask_reciprocal(c.h))
    h_h = mask_gcd(c.h, mask_reciprocal(c.f))
    g_h = mask_complement(mask_lcm(f_h, h_h))
    return CyclicCodeZ4(f_h, g_h, h_h)


def is_self_dual(c: CyclicCodeZ4) -> bool:
    return dual(c) == c


# ---------------------------------------------------------------------------
# codeword enumeration


def _shifts(vec: Sequence[int], count: int) -> list[np.ndarray]:
    v = np.asarray(vec, dtype=np.uint8)
    return [np.roll(v, i) for i in range(count)]


def generator_rows(c: CyclicCodeZ4) -> list[tuple[np.ndarray, int]]:
    """Rows ``(vector, additive order)`` whose Z4-combinations give each codeword once."""
    n = c.n
    fg, twof = c.generators()
    rows = [(r, 4) for r in _shifts(fg.mod_xn_minus_1(n), c.h.degree)]
    rows += [(r, 2) for r in _shifts(twof.mod_xn_minus_1(n), c.g.degree)]
    return rows


def span_rows(rows: Sequence[tuple[np.ndarray, int]], n: int) -> np.ndarray:
    """All combinations ``sum t_i row_i`` with ``0 <= t_i < order_i``."""
    out = np.zeros((1, n), dtype=np.uint8)
    for row, order in rows:
        out = np.concatenate([(out + np.uint8(t) * row) & 3 for t in range(order)])
    return out


def enumerate_codewords(c: CyclicCodeZ4, cap: int | None = None) -> np.ndarray:
    """Every codeword ``u f g + 2 w f`` exactly once, as a ``(|C|, n)`` array."""
    limit = max_codewords(cap)
    if c.size > limit:
        raise CodeTooLarge(f"|C| = 2^{c.dim2} exceeds cap {limit}")
    return span_rows(generator_rows(c), c.n)


def codeword_set(words: np.ndarray) -> set[bytes]:
    return {bytes(w) for w in np.ascontiguousarray(words, dtype=np.uint8)}


def inner_products(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of dot products over Z4 between the rows of ``a`` and ``b``."""
    return (a.astype(np.int64) @ b.astype(np.int64).T) & 3


def brute_hull(c: CyclicCodeZ4, cap: int | None = None) -> set[bytes]:
    """Hull as the literal intersection of the codeword sets of C and its dual."""
    return codeword_set(enumerate_codewords(c, cap)) & codeword_set(enumerate_codewords(dual(c), cap))


def hull_by_enumeration(c: CyclicCodeZ4, cap: int | None = None) -> set[bytes]:
    """Hull as the radical of the smaller of C and its dual.

    ``C ∩ C⊥`` is the set of words of S orthogonal to all of S, for S either
    C or C⊥.  Picking the smaller one keeps the enumeration at most 2^n
    words, which reaches lengths where the literal intersection cannot.
    """
    d = dual(c)
    s = c if c.size <= d.size else d
    words = enumerate_codewords(s, cap)
    gens = np.array([r for r, _ in generator_rows(s)], dtype=np.uint8).reshape(-1, c.n)
    keep = ~inner_products(words, gens).any(axis=1)
    return codeword_set(words[keep])


# ---------------------------------------------------------------------------
# spans of arbitrary generators


def howell_form(rows: Sequence[Sequence[int]] | np.ndarray) -> list[list[int]]:
    """Reduced Howell form of a matrix over Z4.

    Rows are returned with strictly increasing pivot columns.  Pivots are 1
    or 2; entries above a unit pivot are zero and entries above a pivot 2
    lie in {0, 1}.  For a pivot-2 row its double (which vanishes at the
    pivot) is fed back in, which gives the Howell property: each prefix-zero
    element of the span is spanned by the rows below.
    """
    pending = [[int(a) % 4 for a in r] for r in rows]
    pending = [r for r in pending if any(r)]
    ncols = len(pending[0]) if pending else 0
    result: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        cand = [k for k, r in enumerate(pending) if r[col]]
        if not cand:
            continue
        unit = [k for k in cand if pending[k][col] % 2]
        k = unit[0] if unit else cand[0]
        piv = pending.pop(k)
        if piv[col] == 3:
            piv = [3 * a % 4 for a in piv]
        nxt = []
        for r in pending:
            if r[col]:
                t = r[col] // piv[col] if piv[col] == 2 else r[col]
                r = [(a - t * b) % 4 for a, b in zip(r, piv)]
            if any(r):
                nxt.append(r)
        if piv[col] == 2:
            ann = [2 * a % 4 for a in piv]
            if any(ann):
                nxt.append(ann)
        pending = nxt
        result.append(piv)
        pivots.append(col)
    for i, col in enumerate(pivots):
        p = result[i][col]
        for k in range(i):
            e = result[k][col]
            t = e if p == 1 else (e // 2)
            if t:
                result[k] = [(a - t * b) % 4 for a, b in zip(result[k], result[i])]
    return result


@dataclass(frozen=True)
class Span:
    """Z4-submodule of Z4^n given by a Howell basis."""

    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def of_rows(cls, n: int, rows) -> Span:
        return cls(n, tuple(tuple(r) for r in howell_form(rows)))

    @property
    def orders(self) -> list[int]:
        """Coefficient range per basis row: 4 for a unit pivot, else 2.

        Every element is ``sum t_i row_i`` with ``0 <= t_i < orders[i]`` in
        exactly one way.  A pivot-2 row can still have additive order 4; its
        double is then another basis row.
        """
        out = []
        for r in self.basis:
            p = next(a for a in r if a)
            out.append(4 if p == 1 else 2)
        return out

    @property
    def dim2(self) -> int:
        return sum(2 if o == 4 else 1 for o in self.orders)

    @property
    def size(self) -> int:
        return 1 << self.dim2

    @property
    def type(self) -> tuple[int, int]:
        """``(k1, k2)`` with the module isomorphic to Z4^k1 x Z2^k2; |2C| = 2^k1."""
        doubled = Span.of_rows(self.n, [[2 * a % 4 for a in r] for r in self.basis])
        k1 = doubled.dim2
        return k1, self.dim2 - 2 * k1

    def _rows(self) -> list[tuple[np.ndarray, int]]:
        return [(np.asarray(r, dtype=np.uint8), o) for r, o in zip(self.basis, self.orders)]

    def codewords(self, cap: int | None = None) -> np.ndarray:
        limit = max_codewords(cap)
        if self.size > limit:
            raise CodeTooLarge(f"span of size 2^{self.dim2} exceeds cap {limit}")
        return span_rows(self._rows(), self.n)

    def blocks(self, block_size: int = 1 << 16) -> tuple[np.ndarray, list[np.ndarray]]:
        """Split the span as ``inner + offset`` for every offset.

        Returns the materialised inner part and the list of offsets; each
        element is ``(inner + offset) & 3`` for exactly one pair.
        """
        rows = self._rows()
        inner, total = [], 1
        while rows and total * rows[0][1] <= block_size:
            total *= rows[0][1]
            inner.append(rows.pop(0))
        return span_rows(inner, self.n), list(span_rows(rows, self.n))


def span_of_generator(table: FactorTable, gen: Sequence[int]) -> Span:
    """Cyclic Z4-span of ``gen``: Howell form of its n cyclic shifts."""
    n = table.n
    if len(gen) != n:
        raise ValueError(f"generator has length {len(gen)}, expected {n}")
    return Span.of_rows(n, _shifts([int(a) % 4 for a in gen], n))


def ideal_of(table: FactorTable, gen: Sequence[int] | Z4Poly) -> CyclicCodeZ4:
    """The cyclic code generated by one polynomial, as an (f, g, h) partition.

    Working factor by factor in Z4[x]/(phi), the residue of the generator is
    zero (phi goes to f), twice a unit (to g) or a unit (to h).
    """
    a = gen if isinstance(gen, Z4Poly) else Z4Poly(gen)
    roles = []
    for fac in table.factors:
        _, r = divmod_monic(a, fac.poly)
        if r.is_zero():
            roles.append("F")
        elif all(x % 2 == 0 for x in r.coeffs):
            roles.append("G")
        else:
            roles.append("H")
    return make_code(table, roles)
