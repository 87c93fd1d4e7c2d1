"""Achievable hull types and the average hull size of cyclic codes over R.

The hull of ``C = v C1 + (1 - v) C2`` is computed componentwise, and each
component's hull type is a sum of independent contributions, one per
group of factors of x^n - 1 sharing the order j of their roots:

* j not in N2: the factors come in beta(j) reciprocal pairs of degree
  ord_j(2).  A pair adds ord_j(2) to k1 (roles F/H or H/F) or 0, 1 or 2
  times ord_j(2) to k2.  Over the group, ``a`` pairs feed k1 and the others
  give ``c <= 2 (beta - a)`` units of k2.
* j in N2: gamma(j) self-reciprocal factors of degree ord_j(2), each adding
  ord_j(2) to k2 (role G) or nothing.

The average 2-dimension of the hull over all pairs of component codes is
``(10 n - 4 B_n) / 9``, and ``(5 n - 2 B_n) / 9`` over Z4 codes.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import codes_z4
from .codes_ring import CyclicCodeR, HullTypeR, hull_r
from .codes_z4 import CyclicCodeZ4
from .cyclotomic import FactorTable, _check_odd, compute_B, factor_xn_minus_1, in_N2
from .errors import TooManyCodes

DEFAULT_MAX_CODES = 1 << 20

# ---------------------------------------------------------------------------
# type enumeration


@dataclass(frozen=True)
class DivisorRange:
    """Coefficient ranges contributed by the factors of root order ``j``.

    For ``j`` in N2 the coefficient is ``b`` in ``[0, bound]``; otherwise
    ``a`` is in ``[0, bound]`` and ``c`` in ``[0, 2 (bound - a)]``.
    """

    j: int
    ord: int
    in_N2: bool
    bound: int

    def options(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """``((a, c) or (0, b), (k1, k2) contribution)`` in ascending order."""
        if self.in_N2:
            return [((0, b), (0, self.ord * b)) for b in range(self.bound + 1)]
        return [
            ((a, c), (self.ord * a, self.ord * c))
            for a in range(self.bound + 1)
            for c in range(2 * (self.bound - a) + 1)
        ]


def divisor_ranges(table: FactorTable) -> list[DivisorRange]:
    return [
        DivisorRange(s.j, s.ord, s.in_N2, s.gamma if s.in_N2 else s.beta)
        for s in table.divisor_stats
    ]


def _component_types(ranges: list[DivisorRange]) -> dict[tuple[int, int], tuple]:
    """Every achievable component type, with the first coefficient choice reaching it."""
    reach: dict[tuple[int, int], tuple] = {(0, 0): ()}
    for rng in ranges:
        nxt: dict[tuple[int, int], tuple] = {}
        for (k1, k2), path in reach.items():
            for coeffs, (d1, d2) in rng.options():
                nxt.setdefault((k1 + d1, k2 + d2), path + (coeffs,))
        reach = dict(sorted(nxt.items()))
    return reach


@dataclass(frozen=True)
class TypeEnumeration:
    n: int
    ranges: tuple[DivisorRange, ...]
    types: dict[int, tuple[int, ...]]  # k1 -> sorted k2 values
    branches: dict[int, int] = field(default_factory=dict)  # k1 -> number of a-coefficient choices

    def __contains__(self, t: HullTypeR | tuple[int, int]) -> bool:
        k1, k2 = (t.k1, t.k2) if isinstance(t, HullTypeR) else t
        return k2 in self.types.get(k1, ())

    def as_set(self) -> set[tuple[int, int]]:
        return {(k1, k2) for k1, k2s in self.types.items() for k2 in k2s}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "types": [
                {"k1": k1, "k2": list(k2s), "branches": self.branches[k1]} for k1, k2s in self.types.items()
            ],
        }


def enumerate_hull_types(n: int) -> TypeEnumeration:
    """All hull types ``4^k1 2^k2`` reached by cyclic codes of length n over R."""
    _check_odd(n)
    table = factor_xn_minus_1(n)
    ranges = divisor_ranges(table)
    comp = set(_component_types(ranges))
    pairs = {(a1 + a2, b1 + b2) for a1, b1 in comp for a2, b2 in comp}
    types: dict[int, set[int]] = {}
    for k1, k2 in pairs:
        types.setdefault(k1, set()).add(k2)

    # count the a-coefficient vectors over both components giving each k1
    a_sums = [0]
    for rng in ranges:
        if not rng.in_N2:
            a_sums = [s + rng.ord * a for s in a_sums for a in range(rng.bound + 1)]
    branches: dict[int, int] = {}
    for s1, s2 in itertools.product(a_sums, repeat=2):
        branches[s1 + s2] = branches.get(s1 + s2, 0) + 1

    return TypeEnumeration(
        n,
        tuple(ranges),
        {k1: tuple(sorted(types[k1])) for k1 in sorted(types)},
        {k1: branches[k1] for k1 in sorted(types)},
    )


def _witness_component(table: FactorTable, ranges: list[DivisorRange], path: tuple) -> CyclicCodeZ4:
    """Assign F/G/H roles realising one coefficient choice, lowest index first."""
    roles = ["F"] * len(table.factors)
    for rng, (x, y) in zip(ranges, path):
        idx = [i for i, f in enumerate(table.factors) if f.j == rng.j]
        if rng.in_N2:
            for i in idx[:y]:
                roles[i] = "G"
            continue
        # canonical members of each pair come first in the factor list
        pairs = [(i, table.factors[i].partner) for i in idx if table.factors[i].partner > i]
        a, c = x, y
        for i, p in pairs[:a]:
            roles[i], roles[p] = "F", "H"
        rest = pairs[a:]
        for i, p in rest[: c // 2]:
            roles[i], roles[p] = "G", "G"
        if c % 2:
            i, p = rest[c // 2]
            roles[i], roles[p] = "F", "G"
    return codes_z4.make_code(table, roles)


def achievable_check(n: int, t: HullTypeR | tuple[int, int]) -> tuple[bool, CyclicCodeR | None]:
    """Whether some cyclic code over R of length n has a hull of type t.

    When it does, a witness code is returned; its hull type is exactly t.
    """
    _check_odd(n)
    k1, k2 = (t.k1, t.k2) if isinstance(t, HullTypeR) else t
    table = factor_xn_minus_1(n)
    ranges = divisor_ranges(table)
    comp = _component_types(ranges)
    for (x1, y1), path1 in comp.items():
        path2 = comp.get((k1 - x1, k2 - y1))
        if path2 is not None:
            c = CyclicCodeR(
                _witness_component(table, ranges, path1),
                _witness_component(table, ranges, path2),
            )
            return True, c
    return False, None


# ---------------------------------------------------------------------------
# average hull dimension


def average_dim2_formula(n: int) -> Fraction:
    """Mean of dim2(hull) over all cyclic codes of length n over R."""
    _check_odd(n)
    return Fraction(10 * n - 4 * compute_B(n), 9)


def average_dim2_z4_formula(n: int) -> Fraction:
    """Mean of dim2(hull) over all cyclic Z4 codes of length n."""
    _check_odd(n)
    return Fraction(5 * n - 2 * compute_B(n), 9)


def _enumerated_hull_dim2(c: CyclicCodeZ4) -> int:
    size = len(codes_z4.brute_hull(c))
    return size.bit_length() - 1


def average_dim2_bruteforce(
    n: int, cap: int | None = None, workers: int = 1, method: str = "hull"
) -> Fraction:
    """Exact mean of dim2(hull_r(C)) over every pair of component codes.

    ``method="hull"`` computes each hull from the factor partition;
    ``method="enumerate"`` measures each component hull as the literal
    intersection of codeword sets, so it does not depend on the hull
    formula at all.
    """
    _check_odd(n)
    table = factor_xn_minus_1(n)
    limit = DEFAULT_MAX_CODES if cap is None else cap
    comps = list(codes_z4.all_codes(table))
    total = len(comps) ** 2
    if total > limit:
        raise TooManyCodes(f"{total} code pairs at n={n} exceed cap {limit}")

    if method == "enumerate":
        dims = [_enumerated_hull_dim2(c) for c in comps]

        def run(rows: list[int]) -> int:
            return sum(dims[i] + d2 for i in rows for d2 in dims)

    elif method == "hull":

        def run(rows: list[int]) -> int:
            return sum(hull_r(CyclicCodeR(comps[i], c2))[1].dim2 for i in rows for c2 in comps)

    else:
        raise ValueError(f"unknown method {method!r}")

    idx = list(range(len(comps)))
    workers = max(1, int(workers))
    if workers == 1:
        s = run(idx)
    else:
        shards = [idx[k::workers] for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            s = sum(pool.map(run, shards))
    return Fraction(s, total)


# ---------------------------------------------------------------------------
# table of averages


@dataclass(frozen=True)
class Table1Row:
    n: int
    B: int
    E: Fraction
    dagger: bool

    def to_dict(self) -> dict:
        return {"n": self.n, "B": self.B, "E_num": self.E.numerator, "E_den": self.E.denominator, "in_N2": self.dagger}

    def __str__(self) -> str:
        return f"{self.n} {self.B} {format_fraction(self.E)}{' †' if self.dagger else ''}"


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def table1(ns: Iterable[int]) -> list[Table1Row]:
    rows = []
    for n in ns:
        _check_odd(n)
        rows.append(Table1Row(n, compute_B(n), average_dim2_formula(n), in_N2(n)))
    return rows


def strict_upper_bound_holds(n: int) -> bool:
    """E(n) < 10 n / 9."""
    return average_dim2_formula(n) < Fraction(10 * n, 9)


__all__ = [
    "DivisorRange",
    "HullTypeR",
    "Table1Row",
    "TypeEnumeration",
    "achievable_check",
    "average_dim2_bruteforce",
    "average_dim2_formula",
    "average_dim2_z4_formula",
    "divisor_ranges",
    "enumerate_hull_types",
    "format_fraction",
    "strict_upper_bound_holds",
    "table1",
]
