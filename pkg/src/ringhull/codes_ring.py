"""Cyclic codes over R = Z4[v]/(v^2 - v) and their Gray images.

R splits along the orthogonal idempotents v and 1 - v (stored as 1 + 3v):
a word ``a + b v`` corresponds to the component pair ``(a + b, a)``, its
values at v = 1 and v = 0.  A cyclic code over R is therefore a pair of
cyclic Z4 codes ``C = v C1 + (1 - v) C2`` and every construction here
(dual, hull, spans) is done componentwise.

The Gray map sends ``a + b v`` to ``(a, a + 2b)``.  Words are laid out in
blocks, ``(a_0..a_{n-1}, a_0+2b_0..a_{n-1}+2b_{n-1})``, unless
``layout="interleaved"`` is requested.
"""

from __future__ import annotations

import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import codes_z4
from .codes_z4 import CyclicCodeZ4, Span, enumerate_codewords, max_codewords
from .cyclotomic import FactorTable
from .errors import CodeTooLarge, MalformedGenerator, TableMismatch
from .z4poly import Z4Poly

LEE = np.array([0, 1, 2, 1], dtype=np.uint8)

# LEE_PAIR[x, y]: Lee weight of the Gray image of the R symbol whose
# v-component is x and (1 - v)-component is y, i.e. a = y, a + 2b = 2x - y.
LEE_PAIR = np.array([[LEE[y] + LEE[(2 * x - y) % 4] for y in range(4)] for x in range(4)], dtype=np.uint8)


@dataclass(frozen=True)
class RElement:
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 4)
        object.__setattr__(self, "b", self.b % 4)

    def __add__(self, other: RElement) -> RElement:
        return relement_add(self, other)

    def __mul__(self, other: RElement) -> RElement:
        return relement_mul(self, other)

    def __str__(self) -> str:
        return f"{self.a}+{self.b}v"


V = RElement(0, 1)
ONE_MINUS_V = RElement(1, 3)


def relement_add(x: RElement, y: RElement) -> RElement:
    return RElement(x.a + y.a, x.b + y.b)


def relement_mul(x: RElement, y: RElement) -> RElement:
    # (a + bv)(c + dv) = ac + (ad + bc + bd) v since v^2 = v
    return RElement(x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b)


def lee_weight_z4(t: int) -> int:
    t %= 4
    return min(t, 4 - t)


def lee_weight_r(x: RElement) -> int:
    return lee_weight_z4(x.a) + lee_weight_z4(x.a + 2 * x.b)


@dataclass(frozen=True)
class RWord:
    """Word of length n over R, stored as its a- and b-coefficient tuples."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("a and b parts differ in length")
        object.__setattr__(self, "a", tuple(int(x) % 4 for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) % 4 for x in self.b))

    @classmethod
    def from_elements(cls, symbols: Sequence[RElement]) -> RWord:
        return cls(tuple(s.a for s in symbols), tuple(s.b for s in symbols))

    @classmethod
    def from_components(cls, w1: Sequence[int], w2: Sequence[int]) -> RWord:
        """The word ``v w1 + (1 - v) w2``."""
        return cls(tuple(w2), tuple(int(x) - int(y) for x, y in zip(w1, w2)))

    @classmethod
    def zero(cls, n: int) -> RWord:
        return cls((0,) * n, (0,) * n)

    def __len__(self) -> int:
        return len(self.a)

    @property
    def symbols(self) -> list[RElement]:
        return [RElement(x, y) for x, y in zip(self.a, self.b)]

    @property
    def eps1(self) -> tuple[int, ...]:
        """Value at v = 1, the v-component."""
        return tuple((x + y) % 4 for x, y in zip(self.a, self.b))

    @property
    def eps2(self) -> tuple[int, ...]:
        """Value at v = 0, the (1 - v)-component."""
        return self.a

    def __add__(self, other: RWord) -> RWord:
        return RWord(tuple(x + y for x, y in zip(self.a, other.a)), tuple(x + y for x, y in zip(self.b, other.b)))

    def __str__(self) -> str:
        return format_r_word(self)


# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class HullTypeR:
    """Type 4^k1 2^k2."""

    k1: int
    k2: int

    @property
    def dim2(self) -> int:
        return 2 * self.k1 + self.k2

    def __str__(self) -> str:
        return f"4^{self.k1} 2^{self.k2}"


@dataclass(frozen=True)
class CyclicCodeR:
    c1: CyclicCodeZ4
    c2: CyclicCodeZ4

    def __post_init__(self):
        if self.c1.n != self.c2.n:
            raise TableMismatch(f"components have lengths {self.c1.n} and {self.c2.n}")

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def table(self) -> FactorTable:
        return self.c1.table

    @property
    def type(self) -> HullTypeR:
        (a1, b1), (a2, b2) = self.c1.type, self.c2.type
        return HullTypeR(a1 + a2, b1 + b2)

    @property
    def dim2(self) -> int:
        return self.c1.dim2 + self.c2.dim2

    @property
    def size(self) -> int:
        return 1 << self.dim2

    def __repr__(self) -> str:
        return f"CyclicCodeR(n={self.n}, c1={self.c1.roles()!r}, c2={self.c2.roles()!r})"


def make_code_r(c1: CyclicCodeZ4, c2: CyclicCodeZ4) -> CyclicCodeR:
    return CyclicCodeR(c1, c2)


def all_codes_r(table: FactorTable) -> Iterator[CyclicCodeR]:
    comps = list(codes_z4.all_codes(table))
    for c1 in comps:
        for c2 in comps:
            yield CyclicCodeR(c1, c2)


def _v_times(p: Z4Poly, n: int) -> RWord:
    return RWord((0,) * n, p.mod_xn_minus_1(n))


def _one_minus_v_times(p: Z4Poly, n: int) -> RWord:
    vec = p.mod_xn_minus_1(n)
    return RWord(vec, tuple(-x for x in vec))


def generators_r(c: CyclicCodeR) -> tuple[RWord, RWord, RWord, RWord]:
    """``(v p1 q1, 2 v p1, (1-v) p2 q2, 2 (1-v) p2)``."""
    n = c.n
    g1, h1 = c.c1.generators()
    g2, h2 = c.c2.generators()
    return _v_times(g1, n), _v_times(h1, n), _one_minus_v_times(g2, n), _one_minus_v_times(h2, n)


def dual_r(c: CyclicCodeR) -> CyclicCodeR:
    return CyclicCodeR(codes_z4.dual(c.c1), codes_z4.dual(c.c2))


def hull_r(c: CyclicCodeR) -> tuple[CyclicCodeR, HullTypeR]:
    h = CyclicCodeR(codes_z4.hull(c.c1), codes_z4.hull(c.c2))
    return h, h.type


def is_self_dual_r(c: CyclicCodeR) -> bool:
    return dual_r(c) == c


# ---------------------------------------------------------------------------
# generator notation "(digits)+v(digits)"

_GEN_RE = re.compile(r"^\(\s*([0-3]+)\s*\)\s*\+\s*v\s*\(\s*([0-3]+)\s*\)$")


def format_r_word(w: RWord) -> str:
    return "(" + "".join(map(str, w.a)) + ")+v(" + "".join(map(str, w.b)) + ")"


def parse_r_generator(text: str) -> RWord:
    """Parse ``"(31020)+v(22112)"``; spaces around ``+`` and ``v`` are ignored."""
    m = _GEN_RE.match(text.strip())
    if not m:
        raise MalformedGenerator(f"cannot parse generator {text!r}")
    a, b = m.groups()
    if len(a) != len(b):
        raise MalformedGenerator(f"parts of {text!r} have different lengths")
    return RWord(tuple(map(int, a)), tuple(map(int, b)))


def format_generators_r(c: CyclicCodeR) -> str:
    names = ("v p1 q1", "2v p1", "(1-v) p2 q2", "2(1-v) p2")
    return "\n".join(f"{name}: {format_r_word(w)}" for name, w in zip(names, generators_r(c)))


# ---------------------------------------------------------------------------
# enumeration, Gray map, Lee weights


def enumerate_codewords_r(c: CyclicCodeR, cap: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All codewords as ``(a, b)`` arrays of shape ``(|C|, n)``.

    Row ``i * |C2| + k`` is ``v w1_i + (1 - v) w2_k``.
    """
    limit = max_codewords(cap)
    if c.size > limit:
        raise CodeTooLarge(f"|C| = 2^{c.dim2} exceeds cap {limit}")
    w1 = enumerate_codewords(c.c1, limit)
    w2 = enumerate_codewords(c.c2, limit)
    a = np.tile(w2, (len(w1), 1))
    b = (np.repeat(w1, len(w2), axis=0) + np.uint8(4) - a) & 3
    return a, b


def inner_products_r(a: np.ndarray, b: np.ndarray, a2: np.ndarray, b2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Euclidean inner products over R between two word lists, as (a, b) matrices.

    Uses (a + bv)(c + dv) = ac + (ad + bc + bd) v directly.
    """
    a, b, a2, b2 = (np.asarray(x, dtype=np.int64) for x in (a, b, a2, b2))
    return (a @ a2.T) & 3, (a @ b2.T + b @ a2.T + b @ b2.T) & 3


def word_set_r(a: np.ndarray, b: np.ndarray) -> set[bytes]:
    ab = np.ascontiguousarray(np.concatenate([a, b], axis=1), dtype=np.uint8)
    return {bytes(w) for w in ab}


def hull_r_by_enumeration(c: CyclicCodeR, cap: int | None = None) -> set[bytes]:
    """Hull over R without the componentwise formula.

    Enumerates the smaller of C and its dual and keeps the words whose R
    inner product with every shift of its four generators vanishes.
    """
    d = dual_r(c)
    s = c if c.size <= d.size else d
    a, b = enumerate_codewords_r(s, cap)
    gens = [w for g in generators_r(s) for w in _all_shifts(g)]
    ga = np.array([g.a for g in gens], dtype=np.uint8)
    gb = np.array([g.b for g in gens], dtype=np.uint8)
    pa, pb = inner_products_r(a, b, ga, gb)
    keep = ~(pa.any(axis=1) | pb.any(axis=1))
    return word_set_r(a[keep], b[keep])


def _all_shifts(w: RWord) -> list[RWord]:
    out = [w]
    for _ in range(len(w) - 1):
        out.append(cyclic_shift_r(out[-1]))
    return out


def r_words(a: np.ndarray, b: np.ndarray) -> Iterator[RWord]:
    for x, y in zip(a, b):
        yield RWord(tuple(x), tuple(y))


def gray_map(w: RWord, layout: str = "block") -> np.ndarray:
    a = np.asarray(w.a, dtype=np.uint8)
    b = np.asarray(w.b, dtype=np.uint8)
    return gray_map_arrays(a, b, layout)


def gray_map_arrays(a: np.ndarray, b: np.ndarray, layout: str = "block") -> np.ndarray:
    """Vectorised Gray map on the last axis of ``a`` and ``b``."""
    left = a & 3
    right = (a + 2 * b) & 3
    if layout == "block":
        return np.concatenate([left, right], axis=-1).astype(np.uint8)
    if layout == "interleaved":
        out = np.stack([left, right], axis=-1)
        return out.reshape(*a.shape[:-1], 2 * a.shape[-1]).astype(np.uint8)
    raise ValueError(f"unknown layout {layout!r}")


def lee_weight_word(w: np.ndarray | Sequence[int]) -> int:
    return int(LEE[np.asarray(w, dtype=np.uint8) & 3].sum())


def lee_weight_rword(w: RWord) -> int:
    return sum(lee_weight_r(s) for s in w.symbols)


def cyclic_shift_r(w: RWord) -> RWord:
    return RWord(w.a[-1:] + w.a[:-1], w.b[-1:] + w.b[:-1])


def cyclic_shift_z4(g: np.ndarray | Sequence[int]) -> np.ndarray:
    return np.roll(np.asarray(g, dtype=np.uint8), 1, axis=-1)


def double_shift(g: np.ndarray, layout: str = "block") -> np.ndarray:
    """The shift that the Gray map intertwines with the R-cyclic shift.

    Block layout: each half shifted by one.  Interleaved layout: two
    single shifts of the whole word.
    """
    g = np.asarray(g, dtype=np.uint8)
    if layout == "interleaved":
        return cyclic_shift_z4(cyclic_shift_z4(g))
    n = g.shape[-1] // 2
    return np.concatenate([np.roll(g[..., :n], 1, axis=-1), np.roll(g[..., n:], 1, axis=-1)], axis=-1)


def gray_image(c: CyclicCodeR, layout: str = "block") -> Span:
    """The Z4-linear code xi(C) of length 2n, as a Howell-reduced span.

    xi is Z4-linear, so xi(C) is spanned by the images of the Z4-generators
    v r (r generating C1) and (1 - v) r (r generating C2).  xi kills 2v, so
    xi(C) can be smaller than C: xi(C) is C modulo the words in C with
    a = 0 and b even.
    """
    n = c.n
    zero = [0] * n
    rows = [gray_map(RWord.from_components(r, zero), layout) for r, _ in codes_z4.generator_rows(c.c1)]
    rows += [gray_map(RWord.from_components(zero, r), layout) for r, _ in codes_z4.generator_rows(c.c2)]
    return Span.of_rows(2 * n, rows)


def _min_weight_span(span: Span, workers: int) -> float | int:
    if span.size == 1:
        return math.inf
    inner, offsets = span.blocks()
    inner_lee = LEE[inner]

    def run(chunk):
        best = 1 << 30
        for off in chunk:
            wt = LEE[(inner + off) & 3].sum(axis=1, dtype=np.int32) if off.any() else inner_lee.sum(axis=1, dtype=np.int32)
            nz = wt[wt > 0]
            if len(nz):
                best = min(best, int(nz.min()))
        return best

    return _sharded_min(offsets, run, workers)


def _sharded_min(items: list, run, workers: int) -> int:
    workers = max(1, int(workers))
    if workers == 1 or len(items) <= 1:
        return run(items)
    bounds = np.linspace(0, len(items), min(workers, len(items)) + 1).astype(int)
    shards = [items[lo:hi] for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return min(pool.map(run, shards))


def _min_weight_pairs(c: CyclicCodeR, workers: int, limit: int) -> float | int:
    if c.size > limit:
        raise CodeTooLarge(f"|C| = 2^{c.dim2} exceeds cap {limit}")
    w1 = enumerate_codewords(c.c1, limit)
    w2 = enumerate_codewords(c.c2, limit)
    # chunk C1 x C2 into blocks of about 2^22 symbols
    step2 = max(1, min(len(w2), (1 << 22) // c.n))
    step1 = max(1, (1 << 22) // (c.n * step2))
    tasks = [(r, s) for r in range(0, len(w1), step1) for s in range(0, len(w2), step2)]
    lut = LEE_PAIR.ravel()

    def run(chunk):
        best = 1 << 30
        for r, s in chunk:
            idx = (w1[r : r + step1, None, :] << 2) | w2[None, s : s + step2, :]
            wt = lut[idx].sum(axis=2, dtype=np.int32)
            nz = wt[wt > 0]
            if len(nz):
                best = min(best, int(nz.min()))
        return best

    best = _sharded_min(tasks, run, workers)
    return math.inf if best == 1 << 30 else best


def min_lee_distance(
    c: CyclicCodeR, workers: int = 1, cap: int | None = None, method: str = "image"
) -> float | int:
    """Exhaustive minimum Lee weight of the nonzero words of xi(C).

    ``math.inf`` when xi(C) = {0}.  ``method="image"`` enumerates the Gray
    image from its Howell basis; ``method="pairs"`` enumerates C itself as
    C1 x C2 and ignores words that xi sends to zero.  Work is split over
    ``workers`` threads; the result does not depend on the split.
    """
    limit = max_codewords(cap)
    if method == "pairs":
        return _min_weight_pairs(c, workers, limit)
    if method != "image":
        raise ValueError(f"unknown method {method!r}")
    span = gray_image(c)
    if span.size > limit:
        raise CodeTooLarge(f"|xi(C)| = 2^{span.dim2} exceeds cap {limit}")
    return _min_weight_span(span, workers)


@dataclass(frozen=True)
class GrayParameters:
    length: int
    k1: int
    k2: int
    distance: float | int | None  # None when not computed

    def __str__(self) -> str:
        d = "?" if self.distance is None else "inf" if self.distance == math.inf else str(self.distance)
        return f"({self.length}, 4^{self.k1} 2^{self.k2}, {d})"

    def as_tuple(self):
        return (self.length, self.k1, self.k2, self.distance)


def gray_parameters(
    c: CyclicCodeR, workers: int = 1, cap: int | None = None, distance: bool = True
) -> GrayParameters:
    """Length, type and minimum Lee distance of the Z4-linear code xi(C).

    When ``distance`` is true but xi(C) exceeds the cap, the distance is
    left as None instead of raising.
    """
    span = gray_image(c)
    k1, k2 = span.type
    d = None
    if distance and span.size <= max_codewords(cap):
        d = _min_weight_span(span, workers)
    return GrayParameters(2 * c.n, k1, k2, d)


# ---------------------------------------------------------------------------
# spans of single R generators


def span_of_r_generator(table: FactorTable, w: RWord) -> CyclicCodeR:
    """Cyclic R-span of one word: ``v <eps1> + (1 - v) <eps2>``."""
    if len(w) != table.n:
        raise ValueError(f"word has length {len(w)}, expected {table.n}")
    return CyclicCodeR(codes_z4.ideal_of(table, w.eps1), codes_z4.ideal_of(table, w.eps2))


def howell_spans_r(table: FactorTable, w: RWord) -> tuple[Span, Span]:
    """Component spans by row reduction; an independent route to the same code."""
    return codes_z4.span_of_generator(table, w.eps1), codes_z4.span_of_generator(table, w.eps2)

