import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringhull import codes_z4
from ringhull.codes_ring import (
    LEE_PAIR,
    ONE_MINUS_V,
    V,
    CyclicCodeR,
    RElement,
    RWord,
    all_codes_r,
    cyclic_shift_r,
    cyclic_shift_z4,
    double_shift,
    dual_r,
    enumerate_codewords_r,
    format_generators_r,
    format_r_word,
    generators_r,
    gray_image,
    gray_map,
    gray_map_arrays,
    gray_parameters,
    hull_r,
    hull_r_by_enumeration,
    is_self_dual_r,
    lee_weight_r,
    lee_weight_rword,
    lee_weight_word,
    make_code_r,
    min_lee_distance,
    parse_r_generator,
    span_of_r_generator,
    word_set_r,
)
from ringhull.cyclotomic import factor_xn_minus_1
from ringhull.errors import CodeTooLarge, MalformedGenerator, TableMismatch

T1 = factor_xn_minus_1(1)
T5 = factor_xn_minus_1(5)
T7 = factor_xn_minus_1(7)
T15 = factor_xn_minus_1(15)

elements = st.builds(RElement, st.integers(0, 3), st.integers(0, 3))


def words(n):
    digits = st.lists(st.integers(0, 3), min_size=n, max_size=n).map(tuple)
    return st.builds(RWord, digits, digits)


any_word_pair = st.integers(1, 9).flatmap(lambda n: st.tuples(words(n), words(n)))


def test_idempotents():
    assert V * V == V
    assert V * ONE_MINUS_V == RElement(0, 0)
    assert V + ONE_MINUS_V == RElement(1, 0)
    one = RElement(1, 0)
    for a in range(4):
        for b in range(4):
            assert one * RElement(a, b) == RElement(a, b)


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert x * y == y * x
    assert x * (y * z) == (x * y) * z
    assert x * (y + z) == x * y + x * z


def test_lee_weights():
    assert lee_weight_r(RElement(0, 0)) == 0
    assert lee_weight_r(V) == 2
    assert lee_weight_r(RElement(1, 1)) == 2
    assert lee_weight_r(RElement(3, 2)) == 2
    # the kernel of the Gray map: 2v has weight 0
    assert lee_weight_r(RElement(0, 2)) == 0


def test_lee_pair_table_matches_symbols():
    for x in range(4):
        for y in range(4):
            w = RWord.from_components([x], [y])
            assert LEE_PAIR[x, y] == lee_weight_rword(w)


def test_gray_map_examples():
    assert list(gray_map(RWord((0,), (1,)))) == [0, 2]
    assert list(gray_map(RWord((3,), (2,)))) == [3, 3]
    w = parse_r_generator("(31020)+v(22112)")
    assert list(gray_map(w)) == [3, 1, 0, 2, 0, 3, 1, 2, 0, 0]
    assert list(gray_map(w, "interleaved")) == [3, 3, 1, 1, 0, 2, 2, 0, 0, 0]
    with pytest.raises(ValueError):
        gray_map(w, "diagonal")


def test_components_round_trip():
    w = parse_r_generator("(31020)+v(22112)")
    assert RWord.from_components(w.eps1, w.eps2) == w


def test_codec():
    w = parse_r_generator("(31020)+v(22112)")
    assert [str(s) for s in w.symbols] == ["3+2v", "1+2v", "0+1v", "2+1v", "0+2v"]
    assert format_r_word(w) == "(31020)+v(22112)"
    assert parse_r_generator("(0)+v(0)") == RWord.zero(1)
    long = parse_r_generator("(220022200200000) + v (313301033221000)")
    assert len(long) == 15
    assert parse_r_generator("(220220220220220) + v(000000000000000)") == RWord(
        (2, 2, 0) * 5, (0,) * 15
    )


@pytest.mark.parametrize("text", ["(12)+v(1)", "12+v(12)", "(14)+v(12)", "(12)+(12)", ""])
def test_codec_rejects(text):
    with pytest.raises(MalformedGenerator):
        parse_r_generator(text)


@given(any_word_pair)
def test_codec_round_trip(pair):
    w, _ = pair
    assert parse_r_generator(format_r_word(w)) == w


@settings(max_examples=300)
@given(any_word_pair)
def test_gray_additive_and_isometric(pair):
    x, y = pair
    gx, gy = gray_map(x), gray_map(y)
    assert np.array_equal(gray_map(x + y), (gx + gy) & 3)
    diff = RWord(tuple(a - b for a, b in zip(x.a, y.a)), tuple(a - b for a, b in zip(x.b, y.b)))
    assert lee_weight_word((gx.astype(int) - gy) & 3) == lee_weight_rword(diff)


@settings(max_examples=300)
@given(any_word_pair, st.sampled_from(["block", "interleaved"]))
def test_shift_intertwines_with_double_shift(pair, layout):
    w, _ = pair
    assert np.array_equal(gray_map(cyclic_shift_r(w), layout), double_shift(gray_map(w, layout), layout))


def test_shift_basics():
    assert list(cyclic_shift_z4([1, 0, 0])) == [0, 1, 0]
    w = parse_r_generator("(31020)+v(22112)")
    s = w
    for _ in range(5):
        s = cyclic_shift_r(s)
    assert s == w


def test_gray_map_arrays_matches_words():
    rng = np.random.default_rng(3)
    a = rng.integers(0, 4, (20, 6), dtype=np.uint8)
    b = rng.integers(0, 4, (20, 6), dtype=np.uint8)
    for layout in ("block", "interleaved"):
        out = gray_map_arrays(a, b, layout)
        for i in range(20):
            assert np.array_equal(out[i], gray_map(RWord(tuple(a[i]), tuple(b[i])), layout))


def test_trivial_codes():
    full = make_code_r(codes_z4.whole_space(T7), codes_z4.whole_space(T7))
    zero = make_code_r(codes_z4.zero_code(T7), codes_z4.zero_code(T7))
    assert dual_r(full) == zero
    h, t = hull_r(full)
    assert h == zero and (t.k1, t.k2) == (0, 0)
    two = make_code_r(codes_z4.make_code(T7, "GGG"), codes_z4.make_code(T7, "GGG"))
    h, t = hull_r(two)
    assert h == two and (t.k1, t.k2) == (0, 14)
    assert is_self_dual_r(two)


def test_mismatched_components():
    with pytest.raises(TableMismatch):
        CyclicCodeR(codes_z4.zero_code(T5), codes_z4.zero_code(T7))


def test_single_component_enumeration():
    c = make_code_r(codes_z4.make_code(T1, "G"), codes_z4.zero_code(T1))
    a, b = enumerate_codewords_r(c)
    assert sorted(format_r_word(RWord(tuple(x), tuple(y))) for x, y in zip(a, b)) == ["(0)+v(0)", "(0)+v(2)"]


@pytest.mark.parametrize("n", [1, 3, 5])
def test_hull_matches_enumeration(n):
    for c in all_codes_r(factor_xn_minus_1(n)):
        h, t = hull_r(c)
        s = word_set_r(*enumerate_codewords_r(h))
        assert s == hull_r_by_enumeration(c)
        assert len(s) == 1 << t.dim2
        assert dual_r(dual_r(c)) == c
        assert c.dim2 + dual_r(c).dim2 == 4 * n


def test_self_duality_characterisation():
    # hull = C means C is self-orthogonal; self-dual needs half the size as well
    n = 5
    seen_self_dual = 0
    for c in all_codes_r(T5):
        h, _ = hull_r(c)
        sd = is_self_dual_r(c)
        assert (h == c) == (word_set_r(*enumerate_codewords_r(c)) == hull_r_by_enumeration(c))
        assert sd == (h == c and c.dim2 == 2 * n)
        assert sd == (codes_z4.dual(c.c1) == c.c1 and codes_z4.dual(c.c2) == c.c2)
        seen_self_dual += sd
    assert seen_self_dual > 0
    zero = make_code_r(codes_z4.zero_code(T5), codes_z4.zero_code(T5))
    assert hull_r(zero)[0] == zero and not is_self_dual_r(zero)


def test_generators_render_and_span_the_code():
    c = make_code_r(codes_z4.make_code(T7, "FGH"), codes_z4.make_code(T7, "HFG"))
    text = format_generators_r(c)
    assert text.splitlines()[0].startswith("v p1 q1: (")
    total = RWord.zero(7)
    for w in generators_r(c):
        total = total + w
    assert span_of_r_generator(T7, total) == c


def test_span_of_trivial_generators():
    zero = span_of_r_generator(T7, RWord.zero(7))
    assert zero.size == 1
    c1 = codes_z4.make_code(T7, "FGH")
    fg, _ = c1.generators()
    w = RWord.from_components(fg.mod_xn_minus_1(7), [0] * 7)
    s = span_of_r_generator(T7, w)
    assert s.c2 == codes_z4.zero_code(T7)


def test_min_distance_examples():
    zero = make_code_r(codes_z4.zero_code(T7), codes_z4.zero_code(T7))
    assert min_lee_distance(zero) == math.inf
    # 2v C is killed by the Gray map, so its image is the zero code too
    twov = make_code_r(codes_z4.make_code(T7, "GGG"), codes_z4.zero_code(T7))
    assert min_lee_distance(twov) == math.inf
    assert min_lee_distance(twov, method="pairs") == math.inf
    rep = make_code_r(codes_z4.make_code(T7, "FFH"), codes_z4.make_code(T7, "FFH"))
    assert min_lee_distance(rep) == min_lee_distance(rep, method="pairs")


def test_min_distance_methods_agree():
    for c in all_codes_r(T5):
        if c.size <= 1 << 14:
            assert min_lee_distance(c) == min_lee_distance(c, method="pairs", workers=3)


def test_min_distance_cap():
    full = make_code_r(codes_z4.whole_space(T15), codes_z4.whole_space(T15))
    with pytest.raises(CodeTooLarge):
        min_lee_distance(full)
    with pytest.raises(CodeTooLarge):
        min_lee_distance(full, method="pairs")
    with pytest.raises(ValueError):
        min_lee_distance(full, method="sampling")


def test_gray_image_is_image_of_code():
    c = make_code_r(codes_z4.make_code(T5, "FH"), codes_z4.make_code(T5, "GG"))
    a, b = enumerate_codewords_r(c)
    image = {bytes(w) for w in gray_map_arrays(a, b)}
    span = gray_image(c)
    assert codes_z4.codeword_set(span.codewords()) == image


def test_gray_image_is_double_shift_invariant():
    c = make_code_r(codes_z4.make_code(T7, "FGH"), codes_z4.make_code(T7, "HGF"))
    img = codes_z4.codeword_set(gray_image(c).codewords())
    shifted = {bytes(double_shift(np.frombuffer(w, dtype=np.uint8))) for w in img}
    assert shifted == img


def test_gray_parameters_of_first_table_row():
    w = parse_r_generator("(220022200200000) + v (313301033221000)")
    span = span_of_r_generator(T15, w)
    gp = gray_parameters(span)
    assert gp.as_tuple() == (30, 0, 10, 16)
    assert str(gp) == "(30, 4^0 2^10, 16)"
    assert gray_parameters(span, cap=16).distance is None
