import pytest
from hypothesis import given, strategies as st

from errors import DegreeError, IndexRangeError, ParseError
from perm_core import (
    GeneratorWord,
    Parity,
    Permutation,
    compose,
    compose_all,
    cycle_type,
    cycles,
    descent_set,
    embed,
    evaluate,
    format_cycles,
    format_one_line,
    format_word,
    identity,
    inverse,
    inversion_length,
    major_index,
    order,
    parity,
    parse_cycles,
    parse_one_line,
    parse_permutation,
    parse_word,
    power,
    s,
    support,
    t,
    u,
    v,
    word,
)


def perm(text):
    return parse_one_line(text)


@st.composite
def permutations(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def permutation_pairs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return tuple(Permutation(tuple(draw(st.permutations(range(1, n + 1))))) for _ in range(2))


# --- Arithmetic ---


def test_identity_values():
    """Identity is the sorted image table."""
    assert format_one_line(identity(3)) == "[1;2;3]"
    assert format_one_line(identity(1)) == "[1]"
    with pytest.raises(DegreeError):
        identity(0)


def test_compose_is_left_to_right():
    """The left factor acts first."""
    assert compose(t(2, 3), t(3, 3)) == perm("[1;3;2]")
    assert compose(t(3, 4), t(4, 4)) == perm("[2;4;1;3]")
    assert t(3, 4) * t(4, 4) == perm("[2;4;1;3]")


def test_compose_degree_mismatch():
    with pytest.raises(DegreeError):
        compose(identity(3), identity(4))


def test_inverse_examples():
    assert inverse(identity(5)) == identity(5)
    assert inverse(t(4, 4)) == perm("[2;3;4;1]")
    assert inverse(u(4, 4)) == u(4, 4)


def test_power_negative_and_large():
    t5 = t(5, 5)
    assert power(t5, -1) == inverse(t5)
    assert power(t5, 5) == identity(5)
    assert t5 ** 7 == power(t5, 2)


def test_parity_of_t_depends_on_m():
    assert parity(t(5, 5)) is Parity.EVEN
    assert parity(t(4, 4)) is Parity.ODD
    assert parity(identity(6)) is Parity.EVEN
    assert Parity.ODD ^ Parity.ODD is Parity.EVEN


def test_order_of_u_and_v():
    assert order(u(6, 6)) == 4
    assert order(v(8, 8)) == 4
    assert order(identity(7)) == 1


def test_cycle_type_and_support():
    p = perm("[3;4;1;5;2]")
    assert cycle_type(p) == (3, 2)
    assert support(p) == frozenset({1, 2, 3, 4, 5})
    assert support(u(4, 6)) == frozenset({1, 2, 3, 4})


def test_embed_fixes_new_points():
    p = embed(perm("[2;1]"), 4)
    assert p == perm("[2;1;3;4]")
    with pytest.raises(DegreeError):
        embed(identity(4), 3)


def test_compose_all_empty_is_identity():
    assert compose_all([], 3) == identity(3)
    assert compose_all([s(1, 3), s(2, 3)], 3) == t(3, 3)


# --- Generators ---


def test_s_generators():
    assert s(1, 3) == perm("[2;1;3]")
    assert s(3, 4) == perm("[1;2;4;3]")
    assert compose(s(1, 4), s(3, 4)) == u(4, 4)
    with pytest.raises(IndexRangeError):
        s(4, 4)


def test_t_generators():
    assert t(4, 4) == perm("[4;1;2;3]")
    assert t(2, 2) == perm("[2;1]")
    assert format_cycles(t(5, 5)) == "(5,4,3,2,1)"


def test_degenerate_generators_are_identity():
    assert t(0, 4) == identity(4)
    assert t(1, 4) == identity(4)
    assert u(2, 4) == identity(4)
    assert v(2, 4) == identity(4)
    with pytest.raises(IndexRangeError):
        u(5, 6)
    with pytest.raises(IndexRangeError):
        t(5, 4)


def test_u_and_v_cycles():
    assert u(4, 4) == parse_cycles("(1,2)(3,4)", 4)
    assert u(6, 6) == parse_cycles("(4,3,2,1)(5,6)", 6)
    assert v(4, 4) == parse_cycles("(1,3)(2,4)", 4)
    assert format_cycles(v(6, 6)) == "(6,4,2)(5,3,1)"


@pytest.mark.parametrize("r", [3, 4, 5])
def test_u_squared_is_previous_v(r):
    n = 2 * r
    assert compose(u(2 * r, n), u(2 * r, n)) == v(2 * r - 2, n)
    assert order(v(2 * r, n)) == r


def test_evaluate_words():
    assert evaluate(GeneratorWord(4)) == identity(4)
    assert evaluate(word(4, ("t", 3, 1), ("t", 4, 1))) == perm("[2;4;1;3]")
    assert evaluate(word(6, ("t", 6, 2))) == v(6, 6)
    assert evaluate(word(5, ("t", 5, -1), ("t", 5, 1))) == identity(5)


def test_word_index_validation():
    with pytest.raises(IndexRangeError):
        word(4, ("t", 5, 1))
    with pytest.raises(IndexRangeError):
        word(4, ("s", 4, 1))
    with pytest.raises(IndexRangeError):
        word(6, ("v", 2, 1))


# --- Statistics ---


def test_major_index_examples():
    assert major_index(identity(5)) == 0
    assert major_index(perm("[3;1;2]")) == 1
    assert major_index(perm("[3;2;1]")) == 3
    assert descent_set(perm("[2;4;1;3]")) == frozenset({2})


def test_inversion_length():
    assert inversion_length(identity(4)) == 0
    assert inversion_length(perm("[2;4;1;3]")) == 3
    assert inversion_length(perm("[4;3;2;1]")) == 6


# --- Notation ---


def test_one_line_and_cycles_agree():
    p = parse_one_line("[3;4;1;5;2]")
    assert p(1) == 3
    assert format_cycles(p) == "(5,2,4)(3,1)"
    assert parse_cycles("(1,3)(2,4,5)", 5) == p
    assert str(cycles(identity(3))) == "()"


@pytest.mark.parametrize("text", ["[1;1;2]", "[0;1]", "[1;2", "1;2", "[]"])
def test_parse_one_line_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_one_line(text)


def test_parse_one_line_wrong_length():
    with pytest.raises(ParseError):
        parse_one_line("[1;2]", 3)


@pytest.mark.parametrize("text", ["(1,2)(2,3)", "(1,5)", "(1 2)", "(1,2"])
def test_parse_cycles_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_cycles(text, 4)


def test_parse_permutation_dispatch():
    assert parse_permutation("()", 4) == identity(4)
    assert parse_permutation(" [2;1] ", 2) == s(1, 2)
    with pytest.raises(ParseError):
        parse_permutation("2 1", 2)


def test_parse_and_format_words():
    w = parse_word("t3 * t4^-2 * u4", 4)
    assert format_word(w) == "t3^1 * t4^-2 * u4^1"
    assert format_word(parse_word("e", 4)) == "e"
    assert len(parse_word("", 4)) == 0
    with pytest.raises(ParseError):
        parse_word("t5^1", 4)
    with pytest.raises(ParseError):
        parse_word("x3", 4)


# --- Properties ---


@given(permutations())
def test_inverse_cancels(p):
    assert compose(p, inverse(p)) == identity(p.degree)
    assert compose(inverse(p), p) == identity(p.degree)


@given(permutation_pairs())
def test_right_inverse_cancels_a_product(pair):
    p, q = pair
    assert compose(compose(p, q), inverse(q)) == p
    assert compose(inverse(p), compose(p, q)) == q


@given(permutations(), st.integers(min_value=-20, max_value=20))
def test_power_matches_repeated_compose(p, k):
    base = p if k >= 0 else inverse(p)
    expected = compose_all([base] * abs(k), p.degree)
    assert power(p, k) == expected


@given(permutations())
def test_cycles_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p
    assert parse_one_line(format_one_line(p)) == p


@given(permutations(min_n=2))
def test_parity_is_inversion_count_parity(p):
    expected = Parity.EVEN if inversion_length(p) % 2 == 0 else Parity.ODD
    assert parity(p) is expected


@given(permutation_pairs())
def test_parity_is_a_homomorphism(pair):
    a, b = pair
    assert parity(compose(a, b)) is parity(a) ^ parity(b)
