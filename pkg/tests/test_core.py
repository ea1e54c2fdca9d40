from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hurwitzdiv.core import (
    AffineExpr,
    ExtSymbol,
    b_sym,
    binomial,
    c_sym,
    format_rational,
    parse_rational,
    substitute,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
)
symbols = st.sampled_from([c_sym(1), c_sym(2), b_sym(1), b_sym(3)])
affines = st.builds(
    AffineExpr,
    rationals,
    st.dictionaries(symbols, rationals, max_size=3),
)


def test_binomial_small_values():
    assert binomial(4, 2) == 6
    assert binomial(6, 3) == 20
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_rule():
    for n in range(1, 61):
        for m in range(n + 1):
            assert binomial(n, m) == binomial(n - 1, m - 1) + binomial(n - 1, m)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a != 0:
        assert a * (1 / a) == 1


def test_parse_and_format():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7/2") == Fraction(-7, 2)
    assert parse_rational("5") == Fraction(5)
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(2) == "2/1"
    with pytest.raises(ValueError):
        parse_rational("x/y")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_format_parse_round_trip():
    for x in (Fraction(0), Fraction(-5, 7), Fraction(22, 11), Fraction(10**30, 7)):
        assert parse_rational(format_rational(x)) == x


def test_ext_symbol_validation():
    assert str(c_sym(2)) == "c_2"
    assert str(b_sym(1)) == "b_1"
    with pytest.raises(ValueError):
        ExtSymbol("x", 1)
    with pytest.raises(ValueError):
        ExtSymbol("c", 0)


def test_affine_drops_zero_terms():
    e = AffineExpr(1, {c_sym(1): 0, b_sym(1): Fraction(1, 2)})
    assert e.terms == {b_sym(1): Fraction(1, 2)}
    assert AffineExpr(0).is_constant()
    assert not AffineExpr(0)


def test_affine_equality_and_hash():
    e1 = AffineExpr(Fraction(1, 2), {c_sym(1): 2})
    e2 = AffineExpr(Fraction(1, 2), {c_sym(1): Fraction(2)})
    assert e1 == e2
    assert hash(e1) == hash(e2)
    assert AffineExpr(3) == 3
    assert e1 != AffineExpr(Fraction(1, 2))


def test_affine_product_rules():
    symbolic = AffineExpr(1, {c_sym(1): 1})
    assert symbolic * 2 == AffineExpr(2, {c_sym(1): 2})
    assert Fraction(1, 3) * symbolic == AffineExpr(Fraction(1, 3), {c_sym(1): Fraction(1, 3)})
    with pytest.raises(ValueError):
        symbolic * AffineExpr(0, {b_sym(1): 1})
    with pytest.raises(ValueError):
        symbolic.constant_value()
    with pytest.raises(ZeroDivisionError):
        symbolic / 0


def test_substitute_examples():
    e = AffineExpr(3, {c_sym(1): 2})
    assert substitute(e, {c_sym(1): Fraction(1, 2)}) == AffineExpr(4)
    assert substitute(AffineExpr(5), {}) == AffineExpr(5)
    partial = AffineExpr(0, {c_sym(1): 1, b_sym(1): 1})
    assert substitute(partial, {c_sym(1): 0}) == AffineExpr(0, {b_sym(1): 1})


def test_substitute_full_substitution_is_constant():
    e = AffineExpr(Fraction(1, 7), {c_sym(1): 2, b_sym(1): Fraction(-3, 5)})
    out = substitute(e, {c_sym(1): Fraction(1, 2), b_sym(1): 5})
    assert out.is_constant()
    assert out.constant_value() == Fraction(1, 7) + 1 - 3


@given(affines, affines, rationals, st.dictionaries(symbols, rationals, max_size=4))
def test_substitute_is_linear(e1, e2, a, values):
    left = substitute(a * e1 + e2, values)
    right = a * substitute(e1, values) + substitute(e2, values)
    assert left == right


def test_affine_text_rendering():
    assert str(AffineExpr(Fraction(5))) == "5/1"
    e = AffineExpr(Fraction(1, 5), {c_sym(1): Fraction(1, 4), b_sym(1): Fraction(-3, 10)})
    assert str(e) == "1/5 + 1/4*c_1 - 3/10*b_1"
    pure = AffineExpr(0, {b_sym(2): Fraction(-1, 2)})
    assert str(pure) == "-1/2*b_2"
