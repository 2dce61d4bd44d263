"""Exact polynomial arithmetic, checked against sympy as an independent oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclicquad.poly import (
    NotDivisible,
    PolyError,
    build,
    const,
    divide_exact,
    evaluate,
    is_homogeneous,
    parse,
    resultant,
    structure,
    substitute,
    substitute_fraction,
    to_string,
    var,
    weighted_truncation,
)

sympy = pytest.importorskip("sympy")
sx, sy, sz = sympy.symbols("x y z")

NAMES = ("x", "y", "z")
coeffs = st.integers(-9, 9) | st.fractions(min_value=-5, max_value=5, max_denominator=7)
exps = st.tuples(*(st.integers(0, 3) for _ in NAMES))
polys = st.dictionaries(exps, coeffs, max_size=6).map(lambda d: build(NAMES, d))
points = st.tuples(*(st.fractions(min_value=-3, max_value=3, max_denominator=5) for _ in NAMES))


def to_sympy(p):
    return sympy.sympify(to_string(p).replace("^", "**"), locals={"x": sx, "y": sy, "z": sz})


def same(p, expr):
    return sympy.expand(to_sympy(p) - expr) == 0


@given(polys, polys)
def test_sum_and_product_match_sympy(p, q):
    assert same(p + q, to_sympy(p) + to_sympy(q))
    assert same(p * q, sympy.expand(to_sympy(p) * to_sympy(q)))
    assert same(p - q, to_sympy(p) - to_sympy(q))


@given(polys)
def test_string_round_trip(p):
    assert parse(to_string(p)) == p


@given(polys, points)
def test_evaluate_matches_sympy(p, pt):
    env = dict(zip((sx, sy, sz), pt))
    expected = sympy.Rational(to_sympy(p).subs(env))
    got = evaluate(p, dict(zip(NAMES, pt)))
    assert Fraction(got) == Fraction(int(expected.p), int(expected.q))


@given(polys, polys)
def test_divide_exact_recovers_factor(p, q):
    if q.is_zero():
        return
    assert divide_exact(p * q, q) == p


def test_divide_exact_rejects_remainder():
    with pytest.raises(NotDivisible):
        divide_exact(parse("x^2 + 1"), parse("x - 1"))


@given(polys, polys)
def test_resultant_matches_sympy(p, q):
    if p.degree("x") < 1 or q.degree("x") < 1:
        return
    expected = sympy.resultant(to_sympy(p), to_sympy(q), sx)
    assert same(resultant(p, q, "x"), sympy.expand(expected))


def test_resultant_of_linear_forms():
    # Res_x(x - a, x - b) = a - b up to the Sylvester sign convention
    r = resultant(parse("x - y"), parse("x - z"), "x")
    assert r.constant_ratio(parse("y - z")) in (1, -1)


def test_substitute_and_fraction_substitution():
    p = parse("x^2*y + 3*x - y")
    assert substitute(p, "x", parse("y + 1")) == parse("(y + 1)^2*y + 3*(y + 1) - y")
    # den^deg * p(num/den) with deg = degree in x (2)
    got = substitute_fraction(p, "x", parse("z"), parse("y"))
    assert got == parse("z^2*y + 3*z*y - y^3")


def test_structure_and_homogeneity():
    p = parse("x^2*y - 4*y^3 + x*y*z")
    s = structure(p)
    assert s.term_count == 3 and s.total_degree == 3
    assert is_homogeneous(p)
    assert not is_homogeneous(p + var("x"))
    # weights x:1, y:2, z:1 -> lowest weighted part is x^2*y and x*y*z (weight 4)
    assert weighted_truncation(p, {"x": 1, "y": 2, "z": 1}) == parse("x^2*y + x*y*z")


def test_coefficients_and_degree():
    p = parse("3*x^2*t^2 - x*t + 5")
    assert p.degree("t") == 2 and p.degree() == 4
    assert p.coefficient("t", 1) == parse("-x")
    assert set(p.coefficients("t")) == {0, 1, 2}
    assert const(0).degree() == -1


def test_primitive_normalization():
    p = parse("6*x - 4/3*y")
    prim = p.primitive()
    assert prim == parse("9*x - 2*y")
    assert (-p).primitive() == prim


@pytest.mark.parametrize("bad", ["x^y", "x / y", "1.5*x", "x +"])
def test_parse_rejects(bad):
    with pytest.raises(PolyError):
        parse(bad)
