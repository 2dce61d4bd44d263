"""Boundary expansions: exact jets, interpolation, and the numeric path catalogue."""

import math
from fractions import Fraction

import pytest

from cyclicquad import series as S
from cyclicquad.numeric import F
from cyclicquad.poly import evaluate, is_homogeneous, parse, substitute, var
from cyclicquad.printed import get as printed

X, Y, Z, U = (var(n) for n in "xyzu")


def test_dual_arithmetic_and_sqrt_jet():
    e = S.Dual(0, 1)
    v = (3 + 2 * e) * (1 - e) / (2 + e)
    # (3 - e)(1/2 - e/4) = 3/2 - 3e/4 - e/2
    assert v.value == Fraction(3, 2) and v.eps == Fraction(-5, 4)
    r = S.sqrt_jet(S.Dual(9, 6), 3)
    assert (r.value, r.eps) == (3, 1)
    with pytest.raises(ValueError):
        S.sqrt_jet(S.Dual(8, 1), 3)


def test_interpolation_recovers_a_known_polynomial():
    target = parse("x^2*y - 3*y*z*u + u^3 + x*z^2")
    grids = [[Fraction(k) for k in range(1, 5)]] * 3

    def fn(*pt):
        return evaluate(target, dict(zip("xyzu", pt)))

    got = S.interpolate_homogeneous(fn, 3, grids, lambda rng: tuple(rng.randint(1, 9) for _ in range(4)))
    assert got == target


def test_interpolation_detects_wrong_degree():
    target = parse("x^2*y + u^3")
    grids = [[Fraction(k) for k in range(1, 5)]] * 3
    with pytest.raises(ArithmeticError):
        S.interpolate_homogeneous(lambda *pt: evaluate(target, dict(zip("xyzu", pt))), 4, grids,
                                  lambda rng: tuple(rng.randint(1, 9) for _ in range(4)))


def test_folding_first_order_against_floats():
    x, y, z, u = 1, 3, Fraction(1, 2), 2
    G1, _ = S.folding_first_order(x, y, z, u)
    tau = 1e-6
    fx, fy, fz, fu = (float(v) for v in (x, y, z, u))
    a, b = math.sqrt(fx**2 + fy**2 - 2 * fx * fy * (1 - tau)), math.sqrt(fu**2 + fy**2 + 2 * fu * fy * (1 - tau))
    c, d = math.sqrt(fu**2 + fz**2 - 2 * fu * fz * (1 - tau)), math.sqrt(fx**2 + fz**2 + 2 * fx * fz * (1 - tau))
    val = float(F(fx, fy, fz, fu, 1 - tau)) * a * b * c * d / tau
    assert math.isclose(val, float(G1), rel_tol=1e-4)


def test_folding_chamber_enforced():
    with pytest.raises(ValueError):
        S.folding_first_order(2, 1, 1, 2)


def test_healed_P3_spot_values():
    P3 = S.healed_P3()
    assert is_homogeneous(P3) and P3.degree() == 3
    assert substitute(P3, "x", 0) == Y * Z * (Z - Y - 3 * U)
    assert substitute(P3, "x", Y) == Y * (Z - U) * (U + 2 * Y + Z)


def test_healed_P3_is_the_printed_reading():
    assert S.healed_P3() == printed("P3_READING")


def test_healed_P7_specialization():
    P7 = S.healed_P7()
    lhs = substitute(P7, {"x": Y * Z, "u": 1})
    assert lhs.constant_ratio(4 * (Y * (Y + 1) * Z * (Z - 1)) ** 2 * (Y + Z)) is not None


def test_table_xy_against_floats():
    tab = S.table_xy()
    z, u, t, Xs, Ys = 1.3, 0.8, 0.35, 0.7, 1.1
    c = math.sqrt(u * u + z * z - 2 * u * z * t)
    A = math.sqrt(Xs**2 + Ys**2 - 2 * Xs * Ys * t)
    env = {"z": z, "u": u, "t": t, "c": c}

    def ev(p):
        return float(evaluate(p, {k: v for k, v in env.items() if k in p.variables}))

    lin = ev(tab.alpha) * Xs + ev(tab.beta) * Ys + ev(tab.gamma) * A
    eps = 1e-7
    assert math.isclose(float(F(eps * Xs, eps * Ys, z, u, t)) / eps, lin, rel_tol=1e-5)


def test_richardson_and_order():
    vals = [2 + 0.1 * 0.5**k + 0.3 * 0.25**k for k in range(14)]
    assert math.isclose(S.richardson(vals, 1.0), 2.0, abs_tol=1e-12)
    assert abs(S.fitted_order(vals) - 1) < 0.05
    assert S.fitted_order([1.0, 1.0, 1.0]) is None
    with pytest.raises(ValueError):
        S.fitted_order([1.0, 2.0])


@pytest.mark.parametrize("case", sorted(S.CATALOGUE))
def test_catalogue_paths(case):
    res = S.series_check(case)
    assert res.ok, res.to_dict()


def test_collapse_path_at_small_eps():
    y, z, t = 1.3, 0.7, 0.2
    val = float(F(1e-4, y, z, 1e-4, t))
    assert abs(val + 2 * y * z * (y + z)) < 1e-3


def test_unknown_case():
    with pytest.raises(KeyError):
        S.series_check("(nope)")
