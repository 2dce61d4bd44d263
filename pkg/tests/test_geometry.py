"""Property tests for the length-level geometry, with the Cartesian embedding as oracle."""

import math

import pytest
from hypothesis import assume, given, strategies as st

from cyclicquad.geometry import (
    DegenerateError,
    DiagParams,
    GeometryError,
    QuadLengths,
    c2,
    c3,
    cayley_menger,
    circumcircle_side,
    circumradius,
    classify,
    convex,
    convexity_margins,
    cyclic_z,
    embed,
    feasible,
    lengths_from_params,
    lengths_from_points,
    quad_equation_residual,
)

length = st.floats(0.05, 20.0)
cosine = st.floats(-0.95, 0.95)
charts = st.builds(DiagParams, length, length, length, length, cosine)


@given(charts)
def test_chart_quadrilaterals_are_convex_and_planar(dp):
    ql = lengths_from_params(dp)
    assert feasible(ql)
    assert convex(ql, tol=1e-7)
    assert abs(quad_equation_residual(ql.normalized())) < 1e-8


@given(charts)
def test_embedding_reproduces_lengths(dp):
    ql = lengths_from_params(dp)
    other = lengths_from_points(*embed(dp))
    for u, v in zip(ql.as_tuple(), other.as_tuple()):
        assert math.isclose(u, v, rel_tol=1e-12)


@given(charts)
def test_ptolemy_inequality(dp):
    n = lengths_from_params(dp).normalized()
    assert c2(n) >= -1e-12


@given(charts)
def test_sign_rule_against_circumcircle(dp):
    ql = lengths_from_params(dp).normalized()
    s = dp.x + dp.y + dp.z + dp.u
    assume(abs(dp.cycl()) > 1e-6 * s * s)
    side = circumcircle_side(*embed(dp), tol=0.0)
    expected = "inside" if dp.cycl() > 0 else "outside"
    assert side == expected
    assert (c3(ql) > 0) == (side == "inside")


@given(length, length, length, cosine)
def test_cyclic_configurations(x, y, u, t):
    z = cyclic_z(x, y, u)
    assume(0.05 <= z <= 50)
    dp = DiagParams(x, y, z, u, t)
    ql = lengths_from_params(dp)
    n = ql.normalized()
    assert abs(c2(n)) < 1e-12 and abs(c3(n)) < 1e-12
    rad = circumradius(ql, dp)
    assert rad.spread <= 1e-8 * rad.radius


@given(charts)
def test_relabeling_keeps_c2_and_flips_nothing_geometric(dp):
    ql = lengths_from_params(dp)
    r = ql.relabeled()
    assert math.isclose(c2(ql), c2(r), rel_tol=1e-9, abs_tol=1e-9)
    assert feasible(r)
    assert abs(quad_equation_residual(r.normalized())) < 1e-8


def test_cayley_menger_is_minus_twice_the_quadratic_form():
    ql = lengths_from_params(DiagParams(1.2, 0.7, 2.0, 0.9, 0.3))
    ql = QuadLengths(*(v * 1.1 for v in ql.as_tuple()))
    bumped = QuadLengths(ql.a, ql.b, ql.c, ql.d, ql.p * 1.01, ql.q)
    assert math.isclose(cayley_menger(bumped), -2 * quad_equation_residual(bumped), rel_tol=1e-9)


def test_square():
    r = math.sqrt(2)
    rep = classify(QuadLengths(1, 1, 1, 1, r, r))
    assert rep.cyclic and rep.d_position == "on"
    assert math.isclose(rep.circumradius, r / 2)


def test_infeasible_and_nonplanar_inputs():
    bad = QuadLengths(1, 1, 1, 1, 3, 0.1)
    assert not feasible(bad)
    assert not classify(bad).cyclic
    with pytest.raises(GeometryError):
        convex(bad)
    warped = QuadLengths(1, 1, 1, 1, 1.2, 1.2)
    assert feasible(warped)
    with pytest.raises(GeometryError):
        convex(warped)
    assert not classify(warped).planar


def test_d_position_reported_for_convex_noncyclic():
    inside = classify(lengths_from_params(DiagParams(2, 1, 3, 2, 0.1)))
    outside = classify(lengths_from_params(DiagParams(2, 1, 5, 2, 0.1)))
    assert inside.d_position == "inside" and outside.d_position == "outside"
    assert not inside.cyclic and not outside.cyclic


@pytest.mark.parametrize("args", [(0, 1, 1, 1, 0), (1, 1, 1, 1, 1), (1, -1, 1, 1, 0), (1, 1, math.nan, 1, 0)])
def test_chart_domain(args):
    with pytest.raises(GeometryError):
        DiagParams(*args)


def test_collinear_triangle_rejected():
    with pytest.raises(DegenerateError):
        circumcircle_side((0, 0), (1, 0), (2, 0), (0, 1))


def test_three_angle_inequalities_admit_a_dart():
    # B inside triangle ACD: BAC < BAD, ABD < ABC and CBD < ABC all hold,
    # only CAD < BAD exposes the reflex angle at B
    x, y = 0.16, -0.09
    ql = lengths_from_points((-x, 0.0), (0.0, y), (x, 0.0), (0.0, -1.0))
    m = convexity_margins(ql)
    assert m[0] > 0 and m[2] > 0 and m[3] > 0
    assert m[1] < 0
    assert not convex(ql)


@given(charts)
def test_all_four_margins_positive_on_charts(dp):
    assert min(convexity_margins(lengths_from_params(dp).normalized())) > 0
