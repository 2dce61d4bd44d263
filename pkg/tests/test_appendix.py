"""The non-convex dart family on which C3 vanishes."""

import math

import pytest
from hypothesis import given, strategies as st

from cyclicquad import appendix as app
from cyclicquad.geometry import c3, classify, convex, feasible


@given(st.floats(-0.999, -0.001))
def test_curve_points_zero_P4_and_C3(y):
    x = app.x_on_curve(y)
    assert x > 0
    assert abs(app.p4(x, y)) < 1e-12
    pt = app.dart(y)
    assert abs(pt.c3) < 1e-12
    assert not pt.convex


def test_family_is_non_convex_and_planar():
    fam = app.appendix_family(resolution=50)
    assert len(fam.curve) == 50 and len(fam.samples) == 10
    assert fam.max_abs_c3 < 1e-9
    for s in fam.samples:
        assert feasible(s.lengths)
        assert abs(s.planar_residual) < 1e-12
        assert min(s.convexity_margins) < 0
        assert not convex(s.lengths)


def test_extremal_point():
    x = app.extremal_x()
    assert math.isclose(x * x, (2 * math.sqrt(3) - 3) / 9)
    # dP4/dy = (3y + 1)(y + 2x^2 + 1) vanishes at y = -1/3
    y = app.extremal_y()
    assert abs(app.p4(x, y)) < 1e-15
    fam = app.appendix_family(resolution=600)
    assert abs(fam.argmax_check - y) < 2 / 600
    assert all(px <= x + 1e-15 for _, px in fam.curve)


def test_printed_labels_swap_short_and_long_sides():
    pt = app.dart(app.extremal_y(), app.extremal_x())
    own, printed = pt.lengths, pt.printed_labels
    assert own.a == own.b < own.c == own.d
    assert (printed.a, printed.c) == (own.d, own.b)
    assert math.isclose(c3(printed), c3(own), abs_tol=1e-15)
    for got, want in zip(printed.as_tuple(), app.PRINTED_LENGTHS.as_tuple()):
        assert abs(got - want) < 1e-5


def test_printed_six_digit_lengths_classify_as_noncyclic():
    rep = classify(app.PRINTED_LENGTHS, tol=1e-6)
    assert rep.feasible and not rep.convex and not rep.cyclic
    assert abs(rep.c3_value) < 1e-6


def test_curve_domain():
    with pytest.raises(ValueError):
        app.x_on_curve(0.2)
