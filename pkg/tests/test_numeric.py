"""Floating-point F, its closed-form derivatives, and the root profile in z."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclicquad.geometry import DiagParams, c3, lengths_from_params
from cyclicquad.numeric import DomainError, F, F_of_z, Jet, derivatives, root_profile

length = st.floats(0.1, 10.0)
cosine = st.floats(-0.9, 0.9)


@given(length, length, length, length, cosine)
def test_F_is_c3_of_the_chart(x, y, z, u, t):
    ql = lengths_from_params(DiagParams(x, y, z, u, t))
    assert math.isclose(float(F(x, y, z, u, t)), c3(ql), rel_tol=1e-9, abs_tol=1e-9 * (x + y + z + u) ** 3)


@given(length, length, length, length, cosine)
def test_derivatives_agree_with_central_differences(x, y, z, u, t):
    d = derivatives(x, y, z, u, t)
    scale = x + y + z + u
    h = 1e-6 * scale
    fd = {
        "F_x": (F(x + h, y, z, u, t) - F(x - h, y, z, u, t)) / (2 * h),
        "F_y": (F(x, y + h, z, u, t) - F(x, y - h, z, u, t)) / (2 * h),
        "F_z": (F(x, y, z + h, u, t) - F(x, y, z - h, u, t)) / (2 * h),
        "F_u": (F(x, y, z, u + h, t) - F(x, y, z, u - h, t)) / (2 * h),
    }
    for name, approx in fd.items():
        assert abs(getattr(d, name) - approx) <= 1e-6 * scale**2
    # second differences lose half the digits; step on the scale of the shortest length
    h2 = 1e-3 * min(x, y, z, u)
    fzz = (F(x, y, z + h2, u, t) - 2 * F(x, y, z, u, t) + F(x, y, z - h2, u, t)) / h2**2
    assert abs(d.F_zz - fzz) <= 1e-4 * (abs(d.F_zz) + scale)


@given(length, length, length, length, cosine)
def test_euler_homogeneity(x, y, z, u, t):
    d = derivatives(x, y, z, u, t)
    lhs = x * d.F_x + y * d.F_y + z * d.F_z + u * d.F_u
    assert abs(lhs - 3 * d.F) <= 1e-9 * (x + y + z + u) ** 3


def test_jets_give_exact_gradient():
    x, y, z = Jet.seed([np.array([1.3]), np.array([0.7]), np.array([2.1])])
    val = F(x, y, z, 1.0, 0.25)
    d = derivatives(1.3, 0.7, 2.1, 1.0, 0.25)
    assert np.allclose(val.grad[:, 0], [d.F_x, d.F_y, d.F_z], rtol=1e-12)


def test_jet_arithmetic():
    (a,) = Jet.seed([2.0])
    r = (1 / a + a * a - 3) / a
    # d/da [(1/a + a^2 - 3)/a] = -2/a^3 + 1 + 3/a^2 at a = 2
    assert math.isclose(float(r.grad[0]), -2 / 8 + 1 + 3 / 4)
    assert math.isclose(float(a.sqrt().grad[0]), 1 / (2 * math.sqrt(2)))


@given(length, length, length, cosine)
def test_single_root_at_intersecting_chords_point(x, y, u, t):
    prof = root_profile(x, y, u, t)
    assert prof.unique
    assert prof.relative_error() < 1e-9
    assert not prof.truncated


def test_root_profile_truncation_flag():
    prof = root_profile(1.0, 1.0, 1.0, 0.0, z_max=0.5)
    assert prof.truncated and not prof.roots


def test_wall_value_at_z_zero():
    # at z = 0 the quadrilateral degenerates to a triangle and F stays positive
    assert F_of_z(1.0, 1.0, 1.0, 0.3, 0.0) > 0


@pytest.mark.parametrize("args", [(0, 1, 1, 0), (1, 1, 1, 1.0), (1, -2, 1, 0), (1, 1, math.inf, 0)])
def test_domain_errors(args):
    with pytest.raises(DomainError):
        root_profile(*args)


def test_z_must_be_nonnegative():
    with pytest.raises(DomainError):
        F_of_z(1, 1, 1, 0.0, -0.1)
