"""Leading-order behaviour of C3 near the boundary of the quadrilateral domain.

Two layers live here.

* Exact first-order coefficients.  Near ``t = 1`` the side lengths have
  expansions whose first-order coefficients are rational in the chart
  variables, so the first-order coefficient of ``F * abcd`` (and of
  ``F_z * abcd``) can be computed with exact dual numbers at rational points.
  The polynomials ``P3`` and ``P7`` are then rebuilt by exact interpolation
  and checked against further points.  Coefficient tables for the
  triangle degenerations are derived the same way with first-order jets in
  :mod:`cyclicquad.poly`.
* Numeric path checks (:func:`series_check`): the quantity of interest is
  evaluated along a shrinking path ``eps, eps/2, eps/4, ...``, the
  convergence order is fitted from successive differences, and the limit
  (obtained by Richardson extrapolation) is compared with a closed form.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import algebra
from .poly import MultiPoly, build, const, divide_exact, evaluate, parse, substitute, var

# ---------------------------------------------------------------------------
# exact dual numbers


class Dual:
    """``value + eps * e`` with ``e^2 = 0`` over exact rationals."""

    __slots__ = ("value", "eps")

    def __init__(self, value, eps=0):
        self.value = Fraction(value)
        self.eps = Fraction(eps)

    @staticmethod
    def lift(other) -> "Dual":
        return other if isinstance(other, Dual) else Dual(other)

    def __add__(self, other):
        o = Dual.lift(other)
        return Dual(self.value + o.value, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.value, -self.eps)

    def __sub__(self, other):
        return self + (-Dual.lift(other))

    def __rsub__(self, other):
        return Dual.lift(other) - self

    def __mul__(self, other):
        o = Dual.lift(other)
        return Dual(self.value * o.value, self.value * o.eps + self.eps * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Dual.lift(other)
        if o.value == 0:
            raise ZeroDivisionError("dual division by a pure infinitesimal")
        return Dual(self.value / o.value, (self.eps * o.value - self.value * o.eps) / o.value**2)

    def __rtruediv__(self, other):
        return Dual.lift(other) / self

    def __repr__(self):
        return f"Dual({self.value}, {self.eps})"


def sqrt_jet(square: Dual, root) -> Dual:
    """Square root of ``square`` on the branch whose value is ``root`` (which must be exact)."""
    root = Fraction(root)
    if root * root != square.value or root == 0:
        raise ValueError("root does not match the value of the square, or is zero")
    return Dual(root, square.eps / (2 * root))


# ---------------------------------------------------------------------------
# folding case: t = 1 - tau, chamber y > x, u > z


def _folding_sides(x, y, z, u):
    tau = Dual(0, 1)
    t = 1 - tau
    a = sqrt_jet(x * x + y * y - 2 * x * y * t, y - x)
    b = sqrt_jet(u * u + y * y + 2 * u * y * t, u + y)
    c = sqrt_jet(u * u + z * z - 2 * u * z * t, u - z)
    d = sqrt_jet(x * x + z * z + 2 * x * z * t, x + z)
    return t, a, b, c, d


def folding_first_order(x, y, z, u) -> tuple[Fraction, Fraction]:
    """First-order ``tau`` coefficients of ``F*abcd`` and ``F_z*abcd`` at ``t = 1 - tau``.

    Both zeroth-order terms vanish on the chamber ``y > x, u > z``; this is
    asserted.
    """
    x, y, z, u = (Fraction(v) for v in (x, y, z, u))
    if not (y > x > 0 and u > z > 0):
        raise ValueError("folding chamber needs y > x > 0 and u > z > 0")
    t, a, b, c, d = _folding_sides(x, y, z, u)
    p, q = x + u, y + z
    F = a * b * p - b * c * q + c * d * p - d * a * q
    cz = (z - u * t) / c
    dz = (z + x * t) / d
    Fz = -b * cz * q - b * c + (cz * d + c * dz) * p - dz * a * q - d * a
    abcd = a * b * c * d
    G, K = F * abcd, Fz * abcd
    assert G.value == 0 and K.value == 0
    return G.eps, K.eps


def lagrange_basis(name: str, nodes: Sequence[Fraction]) -> list[MultiPoly]:
    v = var(name)
    out = []
    for i, xi in enumerate(nodes):
        L = const(1)
        for j, xj in enumerate(nodes):
            if j != i:
                L = L * (v - xj) / (Fraction(xi) - xj)
        out.append(L)
    return out


def interpolate_grid(fn: Callable[..., Fraction], names: Sequence[str], grids: Sequence[Sequence]) -> MultiPoly:
    """Exact tensor-product interpolation: ``len(grids[i]) - 1`` bounds the degree in ``names[i]``."""
    if not names:
        return const(Fraction(fn()))
    basis = lagrange_basis(names[0], grids[0])
    out = const(0)
    for node, L in zip(grids[0], basis):
        sub = interpolate_grid(lambda *rest, _n=node: fn(_n, *rest), names[1:], grids[1:])
        out = out + sub * L
    return out


def homogenize(p: MultiPoly, name: str, degree: int) -> MultiPoly:
    """Multiply every term by the power of ``name`` that lifts it to ``degree``."""
    h = var(name)
    out = const(0)
    for exps, c in p.terms.items():
        k = degree - sum(exps)
        if k < 0:
            raise ArithmeticError("polynomial exceeds the homogenizing degree")
        mono = const(c)
        for n, e in zip(p.variables, exps):
            mono = mono * var(n) ** e
        out = out + mono * h**k
    return out


def interpolate_homogeneous(
    fn: Callable[..., Fraction],
    degree: int,
    grids: Sequence[Sequence],
    sampler: Callable[[random.Random], tuple],
    seed: int = 0,
    extra: int = 20,
) -> MultiPoly:
    """Rebuild a homogeneous polynomial in ``x, y, z, u`` of known degree.

    The slice ``u = 1`` is interpolated on the tensor grid ``grids`` (one
    node list per ``x, y, z``) and rehomogenized.  The result is confirmed on
    ``extra`` random points drawn by ``sampler``; a mismatch means a degree or
    homogeneity assumption is wrong and raises.
    """
    sliced = interpolate_grid(lambda x, y, z: fn(x, y, z, 1), "xyz", grids)
    poly = homogenize(sliced, "u", degree)
    rng = random.Random(seed)
    for _ in range(extra):
        pt = sampler(rng)
        if evaluate(poly, dict(zip("xyzu", pt))) != fn(*pt):
            raise ArithmeticError("interpolated polynomial fails a confirmation point")
    return poly


def _chamber_sampler(rng: random.Random):
    x = rng.randint(1, 60)
    y = x + rng.randint(1, 60)
    z = rng.randint(1, 60)
    u = z + rng.randint(1, 60)
    return x, y, z, u


# u = 1 slice of the chamber y > x, u > z, with room for degree 7 in each variable
_FOLDING_GRID = (
    [Fraction(k) for k in range(1, 9)],
    [Fraction(k) for k in range(10, 18)],
    [Fraction(1, k) for k in range(2, 10)],
)


X, Y, Z, U = (var(n) for n in "xyzu")


@lru_cache(maxsize=None)
def folding_G1() -> MultiPoly:
    """The tau-coefficient of ``F*abcd`` as a degree-7 polynomial."""
    return interpolate_homogeneous(
        lambda *pt: folding_first_order(*pt)[0], 7, _FOLDING_GRID, _chamber_sampler, seed=1
    )


@lru_cache(maxsize=None)
def folding_K1_scaled() -> MultiPoly:
    """``K1 * (z - u)(x + z)/(x + u)`` where ``K1`` is the tau-coefficient of ``F_z*abcd``."""

    def fn(x, y, z, u):
        return folding_first_order(x, y, z, u)[1] * (z - u) * (x + z) / (x + u)

    return interpolate_homogeneous(fn, 7, _FOLDING_GRID, _chamber_sampler, seed=2)


FOLDING_P3_PREFACTOR = -(X + U) * (Y + Z) * (X * U - Y * Z)


@lru_cache(maxsize=None)
def healed_P3() -> MultiPoly:
    """``P3`` defined by ``F*abcd = -tau (x+u)(y+z)(xu-yz) P3 + O(tau^2)``."""
    return divide_exact(folding_G1(), FOLDING_P3_PREFACTOR)


@lru_cache(maxsize=None)
def healed_P7() -> MultiPoly:
    """``P7`` defined by ``F_z*abcd = -tau (x+u) P7 / ((u-z)(x+z)) + O(tau^2)``."""
    return folding_K1_scaled()


# ---------------------------------------------------------------------------
# triangle degenerations: first-order jets in an infinitesimal ``eps``

EPS = var("eps")


def first_order(p: MultiPoly) -> MultiPoly:
    """Coefficient of ``eps`` in ``p``."""
    return p.coefficients("eps").get(1, const(0))


def reduce_square(p: MultiPoly, name: str, square: MultiPoly) -> MultiPoly:
    """Rewrite ``p`` using ``name^2 = square``; the result is at most linear in ``name``."""
    out = const(0)
    for k, coef in p.coefficients(name).items():
        out = out + coef * square ** (k // 2) * (var(name) if k % 2 else 1)
    return out


@dataclass(frozen=True)
class CoefficientTable:
    """``F ~ alpha*s1 + beta*s2 + gamma*w`` and ``F_z ~ (alpha~ s1 + beta~ s2 + gamma~ w)/scale``.

    ``w`` is the side that vanishes with the two small lengths ``s1, s2``.
    Entries may involve the symbol of the remaining nonsmall side (``c`` or
    ``b``) whose square is the corresponding chart expression.
    """

    alpha: MultiPoly
    beta: MultiPoly
    gamma: MultiPoly
    alpha_t: MultiPoly
    beta_t: MultiPoly
    gamma_t: MultiPoly
    side: str


@lru_cache(maxsize=None)
def table_xy() -> CoefficientTable:
    """``x, y -> 0``.  ``F_z`` is scaled by ``z*c`` to clear the ``1/c`` of ``c_z``."""
    x, y, A = var("X"), var("Y"), var("A")
    z, u, t, c = var("z"), var("u"), var("t"), var("c")
    a = EPS * A
    b = u + EPS * y * t
    d = z + EPS * x * t
    p, q = u + EPS * x, z + EPS * y
    F = a * b * p - b * c * q + c * d * p - d * a * q
    # c*F_z with c*c_z = z - ut and d_z = 1 + O(eps^2)
    cFz = -b * (z - u * t) * q - b * c * c + (z - u * t) * d * p + c * c * p - c * a * q - c * d * a
    c2 = algebra.C2
    F1 = reduce_square(first_order(F), "c", c2)
    K1 = reduce_square(first_order(z * cFz), "c", c2)
    return CoefficientTable(
        F1.coefficient("X", 1),
        F1.coefficient("Y", 1),
        F1.coefficient("A", 1),
        K1.coefficient("X", 1),
        K1.coefficient("Y", 1),
        K1.coefficient("A", 1),
        "c",
    )


@lru_cache(maxsize=None)
def table_xz() -> CoefficientTable:
    """``x, z -> 0``.  ``F_z`` is scaled by ``c*d`` (``~ u*d`` to leading order)."""
    x, z, D = var("X"), var("Z"), var("D")
    y, u, t, b = var("y"), var("u"), var("t"), var("b")
    a = y - EPS * x * t
    c = u - EPS * z * t
    d = EPS * D
    p, q = u + EPS * x, y + EPS * z
    F = a * b * p - b * c * q + c * d * p - d * a * q
    # c*d*F_z with c*c_z = z - ut and d*d_z = z + xt, small quantities scaled by eps
    zz, xx = EPS * z, EPS * x
    cdFz = (
        -b * (zz - u * t) * q * d
        - b * c * c * d
        + (zz - u * t) * d * d * p
        + c * c * (zz + xx * t) * p
        - c * (zz + xx * t) * a * q
        - c * d * d * a
    )
    b2 = algebra.B2
    F1 = reduce_square(first_order(F), "b", b2)
    K1 = reduce_square(first_order(cdFz), "b", b2)
    return CoefficientTable(
        F1.coefficient("X", 1),
        F1.coefficient("Z", 1),
        F1.coefficient("D", 1),
        K1.coefficient("X", 1),
        K1.coefficient("Z", 1),
        K1.coefficient("D", 1),
        "b",
    )


# ---------------------------------------------------------------------------
# numeric path checks


@dataclass
class SeriesCheck:
    """Outcome of evaluating a quantity along ``eps_k = eps0 / 2^k``.

    ``observed_order`` is fitted from the ratios of successive differences and
    ``limit`` is the Richardson extrapolation with that order.  ``ok`` means
    the limit agrees with the claimed closed form to ``tolerance`` (relative
    to ``max(1, |claimed|)``) and the order is within ``slack`` of the
    expected one.
    """

    case: str
    path: str
    claimed: str
    claimed_value: float
    expected_order: float
    observed_order: float | None
    limit: float
    tolerance: float
    ok: bool
    samples: list[tuple[float, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def fitted_order(values: Sequence[float]) -> float | None:
    """Convergence order from the last three values at ``eps0 / 2^k`` (``None`` if undefined)."""
    v = [float(x) for x in values]
    if len(v) < 3:
        raise ValueError("need at least three path values")
    d1, d2 = v[-3] - v[-2], v[-2] - v[-1]
    if d2 == 0 or d1 == 0 or (d1 > 0) != (d2 > 0):
        return None
    return math.log2(d1 / d2)


def richardson(values: Sequence[float], order: float, levels: int = 3) -> float:
    """Repeated Richardson extrapolation removing error terms of order ``order, order+1, ...``."""
    row = [float(x) for x in values]
    for j in range(levels):
        if len(row) < 2:
            break
        f = 2.0 ** (order + j) - 1
        row = [row[k + 1] + (row[k + 1] - row[k]) / f for k in range(len(row) - 1)]
    return row[-1]


def _run_path(case, path, claimed, claimed_value, fn, eps0, steps, expected_order, tol, slack=0.25) -> SeriesCheck:
    eps = [eps0 / 2**k for k in range(steps)]
    vals = [float(fn(e)) for e in eps]
    order = fitted_order(vals)
    limit = richardson(vals, expected_order)
    scale = max(1.0, abs(claimed_value))
    close = abs(limit - claimed_value) <= tol * scale
    if order is None:
        # differences vanish or oscillate at rounding level: the path has converged
        order_ok = abs(vals[-1] - vals[-2]) <= tol * scale
    else:
        order_ok = abs(order - expected_order) <= slack
    return SeriesCheck(case, path, claimed, float(claimed_value), expected_order, order, float(limit), tol,
                       bool(close and order_ok), list(zip(eps, vals)))


def _num(p: MultiPoly, **point) -> float:
    return float(evaluate(p, {k: Fraction(v) for k, v in point.items() if k in p.variables}))


def _check_xu(y=1.3, z=0.7, t=0.2):
    from .numeric import F

    return _run_path("(xu)", f"x = u = eps, y={y}, z={z}, t={t}", "F -> -2yz(y+z)", -2 * y * z * (y + z),
                     lambda e: F(e, y, z, e, t), 1e-2, 10, 1.0, 1e-6)


def _check_zy(x=1.3, u=0.7, t=0.2):
    from .numeric import F

    return _run_path("(zy)", f"y = z = eps, x={x}, u={u}, t={t}", "F -> 2xu(x+u)", 2 * x * u * (x + u),
                     lambda e: F(x, e, e, u, t), 1e-2, 10, 1.0, 1e-6)


def _check_tA(x=1.0, y=2.0, z=0.5, u=1.5):
    from .numeric import F

    lim = -(x + u) * (y + z) * (x * u - y * z) * _num(healed_P3(), x=x, y=y, z=z, u=u)

    def fn(tau):
        from .numeric import sides

        s = sides(x, y, z, u, 1 - tau)
        return F(x, y, z, u, 1 - tau) * s.a * s.b * s.c * s.d / tau

    return _run_path("(t)-A", f"t = 1 - tau, (x,y,z,u)=({x},{y},{z},{u})",
                     "F*abcd/tau -> -(x+u)(y+z)(xu-yz) P3", lim, fn, 1e-3, 10, 1.0, 1e-6)


def _check_tA_z(x=1.0, y=2.0, z=0.5, u=1.5):
    from .numeric import derivatives, sides

    lim = -(x + u) * _num(healed_P7(), x=x, y=y, z=z, u=u) / ((u - z) * (x + z))

    def fn(tau):
        s = sides(x, y, z, u, 1 - tau)
        return derivatives(x, y, z, u, 1 - tau).F_z * s.a * s.b * s.c * s.d / tau

    return _run_path("(t)-A/z", f"t = 1 - tau, (x,y,z,u)=({x},{y},{z},{u})",
                     "F_z*abcd/tau -> -(x+u) P7 / ((u-z)(x+z))", lim, fn, 1e-3, 10, 1.0, 1e-6)


def _check_tB(x=1.2, u=0.8, s0=0.7, v0=0.3):
    Tp = algebra.T()
    lim = 4 * (x + u) ** 2 * (s0 - v0) * (s0 + v0) * (s0 * x + u * v0)

    def fn(e):
        e = Fraction(e)
        pt = dict(x=Fraction(x), y=Fraction(x) + e * Fraction(v0), z=Fraction(u) - e * Fraction(s0), u=Fraction(u), t=1)
        return float(evaluate(Tp, pt) / e**3)

    return _run_path("(t)-B", f"t = 1, y = x + eps*{v0}, z = u - eps*{s0}, x={x}, u={u}",
                     "T/eps^3 -> 4(x+u)^2 (s-v)(s+v)(sx+uv)", lim, fn, 1e-2, 10, 1.0, 1e-6)


def _check_tB_z(s0=0.7, v0=0.3):
    Tz = algebra.T().diff("z")
    lim = -16 * (s0 + v0) * (3 * s0 - v0)

    def fn(e):
        e = Fraction(e)
        pt = dict(x=1, y=1 + e * Fraction(v0), z=1 - e * Fraction(s0), u=1, t=1)
        return float(evaluate(Tz, pt) / e**2)

    return _run_path("(t)-B/z", f"t = 1, x = u = 1, y = 1 + eps*{v0}, z = 1 - eps*{s0}",
                     "T_z/eps^2 -> -16(s+v)(3s-v)", lim, fn, 1e-2, 10, 1.0, 1e-6)


def _table_value(p: MultiPoly, side: str, side_value: float, **point) -> float:
    env = {k: Fraction(v) for k, v in point.items()}
    env[side] = Fraction(side_value)
    return float(evaluate(p, {k: v for k, v in env.items() if k in p.variables}))


def _check_xy(z=0.8, t=0.3, u=1.0):
    """Along ``x = s* y``, ``y = eps``: ``zc F_z / eps`` times its conjugate tends to the quadratic form."""
    from .numeric import derivatives

    tb = table_xy()
    c = math.sqrt(u * u + z * z - 2 * u * z * t)
    s_star = z * (3 * u * u + z * z) / (u * (3 * z * z + u * u))
    al_t, be_t, ga_t = (_table_value(e, "c", c, z=z, u=u, t=t) for e in (tb.alpha_t, tb.beta_t, tb.gamma_t))
    A = math.sqrt(s_star**2 + 1 - 2 * s_star * t)
    conj = s_star * al_t + be_t - A * ga_t
    claimed = 16 * (t * t - 1) * z**6 * (z * z - 2 * t * z + 1) * (3 * z * z - 2 * t * z + 3) / (3 * z * z + 1) ** 2

    def fn(e):
        return derivatives(s_star * e, e, z, u, t).F_z * z * c / e * conj

    return _run_path("(xy)", f"x = s* eps, y = eps, z={z}, u={u}, t={t}",
                     "(zc F_z/eps)(conjugate) -> 16(t^2-1) z^6 (z^2-2tz+1)(3z^2-2tz+3)/(3z^2+1)^2",
                     claimed, fn, 1e-3, 10, 1.0, 1e-6)


def _check_xz(y=0.9, t=0.3, u=1.0, X=0.6, Z=1.1):
    from .numeric import F

    tb = table_xz()
    b = math.sqrt(u * u + y * y + 2 * u * y * t)
    al, be, ga = (_table_value(e, "b", b, y=y, u=u, t=t) for e in (tb.alpha, tb.beta, tb.gamma))
    D = math.sqrt(X * X + Z * Z + 2 * X * Z * t)
    return _run_path("(xz)", f"x = {X} eps, z = {Z} eps, y={y}, u={u}, t={t}", "F/eps -> x alpha + z beta + d gamma",
                     X * al + Z * be + D * ga, lambda e: F(X * e, y, Z * e, u, t) / e, 1e-3, 10, 1.0, 1e-6)


def _check_xz_thin(y=0.9, t=0.3):
    from .numeric import F

    b = math.sqrt(1 + y * y + 2 * y * t)
    claimed = (1 - b) + b * t * y - y * y
    return _run_path("(xz)-thin", f"x = eps^2, z = eps, u = 1, y={y}, t={t}", "F/z -> (1-b) + bty - y^2",
                     claimed, lambda e: F(e * e, y, e, 1.0, t) / e, 1e-3, 10, 1.0, 1e-6)


CATALOGUE: dict[str, Callable[..., SeriesCheck]] = {
    "(xu)": _check_xu,
    "(zy)": _check_zy,
    "(t)-A": _check_tA,
    "(t)-A/z": _check_tA_z,
    "(t)-B": _check_tB,
    "(t)-B/z": _check_tB_z,
    "(xy)": _check_xy,
    "(xz)": _check_xz,
    "(xz)-thin": _check_xz_thin,
}


def series_check(case: str, **params) -> SeriesCheck:
    """Run one catalogue path; keyword arguments override the default base point."""
    if case not in CATALOGUE:
        raise KeyError(f"unknown series case {case!r}; known: {sorted(CATALOGUE)}")
    return CATALOGUE[case](**params)
