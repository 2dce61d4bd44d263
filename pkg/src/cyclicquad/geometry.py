"""Floating-point geometry of quadrilaterals ABCD.

Labels: ``AB = a, BC = b, CD = c, DA = d`` for the sides and ``AC = p, BD = q``
for the diagonals.  Convex quadrilaterals are charted by the diagonal
intersection O: ``OA = x, OB = y, OD = z, OC = u`` and ``t = cos(AOB)``.

Tolerances are absolute and apply after rescaling to ``a+b+c+d+p+q = 6``; a
quantity homogeneous of degree k is compared against ``tol`` in those units.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Literal

Position = Literal["inside", "on", "outside"]

DEFAULT_TOL = 1e-9


class GeometryError(ValueError):
    """Input outside the domain of a geometric operation."""


class DegenerateError(GeometryError):
    """Collinear or coincident points where a proper triangle is required."""


@dataclass(frozen=True)
class QuadLengths:
    a: float
    b: float
    c: float
    d: float
    p: float
    q: float

    def as_tuple(self) -> tuple[float, ...]:
        return (self.a, self.b, self.c, self.d, self.p, self.q)

    def scale(self) -> float:
        """Mean length; dividing by it normalizes to ``a+b+c+d+p+q = 6``."""
        return sum(self.as_tuple()) / 6.0

    def normalized(self) -> "QuadLengths":
        s = self.scale()
        if not s > 0:
            raise GeometryError("lengths sum to zero")
        return QuadLengths(*(v / s for v in self.as_tuple()))

    def relabeled(self) -> "QuadLengths":
        """Same quadrilateral with vertices renamed A->B->C->D->A (so new A is old D)."""
        return QuadLengths(self.d, self.a, self.b, self.c, self.q, self.p)


@dataclass(frozen=True)
class DiagParams:
    x: float
    y: float
    z: float
    u: float
    t: float

    def __post_init__(self):
        check_params(self.x, self.y, self.z, self.u, self.t)

    def cycl(self) -> float:
        return self.x * self.u - self.y * self.z


def check_params(x, y, z, u, t) -> None:
    vals = (x, y, z, u, t)
    if not all(math.isfinite(v) for v in vals):
        raise GeometryError("parameters must be finite")
    if min(x, y, z, u) <= 0:
        raise GeometryError("x, y, z, u must be positive")
    if not -1 < t < 1:
        raise GeometryError("t must lie in the open interval (-1, 1)")


def lengths_from_params(dp: DiagParams) -> QuadLengths:
    x, y, z, u, t = dp.x, dp.y, dp.z, dp.u, dp.t
    a = math.sqrt(x * x + y * y - 2 * x * y * t)
    b = math.sqrt(u * u + y * y + 2 * u * y * t)
    c = math.sqrt(u * u + z * z - 2 * u * z * t)
    d = math.sqrt(x * x + z * z + 2 * x * z * t)
    return QuadLengths(a, b, c, d, x + u, y + z)


def c2(ql: QuadLengths) -> float:
    """Ptolemy expression ``ac + bd - pq``."""
    return ql.a * ql.c + ql.b * ql.d - ql.p * ql.q


def c3(ql: QuadLengths) -> float:
    """Cubic expression ``abp - bcq + cdp - daq``."""
    a, b, c, d, p, q = ql.as_tuple()
    return a * b * p - b * c * q + c * d * p - d * a * q


def cayley_menger(ql: QuadLengths) -> float:
    """The bordered 5x5 determinant of squared lengths.

    It equals ``288 V^2`` for the tetrahedron with these edge lengths (so a
    regular unit tetrahedron gives 4), and vanishes for planar configurations.
    """
    import numpy as np

    a, b, c, d, p, q = (v * v for v in ql.as_tuple())
    m = np.array(
        [
            [0, 1, 1, 1, 1],
            [1, 0, a, p, d],
            [1, a, 0, b, q],
            [1, p, b, 0, c],
            [1, d, q, c, 0],
        ],
        dtype=float,
    )
    return float(np.linalg.det(m))


def quad_equation_residual(ql: QuadLengths) -> float:
    """The explicit 22-term planarity polynomial; equals ``-cayley_menger / 2``."""
    a, b, c, d, p, q = ql.as_tuple()
    pos = (
        a**4 * c**2 + a**2 * c**4 + b**4 * d**2 + b**2 * d**4 + p**4 * q**2 + p**2 * q**4
        + (a * b * p) ** 2 + (b * c * q) ** 2 + (c * d * p) ** 2 + (d * a * q) ** 2
    )
    neg = (
        (a * b * c) ** 2 + (a * b * d) ** 2 + (a * c * d) ** 2 + (a * c * p) ** 2
        + (a * c * q) ** 2 + (a * p * q) ** 2 + (b * c * d) ** 2 + (b * d * p) ** 2
        + (b * d * q) ** 2 + (b * p * q) ** 2 + (c * p * q) ** 2 + (d * p * q) ** 2
    )
    return pos - neg


def feasible(ql: QuadLengths) -> bool:
    """Positivity and the four strict triangle-inequality chains."""
    a, b, c, d, p, q = ql.as_tuple()
    if min(a, b, c, d, p, q) <= 0:
        return False
    return (
        abs(a - b) < p < a + b
        and abs(c - d) < p < c + d
        and abs(b - c) < q < b + c
        and abs(a - d) < q < a + d
    )


def convexity_margins(ql: QuadLengths) -> tuple[float, float, float, float]:
    """Margins of the four angle inequalities characterizing convexity (all > 0 iff convex).

    In order: ``BAC < BAD``, ``CAD < BAD``, ``ABD < ABC`` and ``CBD < ABC``,
    each rewritten with the law of cosines and cleared of denominators.  The
    first two hold exactly when B and D lie on opposite sides of AC, the last
    two when A and C lie on opposite sides of BD.  The second one cannot be
    dropped: darts with a reflex angle at B satisfy the other three (see
    :mod:`cyclicquad.appendix`).
    """
    a, b, c, d, p, q = ql.as_tuple()
    cos_bad = a * a + d * d - q * q  # 2ad cos(BAD)
    cos_abc = a * a + b * b - p * p  # 2ab cos(ABC)
    return (
        d * (a * a + p * p - b * b) - p * cos_bad,
        a * (d * d + p * p - c * c) - p * cos_bad,
        a * (b * b + q * q - c * c) - q * cos_abc,
        b * (a * a + q * q - d * d) - q * cos_abc,
    )


def is_planar(ql: QuadLengths, tol: float = DEFAULT_TOL) -> bool:
    return abs(quad_equation_residual(ql.normalized())) < tol


def convex(ql: QuadLengths, tol: float = DEFAULT_TOL) -> bool:
    if not feasible(ql):
        raise GeometryError("lengths violate the triangle inequalities")
    if not is_planar(ql, tol):
        raise GeometryError("lengths do not describe a planar quadrilateral")
    return min(convexity_margins(ql)) > 0


# -- Cartesian oracle ---------------------------------------------------------------

Point = tuple[float, float]


def embed(dp: DiagParams) -> tuple[Point, Point, Point, Point]:
    """Place O at the origin, A and C on the first axis and B above it, with ``cos(AOB) = t``."""
    check_params(dp.x, dp.y, dp.z, dp.u, dp.t)
    s = math.sqrt(1.0 - dp.t * dp.t)
    A = (-dp.x, 0.0)
    C = (dp.u, 0.0)
    B = (-dp.y * dp.t, dp.y * s)
    D = (dp.z * dp.t, -dp.z * s)
    return A, B, C, D


def dist(P1: Point, P2: Point) -> float:
    return math.hypot(P1[0] - P2[0], P1[1] - P2[1])


def lengths_from_points(A: Point, B: Point, C: Point, D: Point) -> QuadLengths:
    return QuadLengths(dist(A, B), dist(B, C), dist(C, D), dist(D, A), dist(A, C), dist(B, D))


def orient(A: Point, B: Point, C: Point) -> float:
    return (B[0] - A[0]) * (C[1] - A[1]) - (B[1] - A[1]) * (C[0] - A[0])


def incircle(A: Point, B: Point, C: Point, D: Point) -> float:
    """In-circle determinant; positive when D is inside circle ABC for counterclockwise ABC."""
    adx, ady = A[0] - D[0], A[1] - D[1]
    bdx, bdy = B[0] - D[0], B[1] - D[1]
    cdx, cdy = C[0] - D[0], C[1] - D[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (
        alift * (bdx * cdy - cdx * bdy)
        + blift * (cdx * ady - adx * cdy)
        + clift * (adx * bdy - bdx * ady)
    )


def circumcircle_side(A: Point, B: Point, C: Point, D: Point, tol: float = DEFAULT_TOL) -> Position:
    """Position of D relative to the circle through A, B, C (independent of their order)."""
    pts = (A, B, C, D)
    scale = max(max(abs(v) for v in P_) for P_ in pts) or 1.0
    A, B, C, D = (tuple(v / scale for v in P_) for P_ in pts)
    o = orient(A, B, C)
    if abs(o) <= tol:
        raise DegenerateError("A, B, C are collinear")
    v = incircle(A, B, C, D) * math.copysign(1.0, o)
    if abs(v) <= tol:
        return "on"
    return "inside" if v > 0 else "outside"


def triangle_area(A: Point, B: Point, C: Point) -> float:
    return abs(orient(A, B, C)) / 2.0


def cyclic_z(x: float, y: float, u: float) -> float:
    """The OD length putting D on circle ABC (intersecting chords: ``xu = yz``)."""
    if min(x, y, u) <= 0:
        raise GeometryError("x, y, u must be positive")
    return x * u / y


@dataclass(frozen=True)
class Circumradius:
    radius: float
    estimates: tuple[float, float, float, float]
    spread: float


def circumradius(ql: QuadLengths, dp: DiagParams, tol: float = 1e-9) -> Circumradius:
    """Circumradius from the four triangles ``abp/4S_ABC``, ``bcq/4S_BCD``, ``cdp/4S_CDA``, ``daq/4S_DAB``."""
    scale = dp.x + dp.y + dp.z + dp.u
    if abs(dp.cycl()) > tol * scale * scale:
        raise GeometryError("configuration is not cyclic")
    A, B, C, D = embed(dp)
    a, b, c, d, p, q = ql.as_tuple()
    est = (
        a * b * p / (4 * triangle_area(A, B, C)),
        b * c * q / (4 * triangle_area(B, C, D)),
        c * d * p / (4 * triangle_area(C, D, A)),
        d * a * q / (4 * triangle_area(D, A, B)),
    )
    return Circumradius(sum(est) / 4, est, max(est) - min(est))


# -- classification -------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    planar_residual: float
    feasible: bool
    planar: bool
    convex: bool
    marginal: bool
    c2_value: float
    c3_value: float
    cyclic: bool
    d_position: Position | None
    circumradius: float | None

    def to_dict(self) -> dict:
        return asdict(self)


def classify(ql: QuadLengths, tol: float = DEFAULT_TOL, margin: float = 1e-7) -> ClassificationReport:
    """Classify a length 6-tuple.

    ``cyclic`` follows the Ptolemy test (feasible, planar, convex, ``|C2|`` below
    tolerance); ``d_position`` follows the sign of C3 and is only reported for
    convex inputs.  Convexity is evaluated for every feasible input so that a
    slightly rounded 6-tuple still gets a verdict; ``planar`` is reported apart.  Convexity margins inside ``margin`` set ``marginal``.
    Values are reported in the caller's units; the tests use normalized ones.
    """
    n = ql.normalized() if ql.scale() > 0 else ql
    residual = quad_equation_residual(n)
    is_feasible = feasible(ql)
    planar = abs(residual) < tol
    c2v, c3v = c2(n), c3(n)
    is_convex = False
    marginal = False
    if is_feasible:
        margins = convexity_margins(n)
        is_convex = min(margins) > 0
        marginal = min(abs(m) for m in margins) < margin
    cyclic = is_feasible and planar and is_convex and abs(c2v) < tol
    position: Position | None = None
    radius = None
    if is_convex and planar:
        if cyclic or abs(c3v) < tol:
            position = "on"
        else:
            position = "inside" if c3v > 0 else "outside"
        if cyclic:
            a, b, p = ql.a, ql.b, ql.p
            s = (a + b + p) / 2
            area = math.sqrt(max(s * (s - a) * (s - b) * (s - p), 0.0))
            radius = a * b * p / (4 * area) if area > 0 else None
    s = ql.scale()
    return ClassificationReport(
        planar_residual=residual,
        feasible=is_feasible,
        planar=planar,
        convex=is_convex,
        marginal=marginal,
        c2_value=c2v * s**2,
        c3_value=c3v * s**3,
        cyclic=cyclic,
        d_position=position,
        circumradius=radius,
    )
