"""A one-parameter family of non-convex quadrilaterals on which ``C3`` vanishes.

Take ``A = (-x, 0)``, ``C = (x, 0)``, ``B = (0, y)`` and ``D = (0, -1)`` with
``-1 < y < 0``.  Both B and D lie below the diagonal AC, B inside triangle ACD,
so ABCD is a dart.  With ``a = b = |AB|``, ``c = d = |CD|``, ``p = 2x`` and
``q = 1 + y`` the cubic criterion becomes ``2x(a^2 + d^2) - 2(1 + y) a d``.
Rationalizing gives ``(x^2 - y) P4(x, y)`` up to a constant, with

    P4 = (3x^2 + 4x^4) + (1 + 2x^2) y + (2 + 3x^2) y^2 + y^3,

a quadratic in ``x^2`` with exactly one positive root for each ``y`` in (-1, 0).
The largest ``x`` on the curve sits at ``y = -1/3``, where ``dP4/dy`` has the
factor ``3y + 1``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .geometry import Point, QuadLengths, c3, classify, convexity_margins, lengths_from_points, quad_equation_residual

PRINTED_X = 0.227083
PRINTED_LENGTHS = QuadLengths(1.025459, 1.025459, 0.403334, 0.403334, 0.454167, 0.666667)


def p4(x, y):
    return (3 * x**2 + 4 * x**4) + (1 + 2 * x**2) * y + (2 + 3 * x**2) * y**2 + y**3


def x_on_curve(y: float) -> float:
    """The unique positive ``x`` with ``P4(x, y) = 0``, for ``-1 < y < 0``."""
    if not -1.0 < y < 0.0:
        raise ValueError("y must lie in (-1, 0)")
    # 4 w^2 + (3 + 2y + 3y^2) w + y (1 + y)^2 = 0 with w = x^2; the constant is
    # negative, so the roots have opposite signs.  Use the cancellation-free form.
    b = 3 + 2 * y + 3 * y * y
    c = y * (1 + y) ** 2
    w = -2 * c / (b + math.sqrt(b * b - 16 * c))
    return math.sqrt(w)


def vertices(x: float, y: float) -> tuple[Point, Point, Point, Point]:
    return (-x, 0.0), (0.0, y), (x, 0.0), (0.0, -1.0)


@dataclass
class DartPoint:
    x: float
    y: float
    lengths: QuadLengths
    printed_labels: QuadLengths
    c3: float
    planar_residual: float
    convex: bool
    convexity_margins: tuple[float, float, float, float]

    def to_dict(self) -> dict:
        return asdict(self)


def dart(y: float, x: float | None = None) -> DartPoint:
    x = x_on_curve(y) if x is None else x
    ql = lengths_from_points(*vertices(x, y))
    # vertex order A, D, C, B: the long sides become a and b
    printed = QuadLengths(ql.d, ql.c, ql.b, ql.a, ql.p, ql.q)
    return DartPoint(
        x=x,
        y=y,
        lengths=ql,
        printed_labels=printed,
        c3=c3(ql),
        planar_residual=quad_equation_residual(ql),
        convex=classify(ql).convex,
        convexity_margins=convexity_margins(ql),
    )


def extremal_y() -> float:
    return -1.0 / 3.0


def extremal_x() -> float:
    """Closed form ``sqrt(2 sqrt(3) - 3) / 3`` of the largest ``x`` on the curve."""
    return math.sqrt(2 * math.sqrt(3) - 3) / 3


@dataclass
class AppendixFamily:
    curve: list[tuple[float, float]]
    extremal: DartPoint
    samples: list[DartPoint]
    max_abs_c3: float
    argmax_check: float = field(default=0.0)

    def to_dict(self) -> dict:
        return {
            "curve": [list(pt) for pt in self.curve],
            "extremal": self.extremal.to_dict(),
            "samples": [s.to_dict() for s in self.samples],
            "max_abs_c3": self.max_abs_c3,
            "argmax_check": self.argmax_check,
        }


def appendix_family(resolution: int = 200, n_samples: int = 10) -> AppendixFamily:
    """Trace the zero curve of ``P4`` over ``y`` in (-1, 0) and locate its highest point.

    ``argmax_check`` is the ``y`` of the largest sampled ``x``; it should land
    within one grid step of ``-1/3``.
    """
    ys = np.linspace(-1.0, 0.0, resolution + 2)[1:-1]
    curve = [(float(y), x_on_curve(float(y))) for y in ys]
    best = max(curve, key=lambda pt: pt[1])
    ext = dart(extremal_y(), extremal_x())
    sample_ys = np.linspace(-1.0, 0.0, n_samples + 2)[1:-1]
    samples = [dart(float(y)) for y in sample_ys]
    worst = max(abs(s.c3) / max(s.lengths.scale(), 1e-300) ** 3 for s in samples)
    return AppendixFamily(curve=curve, extremal=ext, samples=samples, max_abs_c3=worst, argmax_check=best[0])
