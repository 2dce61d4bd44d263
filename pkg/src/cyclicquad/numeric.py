"""Floating-point evaluation of ``F = C3`` in the diagonal chart and its derivatives.

All functions accept scalars or numpy arrays and broadcast.  Derivatives are
closed-form chain-rule expressions through the side lengths, e.g.
``c_z = (z - u t)/c`` and ``c_zz = (1 - c_z^2)/c``.  The same formulas also
work on :class:`Jet` values (forward-mode gradients), which is how the scans
obtain exact Jacobians of ``(F, F_z, F_zz)`` for Newton's method.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq


class DomainError(ValueError):
    """Chart parameters outside the open domain."""


# ---------------------------------------------------------------------------
# forward-mode jets over numpy arrays


class Jet:
    """Value with a gradient over ``k`` seed directions; ``grad`` has shape ``(k, *val.shape)``."""

    __slots__ = ("val", "grad")
    __array_priority__ = 1000

    def __init__(self, val, grad):
        self.val = np.asarray(val, dtype=float)
        self.grad = np.asarray(grad, dtype=float)

    @classmethod
    def seed(cls, values: list, k: int | None = None) -> list["Jet"]:
        k = len(values) if k is None else k
        out = []
        for i, v in enumerate(values):
            v = np.asarray(v, dtype=float)
            g = np.zeros((k,) + v.shape)
            if i < k:
                g[i] = 1.0
            out.append(cls(v, g))
        return out

    def _lift(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        o = np.asarray(other, dtype=float)
        return Jet(o, np.zeros((self.grad.shape[0],) + np.broadcast(o, self.val).shape))

    def __add__(self, other):
        o = self._lift(other)
        return Jet(self.val + o.val, self.grad + o.grad)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.val, -self.grad)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            o = np.asarray(other, dtype=float)
            return Jet(self.val * o, self.grad * o)
        return Jet(self.val * other.val, self.grad * other.val + other.grad * self.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            o = np.asarray(other, dtype=float)
            return Jet(self.val / o, self.grad / o)
        v = self.val / other.val
        return Jet(v, (self.grad - other.grad * v) / other.val)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def sqrt(self) -> "Jet":
        r = np.sqrt(self.val)
        return Jet(r, self.grad / (2 * r))


def _sqrt(v):
    return v.sqrt() if isinstance(v, Jet) else np.sqrt(v)


# ---------------------------------------------------------------------------
# sides and derivatives


@dataclass
class Sides:
    a: object
    b: object
    c: object
    d: object
    p: object
    q: object


def sides(x, y, z, u, t) -> Sides:
    a = _sqrt(x * x + y * y - 2 * x * y * t)
    b = _sqrt(u * u + y * y + 2 * u * y * t)
    c = _sqrt(u * u + z * z - 2 * u * z * t)
    d = _sqrt(x * x + z * z + 2 * x * z * t)
    return Sides(a, b, c, d, x + u, y + z)


def check_domain(x, y, z, u, t, z_free: bool = False) -> None:
    arrs = [np.asarray(v, dtype=float) for v in (x, y, z, u, t)]
    if not all(np.all(np.isfinite(v)) for v in arrs):
        raise DomainError("parameters must be finite")
    lengths = arrs[:4] if not z_free else [arrs[0], arrs[1], arrs[3]]
    if any(np.any(v <= 0) for v in lengths):
        raise DomainError("lengths x, y, z, u must be positive")
    if z_free and np.any(arrs[2] < 0):
        raise DomainError("z must be nonnegative")
    if np.any(np.abs(arrs[4]) >= 1):
        raise DomainError("t must lie in the open interval (-1, 1)")


def F(x, y, z, u, t):
    s = sides(x, y, z, u, t)
    return s.a * s.b * s.p - s.b * s.c * s.q + s.c * s.d * s.p - s.d * s.a * s.q


def F_of_z(x, y, u, t, z):
    """``F`` as a function of ``z`` with the other parameters fixed; ``z = 0`` allowed."""
    check_domain(x, y, z, u, t, z_free=True)
    return F(x, y, z, u, t)


@dataclass
class Derivatives:
    F: object
    F_x: object
    F_y: object
    F_z: object
    F_u: object
    F_zz: object
    extras: dict = field(default_factory=dict)


def derivatives(x, y, z, u, t) -> Derivatives:
    """``F`` with its first derivatives in the four lengths and ``F_zz``."""
    s = sides(x, y, z, u, t)
    a, b, c, d, p, q = s.a, s.b, s.c, s.d, s.p, s.q
    a_x, a_y = (x - y * t) / a, (y - x * t) / a
    b_y, b_u = (y + u * t) / b, (u + y * t) / b
    c_z, c_u = (z - u * t) / c, (u - z * t) / c
    d_x, d_z = (x + z * t) / d, (z + x * t) / d
    c_zz = (1 - c_z * c_z) / c
    d_zz = (1 - d_z * d_z) / d
    f = a * b * p - b * c * q + c * d * p - d * a * q
    f_x = a_x * b * p + a * b + c * d_x * p + c * d - d_x * a * q - d * a_x * q
    f_y = a_y * b * p + a * b_y * p - b_y * c * q - b * c - d * a_y * q - d * a
    f_z = -b * c_z * q - b * c + (c_z * d + c * d_z) * p - d_z * a * q - d * a
    f_u = a * b_u * p + a * b - (b_u * c + b * c_u) * q + c_u * d * p + c * d
    f_zz = -b * c_zz * q - 2 * b * c_z + (c_zz * d + 2 * c_z * d_z + c * d_zz) * p - d_zz * a * q - 2 * d_z * a
    return Derivatives(f, f_x, f_y, f_z, f_u, f_zz)


# ---------------------------------------------------------------------------
# roots of z -> F


@dataclass
class RootProfile:
    roots: list[float]
    brackets: list[tuple[float, float]]
    expected: float
    z_max: float
    truncated: bool

    @property
    def unique(self) -> bool:
        return len(self.roots) == 1

    def relative_error(self) -> float:
        if not self.roots:
            return float("inf")
        return max(abs(r - self.expected) for r in self.roots) / self.expected


def root_profile(x, y, u, t, z_max: float | None = None, n_grid: int = 400) -> RootProfile:
    """All sign changes of ``z -> F`` on ``(0, z_max]``, refined with Brent's method.

    The grid is logarithmic from ``z_max * 1e-9`` up to ``z_max`` (plus
    ``z = 0``), since the expected root ``xu/y`` can sit anywhere on a wide
    scale.  ``truncated`` is set when ``z_max`` does not exceed ``xu/y``.
    """
    check_domain(x, y, 1.0, u, t)
    expected = x * u / y
    if z_max is None:
        z_max = 100.0 * expected
    if z_max <= 0:
        raise DomainError("z_max must be positive")
    zs = np.concatenate(([0.0], np.geomspace(z_max * 1e-9, z_max, n_grid)))
    vals = F(x, y, zs, u, t)
    roots, brackets = [], []
    scale = max(x, y, u, z_max)
    for i in range(len(zs) - 1):
        v0, v1 = vals[i], vals[i + 1]
        if v0 == 0.0:
            roots.append(float(zs[i]))
            brackets.append((float(zs[i]), float(zs[i])))
            continue
        if v0 * v1 < 0:
            lo, hi = float(zs[i]), float(zs[i + 1])
            r = brentq(lambda z: float(F(x, y, z, u, t)), lo, hi, xtol=1e-15 * scale, rtol=4 * np.finfo(float).eps,
                       maxiter=200)
            roots.append(r)
            brackets.append((lo, hi))
    if vals[-1] == 0.0:
        roots.append(float(zs[-1]))
        brackets.append((float(zs[-1]), float(zs[-1])))
    return RootProfile(roots, brackets, expected, float(z_max), truncated=z_max <= expected)
