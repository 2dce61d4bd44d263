"""Symbolic objects of the cyclicity proof, built with :mod:`cyclicquad.poly`.

Everything here is a pure function of no arguments (or of small keys) and is
cached: the resultant pipeline is expensive and several identities share the
same intermediates, so one shared definition of ``T``, ``R~_x`` etc. is used
throughout.

Conventions
-----------
* Chart variables ``x, y, z, u, t``: ``OA = x, OB = y, OD = z, OC = u`` and
  ``t`` the cosine of the angle AOB.
* ``lam`` stands for the product ``abcd`` treated as an independent symbol.
* Resultants use :func:`cyclicquad.poly.resultant` (p-block rows first).
  Quotients after removing known factors are normalized with
  :meth:`MultiPoly.primitive` (coprime integer coefficients, positive
  lexicographic leading coefficient).
"""

from __future__ import annotations

from functools import lru_cache

from .poly import (
    MultiPoly,
    const,
    determinant,
    divide_exact,
    parse,
    resultant,
    substitute,
    var,
)

X, Y, Z, U, T_, LAM = (var(n) for n in ("x", "y", "z", "u", "t", "lam"))

# side name -> (squared length in the chart, the two chart variables it involves)
SIDES = {
    "a": (X**2 + Y**2 - 2 * X * Y * T_, ("x", "y")),
    "b": (U**2 + Y**2 + 2 * U * Y * T_, ("u", "y")),
    "c": (U**2 + Z**2 - 2 * U * Z * T_, ("u", "z")),
    "d": (X**2 + Z**2 + 2 * X * Z * T_, ("x", "z")),
}
P = X + U
Q = Y + Z
CYCL = X * U - Y * Z


def sq(side: str) -> MultiPoly:
    return SIDES[side][0]


A2, B2, C2, D2 = (sq(s) for s in "abcd")


# -- Cayley-Menger and the quadrilateral equation ----------------------------------


def cayley_menger_matrix(a2, b2, c2, d2, p2, q2):
    return [
        [0, 1, 1, 1, 1],
        [1, 0, a2, p2, d2],
        [1, a2, 0, b2, q2],
        [1, p2, b2, 0, c2],
        [1, d2, q2, c2, 0],
    ]


@lru_cache(maxsize=None)
def cayley_menger_symbolic() -> MultiPoly:
    """The bordered 5x5 determinant as a polynomial in the six lengths a..q."""
    a, b, c, d, p, q = (var(n) for n in "abcdpq")
    return determinant(cayley_menger_matrix(a**2, b**2, c**2, d**2, p**2, q**2))


# -- Ptolemy rationalization ----------------------------------------------------------


@lru_cache(maxsize=None)
def ptolemy_conjugate_product() -> MultiPoly:
    """``C2 (ac-bd-pq)(ac+bd+pq)(ac-bd+pq)`` rewritten through the chart.

    With ``A = ac, B = bd, W = pq`` the product is
    ``(A^2 + W^2 - B^2)^2 - 4 A^2 W^2``, which only involves squared sides.
    """
    ac2 = A2 * C2
    bd2 = B2 * D2
    w2 = (P * Q) ** 2
    s = ac2 + w2 - bd2
    return s * s - 4 * ac2 * w2


# -- partial and full rationalization of C3 ----------------------------------------------


@lru_cache(maxsize=None)
def R0() -> MultiPoly:
    """Part of ``F * F*`` free of ``abcd``: ``(a2 b2 + c2 d2) p^2 - (a2 d2 + b2 c2) q^2``."""
    return (A2 * B2 + C2 * D2) * P**2 - (A2 * D2 + B2 * C2) * Q**2


@lru_cache(maxsize=None)
def R1() -> MultiPoly:
    return 2 * (P**2 - Q**2)


@lru_cache(maxsize=None)
def R() -> MultiPoly:
    """``F * F* = R0 + lam R1`` with ``lam = abcd`` kept symbolic."""
    return R0() + LAM * R1()


@lru_cache(maxsize=None)
def RR() -> MultiPoly:
    """Full rationalization ``(R0 + lam R1)(R0 - lam R1)`` with ``lam^2 = a2 b2 c2 d2``."""
    return R0() ** 2 - A2 * B2 * C2 * D2 * R1() ** 2


def rr_known_factor() -> MultiPoly:
    return 4 * (T_**2 - 1) * P**2 * Q**2 * CYCL


@lru_cache(maxsize=None)
def T() -> MultiPoly:
    """The sextic ``T`` defined by ``RR = 4(t^2-1) p^2 q^2 (xu - yz) T``."""
    return divide_exact(RR(), rr_known_factor())


def T_parts() -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """``(T0, T1, T2)`` with ``T = 4 T2 t^2 + 4 T1 t + T0``."""
    co = T().coefficients("t")
    zero = const(0)
    return co.get(0, zero), co.get(1, zero) / 4, co.get(2, zero) / 4


# -- the lam-polynomial system and its elimination ----------------------------------------

# chart variable -> the two sides depending on it
_DEPENDENT_SIDES = {"x": ("a", "d"), "y": ("a", "b"), "z": ("c", "d"), "u": ("b", "c")}


@lru_cache(maxsize=None)
def R_hat(v: str) -> MultiPoly:
    """``s1^2 s2^2 * dR/dv`` with ``lam = abcd`` differentiated through its two v-dependent sides.

    ``lam_v = lam * (S1_v / (2 S1) + S2_v / (2 S2))`` for the squared sides
    ``S1, S2``; multiplying by ``S1 S2`` clears the denominators.
    """
    s1, s2 = _DEPENDENT_SIDES[v]
    S1, S2 = sq(s1), sq(s2)
    mult = S1 * S2
    dlam = (S1.diff(v) * S2 + S2.diff(v) * S1) / 2
    return mult * R0().diff(v) + LAM * (dlam * R1() + mult * R1().diff(v))


def at_u1(p: MultiPoly) -> MultiPoly:
    return substitute(p, "u", 1)


@lru_cache(maxsize=None)
def res_lambda(v: str) -> MultiPoly:
    """``Resultant_lam(R, R_hat_v)`` on the slice ``u = 1``."""
    return resultant(at_u1(R()), at_u1(R_hat(v)), "lam")


# trivial factors peeled from each lam-resultant: (factor, multiplicity)
RES_LAMBDA_TRIVIAL = {
    "x": [(T_**2 - 1, 1), (Y + Z, 2), (X + 1, 1)],
    "y": [(T_**2 - 1, 1), (Y + Z, 1), (X + 1, 2)],
    "z": [(T_**2 - 1, 1), (Y + Z, 1), (X + 1, 2)],
    "u": [(T_**2 - 1, 1), (Y + Z, 2), (X + 1, 1)],
}


def product(factors) -> MultiPoly:
    out = const(1)
    for f, m in factors:
        out = out * f**m
    return out


@lru_cache(maxsize=None)
def R_tilde(v: str) -> MultiPoly:
    """Primitive quotient of ``res_lambda(v)`` by its trivial factors (92 terms each)."""
    return divide_exact(res_lambda(v), product(RES_LAMBDA_TRIVIAL[v])).primitive()


# second elimination stage: name -> (first, second) R~ polynomials eliminated in t
STEP2_PAIRS = {"xy": ("x", "y"), "yu": ("y", "u"), "uz": ("u", "z"), "zx": ("z", "x")}


@lru_cache(maxsize=None)
def res_t(pair: str) -> MultiPoly:
    first, second = STEP2_PAIRS[pair]
    return resultant(R_tilde(first), R_tilde(second), "t")


_SIMPLE = [
    (parse("z - x*y"), 2),
    (parse("y - x*z"), 2),
    (parse("x - y*z"), 4),
    (parse("x - y - z + 1"), 1),
]
_COMMON_TRIVIAL = [
    (parse("x + y + z + 1"), 1),
    (parse("x^2 + 2*x + y^2 + 2*y*z + z^2 + 1"), 2),
]

# factors of each t-resultant other than its big factor
STEP2_FACTORS = {
    "xy": [(X, 1), (Y, 1), (parse("x^2 + x + y^2 + y*z"), 1)] + _COMMON_TRIVIAL + _SIMPLE,
    "yu": [(Y, 1), (parse("x + y^2 + y*z + 1"), 1)] + _COMMON_TRIVIAL + _SIMPLE,
    "uz": [(Z, 1), (parse("x + y*z + z^2 + 1"), 1)] + _COMMON_TRIVIAL + _SIMPLE,
    "zx": [(X, 1), (Z, 1), (parse("x^2 + x + y*z + z^2"), 1)] + _COMMON_TRIVIAL + _SIMPLE,
}


@lru_cache(maxsize=None)
def big_factor(pair: str) -> MultiPoly:
    """``Res_xy`` etc.: the degree-6 factor left after removing the listed small factors."""
    return divide_exact(res_t(pair), product(STEP2_FACTORS[pair])).primitive()


# -- the sign-chamber resolution at t = 1 ---------------------------------------------------


def c3_chart(a, b, c, d, p=P, q=Q) -> MultiPoly:
    return a * b * p - b * c * q + c * d * p - d * a * q


def c3_at_t1(sign_xy: int, sign_uz: int) -> MultiPoly:
    """C3 at ``t = 1`` with ``a = |y - x|``, ``c = |u - z|`` resolved on one sign chamber."""
    a = sign_xy * (X - Y)
    c = sign_uz * (U - Z)
    return c3_chart(a, Y + U, c, Z + X)
