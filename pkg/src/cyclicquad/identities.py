"""Registry of exact polynomial identities behind the cyclicity criterion.

Every entry rebuilds its left-hand side from first principles with
:mod:`cyclicquad.poly` and :mod:`cyclicquad.algebra`, then checks a claimed
factorization by an exact division chain: the claimed factors are divided out
one at a time and what remains must be a nonzero rational constant.

An entry is a list of :class:`Check` objects.  Checks marked
``required=False`` compare a form transcribed from print (see
:mod:`cyclicquad.printed`) with the derived one.  When such a check fails
while every required check passes, the record status is ``"corrected"``: the
derived identity holds exactly and the printed form is recorded as defective,
together with the witness (mismatch polynomial or leftover cofactor).
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import algebra as al
from . import printed, series
from .poly import (
    MultiPoly,
    NotDivisible,
    const,
    divide_exact,
    is_homogeneous,
    parse,
    structure,
    substitute,
    substitute_fraction,
    to_string,
    var,
    weighted_truncation,
)

X, Y, Z, U, T = al.X, al.Y, al.Z, al.U, al.T_

_WITNESS_LIMIT = 400


def _short(p: MultiPoly) -> str:
    s = to_string(p)
    return s if len(s) <= _WITNESS_LIMIT else s[:_WITNESS_LIMIT] + " ..."


def _fmt_const(c) -> str | None:
    if c is None:
        return None
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class Check:
    label: str
    ok: bool
    required: bool = True
    constant: str | None = None
    witness: str | None = None


def factored(label, lhs: MultiPoly, factors, *, constant=None, required=True) -> Check:
    """``lhs == k * prod(f^m)`` for a nonzero rational ``k`` (equal to ``constant`` if given).

    ``factors`` is a list of ``(poly, multiplicity)`` pairs (a bare polynomial
    counts once).  The witness of a failure is either the factor that does not
    divide or the non-constant cofactor left after all divisions.
    """
    rem = lhs
    pairs = [(f, 1) if isinstance(f, MultiPoly) else f for f in factors]
    for f, m in pairs:
        for _ in range(m):
            try:
                rem = divide_exact(rem, f)
            except NotDivisible:
                return Check(label, False, required, witness=f"not divisible by {_short(f)}")
    if rem.is_zero() or not rem.is_constant():
        return Check(label, False, required, witness=f"cofactor {_short(rem)}")
    k = rem.constant_value()
    if lhs != k * al.product(pairs):
        return Check(label, False, required, witness="re-multiplication mismatch")
    if constant is not None and Fraction(k) != Fraction(constant):
        return Check(label, False, required, _fmt_const(k), f"constant {_fmt_const(k)} != {_fmt_const(constant)}")
    return Check(label, True, required, _fmt_const(k))


def equal(label, lhs: MultiPoly, rhs, *, required=True) -> Check:
    diff = lhs - rhs
    if diff.is_zero():
        return Check(label, True, required, "1")
    return Check(label, False, required, witness=f"lhs - rhs = {_short(diff)}")


def proportional(label, lhs: MultiPoly, rhs: MultiPoly, *, required=True) -> Check:
    r = lhs.constant_ratio(rhs)
    if r is None or r == 0:
        return Check(label, False, required, witness=f"not proportional; lhs = {_short(lhs)}")
    return Check(label, True, required, _fmt_const(r))


def fact(label, ok: bool, detail: str = "", *, required=True) -> Check:
    return Check(label, bool(ok), required, witness=None if ok else detail or "false")


@dataclass
class IdentityRecord:
    id: str
    description: str
    tags: tuple[str, ...]
    status: str = "unverified"
    constant: str | None = None
    checks: list[Check] = field(default_factory=list)
    printed_ok: bool | None = None
    lhs_terms: int | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status in ("verified", "corrected")

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tags"] = list(self.tags)
        return d


@dataclass
class LedgerReport:
    records: list[IdentityRecord]
    seconds: float

    @property
    def totals(self) -> dict[str, int]:
        out = {"verified": 0, "corrected": 0, "failed": 0}
        for r in self.records:
            out[r.status] = out.get(r.status, 0) + 1
        out["total"] = len(self.records)
        return out

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self, timing: bool = True) -> dict:
        recs = [r.to_dict() for r in self.records]
        if not timing:
            for r in recs:
                r.pop("seconds")
        d = {"records": recs, "totals": self.totals}
        if timing:
            d["seconds"] = self.seconds
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# entries

_Entry = tuple[str, tuple[str, ...], Callable[[], tuple[list[Check], MultiPoly | None]]]
REGISTRY: dict[str, _Entry] = {}


def entry(id_: str, description: str, *tags: str):
    def deco(fn):
        REGISTRY[id_] = (description, tags, fn)
        return fn

    return deco


@entry("I-CM-EXPANSION", "Bordered Cayley-Menger determinant against the 22-term planarity polynomial", "core")
def _cm():
    lhs = al.cayley_menger_symbolic()
    return [factored("determinant = k * printed polynomial", lhs, [printed.get("QUAD_EQUATION")], constant=-2)], lhs


@entry("I-PTOLEMY-RAT", "Rationalized product of the Ptolemy conjugates", "core")
def _ptolemy():
    lhs = al.ptolemy_conjugate_product()
    checks = [
        factored(
            "product = -4 (1-t^2) p^2 q^2 (xu-yz)^2",
            lhs,
            [(1 - T**2, 1), (al.P, 2), (al.Q, 2), (al.CYCL, 2)],
            constant=-4,
        ),
        equal("printed monomial expansion", lhs, printed.get("P10"), required=False),
    ]
    return checks, lhs


def _wall_rr() -> MultiPoly:
    return substitute(al.RR(), {"z": 0, "u": 1 - X})


def _wall_T0() -> MultiPoly:
    A = parse(printed.WALL_A)
    return A * (Y**2 - 1) + 4 * Y**2 * (1 - T**2)


@entry("I-F0-RAT", "Full rationalization on the wall z = 0 with p = 1", "core")
def _f0_rat():
    lhs = _wall_rr()
    T0w = _wall_T0()
    checks = [
        factored(
            "RR[z=0,u=1-x] = k (1-t^2) y^2 x^2 (1-x)^2 T0",
            lhs,
            [(1 - T**2, 1), (Y, 2), (X, 2), (1 - X, 2), (T0w, 1)],
            constant=4,
        ),
        factored("printed: k (1-t^2) y^2 x T0", lhs, [(1 - T**2, 1), (Y, 2), (X, 1), (T0w, 1)], required=False),
    ]
    return checks, lhs


@entry("I-T0-FORM", "Wall quotient T0 = A(y^2-1) + 4y^2(1-t^2) and the lower bound on A", "core")
def _t0_form():
    quotient = divide_exact(_wall_rr(), 4 * (1 - T**2) * Y**2 * X**2 * (1 - X) ** 2)
    A = parse(printed.WALL_A)
    checks = [equal("derived quotient = A(y^2-1) + 4y^2(1-t^2)", quotient, _wall_T0())]
    # A - (3y - s)(y - s) = 4y(s + (1-2x)t) for both resolutions s = +-(1-2x) of |1-2x|
    for sgn in (1, -1):
        s = sgn * (1 - 2 * X)
        checks.append(
            equal(f"A - (3y-s)(y-s) = 4y(s+(1-2x)t), s = {'+' if sgn > 0 else '-'}(1-2x)",
                  A - (3 * Y - s) * (Y - s), 4 * Y * (s + (1 - 2 * X) * T))
        )
    return checks, quotient


@entry("I-F-T1", "C3 at t = 1 on the four sign chambers of (x-y, u-z)", "core")
def _f_t1():
    at1 = {"t": 1}
    checks = [
        equal("a^2 at t=1", substitute(al.A2, at1), (X - Y) ** 2),
        equal("b^2 at t=1", substitute(al.B2, at1), (U + Y) ** 2),
        equal("c^2 at t=1", substitute(al.C2, at1), (U - Z) ** 2),
        equal("d^2 at t=1", substitute(al.D2, at1), (X + Z) ** 2),
    ]
    for s1 in (1, -1):
        for s2 in (1, -1):
            rhs = (X + Y + Z + U) * (X - Y) * (U - Z) * (s1 + s2)
            checks.append(equal(f"chamber sgn(x-y)={s1:+d}, sgn(u-z)={s2:+d}", al.c3_at_t1(s1, s2), rhs))
    return checks, None


def _crit_setup():
    a, b, c, d, p, q, xi = (var(n) for n in ("a", "b", "c", "d", "p", "q", "xi"))
    F0 = al.c3_chart(a, b, c, d, p, q)
    Fa, Fb, Fq = F0.diff("a"), F0.diff("b"), F0.diff("q")
    # abq * dF0/dxi and abq * dF0/deta / eta, from a_xi = xi/a, b_xi = (xi-p)/b, q_xi = (xi-d)/q
    G1 = b * q * Fa * xi + a * q * Fb * (xi - p) + a * b * Fq * (xi - d)
    G2 = b * q * Fa + a * q * Fb + a * b * Fq
    E1 = p * q * (c * q - a * p) + b * d * (a * d + b * c)
    E2 = p * q * (d * q - b * p) + a * c * (a * d + b * c)
    return (a, b, c, d, p, q, xi), (Fa, Fb, Fq), G1, G2, E1, E2


@entry("I-CRIT-REDUCE", "Row reduction of the interior critical-point equations on the wall", "core")
def _crit_reduce():
    (a, b, c, d, p, q, xi), (Fa, Fb, Fq), G1, G2, E1, E2 = _crit_setup()
    on_p = {"p": c + d}
    checks = [
        equal("dF0/da = bp - dq", Fa, b * p - d * q),
        equal("dF0/db = ap - cq", Fb, a * p - c * q),
        equal("dF0/dq = -(ad + bc)", Fq, -(a * d + b * c)),
        equal("G1 - xi G2 = a * first equation", G1 - xi * G2, a * E1),
        equal("G1 - (xi-p) G2 = -b * second equation (p = c + d)",
              substitute(G1 - (xi - p) * G2, on_p), substitute(-b * E2, on_p)),
    ]
    total = substitute(E1 + E2, on_p)
    checks.append(
        factored("sum of equations at p = c + d",
                 total, [((b - q) * d + (a - q) * c, 1), ((b - q) * c + (a - q) * d, 1)], constant=1)
    )
    return checks, total


@entry("I-CRIT-DELTA", "Determinant of the reduced system under the first case constraint", "core")
def _crit_delta():
    (a, b, c, d, p, q, xi), _, _, _, E1, E2 = _crit_setup()
    on_p = {"p": c + d}
    delta = a * c * (c * q - a * p) + b * d * (b * p - d * q)
    claim = c * d * (b - a) * (a + b + q)
    # constraint (b-q)d + (a-q)c = 0 solved linearly: q = (ac + bd)/(c + d)
    residual = substitute_fraction(substitute(delta - claim, on_p), "q", a * c + b * d, c + d)
    constraint = substitute_fraction((b - q) * d + (a - q) * c, "q", a * c + b * d, c + d)
    checks = [
        equal("determinant of (pq, ad+bc) system", substitute(delta, on_p),
              substitute(a * c * ((q - a) * c - a * d) + b * d * ((b - q) * d + b * c), on_p)),
        fact("case constraint vanishes after elimination", constraint.is_zero(), _short(constraint)),
        fact("Delta = cd(b-a)(a+b+q) modulo the constraint", residual.is_zero(), _short(residual)),
        equal("a = b turns the constraint into (b-q)(c+d)",
              substitute((b - q) * d + (a - q) * c, {"a": b}), (b - q) * (c + d)),
    ]
    return checks, delta


@entry("I-CASE2-FORM", "Second case: homogeneous system in (c, d) and its positive-definite determinant", "core")
def _case2():
    a, b, c, d, q = (var(n) for n in "abcdq")
    p = c + d
    Xv, Yv = a - q, b - q
    det = (b - q) * (b - a) + (a - q) ** 2
    checks = [
        equal("ad + bc - pq = (b-q)c + (a-q)d", a * d + b * c - p * q, (b - q) * c + (a - q) * d),
        equal("cq - ap + bd = (q-a)c + (b-a)d", c * q - a * p + b * d, (q - a) * c + (b - a) * d),
        equal("determinant = X^2 - XY + Y^2", det, Xv**2 - Xv * Yv + Yv**2),
        equal("X^2 - XY + Y^2 = (X - Y/2)^2 + 3Y^2/4", Xv**2 - Xv * Yv + Yv**2,
              (Xv - Yv / 2) ** 2 + Fraction(3, 4) * Yv**2),
    ]
    return checks, det


@entry("I-RR-FACT", "Full rationalization RR = 4(t^2-1) p^2 q^2 (xu-yz) T and the shape of T", "core")
def _rr_fact():
    lhs = al.RR()
    Tp = al.T()
    st = structure(Tp)
    checks = [
        factored("RR = 4(t^2-1) p^2 q^2 (xu-yz) T", lhs,
                 [(T**2 - 1, 1), (al.P, 2), (al.Q, 2), (al.CYCL, 1), (Tp, 1)], constant=4),
        fact("T has 62 terms", st.term_count == 62, f"{st.term_count} terms"),
        fact("T is quadratic in t", Tp.degree("t") == 2, f"degree {Tp.degree('t')}"),
        fact("T is homogeneous of degree 6 in x, y, z, u",
             is_homogeneous(Tp, {"x": 1, "y": 1, "z": 1, "u": 1, "t": 0})
             and weighted_truncation(Tp, {"x": 1, "y": 1, "z": 1, "u": 1, "t": 0}) == Tp
             and max(sum(e[:4]) for e in _terms_xyzu(Tp)) == 6),
        fact("R0 + lam R1 has 64 terms", al.R().term_count() == 64, f"{al.R().term_count()} terms"),
    ]
    return checks, lhs


def _terms_xyzu(p: MultiPoly):
    names = p.variables
    idx = [names.index(n) for n in "xyzu" if n in names]
    for e in p.terms:
        yield tuple(e[i] for i in idx)


@entry("I-T-TRANSCRIPTION", "Printed monomial lists of T0, T1, T2 against the derived T", "core")
def _t_transcription():
    T0, T1, T2 = al.T_parts()
    checks = [
        equal("T = 4 T2 t^2 + 4 T1 t + T0", al.T(), 4 * T2 * T**2 + 4 * T1 * T + T0),
        equal("printed T0", T0, printed.get("T0"), required=False),
        equal("printed T1", T1, printed.get("T1"), required=False),
        equal("printed T2", T2, printed.get("T2"), required=False),
    ]
    return checks, al.T()


@entry("I-LEM52-SUB", "T on the cyclic locus x = yz at u = 1", "core")
def _lem52():
    lhs = substitute(al.T(), {"u": 1, "x": Y * Z})
    claim = [Y, Y - 1, Y + 1, Y**2 + 2 * T * Y + 1, Z, Z - 1, Z + 1, Z**2 - 2 * T * Z + 1]
    return [factored("T[u=1,x=yz] = 4 y(y^2-1)(y^2+2ty+1) z(z^2-1)(z^2-2tz+1)", lhs, claim, constant=4)], lhs


def _res_entry(v: str):
    def run():
        lhs = al.res_lambda(v)
        Rt = al.R_tilde(v)
        checks = [
            factored(f"Res_{v} = k * trivial factors * R~_{v}", lhs, al.RES_LAMBDA_TRIVIAL[v] + [(Rt, 1)]),
            fact(f"R~_{v} has 92 terms", Rt.term_count() == 92, f"{Rt.term_count()} terms"),
            fact(f"R~_{v} is quadratic in t", Rt.degree("t") == 2, f"degree {Rt.degree('t')}"),
        ]
        return checks, lhs

    return run


for _v in "xyzu":
    entry(f"I-RES-{_v.upper()}", f"Elimination of lam between R and the {_v}-derivative equation (u = 1)",
          "resultants")(_res_entry(_v))


def _res2_entry(pair: str):
    def run():
        lhs = al.res_t(pair)
        big = al.big_factor(pair)
        st = structure(big)
        checks = [
            factored(f"Res_t = k * small factors * Res_{pair}", lhs, al.STEP2_FACTORS[pair] + [(big, 1)]),
            fact(f"Res_{pair} has 18 terms", st.term_count == 18, f"{st.term_count} terms"),
            fact(f"Res_{pair} has degree 6", st.total_degree == 6, f"degree {st.total_degree}"),
        ]
        return checks, lhs

    return run


for _pair in al.STEP2_PAIRS:
    entry(f"I-RES2-{_pair.upper()}", f"Elimination of t between the R~ pair {_pair}", "resultants")(_res2_entry(_pair))


def _p4_parts():
    b = al.big_factor
    p41 = divide_exact(Z * b("xy") + Y * b("zx"), (Y - Z) * (Y + Z))
    p42 = divide_exact(Y * b("uz") - Z * b("yu"), X * (Y - Z) * (Y + Z))
    return p41, p42


@entry("I-STEP3-A", "z Res_xy + y Res_zx = (y-z)(y+z) P4(1)", "resultants")
def _step3a():
    b = al.big_factor
    lhs = Z * b("xy") + Y * b("zx")
    p41, _ = _p4_parts()
    return [factored("(y-z)(y+z) divides with quartic quotient", lhs, [Y - Z, Y + Z, p41], constant=1),
            fact("P4(1) has degree 4", p41.degree() == 4, f"degree {p41.degree()}")], lhs


@entry("I-STEP3-B", "y Res_uz - z Res_yu = x(y-z)(y+z) P4(2)", "resultants")
def _step3b():
    b = al.big_factor
    lhs = Y * b("uz") - Z * b("yu")
    _, p42 = _p4_parts()
    return [factored("x(y-z)(y+z) divides with quartic quotient", lhs, [X, Y - Z, Y + Z, p42], constant=1),
            fact("P4(2) has degree 4", p42.degree() == 4, f"degree {p42.degree()}")], lhs


@entry("I-STEP3-C", "P4(1) + P4(2) = (x-1)(x+1)(3x^2-2x+3+y^2+10yz+z^2) with a positive last factor", "resultants")
def _step3c():
    p41, p42 = _p4_parts()
    lhs = p41 + p42
    last = parse(printed.P4_1_PLUS_P4_2_FACTOR)
    checks = [
        factored("sum factors", lhs, [X - 1, X + 1, last]),
        # 3(x - 1/3)^2 + 8/3 + (y + z)^2 + 8yz: positive for real x and y, z > 0
        equal("completed squares", last, 3 * (X - Fraction(1, 3)) ** 2 + Fraction(8, 3) + (Y + Z) ** 2 + 8 * Y * Z),
    ]
    return checks, lhs


@entry("I-CASE-TRAPEZOID", "R~_y on the simple branch z = x + 1 - y", "resultants")
def _trapezoid():
    lhs = substitute(al.R_tilde("y"), "z", X + 1 - Y)
    claim = [(Y - 1, 1), (Y**2 + 2 * Y * T + 1, 1), (X + 1, 2), (X - Y, 1), (X**2 - 2 * X * Y * T + Y**2, 1)]
    return [factored("factorization", lhs, claim)], lhs


@entry("I-CASE-XYZ", "R~_x on the simple branch x = yz", "resultants")
def _case_xyz():
    lhs = substitute(al.R_tilde("x"), "x", Y * Z)
    claim = [(Y * Z + 1, 1), (Y, 2), (Y**2 - 1, 1), (Y**2 + 2 * T * Y + 1, 1), (Z, 2), (Z**2 - 1, 1),
             (Z**2 - 2 * T * Z + 1, 1)]
    return [factored("factorization", lhs, claim)], lhs


@entry("I-CASE-YXZ", "R~_x and R~_u on the simple branch z = xy, with the quartics P5, P6", "resultants")
def _case_yxz():
    P5, P6 = printed.get("P5"), printed.get("P6")
    rx = substitute(al.R_tilde("x"), "z", X * Y)
    ru = substitute(al.R_tilde("u"), "z", X * Y)
    common = [(X - 1, 1), (X + 1, 2), (Y**2 - 1, 1), (Y**2 + 2 * T * Y + 1, 1)]
    checks = [
        factored("R~_x[z=xy] = k x^2 (x-1)(x+1)^2 (y^2-1)(y^2+2ty+1) P5", rx, [(X, 2)] + common + [(P5, 1)]),
        factored("R~_u[z=xy] = k x (x-1)(x+1)^2 (y^2-1)(y^2+2ty+1) P6", ru, [(X, 1)] + common + [(P6, 1)]),
        equal("P6 - P5 = (x^2-1)(y^2-1)(y^2+1)", P6 - P5, (X**2 - 1) * (Y**2 - 1) * (Y**2 + 1)),
        factored("printed: R~_x[z=xy] with (x^2-1) once", rx,
                 [(X, 2), (X**2 - 1, 1), (Y**2 - 1, 1), (Y**2 + 2 * T * Y + 1, 1), (P5, 1)], required=False),
        factored("printed: R~_u[z=xy] with (x^2-1) once", ru,
                 [(X, 1), (X**2 - 1, 1), (Y**2 - 1, 1), (Y**2 + 2 * T * Y + 1, 1), (P6, 1)], required=False),
    ]
    return checks, rx


@entry("I-PARALLELOGRAM", "Branch x = 1, y = z (u = 1): a = c, b = d and C3 = 2ab(p - q)", "resultants")
def _parallelogram():
    on = {"u": 1, "x": 1, "z": Y}
    a, b = var("a"), var("b")
    checks = [
        equal("a^2 = c^2", substitute(al.A2, on), substitute(al.C2, on)),
        equal("b^2 = d^2", substitute(al.B2, on), substitute(al.D2, on)),
        equal("C3 with c = a, d = b", al.c3_chart(a, b, a, b, var("p"), var("q")), 2 * a * b * (var("p") - var("q"))),
        equal("p - q on the branch", substitute(al.P - al.Q, on), 2 - 2 * Y),
    ]
    return checks, None


@entry("I-63", "T on the folding face with z = u", "boundary")
def _i63():
    lhs = substitute(al.T(), {"z": U, "t": 1})
    checks = [
        factored("T[z=u,t=1] = u (x-y)^3 (x+y+2u)^2", lhs, [(U, 1), (X - Y, 3), (X + Y + 2 * U, 2)], constant=1),
        factored("printed: u (x-y)^3 (x+y+2u)", lhs, [(U, 1), (X - Y, 3), (X + Y + 2 * U, 1)], required=False),
    ]
    return checks, lhs


def _tz() -> MultiPoly:
    return al.T().diff("z")


@entry("I-65-A", "Face x = 0, t = 1: T and T_z", "boundary")
def _i65a():
    lhs = substitute(al.T(), {"t": 1, "x": 0})
    tz = substitute(_tz(), {"t": 1, "x": 0, "u": Y + Z})
    return [
        factored("T[t=1,x=0]", lhs, [Y, Z, 3 * U + Y - Z, U + Y - Z, -U + Y + Z, U + Y + Z], constant=-1),
        factored("T_z[t=1,x=0,u=y+z]", tz, [(Y, 2), Z, Y + Z, 2 * Y + Z], constant=-8),
    ], lhs


@entry("I-65-B", "Face x = 0, t = -1: T and T_z", "boundary")
def _i65b():
    lhs = substitute(al.T(), {"t": -1, "x": 0})
    tz = substitute(_tz(), {"t": -1, "x": 0, "u": Y + Z})
    return [
        factored("T[t=-1,x=0]", lhs, [Y, Z, -3 * U + Y - Z, -U + Y - Z, -U + Y + Z, U + Y + Z], constant=-1),
        factored("T_z[t=-1,x=0,u=y+z]", tz, [Y, (Z, 2), Y + 2 * Z, Y + Z], constant=-8),
    ], lhs


@entry("I-65-C", "Face y = 0, t = 1: T and T_z", "boundary")
def _i65c():
    lhs = substitute(al.T(), {"t": 1, "y": 0})
    tz = substitute(_tz(), {"t": 1, "y": 0, "z": X + U})
    return [
        factored("T[y=0,t=1]", lhs, [X, U, U + X - Z, -U + X + Z, U + X + Z, -U + X + 3 * Z], constant=1),
        factored("T_z[y=0,t=1,z=x+u]", tz, [(X, 2), U, U + X, 2 * X + U], constant=-8),
    ], lhs


@entry("I-65-D", "Face z = 0, t = 1: T and T_z (recomputed; the printed block repeats the y = 0 labels)",
       "boundary")
def _i65d():
    lhs = substitute(al.T(), {"t": 1, "z": 0})
    tz = substitute(_tz(), {"t": 1, "z": 0, "y": X + U})
    checks = [
        factored("T[z=0,t=1]", lhs, [X, U, -U + X - 3 * Y, -U + X - Y, U + X - Y, U + X + Y], constant=1),
        factored("T_z[z=0,t=1,y=x+u]", tz, [X, (U, 2), U + X, X + 2 * U], constant=-8),
        factored("printed factors read as the z = 0 face", lhs,
                 [X, U, U + Y - X, X + U - Y, U + X + Y, -U + X + 3 * Y], required=False),
    ]
    return checks, lhs


@entry("I-66", "First truncation of T at u = 1 for x ~ eps^2, y, z ~ eps", "boundary")
def _i66():
    lhs = weighted_truncation(substitute(al.T(), "u", 1), {"x": 2, "y": 1, "z": 1, "t": 0})
    ck = factored("truncation = k (x + 3yz)", lhs, [X + 3 * Y * Z])
    pos = ck.ok and Fraction(ck.constant) > 0
    return [ck, fact("constant is positive", pos, f"constant {ck.constant}")], lhs


@entry("I-TRUNC-T", "Folding face, second case: lowest-order part of T in the small shifts s, v", "boundary")
def _trunc_t():
    s, v = var("s"), var("v")
    shifted = substitute(al.T(), {"t": 1, "y": X + v, "z": U - s})
    lhs = weighted_truncation(shifted, {"s": 1, "v": 1, "x": 0, "u": 0})
    checks = [
        factored("T ~ 4 (x+u)^2 (s-v)(s+v)(sx+uv)", lhs, [(X + U, 2), s - v, s + v, s * X + U * v], constant=4),
        equal("printed form at u = 1", substitute(lhs, "u", 1),
              4 * (X + 1) ** 2 * (s - v) * (s + v) * (s * X + v), required=False),
    ]
    return checks, lhs


@entry("I-TRUNC-TZ", "Folding face, second case: lowest-order part of T_z at x = u = 1", "boundary")
def _trunc_tz():
    s, v = var("s"), var("v")
    shifted = substitute(_tz(), {"t": 1, "x": 1, "u": 1, "y": 1 + v, "z": 1 - s})
    lhs = weighted_truncation(shifted, {"s": 1, "v": 1})
    return [factored("T_z ~ -16 (s+v)(3s-v)", lhs, [s + v, 3 * s - v], constant=-16)], lhs


@entry("I-P3", "Folding face, first case: tau-coefficient of F*abcd and the quadratic P3", "boundary")
def _p3():
    G1 = series.folding_G1()
    P3 = series.healed_P3()
    checks = [
        factored("G1 = -(x+u)(y+z)(xu-yz) P3", G1, [X + U, Y + Z, al.CYCL, P3], constant=-1),
        equal("P3[x=0] = yz(z-y-3u)", substitute(P3, "x", 0), Y * Z * (Z - Y - 3 * U)),
        equal("P3[x=y] = y(z-u)(u+2y+z)", substitute(P3, "x", Y), Y * (Z - U) * (U + 2 * Y + Z)),
        equal("coefficient of x^2 is u", P3.coefficient("x", 2), U),
        equal("printed P3 (stray letter read as u)", P3, printed.get("P3_READING"), required=False),
        factored("printed prefactor (y+z)(x+y)(xu-yz)", G1, [Y + Z, X + Y, al.CYCL], required=False),
    ]
    return checks, G1


@entry("I-P7", "Folding face, first case: P7(yz, y, z, 1) = 4[y(y+1)z(z-1)]^2 (y+z)", "boundary")
def _p7():
    P7 = series.healed_P7()
    lhs = substitute(P7, {"x": Y * Z, "u": 1})
    checks = [
        fact("P7 is homogeneous of degree 7", is_homogeneous(P7) and P7.degree() == 7),
        equal("specialization", lhs, 4 * (Y * (Y + 1) * Z * (Z - 1)) ** 2 * (Y + Z)),
    ]
    return checks, P7


def _printed_table_xy():
    z, u, t, c = var("z"), var("u"), var("t"), var("c")
    return dict(
        alpha=c * (u * t + z), beta=-c * (u + z * t), gamma=u**2 - z**2,
        alpha_t=series.reduce_square(z * (z**2 - u**2 * t**2 + c**2), "c", al.C2),
        beta_t=(1 - t) * z**3 + (1 + t) * (u - z) * u * z,
        gamma_t=-2 * z**2 * c,
    )


def _printed_table_xz():
    y, u, t, b = var("y"), var("u"), var("t"), var("b")
    return dict(
        alpha=b * (y - u * t), beta=-b * (u - y * t), gamma=u**2 - y**2,
        alpha_t=u * t * (u**2 - y**2), beta_t=u * (u**2 - y**2), gamma_t=b * u * (t * y - u),
    )


def _ratio_star(tb, side: str, square: MultiPoly):
    num = series.reduce_square(tb.beta_t * tb.gamma - tb.beta * tb.gamma_t, side, square)
    den = series.reduce_square(tb.alpha * tb.gamma_t - tb.alpha_t * tb.gamma, side, square)
    return num, den


@entry("I-63Q", "Triangle degeneration x, y -> 0: coefficient table, limiting ratio and quadratic form", "boundary")
def _i63q():
    tb = series.table_xy()
    pr = _printed_table_xy()
    checks = []
    for name in ("alpha", "beta", "gamma", "alpha_t", "beta_t", "gamma_t"):
        checks.append(equal(f"printed table entry {name}", getattr(tb, name), pr[name], required=False))
    checks.append(equal("beta~ = -z^2 (u + 2zt - 3ut^2)", tb.beta_t, -Z**2 * (U + 2 * Z * T - 3 * U * T**2)))
    num, den = _ratio_star(tb, "c", al.C2)
    s_num, s_den = Z * (3 * U**2 + Z**2), U * (3 * Z**2 + U**2)
    checks.append(fact("x/y limit = (z/u)(3u^2+z^2)/(3z^2+u^2)", (num * s_den - den * s_num).is_zero()))
    qf = series.reduce_square(
        (tb.alpha_t**2 - tb.gamma_t**2) * X**2 + (tb.beta_t**2 - tb.gamma_t**2) * Y**2
        + (2 * tb.alpha_t * tb.beta_t + 2 * T * tb.gamma_t**2) * X * Y, "c", al.C2)
    sliced = substitute(qf, {"u": 1, "y": 1})
    lhs = substitute_fraction(sliced, "x", substitute(s_num, "u", 1), substitute(s_den, "u", 1))
    zq = [(Z**2 - 2 * T * Z + 1, 1), (3 * Z**2 - 2 * T * Z + 3, 1)]
    checks.append(factored("form at x = s*, y = u = 1 (denominator cleared)", lhs,
                           [(T**2 - 1, 1), (Z, 6)] + zq, constant=16))
    checks.append(factored("printed: z^4 (z^2-2tz+1)(3z^2-2tz+3)", lhs, [(Z, 4)] + zq, required=False))
    return checks, lhs


@entry("I-64Q", "Triangle degeneration x, z -> 0: coefficient table, limiting ratio and quadratic form", "boundary")
def _i64q():
    tb = series.table_xz()
    pr = _printed_table_xz()
    checks = [equal(f"table entry {n}", getattr(tb, n), pr[n]) for n in pr]
    num, den = _ratio_star(tb, "b", al.B2)
    s_num = Y * (3 * U**2 - 2 * T * U * Y - Y**2)
    s_den = U * (Y**2 - 2 * T * U * Y + U**2)
    checks.append(fact("x/z limit = (y/u)(3u^2-2tuy-y^2)/(y^2-2tuy+u^2)", (num * s_den - den * s_num).is_zero()))
    qf = series.reduce_square(
        (tb.alpha**2 - tb.gamma**2) * X**2 + (tb.beta**2 - tb.gamma**2) * Z**2
        + (2 * tb.alpha * tb.beta - 2 * T * tb.gamma**2) * X * Z, "b", al.B2)
    sliced = substitute(qf, {"u": 1, "z": 1})
    lhs = substitute_fraction(sliced, "x", substitute(s_num, "u", 1), substitute(s_den, "u", 1))
    checks.append(factored("form at x = s* z, z = u = 1 (denominator cleared)", lhs,
                           [(T**2 - 1, 1), (Y, 2), (Y**2 - 1, 2), (Y**2 + 2 * T * Y - 3, 1)]))
    b = var("b")
    coef = substitute(tb.beta + tb.gamma, "u", 1)
    checks += [
        equal("coefficient of z when x = o(z): (1-b) + bty - y^2", coef, (1 - b) + b * T * Y - Y**2),
        equal("b^2 - 4 = y^2 + 2ty - 3 at u = 1", substitute(al.B2, "u", 1) - 4, Y**2 + 2 * T * Y - 3),
        equal("limit at b = 2 is -((y-t)^2 + 1 - t^2)", substitute(coef, "b", 2), -((Y - T) ** 2 + 1 - T**2)),
    ]
    return checks, lhs


@entry("I-APP", "Symmetric non-convex family u = x, t = 0, z = 1: R = 4(x^2-y) P4 and the extremal point",
       "appendix")
def _app():
    on = {"u": X, "t": 0, "z": 1}
    # a = b and c = d on the family, so lam = abcd = a^2 d^2 is rational
    lhs = substitute(al.R0() + al.A2 * al.D2 * al.R1(), on)
    P4 = printed.get("P4_APPENDIX")
    dP4 = P4.diff("y")
    printed_d = substitute(printed.get("P4_DERIVATIVE_PRINTED"), "z", Y)
    s = var("s")  # s^2 = 3
    w = (2 * s - 3) / 9
    quartic = 27 * X**4 + 18 * X**2 - 1
    root_check = series.reduce_square(27 * w**2 + 18 * w - 1, "s", const(3))
    checks = [
        factored("R = 4 (x^2 - y) P4", lhs, [X**2 - Y, P4], constant=4),
        factored("dP4/dy = (3y+1)(y+2x^2+1)", dP4, [3 * Y + 1, Y + 2 * X**2 + 1], constant=1),
        equal("printed derivative with z read as y", dP4, printed_d, required=False),
        equal("27 P4(x, -1/3) = 4 (27x^4 + 18x^2 - 1)", substitute_fraction(P4, "y", -1, 3), 4 * quartic),
        fact("x^2 = (2 sqrt3 - 3)/9 is a root of 27w^2 + 18w - 1", root_check.is_zero(), _short(root_check)),
    ]
    return checks, lhs


# ---------------------------------------------------------------------------

SUITES = {
    "all": None,
    "core": "core",
    "resultants": "resultants",
    "boundary": "boundary",
    "appendix": "appendix",
}


def registry_ids(tag: str | None = None) -> list[str]:
    return [k for k, (_, tags, _) in REGISTRY.items() if tag is None or tag in tags]


def verify(id_: str) -> IdentityRecord:
    if id_ not in REGISTRY:
        raise KeyError(f"unknown identity {id_!r}")
    description, tags, fn = REGISTRY[id_]
    start = time.perf_counter()
    checks, lhs = fn()
    seconds = time.perf_counter() - start
    required = [c for c in checks if c.required]
    optional = [c for c in checks if not c.required]
    if not all(c.ok for c in required):
        status = "failed"
    elif all(c.ok for c in optional):
        status = "verified"
    else:
        status = "corrected"
    constant = next((c.constant for c in required if c.constant is not None), None)
    return IdentityRecord(
        id=id_,
        description=description,
        tags=tags,
        status=status,
        constant=constant,
        checks=checks,
        printed_ok=all(c.ok for c in optional) if optional else None,
        lhs_terms=lhs.term_count() if lhs is not None else None,
        seconds=seconds,
    )


def verify_all(tag: str | None = None, ids: Iterable[str] | None = None) -> LedgerReport:
    start = time.perf_counter()
    chosen = list(ids) if ids is not None else registry_ids(tag)
    records = [verify(i) for i in chosen]
    return LedgerReport(records, time.perf_counter() - start)
