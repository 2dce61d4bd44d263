"""Exact multivariate polynomials over the rationals.

A :class:`MultiPoly` is an immutable map from exponent vectors to nonzero
rational coefficients.  Coefficients are Python ``int`` when integral and
:class:`fractions.Fraction` otherwise, so arithmetic never rounds and never
overflows.

Internally every exponent vector is packed into one integer, the first
variable occupying the most significant field.  Integer order on packed keys
is then lexicographic order on exponent vectors, which makes the leading term
a plain ``max`` and keeps multiplication a loop over integer additions.

Variables are kept in a fixed canonical order (``x, y, z, u, t, lam`` first,
everything else alphabetically after them) and only variables that actually
occur are stored, so two polynomials are equal iff their term maps are equal.
"""

from __future__ import annotations

import ast
import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = [
    "MultiPoly",
    "NotDivisible",
    "PolyError",
    "Structure",
    "build",
    "const",
    "determinant",
    "divide_exact",
    "evaluate",
    "parse",
    "resultant",
    "structure",
    "substitute",
    "substitute_fraction",
    "sylvester_matrix",
    "var",
    "variables",
    "weighted_truncation",
]

CANONICAL_ORDER = ("x", "y", "z", "u", "t", "lam")
_RANK = {name: i for i, name in enumerate(CANONICAL_ORDER)}

_BITS = 24
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK


class PolyError(ValueError):
    """Malformed polynomial input or an operation outside its domain."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`divide_exact` when the division leaves a remainder."""

    def __init__(self, message: str, remainder_term=None):
        super().__init__(message)
        self.remainder_term = remainder_term


def _var_key(name: str):
    return (0, _RANK[name], "") if name in _RANK else (1, 0, name)


def _sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


def _coef(c):
    """Normalize a rational coefficient: ints stay ints, integral fractions become ints."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coef(Fraction(c.numerator, c.denominator))
    raise PolyError(f"coefficient must be rational, got {type(c).__name__}")


def _cdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _coef(Fraction(a) / Fraction(b))


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > _MAX_EXP:
            raise PolyError(f"exponent {e} out of range")
        key = (key << _BITS) | e
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & _MASK
        key >>= _BITS
    return tuple(out)


def _remap(terms: Mapping[int, object], src: tuple[str, ...], dst: tuple[str, ...]):
    """Re-key packed terms from variable tuple ``src`` to the superset ``dst``."""
    if src == dst:
        return terms
    n = len(src)
    pos = [dst.index(v) for v in src]
    m = len(dst)
    shifts = [_BITS * (m - 1 - j) for j in pos]
    out = {}
    for key, c in terms.items():
        exps = _unpack(key, n)
        k = 0
        for e, s in zip(exps, shifts):
            k |= e << s
        out[k] = c
    return out


class MultiPoly:
    """Immutable exact polynomial; build instances with :func:`build`, :func:`var` or :func:`parse`."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, variables: tuple[str, ...], packed_terms: dict[int, object], *, _trusted=False):
        if not _trusted:
            raise PolyError("use build(), var(), const() or parse() to construct polynomials")
        self._vars = variables
        self._terms = packed_terms
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _make(cls, variables: tuple[str, ...], terms: dict[int, object]) -> "MultiPoly":
        """Drop zero coefficients and unused variables; ``variables`` must be canonically sorted."""
        terms = {k: c for k, c in terms.items() if c != 0}
        if not terms:
            return cls((), {}, _trusted=True)
        n = len(variables)
        if n:
            used = 0
            for k in terms:
                used |= k
            keep = [v for i, v in enumerate(variables) if (used >> (_BITS * (n - 1 - i))) & _MASK]
            if len(keep) != n:
                idx = [variables.index(v) for v in keep]
                new = {}
                for k, c in terms.items():
                    e = _unpack(k, n)
                    new[_pack([e[i] for i in idx])] = c
                return cls(tuple(keep), new, _trusted=True)
        return cls(variables, terms, _trusted=True)

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return const(other)

    def _aligned(self, other: "MultiPoly"):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        vs = _sort_vars(self._vars + other._vars)
        return vs, _remap(self._terms, self._vars, vs), _remap(other._terms, other._vars, vs)

    # -- queries ----------------------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        n = len(self._vars)
        return {_unpack(k, n): c for k, c in self._terms.items()}

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._vars

    def constant_value(self):
        """Value of a constant polynomial (0 for the zero polynomial)."""
        if self._vars:
            raise PolyError("polynomial is not constant")
        return self._terms.get(0, 0)

    def degree(self, name: str | None = None) -> int:
        """Degree in ``name``, or total degree when ``name`` is None; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        n = len(self._vars)
        if name is None:
            return max(sum(_unpack(k, n)) for k in self._terms)
        if name not in self._vars:
            return 0
        shift = _BITS * (n - 1 - self._vars.index(name))
        return max((k >> shift) & _MASK for k in self._terms)

    def leading_term(self) -> tuple[tuple[int, ...], object]:
        """Lexicographically largest exponent vector and its coefficient."""
        if not self._terms:
            raise PolyError("zero polynomial has no leading term")
        k = max(self._terms)
        return _unpack(k, len(self._vars)), self._terms[k]

    def coefficients(self, name: str) -> dict[int, "MultiPoly"]:
        """Split into ``{k: c_k}`` with ``self = sum(c_k * name**k)``."""
        if name not in self._vars:
            return {0: self} if self._terms else {}
        n = len(self._vars)
        i = self._vars.index(name)
        shift = _BITS * (n - 1 - i)
        rest = self._vars[:i] + self._vars[i + 1:]
        buckets: dict[int, dict[int, object]] = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            exps = _unpack(k, n)
            buckets.setdefault(e, {})[_pack(exps[:i] + exps[i + 1:])] = c
        return {e: MultiPoly._make(rest, t) for e, t in buckets.items()}

    def coefficient(self, name: str, k: int) -> "MultiPoly":
        return self.coefficients(name).get(k, ZERO)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        vs, a, b = self._aligned(other)
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly._make(vs, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self._vars, {k: -c for k, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _coef(other)
            if c == 0:
                return ZERO
            return MultiPoly(self._vars, {k: v * c for k, v in self._terms.items()}, _trusted=True)
        if not self._terms or not other._terms:
            return ZERO
        vs, a, b = self._aligned(other)
        if len(vs):
            for v in vs:
                if self.degree(v) + other.degree(v) > _MAX_EXP:
                    raise PolyError("exponent overflow in product")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        bl = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bl:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._make(vs, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return divide_exact(self, other)
        c = _coef(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return MultiPoly(self._vars, {k: _cdiv(v, c) for k, v in self._terms.items()}, _trusted=True)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise PolyError("exponent must be an integer")
        if n < 0:
            raise PolyError("negative exponent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = const(other)
            except PolyError:
                return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        return to_string(self)

    # -- calculus and normalization --------------------------------------------

    def diff(self, name: str) -> "MultiPoly":
        """Partial derivative."""
        if name not in self._vars:
            return ZERO
        n = len(self._vars)
        shift = _BITS * (n - 1 - self._vars.index(name))
        unit = 1 << shift
        out = {}
        for k, c in self._terms.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - unit] = c * e
        return MultiPoly._make(self._vars, out)

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self._terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self._terms.values()]
        dens = [Fraction(c).denominator for c in self._terms.values()]
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens)
        return Fraction(abs(g), lcm)

    def primitive(self) -> "MultiPoly":
        """Integer-coefficient associate with coprime coefficients and positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self._terms[max(self._terms)] < 0:
            c = -c
        return self / c

    def constant_ratio(self, other: "MultiPoly"):
        """The rational ``r`` with ``self == r * other``, or None if no such constant exists."""
        other = self._coerce(other)
        if other.is_zero():
            return None if not self.is_zero() else Fraction(0)
        if self.is_zero() or self._vars != other._vars or len(self._terms) != len(other._terms):
            return None
        k = max(other._terms)
        if k not in self._terms:
            return None
        r = _cdiv(self._terms[k], other._terms[k])
        for key, c in other._terms.items():
            if self._terms.get(key) != c * r:
                return None
        return r

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly._make(self._vars, {k: _coef(fn(c)) for k, c in self._terms.items()})


ZERO = MultiPoly((), {}, _trusted=True)
ONE = MultiPoly((), {0: 1}, _trusted=True)


def const(c) -> MultiPoly:
    c = _coef(c)
    return MultiPoly._make((), {0: c})


def var(name: str) -> MultiPoly:
    if not name.isidentifier():
        raise PolyError(f"invalid variable name {name!r}")
    return MultiPoly((name,), {1: 1}, _trusted=True)


def variables(*names: str) -> tuple[MultiPoly, ...]:
    """``x, y = variables("x", "y")``; also accepts one space-separated string."""
    if len(names) == 1 and " " in names[0]:
        names = tuple(names[0].split())
    return tuple(var(n) for n in names)


def build(names: Sequence[str], terms: Iterable[tuple[Sequence[int], object]] | Mapping) -> MultiPoly:
    """Canonical polynomial from explicit terms; duplicate exponent vectors are summed."""
    names = tuple(names)
    if len(set(names)) != len(names):
        raise PolyError("duplicate variable names")
    for n in names:
        if not n.isidentifier():
            raise PolyError(f"invalid variable name {n!r}")
    items = terms.items() if isinstance(terms, Mapping) else terms
    order = _sort_vars(names)
    perm = [names.index(v) for v in order]
    out: dict[int, object] = {}
    for exps, c in items:
        exps = tuple(exps)
        if len(exps) != len(names):
            raise PolyError(f"exponent vector {exps} does not match {len(names)} variables")
        if any((not isinstance(e, int)) or e < 0 for e in exps):
            raise PolyError(f"exponents must be non-negative integers: {exps}")
        k = _pack([exps[i] for i in perm])
        out[k] = out.get(k, 0) + _coef(c)
    return MultiPoly._make(order, out)


# -- evaluation and substitution -------------------------------------------------


def evaluate(p: MultiPoly, assignment: Mapping[str, object]):
    """Evaluate at a point; exact for rational inputs, float arithmetic for float inputs."""
    missing = [v for v in p.variables if v not in assignment]
    if missing:
        raise PolyError(f"no value for variable(s) {missing}")
    vals = [assignment[v] for v in p.variables]
    vals = [Fraction(v) if isinstance(v, int) and not isinstance(v, bool) else v for v in vals]
    n = len(vals)
    total = 0
    cache: list[dict[int, object]] = [{} for _ in range(n)]
    for key, c in p._terms.items():
        term = c
        for i, e in enumerate(_unpack(key, n)):
            if e:
                pw = cache[i].get(e)
                if pw is None:
                    pw = vals[i] ** e
                    cache[i][e] = pw
                term = term * pw
        total = total + term
    if isinstance(total, Fraction):
        return _coef(total)
    return total


def substitute(p: MultiPoly, mapping: Mapping[str, object] | str, replacement=None) -> MultiPoly:
    """Substitute polynomials (or numbers) for variables, simultaneously.

    Either ``substitute(p, "x", q)`` or ``substitute(p, {"x": q, "z": r})``.
    """
    if isinstance(mapping, str):
        mapping = {mapping: replacement}
    mapping = {k: MultiPoly._coerce(v) for k, v in mapping.items()}
    active = {k: v for k, v in mapping.items() if k in p.variables}
    if not active:
        return p
    if len(active) == 1:
        (name, rep), = active.items()
        return _substitute_one(p, name, rep)
    # rename targets to fresh names first so the replacements cannot interfere
    fresh = {}
    q = p
    for i, name in enumerate(active):
        tmp = f"_s{i}_{name}"
        q = _substitute_one(q, name, var(tmp))
        fresh[tmp] = active[name]
    for tmp, rep in fresh.items():
        q = _substitute_one(q, tmp, rep)
    return q


def _substitute_one(p: MultiPoly, name: str, rep: MultiPoly) -> MultiPoly:
    coeffs = p.coefficients(name)
    if rep == var(name):
        return p
    result = ZERO
    power = ONE
    top = max(coeffs)
    powers = [ONE]
    for _ in range(top):
        power = power * rep
        powers.append(power)
    for k, c in coeffs.items():
        result = result + c * powers[k]
    return result


def substitute_fraction(p: MultiPoly, name: str, num, den) -> MultiPoly:
    """``den**deg * p(name = num/den)`` with ``deg`` the degree of ``p`` in ``name``.

    Clears the denominator of a rational substitution so the result stays a
    polynomial; ``den`` must be nonzero on the region of interest.
    """
    num = MultiPoly._coerce(num)
    den = MultiPoly._coerce(den)
    if den.is_zero():
        raise PolyError("zero denominator")
    coeffs = p.coefficients(name)
    if not coeffs:
        return ZERO
    deg = max(coeffs)
    num_pows = [ONE]
    den_pows = [ONE]
    for _ in range(deg):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    result = ZERO
    for k, c in coeffs.items():
        result = result + c * num_pows[k] * den_pows[deg - k]
    return result


# -- division -----------------------------------------------------------------------


def divide_exact(dividend: MultiPoly, divisor: MultiPoly) -> MultiPoly:
    """Exact quotient, or raise :class:`NotDivisible`.

    Division runs against lexicographic leading terms.  If ``divisor`` divides
    ``dividend`` every intermediate remainder is a multiple of ``divisor``, so
    its leading term is divisible by the divisor's; the first indivisible
    leading term therefore proves a nonzero remainder.
    """
    dividend = MultiPoly._coerce(dividend)
    divisor = MultiPoly._coerce(divisor)
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if dividend.is_zero():
        return ZERO
    if divisor.is_constant():
        return dividend / divisor.constant_value()
    if not set(divisor.variables) <= set(dividend.variables):
        raise NotDivisible("divisor has variables the dividend lacks")
    vs, rem, dv = dividend._aligned(divisor)
    n = len(vs)
    lt = max(dv)
    lc = dv[lt]
    lt_exps = _unpack(lt, n)
    others = [(k, c) for k, c in dv.items() if k != lt]
    rem = dict(rem)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, object] = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, None)
        if c is None:
            continue
        exps = _unpack(k, n)
        if any(e < f for e, f in zip(exps, lt_exps)):
            raise NotDivisible("nonzero remainder", remainder_term=(exps, c))
        m = k - lt
        qc = _cdiv(c, lc)
        quot[m] = qc
        for kd, cd in others:
            kk = m + kd
            old = rem.get(kk)
            if old is None:
                rem[kk] = -qc * cd
                heapq.heappush(heap, -kk)
            else:
                new = old - qc * cd
                if new:
                    rem[kk] = new
                else:
                    del rem[kk]
    return MultiPoly._make(vs, quot)


def try_divide(dividend: MultiPoly, divisor: MultiPoly) -> MultiPoly | None:
    try:
        return divide_exact(dividend, divisor)
    except NotDivisible:
        return None


# -- determinants and resultants ---------------------------------------------------


def determinant(matrix: Sequence[Sequence[object]]) -> MultiPoly:
    """Division-free determinant by Laplace expansion over column subsets (memoized)."""
    rows = [[MultiPoly._coerce(e) for e in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise PolyError("matrix must be square")
    if n == 0:
        return ONE
    memo: dict[int, MultiPoly] = {}

    def minor(i: int, cols: int) -> MultiPoly:
        # determinant of rows i.. restricted to the column bitmask `cols`
        if i == n:
            return ONE
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = ZERO
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            e = rows[i][j]
            if not e.is_zero():
                sub = minor(i + 1, cols & ~(1 << j))
                if not sub.is_zero():
                    term = e * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def sylvester_matrix(p: MultiPoly, q: MultiPoly, name: str) -> list[list[MultiPoly]]:
    """Sylvester matrix in ``name``: ``deg q`` shifted rows of p's coefficients, then ``deg p`` rows of q's."""
    m, n = p.degree(name), q.degree(name)
    if m < 0 or n < 0:
        raise PolyError("resultant of the zero polynomial")
    pc, qc = p.coefficients(name), q.coefficients(name)
    size = m + n
    rows = []
    for i in range(n):
        row = [ZERO] * size
        for k in range(m + 1):
            row[i + m - k] = pc.get(k, ZERO)
        rows.append(row)
    for i in range(m):
        row = [ZERO] * size
        for k in range(n + 1):
            row[i + n - k] = qc.get(k, ZERO)
        rows.append(row)
    return rows


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Resultant with respect to ``name`` as the Sylvester determinant (p-block rows first).

    For ``a*v + b`` and ``c*v + d`` this gives ``a*d - b*c``.
    """
    p, q = MultiPoly._coerce(p), MultiPoly._coerce(q)
    if name not in p.variables and name not in q.variables:
        raise PolyError(f"variable {name!r} occurs in neither polynomial")
    return determinant(sylvester_matrix(p, q, name))


# -- structure and truncation ---------------------------------------------------


@dataclass(frozen=True)
class Structure:
    term_count: int
    total_degree: int
    degrees: dict

    def degree_in(self, name: str) -> int:
        return self.degrees.get(name, 0)


def structure(p: MultiPoly) -> Structure:
    return Structure(p.term_count(), p.degree(), {v: p.degree(v) for v in p.variables})


def weighted_degrees(p: MultiPoly, weights: Mapping[str, int]) -> dict[tuple[int, ...], int]:
    missing = [v for v in p.variables if v not in weights]
    if missing:
        raise PolyError(f"no weight for variable(s) {missing}")
    w = [weights[v] for v in p.variables]
    return {e: sum(a * b for a, b in zip(e, w)) for e in p.terms}


def is_homogeneous(p: MultiPoly, weights: Mapping[str, int] | None = None) -> bool:
    """Homogeneity under ``weights`` (default: every variable weight 1)."""
    if p.is_zero():
        return True
    if weights is None:
        weights = {v: 1 for v in p.variables}
    return len(set(weighted_degrees(p, weights).values())) == 1


def weighted_truncation(p: MultiPoly, weights: Mapping[str, int], order: int | None = None) -> MultiPoly:
    """Terms of minimal weighted degree (the first truncation), or of weighted degree ``order``.

    Weights are non-negative integers; variables of weight 0 (e.g. a bounded
    angle parameter) ride along in every stratum.
    """
    if p.is_zero():
        raise PolyError("truncation of the zero polynomial")
    if any(w < 0 for w in weights.values()):
        raise PolyError("weights must be non-negative")
    wd = weighted_degrees(p, weights)
    lowest = min(wd.values())
    if order is None:
        order = lowest
    elif order < lowest:
        raise PolyError(f"order {order} below the minimal weighted degree {lowest}")
    terms = p.terms
    return build(p.variables, [(e, terms[e]) for e, d in wd.items() if d == order])


# -- text format --------------------------------------------------------------------


def _fmt_coef(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_string(p: MultiPoly) -> str:
    """Plain-text form ``3*x^2*y - 1/2*z + 7`` with terms in descending lex order."""
    if p.is_zero():
        return "0"
    n = len(p.variables)
    parts = []
    for key in sorted(p._terms, reverse=True):
        c = p._terms[key]
        exps = _unpack(key, n)
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(p.variables, exps) if e
        )
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{_fmt_coef(a)}*{mono}"
        else:
            body = _fmt_coef(a)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow, ast.Div)


def parse(text: str) -> MultiPoly:
    """Parse the text format; also accepts parentheses, ``**`` and products of factors."""
    try:
        tree = ast.parse(text.replace("^", "**").replace("\n", " "), mode="eval")
    except SyntaxError as exc:
        raise PolyError(f"cannot parse polynomial: {text!r}") from exc
    return _walk(tree.body)


def _walk(node) -> MultiPoly:
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise PolyError(f"unsupported constant {node.value!r}")
        return const(node.value)
    if isinstance(node, ast.Name):
        return var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, _BINOPS):
        left = _walk(node.left)
        right = _walk(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise PolyError("division only by nonzero constants")
            return left / right.constant_value()
        if not right.is_constant() or not isinstance(right.constant_value(), int):
            raise PolyError("exponent must be an integer constant")
        return left ** right.constant_value()
    raise PolyError(f"unsupported syntax: {ast.dump(node)}")
