"""Seeded numerical scans: theorem checks, root uniqueness and the critical-point systems.

Reports are plain data and serialize to JSON with sorted keys; wall time is
deliberately left out so that identical configurations give byte-identical
output.  A scan that finds nothing is evidence, not proof: the system scans
publish the smallest residual they encountered (the *residual floor*).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import numeric
from .numeric import Jet, derivatives


@dataclass(frozen=True)
class ScanConfig:
    seed: int = 42
    samples: int = 100_000
    length_bounds: tuple[float, float] = (0.05, 20.0)
    t_bound: float = 0.95
    # sign-rule band on the normalized |xu - yz| and the Ptolemy tolerance
    band: float = 1e-3
    c2_tol: float = 1e-9
    # grid points per axis and Newton budget for the system scans
    grid: int = 40
    newton_iters: int = 50
    damping: float = 1e-12
    root_tol: float = 1e-10
    chunk: int = 1 << 16

    def __post_init__(self):
        lo, hi = self.length_bounds
        if not (0 < lo < hi < math.inf):
            raise ValueError("length bounds must satisfy 0 < lo < hi < inf")
        if not (0 < self.t_bound < 1):
            raise ValueError("t bound must lie in (0, 1)")
        if self.samples <= 0 or self.grid < 2:
            raise ValueError("samples must be positive and grid at least 2")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["length_bounds"] = list(self.length_bounds)
        return d


@dataclass
class ScanReport:
    kind: str
    config: dict
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    extremes: dict[str, float] = field(default_factory=dict)
    min_residual: float | None = None
    argmin: dict[str, float] | None = None
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ScanReport":
        return cls(**json.loads(text))

    def violations_csv(self) -> str:
        buf = io.StringIO()
        if self.violations:
            keys = sorted({k for v in self.violations for k in v})
            w = csv.DictWriter(buf, fieldnames=keys)
            w.writeheader()
            for v in self.violations:
                w.writerow(v)
        return buf.getvalue()


_MAX_WITNESSES = 50


def _f(v) -> float:
    return float(v)


def sample_params(cfg: ScanConfig, n: int, rng: np.random.Generator):
    """Log-uniform lengths and uniform cosines inside the configured box."""
    lo, hi = np.log(cfg.length_bounds[0]), np.log(cfg.length_bounds[1])
    L = np.exp(rng.uniform(lo, hi, size=(4, n)))
    t = rng.uniform(-cfg.t_bound, cfg.t_bound, size=n)
    return L[0], L[1], L[2], L[3], t


# ---------------------------------------------------------------------------
# theorem scan


def _incircle_sign(x, y, z, u, t):
    """Sign of D relative to the circle ABC (+1 inside) for the chart embedding, normalized."""
    s = np.sqrt(1 - t * t)
    pts = {
        "A": (-x, np.zeros_like(x)),
        "B": (-y * t, y * s),
        "C": (u, np.zeros_like(u)),
        "D": (z * t, -z * s),
    }
    ax, ay = pts["A"]
    bx, by = pts["B"]
    cx, cy = pts["C"]
    dx, dy = pts["D"]
    orient = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    adx, ady, bdx, bdy, cdx, cdy = ax - dx, ay - dy, bx - dx, by - dy, cx - dx, cy - dy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return np.sign(det * np.sign(orient))


def theorem_scan(cfg: ScanConfig = ScanConfig()) -> ScanReport:
    """Ptolemy inequality and the sign rule of C3 on random convex quadrilaterals.

    Lengths are divided by the Euclidean norm of the six-length vector before
    any tolerance is applied.  The sign rule compares ``sign c3`` with the
    circumcircle oracle (D inside circle ABC counts as positive) and with
    ``sign(xu - yz)``; samples within ``band`` of the cyclic locus are
    skipped for the sign comparison.  A cyclic sub-scan sets ``z = xu/y`` and
    checks that ``c2`` and ``c3`` vanish.
    """
    rng = np.random.default_rng(cfg.seed)
    report = ScanReport("theorems", cfg.to_dict())
    worst_c2, worst_sign, skipped = math.inf, 0, 0
    max_cyc_c2 = max_cyc_c3 = 0.0
    done = 0
    while done < cfg.samples:
        n = min(cfg.chunk, cfg.samples - done)
        x, y, z, u, t = sample_params(cfg, n, rng)
        s = numeric.sides(x, y, z, u, t)
        norm = np.sqrt(s.a**2 + s.b**2 + s.c**2 + s.d**2 + s.p**2 + s.q**2)
        a, b, c, d, p, q = (v / norm for v in (s.a, s.b, s.c, s.d, s.p, s.q))
        c2 = a * c + b * d - p * q
        c3 = a * b * p - b * c * q + c * d * p - d * a * q
        cycl = (x * u - y * z) / norm**2
        oracle = _incircle_sign(x, y, z, u, t)
        outside = np.abs(cycl) >= cfg.band
        skipped += int(np.count_nonzero(~outside))
        bad_c2 = c2 < -cfg.c2_tol
        bad_sign = outside & ((np.sign(c3) != oracle) | (np.sign(c3) != np.sign(cycl)))
        worst_c2 = min(worst_c2, float(c2.min()))
        worst_sign += int(np.count_nonzero(bad_sign))
        for idx in np.flatnonzero(bad_c2 | bad_sign)[: _MAX_WITNESSES - len(report.violations)]:
            report.violations.append({
                "x": _f(x[idx]), "y": _f(y[idx]), "z": _f(z[idx]), "u": _f(u[idx]), "t": _f(t[idx]),
                "c2": _f(c2[idx]), "c3": _f(c3[idx]), "cycl": _f(cycl[idx]), "oracle": int(oracle[idx]),
                "rule": "ptolemy" if bad_c2[idx] else "sign",
            })
        # cyclic slice: move D onto the circle through A, B, C
        zc = x * u / y
        sc = numeric.sides(x, y, zc, u, t)
        nc = np.sqrt(sc.a**2 + sc.b**2 + sc.c**2 + sc.d**2 + sc.p**2 + sc.q**2)
        ac, bc, cc, dc, pc, qc = (v / nc for v in (sc.a, sc.b, sc.c, sc.d, sc.p, sc.q))
        max_cyc_c2 = max(max_cyc_c2, float(np.abs(ac * cc + bc * dc - pc * qc).max()))
        max_cyc_c3 = max(max_cyc_c3, float(np.abs(ac * bc * pc - bc * cc * qc + cc * dc * pc - dc * ac * qc).max()))
        done += n
    report.checked = done
    report.extremes = {
        "min_c2": worst_c2,
        "cyclic_max_abs_c2": max_cyc_c2,
        "cyclic_max_abs_c3": max_cyc_c3,
    }
    report.notes = {"band_skipped": skipped, "sign_violations": worst_sign}
    if max(max_cyc_c2, max_cyc_c3) > cfg.c2_tol:
        report.violations.append({"rule": "cyclic-slice", "c2": max_cyc_c2, "c3": max_cyc_c3})
    return report


# ---------------------------------------------------------------------------
# root uniqueness


def roots_scan(cfg: ScanConfig = ScanConfig(samples=10_000), rel_tol: float = 1e-9) -> ScanReport:
    """Exactly one positive root of ``z -> F`` at ``xu/y``, a negative tail and a positive wall."""
    rng = np.random.default_rng(cfg.seed)
    report = ScanReport("roots", cfg.to_dict())
    x, y, _, u, t = sample_params(cfg, cfg.samples, rng)
    worst_rel, counts = 0.0, {}
    tail_bad = wall_bad = 0
    for i in range(cfg.samples):
        prof = numeric.root_profile(float(x[i]), float(y[i]), float(u[i]), float(t[i]))
        k = len(prof.roots)
        counts[str(k)] = counts.get(str(k), 0) + 1
        rel = prof.relative_error()
        worst_rel = max(worst_rel, rel)
        if k != 1 or rel > rel_tol:
            if len(report.violations) < _MAX_WITNESSES:
                report.violations.append({
                    "x": _f(x[i]), "y": _f(y[i]), "u": _f(u[i]), "t": _f(t[i]),
                    "roots": [float(r) for r in prof.roots], "expected": prof.expected, "rule": "uniqueness",
                })
    # tail: F < 0 at z = 10 xu/y; wall: F > 0 at z = 1e-6 with p normalized to 1
    zt = 10 * x * u / y
    tail = numeric.F(x, y, zt, u, t)
    tail_bad = int(np.count_nonzero(tail >= 0))
    p = x + u
    wall = numeric.F(x / p, y / p, 1e-6, u / p, t)
    wall_bad = int(np.count_nonzero(wall <= 0))
    for name, bad in (("tail", tail_bad), ("wall", wall_bad)):
        if bad:
            report.violations.append({"rule": name, "count": bad})
    report.checked = cfg.samples
    report.extremes = {"max_relative_error": worst_rel, "max_tail_F": float(tail.max()), "min_wall_F": float(wall.min())}
    report.notes = {"root_counts": dict(sorted(counts.items())), "relative_tolerance": rel_tol}
    return report


# ---------------------------------------------------------------------------
# Newton scans for the critical-point systems


def _residual51(x, y, z, t, u=1.0):
    d = derivatives(x, y, z, u, t)
    S = x + y + z + u
    return np.abs(d.F) / S**3 + np.abs(d.F_z) / S**2 + np.abs(d.F_zz) / S


def _residual34(x, y, z, t, u=1.0):
    d = derivatives(x, y, z, u, t)
    S = x + y + z + u
    return np.abs(d.F) / S**3 + (np.abs(d.F_x) + np.abs(d.F_y) + np.abs(d.F_z)) / S**2


def _system51(state, t):
    x, y, z = Jet.seed(list(state))
    d = derivatives(x, y, z, 1.0, t)
    return [d.F, d.F_z, d.F_zz]


def _system34(state, _t):
    x, y, z, t = Jet.seed(list(state))
    d = derivatives(x, y, z, 1.0, t)
    return [d.F, d.F_x, d.F_y, d.F_z]


def _grid(cfg: ScanConfig):
    lo, hi = cfg.length_bounds
    L = np.geomspace(lo, hi, cfg.grid)
    T = np.linspace(-cfg.t_bound, cfg.t_bound, cfg.grid)
    gx, gy, gz, gt = np.meshgrid(L, L, L, T, indexing="ij")
    return gx.ravel(), gy.ravel(), gz.ravel(), gt.ravel()


def _inside(state, cfg: ScanConfig):
    lo, hi = cfg.length_bounds
    return (
        np.all(np.isfinite(state), axis=0)
        & np.all((state[:3] >= lo) & (state[:3] <= hi), axis=0)
        & (np.abs(state[3]) <= cfg.t_bound)
    )


def _newton_scan(kind: str, cfg: ScanConfig, system, residual, unknowns: int) -> ScanReport:
    """Damped Newton from every grid point; track the smallest residual met inside the box.

    ``unknowns`` is 3 (``t`` frozen at its grid value) or 4 (``t`` moves).
    Each Newton step is halved (up to ``2^-12``) until the iterate stays in
    the box and the normalized residual decreases; a start for which no such
    step exists is retired (a domain exit or a stall counts as "no root
    here").  A start whose residual falls below ``root_tol`` is a converged
    interior root and is reported as a violation.
    """
    gx, gy, gz, gt = _grid(cfg)
    best = math.inf
    best_at: dict[str, float] | None = None
    retired = roots = 0
    grid_floor = math.inf
    eye = np.eye(unknowns)
    for start in range(0, gx.size, cfg.chunk):
        sl = slice(start, start + cfg.chunk)
        state = np.stack([gx[sl], gy[sl], gz[sl], gt[sl]])
        with np.errstate(all="ignore"):
            res = residual(*state)
        grid_floor = min(grid_floor, float(res.min()))
        best_here = res.copy()
        at = state.copy()
        active = np.ones(state.shape[1], dtype=bool)
        for _ in range(cfg.newton_iters):
            idx = np.flatnonzero(active)
            if idx.size == 0:
                break
            sub = state[:, idx]
            with np.errstate(all="ignore"):
                eqs = system(sub[:unknowns], sub[3])
                G = np.stack([e.val for e in eqs], axis=-1)
                J = np.stack([e.grad for e in eqs], axis=-1).transpose(1, 2, 0)
                Jt = J.transpose(0, 2, 1)
                M = Jt @ J
                rhs = -(Jt @ G[..., None])
                finite = np.isfinite(M).all(axis=(1, 2)) & np.isfinite(rhs).all(axis=(1, 2))
                M[~finite], rhs[~finite] = eye, 0.0
                # Tikhonov term relative to the size of J^T J, so it survives rounding
                lam = cfg.damping * np.trace(M, axis1=1, axis2=2) / unknowns + 1e-300
                step = np.linalg.solve(M + lam[:, None, None] * eye, rhs)[..., 0].T
            accepted = np.zeros(idx.size, dtype=bool)
            for k in range(13):
                todo = np.flatnonzero(~accepted)
                if todo.size == 0:
                    break
                trial = sub[:, todo].copy()
                trial[:unknowns] += step[:, todo] * 0.5**k
                ok = _inside(trial, cfg)
                with np.errstate(all="ignore"):
                    r = residual(*trial)
                ok &= r < res[idx[todo]]
                acc = todo[ok]
                sub[:, acc] = trial[:, ok]
                res[idx[acc]] = r[ok]
                accepted[acc] = True
            state[:, idx] = sub
            moved = idx[accepted]
            better = res[moved] < best_here[moved]
            best_here[moved[better]] = res[moved[better]]
            at[:, moved[better]] = state[:, moved[better]]
            retired += int(np.count_nonzero(~accepted))
            active[idx[~accepted]] = False
            active[moved[res[moved] < cfg.root_tol * 1e-3]] = False
        roots += int(np.count_nonzero(best_here < cfg.root_tol))
        k = int(np.argmin(best_here))
        if best_here[k] < best:
            best = float(best_here[k])
            best_at = {"x": _f(at[0, k]), "y": _f(at[1, k]), "z": _f(at[2, k]), "u": 1.0, "t": _f(at[3, k])}
    report = ScanReport(kind, cfg.to_dict(), checked=int(gx.size))
    report.min_residual = best
    report.argmin = best_at
    report.extremes = {"grid_floor": grid_floor, "newton_floor": best}
    report.notes = {"retired_starts": retired, "converged_roots": roots, "unknowns": unknowns}
    if roots:
        report.violations.append({"rule": "interior-root", "count": roots, **(best_at or {})})
    return report


def scan_system_51(cfg: ScanConfig = ScanConfig()) -> ScanReport:
    """``F = F_z = F_zz = 0`` on the slice ``u = 1``: Newton in ``(x, y, z)`` with ``t`` from the grid."""
    return _newton_scan("sys51", cfg, _system51, _residual51, 3)


def scan_system_34(cfg: ScanConfig = ScanConfig(grid=20)) -> ScanReport:
    """``F = F_x = F_y = F_z = 0`` on ``u = 1`` (``F_u`` follows by Euler): Newton in ``(x, y, z, t)``."""
    return _newton_scan("sys34", cfg, _system34, _residual34, 4)


def euler_check(cfg: ScanConfig = ScanConfig(samples=1000)) -> float:
    """Largest relative defect of ``x F_x + y F_y + z F_z + u F_u = 3F`` on random samples."""
    rng = np.random.default_rng(cfg.seed)
    x, y, z, u, t = sample_params(cfg, cfg.samples, rng)
    d = derivatives(x, y, z, u, t)
    lhs = x * d.F_x + y * d.F_y + z * d.F_z + u * d.F_u
    scale = (x + y + z + u) ** 3
    return float(np.max(np.abs(lhs - 3 * d.F) / scale))
