"""Independent numerical oracle for tangency solution sets.

Finds circle/point solutions by multi-start damped Gauss-Newton on smooth
polynomial tangency residuals, and line solutions by scanning the tangent
direction and refining where the per-input offset candidates align.  This
module deliberately never imports the elimination solver: the only shared
code is the geometry layer and the solution-set containers, so agreement
between the two is a genuine cross-check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    INFINITY,
    Circle,
    FinitePoint,
    Line,
    PointAtInfinity,
    Tolerance,
    intersection_points,
    normalize,
    point_on,
    same_object,
    tangency,
)
from .inversion import InversionMap, invert
from .solver import (  # containers and annotation only, no solving routines
    NotASolution,
    Solution,
    SolutionSet,
    _all_tangent_at,
    _sort_key,
    is_degenerate,
    solution_signs,
)

__all__ = ["OracleConfig", "oracle_solve"]


@dataclass(frozen=True)
class OracleConfig:
    starts: int = 200  # keep >= 100 for acceptance runs
    residual_tol: float = 1e-9
    cluster_radius: float = 1e-7
    seed: int = 0


def _polynomial_residuals(objects, scale):
    """Smooth residual/jacobian evaluators over (x, y, rho) for all starts.

    Circle inputs use (d^2 - rho^2 - r^2)^2 - 4 rho^2 r^2, which vanishes
    exactly at both tangency kinds and is even in rho; lines use
    (n.p - c)^2 - rho^2; points d^2 - rho^2.
    """
    circles = [(o.center[0], o.center[1], o.radius) for o in objects
               if isinstance(o, Circle)]
    lines = [(o.normal[0], o.normal[1], o.offset) for o in objects
             if isinstance(o, Line)]
    pts = [(o.at[0], o.at[1]) for o in objects if isinstance(o, FinitePoint)]
    s2 = scale * scale

    def evaluate(X):
        n = X.shape[0]
        m = len(circles) + len(lines) + len(pts)
        F = np.empty((n, m))
        J = np.empty((n, m, 3))
        x, y, rho = X[:, 0], X[:, 1], X[:, 2]
        k = 0
        for (zx, zy, r) in circles:
            dx, dy = x - zx, y - zy
            d2 = dx * dx + dy * dy
            u = d2 - rho * rho - r * r
            w = s2 * (s2 + r * r)  # keeps rows comparably scaled
            F[:, k] = (u * u - 4.0 * rho * rho * r * r) / w
            J[:, k, 0] = 4.0 * u * dx / w
            J[:, k, 1] = 4.0 * u * dy / w
            J[:, k, 2] = -4.0 * rho * (u + 2.0 * r * r) / w
            k += 1
        for (nx, ny, c) in lines:
            h = nx * x + ny * y - c
            F[:, k] = (h * h - rho * rho) / s2
            J[:, k, 0] = 2.0 * h * nx / s2
            J[:, k, 1] = 2.0 * h * ny / s2
            J[:, k, 2] = -2.0 * rho / s2
            k += 1
        for (px, py) in pts:
            dx, dy = x - px, y - py
            F[:, k] = (dx * dx + dy * dy - rho * rho) / s2
            J[:, k, 0] = 2.0 * dx / s2
            J[:, k, 1] = 2.0 * dy / s2
            J[:, k, 2] = -2.0 * rho / s2
            k += 1
        return F, J

    return evaluate


def _geometric_defect(objects, x, y, rho):
    worst = 0.0
    for o in objects:
        if isinstance(o, Circle):
            d = math.hypot(x - o.center[0], y - o.center[1])
            worst = max(worst, min(abs(d - (rho + o.radius)),
                                   abs(d - abs(rho - o.radius))))
        elif isinstance(o, Line):
            h = abs(o.normal[0] * x + o.normal[1] * y - o.offset)
            worst = max(worst, abs(h - rho))
        elif isinstance(o, FinitePoint):
            worst = max(worst, abs(math.hypot(x - o.at[0], y - o.at[1]) - rho))
    return worst


def _newton_circles(objects, cfg: OracleConfig, tol: Tolerance):
    rng = np.random.default_rng(cfg.seed)
    scale = tol.relative_scale
    xs, ys = [], []
    for o in objects:
        if isinstance(o, Circle):
            xs += [o.center[0] - o.radius, o.center[0] + o.radius]
            ys += [o.center[1] - o.radius, o.center[1] + o.radius]
        elif isinstance(o, FinitePoint):
            xs.append(o.at[0])
            ys.append(o.at[1])
        elif isinstance(o, Line):
            xs.append(o.normal[0] * o.offset)
            ys.append(o.normal[1] * o.offset)
    # Half the starts sample the input hull densely; the other half a much
    # wider box, because a nearly-flat solution has a faraway center.
    n = cfg.starts
    X = np.empty((n, 3))
    n_near = n // 2
    for sl, pad, rho_hi in ((slice(0, n_near), 1.0, 4.0),
                            (slice(n_near, n), 4.0, 8.0)):
        cnt = len(range(*sl.indices(n)))
        X[sl, 0] = rng.uniform(min(xs) - pad * scale, max(xs) + pad * scale, cnt)
        X[sl, 1] = rng.uniform(min(ys) - pad * scale, max(ys) + pad * scale, cnt)
        X[sl, 2] = np.exp(rng.uniform(math.log(1e-3 * scale),
                                      math.log(rho_hi * scale), cnt))

    evaluate = _polynomial_residuals(objects, scale)
    lam = np.full(n, 1e-3)
    F, J = evaluate(X)
    cost = np.einsum("ij,ij->i", F, F)
    eye = np.eye(3)
    for _ in range(80):
        JtJ = np.einsum("ijk,ijl->ikl", J, J)
        JtF = np.einsum("ijk,ij->ik", J, F)
        A = JtJ + lam[:, None, None] * eye
        try:
            step = np.linalg.solve(A, JtF[..., None])[..., 0]
        except np.linalg.LinAlgError:
            A = JtJ + (lam[:, None, None] + 1e-9) * eye
            step = np.linalg.solve(A, JtF[..., None])[..., 0]
        Xn = X - step
        Fn, Jn = evaluate(Xn)
        costn = np.einsum("ij,ij->i", Fn, Fn)
        better = costn < cost
        X[better] = Xn[better]
        F[better] = Fn[better]
        J[better] = Jn[better]
        cost[better] = costn[better]
        lam = np.where(better, lam * 0.5, lam * 4.0)
        lam = np.clip(lam, 1e-14, 1e8)

    accept_tol = max(cfg.residual_tol, 10.0 * tol.length_eps) * scale
    found = []
    for i in range(n):
        x, y, rho = float(X[i, 0]), float(X[i, 1]), abs(float(X[i, 2]))
        if not all(map(math.isfinite, (x, y, rho))):
            continue
        if _geometric_defect(objects, x, y, rho) <= accept_tol:
            found.append((x, y, rho))

    # Cluster-average the converged minima.  A double solution is found by
    # many starts scattered ~sqrt(machine eps) around it (the Jacobian is
    # singular there); their mean cancels the symmetric spread.
    radius = max(cfg.cluster_radius, 1e-6) * scale
    clusters: list[list[tuple[float, float, float]]] = []
    for cand in found:
        for cl in clusters:
            cx, cy, cr = cl[0]
            if (abs(cand[0] - cx) <= radius and abs(cand[1] - cy) <= radius
                    and abs(cand[2] - cr) <= radius):
                cl.append(cand)
                break
        else:
            clusters.append([cand])
    return [tuple(sum(v[k] for v in cl) / len(cl) for k in range(3))
            for cl in clusters]


def _offset_window(cands):
    """Minimal spread of one offset per input; cands = list of value lists."""
    events = sorted((v, i) for i, vs in enumerate(cands) for v in vs)
    need = len(cands)
    best = math.inf
    best_mid = 0.0
    counts = [0] * need
    covered = 0
    left = 0
    for right in range(len(events)):
        _, i = events[right]
        counts[i] += 1
        if counts[i] == 1:
            covered += 1
        while covered == need:
            spread = events[right][0] - events[left][0]
            if spread < best:
                best = spread
                best_mid = 0.5 * (events[right][0] + events[left][0])
            j = events[left][1]
            counts[j] -= 1
            if counts[j] == 0:
                covered -= 1
            left += 1
    return best, best_mid


def _line_candidates(objects, tol: Tolerance):
    circles = [(o.center[0], o.center[1], o.radius) for o in objects
               if isinstance(o, Circle)]
    pts = [(o.at[0], o.at[1]) for o in objects if isinstance(o, FinitePoint)]
    lines = [o for o in objects if isinstance(o, Line)]

    def spread_at(theta):
        nx, ny = math.cos(theta), math.sin(theta)
        cands = [[nx * zx + ny * zy - r, nx * zx + ny * zy + r]
                 for (zx, zy, r) in circles]
        cands += [[nx * px + ny * py] for (px, py) in pts]
        return _offset_window(cands), (nx, ny)

    out = []
    if lines:
        n0 = lines[0].normal
        if any(abs(n0[0] * l.normal[1] - n0[1] * l.normal[0]) > tol.length_eps
               for l in lines[1:]):
            return []
        theta = math.atan2(n0[1], n0[0])
        (spread, mid), n = spread_at(theta)
        # With the direction pinned, every input must agree on one offset
        # from the first constraint's candidates.
        base = circles + [(px, py, 0.0) for (px, py) in pts]
        if not base:
            return []
        zx, zy, r = base[0]
        for d in {n[0] * zx + n[1] * zy - r, n[0] * zx + n[1] * zy + r}:
            cand = normalize(Line(n, d), tol)
            if all(abs(abs(n[0] * bx + n[1] * by - d) - br) <= tol.eps
                   for (bx, by, br) in base):
                out.append(cand)
        return out

    if len(circles) + len(pts) < 2:
        return []
    grid = 720
    spreads = []
    for k in range(grid):
        (spread, _), _ = spread_at(math.pi * k / grid)
        spreads.append(spread)
    coarse = 0.2 * tol.relative_scale
    for k in range(grid):
        prev_s = spreads[(k - 1) % grid]
        next_s = spreads[(k + 1) % grid]
        if spreads[k] <= min(prev_s, next_s) and spreads[k] < coarse:
            lo = math.pi * (k - 1) / grid
            hi = math.pi * (k + 1) / grid
            # golden-section refinement of the spread minimum
            phi = (math.sqrt(5.0) - 1.0) / 2.0
            a, b = lo, hi
            c = b - phi * (b - a)
            d = a + phi * (b - a)
            fc = spread_at(c)[0][0]
            fd = spread_at(d)[0][0]
            for _ in range(80):
                if fc < fd:
                    b, d, fd = d, c, fc
                    c = b - phi * (b - a)
                    fc = spread_at(c)[0][0]
                else:
                    a, c, fc = c, d, fd
                    d = a + phi * (b - a)
                    fd = spread_at(d)[0][0]
            theta = 0.5 * (a + b)
            (spread, mid), n = spread_at(theta)
            if spread <= 100.0 * tol.eps:
                out.append(normalize(Line(n, mid), tol))
    return out


def _point_candidates(objects, tol: Tolerance):
    if any(isinstance(o, (FinitePoint, PointAtInfinity)) for o in objects):
        return []
    first, second, *rest = objects
    out = []
    for p in intersection_points(first, second, tol):
        if all(point_on(o, p, tol) for o in rest):
            out.append(p)
    return out


def _clearance_point(objects, tol: Tolerance):
    """A pivot for the inverted pass: far from every input curve."""
    xs, ys = [], []
    for o in objects:
        if isinstance(o, Circle):
            xs.append(o.center[0])
            ys.append(o.center[1])
        elif isinstance(o, FinitePoint):
            xs.append(o.at[0])
            ys.append(o.at[1])
        else:
            xs.append(o.normal[0] * o.offset)
            ys.append(o.normal[1] * o.offset)
    cx, cy = sum(xs) / len(xs), sum(ys) / len(ys)
    s = tol.relative_scale

    def clearance(p):
        worst = math.inf
        for o in objects:
            if isinstance(o, Circle):
                worst = min(worst, abs(math.hypot(p[0] - o.center[0],
                                                  p[1] - o.center[1]) - o.radius))
            elif isinstance(o, Line):
                worst = min(worst, abs(o.normal[0] * p[0] + o.normal[1] * p[1]
                                       - o.offset))
            elif isinstance(o, FinitePoint):
                worst = min(worst, math.hypot(p[0] - o.at[0], p[1] - o.at[1]))
        return worst

    cands = [(cx, cy)]
    for k in range(8):
        ang = 2.0 * math.pi * k / 8.0
        cands.append((cx + 0.37 * s * math.cos(ang), cy + 0.37 * s * math.sin(ang)))
        cands.append((cx + 1.11 * s * math.cos(ang), cy + 1.11 * s * math.sin(ang)))
    best = max(cands, key=clearance)
    return best if clearance(best) > 1e-3 * s else None


def oracle_solve(objects, cfg: OracleConfig | None = None,
                 tol: Tolerance | None = None) -> SolutionSet:
    """Solution set recovered without the elimination solver.

    Deterministic for a fixed config seed.  Degenerate all-tangent-at-one-
    point configurations are pre-screened and come back infinite, same as
    the solver's contract.  A second search pass runs on an inverted copy of
    the configuration so that huge, nearly-straight solutions (which no
    finite start box covers) appear as moderate circles and map back.
    """
    if cfg is None:
        cfg = OracleConfig()
    rough = [normalize(o) for o in objects]
    if tol is None:
        tol = Tolerance.for_objects(rough)
    inputs = [normalize(o, tol) for o in rough]
    deg, witness = is_degenerate(inputs, tol)
    if deg and _all_tangent_at(inputs, witness, tol):
        return SolutionSet((), infinite=True, witness=witness)

    finite_inputs = [o for o in inputs if not isinstance(o, PointAtInfinity)]
    candidates = []
    if not any(isinstance(o, PointAtInfinity) for o in inputs):
        for x, y, rho in _newton_circles(finite_inputs, cfg, tol):
            candidates.append(FinitePoint((x, y)) if rho <= tol.eps
                              else Circle((x, y), rho))
    candidates.extend(_line_candidates(finite_inputs, tol))
    candidates.extend(_point_candidates(inputs, tol))

    pivot = _clearance_point(finite_inputs, tol) if finite_inputs else None
    if pivot is not None and not any(isinstance(o, PointAtInfinity) for o in inputs):
        m = InversionMap(pivot, tol.relative_scale ** 2)
        imaged = [invert(o, m, tol) for o in finite_inputs]
        itol = Tolerance.for_objects(imaged)
        back = []
        for x, y, rho in _newton_circles(imaged, cfg, itol):
            if rho > itol.eps:
                back.append(Circle((x, y), rho))
        back.extend(_line_candidates(imaged, itol))
        for obj in back:
            pre = invert(obj, m, tol)
            if isinstance(pre, (Circle, Line)):
                candidates.append(pre)

    cluster_tol = Tolerance(
        max(cfg.cluster_radius / tol.relative_scale, 100.0 * tol.length_eps),
        tol.relative_scale)
    kept = []
    excluded = 0
    for cand in candidates:
        if any(same_object(cand, inp, cluster_tol) for inp in inputs):
            excluded += 1
            continue
        if any(same_object(cand, k, cluster_tol) for k in kept):
            continue
        kept.append(cand)

    solutions = []
    for cand in kept:
        kinds = []
        ok = True
        for inp in inputs:
            kind = tangency(cand, inp, tol)
            if not kind:
                ok = False
                break
            kinds.append(kind)
        if not ok:
            continue
        signs = None
        if not isinstance(cand, Line):
            try:
                signs = solution_signs(cand, inputs, tol)
            except NotASolution:
                signs = None
        solutions.append(Solution(cand, tuple(kinds), signs))
    solutions.sort(key=lambda s: _sort_key(s.obj))
    return SolutionSet(tuple(solutions), inputs_excluded=excluded)
