"""Complete tangency solver for 3..n generalized circles.

Circle and point solutions come from an algebraic elimination: for a chosen
sign per given circle (external/internal tangency) the squared tangency
conditions

    (x - x_i)^2 + (y - y_i)^2 = (r + s_i r_i)^2

differ pairwise into equations linear in ``(x, y, r)``; a case split on the
rank of the linear part reduces everything to a quadratic in one unknown,
so each sign class contributes at most two solutions.  Line constraints are
linear from the start (one equation per side of the line) and extend the
sign-class space; point constraints are radius-zero circles with no sign.
Line solutions come from a separate common-tangent subroutine and point
solutions from intersection filtering.  Every candidate that survives is
re-validated against every input with the generalized tangency predicate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .geometry import (
    INFINITY,
    Circle,
    FinitePoint,
    GeneralizedCircle,
    Line,
    PointAtInfinity,
    TangencyKind,
    Tolerance,
    intersection_points,
    normalize,
    point_on,
    same_object,
    tangency,
    tangency_point,
)

__all__ = [
    "SignedInput",
    "SignedLine",
    "SignCombination",
    "Solution",
    "SolutionSet",
    "INFINITE_LINES",
    "TooFewObjects",
    "DegenerateInput",
    "NotASolution",
    "is_degenerate",
    "solve",
    "solve_signed",
    "tangent_lines",
    "point_solutions",
    "solution_signs",
]


class TooFewObjects(ValueError):
    pass


class DegenerateInput(ValueError):
    pass


class NotASolution(ValueError):
    pass


class _InfiniteLines:
    """Marker: the tangent-line family is a continuum."""

    def __repr__(self):
        return "INFINITE_LINES"


INFINITE_LINES = _InfiniteLines()


@dataclass(frozen=True)
class SignedInput:
    """A given circle together with its tangency sign (+1 external, -1 internal)."""

    circle: Circle
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class SignedLine:
    """A given line with the side (+1/-1 along its normal) a solution touches from."""

    line: Line
    side: int

    def __post_init__(self):
        if self.side not in (1, -1):
            raise ValueError("side must be +1 or -1")


@dataclass(frozen=True)
class SignCombination:
    """One tangency sign per given circle, modulo negating all of them."""

    signs: tuple[int, ...]

    @classmethod
    def of(cls, signs) -> "SignCombination":
        signs = tuple(int(s) for s in signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1/-1")
        if signs and signs[0] < 0:
            signs = tuple(-s for s in signs)
        return cls(signs)

    def opposite(self) -> "SignCombination":
        return SignCombination.of(tuple(-s for s in self.signs))  # same class

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class Solution:
    obj: GeneralizedCircle
    tangencies: tuple[TangencyKind, ...]  # one entry per input, input order
    signs: SignCombination | None  # circle/point solutions only


@dataclass(frozen=True)
class SolutionSet:
    solutions: tuple[Solution, ...]
    infinite: bool = False
    witness: GeneralizedCircle | None = None  # common tangency point of an infinite family
    inputs_excluded: int = 0

    @property
    def cardinality(self):
        return math.inf if self.infinite else len(self.solutions)

    @property
    def objects(self) -> tuple[GeneralizedCircle, ...]:
        return tuple(s.obj for s in self.solutions)

    def circles(self) -> list[Circle]:
        return [s.obj for s in self.solutions if isinstance(s.obj, Circle)]

    def lines(self) -> list[Line]:
        return [s.obj for s in self.solutions if isinstance(s.obj, Line)]

    def points(self) -> list:
        return [s.obj for s in self.solutions
                if isinstance(s.obj, (FinitePoint, PointAtInfinity))]


# ---------------------------------------------------------------------------
# degeneracy


def is_degenerate(objects, tol: Tolerance):
    """Some three objects pairwise tangent at one common point -> (True, witness)."""
    n = len(objects)
    for i, j, k in itertools.combinations(range(n), 3):
        pts = []
        ok = True
        for a, b in ((i, j), (i, k), (j, k)):
            p = tangency_point(objects[a], objects[b], tol)
            if p is None:
                ok = False
                break
            pts.append(p)
        if ok and same_object(pts[0], pts[1], tol) and same_object(pts[0], pts[2], tol):
            return True, pts[0]
    return False, None


def _all_tangent_at(objects, witness, tol: Tolerance) -> bool:
    for a, b in itertools.combinations(objects, 2):
        p = tangency_point(a, b, tol)
        if p is None or not same_object(p, witness, tol):
            return False
    return True


# ---------------------------------------------------------------------------
# the signed triple solver

# Constraints are plain tuples:
#   ("q", x, y, t)          quadratic: (X-x)^2 + (Y-y)^2 = (R + t)^2, t = sign*radius
#   ("l", nx, ny, sd, off)  linear: nx*X + ny*Y - sd*R = off
_PROP_EPS = 1e-11  # relative threshold for rank decisions


def _negligible(value: float, reference: float) -> bool:
    return abs(value) <= _PROP_EPS * reference + 1e-300


def _quad_roots(a: float, b: float, c: float, cluster: float, scale: float) -> list[float]:
    """Real roots of a r^2 + b r + c; near-double roots collapse to one.

    A negative discriminant still yields the vertex as a *tentative* root:
    configurations within tolerance of a tangency-count transition have
    within-tolerance solutions there, and the caller's residual validation
    is the arbiter (far-negative discriminants fail it immediately).
    """
    if _negligible(a, (abs(b) / max(scale, 1e-300)) + abs(c) / max(scale * scale, 1e-300) + 1e-30):
        if _negligible(b, abs(c) / max(scale, 1e-300) + 1e-30):
            return []
        return [-c / b]
    disc = b * b - 4.0 * a * c
    band = (a * cluster) ** 2
    if disc <= band:
        return [-b / (2.0 * a)]
    sq = math.sqrt(disc)
    if b == 0.0:
        root = sq / (2.0 * a)
        return [root, -root]
    q = -(b + math.copysign(sq, b)) / 2.0
    return [q / a, c / q]


def _line_circle_points(a, b, rhs, cx, cy, rho, cluster):
    """Intersections of the line a x + b y = rhs with a circle, tolerance-aware."""
    n = math.hypot(a, b)
    ux, uy = a / n, b / n
    signed = (a * cx + b * cy - rhs) / n
    delta = rho * rho - signed * signed
    band = cluster * (2.0 * abs(rho) + cluster)
    if delta < -band:
        return []
    fx, fy = cx - signed * ux, cy - signed * uy
    if delta <= band:
        return [(fx, fy)]
    h = math.sqrt(delta)
    return [(fx - h * uy, fy + h * ux), (fx + h * uy, fy - h * ux)]


def _solve_linear_triple(rows):
    """Unique solution of three linear equations in (x, y, r), or None."""
    (a1, b1, c1, d1), (a2, b2, c2, d2), (a3, b3, c3, d3) = rows
    det = (a1 * (b2 * c3 - b3 * c2)
           - b1 * (a2 * c3 - a3 * c2)
           + c1 * (a2 * b3 - a3 * b2))
    if _negligible(det, 1.0):
        return None
    dx = (d1 * (b2 * c3 - b3 * c2)
          - b1 * (d2 * c3 - d3 * c2)
          + c1 * (d2 * b3 - d3 * b2))
    dy = (a1 * (d2 * c3 - d3 * c2)
          - d1 * (a2 * c3 - a3 * c2)
          + c1 * (a2 * d3 - a3 * d2))
    dr = (a1 * (b2 * d3 - b3 * d2)
          - b1 * (a2 * d3 - a3 * d2)
          + d1 * (a2 * b3 - a3 * b2))
    return (dx / det, dy / det, dr / det)


def _rows_for(constraints):
    """Pivot quadratic (or None) and the linear rows of a constraint list."""
    quads = [c for c in constraints if c[0] == "q"]
    lines = [c for c in constraints if c[0] == "l"]
    rows = []
    pivot = quads[0] if quads else None
    if pivot is not None:
        _, x0, y0, t0 = pivot
        k0 = x0 * x0 + y0 * y0 - t0 * t0
        for _, xi, yi, ti in quads[1:]:
            rows.append((2.0 * (xi - x0), 2.0 * (yi - y0), 2.0 * (ti - t0),
                         xi * xi + yi * yi - ti * ti - k0))
    for _, nx, ny, sd, off in lines:
        rows.append((nx, ny, -float(sd), off))
    return pivot, rows


def _solve_triple(constraints, tol: Tolerance):
    """All (x, y, r) satisfying three signed constraints; r of either sign.

    Implements the full linear-elimination case split: independent rows give
    a quadratic in r; proportional rows reduce to a linear equation in r
    (none / one / dependent); the dependent branch classifies the leftover
    conic and raises :class:`DegenerateInput` when the system is genuinely
    infinite, which non-degenerate inputs never are.
    """
    pivot, rows = _rows_for(constraints)
    cluster = tol.cluster
    scale = tol.relative_scale

    if pivot is None:
        sol = _solve_linear_triple(rows)
        return [sol] if sol is not None else []

    _, x0, y0, t0 = pivot
    (a1, b1, c1, d1), (a2, b2, c2, d2) = rows
    n1 = math.hypot(a1, b1)
    n2 = math.hypot(a2, b2)

    if n1 < n2:  # keep the better-conditioned row first
        (a1, b1, c1, d1), (a2, b2, c2, d2) = (a2, b2, c2, d2), (a1, b1, c1, d1)
        n1, n2 = n2, n1

    if _negligible(n1, scale):
        # Both rows constrain r alone: concentric quadratics.  Consistent
        # values of r would leave a full circle of centers, which only
        # degenerate inputs produce.
        for c, d in ((c1, d1), (c2, d2)):
            if _negligible(c, scale) and not _negligible(d, scale * scale):
                return []
        if _negligible(c1, scale) and _negligible(c2, scale):
            raise DegenerateInput("rank-deficient concentric system")
        r1 = d1 / c1 if not _negligible(c1, scale) else None
        r2 = d2 / c2 if not _negligible(c2, scale) else None
        if r1 is not None and r2 is not None and abs(r1 - r2) > cluster:
            return []
        raise DegenerateInput("concentric inputs leave a circle of centers")

    cross = a1 * b2 - a2 * b1
    if not _negligible(cross, n1 * n2 + 1e-30):
        # Case (i): x and y are linear functions of r.
        x_0 = (d1 * b2 - d2 * b1) / cross
        x_1 = (c2 * b1 - c1 * b2) / cross
        y_0 = (a1 * d2 - a2 * d1) / cross
        y_1 = (a2 * c1 - a1 * c2) / cross
        dx0, dy0 = x_0 - x0, y_0 - y0
        qa = x_1 * x_1 + y_1 * y_1 - 1.0
        qb = 2.0 * (x_1 * dx0 + y_1 * dy0 - t0)
        qc = dx0 * dx0 + dy0 * dy0 - t0 * t0
        return [(x_0 + x_1 * r_, y_0 + y_1 * r_, r_)
                for r_ in _quad_roots(qa, qb, qc, cluster, scale)]

    # Case (ii): proportional rows.
    if _negligible(n2, scale):
        # Second row constrains r alone.
        if _negligible(c2, scale):
            if _negligible(d2, scale * scale):
                raise DegenerateInput("dependent constraint rows")
            return []
        r_star = d2 / c2
        pts = _line_circle_points(a1, b1, d1 - c1 * r_star, x0, y0,
                                  abs(r_star + t0), cluster)
        return [(px, py, r_star) for px, py in pts]

    lam = a2 / a1 if abs(a1) >= abs(b1) else b2 / b1
    coef_c = c2 - lam * c1
    coef_d = d2 - lam * d1
    ref_c = abs(c2) + abs(lam * c1) + 1e-30
    ref_d = abs(d2) + abs(lam * d1) + scale + 1e-30
    if not _negligible(coef_c, ref_c + scale):
        r_star = coef_d / coef_c
        pts = _line_circle_points(a1, b1, d1 - c1 * r_star, x0, y0,
                                  abs(r_star + t0), cluster)
        return [(px, py, r_star) for px, py in pts]
    if not _negligible(coef_d, ref_d):
        return []

    # Case (ii.c): the two rows coincide; one linear equation plus the pivot.
    # Substituting the linear relation into the pivot leaves a conic that a
    # non-degenerate triple can only satisfy in at most one point.
    if abs(a1) >= abs(b1):
        e0 = d1 / a1 - x0
        e1 = -b1 / a1
        e2 = -c1 / a1
        v0 = y0
        swap = False
    else:
        e0 = d1 / b1 - y0
        e1 = -a1 / b1
        e2 = -c1 / b1
        v0 = x0
        swap = True
    qa = e1 * e1 + 1.0
    qb = 2.0 * e1 * e2
    qc = e2 * e2 - 1.0
    qd = 2.0 * e0 * e1 - 2.0 * v0
    qe = 2.0 * e0 * e2 - 2.0 * t0
    qf = e0 * e0 + v0 * v0 - t0 * t0
    hess = 4.0 * qa * qc - qb * qb
    if _negligible(hess, qa * qa + qb * qb + qc * qc):
        raise DegenerateInput("parabolic constraint sheet")
    v_star = (qb * qe - 2.0 * qc * qd) / hess
    r_star = (qb * qd - 2.0 * qa * qe) / hess
    val = (qa * v_star * v_star + qb * v_star * r_star + qc * r_star * r_star
           + qd * v_star + qe * r_star + qf)
    val_ref = (abs(qa) * v_star * v_star + abs(qc) * r_star * r_star
               + abs(qf) + scale * scale)
    if abs(val) <= 1e-9 * val_ref:
        u_star = e0 + e1 * v_star + e2 * r_star
        if swap:
            return [(v_star, u_star + y0, r_star)]
        return [(u_star + x0, v_star, r_star)]
    if hess > 0.0 and (val > 0.0) == (qa > 0.0):
        return []
    raise DegenerateInput("constraint sheet is a full conic")


# ---------------------------------------------------------------------------
# constraint plumbing


def _constraint_of(obj, sign):
    if isinstance(obj, Circle):
        return ("q", obj.center[0], obj.center[1], sign * obj.radius)
    if isinstance(obj, FinitePoint):
        return ("q", obj.at[0], obj.at[1], 0.0)
    if isinstance(obj, Line):
        return ("l", obj.normal[0], obj.normal[1], sign, obj.offset)
    raise TypeError(f"cannot constrain {obj!r}")


def _residual(constraint, x, y, r):
    if constraint[0] == "q":
        _, xi, yi, ti = constraint
        return abs(math.hypot(x - xi, y - yi) - abs(r + ti))
    _, nx, ny, sd, off = constraint
    return abs(nx * x + ny * y - sd * r - off)


def _choose_triple(objects, tol: Tolerance):
    """Most independent non-degenerate triple of constraint indices."""
    n = len(objects)
    best, best_score = None, -1.0
    for combo in itertools.combinations(range(n), 3):
        triple = [objects[i] for i in combo]
        deg, _ = is_degenerate(triple, tol)
        if deg:
            continue
        pivot, rows = _rows_for([_constraint_of(o, 1) for o in triple])
        (a1, b1, *_), (a2, b2, *_) = rows[:2]
        n1, n2 = math.hypot(a1, b1), math.hypot(a2, b2)
        if n1 * n2 > 0.0:
            score = abs(a1 * b2 - a2 * b1) / (n1 * n2)
            score += 1e-6 * min(n1, n2) / tol.relative_scale
        else:
            score = 0.0
        if score > best_score:
            best, best_score = combo, score
    return best


def _signed_constraints(objects, signs_by_index):
    return [_constraint_of(obj, signs_by_index.get(i, 1))
            for i, obj in enumerate(objects)]


def _circle_point_candidates(objects, tol: Tolerance):
    """All (x, y, r>=0) circle/point candidates over every sign class."""
    indices = [i for i, o in enumerate(objects) if isinstance(o, (Circle, Line))]
    combo_indices = indices[1:]
    triple = _choose_triple(objects, tol)
    if triple is None:
        raise DegenerateInput("every constraint triple is degenerate")
    rest = [i for i in range(len(objects)) if i not in triple]
    out = []
    for tail in itertools.product((1, -1), repeat=len(combo_indices)):
        signs = dict(zip(combo_indices, tail))
        if indices:
            signs[indices[0]] = 1
        cons = _signed_constraints(objects, signs)
        try:
            roots = _solve_triple([cons[i] for i in triple], tol)
        except DegenerateInput:
            # A single sign class can look degenerate (e.g. inputs tangent
            # at a shared point for that sign pattern); it contributes no
            # isolated solutions.
            continue
        for x, y, r in roots:
            if not all(math.isfinite(v) for v in (x, y, r)):
                continue
            if all(_residual(cons[i], x, y, r) <= tol.eps for i in rest):
                out.append((x, y, abs(r)))
    return out


# ---------------------------------------------------------------------------
# public operations


def solve_signed(inputs, line_inputs=(), point_inputs=(), tol: Tolerance | None = None):
    """Circle/point solutions for one sign class: at most two of them.

    ``inputs`` are :class:`SignedInput`, ``line_inputs`` :class:`SignedLine`
    (the side sign is part of the class), ``point_inputs`` finite points.
    """
    objects = ([si.circle for si in inputs] + [sl.line for sl in line_inputs]
               + list(point_inputs))
    if len(objects) < 3:
        raise DegenerateInput("need at least three constraints")
    if tol is None:
        tol = Tolerance.for_objects(objects)
    deg, _ = is_degenerate(objects, tol)
    if deg:
        raise DegenerateInput("degenerate configuration")
    signs = {}
    ncirc = len(inputs)
    for i, si in enumerate(inputs):
        signs[i] = si.sign
    for j, sl in enumerate(line_inputs):
        signs[ncirc + j] = sl.side
    cons = _signed_constraints(objects, signs)
    triple = _choose_triple(objects, tol)
    if triple is None:
        raise DegenerateInput("every constraint triple is degenerate")
    rest = [i for i in range(len(objects)) if i not in triple]
    found = []
    for x, y, r in _solve_triple([cons[i] for i in triple], tol):
        if not all(math.isfinite(v) for v in (x, y, r)):
            continue
        if all(_residual(cons[i], x, y, r) <= tol.eps for i in rest):
            found.append((x, y, abs(r)))
    dedup_tol = Tolerance(tol.length_eps * 100.0, tol.relative_scale)
    objects_out = []
    for x, y, r in found:
        obj = FinitePoint((x, y)) if r <= tol.eps else Circle((x, y), r)
        if not any(same_object(obj, o, dedup_tol) for o in objects_out):
            objects_out.append(obj)
    return objects_out


def tangent_lines(objects, tol: Tolerance):
    """All lines tangent to every object, or INFINITE_LINES for a continuum.

    Candidate directions come from one anchor pair of circle/point
    constraints (or from the line inputs, which force parallelism); every
    candidate is then checked against all constraints and input lines are
    excluded.
    """
    circles = [(o.center[0], o.center[1], o.radius) for o in objects if isinstance(o, Circle)]
    pts = [(o.at[0], o.at[1], 0.0) for o in objects if isinstance(o, FinitePoint)]
    lines = [o for o in objects if isinstance(o, Line)]
    cons = circles + pts
    eps = tol.eps

    def is_input_line(candidate):
        return any(same_object(candidate, l, tol) for l in lines)

    def validated(nx, ny, d):
        for (zx, zy, r) in cons:
            if abs(abs(nx * zx + ny * zy - d) - r) > eps:
                return False
        return True

    out = []

    def push(nx, ny, d):
        cand = normalize(Line((nx, ny), d), tol)
        if is_input_line(cand) or not validated(*cand.normal, cand.offset):
            return
        if not any(same_object(cand, o, tol) for o in out):
            out.append(cand)

    if lines:
        n0 = lines[0].normal
        for l in lines[1:]:
            cross = n0[0] * l.normal[1] - n0[1] * l.normal[0]
            if abs(cross) > tol.length_eps:
                return []  # cannot be parallel to two crossing lines
        if not cons:
            return INFINITE_LINES  # every parallel line qualifies
        zx, zy, r = cons[0]
        base = n0[0] * zx + n0[1] * zy
        for d in {base - r, base + r}:
            push(n0[0], n0[1], d)
        return out

    if len(cons) < 2:
        return INFINITE_LINES

    # Anchor on the most separated pair of centers.
    besti, bestj, bestd = 0, 1, -1.0
    for i, j in itertools.combinations(range(len(cons)), 2):
        d = math.hypot(cons[i][0] - cons[j][0], cons[i][1] - cons[j][1])
        if d > bestd:
            besti, bestj, bestd = i, j, d
    if bestd <= eps:
        return []  # concentric constraints admit no common tangent line
    zi = cons[besti]
    zj = cons[bestj]
    wx, wy = zi[0] - zj[0], zi[1] - zj[1]
    wn = math.hypot(wx, wy)
    ux, uy = wx / wn, wy / wn
    tis = (1,) if zi[2] == 0.0 else (1, -1)
    tjs = (1,) if zj[2] == 0.0 else (1, -1)
    for ti, tj in itertools.product(tis, tjs):
        rho = (ti * zi[2] - tj * zj[2]) / wn
        if abs(rho) > 1.0 + eps:
            continue
        perp = math.sqrt(max(1.0 - rho * rho, 0.0))
        for sgn in (1.0, -1.0):
            nx = rho * ux - sgn * perp * uy
            ny = rho * uy + sgn * perp * ux
            push(nx, ny, nx * zi[0] + ny * zi[1] - ti * zi[2])
    return out


def point_solutions(objects, tol: Tolerance):
    """All points lying on every object (the point at infinity iff all are lines)."""
    if any(isinstance(o, (FinitePoint, PointAtInfinity)) for o in objects):
        return []  # a point cannot touch another point
    first, second, *rest = objects
    out = []
    for p in intersection_points(first, second, tol):
        if all(point_on(o, p, tol) for o in rest):
            if not any(same_object(p, q, tol) for q in out):
                out.append(p)
    return out


def solution_signs(solution, inputs, tol: Tolerance) -> SignCombination:
    """Sign class of a circle/point solution against the circle inputs."""
    if isinstance(solution, Line):
        raise NotASolution("lines do not carry a sign combination")
    signs = []
    for inp in inputs:
        if not isinstance(inp, Circle):
            continue
        if isinstance(solution, (FinitePoint, PointAtInfinity)):
            if not point_on(inp, solution, tol):
                raise NotASolution("point does not lie on the input circle")
            signs.append(1)  # a point admits either sign
            continue
        kind = tangency(solution, inp, tol)
        if kind is TangencyKind.EXTERNAL_CIRCLE:
            signs.append(1)
        elif kind is TangencyKind.INTERNAL_CIRCLE:
            signs.append(-1)
        else:
            raise NotASolution("object is not tangent to every input circle")
    return SignCombination.of(signs)


def _sort_key(obj):
    if isinstance(obj, Circle):
        return (0, round(obj.center[0], 9), round(obj.center[1], 9), round(obj.radius, 9))
    if isinstance(obj, Line):
        return (1, round(obj.normal[0], 9), round(obj.normal[1], 9), round(obj.offset, 9))
    if isinstance(obj, FinitePoint):
        return (2, round(obj.at[0], 9), round(obj.at[1], 9), 0.0)
    return (3, 0.0, 0.0, 0.0)


def solve(objects, tol: Tolerance | None = None) -> SolutionSet:
    """The complete solution set: all generalized circles tangent to every input.

    Raises :class:`TooFewObjects` below three inputs and
    :class:`DegenerateInput` for duplicated inputs.  A configuration whose
    members are all mutually tangent at one point has a continuum of
    solutions and comes back with ``infinite=True`` plus the witness point.
    """
    if len(objects) < 3:
        raise TooFewObjects("need at least three objects")
    rough = [normalize(o) for o in objects]
    if tol is None:
        tol = Tolerance.for_objects(rough)
    inputs = [normalize(o, tol) for o in rough]
    for a, b in itertools.combinations(inputs, 2):
        if same_object(a, b, tol):
            raise DegenerateInput("inputs must be pairwise distinct")

    deg, witness = is_degenerate(inputs, tol)
    if deg and _all_tangent_at(inputs, witness, tol):
        return SolutionSet((), infinite=True, witness=witness)

    candidates: list[GeneralizedCircle] = []
    if not any(isinstance(o, PointAtInfinity) for o in inputs):
        for x, y, r in _circle_point_candidates(inputs, tol):
            candidates.append(FinitePoint((x, y)) if r <= tol.eps
                              else Circle((x, y), r))

    line_result = tangent_lines([o for o in inputs
                                 if not isinstance(o, PointAtInfinity)], tol)
    if line_result is INFINITE_LINES:
        return SolutionSet((), infinite=True, witness=INFINITY)
    candidates.extend(line_result)
    candidates.extend(point_solutions(inputs, tol))

    dedup_tol = Tolerance(tol.length_eps * 100.0, tol.relative_scale)
    kept: list[GeneralizedCircle] = []
    excluded = 0
    for cand in candidates:
        if any(same_object(cand, inp, dedup_tol) for inp in inputs):
            excluded += 1
            continue
        if any(same_object(cand, k, dedup_tol) for k in kept):
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
