"""Generalized circles on the inversive plane and tolerance-aware predicates.

A *generalized circle* is a proper circle, a straight line, a single finite
point, or the point at infinity.  The point at infinity lies on every line
and on no circle, which makes tangency a total relation on the inversive
plane: tangent circles/line-circle pairs touch at a finite point, parallel
lines touch at infinity, and a point touches exactly the objects it lies on.

Lines are stored in Hesse normal form with a canonical orientation (unit
normal with positive y component, or y = 0 and positive x) so that one
geometric line has one representation and set deduplication can compare
structurally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Circle",
    "Line",
    "FinitePoint",
    "PointAtInfinity",
    "INFINITY",
    "GeneralizedCircle",
    "Tolerance",
    "TangencyKind",
    "NonFiniteCoordinate",
    "DegenerateRadius",
    "Coincident",
    "NotDisjoint",
    "normalize",
    "same_object",
    "tangency",
    "tangency_point",
    "intersection_count",
    "intersection_points",
    "separates",
    "common_point_of_three",
    "point_on",
]


class NonFiniteCoordinate(ValueError):
    """A coordinate or direction is NaN, infinite, or identically zero."""


class DegenerateRadius(ValueError):
    """Circle radius is indistinguishable from zero at the working tolerance."""


class Coincident(ValueError):
    """A pairwise query received two copies of the same object."""


class NotDisjoint(ValueError):
    """Separation asked about objects that share points with the separator."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute length tolerance scaled by the configuration diameter.

    ``length_eps`` is the base epsilon, ``relative_scale`` the diameter used
    to scale it; every geometric comparison in the package goes through
    ``eps`` so predicates stay mutually consistent.
    """

    length_eps: float = 1e-9
    relative_scale: float = 1.0

    def __post_init__(self):
        if not (self.length_eps > 0.0) or not (self.relative_scale > 0.0):
            raise ValueError("tolerance parameters must be positive")

    @property
    def eps(self) -> float:
        return self.length_eps * self.relative_scale

    @property
    def cluster(self) -> float:
        """Deduplication radius for solution sets.

        Sits two orders above ``eps`` because a numerically double root of a
        quadratic splits by about sqrt(machine epsilon) ~ 1e-8 relative, and
        solution counts ignore multiplicity, so near-double roots must merge
        reliably.
        """
        return 100.0 * self.eps

    @classmethod
    def for_objects(cls, objects, length_eps: float = 1e-9) -> "Tolerance":
        """Tolerance scaled by the bounding box of the finite features."""
        xs, ys = [], []
        for obj in objects:
            if isinstance(obj, Circle):
                xs += [obj.center[0] - obj.radius, obj.center[0] + obj.radius]
                ys += [obj.center[1] - obj.radius, obj.center[1] + obj.radius]
            elif isinstance(obj, FinitePoint):
                xs.append(obj.at[0])
                ys.append(obj.at[1])
            elif isinstance(obj, Line):
                # Lines are unbounded; their closest point to the origin
                # participates so far-away lines still widen the scale.
                xs.append(obj.normal[0] * obj.offset)
                ys.append(obj.normal[1] * obj.offset)
        if not xs:
            return cls(length_eps=length_eps)
        diameter = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        extent = max(abs(v) for v in xs + ys)
        return cls(length_eps=length_eps,
                   relative_scale=max(1.0, diameter, extent))


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius: float


@dataclass(frozen=True)
class Line:
    """Hesse normal form: the point set {p : normal . p = offset}."""

    normal: tuple[float, float]
    offset: float


@dataclass(frozen=True)
class FinitePoint:
    at: tuple[float, float]


@dataclass(frozen=True)
class PointAtInfinity:
    """The single point shared by all lines."""


INFINITY = PointAtInfinity()

GeneralizedCircle = Circle | Line | FinitePoint | PointAtInfinity


class TangencyKind(Enum):
    NONE = "none"
    EXTERNAL_CIRCLE = "external"
    INTERNAL_CIRCLE = "internal"
    LINE_TANGENT = "line"
    PARALLEL_LINES = "parallel"
    POINT_INCIDENCE = "incidence"
    COINCIDENT = "coincident"  # error sentinel, never stored in solution sets

    def __bool__(self):
        return self is not TangencyKind.NONE


def _require_finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise NonFiniteCoordinate(f"non-finite coordinate {v!r}")


def normalize(raw: GeneralizedCircle, tol: Tolerance = DEFAULT_TOLERANCE) -> GeneralizedCircle:
    """Return the canonical form of ``raw``; idempotent.

    Circles get a positive radius, lines a unit normal with the canonical
    orientation.  Raises :class:`DegenerateRadius` when a circle cannot be
    told apart from a point at the working tolerance.
    """
    if isinstance(raw, Circle):
        x, y = raw.center
        _require_finite(x, y, raw.radius)
        r = abs(raw.radius)
        if r <= tol.eps:
            raise DegenerateRadius(f"radius {raw.radius!r} below tolerance")
        return Circle((float(x), float(y)), float(r))
    if isinstance(raw, Line):
        nx, ny = raw.normal
        _require_finite(nx, ny, raw.offset)
        norm = math.hypot(nx, ny)
        if norm <= 0.0:
            raise NonFiniteCoordinate("line normal must be nonzero")
        nx, ny, off = nx / norm, ny / norm, raw.offset / norm
        if ny < 0.0 or (ny == 0.0 and nx < 0.0):
            nx, ny, off = -nx, -ny, -off
        return Line((nx + 0.0, ny + 0.0), off + 0.0)  # +0.0 clears negative zero
    if isinstance(raw, FinitePoint):
        x, y = raw.at
        _require_finite(x, y)
        return FinitePoint((float(x), float(y)))
    if isinstance(raw, PointAtInfinity):
        return INFINITY
    raise TypeError(f"not a generalized circle: {raw!r}")


def _close(a: float, b: float, eps: float) -> bool:
    return abs(a - b) <= eps


def same_object(a: GeneralizedCircle, b: GeneralizedCircle, tol: Tolerance) -> bool:
    """Geometric equality of two normalized generalized circles."""
    if isinstance(a, PointAtInfinity) or isinstance(b, PointAtInfinity):
        return isinstance(a, PointAtInfinity) and isinstance(b, PointAtInfinity)
    if type(a) is not type(b):
        return False
    eps = tol.eps
    if isinstance(a, Circle):
        return (_close(a.center[0], b.center[0], eps)
                and _close(a.center[1], b.center[1], eps)
                and _close(a.radius, b.radius, eps))
    if isinstance(a, Line):
        # Orientation can flip between nearly-horizontal normals, so compare
        # both orientations.
        if (_close(a.normal[0], b.normal[0], tol.length_eps)
                and _close(a.normal[1], b.normal[1], tol.length_eps)
                and _close(a.offset, b.offset, eps)):
            return True
        return (_close(a.normal[0], -b.normal[0], tol.length_eps)
                and _close(a.normal[1], -b.normal[1], tol.length_eps)
                and _close(a.offset, -b.offset, eps))
    return (_close(a.at[0], b.at[0], eps)
            and _close(a.at[1], b.at[1], eps))


def point_on(obj: GeneralizedCircle, p: FinitePoint | PointAtInfinity, tol: Tolerance) -> bool:
    """Incidence of a point (finite or at infinity) with an object."""
    if isinstance(p, PointAtInfinity):
        return isinstance(obj, Line)
    x, y = p.at
    if isinstance(obj, Circle):
        return _close(math.hypot(x - obj.center[0], y - obj.center[1]), obj.radius, tol.eps)
    if isinstance(obj, Line):
        return abs(obj.normal[0] * x + obj.normal[1] * y - obj.offset) <= tol.eps
    if isinstance(obj, FinitePoint):
        return same_object(obj, p, tol)
    return False


def _parallel(a: Line, b: Line, tol: Tolerance) -> bool:
    cross = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0]
    dot = a.normal[0] * b.normal[0] + a.normal[1] * b.normal[1]
    return abs(cross) <= tol.length_eps and dot > 0.0


def tangency(a: GeneralizedCircle, b: GeneralizedCircle, tol: Tolerance) -> TangencyKind:
    """Classify the generalized tangency of two distinct objects.

    Symmetric in its arguments.  Raises :class:`Coincident` when the two
    arguments are the same object within tolerance.
    """
    if same_object(a, b, tol):
        raise Coincident("tangency query on coincident objects")
    # Dispatch with points handled first: a point touches what it lies on.
    for p, other in ((a, b), (b, a)):
        if isinstance(p, (FinitePoint, PointAtInfinity)):
            if isinstance(other, (FinitePoint, PointAtInfinity)):
                return TangencyKind.NONE
            return TangencyKind.POINT_INCIDENCE if point_on(other, p, tol) else TangencyKind.NONE
    if isinstance(a, Circle) and isinstance(b, Circle):
        d = math.hypot(a.center[0] - b.center[0], a.center[1] - b.center[1])
        if _close(d, a.radius + b.radius, tol.eps):
            return TangencyKind.EXTERNAL_CIRCLE
        if _close(d, abs(a.radius - b.radius), tol.eps):
            return TangencyKind.INTERNAL_CIRCLE
        return TangencyKind.NONE
    if isinstance(a, Line) and isinstance(b, Line):
        return TangencyKind.PARALLEL_LINES if _parallel(a, b, tol) else TangencyKind.NONE
    circ, line = (a, b) if isinstance(a, Circle) else (b, a)
    h = abs(line.normal[0] * circ.center[0] + line.normal[1] * circ.center[1] - line.offset)
    return TangencyKind.LINE_TANGENT if _close(h, circ.radius, tol.eps) else TangencyKind.NONE


def intersection_points(a: GeneralizedCircle, b: GeneralizedCircle, tol: Tolerance) -> list:
    """All common points of two distinct objects, as point objects.

    Includes the point at infinity where appropriate (any two lines share
    it; it is the only common point of parallel lines).  Tangent pairs
    yield their single tangency point.
    """
    if same_object(a, b, tol):
        raise Coincident("intersection query on coincident objects")
    for p, other in ((a, b), (b, a)):
        if isinstance(p, (FinitePoint, PointAtInfinity)):
            if isinstance(other, (FinitePoint, PointAtInfinity)):
                return []
            return [p] if point_on(other, p, tol) else []
    if isinstance(a, Line) and isinstance(b, Line):
        if _parallel(a, b, tol):
            return [INFINITY]
        (n1x, n1y), c1 = a.normal, a.offset
        (n2x, n2y), c2 = b.normal, b.offset
        det = n1x * n2y - n1y * n2x
        x = (c1 * n2y - c2 * n1y) / det
        y = (n1x * c2 - n2x * c1) / det
        return [FinitePoint((x, y)), INFINITY]
    if isinstance(a, Circle) and isinstance(b, Circle):
        (x1, y1), r1 = a.center, a.radius
        (x2, y2), r2 = b.center, b.radius
        d = math.hypot(x2 - x1, y2 - y1)
        if d <= tol.eps:
            return []  # concentric, distinct radii
        ux, uy = (x2 - x1) / d, (y2 - y1) / d
        kind = tangency(a, b, tol)
        if kind is TangencyKind.EXTERNAL_CIRCLE:
            return [FinitePoint((x1 + r1 * ux, y1 + r1 * uy))]
        if kind is TangencyKind.INTERNAL_CIRCLE:
            sgn = 1.0 if r1 >= r2 else -1.0
            return [FinitePoint((x1 + sgn * r1 * ux, y1 + sgn * r1 * uy))]
        if d > r1 + r2 or d < abs(r1 - r2):
            return []
        along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
        h2 = r1 * r1 - along * along
        h = math.sqrt(max(h2, 0.0))
        bx, by = x1 + along * ux, y1 + along * uy
        return [FinitePoint((bx - h * uy, by + h * ux)),
                FinitePoint((bx + h * uy, by - h * ux))]
    circ, line = (a, b) if isinstance(a, Circle) else (b, a)
    (cx, cy), r = circ.center, circ.radius
    (nx, ny), off = line.normal, line.offset
    signed = nx * cx + ny * cy - off
    fx, fy = cx - signed * nx, cy - signed * ny  # foot of the perpendicular
    if _close(abs(signed), r, tol.eps):
        return [FinitePoint((fx, fy))]
    h2 = r * r - signed * signed
    if h2 < 0.0:
        return []
    h = math.sqrt(h2)
    return [FinitePoint((fx - h * ny, fy + h * nx)),
            FinitePoint((fx + h * ny, fy - h * nx))]


def intersection_count(a: GeneralizedCircle, b: GeneralizedCircle, tol: Tolerance):
    """Number of common points on the inversive plane: 0, 1, 2 or math.inf."""
    if same_object(a, b, tol):
        raise Coincident("intersection count on coincident objects")
    if isinstance(a, Line) and isinstance(b, Line):
        return 1 if _parallel(a, b, tol) else 2
    return len(intersection_points(a, b, tol))


def tangency_point(a: GeneralizedCircle, b: GeneralizedCircle, tol: Tolerance):
    """The single common point of a tangent pair, or None if not tangent."""
    kind = tangency(a, b, tol)
    if not kind:
        return None
    if kind is TangencyKind.PARALLEL_LINES:
        return INFINITY
    if kind is TangencyKind.POINT_INCIDENCE:
        return a if isinstance(a, (FinitePoint, PointAtInfinity)) else b
    pts = intersection_points(a, b, tol)
    return pts[0] if pts else None


def _side_of(sep: GeneralizedCircle, obj: GeneralizedCircle, tol: Tolerance) -> int:
    """Which component of the complement of ``sep`` contains ``obj`` entirely.

    Returns -1 (inside disk / negative half-plane) or +1; raises
    :class:`NotDisjoint` when the object meets the separator.
    """
    eps = tol.eps
    if isinstance(sep, Circle):
        (cx, cy), R = sep.center, sep.radius
        if isinstance(obj, PointAtInfinity):
            return 1
        if isinstance(obj, FinitePoint):
            d = math.hypot(obj.at[0] - cx, obj.at[1] - cy)
            if abs(d - R) <= eps:
                raise NotDisjoint("point lies on the separator")
            return -1 if d < R else 1
        if isinstance(obj, Line):
            h = abs(sep.center[0] * obj.normal[0] + sep.center[1] * obj.normal[1] - obj.offset)
            if h <= R + eps:
                raise NotDisjoint("line meets the separator")
            return 1
        d = math.hypot(obj.center[0] - cx, obj.center[1] - cy)
        # Distances from the separator's center to the curve of obj span
        # [|d - r|, d + r]; the curve avoids the separator iff that interval
        # avoids R.
        if d + obj.radius < R - eps:
            return -1
        if abs(d - obj.radius) > R + eps:
            return 1
        raise NotDisjoint("circle meets the separator")
    if isinstance(sep, Line):
        (nx, ny), off = sep.normal, sep.offset
        if isinstance(obj, (PointAtInfinity, Line)):
            # Every line shares the point at infinity with the separator.
            raise NotDisjoint("object shares a point with the separating line")
        if isinstance(obj, FinitePoint):
            s = nx * obj.at[0] + ny * obj.at[1] - off
            if abs(s) <= eps:
                raise NotDisjoint("point lies on the separator")
            return -1 if s < 0 else 1
        s = nx * obj.center[0] + ny * obj.center[1] - off
        if abs(s) <= obj.radius + eps:
            raise NotDisjoint("circle meets the separator")
        return -1 if s < 0 else 1
    raise TypeError("separator must be a circle or a line")


def separates(s: GeneralizedCircle, a: GeneralizedCircle, b: GeneralizedCircle,
              tol: Tolerance) -> bool:
    """True iff ``a`` and ``b`` lie in different components of the complement of ``s``."""
    return _side_of(s, a, tol) != _side_of(s, b, tol)


def common_point_of_three(a, b, c, tol: Tolerance) -> list:
    """Points lying on all three of ``a``, ``b``, ``c`` (0, 1 or 2 of them)."""
    out = []
    for p in intersection_points(a, b, tol):
        if point_on(c, p, tol):
            if not any(same_object(p, q, tol) for q in out):
                out.append(p)
    return out
