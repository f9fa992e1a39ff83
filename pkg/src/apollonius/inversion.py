"""Inversions (real and imaginary radius) and pair normal-form reductions.

An inversion with center ``z`` and power ``k`` sends ``p`` to
``z + k (p - z) / |p - z|^2``.  Negative power composes the inversion with
the point reflection in ``z`` ("imaginary radius"); both cases are
involutions and both preserve generalized tangency, which is the property
everything downstream leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import (
    INFINITY,
    Circle,
    FinitePoint,
    GeneralizedCircle,
    Line,
    PointAtInfinity,
    Tolerance,
    intersection_count,
    intersection_points,
    normalize,
    same_object,
    tangency,
    tangency_point,
)

__all__ = [
    "InversionMap",
    "NotIntersecting",
    "NotTangent",
    "PointOnCircle",
    "NotDisjointPair",
    "invert",
    "apply_map",
    "fixing_inversion",
    "map_to_concentric",
    "map_to_intersecting_lines",
    "map_to_parallel_lines",
    "limiting_points",
]


class NotIntersecting(ValueError):
    pass


class NotTangent(ValueError):
    pass


class PointOnCircle(ValueError):
    pass


class NotDisjointPair(ValueError):
    pass


@dataclass(frozen=True)
class InversionMap:
    center: tuple[float, float]
    power: float  # nonzero; negative = inversion composed with central symmetry

    def __post_init__(self):
        if self.power == 0.0 or not math.isfinite(self.power):
            raise ValueError("inversion power must be finite and nonzero")

    def apply_point(self, p: tuple[float, float]) -> tuple[float, float]:
        dx, dy = p[0] - self.center[0], p[1] - self.center[1]
        q = self.power / (dx * dx + dy * dy)
        return (self.center[0] + q * dx, self.center[1] + q * dy)


def invert(obj: GeneralizedCircle, m: InversionMap,
           tol: Tolerance) -> GeneralizedCircle:
    """Image of a generalized circle under an inversion; total on the inversive plane."""
    zx, zy = m.center
    k = m.power
    if isinstance(obj, PointAtInfinity):
        return FinitePoint((zx, zy))
    if isinstance(obj, FinitePoint):
        if math.hypot(obj.at[0] - zx, obj.at[1] - zy) <= tol.eps:
            return INFINITY
        return FinitePoint(m.apply_point(obj.at))
    if isinstance(obj, Line):
        (nx, ny), off = obj.normal, obj.offset
        c = off - (nx * zx + ny * zy)  # offset in the frame centered at m.center
        if abs(c) <= tol.eps:
            return obj  # line through the center is fixed
        cx = zx + k * nx / (2.0 * c)
        cy = zy + k * ny / (2.0 * c)
        return Circle((cx, cy), abs(k / (2.0 * c)))
    (ax, ay), r = obj.center, obj.radius
    dx, dy = ax - zx, ay - zy
    d = math.hypot(dx, dy)
    if abs(d - r) <= tol.eps:
        # Circle through the center maps to the line {p : u.(p - z) = k/(2r)}.
        ux, uy = dx / d, dy / d
        return normalize(Line((ux, uy), ux * zx + uy * zy + k / (2.0 * r)), tol)
    pw = d * d - r * r  # power of the inversion center w.r.t. the circle
    s = k / pw
    return Circle((zx + s * dx, zy + s * dy), abs(s) * r)


def apply_map(obj: GeneralizedCircle, m: InversionMap | None,
              tol: Tolerance) -> GeneralizedCircle:
    """Like :func:`invert`, but ``None`` acts as the identity."""
    return obj if m is None else invert(obj, m, tol)


def fixing_inversion(c: Circle, p: tuple[float, float], tol: Tolerance) -> InversionMap:
    """Inversion centered at ``p`` that maps ``c`` to itself.

    The power equals the power of ``p`` with respect to ``c``: positive
    outside, negative inside (the imaginary-radius case).
    """
    d = math.hypot(p[0] - c.center[0], p[1] - c.center[1])
    if abs(d - c.radius) <= tol.eps:
        raise PointOnCircle("no fixing inversion centered on the circle itself")
    return InversionMap((float(p[0]), float(p[1])), d * d - c.radius * c.radius)


def _finite_common_point(a, b, tol):
    for p in intersection_points(a, b, tol):
        if isinstance(p, FinitePoint):
            return p
    return None


def map_to_intersecting_lines(a: GeneralizedCircle, b: GeneralizedCircle,
                              tol: Tolerance) -> InversionMap | None:
    """Inversion sending a two-point-intersecting pair to intersecting lines.

    Returns ``None`` when the pair already is a pair of intersecting lines.
    """
    if intersection_count(a, b, tol) != 2:
        raise NotIntersecting("objects must meet in exactly two points")
    if isinstance(a, Line) and isinstance(b, Line):
        return None
    p = _finite_common_point(a, b, tol)
    return InversionMap(p.at, 1.0)


def map_to_parallel_lines(a: GeneralizedCircle, b: GeneralizedCircle,
                          tol: Tolerance) -> InversionMap | None:
    """Inversion sending a tangent pair to parallel lines (``None`` if already parallel)."""
    kind = tangency(a, b, tol)
    if not kind:
        raise NotTangent("objects must be tangent")
    p = tangency_point(a, b, tol)
    if isinstance(p, PointAtInfinity):
        return None  # already parallel lines
    return InversionMap(p.at, 1.0)


def _clearance(point, obj):
    """Distance from a point to the curve of a circle or line."""
    x, y = point
    if isinstance(obj, Circle):
        return abs(math.hypot(x - obj.center[0], y - obj.center[1]) - obj.radius)
    return abs(obj.normal[0] * x + obj.normal[1] * y - obj.offset)


def limiting_points(a: GeneralizedCircle, b: GeneralizedCircle,
                    tol: Tolerance) -> tuple[tuple[float, float], tuple[float, float]]:
    """Limiting points of the coaxal pencil of a disjoint circle pair / circle+line.

    Every circle of the pencil separates the two limiting points; inverting
    about either one turns the whole pencil concentric.
    """
    if isinstance(a, Line) and isinstance(b, Line):
        raise NotDisjointPair("two lines always share the point at infinity")
    if intersection_count(a, b, tol) != 0:
        raise NotDisjointPair("objects must be disjoint")
    if isinstance(a, Line) or isinstance(b, Line):
        circ, line = (b, a) if isinstance(a, Line) else (a, b)
        (nx, ny), off = line.normal, line.offset
        signed = nx * circ.center[0] + ny * circ.center[1] - off
        foot = (circ.center[0] - signed * nx, circ.center[1] - signed * ny)
        t = math.sqrt(signed * signed - circ.radius * circ.radius)
        s = 1.0 if signed >= 0 else -1.0
        return ((foot[0] + s * t * nx, foot[1] + s * t * ny),
                (foot[0] - s * t * nx, foot[1] - s * t * ny))
    (x1, y1), r1 = a.center, a.radius
    (x2, y2), r2 = b.center, b.radius
    d = math.hypot(x2 - x1, y2 - y1)
    ux, uy = (x2 - x1) / d, (y2 - y1) / d
    # Positions t along the center line (from a's center) satisfy
    # t^2 - 2 t_rad t + r1^2 = 0 with t_rad the radical-axis position.
    t_rad = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    disc = t_rad * t_rad - r1 * r1
    root = math.sqrt(max(disc, 0.0))
    t1, t2 = t_rad - root, t_rad + root
    return ((x1 + t1 * ux, y1 + t1 * uy), (x1 + t2 * ux, y1 + t2 * uy))


def map_to_concentric(a: GeneralizedCircle, b: GeneralizedCircle,
                      tol: Tolerance) -> tuple[InversionMap | None, tuple[float, float]]:
    """Inversion making a disjoint pair concentric, plus the common center.

    Already-concentric circles need no map and return ``(None, center)``.
    Otherwise the map inverts about the limiting point of the coaxal pencil
    with the larger clearance from both curves, and the common center of the
    images is the image of the other limiting point.
    """
    if isinstance(a, Circle) and isinstance(b, Circle):
        d = math.hypot(a.center[0] - b.center[0], a.center[1] - b.center[1])
        if d <= tol.eps:
            return None, a.center
    p1, p2 = limiting_points(a, b, tol)
    m1 = min(_clearance(p1, a), _clearance(p1, b))
    m2 = min(_clearance(p2, a), _clearance(p2, b))
    center_of, other = (p1, p2) if m1 >= m2 else (p2, p1)
    m = InversionMap(center_of, 1.0)
    return m, m.apply_point(other)
