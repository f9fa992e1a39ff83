"""Relation labels and positional type classification for triples.

A triple of circles/lines gets a label built from its pairwise relations
(letter I per intersecting pair, T per tangent pair, S when one member
separates the other two, brackets when all three share a point).  Against a
fixed frame of two intersecting lines, a third object falls into one of ten
positional types; against two parallel lines, into another ten.  The type
tables' solution distributions are computed from actual solver output and
located geometrically, so the published tables act as an oracle rather than
an implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import (
    Circle,
    FinitePoint,
    GeneralizedCircle,
    Line,
    PointAtInfinity,
    TangencyKind,
    Tolerance,
    common_point_of_three,
    intersection_count,
    normalize,
    point_on,
    same_object,
    tangency,
    tangency_point,
)
from .solver import SolutionSet, solve

__all__ = [
    "FitzgeraldLabel",
    "SectorFrame",
    "Distribution",
    "AnnulusKind",
    "TypeResult",
    "NotAdmissible",
    "AlphaCoincidesWithLine",
    "fitzgerald_label",
    "sector_of",
    "annulus_kind",
    "distribution",
    "i_type",
    "t_type",
]

INF = math.inf


class NotAdmissible(ValueError):
    pass


class AlphaCoincidesWithLine(ValueError):
    pass


class AnnulusKind(Enum):
    A = "A"  # touches the inner concentric circle externally
    B = "B"  # touches it internally

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FitzgeraldLabel:
    """Multiset of pair letters (I/T) plus S, bracketed when a common point exists."""

    letters: str  # canonically sorted, e.g. "IIT", "STT", ""
    bracketed: bool = False

    def __str__(self):
        body = self.letters if self.letters else "0"
        return f"[{body}]" if self.bracketed else body


def _weak_side(s, obj, tol: Tolerance):
    """Side of the separator an object weakly lies on: -1/+1, or None.

    ``None`` means the object straddles the separator (or sits exactly on
    it).  Unlike the strict :func:`apollonius.geometry.separates`, boundary
    contact counts as lying on a side, and the point at infinity shared by
    parallel lines does not block separation; this is the convention the
    published relation labels use.
    """
    eps = tol.eps
    if isinstance(s, Circle):
        (cx, cy), R = s.center, s.radius
        if isinstance(obj, PointAtInfinity):
            return 1
        if isinstance(obj, FinitePoint):
            d = math.hypot(obj.at[0] - cx, obj.at[1] - cy)
            if abs(d - R) <= eps:
                return None
            return -1 if d < R else 1
        if isinstance(obj, Line):
            h = abs(obj.normal[0] * cx + obj.normal[1] * cy - obj.offset)
            return None if h < R - eps else 1
        d = math.hypot(obj.center[0] - cx, obj.center[1] - cy)
        lo, hi = abs(d - obj.radius), d + obj.radius
        if hi <= R + eps:
            return -1
        if lo >= R - eps:
            return 1
        return None
    if isinstance(s, Line):
        (nx, ny), off = s.normal, s.offset
        if isinstance(obj, PointAtInfinity):
            return None
        if isinstance(obj, FinitePoint):
            v = nx * obj.at[0] + ny * obj.at[1] - off
            if abs(v) <= eps:
                return None
            return -1 if v < 0 else 1
        if isinstance(obj, Line):
            if tangency(s, obj, tol) is not TangencyKind.PARALLEL_LINES:
                return None
            return -1 if obj.offset < off else 1
        v = nx * obj.center[0] + ny * obj.center[1] - off
        if abs(v) < obj.radius - eps:
            return None
        return -1 if v < 0 else 1
    return None


def fitzgerald_label(a, b, c, tol: Tolerance) -> FitzgeraldLabel:
    objs = (a, b, c)
    letters = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        n = intersection_count(objs[i], objs[j], tol)
        if n == 2:
            letters.append("I")
        elif tangency(objs[i], objs[j], tol):
            letters.append("T")
    bracketed = bool(common_point_of_three(a, b, c, tol))
    if not bracketed:
        # A common point lies on all three objects, so nothing separates.
        for s, x, y in ((a, b, c), (b, a, c), (c, a, b)):
            if isinstance(s, (FinitePoint, PointAtInfinity)):
                continue
            sx = _weak_side(s, x, tol)
            sy = _weak_side(s, y, tol)
            if sx is not None and sy is not None and sx != sy:
                letters.append("S")
                break
    return FitzgeraldLabel("".join(sorted(letters)), bracketed)


@dataclass(frozen=True)
class SectorFrame:
    """Two intersecting lines, their vertex, and the sign pair that is sector I.

    Sectors are numbered counterclockwise from the sector whose side-sign
    pair equals ``sector_one``; type tables are compared up to isomorphism,
    so the numbering origin is a presentation choice.
    """

    l1: Line
    l2: Line
    sector_one: tuple[int, int] = (1, 1)

    def __post_init__(self):
        cross = self.l1.normal[0] * self.l2.normal[1] - self.l1.normal[1] * self.l2.normal[0]
        if abs(cross) < 1e-12:
            raise ValueError("frame lines must intersect")

    @property
    def vertex(self) -> tuple[float, float]:
        (n1x, n1y), c1 = self.l1.normal, self.l1.offset
        (n2x, n2y), c2 = self.l2.normal, self.l2.offset
        det = n1x * n2y - n1y * n2x
        return ((c1 * n2y - c2 * n1y) / det, (n1x * c2 - n2x * c1) / det)

    def side_signs(self, p: tuple[float, float]) -> tuple[int, int]:
        s1 = self.l1.normal[0] * p[0] + self.l1.normal[1] * p[1] - self.l1.offset
        s2 = self.l2.normal[0] * p[0] + self.l2.normal[1] * p[1] - self.l2.offset
        return (1 if s1 >= 0 else -1, 1 if s2 >= 0 else -1)

    def _arc_of(self, direction: tuple[float, float]) -> int:
        bounds = []
        for line in (self.l1, self.l2):
            theta = math.atan2(line.normal[0], -line.normal[1])  # direction angle
            bounds += [theta % (2.0 * math.pi), (theta + math.pi) % (2.0 * math.pi)]
        bounds.sort()
        ang = math.atan2(direction[1], direction[0]) % (2.0 * math.pi)
        idx = 0
        for b in bounds:
            if ang >= b:
                idx += 1
        return idx % 4

    def sector_index(self, p: tuple[float, float]) -> int:
        """Counterclockwise sector number, 1 at the ``sector_one`` sign pair."""
        o = self.vertex
        a, b = self.sector_one
        # a*n1 + b*n2 always points into the sector with side signs (a, b)
        ref = (a * self.l1.normal[0] + b * self.l2.normal[0],
               a * self.l1.normal[1] + b * self.l2.normal[1])
        arc_p = self._arc_of((p[0] - o[0], p[1] - o[1]))
        arc_ref = self._arc_of(ref)
        return (arc_p - arc_ref) % 4 + 1


def sector_of(c: Circle, frame: SectorFrame, tol: Tolerance) -> int:
    """Sector index (1..4) of an admissible circle; NotAdmissible otherwise."""
    if not isinstance(c, Circle):
        raise NotAdmissible("only circles occupy sectors")
    for line in (frame.l1, frame.l2):
        if not tangency(c, line, tol):
            raise NotAdmissible("circle is not tangent to both frame lines")
    return frame.sector_index(c.center)


def annulus_kind(s: GeneralizedCircle, inner: Circle, outer: Circle,
                 tol: Tolerance) -> AnnulusKind:
    """A if ``s`` touches the inner concentric circle externally, B if internally."""
    d = math.hypot(inner.center[0] - outer.center[0], inner.center[1] - outer.center[1])
    if d > tol.eps or inner.radius >= outer.radius:
        raise NotAdmissible("need concentric circles with inner.radius < outer.radius")
    kin = tangency(s, inner, tol)
    kout = tangency(s, outer, tol)
    if not kin or not kout:
        raise NotAdmissible("object is not tangent to both concentric circles")
    if kin is TangencyKind.EXTERNAL_CIRCLE:
        return AnnulusKind.A
    if kin is TangencyKind.INTERNAL_CIRCLE:
        return AnnulusKind.B
    raise NotAdmissible("tangency to the inner circle is not a circle tangency")


@dataclass(frozen=True)
class Distribution:
    """Sector counts x-y-z-t, or the parallel-frame form circles+lines."""

    sectors: tuple[int, int, int, int] | None = None
    parallel: tuple[float, float] | None = None  # (circles, lines); lines may be inf

    def __post_init__(self):
        if (self.sectors is None) == (self.parallel is None):
            raise ValueError("exactly one of sectors/parallel must be given")

    @staticmethod
    def _variants(t):
        rots = [t[i:] + t[:i] for i in range(4)]
        rev = tuple(reversed(t))
        rots += [rev[i:] + rev[:i] for i in range(4)]
        return rots

    def isomorphic(self, other: "Distribution") -> bool:
        """Equality up to cyclic shifts and reversal (sector form)."""
        if (self.sectors is None) != (other.sectors is None):
            return False
        if self.sectors is not None:
            return tuple(other.sectors) in self._variants(tuple(self.sectors))
        return self.parallel == other.parallel

    def __str__(self):
        if self.sectors is not None:
            return "-".join(str(v) for v in self.sectors)
        x, y = self.parallel
        ys = "inf" if y == INF else str(int(y))
        return f"{int(x)}+{ys}"


def distribution(solutions, frame, tol: Tolerance) -> Distribution:
    """Locate each circle solution of a solved set in its sector (or strip form).

    ``frame`` is a :class:`SectorFrame` for the sector form, or a pair of
    parallel lines ``(l1, l2)`` for the circles+lines form.
    """
    objs = solutions.objects if isinstance(solutions, SolutionSet) else tuple(solutions)
    if isinstance(frame, SectorFrame):
        counts = [0, 0, 0, 0]
        for obj in objs:
            if isinstance(obj, Circle):
                counts[sector_of(obj, frame, tol) - 1] += 1
        return Distribution(sectors=tuple(counts))
    circles = sum(1 for o in objs if isinstance(o, Circle))
    lines = sum(1 for o in objs if isinstance(o, Line))
    if isinstance(solutions, SolutionSet) and solutions.infinite:
        return Distribution(parallel=(circles, INF))
    return Distribution(parallel=(float(circles), float(lines)))


@dataclass(frozen=True)
class TypeResult:
    row: int  # 1..10
    label: FitzgeraldLabel
    distribution: Distribution
    extra_points: tuple  # O / point-at-infinity solutions (sector frame only)
    total: float  # number of solutions, math.inf for the infinite row
    solutions: SolutionSet | None

    @property
    def roman(self) -> str:
        return ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")[self.row - 1]


_REL_CROSS, _REL_TANGENT, _REL_APART = 2, 1, 0


def _relation(alpha, line, tol):
    if tangency(alpha, line, tol):
        return _REL_TANGENT
    return _REL_CROSS if intersection_count(alpha, line, tol) == 2 else _REL_APART


def _i_row(frame: SectorFrame, alpha, tol) -> int:
    o = frame.vertex
    overt = FinitePoint(o)
    if isinstance(alpha, Line):
        for l in (frame.l1, frame.l2):
            if tangency(alpha, l, tol) is TangencyKind.PARALLEL_LINES:
                return 10
        return 6 if point_on(alpha, overt, tol) else 5
    r1 = _relation(alpha, frame.l1, tol)
    r2 = _relation(alpha, frame.l2, tol)
    through = point_on(alpha, overt, tol)
    rel = tuple(sorted((r1, r2), reverse=True))
    if rel == (_REL_CROSS, _REL_CROSS):
        if through:
            return 5
        dc = math.hypot(alpha.center[0] - o[0], alpha.center[1] - o[1])
        return 1 if dc < alpha.radius else 2  # separates O from infinity or not
    if rel == (_REL_CROSS, _REL_TANGENT):
        tangent_line = frame.l1 if r1 == _REL_TANGENT else frame.l2
        tp = tangency_point(alpha, tangent_line, tol)
        return 10 if same_object(tp, overt, tol) else 7
    if rel == (_REL_TANGENT, _REL_TANGENT):
        return 9
    if rel == (_REL_CROSS, _REL_APART):
        return 3
    if rel == (_REL_TANGENT, _REL_APART):
        return 8
    return 4


def i_type(frame: SectorFrame, alpha: GeneralizedCircle, tol: Tolerance) -> TypeResult:
    """Positional type of ``alpha`` against two intersecting lines.

    Returns the table row, label, the sector distribution of the actual
    solutions generated by ``alpha``, and the extra vertex/infinity point
    solutions.
    """
    alpha = normalize(alpha, tol)
    if same_object(alpha, frame.l1, tol) or same_object(alpha, frame.l2, tol):
        raise AlphaCoincidesWithLine("alpha must differ from the frame lines")
    row = _i_row(frame, alpha, tol)
    label = fitzgerald_label(frame.l1, frame.l2, alpha, tol)
    sols = solve([frame.l1, frame.l2, alpha])
    dist = distribution(sols, frame, tol)
    extras = tuple(o for o in sols.objects
                   if isinstance(o, (FinitePoint, PointAtInfinity)))
    return TypeResult(row, label, dist, extras, sols.cardinality, sols)


def _t_row(l1: Line, l2: Line, alpha, lo, hi, tol) -> int:
    if isinstance(alpha, Line):
        return 10 if tangency(alpha, l1, tol) is TangencyKind.PARALLEL_LINES else 4
    r1 = _relation(alpha, l1, tol)
    r2 = _relation(alpha, l2, tol)
    pos = l1.normal[0] * alpha.center[0] + l1.normal[1] * alpha.center[1]
    inside = lo < pos < hi
    rel = tuple(sorted((r1, r2), reverse=True))
    if rel == (_REL_TANGENT, _REL_TANGENT):
        return 7
    if rel == (_REL_CROSS, _REL_CROSS):
        return 2
    if rel == (_REL_CROSS, _REL_TANGENT):
        return 6
    if rel == (_REL_CROSS, _REL_APART):
        return 3
    if rel == (_REL_TANGENT, _REL_APART):
        return 5 if inside else 8
    return 1 if inside else 9


def t_type(l1: Line, l2: Line, alpha: GeneralizedCircle, tol: Tolerance) -> TypeResult:
    """Positional type of ``alpha`` against two parallel lines (strip frame)."""
    l1, l2 = normalize(l1, tol), normalize(l2, tol)
    alpha = normalize(alpha, tol)
    if tangency(l1, l2, tol) is not TangencyKind.PARALLEL_LINES:
        raise ValueError("frame lines must be parallel and distinct")
    if same_object(alpha, l1, tol) or same_object(alpha, l2, tol):
        raise AlphaCoincidesWithLine("alpha must differ from the frame lines")
    lo, hi = sorted((l1.offset, l2.offset))
    row = _t_row(l1, l2, alpha, lo, hi, tol)
    label = fitzgerald_label(l1, l2, alpha, tol)
    sols = solve([l1, l2, alpha])
    dist = distribution(sols, (l1, l2), tol)
    # The strip table's total is the distribution sum: point solutions (the
    # point at infinity, when all three objects are lines) stay out of it.
    total = INF if sols.infinite else float(dist.parallel[0] + dist.parallel[1])
    extras = tuple(o for o in sols.objects
                   if isinstance(o, (FinitePoint, PointAtInfinity)))
    return TypeResult(row, label, dist, extras, total, sols)
