"""Deterministic generators for the named extremal configurations.

Each generator emits a :class:`Scenario`: a fixed input list, the expected
solution count, and (where closed forms exist) the expected solutions
themselves.  These are the quadruples that attain the six-solution maximum,
the square examples, the five-input example attaining four, and witnesses
for the realizable complete-bipartite tangency patterns.

Scenario names form a stable registry: ``square1``, ``square2``, ``five``,
``c1``..``c4``, and ``kmn-M-N``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import Circle, FinitePoint, GeneralizedCircle, Line, Tolerance, normalize, same_object, tangency
from .solver import is_degenerate, solve

__all__ = [
    "Scenario",
    "Unrealizable",
    "InvalidParams",
    "NoFeasibleGamma",
    "UnknownScenario",
    "construction_1",
    "construction_2",
    "construction_3",
    "construction_4",
    "example_square",
    "five_circle_example",
    "kmn_witness",
    "kmn_realizable",
    "scenario_by_name",
    "registry_names",
    "SQUARE_RADII",
    "MIN_ADMISSIBLE_RATIO",
]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT5 = math.sqrt(5.0)

# Unit-half-side square: the solver reports six solutions on two radius
# plateaus, rho in (0,1) and rho > sqrt(2).  Values frozen from the sweep in
# scripts/square_radius_sweep.py.
SQUARE_RADII = {1: 0.5, 2: 2.0}

# Two admissible circles in one sector admit the full six-solution set only
# when their size ratio exceeds this (at the critical ratio the two
# vertex-straddling solutions collapse into one).
MIN_ADMISSIBLE_RATIO = 3.0 + 2.0 * SQRT2


class InvalidParams(ValueError):
    pass


class NoFeasibleGamma(ValueError):
    pass


class UnknownScenario(KeyError):
    pass


@dataclass(frozen=True)
class Scenario:
    name: str
    inputs: tuple[GeneralizedCircle, ...]
    expected_solution_count: int
    expected_solutions: tuple[GeneralizedCircle, ...] | None = None
    provenance: str = ""
    parts: tuple[int, int] | None = None  # bipartite witness split (n_a, n_b)

    def tolerance(self) -> Tolerance:
        return Tolerance.for_objects(self.inputs)


@dataclass(frozen=True)
class Unrealizable:
    """Refusal for an impossible complete-bipartite tangency pattern."""

    m: int
    n: int
    reason_code: str  # triple-bound | quadruple-bound | quintuple-bound
    reason: str


def construction_1(a1: float = 1.0, a2: float = 7.0) -> Scenario:
    """Two admissible circles in one sector plus their central reflections.

    The six solutions are the two frame lines, a pair of vertex-containing
    circles, and a pair of vertex-avoiding circles; the whole solution set
    is centrally symmetric about the vertex.  Requires
    ``a2/a1 > MIN_ADMISSIBLE_RATIO`` for the vertex-containing pair to exist.
    """
    if not (0.0 < a1 < a2):
        raise InvalidParams("need 0 < a1 < a2")
    if a2 <= MIN_ADMISSIBLE_RATIO * a1 * (1.0 + 1e-12):
        raise InvalidParams(
            f"a2/a1 must exceed 3+2*sqrt(2) ~ {MIN_ADMISSIBLE_RATIO:.6f} "
            "for all six solutions to exist")
    inputs = (
        Circle((a1, a1), a1),
        Circle((a2, a2), a2),
        Circle((-a1, -a1), a1),
        Circle((-a2, -a2), a2),
    )
    # Closed forms: vertex-avoiding pair at sqrt(2 t^2 + 2 a^2) = rho -+ a
    # with centers on the off-diagonal; vertex-containing pair likewise.
    def off_diag_pair(sign_small, sign_big):
        # sqrt(2t^2+2a1^2) = rho + sign_small*a1, sqrt(2t^2+2a2^2) = rho + sign_big*a2
        # subtracting the squares: rho = (a2^2 - a1^2 - ...) linear solve
        # done numerically for clarity; both pairs are mirror images.
        lo, hi = 0.0, 100.0 * a2
        f = lambda t: (math.sqrt(2 * t * t + 2 * a2 * a2)
                       - math.sqrt(2 * t * t + 2 * a1 * a1)
                       - (sign_big * a2 - sign_small * a1))
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if f(lo) * f(mid) <= 0:
                hi = mid
            else:
                lo = mid
        t = 0.5 * (lo + hi)
        rho = math.sqrt(2 * t * t + 2 * a1 * a1) - sign_small * a1
        return (Circle((t, -t), rho), Circle((-t, t), rho))

    expected = (
        normalize(Line((0.0, 1.0), 0.0)),
        normalize(Line((1.0, 0.0), 0.0)),
        *off_diag_pair(1, 1),    # external to all four
        *off_diag_pair(-1, 1),   # contains the small pair, external to the big
    )
    return Scenario(
        "c1", inputs, 6, expected,
        provenance="two admissible circles in one sector plus their central "
                   "reflections; solutions are the frame lines and two "
                   "centrally symmetric circle pairs", parts=None)


def construction_2(a: float = 1.0) -> Scenario:
    """Frame lines plus a vertex-containing circle and its diagonal mirror.

    The gamma circle touches the admissible circle at (a, a) externally and
    its central reflection internally; the member of that one-parameter
    family centered on the sector-I/III bisector has radius sqrt(2)*a.  The
    six solutions: both admissible circles and four circles in the other
    two sectors with radii a*(sqrt(3)+-sqrt(2)).
    """
    if not (a > 0.0 and math.isfinite(a)):
        raise InvalidParams("need a > 0")
    g = SQRT2 * a
    gamma1 = Circle((-a / SQRT2, -a / SQRT2), g)
    gamma2 = Circle((a / SQRT2, a / SQRT2), g)
    if gamma1.radius <= 0:  # unreachable for a > 0; kept as the contract error
        raise NoFeasibleGamma("no vertex-containing circle satisfies the tangencies")
    inputs = (
        normalize(Line((0.0, 1.0), 0.0)),
        normalize(Line((1.0, 0.0), 0.0)),
        gamma1,
        gamma2,
    )
    b_small = a * (SQRT3 - SQRT2)
    b_big = a * (SQRT3 + SQRT2)
    expected = (
        Circle((a, a), a),
        Circle((-a, -a), a),
        Circle((-b_small, b_small), b_small),
        Circle((b_small, -b_small), b_small),
        Circle((-b_big, b_big), b_big),
        Circle((b_big, -b_big), b_big),
    )
    return Scenario(
        "c2", inputs, 6, expected,
        provenance="frame lines plus a vertex-containing circle tangent to "
                   "the admissible circle at (a,a) externally and to its "
                   "reflection internally, mirrored across the other bisector")


def construction_3() -> Scenario:
    """Midline of a strip plus three admissible circles spaced 2/sqrt(5).

    Inputs: the line through the circle centers and three unit circles with
    neighbor spacing 2/sqrt(5).  Solutions: the two strip boundary lines
    and four circles of radius 2/5.
    """
    x = 2.0 / SQRT5
    inputs = (
        normalize(Line((0.0, 1.0), 1.0)),
        Circle((-x, 1.0), 1.0),
        Circle((0.0, 1.0), 1.0),
        Circle((x, 1.0), 1.0),
    )
    h = 1.0 / SQRT5
    r = 2.0 / 5.0
    expected = (
        normalize(Line((0.0, 1.0), 0.0)),
        normalize(Line((0.0, 1.0), 2.0)),
        Circle((-h, 1.0 - r), r),
        Circle((-h, 1.0 + r), r),
        Circle((h, 1.0 - r), r),
        Circle((h, 1.0 + r), r),
    )
    return Scenario(
        "c3", inputs, 6, expected,
        provenance="strip midline plus three equal admissible circles with "
                   "neighbor center spacing 2/sqrt(5); the four circle "
                   "solutions have radius 2/5")


def construction_4() -> Scenario:
    """Concentric pair with radius ratio 3+2*sqrt(2) plus two gap circles.

    The four annulus-spanning solutions sit at the axis directions (kind B);
    the two extra inputs are the inscribed circles of opposite curvilinear
    gaps between them, on perpendicular diameters; the remaining solutions
    are two in-annulus circles (kind A).  The tangent length from the
    common center to each gap circle equals sqrt(R*r) = 1+sqrt(2).
    """
    R = 3.0 + 2.0 * SQRT2
    rho = math.sqrt(R / 3.0)          # gap-circle radius, center distance 2*rho
    q = SQRT2 * rho                    # = (sqrt(2)+2)/sqrt(3), diagonal coordinate
    inputs = (
        Circle((0.0, 0.0), 1.0),
        Circle((0.0, 0.0), R),
        Circle((q, q), rho),
        Circle((-q, q), rho),
    )
    rb = 0.5 * (R + 1.0)               # 2+sqrt(2)
    db = 0.5 * (R - 1.0)               # 1+sqrt(2)
    ra, da = db, rb                    # kind-A radius / center distance
    expected = (
        Circle((db, 0.0), rb),
        Circle((-db, 0.0), rb),
        Circle((0.0, db), rb),
        Circle((0.0, -db), rb),
        Circle((da * 0.5, da * SQRT3 / 2.0), ra),   # 60 degrees
        Circle((-da * 0.5, da * SQRT3 / 2.0), ra),  # 120 degrees
    )
    return Scenario(
        "c4", inputs, 6, expected,
        provenance="concentric circles at ratio 3+2*sqrt(2) plus the "
                   "inscribed circles of two opposite gaps between the four "
                   "axis-direction annulus solutions")


def example_square(variant: int) -> Scenario:
    """Four equal circles at square vertices with a frozen six-solution radius."""
    if variant not in SQUARE_RADII:
        raise InvalidParams("variant must be 1 or 2")
    rho = SQUARE_RADII[variant]
    inputs = (
        Circle((1.0, 1.0), rho),
        Circle((-1.0, 1.0), rho),
        Circle((-1.0, -1.0), rho),
        Circle((1.0, -1.0), rho),
    )
    # Closed forms: two concentric solutions sqrt(2)+-rho (|.| for the big
    # variant) and four axis circles.
    rs = math.sqrt((2.0 - rho * rho) / (1.0 - rho * rho)) if rho < 1.0 \
        else math.sqrt((rho * rho - 2.0) / (rho * rho - 1.0))
    off = rho * rs
    expected = (
        Circle((0.0, 0.0), SQRT2 + rho),
        Circle((0.0, 0.0), abs(SQRT2 - rho)),
        Circle((off, 0.0), rs),
        Circle((-off, 0.0), rs),
        Circle((0.0, off), rs),
        Circle((0.0, -off), rs),
    )
    return Scenario(
        f"square{variant}", inputs, 6, expected,
        provenance="equal circles at square vertices, radius frozen from "
                   "the six-solution sweep")


def five_circle_example() -> Scenario:
    """Five of the six solutions of square1; the four square circles come back.

    The count is exactly four, the five-object maximum.
    """
    base = example_square(1)
    sols = sorted(base.expected_solutions, key=lambda c: c.radius)
    inputs = tuple(sols[1:])  # drop the smallest solution circle
    return Scenario(
        "five", inputs, 4, base.inputs,
        provenance="five of the six solutions of square1 taken as inputs; "
                   "the original four circles are the complete solution set")


_BOUNDS = {3: 8, 4: 6, 5: 4}


def kmn_realizable(m: int, n: int) -> bool:
    """Realizability of the complete bipartite tangency pattern K_{m,n}."""
    m, n = max(m, n), min(m, n)
    if n <= 2:
        return True
    if n == 3:
        return m <= 8
    if n == 4:
        return m <= 6
    return False


def _kmn_refusal(m: int, n: int) -> Unrealizable:
    big, small = max(m, n), min(m, n)
    if small >= 5:
        return Unrealizable(m, n, "quintuple-bound",
                            "five generalized circles admit at most 4 common "
                            "tangent circles, so no five objects can each "
                            "touch five others across the parts")
    if small == 4:
        return Unrealizable(m, n, "quadruple-bound",
                            "four generalized circles admit at most 6 common "
                            f"tangent circles, so K_{{{big},4}} needs more "
                            "solutions than exist")
    return Unrealizable(m, n, "triple-bound",
                        "three generalized circles admit at most 8 common "
                        f"tangent circles, so K_{{{big},3}} needs more "
                        "solutions than exist")


def kmn_witness(m: int, n: int):
    """A non-degenerate circle configuration realizing K_{m,n}, or a refusal.

    Witness circles are ordered part A first (``parts`` records the split);
    every cross pair is tangent.  Tangencies inside a part may occur and are
    not judged.
    """
    if m < 0 or n < 0:
        raise InvalidParams("need m, n >= 0")
    if not kmn_realizable(m, n):
        return _kmn_refusal(m, n)
    big, small = max(m, n), min(m, n)
    if small == 0:
        part_b: list[GeneralizedCircle] = []
        part_a = [Circle((3.0 * i, 0.0), 1.0) for i in range(big)]
    elif small == 1:
        hub = Circle((0.0, 0.0), 1.0)
        part_b = [hub]
        part_a = [Circle((2.0 * math.cos(2.0 * math.pi * i / max(big, 1)),
                          2.0 * math.sin(2.0 * math.pi * i / max(big, 1))), 1.0)
                  for i in range(big)]
    elif small == 2:
        part_b = [Circle((0.0, 0.0), 1.0), Circle((0.0, 0.0), 3.0)]
        # Annulus-spanning circles at distinct angles; any two intersect, so
        # no degenerate triple can form.
        part_a = [Circle((math.cos(a), math.sin(a)), 2.0)
                  for a in [2.0 * math.pi * i / big + 0.1 for i in range(big)]]
    elif small == 3:
        # Deliberately asymmetric: a mirror-symmetric triple makes two of its
        # own solutions touch an input at the same point, which would be a
        # degenerate witness.
        triple = (Circle((0.0, 0.0), 1.0), Circle((4.0, 0.0), 0.9),
                  Circle((1.7, 3.1), 1.15))
        sols = solve(list(triple))
        part_b = list(triple)
        part_a = [s.obj for s in sols.solutions][:big]
    else:  # small == 4, big <= 6
        base = construction_1()
        part_b = list(base.inputs)
        part_a = list(base.expected_solutions[2:])  # four circle solutions
        lines = list(base.expected_solutions[:2])
        part_a = (part_a + lines)[:big]
    inputs = tuple(part_a) + tuple(part_b)
    return Scenario(
        f"kmn-{m}-{n}", inputs, -1, None,
        provenance=f"complete bipartite tangency witness with parts "
                   f"{len(part_a)} and {len(part_b)}",
        parts=(len(part_a), len(part_b)))


def registry_names() -> list[str]:
    return ["square1", "square2", "five", "c1", "c2", "c3", "c4", "kmn-M-N"]


def scenario_by_name(name: str, **params):
    """Resolve a registry name (``kmn-M-N`` takes the two integers inline)."""
    if name == "square1":
        return example_square(1)
    if name == "square2":
        return example_square(2)
    if name == "five":
        return five_circle_example()
    if name == "c1":
        return construction_1(**params)
    if name == "c2":
        return construction_2(**params)
    if name == "c3":
        return construction_3()
    if name == "c4":
        return construction_4()
    if name.startswith("kmn-"):
        bits = name.split("-")
        if len(bits) == 3 and bits[1].isdigit() and bits[2].isdigit():
            return kmn_witness(int(bits[1]), int(bits[2]))
    raise UnknownScenario(name)
