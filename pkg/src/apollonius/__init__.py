"""Tangency kernel for generalized circles on the inversive plane."""

from .geometry import (
    INFINITY,
    Circle,
    FinitePoint,
    GeneralizedCircle,
    Line,
    PointAtInfinity,
    TangencyKind,
    Tolerance,
    common_point_of_three,
    intersection_count,
    intersection_points,
    normalize,
    same_object,
    separates,
    tangency,
)
from .inversion import (
    InversionMap,
    apply_map,
    fixing_inversion,
    invert,
    map_to_concentric,
    map_to_intersecting_lines,
    map_to_parallel_lines,
)
from .solver import (
    INFINITE_LINES,
    DegenerateInput,
    SignCombination,
    SignedInput,
    SignedLine,
    Solution,
    SolutionSet,
    TooFewObjects,
    is_degenerate,
    point_solutions,
    solution_signs,
    solve,
    solve_signed,
    tangent_lines,
)

__version__ = "0.1.0"
