"""Randomized verification harness for the solution-count bounds and tables.

Stress-tests the count bounds (8 for triples, 6 for quadruples, 4 for
quintuples), the at-most-two-per-sign-class pairing property with its
mirror-symmetry corollary, and the two positional type tables, over seeded
random configurations.  Adversarial sampler profiles (near-tangent pairs,
mixed lines, annulus-constrained) cover the strata where the bounds are
tight, because uniform sampling almost never lands there.

Reports are bit-identical for identical seeds; wall time is recorded but
excluded from the canonical form.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .classify import Distribution, SectorFrame, i_type, t_type
from .geometry import (
    Circle,
    FinitePoint,
    Line,
    PointAtInfinity,
    Tolerance,
    normalize,
    same_object,
)
from .oracle import OracleConfig, oracle_solve
from .solver import DegenerateInput, is_degenerate, solve

__all__ = [
    "VerificationReport",
    "check_theorem",
    "check_tables",
    "check_pairing",
    "check_scenarios",
    "check_kmn",
    "sample_configuration",
    "SAMPLER_PROFILES",
    "BOUNDS",
]

BOUNDS = {3: 8, 4: 6, 5: 4}
SAMPLER_PROFILES = ("generic", "near-tangent", "mixed-lines", "annulus")


@dataclass
class VerificationReport:
    target: str
    trials: int
    max_count_observed: int = 0
    violations: list = field(default_factory=list)
    oracle_mismatches: list = field(default_factory=list)
    skipped: int = 0
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations and not self.oracle_mismatches

    def canonical_dict(self) -> dict:
        """Deterministic form: everything except the wall clock."""
        return {
            "target": self.target,
            "trials": self.trials,
            "max_count_observed": self.max_count_observed,
            "violations": self.violations,
            "oracle_mismatches": self.oracle_mismatches,
            "skipped": self.skipped,
            "ok": self.ok,
        }

    def as_dict(self) -> dict:
        d = self.canonical_dict()
        d["wall_time"] = self.wall_time
        return d


def _describe(obj) -> dict:
    if isinstance(obj, Circle):
        return {"kind": "circle", "center": list(obj.center), "radius": obj.radius}
    if isinstance(obj, Line):
        return {"kind": "line", "normal": list(obj.normal), "offset": obj.offset}
    if isinstance(obj, FinitePoint):
        return {"kind": "point", "at": list(obj.at)}
    return {"kind": "infinity"}


def _trial_rng(seed: int, trial: int) -> random.Random:
    # splittable counter scheme: parallel and serial runs see the same streams
    return random.Random((seed & 0xFFFFFFFF) * 0x9E3779B1 + trial)


def _random_circle(rng) -> Circle:
    return Circle((rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)),
                  rng.uniform(0.2, 2.0))


def _sample_generic(rng, n):
    return [_random_circle(rng) for _ in range(n)]


def _sample_near_tangent(rng, n):
    objs = [_random_circle(rng)]
    while len(objs) < n:
        c = _random_circle(rng)
        if rng.random() < 0.7:
            anchor = objs[rng.randrange(len(objs))]
            d = math.hypot(c.center[0] - anchor.center[0],
                           c.center[1] - anchor.center[1])
            if d > 1e-6:
                jitter = rng.uniform(0.0, 10.0) * 1e-9
                if rng.random() < 0.5 and d > anchor.radius + 0.1:
                    c = Circle(c.center, d - anchor.radius + jitter)  # external
                elif d > 0.1:
                    c = Circle(c.center, d + anchor.radius + jitter)  # contains it
        objs.append(c)
    return objs


def _sample_mixed_lines(rng, n):
    n_lines = rng.randrange(1, min(n - 1, 2) + 1)
    objs: list = []
    for _ in range(n_lines):
        ang = rng.uniform(0.0, math.pi)
        objs.append(normalize(Line((math.cos(ang), math.sin(ang)),
                                   rng.uniform(-2.0, 2.0))))
    while len(objs) < n:
        objs.append(_random_circle(rng))
    return objs


def _sample_annulus(rng, n):
    r = rng.uniform(0.5, 1.5)
    big = r * rng.uniform(2.2, 5.0)
    objs: list = [Circle((0.0, 0.0), r), Circle((0.0, 0.0), big)]
    while len(objs) < n:
        ang = rng.uniform(0.0, 2.0 * math.pi)
        mid = rng.uniform(r * 1.05, big * 0.95)
        rad = rng.uniform(0.05, 0.45) * (big - r)
        objs.append(Circle((mid * math.cos(ang), mid * math.sin(ang)), rad))
    return objs


_SAMPLERS = {
    "generic": _sample_generic,
    "near-tangent": _sample_near_tangent,
    "mixed-lines": _sample_mixed_lines,
    "annulus": _sample_annulus,
}


def sample_configuration(profile: str, rng, n: int, max_attempts: int = 50):
    """A non-degenerate, pairwise-distinct configuration, or None.

    Degenerate draws are rejected rather than repaired so the sampling
    distribution stays simple.
    """
    sampler = _SAMPLERS[profile]
    for _ in range(max_attempts):
        objs = [normalize(o) for o in sampler(rng, n)]
        tol = Tolerance.for_objects(objs)
        distinct = all(not same_object(a, b, tol)
                       for i, a in enumerate(objs) for b in objs[i + 1:])
        if not distinct:
            continue
        if is_degenerate(objs, tol)[0]:
            continue
        return objs
    return None


def check_theorem(num_inputs: int, trials: int, seed: int = 0,
                  sampler_profile: str = "generic") -> VerificationReport:
    """Count-bound stress test: no configuration may exceed BOUNDS[n]."""
    if num_inputs not in BOUNDS:
        raise ValueError("num_inputs must be 3, 4 or 5")
    if sampler_profile != "all" and sampler_profile not in _SAMPLERS:
        raise ValueError(f"unknown sampler profile {sampler_profile!r}")
    bound = BOUNDS[num_inputs]
    profiles = SAMPLER_PROFILES if sampler_profile == "all" else (sampler_profile,)
    report = VerificationReport(f"bound-{num_inputs}", trials)
    t0 = time.perf_counter()
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        profile = profiles[trial % len(profiles)]
        objs = sample_configuration(profile, rng, num_inputs)
        if objs is None:
            report.skipped += 1
            continue
        try:
            sols = solve(objs)
        except DegenerateInput:
            report.skipped += 1
            continue
        if sols.infinite:
            report.skipped += 1
            continue
        count = len(sols.solutions)
        report.max_count_observed = max(report.max_count_observed, count)
        if count > bound:
            report.violations.append({
                "trial": trial,
                "seed": seed,
                "profile": profile,
                "count": count,
                "configuration": [_describe(o) for o in objs],
            })
    report.wall_time = time.perf_counter() - t0
    return report


def _similarity(rng):
    ang = rng.uniform(0.0, 2.0 * math.pi)
    s = rng.uniform(0.5, 2.0)
    tx, ty = rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)
    ca, sa = math.cos(ang), math.sin(ang)

    def apply(obj):
        if isinstance(obj, Circle):
            x, y = obj.center
            return Circle((s * (ca * x - sa * y) + tx, s * (sa * x + ca * y) + ty),
                          s * obj.radius)
        if isinstance(obj, Line):
            nx, ny = obj.normal
            rx, ry = ca * nx - sa * ny, sa * nx + ca * ny
            return normalize(Line((rx, ry), s * obj.offset + rx * tx + ry * ty))
        raise TypeError(obj)

    return apply


# Canonical representative tables.  Each entry: a factory for alpha in the
# canonical frame plus the expected row, distribution, number of extra point
# solutions, and total, exactly as published.
def _i_table():
    h = math.hypot(0.5, 0.3)
    return [
        (Circle((0.1, -0.05), 1.0), 1, (2, 2, 2, 2), 0, 8),
        (Circle((0.7, 0.6), 0.8), 2, (4, 2, 0, 2), 0, 8),
        (Circle((1.5, 0.3), 0.5), 3, (2, 2, 0, 0), 0, 4),
        (Circle((1.5, 1.5), 0.5), 4, (4, 0, 0, 0), 0, 4),
        (Circle((0.5, 0.3), h), 5, (2, 1, 0, 1), 1, 5),
        (normalize(Line((1.0, 1.0), 1.0)), 5, (2, 1, 0, 1), 1, 5),
        (normalize(Line((2.0, -1.0), 0.0)), 6, (0, 0, 0, 0), 2, 2),
        (Circle((0.3, 0.5), 0.5), 7, (3, 1, 0, 2), 0, 6),
        (Circle((2.0, 0.5), 0.5), 8, (3, 1, 0, 0), 0, 4),
        (Circle((1.0, 1.0), 1.0), 9, (2, 1, 0, 1), 0, 4),
        (Circle((0.0, 0.5), 0.5), 10, (1, 0, 0, 1), 1, 3),
        (normalize(Line((0.0, 1.0), 1.0)), 10, (1, 0, 0, 1), 1, 3),
    ]


def _t_table():
    inf = math.inf
    return [
        (Circle((0.0, 1.0), 0.3), 1, (4, 2), 6),
        (Circle((0.0, 1.0), 2.0), 2, (4, 2), 6),
        (Circle((0.0, 0.3), 0.5), 3, (2, 2), 4),
        (normalize(Line((1.0, 0.0), 0.0)), 4, (2, 0), 2),
        (Circle((0.0, 0.5), 0.5), 5, (3, 1), 4),
        (Circle((0.0, 1.5), 1.5), 6, (3, 1), 4),
        (Circle((0.0, 1.0), 1.0), 7, (2, 0), 2),
        (Circle((0.0, -0.5), 0.5), 8, (1, 1), 2),
        (Circle((0.0, 3.5), 1.0), 9, (0, 2), 2),
        (normalize(Line((0.0, 1.0), 1.0)), 10, (0, inf), inf),
    ]


def check_tables(trials: int, seed: int = 0) -> VerificationReport:
    """Both type tables under random similarity transforms of the plane."""
    report = VerificationReport("tables", trials)
    t0 = time.perf_counter()
    base_l1 = normalize(Line((0.0, 1.0), 0.0))
    base_l2 = normalize(Line((1.0, 0.0), 0.0))
    strip_l1 = normalize(Line((0.0, 1.0), 0.0))
    strip_l2 = normalize(Line((0.0, 1.0), 2.0))
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        mapf = _similarity(rng)
        l1, l2 = mapf(base_l1), mapf(base_l2)
        frame = SectorFrame(l1, l2)
        tol = Tolerance.for_objects([l1, l2])
        for alpha, row, dist, extras, total in _i_table():
            res = i_type(frame, mapf(alpha), tol)
            ok = (res.row == row
                  and res.distribution.isomorphic(Distribution(sectors=dist))
                  and len(res.extra_points) == extras
                  and res.total == total)
            if not ok:
                report.violations.append({
                    "trial": trial, "seed": seed, "table": "intersecting",
                    "expected_row": row, "got_row": res.row,
                    "expected_dist": list(dist), "got_dist": str(res.distribution),
                    "expected_total": total, "got_total": res.total,
                })
        s1, s2 = mapf(strip_l1), mapf(strip_l2)
        tol = Tolerance.for_objects([s1, s2])
        for alpha, row, dist, total in _t_table():
            res = t_type(s1, s2, mapf(alpha), tol)
            want = Distribution(parallel=(float(dist[0]), dist[1]))
            ok = (res.row == row and res.distribution.isomorphic(want)
                  and res.total == total)
            if not ok:
                report.violations.append({
                    "trial": trial, "seed": seed, "table": "parallel",
                    "expected_row": row, "got_row": res.row,
                    "expected_dist": list(dist), "got_dist": str(res.distribution),
                    "expected_total": total, "got_total": res.total,
                })
    report.wall_time = time.perf_counter() - t0
    return report


def _mirror_across(line: Line, obj: Circle) -> Circle:
    (nx, ny), off = line.normal, line.offset
    x, y = obj.center
    d = nx * x + ny * y - off
    return Circle((x - 2.0 * d * nx, y - 2.0 * d * ny), obj.radius)


def _sample_collinear(rng, n):
    ang = rng.uniform(0.0, math.pi)
    ux, uy = math.cos(ang), math.sin(ang)
    px, py = rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)
    objs = []
    for _ in range(n):
        t = rng.uniform(-3.0, 3.0)
        objs.append(Circle((px + t * ux, py + t * uy), rng.uniform(0.2, 1.5)))
    return objs


def check_pairing(trials: int, seed: int = 0,
                  oracle_trials: int = 100,
                  symmetry_trials: int | None = None) -> VerificationReport:
    """Per-sign-class counts, mirror symmetry for collinear centers, oracle agreement."""
    report = VerificationReport("pairing", trials)
    t0 = time.perf_counter()
    if symmetry_trials is None:
        symmetry_trials = max(1, trials // 10)

    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        n = 3 if trial % 2 == 0 else 4
        objs = sample_configuration("generic" if trial % 4 < 3 else "near-tangent",
                                    rng, n)
        if objs is None:
            report.skipped += 1
            continue
        sols = solve(objs)
        by_class: dict = {}
        for s in sols.solutions:
            if s.signs is not None:
                by_class.setdefault(s.signs, []).append(s.obj)
        for combo, members in by_class.items():
            report.max_count_observed = max(report.max_count_observed, len(members))
            if len(members) > 2:
                report.violations.append({
                    "trial": trial, "seed": seed, "kind": "pairing",
                    "class": str(combo), "count": len(members),
                    "configuration": [_describe(o) for o in objs],
                })

    # Mirror symmetry: collinear centers force each class pair to reflect
    # across the center line.
    for trial in range(symmetry_trials):
        rng = _trial_rng(seed + 7_777_777, trial)
        objs = _sample_collinear(rng, 3)
        objs = [normalize(o) for o in objs]
        tol = Tolerance.for_objects(objs)
        if (any(same_object(a, b, tol) for i, a in enumerate(objs)
                for b in objs[i + 1:])
                or is_degenerate(objs, tol)[0]):
            report.skipped += 1
            continue
        (x0, y0) = objs[0].center
        (x1, y1) = objs[1].center
        ux, uy = x1 - x0, y1 - y0
        nn = math.hypot(ux, uy)
        if nn < 1e-9:
            report.skipped += 1
            continue
        axis = normalize(Line((-uy / nn, ux / nn),
                              (-uy * x0 + ux * y0) / nn))
        sols = solve(objs)
        by_class: dict = {}
        for s in sols.solutions:
            if s.signs is not None and isinstance(s.obj, Circle):
                by_class.setdefault(s.signs, []).append(s.obj)
        sym_tol = Tolerance(1e-7 / tol.relative_scale, tol.relative_scale)
        for combo, members in by_class.items():
            if len(members) == 2:
                if not same_object(_mirror_across(axis, members[0]), members[1],
                                   sym_tol):
                    report.violations.append({
                        "trial": trial, "seed": seed, "kind": "mirror-symmetry",
                        "class": str(combo),
                        "configuration": [_describe(o) for o in objs],
                    })

    # Oracle agreement on a subsample.
    for trial in range(min(oracle_trials, trials)):
        rng = _trial_rng(seed + 424_242, trial)
        objs = sample_configuration(SAMPLER_PROFILES[trial % 4], rng,
                                    3 + trial % 3)
        if objs is None:
            report.skipped += 1
            continue
        mismatch = oracle_disagreement(objs, seed=seed + trial)
        if mismatch:
            report.oracle_mismatches.append({
                "trial": trial, "seed": seed, "detail": mismatch,
                "configuration": [_describe(o) for o in objs],
            })
    report.wall_time = time.perf_counter() - t0
    return report


def oracle_disagreement(objs, seed: int = 0, match_tol: float = 1e-7):
    """None when solver and oracle sets agree; else a short description.

    Configurations with two solutions closer than the oracle's merge radius
    are skipped (multiplicity is numerically ill-posed there).
    """
    sols = solve(objs)
    tol = Tolerance.for_objects(objs)
    if sols.infinite:
        oracle = oracle_solve(objs, OracleConfig(seed=seed), tol)
        return None if oracle.infinite else "oracle missed infinite family"
    objects = [s.obj for s in sols.solutions]
    sep_tol = Tolerance(2e-6 / tol.relative_scale, tol.relative_scale)
    for i, a in enumerate(objects):
        for b in objects[i + 1:]:
            if same_object(a, b, sep_tol):
                return None  # nearly-multiple solutions: skip the comparison
    oracle = oracle_solve(objs, OracleConfig(seed=seed), tol)
    got = [s.obj for s in oracle.solutions]
    ctol = Tolerance(match_tol / tol.relative_scale, tol.relative_scale)
    if len(got) != len(objects):
        return f"count solver={len(objects)} oracle={len(got)}"
    for a in objects:
        if not any(same_object(a, b, ctol) for b in got):
            return "solver solution missing from oracle set"
    return None


def check_scenarios() -> VerificationReport:
    """Every registry scenario solves to its expected count and contents."""
    from .constructions import scenario_by_name

    names = ["square1", "square2", "five", "c1", "c2", "c3", "c4"]
    report = VerificationReport("scenarios", len(names))
    t0 = time.perf_counter()
    for name in names:
        sc = scenario_by_name(name)
        tol = sc.tolerance()
        sols = solve(list(sc.inputs))
        problems = []
        if sols.cardinality != sc.expected_solution_count:
            problems.append(f"count {sols.cardinality} != {sc.expected_solution_count}")
        if sc.expected_solutions:
            for e in sc.expected_solutions:
                en = normalize(e, tol)
                if not any(same_object(en, s.obj, tol) for s in sols.solutions):
                    problems.append("missing expected solution")
                    break
        if is_degenerate(list(sc.inputs), tol)[0]:
            problems.append("degenerate inputs")
        if problems:
            report.violations.append({"scenario": name, "problems": problems})
        else:
            report.max_count_observed = max(report.max_count_observed,
                                            len(sols.solutions))
    report.wall_time = time.perf_counter() - t0
    return report


def check_kmn(limit: int = 9) -> VerificationReport:
    """Realizability grid: witnesses validate edge-by-edge, refusals cite bounds."""
    from .constructions import Unrealizable, kmn_realizable, kmn_witness
    from .geometry import tangency

    report = VerificationReport("kmn", (limit + 1) * (limit + 1))
    t0 = time.perf_counter()
    for m in range(limit + 1):
        for n in range(limit + 1):
            w = kmn_witness(m, n)
            if isinstance(w, Unrealizable):
                if kmn_realizable(m, n):
                    report.violations.append({"cell": [m, n],
                                              "problem": "refused a + cell"})
                continue
            if not kmn_realizable(m, n):
                report.violations.append({"cell": [m, n],
                                          "problem": "witnessed a - cell"})
                continue
            tol = w.tolerance()
            na, _ = w.parts
            part_a, part_b = w.inputs[:na], w.inputs[na:]
            for a in part_a:
                for b in part_b:
                    if not tangency(a, b, tol):
                        report.violations.append({
                            "cell": [m, n], "problem": "cross pair not tangent"})
            if len(w.inputs) >= 3 and is_degenerate(list(w.inputs), tol)[0]:
                report.violations.append({"cell": [m, n],
                                          "problem": "degenerate witness"})
    report.wall_time = time.perf_counter() - t0
    return report
