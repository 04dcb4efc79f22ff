"""Executable verification suites.

Every suite enumerates a bounded window of inputs, checks identities the
library promises, and returns a :class:`SuiteReport` whose failures carry
re-runnable witnesses (the inputs plus both sides of the violated identity).
Suites never raise on a failed identity; failures are data.  All enumeration
orders are deterministic, and the only randomness (twist-coordinate trials) is
driven by an explicit seed, so reports are reproducible byte for byte apart
from the per-suite ``millis`` timing fields.

Suites:

- ``product_laws``: commutation, cancellation, power, twist and triangle laws
  of the torus product, plus the fixed non-associativity witness.
- ``convexity``: midpoint convexity of n -> I(a^n b, g), the matching twisted
  profiles, and a frozen spot profile.
- ``twist_dynamics``: non-commuting twists along crossing loops, and
  fixed-point freeness of composed opposite twists.
- ``twist_bounds``: two-sided bounds on intersection numbers after iterated
  twists along disjoint loops.
- ``resolution_oracle``: scene resolution versus the torus formula over all
  grid scenes in the window, plus the corpus control scenes.
- ``twist_coords``: seeded random round-trips on the shipped pants
  decompositions.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import corpus
from .dtcoords import (
    DTCoords,
    dehn_twist as dt_dehn_twist,
    solve_twists,
    twist_multiply,
    validate_coords,
)
from .errors import InvalidBound
from .grids import torus_grid_scene
from .scene import (
    components,
    corner_alternation_ok,
    crossing_count,
    find_bigons,
    resolve,
    trivial_components,
    validate,
)
from .torus import (
    TorusClass,
    dehn_twist,
    enumerate_classes,
    enumerate_primitive_classes,
    intersection,
    multiply,
    normalize,
    power,
    signed_power_multiply,
)

__all__ = [
    "Failure",
    "SuiteReport",
    "SUITES",
    "suite_product_laws",
    "suite_convexity",
    "suite_twist_dynamics",
    "suite_twist_bounds",
    "suite_resolution_oracle",
    "suite_twist_coords",
    "run_all",
    "report_to_dict",
]


@dataclass(frozen=True)
class Failure:
    clause: str
    inputs: Dict[str, Any]
    lhs: str
    rhs: str


@dataclass
class SuiteReport:
    suite: str
    params: Dict[str, Any]
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    millis: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, clause: str, condition: bool, inputs: Dict[str, Any], lhs: Any, rhs: Any) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(Failure(clause, dict(inputs), str(lhs), str(rhs)))

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        """Combine a partial report produced by another worker.

        All checks are pure functions of their inputs, so suites may be
        sharded over enumerated inputs and the partial reports merged in
        input order; counts and failure lists just concatenate.
        """
        if other.suite != self.suite or other.params != self.params:
            raise ValueError("can only merge reports of the same suite and params")
        return SuiteReport(
            suite=self.suite,
            params=self.params,
            cases=self.cases + other.cases,
            failures=self.failures + other.failures,
            millis=self.millis + other.millis,
        )


def _require_bound(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 1:
        raise InvalidBound(f"{name} must be a positive integer, got {value!r}")


def _timed(fn: Callable[[SuiteReport], None], report: SuiteReport) -> SuiteReport:
    t0 = time.perf_counter()
    fn(report)
    report.millis = int((time.perf_counter() - t0) * 1000)
    return report


# ======================================================================
# Torus product laws
# ======================================================================


def suite_product_laws(bound: int = 4) -> SuiteReport:
    _require_bound(bound, "bound")
    report = SuiteReport("product_laws", {"bound": bound})

    def run(rep: SuiteReport) -> None:
        classes = enumerate_classes(bound)
        for a in classes:
            for b in classes:
                ins = {"a": str(a), "b": str(b)}
                ab = multiply(a, b)
                ba = multiply(b, a)
                if intersection(a, b) == 0:
                    rep.check("commute-disjoint", ab == ba, ins, ab, ba)
                    for c in classes:
                        got = intersection(ab, c)
                        want = intersection(a, c) + intersection(b, c)
                        rep.check(
                            "disjoint-additivity",
                            got == want,
                            {**ins, "c": str(c)},
                            got,
                            want,
                        )
                else:
                    rep.check("noncommute-crossing", ab != ba, ins, ab, ba)
                    rep.check("cancel-left", multiply(a, ba) == b, ins, multiply(a, ba), b)
                    rep.check("cancel-right", multiply(ab, a) == b, ins, multiply(ab, a), b)
                    rep.check(
                        "crossing-preserved",
                        intersection(a, ab) == intersection(a, b)
                        and intersection(a, ba) == intersection(a, b),
                        ins,
                        (intersection(a, ab), intersection(a, ba)),
                        intersection(a, b),
                    )
                for k in range(1, 6):
                    lhs = multiply(power(a, k), power(b, k))
                    rhs = power(ab, k)
                    rep.check("power-distribution", lhs == rhs, {**ins, "k": k}, lhs, rhs)
                if intersection(a, b) > 0:
                    for n in range(-2, 3):
                        for m_exp in range(-2, 3):
                            lhs = signed_power_multiply(
                                a, n, signed_power_multiply(a, m_exp, b)
                            )
                            rhs = signed_power_multiply(a, n + m_exp, b)
                            rep.check(
                                "exponent-additivity",
                                lhs == rhs,
                                {**ins, "n": n, "m": m_exp},
                                lhs,
                                rhs,
                            )
                if a.is_primitive():
                    tw = dehn_twist(a, b, "positive")
                    via_power = signed_power_multiply(a, intersection(a, b), b)
                    rep.check("twist-power-form", tw == via_power, ins, tw, via_power)
                    d = a.x * b.y - b.x * a.y
                    matrix = normalize(b.x + d * a.x, b.y + d * a.y)
                    rep.check("twist-matrix", tw == matrix, ins, tw, matrix)
                    back = dehn_twist(a, tw, "negative")
                    rep.check("twist-inverse", back == b, ins, back, b)
        for a in classes:
            for b in classes:
                ab = multiply(a, b)
                for c in classes:
                    x = intersection(a, c)
                    y = intersection(b, c)
                    z = intersection(ab, c)
                    ok = x + y >= z and y + z >= x and z + x >= y
                    rep.check(
                        "product-triangle",
                        ok,
                        {"a": str(a), "b": str(b), "c": str(c)},
                        (x, y, z),
                        "each <= sum of the other two",
                    )

        # Fixed witnesses: associativity fails without the region condition
        # and holds for the (a, b, a-parallel) shape.
        e1, e2, e3 = normalize(1, 0), normalize(0, 1), normalize(1, 1)
        lhs = multiply(multiply(e1, e2), e3)
        rhs = multiply(e1, multiply(e2, e3))
        rep.check(
            "nonassociativity-witness",
            lhs == normalize(2, 2) and rhs == normalize(2, 0),
            {"triple": "(1,0),(0,1),(1,1)"},
            (lhs, rhs),
            ((2, 2), (2, 0)),
        )
        assoc_l = multiply(multiply(e1, e2), e1)
        assoc_r = multiply(e1, multiply(e2, e1))
        rep.check(
            "associativity-instance",
            assoc_l == assoc_r == normalize(0, 1),
            {"triple": "(1,0),(0,1),(1,0)"},
            (assoc_l, assoc_r),
            (0, 1),
        )

    return _timed(run, report)


# ======================================================================
# Convexity of twisted intersection numbers
# ======================================================================


def suite_convexity(bound: int = 3, n_min: int = -6, n_max: int = 6) -> SuiteReport:
    _require_bound(bound, "bound")
    if n_min > n_max:
        raise InvalidBound(f"empty range {n_min}..{n_max}")
    report = SuiteReport("convexity", {"bound": bound, "n_min": n_min, "n_max": n_max})

    def run(rep: SuiteReport) -> None:
        classes = enumerate_classes(bound)
        ns = list(range(n_min, n_max + 1))
        for a in classes:
            for b in classes:
                crossing = intersection(a, b) > 0
                powers = {n: signed_power_multiply(a, n, b) for n in ns}
                for g in classes:
                    values = [intersection(powers[n], g) for n in ns]
                    ins = {"a": str(a), "b": str(b), "g": str(g)}
                    for i in range(1, len(values) - 1):
                        rep.check(
                            "midpoint-convexity",
                            2 * values[i] <= values[i - 1] + values[i + 1],
                            {**ins, "n": ns[i]},
                            2 * values[i],
                            values[i - 1] + values[i + 1],
                        )
                    if crossing:
                        d = 1 if a.x * b.y - b.x * a.y > 0 else -1
                        closed = [
                            abs(
                                (d * n * a.x + b.x) * g.y - g.x * (d * n * a.y + b.y)
                            )
                            for n in ns
                        ]
                        rep.check(
                            "closed-form-agreement", values == closed, ins, values, closed
                        )
        # Twisted profiles: I(D_a^n b, g) via iterated twists must be convex
        # and must match the power profile at exponent k*n.
        for a in enumerate_primitive_classes(bound):
            for b in classes:
                k = intersection(a, b)
                twisted: Dict[int, TorusClass] = {0: b}
                cur = b
                for n in range(1, n_max + 1):
                    cur = dehn_twist(a, cur, "positive")
                    twisted[n] = cur
                cur = b
                for n in range(-1, n_min - 1, -1):
                    cur = dehn_twist(a, cur, "negative")
                    twisted[n] = cur
                for n in ns:
                    want = signed_power_multiply(a, k * n, b)
                    rep.check(
                        "twist-iterate-power",
                        twisted[n] == want,
                        {"a": str(a), "b": str(b), "n": n},
                        twisted[n],
                        want,
                    )
                for g in classes:
                    values = [intersection(twisted[n], g) for n in ns]
                    for i in range(1, len(values) - 1):
                        rep.check(
                            "twisted-midpoint-convexity",
                            2 * values[i] <= values[i - 1] + values[i + 1],
                            {"a": str(a), "b": str(b), "g": str(g), "n": ns[i]},
                            2 * values[i],
                            values[i - 1] + values[i + 1],
                        )
        # Frozen spot profile: a=(1,0), b=(0,1), g=(1,2) on -2..2.
        spot = [
            intersection(signed_power_multiply(normalize(1, 0), n, normalize(0, 1)), normalize(1, 2))
            for n in range(-2, 3)
        ]
        rep.check(
            "spot-profile",
            spot == [5, 3, 1, 1, 3],
            {"a": "(1,0)", "b": "(0,1)", "g": "(1,2)", "range": "-2..2"},
            spot,
            [5, 3, 1, 1, 3],
        )

    return _timed(run, report)


# ======================================================================
# Twist dynamics: non-commutation and fixed-point freeness
# ======================================================================


def suite_twist_dynamics(bound: int = 4, gamma_bound: int = 6) -> SuiteReport:
    _require_bound(bound, "bound")
    _require_bound(gamma_bound, "gamma_bound")
    report = SuiteReport(
        "twist_dynamics", {"bound": bound, "gamma_bound": gamma_bound}
    )

    def run(rep: SuiteReport) -> None:
        prims = enumerate_primitive_classes(bound)
        gammas = enumerate_classes(gamma_bound)
        for a in prims:
            for b in prims:
                if intersection(a, b) == 0:
                    continue
                ins = {"alpha": str(a), "beta": str(b)}
                lhs = dehn_twist(a, dehn_twist(b, a, "positive"), "positive")
                rhs = dehn_twist(b, dehn_twist(a, a, "positive"), "positive")
                rep.check("twists-do-not-commute", lhs != rhs, ins, lhs, rhs)
                for g in gammas:
                    moved = dehn_twist(a, dehn_twist(b, g, "positive"), "negative")
                    rep.check(
                        "no-fixed-class",
                        moved != g,
                        {**ins, "gamma": str(g)},
                        moved,
                        g,
                    )

    return _timed(run, report)


# ======================================================================
# Intersection bounds under iterated disjoint twists
# ======================================================================


def suite_twist_bounds(bound: int = 3, m_max: int = 3) -> SuiteReport:
    _require_bound(bound, "bound")
    if m_max < 0:
        raise InvalidBound(f"m_max must be >= 0, got {m_max}")
    report = SuiteReport("twist_bounds", {"bound": bound, "m_max": m_max})

    def run(rep: SuiteReport) -> None:
        classes = enumerate_classes(bound)
        prims = enumerate_primitive_classes(bound)
        for a in prims:
            for beta in classes:
                twisted = beta
                for m in range(0, m_max + 1):
                    if m > 0:
                        twisted = dehn_twist(a, twisted, "positive")
                    s_ab = m * intersection(a, beta)
                    for g in classes:
                        center = s_ab * intersection(a, g)
                        spread = intersection(beta, g)
                        got = intersection(twisted, g)
                        rep.check(
                            "twist-intersection-bounds",
                            center - spread <= got <= center + spread,
                            {"a": str(a), "beta": str(beta), "gamma": str(g), "m": m},
                            got,
                            (center - spread, center + spread),
                        )
        spot = intersection(
            dehn_twist(
                normalize(1, 0),
                dehn_twist(normalize(1, 0), normalize(0, 1), "positive"),
                "positive",
            ),
            normalize(1, 2),
        )
        rep.check(
            "spot-bound-value",
            spot == 3,
            {"a": "(1,0)", "beta": "(0,1)", "gamma": "(1,2)", "m": 2},
            spot,
            3,
        )

    return _timed(run, report)


# ======================================================================
# Scene resolution against the torus formula
# ======================================================================


def _vec_iter(bound: int):
    for x, y in product(range(-bound, bound + 1), repeat=2):
        if (x, y) != (0, 0):
            yield (x, y)


def _census_matches(scene, merged: str, prod: TorusClass) -> Tuple[bool, str]:
    got = components(scene).class_multiset(merged)
    want = {prod.primitive(): prod.multiplicity}
    return got == want, f"{sorted((str(k), v) for k, v in got.items())}"


def suite_resolution_oracle(bound: int = 4, convention: str = "after") -> SuiteReport:
    """Grid scenes versus the torus product.

    Scenes are built once per unordered pair of canonical classes; flipping
    the sign of a defining vector leaves the same embedded configuration
    (markers merely reverse orientation) and the identical class equation.
    A direct full-sign sweep at bound <= 2 double-checks the constructor's
    sign handling anyway.  The ``convention`` knob exists for fault
    injection: running the suite with the mirrored smoothing convention must
    fail at the (1,0),(0,1) pin.
    """
    _require_bound(bound, "bound")
    report = SuiteReport(
        "resolution_oracle",
        {
            "bound": bound,
            "convention": convention,
            "note": "unordered canonical class pairs; signed vectors give isomorphic scenes",
        },
    )

    def check_pair(rep: SuiteReport, p: int, q: int, r: int, s: int, deep: bool) -> None:
        a = normalize(p, q)
        b = normalize(r, s)
        ins = {"p": p, "q": q, "r": r, "s": s}
        scene = torus_grid_scene(p, q, r, s)
        if deep:
            diag = validate(scene)
            rep.check(
                "grid-cellular-torus",
                diag.cellular and diag.genus == 1,
                ins,
                (diag.chi, diag.genus),
                (0, 1),
            )
            rep.check(
                "grid-all-quads",
                all(d == 4 for d in diag.face_degrees),
                ins,
                diag.face_degrees,
                "all 4",
            )
            rep.check(
                "corner-alternation",
                corner_alternation_ok(scene, "a", "b", convention=convention),
                ins,
                "mixed corners",
                "alternating",
            )
        rep.check(
            "crossing-count",
            crossing_count(scene, "a", "b") == intersection(a, b),
            ins,
            crossing_count(scene, "a", "b"),
            intersection(a, b),
        )
        rep.check(
            "bigon-free", not find_bigons(scene, "a", "b"), ins, "bigons", "none"
        )
        for frm, to, prod in (
            ("a", "b", multiply(a, b)),
            ("b", "a", multiply(b, a)),
        ):
            resolved = resolve(scene, frm, to, convention=convention)
            okc, got = _census_matches(resolved, f"{frm}*{to}", prod)
            rep.check(
                "census-matches-product",
                okc,
                {**ins, "from": frm, "to": to},
                got,
                f"{prod.multiplicity} x {prod.primitive()}",
            )
            trivial = trivial_components(resolved)
            rep.check(
                "no-trivial-components",
                not trivial,
                {**ins, "from": frm, "to": to},
                f"{len(trivial)} trivial",
                "none",
            )

    def run(rep: SuiteReport) -> None:
        seen = set()
        for p, q in _vec_iter(bound):
            for r, s in _vec_iter(bound):
                if p * s - q * r == 0:
                    continue
                a, b = normalize(p, q), normalize(r, s)
                key = (min(a, b), max(a, b))
                if key in seen:
                    continue
                seen.add(key)
                va, vb = key
                check_pair(rep, va.x, va.y, vb.x, vb.y, deep=True)
        small = min(bound, 2)
        for p, q in _vec_iter(small):
            for r, s in _vec_iter(small):
                if p * s - q * r == 0:
                    continue
                check_pair(rep, p, q, r, s, deep=False)

        # Corpus controls.
        bigon = corpus.bigon_scene()
        rep.check(
            "bigon-control-detected",
            len(find_bigons(bigon, "a", "b")) == 2,
            {"scene": bigon.name},
            len(find_bigons(bigon, "a", "b")),
            2,
        )
        trivial_scene = corpus.trivial_component_scene()
        found = trivial_components(trivial_scene)
        rep.check(
            "trivial-control-detected",
            [c.curve for c in found] == ["c"],
            {"scene": trivial_scene.name},
            [c.curve for c in found],
            ["c"],
        )
        g2 = corpus.genus2_filling_pair()
        diag = validate(g2)
        rep.check(
            "genus2-pair-shape",
            (diag.chi, diag.genus, diag.face_degrees) == (-2, 2, (8, 8)),
            {"scene": g2.name},
            (diag.chi, diag.genus, diag.face_degrees),
            (-2, 2, (8, 8)),
        )

    return _timed(run, report)


# ======================================================================
# Twist coordinate round trips
# ======================================================================


def suite_twist_coords(trials: int = 1000, seed: int = 7) -> SuiteReport:
    _require_bound(trials, "trials")
    report = SuiteReport("twist_coords", {"trials": trials, "seed": seed})

    def run(rep: SuiteReport) -> None:
        rng = random.Random(seed)
        decomps = corpus.dt_decompositions()
        names = sorted(decomps)
        for trial in range(trials):
            name = names[trial % len(names)]
            d, _ = decomps[name]
            x = _random_coords(rng, d)
            ins = {"decomposition": name, "trial": trial, "x": repr(x)}
            k = _random_twists(rng, x)
            y = twist_multiply(x, k)
            rep.check(
                "twist-preserves-m-b",
                y.m == x.m and y.b == x.b,
                ins,
                (y.m, y.b),
                (x.m, x.b),
            )
            try:
                validate_coords(d, y)
                parity_ok = True
            except Exception as exc:  # noqa: BLE001 - failure as data
                parity_ok = False
            rep.check("twist-preserves-validity", parity_ok, {**ins, "k": k}, parity_ok, True)
            back = solve_twists(y, x)
            rep.check("round-trip", back == k, {**ins, "k": k}, back, k)
            k2 = _random_twists(rng, x)
            lhs = twist_multiply(twist_multiply(x, k), k2)
            rhs = twist_multiply(x, tuple(i + j for i, j in zip(k, k2)))
            rep.check("twist-commutation", lhs == rhs, {**ins, "k": k, "k2": k2}, lhs, rhs)
            if x.m:
                i = 1 + trial % len(x.m)
                tw = dt_dehn_twist(x, i, "positive")
                unit = tuple(x.m[i - 1] if j == i - 1 else 0 for j in range(len(x.m)))
                rep.check(
                    "dehn-twist-is-unit-twist",
                    tw == twist_multiply(x, unit),
                    {**ins, "i": i},
                    tw,
                    twist_multiply(x, unit),
                )

    return _timed(run, report)


def _random_coords(rng: random.Random, d) -> DTCoords:
    shape_curves = d.num_curves
    n_bound = len(d.boundary_slots())
    while True:
        m = tuple(rng.choice((0, 0, 1, 2, 2, 3, 4)) for _ in range(shape_curves))
        b = tuple(rng.randint(0, 4) for _ in range(n_bound))
        t = tuple(
            rng.randint(0, 5) if mi == 0 else rng.randint(-5, 5) for mi in m
        )
        x = DTCoords(m=m, t=t, b=b)
        try:
            validate_coords(d, x)
        except Exception:  # parity rejection; retry
            continue
        return x


def _random_twists(rng: random.Random, x: DTCoords) -> Tuple[int, ...]:
    return tuple(0 if mi == 0 else rng.randint(-4, 4) for mi in x.m)


# ======================================================================
# Aggregation
# ======================================================================

SUITES: Dict[str, Callable[..., SuiteReport]] = {
    "product_laws": suite_product_laws,
    "convexity": suite_convexity,
    "twist_dynamics": suite_twist_dynamics,
    "twist_bounds": suite_twist_bounds,
    "resolution_oracle": suite_resolution_oracle,
    "twist_coords": suite_twist_coords,
}


def run_all(
    bound: int = 4,
    n_min: int = -6,
    n_max: int = 6,
    gamma_bound: int = 6,
    m_max: int = 3,
    trials: int = 1000,
    seed: int = 7,
    conv_bound: Optional[int] = None,
    suites: Optional[Sequence[str]] = None,
) -> List[SuiteReport]:
    """Run the selected suites (all by default).

    ``bound`` is the class-coordinate window for the exhaustive suites;
    the cubic-cost convexity and twist-bound sweeps default to a window of
    min(bound, 3) unless ``conv_bound`` overrides it.
    """
    if conv_bound is None:
        conv_bound = min(bound, 3)
    plan: List[Tuple[str, Callable[[], SuiteReport]]] = [
        ("product_laws", lambda: suite_product_laws(bound)),
        ("convexity", lambda: suite_convexity(conv_bound, n_min, n_max)),
        ("twist_dynamics", lambda: suite_twist_dynamics(bound, gamma_bound)),
        ("twist_bounds", lambda: suite_twist_bounds(conv_bound, m_max)),
        ("resolution_oracle", lambda: suite_resolution_oracle(bound)),
        ("twist_coords", lambda: suite_twist_coords(trials, seed)),
    ]
    wanted = set(suites) if suites else None
    if wanted is not None:
        unknown = wanted - set(SUITES)
        if unknown:
            raise InvalidBound(f"unknown suites: {sorted(unknown)}")
    out = []
    for name, thunk in plan:
        if wanted is None or name in wanted:
            out.append(thunk())
    return out


def report_to_dict(reports: Sequence[SuiteReport]) -> Dict[str, Any]:
    return {
        "suites": [
            {
                "suite": r.suite,
                "params": r.params,
                "cases": r.cases,
                "failures": [
                    {
                        "inputs": f.inputs,
                        "lhs": f.lhs,
                        "rhs": f.rhs,
                        "clause": f.clause,
                    }
                    for f in r.failures
                ],
                "millis": r.millis,
            }
            for r in reports
        ],
        "total_failures": sum(len(r.failures) for r in reports),
    }
