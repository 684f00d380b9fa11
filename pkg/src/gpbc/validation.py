"""Cross-validation of the closed forms against the brute-force oracle.

A validation run compares formula values with exhaustively computed ones
over a range of n and reports every mismatch as data, not as an error:
the discrepancy report is a first-class artifact documenting where the
closed forms and the oracle disagree.  Identity checks are different --
they are mathematically forced, so any identity failure indicates an
implementation bug and drives the exit code to 1 instead of 2.
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import _kernels as kernels
from .centrality import (
    betweenness,
    induced_between_sets,
    induced_by_set,
    induced_by_vertex,
)
from .errors import InvalidParameters
from .formulas import (
    LEMMA_COMPONENTS,
    Family,
    PairClass,
    PairKind,
    cf_betweenness_inner,
    cf_betweenness_outer,
    cf_classic_induced,
    cf_diameter,
    cf_distance,
    cf_lemma,
    cf_sigma,
)
from .graphs import (
    Graph,
    build_gp,
    complete_graph,
    cycle_graph,
    is_vertex_transitive,
    path_graph,
    star_graph,
    wheel_graph,
)
from .shortest_paths import apsp_matrices, diameter


class Quantity(Enum):
    SIGMA = "Sigma"
    DISTANCE = "Distance"
    DIAMETER = "Diameter"
    BETWEENNESS_OUTER = "BetweennessOuter"
    BETWEENNESS_INNER = "BetweennessInner"
    LEMMA_COMPONENT = "LemmaComponent"
    CLASSIC_INDUCED = "ClassicInduced"
    IDENTITY = "Identity"


_QUANTITY_RANK = {q: i for i, q in enumerate(Quantity)}


@dataclass(frozen=True)
class Discrepancy:
    """One confirmed mismatch between a formula and the oracle."""

    quantity: Quantity
    n: int
    argument: str
    formula_value: Fraction
    oracle_value: Fraction
    paper_anchor: str

    def to_json_dict(self) -> dict:
        return {
            "quantity": self.quantity.value,
            "n": self.n,
            "argument": self.argument,
            "formula": {
                "num": self.formula_value.numerator,
                "den": self.formula_value.denominator,
            },
            "oracle": {
                "num": self.oracle_value.numerator,
                "den": self.oracle_value.denominator,
            },
            "paper_anchor": self.paper_anchor,
        }


def _natural_key(text: str):
    return tuple(
        int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", text)
    )


def _sort_key(d: Discrepancy):
    return (d.n, _QUANTITY_RANK[d.quantity], _natural_key(d.argument))


@dataclass
class DiscrepancyReport:
    """Deterministic result of a validation run."""

    ranges_checked: list[tuple[Quantity, int, int]]
    discrepancies: list[Discrepancy]
    checks_run: int
    elapsed: float  # seconds

    def identity_failures(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.quantity is Quantity.IDENTITY]

    def exit_code(self) -> int:
        """0 clean, 1 identity failure (a bug), 2 formula discrepancies."""
        if self.identity_failures():
            return 1
        if self.discrepancies:
            return 2
        return 0

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        payload = {
            "ranges": [
                {"quantity": q.value, "n_min": lo, "n_max": hi}
                for q, lo, hi in self.ranges_checked
            ],
            "checks_run": self.checks_run,
            "discrepancies": [d.to_json_dict() for d in self.discrepancies],
        }
        if include_elapsed:
            payload["elapsed_ms"] = int(round(self.elapsed * 1000))
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict()) + "\n"

    def canonical_json(self) -> str:
        """Byte-stable form: identical ranges give identical bytes."""
        return json.dumps(self.to_json_dict(include_elapsed=False)) + "\n"

    @staticmethod
    def merge(reports: list["DiscrepancyReport"]) -> "DiscrepancyReport":
        merged = DiscrepancyReport(
            ranges_checked=[r for rep in reports for r in rep.ranges_checked],
            discrepancies=sorted(
                (d for rep in reports for d in rep.discrepancies), key=_sort_key
            ),
            checks_run=sum(rep.checks_run for rep in reports),
            elapsed=sum(rep.elapsed for rep in reports),
        )
        return merged


class _Recorder:
    def __init__(self):
        self.start = time.perf_counter()
        self.checks_run = 0
        self.discrepancies: list[Discrepancy] = []

    def compare(self, quantity, n, argument, formula_value, oracle_value, anchor):
        self.checks_run += 1
        formula_value = Fraction(formula_value)
        oracle_value = Fraction(oracle_value)
        if formula_value != oracle_value:
            self.discrepancies.append(
                Discrepancy(quantity, n, argument, formula_value, oracle_value, anchor)
            )

    def report(self, ranges) -> DiscrepancyReport:
        return DiscrepancyReport(
            ranges_checked=list(ranges),
            discrepancies=sorted(self.discrepancies, key=_sort_key),
            checks_run=self.checks_run,
            elapsed=time.perf_counter() - self.start,
        )


def _require_range(n_min: int, n_max: int, low: int, high: int) -> None:
    if not low <= n_min <= n_max <= high:
        raise InvalidParameters(
            f"need {low} <= n_min <= n_max <= {high}, got [{n_min}, {n_max}]"
        )


def _representative_rows(g) -> tuple:
    """(dist, sigma) BFS rows from u0 and from v0, as int64 arrays."""
    indptr, indices = g.csr
    dist_u, sigma_u = kernels.sssp_counts(indptr, indices, 0)
    dist_v, sigma_v = kernels.sssp_counts(indptr, indices, g.n)
    return dist_u, sigma_u, dist_v, sigma_v


def _pair_target(kind: PairClass, n: int, r: int) -> tuple[int, int]:
    """Row selector (0 = from u0, 1 = from v0) and target index for (kind, r)."""
    if kind is PairClass.OUTER_OUTER:
        return 0, r
    if kind is PairClass.INNER_INNER:
        return 1, n + r
    return 0, n + r


def validate_sigma(n_min: int, n_max: int) -> DiscrepancyReport:
    """Compare cf_sigma with oracle geodesic counts for every (kind, r)."""
    _require_range(n_min, n_max, 5, 200)
    rec = _Recorder()
    for n in range(n_min, n_max + 1):
        g = build_gp(n, 2)
        _, sigma_u, _, sigma_v = _representative_rows(g)
        rows = (sigma_u, sigma_v)
        for kind in PairClass:
            start = 0 if kind is PairClass.OUTER_INNER else 1
            for r in range(start, n // 2 + 1):
                row, target = _pair_target(kind, n, r)
                formula = cf_sigma(n, PairKind(kind, r), verified_only=False)
                rec.compare(
                    Quantity.SIGMA,
                    n,
                    f"{kind.value} r={r}",
                    formula.value,
                    int(rows[row][target]),
                    formula.case,
                )
    return rec.report([(Quantity.SIGMA, n_min, n_max)])


def validate_distance_diameter(n_min: int, n_max: int) -> DiscrepancyReport:
    """Compare cf_distance per (kind, r) and cf_diameter for n >= 8."""
    _require_range(n_min, n_max, 5, 200)
    rec = _Recorder()
    ranges = [(Quantity.DISTANCE, n_min, n_max)]
    for n in range(n_min, n_max + 1):
        g = build_gp(n, 2)
        dist_u, _, dist_v, _ = _representative_rows(g)
        rows = (dist_u, dist_v)
        for kind in PairClass:
            start = 0 if kind is PairClass.OUTER_INNER else 1
            for r in range(start, n // 2 + 1):
                row, target = _pair_target(kind, n, r)
                formula = cf_distance(n, PairKind(kind, r), verified_only=False)
                rec.compare(
                    Quantity.DISTANCE,
                    n,
                    f"{kind.value} r={r}",
                    formula.value,
                    int(rows[row][target]),
                    formula.case,
                )
        if n >= 8:
            formula = cf_diameter(n, verified_only=False)
            rec.compare(
                Quantity.DIAMETER, n, "diameter", formula.value, diameter(g), formula.case
            )
    if n_max >= 8:
        ranges.append((Quantity.DIAMETER, max(n_min, 8), n_max))
    return rec.report(ranges)


def validate_betweenness(n_min: int, n_max: int) -> DiscrepancyReport:
    """Compare the outer/inner totals and all six lemma components."""
    _require_range(n_min, n_max, 12, 100)
    rec = _Recorder()
    for n in range(n_min, n_max + 1):
        g = build_gp(n, 2)
        bmap = betweenness(g)
        u0, v0 = g.outer(0), g.inner(0)
        outer_set, inner_set = g.outer_vertices(), g.inner_vertices()
        total_outer = cf_betweenness_outer(n, verified_only=False)
        total_inner = cf_betweenness_inner(n, verified_only=False)
        rec.compare(
            Quantity.BETWEENNESS_OUTER, n, "B(u0)",
            total_outer.value, bmap[u0], total_outer.case,
        )
        rec.compare(
            Quantity.BETWEENNESS_INNER, n, "B(v0)",
            total_inner.value, bmap[v0], total_inner.case,
        )
        oracle_components = {
            "B(u0,U)": induced_by_set(g, u0, outer_set),
            "B(u0,V)": induced_by_set(g, u0, inner_set),
            "B(u0,U|V)": induced_between_sets(g, u0, outer_set, inner_set),
            "B(v0,U)": induced_by_set(g, v0, outer_set),
            "B(v0,V)": induced_by_set(g, v0, inner_set),
            "B(v0,U|V)": induced_between_sets(g, v0, outer_set, inner_set),
        }
        for component in LEMMA_COMPONENTS:
            formula = cf_lemma(component, n, verified_only=False)
            rec.compare(
                Quantity.LEMMA_COMPONENT, n, component,
                formula.value, oracle_components[component], formula.case,
            )
    return rec.report([
        (Quantity.BETWEENNESS_OUTER, n_min, n_max),
        (Quantity.BETWEENNESS_INNER, n_min, n_max),
        (Quantity.LEMMA_COMPONENT, n_min, n_max),
    ])


def run_identity_suite(n_min: int, n_max: int) -> DiscrepancyReport:
    """Check the mathematically forced identities on GP(n,2).

    Half-sum per vertex, the pair-distance sum identity, orbit equality,
    and full equality in the two vertex-transitive cases.  Any failure
    here is an implementation bug, never a formula finding.
    """
    _require_range(n_min, n_max, 5, 60)
    rec = _Recorder()
    for n in range(n_min, n_max + 1):
        g = build_gp(n, 2)
        bmap = betweenness(g)
        for x in g.vertices:
            half_sum = Fraction(0)
            for x0 in g.vertices:
                if x0 != x:
                    half_sum += induced_by_vertex(g, x, x0)
            rec.compare(
                Quantity.IDENTITY, n, f"half-sum at {x.label}",
                bmap[x], half_sum / 2,
                "B(x) = (1/2) sum over x0 of B(x,x0)",
            )
        dist, _ = apsp_matrices(g)
        v_count = len(g)
        pair_total = Fraction(int(dist.sum()) // 2 - v_count * (v_count - 1) // 2)
        rec.compare(
            Quantity.IDENTITY, n, "betweenness sum",
            bmap.total(), pair_total,
            "sum of B(x) = sum over pairs of (d(s,t)-1)",
        )
        outer_values = {bmap[v] for v in g.outer_vertices()}
        inner_values = {bmap[v] for v in g.inner_vertices()}
        rec.compare(
            Quantity.IDENTITY, n, "outer orbit equality",
            max(outer_values), min(outer_values),
            "rotation maps any outer vertex to any other",
        )
        rec.compare(
            Quantity.IDENTITY, n, "inner orbit equality",
            max(inner_values), min(inner_values),
            "rotation maps any inner vertex to any other",
        )
        if is_vertex_transitive(n, 2):
            rec.compare(
                Quantity.IDENTITY, n, "full vertex-transitivity",
                bmap[g.outer(0)], bmap[g.inner(0)],
                "vertex-transitive cases have uniform betweenness",
            )
    return rec.report([(Quantity.IDENTITY, n_min, n_max)])


_FAMILY_BUILDERS = {
    Family.PATH: (path_graph, 2),
    Family.CYCLE: (cycle_graph, 3),
    Family.STAR: (star_graph, 3),
    Family.WHEEL: (wheel_graph, 6),
    Family.COMPLETE: (complete_graph, 3),
}


def _family_vertices(family: Family, n: int) -> range:
    return range(1, n + 1) if family is Family.PATH else range(n)


def validate_classic_induced(n_min: int, n_max: int) -> DiscrepancyReport:
    """Compare vertex-induced betweenness on the classic families."""
    _require_range(n_min, n_max, 2, 200)
    rec = _Recorder()
    ranges = []
    for family, (builder, floor) in _FAMILY_BUILDERS.items():
        lo = max(n_min, floor)
        if lo > n_max:
            continue
        ranges.append((Quantity.CLASSIC_INDUCED, lo, n_max))
        for n in range(lo, n_max + 1):
            g: Graph = builder(n)
            ids = _family_vertices(family, n)
            for i in ids:
                for j in ids:
                    if i == j:
                        continue
                    formula = cf_classic_induced(family, n, i, j)
                    rec.compare(
                        Quantity.CLASSIC_INDUCED, n,
                        f"{family.value}({n}) B(x{i},x{j})",
                        formula.value, induced_by_vertex(g, i, j), formula.case,
                    )
    return rec.report(ranges)


SUITES = ("sigma", "distance", "betweenness", "identities", "classic", "all")


def run_suite(name: str, n_min: int, n_max: int) -> DiscrepancyReport:
    """Entry point used by the CLI; ``all`` clamps each sub-suite."""
    if name == "sigma":
        return validate_sigma(n_min, n_max)
    if name == "distance":
        return validate_distance_diameter(n_min, n_max)
    if name == "betweenness":
        return validate_betweenness(n_min, n_max)
    if name == "identities":
        return run_identity_suite(n_min, n_max)
    if name == "classic":
        return validate_classic_induced(n_min, n_max)
    if name != "all":
        raise InvalidParameters(f"unknown suite {name!r}")

    def clamp(low: int, high: int):
        lo, hi = max(n_min, low), min(n_max, high)
        return (lo, hi) if lo <= hi else None

    reports = []
    span = clamp(5, 200)
    if span:
        reports.append(validate_sigma(*span))
        reports.append(validate_distance_diameter(*span))
    span = clamp(12, 100)
    if span:
        reports.append(validate_betweenness(*span))
    span = clamp(5, 60)
    if span:
        reports.append(run_identity_suite(*span))
    span = clamp(2, 200)
    if span:
        reports.append(validate_classic_induced(*span))
    if not reports:
        raise InvalidParameters(f"no suite covers the range [{n_min}, {n_max}]")
    return DiscrepancyReport.merge(reports)
