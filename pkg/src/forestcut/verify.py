"""Edge-count bounds, degree lemmas, and the catalog scanning harness.

Every bound has the form ``e(G) >= slope * n + intercept`` under a hypothesis
bundle. :func:`check_bound` returns one of three outcomes; ``not_applicable``
is kept apart from ``holds`` so that order thresholds stay visible in reports.
All comparisons are done with :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import time
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .cuts import find_forest_cut, find_independent_cut, vertex_connectivity
from .cyclic import is_k_cyclic
from .graph import Graph, degree_histogram, is_connected, is_k_triangle, universal_vertices
from .io import CatalogEntry, write_graph6

NOT_APPLICABLE = "not_applicable"
HOLDS = "holds"
VIOLATION = "violation"


@dataclass(frozen=True)
class Hypothesis:
    min_order: int = 1
    min_connectivity: int = 1
    cyclic: int = 0
    no_universal: bool = False
    forest_cut_free: bool = False
    independent_cut_free: bool = False


@dataclass(frozen=True)
class BoundSpec:
    name: str
    slope: Fraction
    intercept: Fraction
    hypothesis: Hypothesis
    proven: bool = False

    def value(self, n: int) -> Fraction:
        return self.slope * n + self.intercept


_FOREST_FREE = Hypothesis(forest_cut_free=True)


def alpha_fc(alpha) -> BoundSpec:
    """``e(G) >= alpha (n - 3) + 3`` for connected graphs without a forest cut."""
    alpha = Fraction(alpha)
    if not 2 <= alpha <= 3:
        raise ValueError(f"alpha must lie in [2, 3], got {alpha}")
    return BoundSpec(f"alpha_fc({alpha})", alpha, 3 - 3 * alpha, _FOREST_FREE, proven=alpha <= Fraction(9, 4))


BOUNDS: dict[str, BoundSpec] = {
    "thm_a": BoundSpec("thm_a", Fraction(9, 4), Fraction(-15, 4), _FOREST_FREE, proven=True),
    "thm_b": BoundSpec("thm_b", Fraction(15, 8), Fraction(0), Hypothesis(6, 3, 1), proven=True),
    "thm_c": BoundSpec("thm_c", Fraction(2), Fraction(0), Hypothesis(6, 3, 2), proven=True),
    "conj_3n": BoundSpec("conj_3n", Fraction(3), Fraction(-6), _FOREST_FREE),
    # the "cycle around every vertex" hypothesis is certified as 1-cyclic plus no universal vertex
    "conj_2": BoundSpec("conj_2", Fraction(7, 3), Fraction(-7, 3), Hypothesis(1, 3, 1, no_universal=True)),
    "conj_73": BoundSpec("conj_73", Fraction(7, 3), Fraction(0), Hypothesis(9, 4, 2)),
    "chen_yu": BoundSpec("chen_yu", Fraction(2), Fraction(-3), Hypothesis(independent_cut_free=True), proven=True),
    "thm_c_9_4": BoundSpec("thm_c_9_4", Fraction(9, 4), Fraction(0), Hypothesis(10, 3, 2)),
}


def get_bound(name: str) -> BoundSpec:
    """Look up a bound by name; ``thm-a`` and ``thm_a`` are the same, ``alpha_fc(11/5)`` is parsed."""
    key = name.strip().lower().replace("-", "_")
    if key.startswith("alpha_fc"):
        inner = key[len("alpha_fc"):].strip("(): _=")
        return alpha_fc(Fraction(inner))
    try:
        return BOUNDS[key]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; known: {', '.join(BOUNDS)}, alpha_fc(<a>)") from None


def bound_value(spec, n: int) -> Fraction:
    if isinstance(spec, str):
        spec = get_bound(spec)
    return spec.value(n)


@dataclass(frozen=True)
class BoundCheck:
    status: str
    bound: str
    order: int
    size: int
    bound_value: Fraction
    certificates: dict = field(default_factory=dict, compare=False)


def hypothesis_certificates(g: Graph, hyp: Hypothesis) -> Optional[dict]:
    """Evaluate the hypothesis cheapest-first; return the evidence, or None on the first failure."""
    cert: dict = {"order": g.order}
    if g.order < hyp.min_order:
        return None
    if not is_connected(g):
        return None
    cert["connected"] = True
    if hyp.min_connectivity > 1:
        kappa = vertex_connectivity(g)
        cert["connectivity"] = kappa
        if kappa < hyp.min_connectivity:
            return None
    if hyp.no_universal:
        cert["universal_vertices"] = universal_vertices(g).bit_count()
        if cert["universal_vertices"]:
            return None
    if hyp.cyclic:
        if not is_k_cyclic(g, hyp.cyclic):
            return None
        cert["cyclic"] = hyp.cyclic
    if hyp.independent_cut_free:
        if find_independent_cut(g) is not None:
            return None
        cert["independent_cut_free"] = True
    if hyp.forest_cut_free:
        if find_forest_cut(g) is not None:
            return None
        cert["forest_cut_free"] = True
    return cert


def check_bound(g: Graph, spec) -> BoundCheck:
    if isinstance(spec, str):
        spec = get_bound(spec)
    value = spec.value(g.order)
    cert = hypothesis_certificates(g, spec.hypothesis)
    if cert is None:
        return BoundCheck(NOT_APPLICABLE, spec.name, g.order, g.size, value)
    status = HOLDS if g.size >= value else VIOLATION
    return BoundCheck(status, spec.name, g.order, g.size, value, cert)


# --- degree lemmas ---------------------------------------------------------


@dataclass(frozen=True)
class DegreeClassEdgeCount:
    low_degree: int
    high_degree: int
    count: int


def degree_class_edges(g: Graph, low: int, high: int) -> DegreeClassEdgeCount:
    """Edges joining a vertex of degree exactly ``low`` to one of degree at least ``high``."""
    if not low < high:
        raise ValueError("low must be below high")
    deg = g.degrees()
    count = sum(1 for u, v in g.edges()
                if (deg[u] == low and deg[v] >= high) or (deg[v] == low and deg[u] >= high))
    return DegreeClassEdgeCount(low, high, count)


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    applicable: bool
    clauses: dict = field(default_factory=dict)  # clause -> (passed, offending vertex or None)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.clauses.values())


def _is_3conn_cyclic(g: Graph, k: int, min_order: int) -> bool:
    return (g.order >= min_order and is_connected(g) and vertex_connectivity(g) >= 3
            and is_k_cyclic(g, k))


def check_lemma_deg3(g: Graph) -> LemmaReport:
    """In a 3-connected 1-cyclic graph on at least 5 vertices: (a) no two degree-3
    vertices are adjacent; (b) g is a triangle-plus-hubs graph or every vertex
    has at least three neighbors of degree at least 4."""
    if not _is_3conn_cyclic(g, 1, 5):
        return LemmaReport("deg3", False)
    deg = g.degrees()
    bad_a = next((v for v in range(g.order)
                  if deg[v] == 3 and any(deg[u] == 3 for u in range(g.order) if g.has_edge(v, u))), None)
    if is_k_triangle(g) == g.order - 3:
        bad_b = None
    else:
        bad_b = next((v for v in range(g.order)
                      if sum(1 for u in range(g.order) if g.has_edge(v, u) and deg[u] >= 4) < 3), None)
    return LemmaReport("deg3", True, {"a": (bad_a is None, bad_a), "b": (bad_b is None, bad_b)})


def check_lemma_2deg5(g: Graph) -> LemmaReport:
    """In a 3-connected 2-cyclic graph on at least 6 vertices every degree-3 vertex
    has at least two neighbors of degree at least 5."""
    if not _is_3conn_cyclic(g, 2, 6):
        return LemmaReport("2deg5", False)
    deg = g.degrees()
    bad = next((v for v in range(g.order)
                if deg[v] == 3 and sum(1 for u in range(g.order) if g.has_edge(v, u) and deg[u] >= 5) < 2), None)
    return LemmaReport("2deg5", True, {"main": (bad is None, bad)})


def counting_identities(g: Graph) -> list[str]:
    """Histogram identities, plus ``|F| >= 2 n_3`` for 3-connected 2-cyclic graphs with n >= 6."""
    hist = degree_histogram(g)
    problems = []
    if sum(hist.values()) != g.order:
        problems.append("sum of n_i != n")
    if sum(d * c for d, c in hist.items()) != 2 * g.size:
        problems.append("sum of i*n_i != 2e")
    if _is_3conn_cyclic(g, 2, 6) and degree_class_edges(g, 3, 5).count < 2 * hist.get(3, 0):
        problems.append("|F| < 2 n_3")
    return problems


# --- scanning --------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    index: int
    graph6: str
    bound: str
    edges: int
    bound_value: Fraction
    proven: bool
    certificates: dict = field(compare=False)

    def record(self) -> dict:
        rec = asdict(self)
        rec["bound_value"] = str(self.bound_value)
        rec["kind"] = "theorem (implementation bug)" if self.proven else "conjecture counterexample"
        return rec


@dataclass(frozen=True)
class LemmaFailure:
    index: int
    graph6: str
    lemma: str
    clause: str
    vertex: Optional[int]


@dataclass
class ScanReport:
    graphs_tested: int = 0
    hypothesis_matches: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    lemma_applicable: dict = field(default_factory=dict)
    lemma_failures: list = field(default_factory=list)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.lemma_failures

    def summary_lines(self) -> list[str]:
        lines = [f"graphs tested: {self.graphs_tested}"]
        for name in sorted(self.hypothesis_matches):
            found = sum(1 for v in self.violations if v.bound == name)
            lines.append(f"bound {name}: hypothesis matched {self.hypothesis_matches[name]}, violations {found}")
        for name in sorted(self.lemma_applicable):
            failed = sum(1 for f in self.lemma_failures if f.lemma == name)
            lines.append(f"lemma {name}: applicable {self.lemma_applicable[name]}, failures {failed}")
        for v in self.violations:
            tag = "THEOREM VIOLATION (implementation bug)" if v.proven else "counterexample"
            lines.append(f"{tag}: entry {v.index} {v.graph6} bound={v.bound} e={v.edges} < {v.bound_value}")
        for f in self.lemma_failures:
            lines.append(f"lemma failure: entry {f.index} {f.graph6} {f.lemma}({f.clause}) vertex={f.vertex}")
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return lines

    def write_records(self, fh) -> None:
        """One JSON object per violation."""
        for v in self.violations:
            fh.write(json.dumps(v.record(), sort_keys=True) + "\n")


def _scan_one(job) -> tuple:
    index, g, bounds, lemma_checks = job
    matched = []
    violations = []
    for spec in bounds:
        res = check_bound(g, spec)
        if res.status == NOT_APPLICABLE:
            continue
        matched.append(spec.name)
        if res.status == VIOLATION:
            violations.append(Violation(index, write_graph6(g), spec.name, g.size, res.bound_value,
                                        spec.proven, res.certificates))
    applicable = []
    failures = []
    if lemma_checks:
        for report in (check_lemma_deg3(g), check_lemma_2deg5(g)):
            if not report.applicable:
                continue
            applicable.append(report.lemma)
            for clause, (ok, vertex) in sorted(report.clauses.items()):
                if not ok:
                    failures.append(LemmaFailure(index, write_graph6(g), report.lemma, clause, vertex))
        applicable.append("counting")
        for problem in counting_identities(g):
            failures.append(LemmaFailure(index, write_graph6(g), "counting", problem, None))
    return index, matched, violations, applicable, failures


def scan(catalog: Iterable, bounds: Iterable = (), lemma_checks: bool = False, workers: int = 1) -> ScanReport:
    """Run every bound (and optionally the degree lemmas) over a catalog.

    ``catalog`` yields :class:`~forestcut.io.CatalogEntry` objects or bare
    graphs (numbered from 0). The report does not depend on ``workers``.
    """
    start = time.perf_counter()
    specs = tuple(get_bound(b) if isinstance(b, str) else b for b in bounds)
    jobs = ((e.index, e.graph, specs, lemma_checks) if isinstance(e, CatalogEntry) else (i, e, specs, lemma_checks)
            for i, e in enumerate(catalog))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_one, jobs, chunksize=8))
    else:
        results = [_scan_one(job) for job in jobs]
    report = ScanReport(hypothesis_matches={s.name: 0 for s in specs})
    for index, matched, violations, applicable, failures in sorted(results, key=lambda r: r[0]):
        report.graphs_tested += 1
        for name in matched:
            report.hypothesis_matches[name] += 1
        report.violations.extend(violations)
        for name in applicable:
            report.lemma_applicable[name] = report.lemma_applicable.get(name, 0) + 1
        report.lemma_failures.extend(failures)
    report.elapsed = time.perf_counter() - start
    return report
