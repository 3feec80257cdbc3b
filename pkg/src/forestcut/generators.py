"""Graph families, blowup constructions, fixed fixtures and small-graph enumeration."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Optional

from .graph import Graph, GraphInputError, is_connected, universal_vertices

ENUMERATION_CAP = 7

ONE_EXTERNAL = "one_external"
ALL_EXTERNAL = "all_external"
THREE_EXTERNAL = "three_external"
FOUR_EXTERNAL = "four_external"


# --- elementary families ---------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circulant(n: int, jumps) -> Graph:
    """Vertices ``0..n-1`` with ``i ~ j`` iff their cyclic distance is a jump."""
    jumps = sorted(set(jumps))
    if n < 3:
        raise GraphInputError("a circulant needs at least 3 vertices")
    for d in jumps:
        if not 1 <= d <= n // 2:
            raise GraphInputError(f"jump {d} outside 1..{n // 2}")
    edges = set()
    for i in range(n):
        for d in jumps:
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(edges))


def octahedron() -> Graph:
    return circulant(6, (1, 2))


def k_triangle(s: int) -> Graph:
    """Triangle on ``0, 1, 2`` plus ``s`` vertices each joined to all three."""
    if s < 1:
        raise GraphInputError("k_triangle needs s >= 1")
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(h, 3 + i) for i in range(s) for h in range(3)]
    return Graph.from_edges(s + 3, edges)


def k5_minus_e() -> Graph:
    return Graph.from_edges(5, [e for e in combinations(range(5), 2) if e != (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def circular_ladder(k: int) -> Graph:
    """Prism over a ``k``-cycle: rim ``0..k-1``, hub ring ``k..2k-1``."""
    if k < 3:
        raise GraphInputError("circular ladder needs k >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def king_grid(rows: int, cols: int) -> Graph:
    """King's-move graph on a ``rows x cols`` board, cell ``(r, c)`` is ``r*cols + c``."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            for dr, dc in ((0, 1), (1, -1), (1, 0), (1, 1)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < rows and 0 <= cc < cols:
                    edges.append((v, rr * cols + cc))
    return Graph.from_edges(rows * cols, edges)


# --- base catalogs ---------------------------------------------------------


def _check_base(g: Graph, d: int, name: str) -> Graph:
    from .cuts import vertex_connectivity

    if any(x != d for x in g.degrees()):
        raise GraphInputError(f"base {name} is not {d}-regular")
    if vertex_connectivity(g) != d:
        raise GraphInputError(f"base {name} is not {d}-connected")
    return g


@lru_cache(maxsize=None)
def base_graph(name: str) -> Graph:
    """Named base graph: ``k4``, ``k33``, ``petersen``, ``cl<k>``, ``k5``, ``circ<n>``.

    ``circ<n>`` is the circulant on ``n`` vertices with jumps 1 and 2.
    """
    key = name.lower().replace("_", "").replace("-", "").replace(",", "")
    if key == "k4":
        return _check_base(complete(4), 3, name)
    if key == "k33":
        return _check_base(complete_bipartite(3, 3), 3, name)
    if key == "petersen":
        return _check_base(petersen(), 3, name)
    if key.startswith("cl") and key[2:].isdigit():
        return _check_base(circular_ladder(int(key[2:])), 3, name)
    if key == "k5":
        return _check_base(complete(5), 4, name)
    if key.startswith("circ") and key[4:].isdigit() and int(key[4:]) >= 6:
        return _check_base(circulant(int(key[4:]), (1, 2)), 4, name)
    raise GraphInputError(f"unknown base graph {name!r}")


def cubic_bases(max_ladder: int = 6) -> dict[str, Graph]:
    names = ["k4", "k33"] + [f"cl{k}" for k in range(3, max_ladder + 1)] + ["petersen"]
    return {name: base_graph(name) for name in names}


def quartic_bases(max_circulant: int = 9) -> dict[str, Graph]:
    names = ["k5"] + [f"circ{n}" for n in range(6, max_circulant + 1)]
    return {name: base_graph(name) for name in names}


# --- blowups ---------------------------------------------------------------

_K4_PORTS = {ONE_EXTERNAL: (3, (0, 1, 2)), ALL_EXTERNAL: (4, (0, 1, 2, 3))}
# octahedron = circulant(6, {1,2}); {0,1,2} is a facial triangle and 1-2-4-5 an
# equator whose antipodal pair 0, 3 stays at degree 4
_OCTA_PORTS = {THREE_EXTERNAL: (3, (0, 1, 2)), FOUR_EXTERNAL: (4, (1, 2, 4, 5))}


def _blowup(base: Graph, block: Graph, ports: tuple[int, ...], degree: int) -> Graph:
    if any(d != degree for d in base.degrees()):
        raise GraphInputError(f"base graph must be {degree}-regular for this policy")
    b = block.order
    edges = []
    for v in range(base.order):
        edges += [(b * v + x, b * v + y) for x, y in block.edges()]
    # the i-th smallest neighbor of v is wired to port i of v's block
    port_of = {}
    for v in range(base.order):
        for i, u in enumerate(sorted(u for u in range(base.order) if base.has_edge(v, u))):
            port_of[(v, u)] = b * v + ports[i]
    for u, v in base.edges():
        edges.append((port_of[(u, v)], port_of[(v, u)]))
    return Graph.from_edges(b * base.order, edges)


def k4_blowup(base: Graph, policy: Optional[str] = None) -> Graph:
    """Replace every base vertex ``v`` by a K4 on ``4v..4v+3``.

    ``one_external`` needs a cubic base and leaves vertex ``4v+3`` at degree 3;
    ``all_external`` needs a quartic base and gives a 4-regular graph. The
    default policy follows the degree of the base.
    """
    policy = policy or default_policy("k4_blowup", base)
    if policy not in _K4_PORTS:
        raise GraphInputError(f"unknown K4 blowup policy {policy!r}")
    degree, ports = _K4_PORTS[policy]
    return _blowup(base, complete(4), ports, degree)


def octa_blowup(base: Graph, policy: Optional[str] = None) -> Graph:
    """Replace every base vertex ``v`` by an octahedron on ``6v..6v+5``."""
    policy = policy or default_policy("octa_blowup", base)
    if policy not in _OCTA_PORTS:
        raise GraphInputError(f"unknown octahedron blowup policy {policy!r}")
    degree, ports = _OCTA_PORTS[policy]
    return _blowup(base, octahedron(), ports, degree)


def default_policy(construction: str, base: Graph) -> str:
    deg = base.degree(0)
    if construction == "k4_blowup":
        return ONE_EXTERNAL if deg == 3 else ALL_EXTERNAL
    return THREE_EXTERNAL if deg == 3 else FOUR_EXTERNAL


# --- drawn fixtures --------------------------------------------------------


def _fig2_g7_16() -> Graph:
    # t1..t3 -> 0..2, i1..i4 -> 3..6
    t1, t2, t3, i1, i2, i3, i4 = range(7)
    edges = [(t1, t2), (t2, t3), (t3, t1), (i1, i2), (i2, i3), (i3, i4), (i4, i1),
             (i1, t1), (i1, t2), (i2, t2), (i2, t1), (i3, t3), (i3, t2), (i4, t3), (i4, t1), (i4, i2)]
    return Graph.from_edges(7, edges)


def _fig2_g8_18a() -> Graph:
    # outer t1..t4 -> 0..3, inner i1..i4 -> 4..7
    t1, t2, t3, t4, i1, i2, i3, i4 = range(8)
    edges = [(t1, t2), (t2, t3), (t3, t4), (t4, t1), (i1, i2), (i2, i3), (i3, i4), (i4, i1),
             (i1, t1), (i2, t2), (i3, t3), (i4, t4), (i1, i3), (t1, i4), (t1, i2), (t3, i4), (t3, i2),
             (t2, t4)]
    return Graph.from_edges(8, edges)


def _fig2_c6_hubs() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(h, i) for h in (6, 7) for i in range(6)]
    return Graph.from_edges(8, edges)


def _fig2_octa() -> Graph:
    bot, top, lef, rig, bac, fro = range(6)
    edges = [(bot, lef), (bot, bac), (bot, rig), (bot, fro), (lef, fro), (rig, bac),
             (top, lef), (top, bac), (top, rig), (top, fro), (lef, bac), (rig, fro)]
    return Graph.from_edges(6, edges)


FIG2_FIXTURES = {
    "kt3": lambda: k_triangle(3),
    "octa": _fig2_octa,
    "king3x3": lambda: king_grid(3, 3),
    "g7_16": _fig2_g7_16,
    "g8_18a": _fig2_g8_18a,
    "c6_plus_two_hubs": _fig2_c6_hubs,
}


def fig2_fixture(fixture_id: str) -> Graph:
    try:
        return FIG2_FIXTURES[fixture_id]()
    except KeyError:
        raise GraphInputError(f"unknown fixture {fixture_id!r}; known: {', '.join(FIG2_FIXTURES)}") from None


# --- family specs and expected profiles -----------------------------------


@dataclass(frozen=True)
class ExpectedProfile:
    """What certification must confirm. ``None`` fields are not checked.

    ``cyclic`` is a level ``k`` the graph must be k-cyclic at (0 means: not
    1-cyclic).
    """

    order: int
    size: int
    connectivity: Optional[int] = None
    cyclic: Optional[int] = None
    has_universal: Optional[bool] = None
    edge_ratio: Optional[Fraction] = None


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = field(default_factory=tuple)

    def build(self) -> Graph:
        return build_family(self.family, *self.params)

    def expected(self) -> ExpectedProfile:
        return expected_profile(self.family, *self.params)

    def label(self) -> str:
        return " ".join([self.family] + [str(p) for p in self.params])


def _resolve_base(base) -> tuple[Graph, str]:
    if isinstance(base, Graph):
        return base, "custom"
    return base_graph(base), str(base)


def build_family(family: str, *params) -> Graph:
    family = family.replace("-", "_")
    if family == "k_triangle":
        return k_triangle(int(params[0]))
    if family == "octahedron":
        return octahedron()
    if family == "k5_minus_e":
        return k5_minus_e()
    if family == "complete":
        return complete(int(params[0]))
    if family == "cycle":
        return cycle(int(params[0]))
    if family == "path":
        return path(int(params[0]))
    if family == "complete_bipartite":
        return complete_bipartite(int(params[0]), int(params[1]))
    if family == "circulant":
        return circulant(int(params[0]), [int(j) for j in params[1:]])
    if family == "petersen":
        return petersen()
    if family == "circular_ladder":
        return circular_ladder(int(params[0]))
    if family == "king_grid":
        rows = int(params[0])
        return king_grid(rows, int(params[1]) if len(params) > 1 else rows)
    if family in ("k4_blowup", "octa_blowup"):
        base, _ = _resolve_base(params[0])
        policy = params[1] if len(params) > 1 and params[1] else default_policy(family, base)
        policy = policy.replace("-", "_")
        return k4_blowup(base, policy) if family == "k4_blowup" else octa_blowup(base, policy)
    if family == "fig2_fixture":
        return fig2_fixture(params[0])
    raise GraphInputError(f"unknown family {family!r}")


_FIG2_PROFILES = {
    "kt3": ExpectedProfile(6, 12, 3, 2, True),
    "octa": ExpectedProfile(6, 12, 4, 2, False),
    "king3x3": ExpectedProfile(9, 20, 3, 2),
    "g7_16": ExpectedProfile(7, 16, 4, 2),
    "g8_18a": ExpectedProfile(8, 18, 4, 2),
    "c6_plus_two_hubs": ExpectedProfile(8, 18, 4, 2, False),
}


def expected_profile(family: str, *params) -> ExpectedProfile:
    family = family.replace("-", "_")
    if family == "k_triangle":
        s = int(params[0])
        return ExpectedProfile(s + 3, 3 * s + 3, 3, 2, True)
    if family == "octahedron":
        return ExpectedProfile(6, 12, 4, 2, False)
    if family == "k5_minus_e":
        return ExpectedProfile(5, 9, 3, 2, True)
    if family == "complete":
        n = int(params[0])
        return ExpectedProfile(n, n * (n - 1) // 2, n - 1, None, True)
    if family == "cycle":
        n = int(params[0])
        return ExpectedProfile(n, n, 2, 0 if n >= 4 else None, n == 3)
    if family == "path":
        n = int(params[0])
        return ExpectedProfile(n, n - 1, 1 if n >= 3 else None)
    if family == "complete_bipartite":
        a, b = int(params[0]), int(params[1])
        return ExpectedProfile(a + b, a * b, min(a, b))
    if family == "circulant":
        g = build_family("circulant", *params)
        return ExpectedProfile(g.order, g.size)
    if family == "petersen":
        return ExpectedProfile(10, 15, 3, 0, False)
    if family == "circular_ladder":
        k = int(params[0])
        return ExpectedProfile(2 * k, 3 * k, 3, None, False)
    if family == "king_grid":
        rows = int(params[0])
        cols = int(params[1]) if len(params) > 1 else rows
        size = rows * (cols - 1) + cols * (rows - 1) + 2 * (rows - 1) * (cols - 1)
        return ExpectedProfile(rows * cols, size)
    if family in ("k4_blowup", "octa_blowup"):
        base, _ = _resolve_base(params[0])
        policy = params[1] if len(params) > 1 and params[1] else default_policy(family, base)
        policy = policy.replace("-", "_")
        k = base.order
        if family == "k4_blowup":
            if policy == ONE_EXTERNAL:
                n, ratio, kappa = 4 * k, Fraction(15, 8), 3
            else:
                n, ratio, kappa = 4 * k, Fraction(2), 4
            return ExpectedProfile(n, int(ratio * n), kappa, 1, False, ratio)
        if policy == THREE_EXTERNAL:
            n, ratio, kappa = 6 * k, Fraction(9, 4), 3
        else:
            n, ratio, kappa = 6 * k, Fraction(7, 3), 4
        return ExpectedProfile(n, int(ratio * n), kappa, 2, False, ratio)
    if family == "fig2_fixture":
        return _FIG2_PROFILES[params[0]]
    raise GraphInputError(f"unknown family {family!r}")


@dataclass(frozen=True)
class Certificate:
    order: int
    size: int
    connectivity: int
    cyclic: int
    has_universal: bool
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return f"n={self.order} m={self.size} κ={self.connectivity} {self.cyclic}-cyclic"


def certify(g: Graph, expected: ExpectedProfile) -> Certificate:
    """Measure ``g`` with the cut and cyclicity kernels and compare to ``expected``."""
    from .cuts import vertex_connectivity
    from .cyclic import cyclicity, is_k_cyclic

    kappa = vertex_connectivity(g)
    if expected.cyclic is not None and expected.cyclic > 0:
        level = expected.cyclic if is_k_cyclic(g, expected.cyclic) else cyclicity(g, expected.cyclic)
    else:
        level = cyclicity(g, 1)
    universal = bool(universal_vertices(g))
    bad = []
    if g.order != expected.order:
        bad.append(f"order {g.order} != {expected.order}")
    if g.size != expected.size:
        bad.append(f"size {g.size} != {expected.size}")
    if expected.edge_ratio is not None and Fraction(g.size, g.order) != expected.edge_ratio:
        bad.append(f"edge ratio {Fraction(g.size, g.order)} != {expected.edge_ratio}")
    if expected.connectivity is not None and kappa != expected.connectivity:
        bad.append(f"connectivity {kappa} != {expected.connectivity}")
    if expected.cyclic is not None:
        if expected.cyclic == 0 and level != 0:
            bad.append("expected not 1-cyclic")
        elif expected.cyclic > 0 and level < expected.cyclic:
            bad.append(f"not {expected.cyclic}-cyclic")
    if expected.has_universal is not None and universal != expected.has_universal:
        bad.append(f"universal vertex present: {universal}")
    return Certificate(g.order, g.size, kappa, level, universal, tuple(bad))


# --- canonical forms and enumeration --------------------------------------


def graph_code(order: int, adj, perm) -> int:
    """Upper-triangle adjacency bits, column by column, of the graph relabeled by ``perm``.

    ``perm[new] = old``. The first pair ``(0, 1)`` is the most significant bit.
    """
    code = 0
    for j in range(1, order):
        row = adj[perm[j]]
        for i in range(j):
            code = code << 1 | (row >> perm[i] & 1)
    return code


def _refined_cells(g: Graph) -> list[list[int]]:
    """Stable colour-refinement classes, ordered by an isomorphism-invariant key."""
    n = g.order
    colors = g.degrees()
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in range(n) if g.adj[v] >> u & 1))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> int:
    """Minimum ``graph_code`` over labelings that respect the refined colour classes.

    The refined classes and their order are invariant, so the extremum over
    class-respecting relabelings is an isomorphism invariant that determines
    the graph.
    """
    cells = _refined_cells(g)
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        perm = [v for cell in choice for v in cell]
        code = graph_code(g.order, g.adj, perm)
        if best is None or code < best:
            best = code
    return best


def canonical_code_bruteforce(g: Graph) -> int:
    """Same idea over all ``n!`` relabelings; the test oracle for :func:`canonical_code`."""
    return min(graph_code(g.order, g.adj, p) for p in permutations(range(g.order)))


def graph_from_code(order: int, code: int) -> Graph:
    pairs = [(i, j) for j in range(1, order) for i in range(j)]
    total = len(pairs)
    return Graph.from_edges(order, (pairs[k] for k in range(total) if code >> (total - 1 - k) & 1))


@lru_cache(maxsize=None)
def _all_codes(n: int) -> tuple[int, ...]:
    """Canonical codes of all graphs (connected or not) on ``n`` vertices."""
    if n == 1:
        return (0,)
    seen = set()
    for code in _all_codes(n - 1):
        small = graph_from_code(n - 1, code)
        for nbrs in range(1 << (n - 1)):
            adj = list(small.adj) + [nbrs]
            for u in range(n - 1):
                if nbrs >> u & 1:
                    adj[u] |= 1 << (n - 1)
            seen.add(canonical_code(Graph(n, adj)))
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    graphs = (graph_from_code(n, c) for c in _all_codes(n))
    return tuple(g for g in graphs if is_connected(g))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices, one per isomorphism class.

    Graphs are built by attaching a new vertex to every graph on ``n - 1``
    vertices in all possible ways and keeping one canonical representative;
    they are yielded in canonical-code order.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"built-in enumeration supports 1 <= n <= {ENUMERATION_CAP}; use a catalog for n={n}")
    yield from _connected(n)


def random_connected(n: int, rng: random.Random, p: Optional[float] = None) -> Graph:
    """Rejection-sample a connected G(n, p); ``p`` is drawn from [0.25, 0.9] when omitted."""
    if p is None:
        p = rng.uniform(0.25, 0.9)
    while True:
        g = Graph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < p))
        if is_connected(g):
            return g
