"""Vertex connectivity and vertex cuts constrained to induce forests or independent sets."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import (
    MAX_SEARCH_ORDER,
    Graph,
    GraphInputError,
    SetLike,
    VertexSet,
    induced_is_forest,
    is_complete,
    is_independent,
    members,
    to_mask,
)

BRUTE_FORCE_CAP = 16

FOREST = "forest"
INDEPENDENT = "independent"
UNCONSTRAINED = "unconstrained"


class SearchLimitError(ValueError):
    """The graph is larger than a search routine is allowed to handle."""


@dataclass(frozen=True)
class CutWitness:
    """A vertex cut together with one side: a union of components of ``G - cut``."""

    cut: VertexSet
    kind: str
    side: VertexSet

    @property
    def cut_vertices(self) -> tuple[int, ...]:
        return members(self.cut)

    @property
    def side_vertices(self) -> tuple[int, ...]:
        return members(self.side)


def validate_witness(g: Graph, w: CutWitness) -> list[str]:
    """Re-derive every witness invariant from scratch; return the list of broken ones."""
    problems = []
    if w.side & w.cut:
        problems.append("side meets cut")
    if not w.side:
        problems.append("side is empty")
    other = g.vertices & ~(w.side | w.cut)
    if not other:
        problems.append("side and cut cover every vertex")
    if g.neighborhood(w.side) & other:
        problems.append("an edge joins side to the rest")
    if not is_cut(g, w.cut):
        problems.append("removing cut leaves the graph connected")
    if w.kind == FOREST and not induced_is_forest(g, w.cut):
        problems.append("cut does not induce a forest")
    if w.kind == INDEPENDENT and not is_independent(g, w.cut):
        problems.append("cut is not independent")
    return problems


def is_cut(g: Graph, s: SetLike) -> bool:
    """True iff at least two components remain after deleting ``s``."""
    rest = g.vertices & ~to_mask(s)
    if not rest:
        return False
    return g.reach(rest & -rest, rest) != rest


def _require_connected(g: Graph) -> None:
    if g.reach(1, g.vertices) != g.vertices:
        raise GraphInputError("graph must be connected")


def _smallest_side(g: Graph, cut: VertexSet) -> VertexSet:
    comps = g.components_of(g.vertices & ~cut)
    return min(comps, key=lambda c: (c.bit_count(), c))


# --- connected vertex sets -------------------------------------------------


def connected_sets(g: Graph, size: int) -> Iterator[VertexSet]:
    """Yield every connected vertex set of exactly ``size`` vertices, each once.

    A set is grown only from its smallest vertex; within one seed, a candidate
    that has been branched on is forbidden in the later sibling branches, so no
    set is reached along two different paths.
    """
    adj = g.adj
    if size < 1:
        return

    def grow(current: int, count: int, ext: int, forbidden: int) -> Iterator[int]:
        if count == size:
            yield current
            return
        while ext:
            w = ext & -ext
            ext ^= w
            vw = w.bit_length() - 1
            new_ext = (ext | adj[vw]) & ~(forbidden | current | w)
            yield from grow(current | w, count + 1, new_ext, forbidden)
            forbidden |= w

    for v in range(g.order):
        below = (1 << (v + 1)) - 1
        yield from grow(1 << v, 1, adj[v] & ~below, below)


def connected_sets_ordered(g: Graph, max_size: int) -> Iterator[VertexSet]:
    """Connected sets with ``1 <= |A| <= max_size``, by size and then by mask value."""
    for size in range(1, max_size + 1):
        yield from sorted(connected_sets(g, size))


def _neighborhood_search(g: Graph, max_side: int, accept: Callable[[VertexSet], bool]) -> Optional[tuple[VertexSet, VertexSet]]:
    full = g.vertices
    for side in connected_sets_ordered(g, max_side):
        nbhd = g.neighborhood(side)
        if full & ~(side | nbhd) and accept(nbhd):
            return side, nbhd
    return None


def half_bound(n: int) -> int:
    """Largest size strictly below ``n/2``."""
    return (n + 1) // 2 - 1


# --- connectivity ----------------------------------------------------------


def local_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) -> int:
    """Maximum number of internally disjoint ``s``-``t`` paths for non-adjacent ``s``, ``t``.

    Each vertex ``v`` is split into ``2v`` (in) and ``2v+1`` (out) joined by a
    unit-capacity arc; graph edges become uncapacitated out->in arcs.
    """
    if g.has_edge(s, t):
        raise ValueError("local connectivity is only defined for non-adjacent vertices")
    n = g.order
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    limit = big if cutoff is None else cutoff
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Exact kappa(G) via unit-capacity max flow.

    Uses a minimum-degree vertex ``v``: either some minimum cut misses ``v`` and
    separates it from a non-neighbor, or every minimum cut contains ``v`` and
    then separates two non-adjacent neighbors of ``v``.
    """
    n = g.order
    if n == 1:
        return 0
    if g.reach(1, g.vertices) != g.vertices:
        return 0
    if is_complete(g):
        return n - 1
    degs = g.degrees()
    v = min(range(n), key=lambda x: (degs[x], x))
    best = degs[v]
    for w in members(g.vertices & ~g.adj[v] & ~(1 << v)):
        best = min(best, local_connectivity(g, v, w, cutoff=best))
    nbrs = members(g.adj[v])
    for x, y in combinations(nbrs, 2):
        if not g.has_edge(x, y):
            best = min(best, local_connectivity(g, x, y, cutoff=best))
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest ``k`` such that some ``k``-subset is a cut; ``n-1`` if none is."""
    n = g.order
    if n == 1 or g.reach(1, g.vertices) != g.vertices:
        return 0
    for k in range(1, n - 1):
        for combo in combinations(range(n), k):
            if is_cut(g, to_mask(combo)):
                return k
    return n - 1


def minimum_cut(g: Graph, max_size: int) -> Optional[VertexSet]:
    """First cut of size at most ``max_size`` in size-then-mask order."""
    for k in range(1, max_size + 1):
        masks = sorted(to_mask(c) for c in combinations(range(g.order), k))
        for m in masks:
            if is_cut(g, m):
                return m
    return None


# --- constrained cuts ------------------------------------------------------


def _check_search_order(g: Graph) -> None:
    if g.order > MAX_SEARCH_ORDER:
        raise SearchLimitError(f"order {g.order} exceeds the search cap {MAX_SEARCH_ORDER}")


def find_forest_cut(g: Graph) -> Optional[CutWitness]:
    """Find a vertex cut inducing a forest, or return None if none exists.

    Some component of ``G - S`` has fewer than ``n/2`` vertices, so it suffices
    to scan connected sets ``A`` below that size and test whether ``N(A)``
    separates ``A`` from a nonempty remainder and induces a forest. Graphs with
    a cut of size at most two are answered by that cut directly.
    """
    _require_connected(g)
    _check_search_order(g)
    if g.order < 3 or is_complete(g):
        return None
    if vertex_connectivity(g) <= 2:
        cut = minimum_cut(g, 2)
        return CutWitness(cut, FOREST, _smallest_side(g, cut))
    hit = _neighborhood_search(g, half_bound(g.order), lambda s: induced_is_forest(g, s))
    if hit is None:
        return None
    return CutWitness(hit[1], FOREST, hit[0])


def find_independent_cut(g: Graph) -> Optional[CutWitness]:
    """Same neighborhood search as :func:`find_forest_cut`, requiring an independent cut."""
    _require_connected(g)
    _check_search_order(g)
    if g.order < 3 or is_complete(g):
        return None
    hit = _neighborhood_search(g, half_bound(g.order), lambda s: is_independent(g, s))
    if hit is None:
        return None
    return CutWitness(hit[1], INDEPENDENT, hit[0])


def _bruteforce(g: Graph, kind: str, accept: Callable[[VertexSet], bool], cap: int) -> Optional[CutWitness]:
    _require_connected(g)
    if g.order > cap:
        raise SearchLimitError(f"brute force refuses order {g.order} above cap {cap}")
    n = g.order
    for k in range(1, n - 1):
        for m in sorted(to_mask(c) for c in combinations(range(n), k)):
            if is_cut(g, m) and accept(m):
                return CutWitness(m, kind, _smallest_side(g, m))
    return None


def find_forest_cut_bruteforce(g: Graph, cap: int = BRUTE_FORCE_CAP) -> Optional[CutWitness]:
    return _bruteforce(g, FOREST, lambda s: induced_is_forest(g, s), cap)


def find_independent_cut_bruteforce(g: Graph, cap: int = BRUTE_FORCE_CAP) -> Optional[CutWitness]:
    return _bruteforce(g, INDEPENDENT, lambda s: is_independent(g, s), cap)
