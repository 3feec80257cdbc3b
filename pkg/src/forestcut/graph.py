"""Immutable simple graphs over dense vertex labels, with bitset adjacency.

A vertex set is an ``int`` bitmask: bit ``v`` is set iff vertex ``v`` is a
member. Every public function that takes a vertex set also accepts any
iterable of vertex labels; results are always returned as masks. Use
:func:`members` to turn a mask back into a sorted tuple.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from itertools import combinations
from typing import Optional, Union

VertexSet = int
SetLike = Union[int, Iterable[int]]
DegreeHistogram = Counter

# Hard cap for the subset-search kernels (cuts, cyclicity, brute force).
MAX_SEARCH_ORDER = 64


class GraphInputError(ValueError):
    """Base class for rejected graph input."""


class VertexRangeError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class LoopError(GraphInputError):
    pass


def to_mask(s: SetLike) -> VertexSet:
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``. Instances are immutable and
    hashable, so they can be shared freely between threads and processes.
    """

    __slots__ = ("order", "adj", "size", "_full")

    def __init__(self, order: int, adj: Iterable[int]):
        adj = tuple(adj)
        if order < 1:
            raise GraphInputError(f"order must be at least 1, got {order}")
        if len(adj) != order:
            raise GraphInputError("adjacency length does not match order")
        full = (1 << order) - 1
        total = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise VertexRangeError(f"vertex {v} has a neighbor outside 0..{order - 1}")
            if row >> v & 1:
                raise LoopError(f"loop at vertex {v}")
            for u in members(row):
                if not adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {u}")
            total += row.bit_count()
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "size", total // 2)
        object.__setattr__(self, "_full", full)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.order, self.adj))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting out-of-range endpoints, loops and repeated edges."""
        if order < 1:
            raise GraphInputError(f"order must be at least 1, got {order}")
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    @property
    def vertices(self) -> VertexSet:
        return self._full

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighborhood(self, s: VertexSet) -> VertexSet:
        """Open neighborhood of a mask (no conversion, for inner loops)."""
        out = 0
        rest = s
        while rest:
            low = rest & -rest
            out |= self.adj[low.bit_length() - 1]
            rest ^= low
        return out & ~s

    def reach(self, seed: VertexSet, within: VertexSet) -> VertexSet:
        """Vertices of ``within`` reachable from ``seed`` inside ``within``."""
        adj = self.adj
        seen = seed & within
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components_of(self, within: VertexSet) -> list[VertexSet]:
        comps = []
        rest = within
        while rest:
            comp = self.reach(rest & -rest, within)
            comps.append(comp)
            rest &= ~comp
        return comps

    def induced_size(self, s: VertexSet) -> int:
        total = 0
        rest = s
        while rest:
            low = rest & -rest
            total += (self.adj[low.bit_length() - 1] & s).bit_count()
            rest ^= low
        return total // 2

    def __eq__(self, other):
        return isinstance(other, Graph) and self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


def build(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(order, edges)


def open_neighborhood(g: Graph, s: SetLike) -> VertexSet:
    """``N(S)``: vertices outside ``S`` adjacent to some member of ``S``."""
    return g.neighborhood(to_mask(s))


def is_dominating(g: Graph, s: SetLike) -> bool:
    s = to_mask(s)
    return (s | g.neighborhood(s)) == g.vertices


def components(g: Graph, within: Optional[SetLike] = None) -> list[VertexSet]:
    """Connected components (as masks) of ``g``, or of the subgraph induced by ``within``."""
    return g.components_of(g.vertices if within is None else to_mask(within))


def is_connected(g: Graph) -> bool:
    return g.reach(1, g.vertices) == g.vertices


def induced_is_forest(g: Graph, s: SetLike) -> bool:
    """Whether ``G[S]`` is acyclic: a forest has exactly ``|S| - c`` edges for ``c`` components."""
    s = to_mask(s)
    if not s:
        return True
    edges = g.induced_size(s)
    if edges < 3:
        return True
    return edges == s.bit_count() - len(g.components_of(s))


def is_independent(g: Graph, s: SetLike) -> bool:
    s = to_mask(s)
    rest = s
    while rest:
        low = rest & -rest
        if g.adj[low.bit_length() - 1] & s:
            return False
        rest ^= low
    return True


def degree_histogram(g: Graph) -> DegreeHistogram:
    return Counter(g.degrees())


def universal_vertices(g: Graph) -> VertexSet:
    return to_mask(v for v in range(g.order) if g.degree(v) == g.order - 1)


def is_complete(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def is_k_triangle(g: Graph) -> Optional[int]:
    """Return ``s`` if ``g`` is a triangle plus ``s`` vertices joined to all of it, else None.

    Structural test: exactly three universal vertices and every other vertex has
    degree 3 (hence is adjacent to exactly the three hubs). ``K4`` counts as
    ``s = 1`` with any of its vertices playing the extra role.
    """
    n = g.order
    if n < 4:
        return None
    hubs = universal_vertices(g)
    if n == 4:
        return 1 if hubs.bit_count() == 4 else None
    if hubs.bit_count() != 3:
        return None
    for v in members(g.vertices & ~hubs):
        if g.adj[v] != hubs:
            return None
    return n - 3


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.order, ((perm[u], perm[v]) for u, v in g.edges()))


def induced_subgraph(g: Graph, s: SetLike) -> Graph:
    verts = members(to_mask(s))
    index = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(
        len(verts), ((index[u], index[v]) for u, v in combinations(verts, 2) if g.has_edge(u, v))
    )
