from itertools import combinations, permutations

import pytest

from forestcut.generators import enumerate_connected
from forestcut.graph import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    eg = set(g.edges())
    for p in permutations(range(g.order)):
        if all(tuple(sorted((p[u], p[v]))) in eg for u, v in h.edges()):
            return True
    return False


def brute_connected(g: Graph, verts) -> bool:
    """Plain DFS over python sets, independent of the bitset kernels."""
    verts = set(verts)
    if not verts:
        return True
    start = min(verts)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in verts:
            if u not in seen and g.has_edge(u, v):
                seen.add(u)
                stack.append(u)
    return seen == verts


def all_labeled_connected(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[k] for k in range(len(pairs)) if bits >> k & 1))
        if brute_connected(g, range(n)):
            yield g


@pytest.fixture(scope="session")
def corpus():
    return {n: list(enumerate_connected(n)) for n in range(1, 8)}
