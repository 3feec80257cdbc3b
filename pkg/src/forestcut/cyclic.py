"""k-cyclic graphs: every small vertex set dominates or sees a cycle in its neighborhood."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cuts import _check_search_order, _require_connected, connected_sets_ordered, half_bound
from .graph import Graph, VertexSet, induced_is_forest, members


@dataclass(frozen=True)
class CyclicWitness:
    """A nonempty set of at most ``k`` vertices that is not dominating and whose
    open neighborhood induces a forest."""

    violating_set: VertexSet
    neighborhood: VertexSet

    @property
    def vertices(self) -> tuple[int, ...]:
        return members(self.violating_set)


def validate_cyclic_witness(g: Graph, w: CyclicWitness, k: int) -> list[str]:
    problems = []
    s = w.violating_set
    if not s or s.bit_count() > k:
        problems.append(f"set size {s.bit_count()} not in 1..{k}")
    nbhd = g.neighborhood(s)
    if nbhd != w.neighborhood:
        problems.append("recorded neighborhood is wrong")
    if (s | nbhd) == g.vertices:
        problems.append("set is dominating")
    if not induced_is_forest(g, nbhd):
        problems.append("neighborhood contains a cycle")
    return problems


def cyclic_witness(g: Graph, k: int) -> Optional[CyclicWitness]:
    """First violating set of size at most ``k``, by size and then mask value.

    Only connected sets are enumerated. A component ``C`` of a violating set
    ``A`` is itself violating (``N(C)`` lies inside ``N(A)`` and ``C`` dominates
    less than ``A``), so a smallest violating set is connected and the
    size-then-mask first witness is the same as over all sets.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    _require_connected(g)
    _check_search_order(g)
    full = g.vertices
    for s in connected_sets_ordered(g, min(k, g.order)):
        nbhd = g.neighborhood(s)
        if full & ~(s | nbhd) and induced_is_forest(g, nbhd):
            return CyclicWitness(s, nbhd)
    return None


def is_k_cyclic(g: Graph, k: int) -> bool:
    return cyclic_witness(g, k) is None


def cyclicity(g: Graph, max_k: int) -> int:
    """Largest ``k <= max_k`` for which ``g`` is k-cyclic (0 if not even 1-cyclic)."""
    level = 0
    for k in range(1, max_k + 1):
        if not is_k_cyclic(g, k):
            break
        level = k
    return level


def forest_cut_exists_via_cyclic(g: Graph) -> bool:
    """A forest cut exists iff ``g`` fails to be k-cyclic for ``k`` just below ``n/2``."""
    _require_connected(g)
    k = half_bound(g.order)
    if k < 1:
        return False
    return not is_k_cyclic(g, k)
