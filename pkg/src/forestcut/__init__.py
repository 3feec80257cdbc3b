"""Exact search for forest cuts and independent cuts, k-cyclic graph checks,
extremal family generators, and a scanner for edge-count bounds."""

from .cuts import (
    CutWitness,
    find_forest_cut,
    find_forest_cut_bruteforce,
    find_independent_cut,
    find_independent_cut_bruteforce,
    is_cut,
    validate_witness,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from .cyclic import CyclicWitness, cyclic_witness, forest_cut_exists_via_cyclic, is_k_cyclic
from .graph import (
    Graph,
    build,
    components,
    degree_histogram,
    induced_is_forest,
    is_connected,
    is_dominating,
    is_k_triangle,
    members,
    open_neighborhood,
    to_mask,
)
from .io import parse_edge_list, parse_graph6, stream_catalog, write_edge_list, write_graph6
from .verify import bound_value, check_bound, check_lemma_2deg5, check_lemma_deg3, degree_class_edges, scan

__version__ = "0.1.0"
