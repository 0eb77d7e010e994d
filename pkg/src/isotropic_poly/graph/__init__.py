"""Finite simple graphs and independent sets."""

from .graph import (
    Graph,
    graph_make,
    independent_sets,
    independence_counts,
    independence_number,
    independence_polynomial,
    induced_subgraph,
    connected_components,
    component_masks,
    disjoint_union,
    relabel,
    complete_graph,
    path_graph,
    cycle_graph,
    empty_graph,
    star_graph,
    to_networkx,
    from_networkx,
    mask_of,
    vertices_of,
    popcount,
)

__all__ = [
    "Graph",
    "graph_make",
    "independent_sets",
    "independence_counts",
    "independence_number",
    "independence_polynomial",
    "induced_subgraph",
    "connected_components",
    "component_masks",
    "disjoint_union",
    "relabel",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "empty_graph",
    "star_graph",
    "to_networkx",
    "from_networkx",
    "mask_of",
    "vertices_of",
    "popcount",
]
