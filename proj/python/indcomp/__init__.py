"""Independence complexes of graphs: star clusters, exact integral homology,
graph constructions with homology shift guarantees, and verification suites.
"""

from indcomp._core import (
    Graph,
    SimplicialComplex,
    alexander_dual,
    barycentric_subdivision,
    build_family,
    clique_complex,
    complement,
    cone,
    contractibility_criterion,
    crossing_resolution,
    csorba_full_subdivision,
    degree3_reduction,
    dowker_pair,
    family_names,
    graph_suspension,
    greedy_collapse,
    homological_connectivity,
    incomparability_graph,
    independence_complex,
    is_clique,
    jonsson_graph,
    one_skeleton,
    reduced_homology,
    run_suite,
    simplicial_suspension,
    star,
    star_cluster,
    subdivide_edge_four,
    suite_names,
)

__all__ = [
    "Graph",
    "SimplicialComplex",
    "alexander_dual",
    "barycentric_subdivision",
    "build_family",
    "clique_complex",
    "complement",
    "cone",
    "contractibility_criterion",
    "crossing_resolution",
    "csorba_full_subdivision",
    "degree3_reduction",
    "dowker_pair",
    "family_names",
    "graph_suspension",
    "greedy_collapse",
    "homological_connectivity",
    "incomparability_graph",
    "independence_complex",
    "is_clique",
    "jonsson_graph",
    "one_skeleton",
    "reduced_homology",
    "run_suite",
    "simplicial_suspension",
    "star",
    "star_cluster",
    "subdivide_edge_four",
    "suite_names",
]
