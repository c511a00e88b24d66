"""Generalized theta graphs: triangle-count growth classification, exact
disjoint-copy clique maxima, the explicit extremal constructions behind them,
and desk-scale brute-force oracles."""

__version__ = "0.1.0"

from .errors import Graph6Error, LimitError, SearchAbort
from .graphs import (Graph, book, build_standard, canonical_key, complete,
                     complete_bipartite, count_cliques, cycle_graph,
                     disjoint_copies, empty_graph, enumerate_cliques,
                     enumerate_triangles, graph6_decode, graph6_encode,
                     has_treewidth_at_most_2, induced_subgraph, is_bipartite,
                     join, pad, path_graph, random_k_tree, relabel, turan)
from .theta import (MagnitudeClass, ThetaSpec, build_theta, classify,
                    contains_theta1223, is_edge_critical,
                    theta_triangle_count, turan_formula)
from .subgraph import (ColoredWitness, EdgeColoring, Embedding,
                       contains_k_disjoint, edge_book_degree, find_embedding,
                       max_book, rainbow_or_matching, read_edge_coloring)
from .assignment import (CliqueAssignment, load_profile, minimize_psi,
                         verify_local_optimality)
from .construct import (APFreeSet, TriangleSystem, apex_turan, behrend_set,
                        is_ap_free, matched_bipartite, ruzsa_szemeredi,
                        verify_linear_triangle_system)
from .search import (ExtremalResult, ForbiddenSpec, edge_maximal_lower_bound,
                     extremal_oracle, phi_oracle, theorem2_report)
from .stability import (Bipartition, PeelResult, degree_peel,
                        min_internal_bipartition, stability_extract)
