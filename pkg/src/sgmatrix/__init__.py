"""Adjacency, incidence and Kirchhoff matrices of signed graphs, with exhaustive checkers."""
from .balance import (BalanceCertificate, balanced_component_count, is_antibalanced, is_balanced,
                      switched_to_positive, switching_equivalent, switching_isomorphic, walk_sign)
from .core import (SIMPLE, SIMPLY_SIGNED, Edge, Graph, Orientation, SignedGraph, SignedGraphError,
                   SizeGuardError, SwitchingFunction, negate, reorient_edge, switch_fn,
                   switch_orientation, switch_set)
from .graphio import GraphFileError, read_graph, read_graph_file, write_graph, write_matrix
from .linegraph import (OrientedLineGraph, RootVectorSet, check_eigenvalue_two_subgraph,
                        check_line_eigenvalues, dn_representation, generalized_line_graph,
                        line_adjacency_identity, line_graph, negative_with_digons, reduce,
                        reduced_line_graph, validate_circle_signs)
from .matrix import (adjacency, ar_matrix, ar_power, ar_walk_exists, complete_signed, degrees,
                     incidence, is_regular, kirchhoff, seidel, unsigned_adjacency)
from .report import Report
from .spectra import (Spectrum, acharya_balance, adjacency_spectrum, check_interlacing_adj,
                      check_kirchhoff_bounds, check_kirchhoff_edge_interlacing,
                      check_regular_bound, det_exact, eig_sym, jacobi_eigenvalues,
                      kirchhoff_spectrum, rank_gf2, rank_rational)
from .vsr import VsrParameters, check_srg_equivalence, check_vsr, vsr_combinatorial_check

__version__ = "0.1.0"
