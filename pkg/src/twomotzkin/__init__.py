"""Plane trees, 2-Motzkin paths, the weight-preserving correspondence
between them, and exact verification of the Catalan/Narayana identities
they carry."""

from .bijection import (STEP_FOR_CATEGORY, category_census, classify_edges,
                        path_to_tree, tree_to_path)
from .enumeration import (FAMILIES, count, dyck_paths, motzkin_paths,
                          multiple_dyck_paths, plane_trees, two_motzkin_paths)
from .identities import (IdentityReport, alternating_catalan_poly, catalan,
                         leaf_census, multiple_dyck_count, narayana,
                         narayana_poly, run_count_poly,
                         run_count_poly_enumerated, run_count_table,
                         verify_eq1, verify_eq2, verify_eq3, verify_eq7,
                         verify_theorem1, verify_theorem2)
from .poly import ONE, Poly, PolyParseError, X, ZERO, binomial, parse_poly
from .structures import (DyckPath, DyckStep, EdgeCategory, EmptyTree,
                         IllegalCharacter, MotzkinPath, MotzkinStep,
                         MultipleDyckPath, NegativePrefix, NotClosed,
                         ParseError, PlaneTree, TwoMotzkinPath,
                         TwoMotzkinStep, UnbalancedParentheses, parse_path,
                         parse_tree)
from .weights import (EdgeWeighting, MotzkinWeighting, ProductMismatch,
                      StepWeighting, merge_levels, motzkin_path_weight,
                      path_weight, rebalance_up_down, step_weights_from_edges,
                      theorem1_edge_weights, theorem1_step_weights,
                      theorem2_edge_weights, theorem2_step_weights,
                      total_motzkin_weight, total_motzkin_weight_enumerated,
                      total_path_weight, total_path_weight_enumerated,
                      total_tree_weight, tree_weight)

__version__ = "0.1.0"
