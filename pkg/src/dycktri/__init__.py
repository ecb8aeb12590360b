"""Exact combinatorics of triangulations of products of two simplices.

Vertices of ``Delta_{m-1} x Delta_{n-1}`` are edges ``(i, j)`` of the
complete bipartite graph ``K_{m,n}`` (1-based); maximal simplices of a
triangulation are spanning trees.
"""

from .core import (Circuit, Simplex, Triangulation, VerificationReport, Vertex,
                   alternating_circuit, cyclic_shift, expected_simplex_count, intersect_properly,
                   is_forest, is_spanning_tree, restrict_to_face, verify_triangulation)
from .constructors import (CATALOGUE, bistellar_flip, dyck, dyck_circuit, dyck_flip, dyck_paths,
                           extended_dyck, extended_dyck_paths, extended_rational_dyck,
                           rational_dyck, rational_dyck_by_restriction, rational_shift, staircase)
from .ensembles import (AxiomReport, MatchingEnsemble, all_supports, check_axioms, dyck_ensemble,
                        dyck_matching, ensemble_from_triangulation, extended_dyck_ensemble,
                        extended_dyck_matching, perfect_matchings, restrict_ensemble, support_of,
                        triangulation_from_ensemble)
from .extension import (CompatibilityReport, NonExtendabilityWitness, SkeletonTriangulation,
                        check_skeleton_compatibility, extend_skeleton, flipped_extended_boundary,
                        mother_of_all_examples, restrict_to_skeleton)
from .regularity import (HeightCheck, HeightFunction, dyck_heights, extended_dyck_heights,
                         find_heights, matching_weight_less, minimum_matching_ensemble,
                         random_regular_triangulation, verify_heights)
from .cayley import MixedCell, cayley_cells, check_tiling, render_mixed_svg
from .render import render_grid_ascii, render_grid_svg
from .errors import (AxiomError, DomainError, DyckTriError, FlipNotSupportedError,
                     IncompatibleSkeletonError, IndexOutOfRangeError, NotATriangulationError,
                     SchemaError)

__version__ = "0.1.0"
