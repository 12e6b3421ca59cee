"""Finite-dimensional workbench for Hopf structures on matrix algebras.

Everything is a dense complex matrix: finite groups supply the two canonical
models (group algebra and function algebra), comultiplications and coactions
are linear maps between concrete *-subalgebras of M_n, and the structural
identities (coassociativity, corepresentation and covariance laws, pentagon,
crossed-product universality, duality) are verified numerically as residuals.
"""

from .algebra import (
    LinearMap, StarAlgebra, StarHomReport, Wedderburn, check_star_hom,
    generated_algebra, tensor_algebra, wedderburn_blocks,
)
from .convolution import (
    ConvFunctional, functional_basis, functional_norm, group_function_functional,
    in_degeneracy_ideal, ideal_dimensions, involution, is_coinvolutive,
    is_nondegenerate_hopf, module_action, point_functional, slice_corep,
    star_product,
)
from .corep import (
    Coaction, CoactionReport, CorepReport, Corepresentation, CovariantPair,
    CovariantReport, action_to_coaction, coaction_report, comult_as_coaction,
    corep_direct_sum, corep_from_function_rep, corep_from_group_rep, induce,
    sample_corepresentations, trivial_coaction, unitarily_equivalent,
    verify_corepresentation, verify_covariant,
)
from .crossed import (
    BidualityReport, CrossedProduct, CrossedReport, DualHopf, IntegratedForm,
    IsoReport, biduality_check, canonical_dual_model_iso, crossed_product_hopf,
    crossed_report, dual_hopf, dual_pair_probe, full_crossed_product,
    integrated_form, sample_covariant_pairs, transport_corep,
    uniqueness_isomorphism, verify_hopf_isomorphism,
)
from .errors import (
    CoinvolutionError, DecompositionError, ShapeError, StructureError,
    UniversalityError, ValidationError,
)
from .groups import (
    Cocycle, FiniteGroup, cyclic, dihedral, direct_product, from_table,
    inversion_unitary, parse_cocycle_file, parse_group_file, pauli_cocycle,
    quaternion8, regular_rep, right_regular_rep, symmetric3, trivial_cocycle,
    twisted_regular_rep,
)
from .hopf import (
    HopfAlgebra, HopfReport, hopf_report, verify_coassociativity,
    verify_simplifiable,
)
from .models import (
    diagonal_algebra, flipped_group_hopf, function_algebra_hopf, group_algebra,
    group_algebra_hopf, translation_action, trivial_hopf, twisted_delta_defect,
    v_matrix, w_matrix,
)
from .multunitary import (
    MultiplicativeUnitary, from_covariant_pair, kac_takesaki, leg_algebras,
    pentagon_check, random_pentagon_search,
)
from .registry import SUITES, get_group, group_names
from .tensor import (
    DEFAULT_TOL, Functional, apply_leg_map, dagger, eye, flip_sigma, frob,
    kron, leg_embed, matrix_unit_functionals, multi_kron, op_norm,
    orthonormalize, permute_factors, slice_left, slice_right, span_equal,
    trace_norm,
)

__version__ = "0.1.0"
