"""Exact computation of (inner) derivations of Zinbiel algebras."""
from .algebra import (
    AlgebraSpec,
    annihilator_left,
    annihilator_right,
    check_jacobi,
    check_zinbiel,
    commutator,
    is_two_sided_ideal,
    is_zinbiel,
    left_mult,
    product,
    right_mult,
)
from .catalog import expected_inner_dimension, instantiate, list_entries
from .derivations import (
    LinearForm,
    SymbolicAdMatrix,
    ad_generators,
    ad_linearity_check,
    ad_matrix,
    check_inner_ideal,
    check_lie_derivation,
    check_mult_operator_identity,
    derivation_space,
    inner_derivation_space,
    is_derivation,
    symbolic_ad,
)
from .fileformat import emit_algebra, load_algebra, parse_algebra
from .linalg import Subspace, nullspace, rref, span

__version__ = "0.1.0"
