"""Exact computations with multiplicative Hom-Lie algebras over the rationals."""

__version__ = "0.1.0"

from .errors import (
    CapExceeded, ConstructionError, DimensionMismatch, HomLieError, ParseError, PreconditionError,
)
from .exactla import Matrix, QuotientSpace, Subspace
from .algebra import (
    HomLieAlgebra, Homomorphism, verify_axioms, centre, derived, is_perfect, quotient_algebra,
    alpha_identity_check, direct_sum, yau_twist,
)
from .actions import HomAction, CrossedModule, verify_action, verify_compatible, verify_crossed
from .tensor import (
    tensor_product, tensor_square, exterior_product, exterior_square, theta, uce_of_perfect,
    exterior_sequence_check,
)
