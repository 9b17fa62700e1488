"""Exact matrix formats of Lie superalgebras."""
from .algebras import (AlgebraId, CartanData, ChevalleyBasis, VerificationReport,
                       cartan_from_basis, cartan_matrix, chevalley_basis,
                       chevalley_involution, inverse_cartan, is_member,
                       rescale_basis, supermetric, verify_chevalley)
from .embeddings import (bosonic_pair, highest_weights_closed, highest_weights_solve,
                         principal_closed, principal_osp12)
from .exactmat import Matrix, Rational, adiag_build, diag_band, matrix_product, power, unit_entry
from .formats import (FormatChanger, FormatError, Permutation, alternating_perm,
                      change_format, osp_L, perm_matrix, preserves_format)
from .graded import (Format, GradedMatrix, graded_commutator, homogeneous_parts, parity,
                     supertrace, supertranspose, supertranspose_dual)
from .infinite import WindowedMatrix, inf_chevalley, osp_inf_element
from .rootspace import SimpleRoot, WeightSymbol, odd_simple_root_count, simple_root_system

__version__ = "0.1.0"
