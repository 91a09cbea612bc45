"""Exact tensor unfoldings, Smith normal forms and matrix equivalence classes over the integers."""

from .classes import (
    ClassFingerprint,
    direct_sum,
    enumerate_local_classes,
    fingerprint,
    fingerprint_p,
    kronecker_product,
)
from .combinatorics import (
    class_count_formula,
    comb_with_repetition,
    partition_asymptotic,
    partition_number,
    permutation_class_counts,
)
from .errors import TenfoldError
from .permutation import PermutationMatrix, conjugate, permutation_between
from .ring import Prime, bezout_gcd, in_localization, ord_p
from .smith import (
    LocalSmithForm,
    SmithDecomposition,
    equivalent,
    equivalent_local,
    local_global_reconstruct,
    local_smith_form,
    prime_support,
    smith_normal_form,
)
from .spectral import CharPoly, char_poly, eigen_residual, poly_roots, verify_spectrum_relations
from .tensor import (
    Shape,
    Tensor,
    UnfoldingIndexMap,
    canonical_index,
    canonical_map,
    index_map_from_table,
    refold,
    unfold,
)

__version__ = "0.1.0"
