"""Exact arithmetic for topological full groups of one-sided irreducible
shifts of finite type: prefix-substitution tables with group operations,
homology invariants (Bowen-Franks group, kernel of id - M^t), the index map,
and constructive witnesses (equivalences, transpositions, generating sets,
free-product pairs, zipper defects).
"""

from .clopen import ClopenSet, is_partition_of, refine_to_level
from .constructions import (
    doubling,
    embed_into,
    free_product_witness,
    gamma_transposition,
    generating_set,
    hopf_witness,
    realize_index_element,
    split_cylinder,
    transposition,
    zipper_defect,
)
from .dimension import DimGroupElement, class_in_K
from .elements import (
    FullGroupElement,
    Point,
    PrefixBijection,
    identity_element,
    index,
    index_kernel_vector,
    point_in_cylinder,
)
from .graphs import Graph, Word, graph_from_matrix, period_and_primitivity, validate_graph
from .homology import (
    Homology,
    abelianization_group,
    canonical_form_matrix,
    class_in_G,
    classify,
    homology,
)
from .intlinalg import (
    FgAbelianGroup,
    GroupElement,
    cokernel,
    determinant,
    integer_solve,
    kernel_basis,
    matrix_power,
    orbit_equivalent,
    row_hermite_form,
    smith_normal_form,
    stable_kernel_index,
    tensor_with_z2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
