"""Homology invariants of the groupoid of a shift of finite type:
H0 = Coker(id - M^t) (the Bowen-Franks group), H1 = Ker(id - M^t), the
determinant invariant, the classification decision, and canonical-form
matrices realizing a prescribed (H0, det) pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intlinalg as il
from .clopen import ClopenSet
from .dimension import class_in_K
from .errors import EmptyInput, TorsionTooLarge
from .graphs import Graph
from .intlinalg import FgAbelianGroup, GroupElement


@dataclass(frozen=True)
class Homology:
    h0: FgAbelianGroup
    h1_basis: tuple[tuple[int, ...], ...]
    det: int

    @property
    def bowen_franks(self) -> FgAbelianGroup:
        return self.h0

    @property
    def h1_rank(self) -> int:
        return len(self.h1_basis)


def displacement_matrix(graph: Graph) -> list[list[int]]:
    """id - M^t, the presentation matrix of the Bowen-Franks group."""
    mt = il.transpose(graph.matrix())
    n = len(mt)
    return [[(1 if i == j else 0) - mt[i][j] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def homology(graph: Graph) -> Homology:
    a = displacement_matrix(graph)
    return Homology(il.cokernel(a), tuple(il.kernel_basis(a)), il.determinant(a))


def class_in_G(a: ClopenSet) -> GroupElement:
    """Class of a clopen set in H0; level shifts land in Im(id - M^t), so any
    level's vector projects to the same element."""
    h = homology(a.graph)
    return h.h0.project(list(class_in_K(a).vec))


def abelianization_group(graph: Graph) -> FgAbelianGroup:
    """(H0 (x) Z_2) + H1 as an abstract group."""
    h = homology(graph)
    return il.direct_sum(il.tensor_with_z2(h.h0), FgAbelianGroup((), h.h1_rank))


def classify(g1: Graph, y1: ClopenSet, g2: Graph, y2: ClopenSet,
             orbit_bound: int = il.DEFAULT_ORBIT_BOUND) -> str:
    """Sufficient-condition test for isomorphism of the reduced groupoids.

    Returns "SufficientConditionHolds" when H0 invariants agree, some
    automorphism carries [1_Y1] to [1_Y2], and the determinants match;
    "InvariantsDiffer" when the (H0, unit-class-orbit, H1-rank) data
    disagree; "Undecided" when only the determinant sign separates them.
    """
    if y1.is_empty() or y2.is_empty():
        raise EmptyInput("classification needs nonempty clopen sets")
    h1, h2 = homology(g1), homology(g2)
    if not h1.h0.same_invariants(h2.h0) or h1.h1_rank != h2.h1_rank:
        return "InvariantsDiffer"
    c1, c2 = class_in_G(y1), class_in_G(y2)
    # compare within one abstract copy of the group
    moved = h2.h0.element(c1.torsion, c1.free)
    if not il.orbit_equivalent(h2.h0, moved, c2, bound=orbit_bound):
        return "InvariantsDiffer"
    if h1.det != h2.det:
        return "Undecided"
    return "SufficientConditionHolds"


def canonical_form_matrix(graph: Graph) -> list[list[int]]:
    """A matrix N with all off-diagonal entries 1, diagonal entries >= 2 and
    at least one equal to 2, whose shift has the same Bowen-Franks group and
    determinant invariant as the input graph.

    Diagonal entries are d_i + 2 over the invariant-factor list (0 for each
    free generator) plus one extra 2; a factor 1 (diagonal 3) is appended when
    the sign of det(id - N^t) = (-1)^n * prod(d_i) must be flipped.
    """
    h = homology(graph)
    factors = sorted(h.h0.torsion, reverse=True)
    product = 1
    for d in h.h0.torsion:
        product *= d
    if h.h0.free_rank:
        product = 0
    diag = [d + 2 for d in factors]
    size = len(factors) + h.h0.free_rank + 1
    if product != 0 and (-1) ** size * product != h.det:
        diag.append(3)  # extra invariant factor 1 to flip the sign
        size += 1
    diag += [2] * h.h0.free_rank  # free generators contribute factor 0
    diag.append(2)
    n = [[1] * size for _ in range(size)]
    for i, d in enumerate(diag):
        n[i][i] = d
    return n


__all__ = [
    "Homology",
    "homology",
    "displacement_matrix",
    "class_in_G",
    "abelianization_group",
    "classify",
    "canonical_form_matrix",
    "TorsionTooLarge",
]
