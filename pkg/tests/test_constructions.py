import random

import pytest

from sftgroups.catalog import free_group_boundary, full_shift
from sftgroups.clopen import ClopenSet
from sftgroups.constructions import (
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
from sftgroups.elements import (
    FullGroupElement,
    PrefixBijection,
    identity_element,
    index,
    index_kernel_vector,
)
from sftgroups.errors import (
    AmbientNotX,
    ClassesDiffer,
    EmptyInput,
    NotDisjoint,
    NotKernelVector,
    NotPrimitive,
    StepBudgetExceeded,
)
from sftgroups.graphs import Graph, Word, graph_from_matrix
from sftgroups.homology import class_in_G

from helpers import TEST_GRAPHS, random_element, random_valid_graph, random_word

FULL2 = graph_from_matrix([[2]], ["v"])
E0, E1 = "vv0", "vv1"
X2 = ClopenSet.whole_space(FULL2)
GOLDEN = TEST_GRAPHS["golden"]()


def w(*edges):
    return Word("v", tuple(edges))


def clop(g, *words):
    return ClopenSet.from_words(g, words)


# --- embeddings ---------------------------------------------------------------


def test_embed_whole_space_into_cylinder():
    table = embed_into(X2, clop(FULL2, w(E0)))
    assert table.pieces == ((w(E0), w()),)


def test_embed_contract_random():
    rng = random.Random(71)
    for _ in range(30):
        g = random_valid_graph(rng, max_size=4)
        whole = ClopenSet.whole_space(g)
        a = clop(g, random_word(rng, g, rng.randint(0, 2)))
        b = clop(g, random_word(rng, g, rng.randint(0, 2)))
        table = embed_into(a, b)
        assert table.source() == a
        assert table.range_set().is_subset(b)


def test_embed_proper_self_embedding():
    a = clop(FULL2, w(E0))
    table = embed_into(a, a)
    assert table.source() == a
    assert table.range_set().is_subset(a)
    assert table.range_set() != a  # strictly inside


def test_split_cylinder_golden():
    words = split_cylinder(GOLDEN, Word("a", ("e",)), 2)
    assert [x.render() for x in words] == ["a|e.e", "a|e.f"]


def test_doubling_contract():
    rng = random.Random(72)
    for _ in range(20):
        g = random_valid_graph(rng, max_size=4)
        a = clop(g, random_word(rng, g, rng.randint(0, 2)))
        u, v = doubling(a)
        assert u.source() == a and v.source() == a
        assert u.range_set().is_subset(a) and v.range_set().is_subset(a)
        assert u.range_set().is_disjoint(v.range_set())


def test_empty_inputs_rejected():
    with pytest.raises(EmptyInput):
        embed_into(ClopenSet.empty(FULL2), X2)
    with pytest.raises(EmptyInput):
        hopf_witness(X2, ClopenSet.empty(FULL2))


# --- Hopf witness -------------------------------------------------------------


def test_hopf_cylinder_to_whole_space():
    table = hopf_witness(clop(FULL2, w(E0)), X2)
    assert table.pieces == ((w(), w(E0)),)


def test_hopf_identity_case():
    a = clop(FULL2, w(E0))
    table = hopf_witness(a, a)
    assert table.source() == a and table.range_set() == a


def test_hopf_classes_differ():
    full3 = full_shift(3, 1)
    words = full3.enumerate_words(1)
    a = clop(full3, words[0])
    b = clop(full3, words[1], words[2])
    with pytest.raises(ClassesDiffer):
        hopf_witness(a, b)


def test_hopf_mismatched_terminals_golden():
    # C_f ends at b, C_e at a: forces the refinement branch
    a = clop(GOLDEN, Word("a", ("f",)))
    b = clop(GOLDEN, Word("a", ("e",)))
    table = hopf_witness(a, b)
    assert table.source() == a and table.range_set() == b


def test_transposition_examples():
    cee = clop(GOLDEN, Word("a", ("e", "e")))
    cef = clop(GOLDEN, Word("a", ("e", "f")))
    whole = ClopenSet.whole_space(GOLDEN)
    tau = transposition(cee, cef, whole)
    assert tau.compose(tau).is_identity()
    assert tau.support() == cee.union(cef)
    assert not any(index(tau))


def test_transposition_errors():
    full3 = full_shift(3, 1)
    words = full3.enumerate_words(1)
    a, b = clop(full3, words[0]), clop(full3, words[1], words[2])
    with pytest.raises(ClassesDiffer):
        transposition(a, b, ClopenSet.whole_space(full3))
    with pytest.raises(NotDisjoint):
        transposition(a, a, ClopenSet.whole_space(full3))


def test_gamma_example():
    tau = gamma_transposition(FULL2, w(E1), w(E0), X2)
    assert tau.table.pieces == ((w(E1), w(E0)), (w(E0), w(E1)))


# --- generating set -----------------------------------------------------------


def test_generating_set_full2_count():
    elements = generating_set(X2)
    assert len(elements) == 295


def test_generating_set_properties():
    elements = generating_set(X2)
    rng = random.Random(73)
    for el in rng.sample(elements, 25):
        assert el.compose(el).is_identity()
        assert not any(index(el))
        assert len(el.support().words) == 2


def test_generating_set_not_primitive():
    per2 = graph_from_matrix([[0, 2], [1, 0]])
    with pytest.raises(NotPrimitive):
        generating_set(ClopenSet.whole_space(per2))


def test_generating_set_fallback_branch():
    y = clop(FULL2, w(E0, E0))
    elements = generating_set(y, step_budget=10**7)
    assert elements
    rng = random.Random(74)
    for el in rng.sample(elements, 10):
        assert el.ambient == y
        assert el.compose(el).is_identity()
        assert not any(index(el))


def test_generating_set_budget():
    with pytest.raises(StepBudgetExceeded):
        generating_set(X2, step_budget=5)


# --- index realization ----------------------------------------------------------


def test_realize_zero_is_identity():
    g = TEST_GRAPHS["rank1"]()
    assert realize_index_element(g, [0, 0]).is_identity()


def test_realize_rejects_non_kernel():
    with pytest.raises(NotKernelVector):
        realize_index_element(TEST_GRAPHS["rank1"](), [1, 0])
    with pytest.raises(NotKernelVector):
        realize_index_element(GOLDEN, [1, 0])


def test_realize_exact_index_rank1():
    g = TEST_GRAPHS["rank1"]()
    el = realize_index_element(g, [1, -1])
    assert index_kernel_vector(el) == (1, -1)
    assert index(el) == (1,)


def test_realize_contracts():
    g = TEST_GRAPHS["rank1"]()
    el = realize_index_element(g, [2, -2])
    assert el.ambient == ClopenSet.whole_space(g)
    assert index_kernel_vector(el) == (2, -2)


# --- free product ----------------------------------------------------------------


def test_free_product_full2_tables():
    alpha, beta = free_product_witness(FULL2)
    assert alpha.table.pieces == ((w(E1), w(E0)), (w(E0), w(E1)))
    assert set(beta.table.pieces) == {
        (w(E1), w(E0, E0)), (w(E0, E1), w(E1)), (w(E0, E0), w(E0, E1))}


def test_free_product_orders_and_pingpong():
    rng = random.Random(75)
    for g in [FULL2, GOLDEN, TEST_GRAPHS["rank1"]()]:
        alpha, beta = free_product_witness(g)
        assert alpha.order_up_to(2) == 2
        assert beta.order_up_to(3) == 3
        u, v = doubling(ClopenSet.whole_space(g))
        a_set, b_set = u.range_set(), v.range_set()
        # alpha(A) = B; beta(B) and beta^2(B) land inside A
        assert alpha.table.compose(PrefixBijection.identity_on(a_set)).range_set() == b_set
        image1 = beta.table.compose(PrefixBijection.identity_on(b_set)).range_set()
        image2 = beta.table.compose(
            beta.table.compose(PrefixBijection.identity_on(b_set))).range_set()
        assert image1.is_subset(a_set)
        assert image2.is_subset(a_set)


# --- zipper ----------------------------------------------------------------------


def test_zipper_identity():
    assert zipper_defect(identity_element(X2)) == (0, 0)


def test_zipper_swap():
    tau = gamma_transposition(FULL2, w(E1), w(E0), X2)
    assert zipper_defect(tau) == (0, 1)


def test_zipper_spec_alpha():
    alpha = FullGroupElement.from_table(PrefixBijection.from_pieces(FULL2, [
        (w(E0), w(E0, E0)), (w(E1, E0), w(E0, E1)), (w(E1, E1), w(E1))]), X2)
    assert zipper_defect(alpha) == (2, 2)


def test_zipper_requires_whole_space():
    el = identity_element(clop(FULL2, w(E0)))
    with pytest.raises(AmbientNotX):
        zipper_defect(el)


def test_zipper_budget():
    alpha = FullGroupElement.from_table(PrefixBijection.from_pieces(FULL2, [
        (w(E0), w(E0, E0)), (w(E1, E0), w(E0, E1)), (w(E1, E1), w(E1))]), X2)
    deep = alpha
    for _ in range(4):
        deep = deep.compose(alpha)
    with pytest.raises(StepBudgetExceeded):
        zipper_defect(deep, step_budget=3)


def test_zipper_lower_bound_random():
    rng = random.Random(76)
    for _ in range(40):
        g = random_valid_graph(rng, max_size=3)
        el = random_element(rng, g)
        defect, m = zipper_defect(el)
        assert defect >= m - 1
