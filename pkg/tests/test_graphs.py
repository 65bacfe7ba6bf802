import random

import pytest

from sftgroups.errors import IsPermutation, NotComposable, NotIrreducible
from sftgroups.graphs import Graph, Word, graph_from_matrix, period_and_primitivity, validate_graph
from sftgroups.intlinalg import matrix_power

from helpers import random_valid_graph

GOLDEN = Graph(("a", "b"), (("e", "a", "a"), ("f", "a", "b"), ("g", "b", "a")))


def test_golden_mean_is_valid():
    validate_graph(GOLDEN)
    assert GOLDEN.matrix() == [[1, 1], [1, 0]]


def test_one_loop_is_permutation():
    with pytest.raises(IsPermutation):
        validate_graph(graph_from_matrix([[1]]))


def test_two_cycle_is_permutation():
    # oracle: [[0,1],[1,0]] is literally a permutation matrix
    with pytest.raises(IsPermutation):
        validate_graph(graph_from_matrix([[0, 1], [1, 0]]))


def test_disconnected_not_irreducible():
    g = Graph(("a", "b"), (("e", "a", "a"), ("f", "a", "a"), ("g", "b", "b"), ("h", "b", "b")))
    with pytest.raises(NotIrreducible):
        validate_graph(g)


def test_declared_matrix_mismatch():
    from sftgroups.errors import MatrixEdgeMismatch
    with pytest.raises(MatrixEdgeMismatch):
        validate_graph(GOLDEN, matrix=[[2, 1], [1, 0]])


def test_period_golden_mean():
    # oracle: explicit matrix powers; M^5 = [[8,5],[5,3]] is the first all->=3
    period, primitive, mixing = period_and_primitivity(GOLDEN)
    assert (period, primitive, mixing) == (1, True, 5)
    m4 = matrix_power(GOLDEN.matrix(), 4)
    assert min(min(row) for row in m4) < 3
    m5 = matrix_power(GOLDEN.matrix(), 5)
    assert min(min(row) for row in m5) >= 3


def test_period_full_shift():
    assert period_and_primitivity(graph_from_matrix([[2]])) == (1, True, 2)


def test_period_two():
    assert period_and_primitivity(graph_from_matrix([[0, 2], [1, 0]])) == (2, False, None)


def test_enumerate_golden():
    words = GOLDEN.enumerate_words(2, start="a")
    assert [w.render() for w in words] == ["a|e.e", "a|e.f", "a|f.g"]


def test_concat():
    empty = Word("a")
    e = Word("a", ("e",))
    assert GOLDEN.concat(empty, e) == e
    assert GOLDEN.concat(e, empty) == e
    with pytest.raises(NotComposable):
        GOLDEN.concat(Word("a", ("f",)), e)


def test_shortest_path_back_to_b():
    assert GOLDEN.shortest_path("b", "b").render() == "b|g.f"


def test_enumeration_count_matches_matrix_power():
    rng = random.Random(11)
    for _ in range(15):
        g = random_valid_graph(rng)
        m = g.matrix()
        for length in range(4):
            power = matrix_power(m, length)
            assert len(g.enumerate_words(length)) == sum(map(sum, power))


def test_shortest_path_contract():
    rng = random.Random(12)
    for _ in range(10):
        g = random_valid_graph(rng)
        for src in g.vertices:
            for dst in g.vertices:
                w = g.shortest_path(src, dst)
                g.check_word(w)
                assert len(w) >= 1
                assert w.anchor == src and g.terminal(w) == dst


def test_mixing_exponent_minimality():
    rng = random.Random(13)
    checked = 0
    while checked < 10:
        g = random_valid_graph(rng, max_size=4)
        period, primitive, mixing = period_and_primitivity(g)
        if not primitive:
            continue
        checked += 1
        power = matrix_power(g.matrix(), mixing)
        assert all(entry >= 3 for row in power for entry in row)
        if mixing > 1:
            prev = matrix_power(g.matrix(), mixing - 1)
            assert any(entry <= 2 for row in prev for entry in row)
