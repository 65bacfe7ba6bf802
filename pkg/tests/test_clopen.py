import random

import pytest

from sftgroups.clopen import ClopenSet, is_partition_of, refine_to_level
from sftgroups.errors import LevelTooSmall
from sftgroups.graphs import Word, graph_from_matrix

from helpers import TEST_GRAPHS, random_valid_graph, random_word

FULL2 = graph_from_matrix([[2]], ["v"])
E0, E1 = "vv0", "vv1"


def cyl(g, anchor, *edges):
    return ClopenSet.from_words(g, [Word(anchor, tuple(edges))])


def test_union_of_siblings_collapses_to_whole_space():
    c0, c1 = cyl(FULL2, "v", E0), cyl(FULL2, "v", E1)
    assert c0.union(c1) == ClopenSet.whole_space(FULL2)


def test_intersect_disjoint_cylinders():
    golden = TEST_GRAPHS["golden"]()
    ce, cf = cyl(golden, "a", "e"), cyl(golden, "a", "f")
    assert ce.intersect(cf).is_empty()


def test_refine_to_level():
    c0 = cyl(FULL2, "v", E0)
    assert [w.render() for w in refine_to_level(c0, 2)] == [f"v|{E0}.{E0}", f"v|{E0}.{E1}"]
    deep = cyl(FULL2, "v", E0, E1)
    with pytest.raises(LevelTooSmall):
        refine_to_level(deep, 1)


def test_canonicalization_idempotent_and_order_insensitive():
    rng = random.Random(31)
    for _ in range(50):
        g = random_valid_graph(rng, max_size=4)
        words = [random_word(rng, g, rng.randint(0, 3)) for _ in range(rng.randint(0, 6))]
        a = ClopenSet.from_words(g, words)
        assert ClopenSet.from_words(g, a.words) == a
        rng.shuffle(words)
        assert ClopenSet.from_words(g, words) == a


def test_antichain_and_reduced_invariants():
    rng = random.Random(32)
    for _ in range(40):
        g = random_valid_graph(rng, max_size=4)
        words = [random_word(rng, g, rng.randint(0, 3)) for _ in range(5)]
        a = ClopenSet.from_words(g, words)
        ws = a.words
        for i, w1 in enumerate(ws):
            for w2 in ws[i + 1:]:
                assert not (w1.anchor == w2.anchor and
                            w2.edges[:len(w1.edges)] == w1.edges)
        for w in ws:
            if w.edges:
                parent = Word(w.anchor, w.edges[:-1])
                family = set(g.extensions(parent))
                assert not family <= set(ws)


def test_boolean_algebra_laws_random():
    rng = random.Random(33)
    for trial in range(1000):
        g = random_valid_graph(rng, max_size=3)
        whole = ClopenSet.whole_space(g)

        def random_clopen():
            words = [random_word(rng, g, rng.randint(0, 2))
                     for _ in range(rng.randint(0, 3))]
            return ClopenSet.from_words(g, words)

        a, b, c = random_clopen(), random_clopen(), random_clopen()
        assert a.union(b) == b.union(a)
        assert a.intersect(b) == b.intersect(a)
        assert a.union(b.union(c)) == a.union(b).union(c)
        assert a.intersect(b.intersect(c)) == a.intersect(b).intersect(c)
        assert a.intersect(b.union(c)) == a.intersect(b).union(a.intersect(c))
        assert a.union(a) == a and a.intersect(a) == a
        comp = a.complement_in(whole)
        assert a.union(comp) == whole
        assert a.intersect(comp).is_empty()
        assert comp.complement_in(whole) == a
        assert a.is_subset(a.union(b))
        assert a.intersect(b).is_subset(a)


def test_partition_predicate():
    c0, c1 = cyl(FULL2, "v", E0), cyl(FULL2, "v", E1)
    whole = ClopenSet.whole_space(FULL2)
    assert is_partition_of([c0, c1], whole)
    assert not is_partition_of([c0], whole)
    assert not is_partition_of([c0, c0, c1], whole)


def test_clopen_contains_word():
    c0 = cyl(FULL2, "v", E0)
    assert c0.contains_word(Word("v", (E0, E1)))
    assert not c0.contains_word(Word("v", (E1,)))
    assert not c0.contains_word(Word("v"))
