"""Shared deterministic generators for the test suite."""

from __future__ import annotations

import itertools
import random

from sftgroups.catalog import free_group_boundary, full_shift, golden_mean, rank_one_kernel
from sftgroups.clopen import ClopenSet
from sftgroups.constructions import gamma_transposition
from sftgroups.elements import FullGroupElement, Point, identity_element
from sftgroups.graphs import Graph, Word, graph_from_matrix, validate_graph


def random_valid_graph(rng: random.Random, max_size: int = 5, max_entry: int = 3) -> Graph:
    while True:
        n = rng.randint(1, max_size)
        matrix = [[rng.choices(range(max_entry + 1), weights=[4, 4, 2, 1])[0]
                   for _ in range(n)] for _ in range(n)]
        try:
            g = graph_from_matrix(matrix)
            validate_graph(g)
            return g
        except Exception:
            continue


def random_word(rng: random.Random, g: Graph, length: int, start: str | None = None) -> Word:
    anchor = start if start is not None else rng.choice(g.vertices)
    w = Word(anchor)
    for _ in range(length):
        exts = g.extensions(w)
        w = rng.choice(exts)
    return w


def random_gamma(rng: random.Random, g: Graph, ambient: ClopenSet,
                 max_len: int = 3) -> FullGroupElement | None:
    """A random basic transposition inside the ambient set, or None."""
    for _ in range(40):
        l1 = rng.randint(1, max_len)
        l2 = rng.choice([l1, l1 + 1])
        mu = random_word(rng, g, l1)
        nu = random_word(rng, g, l2, start=rng.choice(g.vertices))
        if g.terminal(mu) != g.terminal(nu):
            continue
        if Graph.is_prefix(mu, nu) or Graph.is_prefix(nu, mu):
            continue
        if not (ambient.contains_word(mu) and ambient.contains_word(nu)):
            continue
        return gamma_transposition(g, mu, nu, ambient)
    return None


def random_element(rng: random.Random, g: Graph,
                   ambient: ClopenSet | None = None,
                   factors: int = 3) -> FullGroupElement:
    """Random product of basic transpositions (depth <= 5, small tables)."""
    ambient = ambient if ambient is not None else ClopenSet.whole_space(g)
    out = identity_element(ambient)
    for _ in range(rng.randint(1, factors)):
        gamma = random_gamma(rng, g, ambient)
        if gamma is not None:
            out = out.compose(gamma)
    return out


def random_point_in(rng: random.Random, g: Graph, ambient: ClopenSet) -> Point:
    w = rng.choice(ambient.words)
    tail = random_word(rng, g, rng.randint(0, 3), start=g.terminal(w))
    pre = Word(w.anchor, w.edges + tail.edges)
    t = g.terminal(pre)
    cycle = g.shortest_path(t, t)
    return Point.make(g, pre, cycle)


def brute_force_kernel_vectors(a: list[list[int]], bound: int = 3) -> list[tuple[int, ...]]:
    """All x with a x = 0 and |x_i| <= bound, by exhaustion."""
    n = len(a[0]) if a else 0
    out = []
    for xs in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(sum(row[j] * xs[j] for j in range(n)) == 0 for row in a):
            out.append(xs)
    return out


TEST_GRAPHS = {
    "full2": lambda: full_shift(2, 1),
    "golden": golden_mean,
    "rank1": rank_one_kernel,
    "fg2": lambda: free_group_boundary(2),
}
