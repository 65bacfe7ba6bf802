"""Dimension-group arithmetic: classes in the inductive limit of Z^V under
M^t, with the shift automorphism and a canonical kernel representative.

An element is a (level, vector) pair subject to (k, v) ~ (k+1, M^t v);
equality is decided through the stable kernel exponent of M^t, which bounds
the search in the limit by the matrix dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import intlinalg as il
from .clopen import ClopenSet
from .errors import NotInKernel
from .graphs import Graph, Word


@lru_cache(maxsize=None)
def _graph_data(graph: Graph):
    m = graph.matrix()
    mt = il.transpose(m)
    stable = il.stable_kernel_index(mt)
    return mt, stable


def transition_matrix(graph: Graph) -> list[list[int]]:
    """M^t, the map carrying level-k coordinates to level-(k+1) coordinates."""
    return _graph_data(graph)[0]


@dataclass(frozen=True)
class DimGroupElement:
    """Class in the dimension group, tagged by level."""

    graph: Graph
    level: int
    vec: tuple[int, ...]

    def raised(self, to_level: int) -> "DimGroupElement":
        assert to_level >= self.level
        mt, _ = _graph_data(self.graph)
        v = list(self.vec)
        for _ in range(to_level - self.level):
            v = il.mat_vec(mt, v)
        return DimGroupElement(self.graph, to_level, tuple(v))

    def __add__(self, other: "DimGroupElement") -> "DimGroupElement":
        assert self.graph == other.graph
        lvl = max(self.level, other.level)
        a, b = self.raised(lvl), other.raised(lvl)
        return DimGroupElement(self.graph, lvl, tuple(x + y for x, y in zip(a.vec, b.vec)))

    def __neg__(self) -> "DimGroupElement":
        return DimGroupElement(self.graph, self.level, tuple(-x for x in self.vec))

    def __sub__(self, other: "DimGroupElement") -> "DimGroupElement":
        return self + (-other)

    def apply_delta(self, j: int) -> "DimGroupElement":
        """delta^j: multiply by M^t at fixed level (j>0) or raise level (j<0)."""
        if j == 0:
            return self
        mt, _ = _graph_data(self.graph)
        if j > 0:
            v = list(self.vec)
            for _ in range(j):
                v = il.mat_vec(mt, v)
            return DimGroupElement(self.graph, self.level, tuple(v))
        return DimGroupElement(self.graph, self.level - j, self.vec)

    def equals(self, other: "DimGroupElement") -> bool:
        mt, stable = _graph_data(self.graph)
        lvl = max(self.level, other.level)
        diff = self.raised(lvl) - other.raised(lvl)
        v = list(diff.vec)
        for _ in range(stable):
            v = il.mat_vec(mt, v)
        return not any(v)

    def is_zero(self) -> bool:
        return self.equals(zero_class(self.graph))

    def to_kernel_representative(self) -> tuple[int, ...]:
        """The canonical vector (M^t)^s . vec, defined only on Ker(id - delta).

        The result is independent of the level tag and satisfies
        (id - M^t) w = 0; otherwise the class is not in the kernel.
        """
        mt, stable = _graph_data(self.graph)
        w = list(self.vec)
        for _ in range(stable):
            w = il.mat_vec(mt, w)
        if il.mat_vec(mt, w) != w:
            raise NotInKernel("class is not fixed by the shift automorphism")
        return tuple(w)


def zero_class(graph: Graph) -> DimGroupElement:
    return DimGroupElement(graph, 0, (0,) * graph.n_vertices)


def basis_class(graph: Graph, vertex: str, level: int = 0) -> DimGroupElement:
    vec = [0] * graph.n_vertices
    vec[graph.vertex_index(vertex)] = 1
    return DimGroupElement(graph, level, tuple(vec))


def word_class(graph: Graph, w: Word) -> DimGroupElement:
    """[1_{C_w}]: basis vector at t(w), at level |w|."""
    return basis_class(graph, graph.terminal(w), len(w))


def class_in_K(a: ClopenSet, level: int | None = None) -> DimGroupElement:
    """Class of a clopen set in the dimension group (empty set: zero class)."""
    total = zero_class(a.graph)
    for w in a.words:
        total = total + word_class(a.graph, w)
    if level is not None:
        total = total.raised(level)
    return total
