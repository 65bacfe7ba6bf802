"""Finite directed multigraphs, admissible edge words, and shift predicates.

A graph defines the one-sided edge-path space X; a ``Word`` is a finite
admissible edge path with an explicit anchor vertex so the empty word at
vertex v denotes the cylinder of all paths starting at v.  All ordering
(vertex, edge, word) follows declaration order, which keeps every canonical
form in the library reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import (
    IsPermutation,
    MatrixEdgeMismatch,
    NotAdmissible,
    NotComposable,
    NotIrreducible,
)


@dataclass(frozen=True)
class Word:
    """Admissible edge path: anchor vertex plus a (possibly empty) edge tuple."""

    anchor: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    def render(self) -> str:
        return f"{self.anchor}|{'.'.join(self.edges)}"


@dataclass(frozen=True)
class Graph:
    """Directed multigraph with an irreducible, non-permutation adjacency matrix."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (edge id, source, target)

    _vindex: dict = field(init=False, repr=False, compare=False, hash=False)
    _eindex: dict = field(init=False, repr=False, compare=False, hash=False)
    _out: dict = field(init=False, repr=False, compare=False, hash=False)
    _in: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_vindex", {v: i for i, v in enumerate(self.vertices)})
        object.__setattr__(self, "_eindex", {})
        object.__setattr__(self, "_out", {v: [] for v in self.vertices})
        object.__setattr__(self, "_in", {v: [] for v in self.vertices})
        for k, (eid, src, dst) in enumerate(self.edges):
            if eid in self._eindex:
                raise MatrixEdgeMismatch(f"duplicate edge id {eid!r}")
            if src not in self._vindex or dst not in self._vindex:
                raise MatrixEdgeMismatch(f"edge {eid!r} endpoints not declared")
            self._eindex[eid] = k
            self._out[src].append(eid)
            self._in[dst].append(eid)

    # --- basic accessors -------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def edge_source(self, eid: str) -> str:
        return self.edges[self._eindex[eid]][1]

    def edge_target(self, eid: str) -> str:
        return self.edges[self._eindex[eid]][2]

    def edge_index(self, eid: str) -> int:
        return self._eindex[eid]

    def out_edges(self, v: str) -> list[str]:
        return list(self._out[v])

    def matrix(self) -> list[list[int]]:
        """Adjacency matrix M with M[i][j] = number of edges vertex_i -> vertex_j."""
        n = self.n_vertices
        m = [[0] * n for _ in range(n)]
        for _, src, dst in self.edges:
            m[self._vindex[src]][self._vindex[dst]] += 1
        return m

    # --- word handling ---------------------------------------------------

    def check_word(self, w: Word) -> Word:
        if w.anchor not in self._vindex:
            raise NotAdmissible(f"unknown anchor vertex {w.anchor!r}")
        at = w.anchor
        for eid in w.edges:
            if eid not in self._eindex:
                raise NotAdmissible(f"unknown edge {eid!r}")
            if self.edge_source(eid) != at:
                raise NotAdmissible(f"edge {eid!r} does not continue path at {at!r}")
            at = self.edge_target(eid)
        return w

    def terminal(self, w: Word) -> str:
        """t(w): end vertex of the path (the anchor for an empty word)."""
        return self.edge_target(w.edges[-1]) if w.edges else w.anchor

    def word_key(self, w: Word):
        """Canonical sort key: length, anchor order, edge order."""
        return (
            len(w.edges),
            self._vindex[w.anchor],
            tuple(self._eindex[e] for e in w.edges),
        )

    def concat(self, a: Word, b: Word) -> Word:
        if self.terminal(a) != b.anchor:
            raise NotComposable(
                f"t({a.render()}) = {self.terminal(a)!r} != i({b.render()})"
            )
        return Word(a.anchor, a.edges + b.edges)

    @staticmethod
    def is_prefix(a: Word, b: Word) -> bool:
        """True when the cylinder of b is contained in the cylinder of a."""
        return a.anchor == b.anchor and b.edges[: len(a.edges)] == a.edges

    def extensions(self, w: Word) -> list[Word]:
        """All one-edge extensions of w, in edge declaration order."""
        return [Word(w.anchor, w.edges + (e,)) for e in self._out[self.terminal(w)]]

    def enumerate_words(self, length: int, start: str | None = None,
                        end: str | None = None) -> list[Word]:
        """All admissible words of exactly the given length, canonically ordered."""
        anchors = [start] if start is not None else list(self.vertices)
        level = [Word(a) for a in anchors]
        for _ in range(length):
            level = [ext for w in level for ext in self.extensions(w)]
        if end is not None:
            level = [w for w in level if self.terminal(w) == end]
        return level

    def shortest_path(self, src: str, dst: str) -> Word:
        """Shortest admissible word of length >= 1 from src to dst (BFS)."""
        frontier = [Word(src)]
        seen = set()
        while True:
            nxt = []
            for w in frontier:
                for ext in self.extensions(w):
                    t = self.terminal(ext)
                    if t == dst:
                        return ext
                    if t not in seen:
                        seen.add(t)
                        nxt.append(ext)
            if not nxt:  # unreachable on a validated (irreducible) graph
                raise NotIrreducible(f"no path {src!r} -> {dst!r}")
            frontier = nxt

    def path_between(self, src: str, dst: str) -> Word:
        """Like shortest_path but returns the empty word when src == dst."""
        return Word(src) if src == dst else self.shortest_path(src, dst)


# --- construction and validation ------------------------------------------


def graph_from_matrix(matrix: list[list[int]], vertices: list[str] | None = None) -> Graph:
    """Build a graph realizing the given adjacency matrix; edge ids are generated."""
    n = len(matrix)
    if vertices is None:
        vertices = [f"v{i}" for i in range(n)] if n > 10 else [chr(ord("a") + i) for i in range(n)]
    edges = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise MatrixEdgeMismatch("matrix is not square")
        for j, count in enumerate(row):
            if count < 0:
                raise MatrixEdgeMismatch("negative entry")
            for k in range(count):
                eid = f"{vertices[i]}{vertices[j]}" + (str(k) if count > 1 else "")
                edges.append((eid, vertices[i], vertices[j]))
    return Graph(tuple(vertices), tuple(edges))


def _strongly_connected(g: Graph) -> bool:
    n = g.n_vertices
    if n == 0:
        return False

    def reach(adj):
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    fwd = [[] for _ in range(n)]
    bwd = [[] for _ in range(n)]
    for _, src, dst in g.edges:
        fwd[g.vertex_index(src)].append(g.vertex_index(dst))
        bwd[g.vertex_index(dst)].append(g.vertex_index(src))
    return reach(fwd) and reach(bwd)


def _is_permutation(matrix: list[list[int]]) -> bool:
    n = len(matrix)
    for row in matrix:
        if sorted(row) != [0] * (n - 1) + [1]:
            return False
    for j in range(n):
        if sum(matrix[i][j] for i in range(n)) != 1:
            return False
    return True


def validate_graph(g: Graph, matrix: list[list[int]] | None = None) -> None:
    """Check the shift-of-finite-type invariants; raise on the first failure."""
    derived = g.matrix()
    if matrix is not None and [list(r) for r in matrix] != derived:
        raise MatrixEdgeMismatch("declared matrix disagrees with edge counts")
    for v in g.vertices:
        if not g._out[v]:
            raise NotIrreducible(f"vertex {v!r} has no outgoing edge")
        if not g._in[v]:
            raise NotIrreducible(f"vertex {v!r} has no incoming edge")
    if not _strongly_connected(g):
        raise NotIrreducible("adjacency matrix is not irreducible")
    if _is_permutation(derived):
        raise IsPermutation("adjacency matrix is a permutation matrix")


def period_and_primitivity(g: Graph) -> tuple[int, bool, int | None]:
    """(period, primitive, mixing_exponent).

    period = gcd of all cycle lengths, computed from BFS level differences;
    when primitive, mixing_exponent is the least m with every entry of M^m >= 3.
    """
    n = g.n_vertices
    adj = [[] for _ in range(n)]
    for _, src, dst in g.edges:
        adj[g.vertex_index(src)].append(g.vertex_index(dst))
    level = [None] * n
    level[0] = 0
    queue = [0]
    period = 0
    while queue:
        nxt = []
        for u in queue:
            for v in adj[u]:
                if level[v] is None:
                    level[v] = level[u] + 1
                    nxt.append(v)
                else:
                    period = gcd(period, level[u] + 1 - level[v])
        queue = nxt
    period = abs(period)
    if period != 1:
        return period, False, None

    from .intlinalg import mat_mul

    m = g.matrix()
    power = m
    cap = 4 * n * n + 64
    for exponent in range(1, cap + 1):
        if all(entry >= 3 for row in power for entry in row):
            return 1, True, exponent
        power = mat_mul(power, m)
    raise AssertionError("mixing exponent search exceeded its cap on a primitive matrix")
