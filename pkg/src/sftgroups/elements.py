"""Prefix-substitution tables: compact open G-sets and full-group elements.

A table is a finite list of (range word, domain word) pairs with equal
terminal vertices; it acts by substituting the domain prefix with the range
prefix.  Tables are kept in canonical form (maximal sibling merge, sorted by
domain word) so equality is syntactic.  Composition is the G-set product and
is partial: pieces that never meet are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlinalg as il
from .clopen import ClopenSet
from .dimension import DimGroupElement, word_class, zero_class
from .errors import (
    AmbientMismatch,
    NotAdmissible,
    NotDisjoint,
    PointOutsideAmbient,
)
from .graphs import Graph, Word
from .homology import homology

Piece = tuple  # (range: Word, domain: Word)


def _merge_siblings(g: Graph, pieces: set[Piece]) -> set[Piece]:
    changed = True
    while changed:
        changed = False
        groups: dict[Piece, set[str]] = {}
        for rng, dom in pieces:
            if rng.edges and dom.edges and rng.edges[-1] == dom.edges[-1]:
                parent = (Word(rng.anchor, rng.edges[:-1]),
                          Word(dom.anchor, dom.edges[:-1]))
                groups.setdefault(parent, set()).add(rng.edges[-1])
        for (pr, pd), edges_present in groups.items():
            out_edges = set(g.out_edges(g.terminal(pr)))
            if not out_edges <= edges_present:
                continue
            family = {
                (Word(pr.anchor, pr.edges + (e,)), Word(pd.anchor, pd.edges + (e,)))
                for e in out_edges
            }
            if family <= pieces:  # guard against merges earlier in this pass
                pieces -= family
                pieces.add((pr, pd))
                changed = True
    return pieces


def expand_piece(g: Graph, piece: Piece) -> list[Piece]:
    """Replace a piece by its full sibling family (same action, finer table)."""
    rng, dom = piece
    return [
        (Word(rng.anchor, rng.edges + (e,)), Word(dom.anchor, dom.edges + (e,)))
        for e in g.out_edges(g.terminal(rng))
    ]


@dataclass(frozen=True)
class PrefixBijection:
    """Compact open G-set as a canonical table of prefix substitutions."""

    graph: Graph
    pieces: tuple[Piece, ...]

    @staticmethod
    def from_pieces(g: Graph, pieces) -> "PrefixBijection":
        checked = set()
        for rng, dom in pieces:
            g.check_word(rng)
            g.check_word(dom)
            if g.terminal(rng) != g.terminal(dom):
                raise NotAdmissible(
                    f"terminal vertices differ: {rng.render()} vs {dom.render()}"
                )
            checked.add((rng, dom))
        for side, idx in (("domain", 1), ("range", 0)):
            words = sorted((p[idx] for p in checked),
                           key=lambda w: (g.vertex_index(w.anchor),
                                          tuple(g.edge_index(e) for e in w.edges)))
            # prefix pairs are lex-adjacent, so one linear scan suffices
            for a, b in zip(words, words[1:]):
                if Graph.is_prefix(a, b):
                    raise NotDisjoint(f"{side} cylinders overlap: "
                                      f"{a.render()} vs {b.render()}")
        merged = _merge_siblings(g, checked)
        ordered = tuple(sorted(merged, key=lambda p: g.word_key(p[1])))
        return PrefixBijection(g, ordered)

    @staticmethod
    def identity_on(a: ClopenSet) -> "PrefixBijection":
        return PrefixBijection.from_pieces(a.graph, [(w, w) for w in a.words])

    def source(self) -> ClopenSet:
        return ClopenSet.from_words(self.graph, [d for _, d in self.pieces])

    def range_set(self) -> ClopenSet:
        return ClopenSet.from_words(self.graph, [r for r, _ in self.pieces])

    def inverse(self) -> "PrefixBijection":
        return PrefixBijection.from_pieces(self.graph, [(d, r) for r, d in self.pieces])

    def compose(self, inner: "PrefixBijection") -> "PrefixBijection":
        """G-set product self*inner (apply inner first); partial overlaps drop."""
        assert self.graph == inner.graph
        out = []
        for ro, do in self.pieces:
            for ri, di in inner.pieces:
                if Graph.is_prefix(do, ri):
                    tail = ri.edges[len(do.edges):]
                    out.append((Word(ro.anchor, ro.edges + tail), di))
                elif Graph.is_prefix(ri, do) and len(do) > len(ri):
                    tail = do.edges[len(ri.edges):]
                    out.append((ro, Word(di.anchor, di.edges + tail)))
        return PrefixBijection.from_pieces(self.graph, out)

    def cocycle_values(self) -> set[int]:
        return {len(r) - len(d) for r, d in self.pieces}

    def max_word_length(self) -> int:
        return max((max(len(r), len(d)) for r, d in self.pieces), default=0)

    def union(self, other: "PrefixBijection") -> "PrefixBijection":
        assert self.graph == other.graph
        return PrefixBijection.from_pieces(self.graph, self.pieces + other.pieces)

    def render(self) -> str:
        return "{" + ", ".join(f"{r.render()} <- {d.render()}" for r, d in self.pieces) + "}"


@dataclass(frozen=True)
class Point:
    """Eventually periodic path: preperiod then an infinitely repeated cycle,
    normalized so the representation is unique."""

    preperiod: Word
    cycle: Word

    @staticmethod
    def make(g: Graph, preperiod: Word, cycle: Word) -> "Point":
        g.check_word(preperiod)
        g.check_word(cycle)
        if not cycle.edges:
            raise NotAdmissible("cycle must be nonempty")
        if g.terminal(cycle) != cycle.anchor:
            raise NotAdmissible("cycle does not close up")
        if g.terminal(preperiod) != cycle.anchor:
            raise NotAdmissible("preperiod does not lead into the cycle")
        cyc = list(cycle.edges)
        for d in range(1, len(cyc) + 1):
            if len(cyc) % d == 0 and cyc == cyc[:d] * (len(cyc) // d):
                cyc = cyc[:d]
                break
        pre = list(preperiod.edges)
        while pre and pre[-1] == cyc[-1]:
            pre.pop()
            cyc = [cyc[-1]] + cyc[:-1]
        anchor_cycle = g.edge_source(cyc[0])
        anchor_pre = preperiod.anchor if pre else anchor_cycle
        return Point(Word(anchor_pre, tuple(pre)), Word(anchor_cycle, tuple(cyc)))

    @property
    def anchor(self) -> str:
        return self.preperiod.anchor

    def prefix_edges(self, k: int) -> tuple[str, ...]:
        pre = self.preperiod.edges
        if k <= len(pre):
            return pre[:k]
        cyc = self.cycle.edges
        out = list(pre)
        while len(out) < k:
            out.extend(cyc)
        return tuple(out[:k])

    def render(self) -> str:
        return f"{self.preperiod.render()}({self.cycle.render()})*"


def point_in_cylinder(g: Graph, w: Word) -> Point:
    """A canonical eventually periodic point inside the cylinder of w."""
    t = g.terminal(w)
    return Point.make(g, w, g.shortest_path(t, t))


def apply_table(table: PrefixBijection, pt: Point) -> Point:
    """Value of the prefix substitution at an eventually periodic point."""
    g = table.graph
    for rng, dom in table.pieces:
        k = len(dom.edges)
        if dom.anchor == pt.anchor and pt.prefix_edges(k) == dom.edges:
            pre = pt.preperiod.edges
            if k <= len(pre):
                new_pre = Word(rng.anchor, rng.edges + pre[k:])
                return Point.make(g, new_pre, pt.cycle)
            shift = (k - len(pre)) % len(pt.cycle.edges)
            cyc = pt.cycle.edges[shift:] + pt.cycle.edges[:shift]
            anchor = g.edge_source(cyc[0])
            return Point.make(g, rng, Word(anchor, cyc))
    raise PointOutsideAmbient(f"point {pt.render()} is outside the domain")


@dataclass(frozen=True)
class FullGroupElement:
    """Homeomorphism of the clopen set Y given by a table with s = r = Y."""

    table: PrefixBijection
    ambient: ClopenSet

    @staticmethod
    def from_table(table: PrefixBijection, ambient: ClopenSet) -> "FullGroupElement":
        if table.source() != ambient or table.range_set() != ambient:
            raise AmbientMismatch("table source/range does not partition the ambient set")
        return FullGroupElement(table, ambient)

    @property
    def graph(self) -> Graph:
        return self.table.graph

    def compose(self, other: "FullGroupElement") -> "FullGroupElement":
        """self after other."""
        if self.ambient != other.ambient or self.graph != other.graph:
            raise AmbientMismatch("elements live on different ambient sets")
        return FullGroupElement(self.table.compose(other.table), self.ambient)

    def inverse(self) -> "FullGroupElement":
        return FullGroupElement(self.table.inverse(), self.ambient)

    def __mul__(self, other: "FullGroupElement") -> "FullGroupElement":
        return self.compose(other)

    def is_identity(self) -> bool:
        return all(r == d for r, d in self.table.pieces)

    def apply(self, pt: Point) -> Point:
        try:
            return apply_table(self.table, pt)
        except PointOutsideAmbient:
            raise PointOutsideAmbient(
                f"point {pt.render()} is outside the ambient set")

    def support(self) -> ClopenSet:
        return ClopenSet.from_words(
            self.graph, [d for r, d in self.table.pieces if r != d])

    def order_up_to(self, limit: int = 64) -> int | None:
        """Exact order if at most limit; None for unknown/infinite.

        A nonzero index certifies infinite order (H1 is torsion-free)."""
        if self.is_identity():
            return 1
        if any(index(self)):
            return None
        power = self
        for k in range(2, limit + 1):
            power = power.compose(self)
            if power.is_identity():
                return k
        return None


def identity_element(ambient: ClopenSet) -> FullGroupElement:
    return FullGroupElement(PrefixBijection.identity_on(ambient), ambient)


# --- the index map ----------------------------------------------------------


def level_shift_classes(alpha: FullGroupElement) -> dict[int, DimGroupElement]:
    """Dimension-group class of S(alpha, n) for each occurring cocycle value n:
    the union of domain cylinders of the pieces shifting by n."""
    out: dict[int, DimGroupElement] = {}
    g = alpha.graph
    for rng, dom in alpha.table.pieces:
        n = len(rng) - len(dom)
        cls = word_class(g, dom)
        out[n] = out[n] + cls if n in out else cls
    return out


def index_class(alpha: FullGroupElement) -> DimGroupElement:
    """sum over n of delta^(-n) applied to [1_{S(alpha,n)}], which lands in
    Ker(id - delta); delta^(n) = id + delta + ... + delta^(n-1)."""
    g = alpha.graph
    total = zero_class(g)
    for n, cls in level_shift_classes(alpha).items():
        if n == 0:
            continue
        if n > 0:
            for j in range(1, n + 1):
                total = total - cls.apply_delta(-j)
        else:
            for j in range(-n):
                total = total + cls.apply_delta(j)
    return total


def index(alpha: FullGroupElement) -> tuple[int, ...]:
    """Index map value in coordinates of the HNF kernel basis of id - M^t."""
    h = homology(alpha.graph)
    basis = h.h1_basis
    w = index_class(alpha).to_kernel_representative()
    if not basis:
        return ()
    columns = [[b[i] for b in basis] for i in range(len(w))]
    return tuple(il.integer_solve(columns, list(w)))


def index_kernel_vector(alpha: FullGroupElement) -> tuple[int, ...]:
    """Index map value as an actual vector in Ker(id - M^t)."""
    return index_class(alpha).to_kernel_representative()
