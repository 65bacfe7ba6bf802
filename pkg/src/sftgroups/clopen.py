"""Clopen subsets of the path space X as canonical antichains of words.

Canonical form: no word is a prefix of another, no complete sibling family
{we : e out of t(w)} is present (it collapses to w), and words are sorted by
(length, anchor, edges).  Equality of clopen sets is then syntactic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LevelTooSmall
from .graphs import Graph, Word


def _drop_dominated(g: Graph, words) -> list[Word]:
    """Remove words that extend another present word (lex-adjacent check)."""
    ordered = sorted(set(words),
                     key=lambda w: (g.vertex_index(w.anchor),
                                    tuple(g.edge_index(e) for e in w.edges)))
    kept: list[Word] = []
    for w in ordered:
        if kept and Graph.is_prefix(kept[-1], w):
            continue
        kept.append(w)
    return kept


def _reduce_words(g: Graph, words) -> set[Word]:
    kept = set(_drop_dominated(g, words))
    # collapse complete sibling families, cascading upward
    changed = True
    while changed:
        changed = False
        groups: dict[Word, set[str]] = {}
        for w in kept:
            if w.edges:
                parent = Word(w.anchor, w.edges[:-1])
                groups.setdefault(parent, set()).add(w.edges[-1])
        for parent, present in groups.items():
            family = set(g.out_edges(g.terminal(parent)))
            if family <= present:
                kept -= {Word(parent.anchor, parent.edges + (e,)) for e in family}
                kept.add(parent)
                changed = True
    return kept


@dataclass(frozen=True)
class ClopenSet:
    """Finite union of cylinders in canonical reduced antichain form."""

    graph: Graph
    words: tuple[Word, ...]

    @staticmethod
    def from_words(g: Graph, words) -> "ClopenSet":
        checked = {g.check_word(w) for w in words}
        reduced = _reduce_words(g, checked)
        return ClopenSet(g, tuple(sorted(reduced, key=g.word_key)))

    @staticmethod
    def whole_space(g: Graph) -> "ClopenSet":
        return ClopenSet.from_words(g, [Word(v) for v in g.vertices])

    @staticmethod
    def empty(g: Graph) -> "ClopenSet":
        return ClopenSet(g, ())

    def is_empty(self) -> bool:
        return not self.words

    def is_whole_space(self) -> bool:
        return self == ClopenSet.whole_space(self.graph)

    def max_depth(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def contains_word(self, w: Word) -> bool:
        """True when the cylinder of w lies inside this set."""
        return any(Graph.is_prefix(a, w) for a in self.words)

    # --- boolean algebra --------------------------------------------------

    def union(self, other: "ClopenSet") -> "ClopenSet":
        assert self.graph == other.graph
        return ClopenSet.from_words(self.graph, set(self.words) | set(other.words))

    def intersect(self, other: "ClopenSet") -> "ClopenSet":
        assert self.graph == other.graph
        out = set()
        for a in self.words:
            for b in other.words:
                if Graph.is_prefix(a, b):
                    out.add(b)
                elif Graph.is_prefix(b, a):
                    out.add(a)
        return ClopenSet.from_words(self.graph, out)

    def complement_in(self, ambient: "ClopenSet") -> "ClopenSet":
        """Words of ambient not covered by self (ambient need not contain self).

        Splits ambient cylinders only along the spines leading into removed
        cylinders, so output stays small for deep removals."""
        assert self.graph == ambient.graph
        holes = self.words
        out = []

        def walk(w: Word):
            if any(Graph.is_prefix(h, w) for h in holes):
                return
            if not any(Graph.is_prefix(w, h) for h in holes):
                out.append(w)
                return
            for child in self.graph.extensions(w):
                walk(child)

        for y in ambient.words:
            walk(y)
        return ClopenSet.from_words(self.graph, out)

    def is_subset(self, other: "ClopenSet") -> bool:
        return self.intersect(other) == self

    def is_disjoint(self, other: "ClopenSet") -> bool:
        return self.intersect(other).is_empty()

    def render(self) -> str:
        return "{" + ", ".join(w.render() for w in self.words) + "}"


def refine_to_level(a: ClopenSet, level: int) -> list[Word]:
    """Rewrite a as the list of all its admissible extensions of exact length
    ``level``; requires level >= the deepest word of a."""
    if level < a.max_depth():
        raise LevelTooSmall(f"level {level} below max word length {a.max_depth()}")
    out = []
    for w in a.words:
        batch = [w]
        for _ in range(level - len(w)):
            batch = [ext for x in batch for ext in a.graph.extensions(x)]
        out.extend(batch)
    return sorted(out, key=a.graph.word_key)


def is_partition_of(parts: list[ClopenSet], ambient: ClopenSet) -> bool:
    """Pairwise disjoint and union equal to ambient."""
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            if not p.is_disjoint(q):
                return False
    total = ClopenSet.empty(ambient.graph)
    for p in parts:
        total = total.union(p)
    return total == ambient


def words_partition(g: Graph, words, ambient: ClopenSet) -> bool:
    """True when the given words are pairwise disjoint cylinders covering ambient."""
    ws = list(words)
    for i, a in enumerate(ws):
        for b in ws[i + 1:]:
            if Graph.is_prefix(a, b) or Graph.is_prefix(b, a):
                return False
    return ClopenSet.from_words(g, ws) == ambient
