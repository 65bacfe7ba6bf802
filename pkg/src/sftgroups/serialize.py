"""Converters between plain JSON-style dicts (the wire/file formats) and the
core immutable objects.  Structural validation happens in the service's
pydantic models; here we only enforce the mathematical invariants.
"""

from __future__ import annotations

from .clopen import ClopenSet
from .elements import FullGroupElement, Point, PrefixBijection
from .errors import SchemaError
from .graphs import Graph, Word, validate_graph


def graph_from_doc(doc: dict) -> Graph:
    try:
        vertices = tuple(doc["vertices"])
        edges = tuple((e["id"], e["src"], e["dst"]) for e in doc["edges"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed graph document: {exc}") from None
    g = Graph(vertices, edges)
    validate_graph(g)
    return g


def graph_to_doc(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e, "src": s, "dst": d} for e, s, d in g.edges],
    }


def word_from_doc(g: Graph, doc: dict) -> Word:
    try:
        w = Word(doc["anchor"], tuple(doc.get("edges", ())))
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed word document: {exc}") from None
    return g.check_word(w)


def word_to_doc(w: Word) -> dict:
    return {"anchor": w.anchor, "edges": list(w.edges)}


def clopen_from_doc(g: Graph, doc: dict | None) -> ClopenSet:
    if doc is None:
        return ClopenSet.whole_space(g)
    try:
        words = [word_from_doc(g, w) for w in doc["words"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed clopen document: {exc}") from None
    return ClopenSet.from_words(g, words)


def clopen_to_doc(a: ClopenSet) -> dict:
    return {"words": [word_to_doc(w) for w in a.words]}


def table_from_doc(g: Graph, pieces: list[dict]) -> PrefixBijection:
    try:
        parsed = [
            (word_from_doc(g, p["range"]), word_from_doc(g, p["domain"]))
            for p in pieces
        ]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed piece list: {exc}") from None
    return PrefixBijection.from_pieces(g, parsed)


def table_to_doc(t: PrefixBijection) -> list[dict]:
    return [{"range": word_to_doc(r), "domain": word_to_doc(d)} for r, d in t.pieces]


def element_from_doc(doc: dict) -> FullGroupElement:
    g = graph_from_doc(doc["graph"])
    ambient = clopen_from_doc(g, doc.get("ambient"))
    table = table_from_doc(g, doc["pieces"])
    return FullGroupElement.from_table(table, ambient)


def element_to_doc(el: FullGroupElement, include_graph: bool = False) -> dict:
    doc = {
        "ambient": clopen_to_doc(el.ambient),
        "pieces": table_to_doc(el.table),
    }
    if include_graph:
        doc["graph"] = graph_to_doc(el.graph)
    return doc


def point_from_doc(g: Graph, doc: dict) -> Point:
    try:
        pre = word_from_doc(g, doc["preperiod"])
        cyc = word_from_doc(g, doc["cycle"])
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"malformed point document: {exc}") from None
    return Point.make(g, pre, cyc)


def point_to_doc(p: Point) -> dict:
    return {"preperiod": word_to_doc(p.preperiod), "cycle": word_to_doc(p.cycle)}
