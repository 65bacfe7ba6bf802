"""Pydantic request/response models: the wire format of the service and the
schema of the JSON files the CLI reads."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EdgeDoc(_Strict):
    id: str
    src: str
    dst: str


class GraphDoc(_Strict):
    vertices: list[str]
    edges: list[EdgeDoc]


class WordDoc(_Strict):
    anchor: str
    edges: list[str] = []


class ClopenDoc(_Strict):
    words: list[WordDoc]


class PieceDoc(_Strict):
    range: WordDoc
    domain: WordDoc


class ElementDoc(_Strict):
    graph: GraphDoc
    ambient: ClopenDoc | None = None  # None means the whole path space
    pieces: list[PieceDoc]


class PointDoc(_Strict):
    preperiod: WordDoc
    cycle: WordDoc


# --- requests ---------------------------------------------------------------


class GraphRequest(_Strict):
    graph: GraphDoc


class ClassifyRequest(_Strict):
    graph1: GraphDoc
    ambient1: ClopenDoc | None = None
    graph2: GraphDoc
    ambient2: ClopenDoc | None = None
    orbit_bound: int | None = None


class ElementRequest(_Strict):
    element: ElementDoc


class ComposeRequest(_Strict):
    elements: list[ElementDoc]


class OrderRequest(_Strict):
    element: ElementDoc
    limit: int = 64


class ZipperRequest(_Strict):
    element: ElementDoc
    step_budget: int | None = None


class ApplyRequest(_Strict):
    element: ElementDoc
    point: PointDoc


class ClopenPairRequest(_Strict):
    graph: GraphDoc
    a: ClopenDoc | None = None  # None means the whole path space
    b: ClopenDoc | None = None


class TranspositionRequest(_Strict):
    graph: GraphDoc
    a: ClopenDoc | None = None
    b: ClopenDoc | None = None
    ambient: ClopenDoc | None = None


class GeneratorsRequest(_Strict):
    graph: GraphDoc
    ambient: ClopenDoc | None = None
    step_budget: int | None = None


class RealizeIndexRequest(_Strict):
    graph: GraphDoc
    coords: list[int]  # coordinates in the HNF kernel basis


# --- responses --------------------------------------------------------------


class OkResponse(_Strict):
    ok: bool = True


class InvariantsResponse(_Strict):
    h0: str
    h0_torsion: list[int]
    h0_free_rank: int
    h1_rank: int
    bowen_franks: str
    det: int
    unit_class: str
    abelianization: str


class ClassifyResponse(_Strict):
    verdict: str


class ElementResponse(_Strict):
    ambient: ClopenDoc
    pieces: list[PieceDoc]


class ClopenResponse(_Strict):
    words: list[WordDoc]


class OrderResponse(_Strict):
    order: int | None


class IndexResponse(_Strict):
    coords: list[int]
    kernel_vector: list[int]


class ZipperResponse(_Strict):
    defect: int
    max_length: int


class PointResponse(_Strict):
    point: PointDoc


class WitnessResponse(_Strict):
    pieces: list[PieceDoc]
    source: ClopenDoc
    range: ClopenDoc


class GeneratorsResponse(_Strict):
    count: int
    elements: list[ElementResponse]


class FreeProductResponse(_Strict):
    alpha: ElementResponse
    beta: ElementResponse


class CanonicalFormResponse(_Strict):
    matrix: list[list[int]]


class ExampleRow(_Strict):
    name: str
    expected: dict
    got: dict
    passed: bool


class ExamplesResponse(_Strict):
    rows: list[ExampleRow]
    all_pass: bool


class ErrorResponse(_Strict):
    error: str
    category: str
    detail: str
