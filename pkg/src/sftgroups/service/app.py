"""FastAPI service exposing the full-group toolkit.

Every endpoint is stateless: requests carry complete graph/element data and
responses are canonical forms, so identical requests give identical replies.
Domain errors map to structured JSON bodies: validation problems return 400,
mathematically failing operations return 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .. import serialize as ser
from ..catalog import examples_table
from ..clopen import ClopenSet
from ..constructions import (
    free_product_witness,
    generating_set,
    hopf_witness,
    realize_index_element,
    transposition,
    zipper_defect,
)
from ..elements import FullGroupElement, identity_element, index, index_kernel_vector
from ..errors import AmbientMismatch, SchemaError, SftError
from ..homology import (
    abelianization_group,
    canonical_form_matrix,
    class_in_G,
    classify,
    homology,
)
from ..intlinalg import DEFAULT_ORBIT_BOUND
from . import schemas as s

app = FastAPI(
    title="sftgroups",
    description="Topological full groups of one-sided shifts of finite type",
)


@app.exception_handler(SftError)
async def sft_error_handler(_: Request, exc: SftError):
    status = 400 if exc.category == "validation" else 422
    return JSONResponse(
        status_code=status,
        content={"error": exc.name, "category": exc.category, "detail": exc.detail},
    )


@app.exception_handler(RequestValidationError)
async def schema_error_handler(_: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=400,
        content={"error": "SchemaError", "category": "validation",
                 "detail": str(exc.errors())},
    )


def _element(doc: s.ElementDoc) -> FullGroupElement:
    return ser.element_from_doc(doc.model_dump())


def _element_response(el: FullGroupElement) -> s.ElementResponse:
    doc = ser.element_to_doc(el)
    return s.ElementResponse(ambient=doc["ambient"], pieces=doc["pieces"])


@app.post("/graph/validate", response_model=s.OkResponse)
def validate(req: s.GraphRequest):
    ser.graph_from_doc(req.graph.model_dump())
    return s.OkResponse()


@app.post("/graph/invariants", response_model=s.InvariantsResponse)
def invariants(req: s.GraphRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    h = homology(g)
    unit = class_in_G(ClopenSet.whole_space(g))
    return s.InvariantsResponse(
        h0=h.h0.render(),
        h0_torsion=list(h.h0.torsion),
        h0_free_rank=h.h0.free_rank,
        h1_rank=h.h1_rank,
        bowen_franks=h.bowen_franks.render(),
        det=h.det,
        unit_class=unit.render(),
        abelianization=abelianization_group(g).render(),
    )


@app.post("/graph/canonical-form", response_model=s.CanonicalFormResponse)
def canonical_form(req: s.GraphRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    return s.CanonicalFormResponse(matrix=canonical_form_matrix(g))


@app.post("/classify", response_model=s.ClassifyResponse)
def classify_endpoint(req: s.ClassifyRequest):
    g1 = ser.graph_from_doc(req.graph1.model_dump())
    g2 = ser.graph_from_doc(req.graph2.model_dump())
    y1 = ser.clopen_from_doc(g1, req.ambient1.model_dump() if req.ambient1 else None)
    y2 = ser.clopen_from_doc(g2, req.ambient2.model_dump() if req.ambient2 else None)
    bound = req.orbit_bound if req.orbit_bound is not None else DEFAULT_ORBIT_BOUND
    return s.ClassifyResponse(verdict=classify(g1, y1, g2, y2, orbit_bound=bound))


@app.post("/element/canonical", response_model=s.ElementResponse)
def canonical(req: s.ElementRequest):
    return _element_response(_element(req.element))


@app.post("/element/compose", response_model=s.ElementResponse)
def compose(req: s.ComposeRequest):
    if len(req.elements) < 2:
        raise SchemaError("compose needs at least two elements")
    els = [_element(doc) for doc in req.elements]
    for other in els[1:]:
        if other.graph != els[0].graph:
            raise AmbientMismatch("elements live over different graphs")
    out = els[0]
    for other in els[1:]:
        out = out.compose(other)
    return _element_response(out)


@app.post("/element/inverse", response_model=s.ElementResponse)
def inverse(req: s.ElementRequest):
    return _element_response(_element(req.element).inverse())


@app.post("/element/support", response_model=s.ClopenResponse)
def support(req: s.ElementRequest):
    doc = ser.clopen_to_doc(_element(req.element).support())
    return s.ClopenResponse(words=doc["words"])


@app.post("/element/order", response_model=s.OrderResponse)
def order(req: s.OrderRequest):
    return s.OrderResponse(order=_element(req.element).order_up_to(req.limit))


@app.post("/element/index", response_model=s.IndexResponse)
def index_endpoint(req: s.ElementRequest):
    el = _element(req.element)
    return s.IndexResponse(coords=list(index(el)),
                           kernel_vector=list(index_kernel_vector(el)))


@app.post("/element/zipper", response_model=s.ZipperResponse)
def zipper(req: s.ZipperRequest):
    defect, m = zipper_defect(_element(req.element), step_budget=req.step_budget)
    return s.ZipperResponse(defect=defect, max_length=m)


@app.post("/element/apply", response_model=s.PointResponse)
def apply_point(req: s.ApplyRequest):
    el = _element(req.element)
    pt = ser.point_from_doc(el.graph, req.point.model_dump())
    return s.PointResponse(point=ser.point_to_doc(el.apply(pt)))


@app.post("/construct/hopf", response_model=s.WitnessResponse)
def hopf(req: s.ClopenPairRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    a = ser.clopen_from_doc(g, req.a.model_dump() if req.a else None)
    b = ser.clopen_from_doc(g, req.b.model_dump() if req.b else None)
    table = hopf_witness(a, b)
    return s.WitnessResponse(
        pieces=ser.table_to_doc(table),
        source=ser.clopen_to_doc(table.source()),
        range=ser.clopen_to_doc(table.range_set()),
    )


@app.post("/construct/transposition", response_model=s.ElementResponse)
def transposition_endpoint(req: s.TranspositionRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    a = ser.clopen_from_doc(g, req.a.model_dump() if req.a else None)
    b = ser.clopen_from_doc(g, req.b.model_dump() if req.b else None)
    ambient = ser.clopen_from_doc(g, req.ambient.model_dump() if req.ambient else None)
    return _element_response(transposition(a, b, ambient))


@app.post("/construct/generators", response_model=s.GeneratorsResponse)
def generators(req: s.GeneratorsRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    ambient = ser.clopen_from_doc(g, req.ambient.model_dump() if req.ambient else None)
    elements = generating_set(ambient, step_budget=req.step_budget)
    return s.GeneratorsResponse(
        count=len(elements),
        elements=[_element_response(e) for e in elements],
    )


@app.post("/construct/realize-index", response_model=s.ElementResponse)
def realize(req: s.RealizeIndexRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    basis = homology(g).h1_basis
    if len(req.coords) != len(basis):
        raise SchemaError(
            f"expected {len(basis)} kernel-basis coordinates, got {len(req.coords)}")
    w = [0] * g.n_vertices
    for coeff, vec in zip(req.coords, basis):
        w = [x + coeff * y for x, y in zip(w, vec)]
    return _element_response(realize_index_element(g, w))


@app.post("/construct/free-product", response_model=s.FreeProductResponse)
def free_product(req: s.GraphRequest):
    g = ser.graph_from_doc(req.graph.model_dump())
    alpha, beta = free_product_witness(g)
    return s.FreeProductResponse(alpha=_element_response(alpha),
                                 beta=_element_response(beta))


@app.post("/examples", response_model=s.ExamplesResponse)
def examples():
    rows = examples_table()
    return s.ExamplesResponse(
        rows=[s.ExampleRow(**row) for row in rows],
        all_pass=all(row["passed"] for row in rows),
    )
