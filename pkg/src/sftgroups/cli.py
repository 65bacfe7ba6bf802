"""Batch command-line client for the sftgroups service.

By default the CLI drives the FastAPI app in-process, so no server is needed
and output is byte-identical across runs; ``--server URL`` targets a running
instance instead.  File arguments hold the JSON documents described in the
README; ambient/clopen arguments accept a file path or the literal ``X``.

Exit codes: 0 success, 1 examples-table mismatch, 2 validation error,
3 documented operation error (ClassesDiffer etc.).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: SchemaError: cannot read {path}: {exc}")
        raise SystemExit(2)


def _load_clopen(arg: str):
    """Clopen argument: a JSON file path or the literal X (whole space)."""
    if arg == "X":
        return None
    return _load_json(arg)


def _load_element(path: str) -> dict:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "graph" not in doc or "pieces" not in doc:
        print(f"error: SchemaError: {path} is not an element file")
        raise SystemExit(2)
    graph = doc["graph"]
    if isinstance(graph, str):  # path relative to the element file
        graph = _load_json(os.path.join(os.path.dirname(path) or ".", graph))
    ambient = doc.get("ambient")
    if ambient == "X":
        ambient = None
    return {"graph": graph, "ambient": ambient, "pieces": doc["pieces"]}


def _render_word(doc: dict) -> str:
    return f"{doc['anchor']}|{'.'.join(doc.get('edges', []))}"


def _render_pieces(pieces: list[dict]) -> list[str]:
    return [f"{_render_word(p['range'])} <- {_render_word(p['domain'])}"
            for p in pieces]


def _render_clopen(doc: dict) -> str:
    return "{" + ", ".join(_render_word(w) for w in doc["words"]) + "}"


class Client:
    """Thin transport wrapper: in-process app by default, HTTP when --server."""

    def __init__(self, server: str | None):
        if server:
            import httpx

            self._client = httpx.Client(base_url=server)
        else:
            from fastapi.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        resp = self._client.post(path, json=payload)
        return resp.status_code, resp.json()


def _finish(status: int, body: dict, fmt: str, text_lines) -> int:
    """Render a response and return the exit code."""
    if status == 200:
        if fmt == "json":
            print(json.dumps(body, indent=2, sort_keys=True))
        else:
            for line in text_lines(body):
                print(line)
        return 0
    error = body.get("error", "SchemaError")
    category = body.get("category", "validation")
    if fmt == "json":
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        print(f"error: {error}")
        if body.get("detail"):
            print(f"detail: {body['detail']}")
    return 2 if category == "validation" else 3


def _element_lines(body: dict) -> list[str]:
    lines = [f"ambient: {_render_clopen(body['ambient'])}",
             f"pieces: {len(body['pieces'])}"]
    lines += ["  " + line for line in _render_pieces(body["pieces"])]
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sftg",
        description="Invariants and constructive witnesses for topological "
                    "full groups of one-sided shifts of finite type.")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--server", default=None,
                        help="URL of a running service (default: in-process)")
    parser.add_argument("--step-budget", type=int, default=None,
                        help="cap on enumeration steps for zipper/generators")
    parser.add_argument("--orbit-bound", type=int, default=None,
                        help="cap on torsion order for automorphism search")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariants", help="H0, H1 rank, Bowen-Franks, det, abelianization")
    p.add_argument("graph")
    p = sub.add_parser("classify", help="sufficient-condition isomorphism test")
    p.add_argument("graph1")
    p.add_argument("ambient1")
    p.add_argument("graph2")
    p.add_argument("ambient2")
    p = sub.add_parser("compose", help="compose two or more elements (leftmost applied last)")
    p.add_argument("elements", nargs="+")
    for verb, help_text in [("inverse", "invert an element"),
                            ("canonical", "canonical table of an element"),
                            ("support", "clopen support of an element"),
                            ("order", "order up to a bound"),
                            ("index", "index map value in HNF kernel basis coordinates"),
                            ("zipper", "zipper defect and table depth")]:
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("element")
        if verb == "order":
            p.add_argument("--limit", type=int, default=64)
    p = sub.add_parser("apply", help="apply an element to an eventually periodic point")
    p.add_argument("element")
    p.add_argument("point")
    p = sub.add_parser("hopf", help="G-set witness with source A and range B")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("transposition", help="involution swapping A and B inside Y")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("ambient")
    p = sub.add_parser("generators", help="finite generating set of the index kernel")
    p.add_argument("graph")
    p.add_argument("ambient")
    p = sub.add_parser("realize-index", help="element with prescribed index")
    p.add_argument("graph")
    p.add_argument("coords", help="comma-separated HNF-basis coordinates, e.g. 1,-1")
    p = sub.add_parser("free-product", help="order-2/order-3 free product pair")
    p.add_argument("graph")
    p = sub.add_parser("canonical-form", help="canonical-form matrix with the same invariants")
    p.add_argument("graph")
    sub.add_parser("examples", help="recompute the reference invariant table")
    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    warnings.filterwarnings("ignore")
    args = build_parser().parse_args(argv)

    if args.verb == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    client = Client(args.server)
    fmt = args.format

    if args.verb == "invariants":
        status, body = client.post("/graph/invariants",
                                   {"graph": _load_json(args.graph)})
        return _finish(status, body, fmt, lambda b: [
            f"H0: {b['h0']}",
            f"H1 rank: {b['h1_rank']}",
            f"Bowen-Franks: {b['bowen_franks']}",
            f"det: {b['det']}",
            f"unit class: {b['unit_class']}",
            f"abelianization: {b['abelianization']}",
        ])

    if args.verb == "classify":
        payload = {
            "graph1": _load_json(args.graph1), "ambient1": _load_clopen(args.ambient1),
            "graph2": _load_json(args.graph2), "ambient2": _load_clopen(args.ambient2),
        }
        if args.orbit_bound is not None:
            payload["orbit_bound"] = args.orbit_bound
        status, body = client.post("/classify", payload)
        return _finish(status, body, fmt, lambda b: [f"verdict: {b['verdict']}"])

    if args.verb == "compose":
        elements = [_load_element(p) for p in args.elements]
        status, body = client.post("/element/compose", {"elements": elements})
        if status == 200:  # embed the graph so the output is a loadable element file
            body = {**body, "graph": elements[0]["graph"]}
        return _finish(status, body, fmt, _element_lines)

    if args.verb in ("inverse", "canonical"):
        path = "/element/inverse" if args.verb == "inverse" else "/element/canonical"
        element = _load_element(args.element)
        status, body = client.post(path, {"element": element})
        if status == 200:
            body = {**body, "graph": element["graph"]}
        return _finish(status, body, fmt, _element_lines)

    if args.verb == "support":
        status, body = client.post("/element/support",
                                   {"element": _load_element(args.element)})
        return _finish(status, body, fmt,
                       lambda b: [f"support: {_render_clopen(b)}"])

    if args.verb == "order":
        status, body = client.post("/element/order",
                                   {"element": _load_element(args.element),
                                    "limit": args.limit})
        return _finish(status, body, fmt, lambda b: [
            f"order: {b['order'] if b['order'] is not None else 'unknown'}"])

    if args.verb == "index":
        status, body = client.post("/element/index",
                                   {"element": _load_element(args.element)})

        def lines(b):
            coords = b["coords"]
            shown = "0" if not any(coords) else "(" + ", ".join(map(str, coords)) + ")"
            return [f"index: {shown}",
                    f"kernel vector: ({', '.join(map(str, b['kernel_vector']))})"]

        return _finish(status, body, fmt, lines)

    if args.verb == "zipper":
        payload = {"element": _load_element(args.element)}
        if args.step_budget is not None:
            payload["step_budget"] = args.step_budget
        status, body = client.post("/element/zipper", payload)
        return _finish(status, body, fmt, lambda b: [
            f"defect: {b['defect']}", f"max length: {b['max_length']}"])

    if args.verb == "apply":
        element = _load_element(args.element)
        point = _load_json(args.point)
        status, body = client.post("/element/apply",
                                   {"element": element, "point": point})
        return _finish(status, body, fmt, lambda b: [
            "point: "
            f"{_render_word(b['point']['preperiod'])}"
            f"({_render_word(b['point']['cycle'])})*"])

    if args.verb == "hopf":
        payload = {"graph": _load_json(args.graph),
                   "a": _load_clopen(args.a), "b": _load_clopen(args.b)}
        status, body = client.post("/construct/hopf", payload)
        return _finish(status, body, fmt, lambda b: [
            f"source: {_render_clopen(b['source'])}",
            f"range: {_render_clopen(b['range'])}",
            f"pieces: {len(b['pieces'])}",
            *("  " + line for line in _render_pieces(b["pieces"])),
        ])

    if args.verb == "transposition":
        payload = {"graph": _load_json(args.graph),
                   "a": _load_clopen(args.a), "b": _load_clopen(args.b),
                   "ambient": _load_clopen(args.ambient)}
        status, body = client.post("/construct/transposition", payload)
        if status == 200:
            body = {**body, "graph": payload["graph"]}
        return _finish(status, body, fmt, _element_lines)

    if args.verb == "generators":
        payload = {"graph": _load_json(args.graph),
                   "ambient": _load_clopen(args.ambient)}
        if args.step_budget is not None:
            payload["step_budget"] = args.step_budget
        status, body = client.post("/construct/generators", payload)

        def lines(b):
            out = [f"count: {b['count']}"]
            for el in b["elements"]:
                out.append("  " + "; ".join(_render_pieces(el["pieces"])))
            return out

        return _finish(status, body, fmt, lines)

    if args.verb == "realize-index":
        try:
            coords = [int(x) for x in args.coords.replace(",", " ").split()]
        except ValueError:
            print("error: SchemaError: coordinates must be integers")
            return 2
        graph_doc = _load_json(args.graph)
        status, body = client.post("/construct/realize-index",
                                   {"graph": graph_doc, "coords": coords})
        if status == 200:
            body = {**body, "graph": graph_doc}
        return _finish(status, body, fmt, _element_lines)

    if args.verb == "free-product":
        status, body = client.post("/construct/free-product",
                                   {"graph": _load_json(args.graph)})
        return _finish(status, body, fmt, lambda b: [
            "alpha:",
            *("  " + line for line in _render_pieces(b["alpha"]["pieces"])),
            "beta:",
            *("  " + line for line in _render_pieces(b["beta"]["pieces"])),
        ])

    if args.verb == "canonical-form":
        status, body = client.post("/graph/canonical-form",
                                   {"graph": _load_json(args.graph)})
        return _finish(status, body, fmt,
                       lambda b: [f"matrix: {json.dumps(b['matrix'])}"])

    if args.verb == "examples":
        status, body = client.post("/examples", {})
        if status != 200:
            return _finish(status, body, fmt, lambda b: [])
        if fmt == "json":
            print(json.dumps(body, indent=2, sort_keys=True))
        else:
            for row in body["rows"]:
                got = row["got"]
                cells = [f"H0: {got['h0']}", f"H1 rank: {got['h1_rank']}",
                         f"det: {got['det']}", f"unit class: {got['unit_class']}",
                         f"abelianization: {got['abelianization']}"]
                if "classify" in got:
                    cells.append(f"classify: {got['classify']}")
                flag = "PASS" if row["passed"] else "FAIL"
                print(f"{row['name']}: " + " | ".join(cells) + f" | {flag}")
            print("all rows pass" if body["all_pass"] else "some rows FAIL")
        return 0 if body["all_pass"] else 1

    raise AssertionError(f"unhandled verb {args.verb}")


if __name__ == "__main__":
    sys.exit(main())
