"""Local JSON service over HTTP.

All endpoints are POST with JSON bodies in the wire format documented in
docs/wire-format.md. Domain failures (evaluation errors, endpoint mismatches,
parse errors in submitted text) come back as 200 responses with an "error"
field, so a client can render them; malformed requests get 4xx. The service
is stateless and CORS-open for the local playground.
"""
from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .delta import EndpointMismatch, apply, diff, src, tgt
from .jsonio import (
    Json,
    WireFormatError,
    delta_from_json,
    delta_to_json,
    outcome_to_json,
    term_from_json,
    term_to_json,
)
from .parser import ParseError, parse_delta, parse_term
from .semantics import DEFAULT_FUEL, DeltaEvalError, delta_eval, eval_term


class _BadRequest(Exception):
    pass


def _fuel(body: Json) -> int:
    fuel = body.get("fuel", DEFAULT_FUEL)
    if not isinstance(fuel, int) or fuel <= 0:
        raise _BadRequest("fuel must be a positive integer")
    return fuel


def _required(body: Json, field: str) -> object:
    if field not in body:
        raise _BadRequest(f"missing field {field!r}")
    return body[field]


def _handle_eval(body: Json) -> Json:
    term = term_from_json(_required(body, "term"), "$.term")
    return {"outcome": outcome_to_json(eval_term(term, _fuel(body)))}


def _handle_delta_eval(body: Json) -> Json:
    d = delta_from_json(_required(body, "delta"), "$.delta")
    source, target = src(d), tgt(d)
    out: Json = {"src": term_to_json(source), "tgt": term_to_json(target)}
    try:
        dv = delta_eval(d, _fuel(body))
    except DeltaEvalError as err:
        out["error"] = str(err)
        return out
    out["value_delta"] = delta_to_json(dv)
    out["src_value"] = term_to_json(src(dv))
    out["tgt_value"] = term_to_json(tgt(dv))
    return out


def _handle_diff(body: Json) -> Json:
    before = term_from_json(_required(body, "from"), "$.from")
    after = term_from_json(_required(body, "to"), "$.to")
    return {"delta": delta_to_json(diff(before, after))}


def _handle_apply(body: Json) -> Json:
    term = term_from_json(_required(body, "term"), "$.term")
    d = delta_from_json(_required(body, "delta"), "$.delta")
    try:
        return {"term": term_to_json(apply(term, d))}
    except EndpointMismatch as err:
        return {"error": str(err)}


def _handle_parse(body: Json) -> Json:
    text = _required(body, "text")
    kind = _required(body, "kind")
    if not isinstance(text, str):
        raise _BadRequest("text must be a string")
    if kind not in ("term", "delta"):
        raise _BadRequest("kind must be term or delta")
    try:
        if kind == "term":
            return {"ast": term_to_json(parse_term(text))}
        return {"ast": delta_to_json(parse_delta(text))}
    except ParseError as err:
        return {"error": {"message": err.message, "line": err.line, "col": err.col}}


_ROUTES = {
    "/eval": _handle_eval,
    "/delta-eval": _handle_delta_eval,
    "/diff": _handle_diff,
    "/apply": _handle_apply,
    "/parse": _handle_parse,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "ilc/0.1"

    def log_message(self, fmt: str, *args: object) -> None:
        pass

    def _respond(self, status: int, payload: Json) -> None:
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_OPTIONS(self) -> None:  # noqa: N802 (http.server naming)
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_POST(self) -> None:  # noqa: N802 (http.server naming)
        handler = _ROUTES.get(self.path)
        if handler is None:
            self._respond(404, {"error": f"no such endpoint: {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            if not isinstance(body, dict):
                raise _BadRequest("request body must be a JSON object")
            self._respond(200, handler(body))
        except (_BadRequest, WireFormatError, json.JSONDecodeError) as err:
            self._respond(400, {"error": str(err)})
        except Exception as err:  # pragma: no cover - last-resort guard
            self._respond(500, {"error": f"internal error: {err}"})


def make_server(port: int = 0, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Bind a server; port 0 picks a free one (server_address has the real port)."""
    return ThreadingHTTPServer((host, port), _Handler)


def serve(port: int = 7411) -> None:
    """Serve until interrupted."""
    server = make_server(port)
    host, bound = server.server_address[0], server.server_address[1]
    print(f"ilc service on http://{host}:{bound}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
