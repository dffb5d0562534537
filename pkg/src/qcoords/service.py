"""Stateless HTTP facade over analysis and dynamics.

The server is a pure evaluator: clients own all session state and carry
prev_coordinates themselves when they want continuity across calls.
Coordinate JSON inside responses is produced by the same serializer as the
CLI, so the two interfaces are byte-identical.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request, Response
from fastapi.responses import FileResponse, HTMLResponse
from fastapi.staticfiles import StaticFiles

from .cli import _state_json, trajectory_json
from .coords import build_coordinate_set, from_json, to_json
from .core import make_state
from .dynamics import trajectory
from .errors import ParseError, QcoordsError, SchemaError
from .figures import render_figure
from .gates import parse_gate_list
from .ketparse import NAMED_STATES, parse_state_spec
from .verify import residuals

FRONTEND_DIST = Path(__file__).resolve().parents[2] / "frontend" / "dist"
FRONTEND_INDEX = Path(__file__).resolve().parents[2] / "frontend" / "index.html"

_FALLBACK_PAGE = """<!DOCTYPE html>
<html><head><title>qcoords</title></head>
<body><h1>qcoords service</h1>
<p>The explorer UI is not built. API endpoints:
POST /api/analyze, POST /api/apply, GET /api/named, GET /render.svg?spec=...</p>
</body></html>
"""


def _error(status: int, message: str) -> Response:
    body = json.dumps({"detail": message})
    return Response(content=body, status_code=status, media_type="application/json")


def _parse_amplitudes(raw) -> np.ndarray:
    if not isinstance(raw, list) or not raw:
        raise ParseError("amplitudes must be a non-empty list")
    out = []
    for entry in raw:
        if isinstance(entry, (int, float)):
            out.append(complex(entry))
        elif (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(v, (int, float)) for v in entry)
        ):
            out.append(complex(entry[0], entry[1]))
        else:
            raise ParseError("amplitude entries must be numbers or [re, im] pairs")
    return np.array(out, dtype=complex)


def _state_from_body(body: dict):
    if "state_spec" in body:
        if not isinstance(body["state_spec"], str):
            raise ParseError("state_spec must be a string")
        return parse_state_spec(body["state_spec"])
    if "amplitudes" in body:
        amps = _parse_amplitudes(body["amplitudes"])
        n = {2: 1, 4: 2, 8: 3}.get(len(amps))
        if n is None:
            raise ParseError("amplitudes must have length 2, 4, or 8")
        return make_state(amps, n)
    raise ParseError("request needs either state_spec or amplitudes")


def _residuals_json(values: dict[str, float]) -> str:
    parts = [f'"{k}": {v:.17g}' for k, v in values.items()]
    return "{" + ", ".join(parts) + "}"


def create_app() -> FastAPI:
    app = FastAPI(title="qcoords", docs_url=None, redoc_url=None)

    @app.post("/api/analyze")
    async def analyze(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        try:
            state = _state_from_body(body)
        except ParseError as exc:
            return _error(400, str(exc))
        try:
            cs = build_coordinate_set(state)
            res = residuals(state)
        except QcoordsError as exc:
            return _error(422, str(exc))
        payload = (
            '{"state": %s, "coordinates": %s, "residuals": %s}'
            % (_state_json(state), to_json(cs), _residuals_json(res))
        )
        return Response(content=payload, media_type="application/json")

    @app.post("/api/apply")
    async def apply_gates(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        try:
            if "state" not in body:
                raise ParseError("request needs a state field with amplitudes")
            amps = _parse_amplitudes(body["state"])
            n = {2: 1, 4: 2, 8: 3}.get(len(amps))
            if n is None:
                raise ParseError("state must have length 2, 4, or 8")
            norm = float(np.linalg.norm(amps))
            if abs(norm - 1.0) > 1e-9:
                raise ParseError(f"state is not normalized (norm {norm:.12g})")
            state = make_state(amps, n)
            if "gates" not in body or not isinstance(body["gates"], str):
                raise ParseError("request needs a gates string")
            gates = parse_gate_list(body["gates"])
            steps = body.get("steps_per_gate", 1)
            if not isinstance(steps, int) or steps < 1:
                raise ParseError("steps_per_gate must be a positive integer")
            prev = None
            if body.get("prev_coordinates") is not None:
                prev = from_json(json.dumps(body["prev_coordinates"]))
        except (ParseError, SchemaError) as exc:
            return _error(400, str(exc))
        try:
            points = trajectory(state, gates, steps_per_gate=steps, prev_coordinates=prev)
        except QcoordsError as exc:
            return _error(422, str(exc))
        return Response(content=trajectory_json(points), media_type="application/json")

    @app.get("/api/named")
    async def named() -> Response:
        items = [
            {"name": name, "num_qubits": qubits, "description": desc}
            for name, (desc, qubits, _) in NAMED_STATES.items()
        ]
        return Response(content=json.dumps(items), media_type="application/json")

    @app.get("/render.svg")
    async def render_endpoint(spec: str = "") -> Response:
        if not spec:
            return _error(400, "missing spec query parameter")
        try:
            cs = build_coordinate_set(parse_state_spec(spec))
        except (ParseError, SchemaError) as exc:
            return _error(400, str(exc))
        except QcoordsError as exc:
            return _error(422, str(exc))
        return Response(content=render_figure(cs), media_type="image/svg+xml")

    @app.get("/", response_class=HTMLResponse)
    async def index():
        if FRONTEND_INDEX.exists():
            return FileResponse(FRONTEND_INDEX)
        return HTMLResponse(content=_FALLBACK_PAGE)

    if FRONTEND_DIST.exists():
        app.mount("/ui", StaticFiles(directory=FRONTEND_DIST), name="ui")

    return app
