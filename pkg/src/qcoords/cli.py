"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 numeric failure (a residual above
tolerance or an unrealizable reconstruction).
"""
from __future__ import annotations

import argparse
import sys

from .coords import build_coordinate_set, from_json, to_json
from .dynamics import trajectory
from .errors import ParseError, QcoordsError, SchemaError, Unrealizable
from .figures import render_figure
from .gates import parse_gate_list
from .ketparse import NAMED_STATES, parse_state_spec
from .verify import TOLERANCES, residuals, residuals_pass

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NUMERIC = 3


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _state_json(state) -> str:
    return "[" + ", ".join(
        f"[{a.real:.17g}, {a.imag:.17g}]" for a in state.amplitudes
    ) + "]"


def trajectory_json(points) -> str:
    items = []
    for p in points:
        items.append(
            '{"step_index": %d, "state": %s, "coordinates": %s}'
            % (p.step_index, _state_json(p.state), to_json(p.coords))
        )
    return '{"trajectory": [' + ", ".join(items) + "]}"


def _cmd_analyze(args) -> int:
    state = parse_state_spec(args.state_spec)
    cs = build_coordinate_set(state)
    doc = to_json(cs)
    if args.json:
        _write(args.json, doc)
    if args.svg:
        _write(args.svg, render_figure(cs))
    if not args.json and not args.svg:
        sys.stdout.write(doc + "\n")
    return EXIT_OK


def _cmd_render(args) -> int:
    with open(args.coords, "r", encoding="utf-8") as fh:
        cs = from_json(fh.read())
    _write(args.svg, render_figure(cs))
    return EXIT_OK


def _cmd_named(args) -> int:
    for name, (desc, qubits, _) in NAMED_STATES.items():
        sys.stdout.write(f"{name:10s} {qubits} qubit(s)  {desc}\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    state = parse_state_spec(args.state_spec)
    values = residuals(state)
    width = max(len(k) for k in values)
    ok = True
    for name, value in values.items():
        tol = TOLERANCES.get(name, 1e-9)
        status = "ok" if value <= tol else "FAIL"
        if value > tol:
            ok = False
        sys.stdout.write(f"{name:<{width}}  {value:.3e}  (tol {tol:.0e})  {status}\n")
    return EXIT_OK if ok else EXIT_NUMERIC


def _cmd_apply(args) -> int:
    state = parse_state_spec(args.state_spec)
    gates = parse_gate_list(args.gates)
    points = trajectory(state, gates, steps_per_gate=args.steps)
    doc = trajectory_json(points)
    if args.json:
        _write(args.json, doc)
    else:
        sys.stdout.write(doc + "\n")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcoords",
        description="Canonical coordinates of 2- and 3-qubit pure states: "
        "Bloch frames plus complex concurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decompose a state and emit coordinates")
    p.add_argument("state_spec", help="named state, ket expression, or [amplitude list]")
    p.add_argument("--json", metavar="OUT", help="write coordinate JSON here ('-' for stdout)")
    p.add_argument("--svg", metavar="OUT", help="write an SVG figure here")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("render", help="render a coordinate JSON file to SVG")
    p.add_argument("coords", help="path to a coordinate JSON document")
    p.add_argument("--svg", metavar="OUT", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("named", help="list named states")
    p.add_argument("--list", action="store_true", help="(default) list the registry")
    p.set_defaults(func=_cmd_named)

    p = sub.add_parser("verify", help="run oracle cross-checks and print residuals")
    p.add_argument("state_spec")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("apply", help="apply a gate list and emit the trajectory")
    p.add_argument("state_spec")
    p.add_argument("--gates", required=True, help="e.g. 'H@1, CNOT@1:2, RZ(pi/2)@2'")
    p.add_argument("--steps", type=int, default=1, help="substeps per gate (default 1)")
    p.add_argument("--json", metavar="OUT", help="write trajectory JSON here")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("serve", help="serve the HTTP API and explorer UI")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8077)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SchemaError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    except Unrealizable as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return EXIT_NUMERIC
    except QcoordsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
