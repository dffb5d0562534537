"""Coordinate payloads: Bloch points, frames, concurrences, and their JSON form.

JSON schema (top-level keys, in order): schema_version, num_qubits,
bloch [[x,y,z]...], frames [[phi,theta]...], lambda [], alpha [],
concurrences {"c12": [re,im], ...} (two-qubit payloads use the single key
"c"), gauge_notes [].  Numbers carry 17 significant digits so the round
trip is bit-exact.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .core import BlochPoint, StateVector, bloch_vector, partial_trace
from .errors import DimensionMismatch, ParseError, SchemaError
from .gsd3 import (
    ComplexConcurrenceSet,
    ThreeQubitCoordinates,
    assemble3,
    complex_concurrences3,
    gsd_decompose,
    invert_candidates,
)
from .schmidt2 import TwoQubitCoordinates, complex_concurrence2, schmidt_decompose
from .su2 import LocalFrame, bloch_angles_of_ket
from .tolerances import EPS_MATCH

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class TwoQubitSummary:
    lambda0: float
    lambda1: float
    alpha: float
    concurrence: complex


@dataclass(frozen=True)
class ThreeQubitSummary:
    lam: tuple[float, float, float, float, float]
    alpha: tuple[float, float, float, float]
    c12: complex
    c13: complex
    c23: complex
    c123: complex


@dataclass(frozen=True)
class CoordinateSet:
    num_qubits: int
    bloch: tuple[BlochPoint, ...]
    frames: tuple[LocalFrame, ...]
    two_q: TwoQubitSummary | None = None
    three_q: ThreeQubitSummary | None = None
    gauge_notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        validate_coordinate_set(self)


def validate_coordinate_set(cs: CoordinateSet) -> None:
    if cs.num_qubits not in (1, 2, 3):
        raise SchemaError(f"num_qubits must be 1..3, got {cs.num_qubits}", field="num_qubits")
    if len(cs.bloch) != cs.num_qubits:
        raise SchemaError("bloch entry count must match num_qubits", field="bloch")
    if len(cs.frames) != cs.num_qubits:
        raise SchemaError("frames entry count must match num_qubits", field="frames")
    for b in cs.bloch:
        if b.norm() > 1.0 + 1e-10:
            raise SchemaError("Bloch vector leaves the unit ball", field="bloch")
    if cs.num_qubits == 1:
        if cs.two_q is not None or cs.three_q is not None:
            raise SchemaError("single-qubit payloads carry no concurrence block", field="concurrences")
        return
    if cs.num_qubits == 2:
        if cs.two_q is None or cs.three_q is not None:
            raise SchemaError("two-qubit payload requires exactly the two_q block", field="concurrences")
        t = cs.two_q
        want = 2.0 * complex(math.cos(t.alpha), math.sin(t.alpha)) * t.lambda0 * t.lambda1
        if abs(want - t.concurrence) > EPS_MATCH:
            raise SchemaError("concurrence does not match lambda/alpha fields", field="concurrences.c")
        return
    if cs.three_q is None or cs.two_q is not None:
        raise SchemaError("three-qubit payload requires exactly the three_q block", field="concurrences")
    t = cs.three_q
    coords = ThreeQubitCoordinates(lam=t.lam, alpha=t.alpha, frames=cs.frames)
    want = complex_concurrences3(coords)
    for name, got, expect in zip(
        ("c12", "c13", "c23", "c123"),
        (t.c12, t.c13, t.c23, t.c123),
        want.as_tuple(),
    ):
        if abs(got - expect) > EPS_MATCH:
            raise SchemaError(
                f"{name} does not match the lambda/alpha fields", field=f"concurrences.{name}"
            )


def _bloch_points(state: StateVector) -> tuple[BlochPoint, ...]:
    return tuple(
        bloch_vector(partial_trace(state, (q,))) for q in range(1, state.num_qubits + 1)
    )


def coordinate_set_from_two(
    state: StateVector, coords: TwoQubitCoordinates, extra_notes: tuple[str, ...] = ()
) -> CoordinateSet:
    notes = list(extra_notes)
    if coords.maximal_gauge_fixed and "maximal_gauge_fixed" not in notes:
        notes.append("maximal_gauge_fixed")
    return CoordinateSet(
        num_qubits=2,
        bloch=_bloch_points(state),
        frames=(coords.frame1, coords.frame2),
        two_q=TwoQubitSummary(
            lambda0=coords.lambda0,
            lambda1=coords.lambda1,
            alpha=coords.alpha,
            concurrence=complex_concurrence2(coords),
        ),
        gauge_notes=tuple(notes),
    )


def coordinate_set_from_three(
    state: StateVector, coords: ThreeQubitCoordinates, extra_notes: tuple[str, ...] = ()
) -> CoordinateSet:
    notes = list(extra_notes)
    if coords.degenerate_family and "degenerate_family_representative" not in notes:
        notes.append("degenerate_family_representative")
    cc = complex_concurrences3(coords)
    return CoordinateSet(
        num_qubits=3,
        bloch=_bloch_points(state),
        frames=coords.frames,
        three_q=ThreeQubitSummary(
            lam=coords.lam, alpha=coords.alpha,
            c12=cc.c12, c13=cc.c13, c23=cc.c23, c123=cc.c123,
        ),
        gauge_notes=tuple(notes),
    )


def build_coordinate_set(state: StateVector) -> CoordinateSet:
    """Full visualization payload: dispatches on the qubit count."""
    if state.num_qubits == 1:
        return CoordinateSet(
            num_qubits=1,
            bloch=_bloch_points(state),
            frames=(bloch_angles_of_ket(state.amplitudes),),
        )
    if state.num_qubits == 2:
        return coordinate_set_from_two(state, schmidt_decompose(state))
    if state.num_qubits == 3:
        return coordinate_set_from_three(state, gsd_decompose(state))
    raise DimensionMismatch(f"unsupported qubit count {state.num_qubits}")


def two_coordinates(cs: CoordinateSet) -> TwoQubitCoordinates:
    """Recover the coordinate tuple of a two-qubit payload."""
    if cs.two_q is None:
        raise SchemaError("payload has no two-qubit block", field="concurrences")
    return TwoQubitCoordinates(
        lambda0=cs.two_q.lambda0,
        lambda1=cs.two_q.lambda1,
        alpha=cs.two_q.alpha,
        frame1=cs.frames[0],
        frame2=cs.frames[1],
        maximal_gauge_fixed="maximal_gauge_fixed" in cs.gauge_notes,
    )


def three_coordinates(cs: CoordinateSet) -> ThreeQubitCoordinates:
    if cs.three_q is None:
        raise SchemaError("payload has no three-qubit block", field="concurrences")
    return ThreeQubitCoordinates(
        lam=cs.three_q.lam,
        alpha=cs.three_q.alpha,
        frames=cs.frames,
        degenerate_family="degenerate_family_representative" in cs.gauge_notes,
    )


def concurrence_set(cs: CoordinateSet) -> ComplexConcurrenceSet:
    if cs.three_q is None:
        raise SchemaError("payload has no three-qubit block", field="concurrences")
    t = cs.three_q
    return ComplexConcurrenceSet(c12=t.c12, c13=t.c13, c23=t.c23, c123=t.c123)


def invert_coordinate_set(cs: CoordinateSet) -> ThreeQubitCoordinates:
    """Reconstruct three-qubit coordinates from a full payload.

    Unlike the frames-only inversion, the Bloch points disambiguate between
    the several coordinate tuples that can share one concurrence set: their
    lengths agree by monogamy, but their directions differ between
    collision branches.
    """
    candidates = invert_candidates(concurrence_set(cs), cs.frames)
    if len(candidates) == 1:
        return candidates[0]
    best = None
    best_dev = math.inf
    for cand in candidates:
        state = assemble3(cand)
        dev = 0.0
        for q, want in enumerate(cs.bloch, start=1):
            got = bloch_vector(partial_trace(state, (q,)))
            dev += math.sqrt(
                (got.x - want.x) ** 2 + (got.y - want.y) ** 2 + (got.z - want.z) ** 2
            )
        if dev < best_dev:
            best_dev = dev
            best = cand
    return best


def _fmt(x: float) -> str:
    if not math.isfinite(x):
        raise SchemaError("non-finite number in payload")
    return f"{float(x):.17g}"


def _fmt_list(values) -> str:
    return "[" + ", ".join(_fmt(v) for v in values) + "]"


def _fmt_nested(rows) -> str:
    return "[" + ", ".join(_fmt_list(r) for r in rows) + "]"


def to_json(cs: CoordinateSet) -> str:
    """Serialize with fixed key order and 17-significant-digit floats."""
    validate_coordinate_set(cs)
    bloch = _fmt_nested((b.x, b.y, b.z) for b in cs.bloch)
    frames = _fmt_nested((f.phi, f.theta) for f in cs.frames)
    if cs.two_q is not None:
        lam = _fmt_list((cs.two_q.lambda0, cs.two_q.lambda1))
        alpha = _fmt_list((cs.two_q.alpha,))
        conc = '{"c": ' + _fmt_list((cs.two_q.concurrence.real, cs.two_q.concurrence.imag)) + "}"
    elif cs.three_q is not None:
        lam = _fmt_list(cs.three_q.lam)
        alpha = _fmt_list(cs.three_q.alpha)
        parts = []
        for name in ("c12", "c13", "c23", "c123"):
            z = getattr(cs.three_q, name)
            parts.append(f'"{name}": ' + _fmt_list((z.real, z.imag)))
        conc = "{" + ", ".join(parts) + "}"
    else:
        lam, alpha, conc = "[]", "[]", "{}"
    notes = "[" + ", ".join(json.dumps(n) for n in cs.gauge_notes) + "]"
    lines = [
        "{",
        f'  "schema_version": {SCHEMA_VERSION},',
        f'  "num_qubits": {cs.num_qubits},',
        f'  "bloch": {bloch},',
        f'  "frames": {frames},',
        f'  "lambda": {lam},',
        f'  "alpha": {alpha},',
        f'  "concurrences": {conc},',
        f'  "gauge_notes": {notes}',
        "}",
    ]
    return "\n".join(lines)


def _require(doc: dict, key: str, kind) -> object:
    if key not in doc:
        raise SchemaError(f"missing required field {key!r}", field=key)
    val = doc[key]
    if not isinstance(val, kind):
        raise SchemaError(f"field {key!r} has the wrong type", field=key)
    return val


def _number_pair(obj, key: str) -> complex:
    if (
        not isinstance(obj, list)
        or len(obj) != 2
        or not all(isinstance(v, (int, float)) for v in obj)
    ):
        raise SchemaError(f"field {key!r} must be a [re, im] pair", field=key)
    return complex(float(obj[0]), float(obj[1]))


def from_json(text: str) -> CoordinateSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})",
            line=exc.lineno,
            column=exc.colno,
        ) from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object")
    version = _require(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version}", field="schema_version")
    n = _require(doc, "num_qubits", int)
    if n not in (1, 2, 3):
        raise SchemaError(f"num_qubits must be 1..3, got {n}", field="num_qubits")

    bloch_raw = _require(doc, "bloch", list)
    frames_raw = _require(doc, "frames", list)
    lam_raw = _require(doc, "lambda", list)
    alpha_raw = _require(doc, "alpha", list)
    conc_raw = _require(doc, "concurrences", dict)
    notes_raw = _require(doc, "gauge_notes", list)

    def triple(row, key):
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError(f"entries of {key!r} must be [x, y, z]", field=key)
        return BlochPoint(*(float(v) for v in row))

    def pair(row, key):
        if not isinstance(row, list) or len(row) != 2:
            raise SchemaError(f"entries of {key!r} must be [phi, theta]", field=key)
        try:
            return LocalFrame(float(row[0]), float(row[1]))
        except ValueError as exc:
            raise SchemaError(str(exc), field=key) from exc

    bloch = tuple(triple(r, "bloch") for r in bloch_raw)
    frames = tuple(pair(r, "frames") for r in frames_raw)
    notes = tuple(str(s) for s in notes_raw)

    two_q = None
    three_q = None
    if n == 2:
        if len(lam_raw) != 2 or len(alpha_raw) != 1:
            raise SchemaError("two-qubit payload needs lambda[2] and alpha[1]", field="lambda")
        if set(conc_raw) != {"c"}:
            raise SchemaError('two-qubit concurrences must use the single key "c"', field="concurrences")
        two_q = TwoQubitSummary(
            lambda0=float(lam_raw[0]),
            lambda1=float(lam_raw[1]),
            alpha=float(alpha_raw[0]),
            concurrence=_number_pair(conc_raw["c"], "concurrences.c"),
        )
    elif n == 3:
        if len(lam_raw) != 5 or len(alpha_raw) != 4:
            raise SchemaError("three-qubit payload needs lambda[5] and alpha[4]", field="lambda")
        if set(conc_raw) != {"c12", "c13", "c23", "c123"}:
            raise SchemaError("three-qubit concurrences must have keys c12, c13, c23, c123", field="concurrences")
        three_q = ThreeQubitSummary(
            lam=tuple(float(v) for v in lam_raw),
            alpha=tuple(float(v) for v in alpha_raw),
            c12=_number_pair(conc_raw["c12"], "concurrences.c12"),
            c13=_number_pair(conc_raw["c13"], "concurrences.c13"),
            c23=_number_pair(conc_raw["c23"], "concurrences.c23"),
            c123=_number_pair(conc_raw["c123"], "concurrences.c123"),
        )
    else:
        if lam_raw or alpha_raw or conc_raw:
            raise SchemaError("single-qubit payloads carry empty lambda/alpha/concurrences", field="lambda")

    try:
        return CoordinateSet(
            num_qubits=n, bloch=bloch, frames=frames,
            two_q=two_q, three_q=three_q, gauge_notes=notes,
        )
    except SchemaError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
