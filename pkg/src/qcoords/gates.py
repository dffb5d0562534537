"""Named parametric gates, the gate-list text format, and fractional powers.

Gate lists are comma-separated `NAME(params)@targets` items with targets
separated by colons, e.g. `H@1, CNOT@1:2, RZ(1.5708)@3`.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .core import StateVector, apply_unitary
from .errors import BadSubsystem, ParseError, UnknownName
from .ketparse import parse_angle

_SQ2 = 1.0 / math.sqrt(2.0)

# name -> (qubit arity, parameter count)
GATE_SIGNATURES = {
    "X": (1, 0), "Y": (1, 0), "Z": (1, 0), "H": (1, 0),
    "S": (1, 0), "T": (1, 0),
    "RX": (1, 1), "RY": (1, 1), "RZ": (1, 1), "PHASE": (1, 1),
    "CNOT": (2, 0), "CZ": (2, 0), "CPHASE": (2, 1),
}


@dataclass(frozen=True)
class Gate:
    name: str
    params: tuple[float, ...]
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.name not in GATE_SIGNATURES:
            raise UnknownName(f"unknown gate name {self.name!r}")
        arity, nparams = GATE_SIGNATURES[self.name]
        if len(self.targets) != arity:
            raise BadSubsystem(
                f"gate {self.name} acts on {arity} qubit(s), got targets {self.targets}"
            )
        if len(set(self.targets)) != len(self.targets):
            raise BadSubsystem(f"repeated target in {self.targets}")
        if len(self.params) != nparams:
            raise ParseError(
                f"gate {self.name} takes {nparams} parameter(s), got {len(self.params)}"
            )


def gate_matrix(gate: Gate) -> np.ndarray:
    n = gate.name
    if n == "X":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if n == "Y":
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if n == "Z":
        return np.array([[1, 0], [0, -1]], dtype=complex)
    if n == "H":
        return np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex)
    if n == "S":
        return np.array([[1, 0], [0, 1j]], dtype=complex)
    if n == "T":
        return np.array([[1, 0], [0, cmath.exp(0.25j * math.pi)]], dtype=complex)
    if n == "RX":
        t = gate.params[0] / 2.0
        return np.array(
            [[math.cos(t), -1j * math.sin(t)], [-1j * math.sin(t), math.cos(t)]],
            dtype=complex,
        )
    if n == "RY":
        t = gate.params[0] / 2.0
        return np.array(
            [[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]], dtype=complex
        )
    if n == "RZ":
        t = gate.params[0] / 2.0
        return np.array(
            [[cmath.exp(-1j * t), 0], [0, cmath.exp(1j * t)]], dtype=complex
        )
    if n == "PHASE":
        return np.array([[1, 0], [0, cmath.exp(1j * gate.params[0])]], dtype=complex)
    if n == "CNOT":
        return np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        )
    if n == "CZ":
        return np.diag([1, 1, 1, -1]).astype(complex)
    if n == "CPHASE":
        return np.diag([1, 1, 1, cmath.exp(1j * gate.params[0])]).astype(complex)
    raise UnknownName(f"unknown gate name {n!r}")


_ITEM_RE = re.compile(
    r"^\s*(?P<name>[A-Za-z]+)\s*(?:\((?P<params>[^)]*)\))?\s*@\s*(?P<targets>\d+(?:\s*:\s*\d+)*)\s*$"
)


def parse_gate_list(text: str) -> list[Gate]:
    """Parse the comma-separated gate-list format."""
    gates = []
    items = [item for item in text.split(",") if item.strip()]
    if not items:
        raise ParseError("empty gate list")
    for item in items:
        m = _ITEM_RE.match(item)
        if m is None:
            raise ParseError(f"malformed gate item {item.strip()!r}")
        name = m.group("name").upper()
        if name not in GATE_SIGNATURES:
            raise UnknownName(f"unknown gate name {m.group('name').strip()!r}")
        params: tuple[float, ...] = ()
        raw = m.group("params")
        if raw is not None and raw.strip():
            params = (parse_angle(raw),)
        targets = tuple(int(t) for t in m.group("targets").split(":"))
        gates.append(Gate(name=name, params=params, targets=targets))
    return gates


def format_gate(gate: Gate) -> str:
    params = f"({', '.join(f'{p:.17g}' for p in gate.params)})" if gate.params else ""
    return f"{gate.name}{params}@{':'.join(str(t) for t in gate.targets)}"


def fractional_power(u: np.ndarray, s: float) -> np.ndarray:
    """u**s through the Schur form; exactly unitary for unitary input."""
    if s == 1.0:
        return u
    t, z = scipy.linalg.schur(np.asarray(u, dtype=complex), output="complex")
    w = np.diag(t)
    frac = np.exp(s * np.log(w))
    return z @ np.diag(frac) @ z.conj().T


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    return apply_unitary(state, gate.targets, gate_matrix(gate))
