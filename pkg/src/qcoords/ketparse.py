"""Text input for states: ket expressions, amplitude lists, and named states.

Grammar (EBNF):
    expr    := ['-'] product (('+'|'-') product)*
    product := factor (factor | '*' factor | '/' factor)*
    factor  := scalar | ket | '(' expr ')'
    scalar  := NUMBER | 'i' | 'pi' | 'sqrt' '(' expr ')'
    ket     := '|' bit+ '>'        bit in {0, 1, +, -}

Juxtaposed kets are tensor products; the whole expression is normalized
after evaluation, so overall scale factors are cosmetic.
"""
from __future__ import annotations

import math
import re

import numpy as np

from .core import StateVector, make_state
from .errors import ParseError, UnknownName, ZeroVector

_KET_SINGLE = {
    "0": np.array([1.0, 0.0], dtype=complex),
    "1": np.array([0.0, 1.0], dtype=complex),
    "+": np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0),
    "-": np.array([1.0, -1.0], dtype=complex) / math.sqrt(2.0),
}

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<ket>\|[01+\-]+>)"
    r"|(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[()+\-*/,\[\]]))"
)


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(
                f"unexpected character {text[pos:].strip()[0]!r} at position {pos}",
                position=pos,
            )
        for kind in ("ket", "number", "name", "op"):
            val = m.group(kind)
            if val is not None:
                tokens.append(_Token(kind, val, m.start(kind)))
                break
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Value:
    """Either a complex scalar or a ket vector with a qubit count."""

    def __init__(self, scalar=None, vector=None, qubits=0):
        self.scalar = scalar
        self.vector = vector
        self.qubits = qubits

    @property
    def is_scalar(self):
        return self.vector is None


def _mul(a: _Value, b: _Value, pos: int) -> _Value:
    if a.is_scalar and b.is_scalar:
        return _Value(scalar=a.scalar * b.scalar)
    if a.is_scalar:
        return _Value(vector=a.scalar * b.vector, qubits=b.qubits)
    if b.is_scalar:
        return _Value(vector=b.scalar * a.vector, qubits=a.qubits)
    if a.qubits + b.qubits > 3:
        raise ParseError(f"tensor product exceeds 3 qubits at position {pos}", position=pos)
    return _Value(vector=np.kron(a.vector, b.vector), qubits=a.qubits + b.qubits)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.text != text:
            raise ParseError(
                f"expected {text!r} at position {tok.pos}, found {tok.text or 'end of input'!r}",
                position=tok.pos,
            )
        return self.advance()

    def parse_expr(self) -> _Value:
        negate = False
        if self.peek().text == "-":
            self.advance()
            negate = True
        value = self.parse_product()
        if negate:
            value = _mul(_Value(scalar=-1.0 + 0.0j), value, self.peek().pos)
        while self.peek().text in ("+", "-"):
            op = self.advance()
            rhs = self.parse_product()
            if op.text == "-":
                rhs = _mul(_Value(scalar=-1.0 + 0.0j), rhs, op.pos)
            value = self._add(value, rhs, op.pos)
        return value

    def _add(self, a: _Value, b: _Value, pos: int) -> _Value:
        if a.is_scalar and b.is_scalar:
            return _Value(scalar=a.scalar + b.scalar)
        if a.is_scalar or b.is_scalar or a.qubits != b.qubits:
            raise ParseError(
                f"cannot add terms with different qubit counts at position {pos}",
                position=pos,
            )
        return _Value(vector=a.vector + b.vector, qubits=a.qubits)

    def parse_product(self) -> _Value:
        value = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.text == "*":
                self.advance()
                value = _mul(value, self.parse_factor(), tok.pos)
            elif tok.text == "/":
                self.advance()
                denom = self.parse_factor()
                if not denom.is_scalar:
                    raise ParseError(
                        f"division by a ket at position {tok.pos}", position=tok.pos
                    )
                if abs(denom.scalar) < 1e-300:
                    raise ParseError(f"division by zero at position {tok.pos}", position=tok.pos)
                value = _mul(value, _Value(scalar=1.0 / denom.scalar), tok.pos)
            elif tok.kind in ("ket", "number") or tok.text in ("(", "i", "pi", "sqrt"):
                value = _mul(value, self.parse_factor(), tok.pos)
            else:
                return value

    def parse_factor(self) -> _Value:
        tok = self.peek()
        if tok.kind == "ket":
            self.advance()
            bits = tok.text[1:-1]
            if len(bits) > 3:
                raise ParseError(
                    f"ket {tok.text!r} exceeds 3 qubits at position {tok.pos}",
                    position=tok.pos,
                )
            vec = np.array([1.0 + 0.0j])
            for b in bits:
                vec = np.kron(vec, _KET_SINGLE[b])
            return _Value(vector=vec, qubits=len(bits))
        if tok.kind == "number":
            self.advance()
            return _Value(scalar=complex(float(tok.text)))
        if tok.text == "i":
            self.advance()
            return _Value(scalar=1.0j)
        if tok.text == "pi":
            self.advance()
            return _Value(scalar=complex(math.pi))
        if tok.text == "sqrt":
            self.advance()
            self.expect("(")
            arg = self.parse_expr()
            self.expect(")")
            if not arg.is_scalar:
                raise ParseError(f"sqrt of a ket at position {tok.pos}", position=tok.pos)
            return _Value(scalar=complex(np.sqrt(arg.scalar)))
        if tok.text == "(":
            self.advance()
            value = self.parse_expr()
            self.expect(")")
            return value
        if tok.kind == "name":
            raise UnknownName(
                f"unknown name {tok.text!r} at position {tok.pos}", position=tok.pos
            )
        raise ParseError(
            f"expected a ket, number, or '(' at position {tok.pos}, "
            f"found {tok.text or 'end of input'!r}",
            position=tok.pos,
        )


def _eval_scalar(text: str) -> complex:
    p = _Parser(text)
    v = p.parse_expr()
    if p.peek().kind != "end":
        raise ParseError(
            f"trailing input at position {p.peek().pos}", position=p.peek().pos
        )
    if not v.is_scalar:
        raise ParseError("expected a scalar expression", position=0)
    return v.scalar


def parse_angle(text: str) -> float:
    """Evaluate a real scalar like '1.5708', 'pi/2', or '-pi/4'."""
    z = _eval_scalar(text)
    if abs(z.imag) > 1e-12:
        raise ParseError(f"angle {text!r} is not real")
    return float(z.real)


def _bell(alpha: float = 0.0) -> np.ndarray:
    v = np.zeros(4, dtype=complex)
    v[0] = 1.0
    v[3] = np.exp(1j * alpha)
    return v


def _ghz(alpha: float = 0.0) -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    v[0] = 1.0
    v[7] = np.exp(1j * alpha)
    return v


def _w() -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    v[1] = v[2] = v[4] = 1.0
    return v


def _w_gsd() -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    v[0] = v[5] = v[6] = 1.0
    return v


NAMED_STATES: dict[str, tuple[str, int, object]] = {
    "zero": ("|0>", 1, lambda: np.array([1.0, 0.0], dtype=complex)),
    "one": ("|1>", 1, lambda: np.array([0.0, 1.0], dtype=complex)),
    "plus": ("(|0>+|1>)/sqrt(2)", 1, lambda: _KET_SINGLE["+"].copy()),
    "minus": ("(|0>-|1>)/sqrt(2)", 1, lambda: _KET_SINGLE["-"].copy()),
    "bell": ("(|00>+e^{i a}|11>)/sqrt(2)", 2, _bell),
    "ghz": ("(|000>+e^{i a}|111>)/sqrt(2)", 3, _ghz),
    "w": ("(|001>+|010>+|100>)/sqrt(3)", 3, _w),
    "w-gsd": ("(|000>+|101>+|110>)/sqrt(3)", 3, _w_gsd),
    "product2": ("|+>|0>", 2, lambda: np.kron(_KET_SINGLE["+"], _KET_SINGLE["0"])),
    "product3": ("|0>|0>|+>", 3, lambda: np.kron(np.array([1, 0, 0, 0], dtype=complex), _KET_SINGLE["+"])),
}

_NAMED_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_\-]*)\s*(?:\(([^)]*)\))?\s*$")


def _parse_named(text: str) -> StateVector | None:
    m = _NAMED_RE.match(text)
    if m is None:
        return None
    name, arg = m.group(1).lower(), m.group(2)
    if name in ("i", "pi", "sqrt"):
        return None
    if name not in NAMED_STATES:
        raise UnknownName(f"unknown named state {name!r}")
    _, qubits, builder = NAMED_STATES[name]
    if arg is not None and arg.strip():
        if name not in ("bell", "ghz"):
            raise ParseError(f"named state {name!r} takes no argument")
        return make_state(builder(parse_angle(arg)), qubits)
    return make_state(builder(), qubits)


def _parse_amplitude_list(text: str) -> StateVector:
    inner = text.strip()[1:-1]
    parts = [p for p in inner.split(",")]
    if parts and parts[-1].strip() == "":
        parts = parts[:-1]
    amps = []
    for p in parts:
        if p.strip() == "":
            raise ParseError("empty entry in amplitude list")
        amps.append(_eval_scalar(p))
    n = {2: 1, 4: 2, 8: 3}.get(len(amps))
    if n is None:
        raise ParseError(
            f"amplitude list must have 2, 4, or 8 entries, got {len(amps)}"
        )
    return make_state(np.array(amps, dtype=complex), n)


def parse_state_spec(text: str) -> StateVector:
    """Parse a named state, an amplitude list, or a ket expression."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty state specification")
    stripped = text.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ParseError("unterminated amplitude list")
        return _parse_amplitude_list(stripped)
    named = _parse_named(stripped)
    if named is not None:
        return named
    p = _Parser(text)
    value = p.parse_expr()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(
            f"trailing input at position {tok.pos}: {tok.text!r}", position=tok.pos
        )
    if value.is_scalar:
        raise ParseError("expression contains no kets")
    try:
        return make_state(value.vector, value.qubits)
    except ZeroVector:
        raise ParseError("expression evaluates to the zero vector")


def format_amplitudes(state: StateVector) -> str:
    """Amplitude-list text that parses back to the same state."""
    parts = []
    for a in state.amplitudes:
        re_s = f"{a.real:.17g}"
        im = a.imag
        if im == 0.0:
            parts.append(re_s)
        elif im >= 0.0:
            parts.append(f"{re_s}+{im:.17g}i")
        else:
            parts.append(f"{re_s}-{abs(im):.17g}i")
    return "[" + ", ".join(parts) + "]"
