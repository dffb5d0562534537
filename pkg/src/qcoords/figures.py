"""Deterministic SVG rendering of coordinate payloads.

One orthographic Bloch panel per qubit plus a complex-plane panel for the
concurrences.  Identical payloads produce byte-identical documents: floats
are emitted with a fixed format and there is no randomness or timestamping.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coords import CoordinateSet

# Oblique projection of the Bloch x axis (toward the viewer, lower-left).
_XP = (-0.38, 0.3)

# marker shape per concurrence label, drawn at the complex-plane position
_MARKERS = {
    "c": "diamond",
    "c12": "circle",
    "c13": "square",
    "c23": "triangle",
    "c123": "diamond",
}
_COLORS = {
    "c": "#c0392b",
    "c12": "#2980b9",
    "c13": "#27ae60",
    "c23": "#8e44ad",
    "c123": "#c0392b",
}


@dataclass(frozen=True)
class RenderOptions:
    panel: int = 230
    radius: int = 88
    margin: int = 14


def _f(x: float) -> str:
    # fixed format keeps output byte-stable; -0.0000 would not
    v = 0.0 if abs(x) < 5e-5 else float(x)
    return f"{v:.4f}"


def _project(x: float, y: float, z: float, r: float) -> tuple[float, float]:
    px = y * r + x * r * _XP[0]
    py = -z * r - x * r * _XP[1]
    return px, py


def _marker_svg(shape: str, cx: float, cy: float, size: float, color: str) -> str:
    s = size
    if shape == "circle":
        return f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(s)}" fill="{color}"/>'
    if shape == "square":
        return (
            f'<rect x="{_f(cx - s)}" y="{_f(cy - s)}" width="{_f(2 * s)}" '
            f'height="{_f(2 * s)}" fill="{color}"/>'
        )
    if shape == "triangle":
        pts = f"{_f(cx)},{_f(cy - 1.2 * s)} {_f(cx - 1.1 * s)},{_f(cy + 0.9 * s)} {_f(cx + 1.1 * s)},{_f(cy + 0.9 * s)}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    pts = f"{_f(cx)},{_f(cy - 1.3 * s)} {_f(cx + 1.3 * s)},{_f(cy)} {_f(cx)},{_f(cy + 1.3 * s)} {_f(cx - 1.3 * s)},{_f(cy)}"
    return f'<polygon points="{pts}" fill="{color}"/>'


def _bloch_panel(out: list[str], ox: float, oy: float, label: str, point, opts: RenderOptions) -> None:
    r = opts.radius
    cx, cy = ox + opts.panel / 2.0, oy + opts.panel / 2.0 + 6.0
    out.append(f'<g transform="translate({_f(cx)}, {_f(cy)})">')
    out.append(f'<circle cx="0" cy="0" r="{_f(r)}" fill="none" stroke="#444" stroke-width="1"/>')
    # equator and a vertical meridian as foreshortened ellipses
    out.append(
        f'<ellipse cx="0" cy="0" rx="{_f(r)}" ry="{_f(0.32 * r)}" fill="none" '
        f'stroke="#999" stroke-width="0.7" stroke-dasharray="4 3"/>'
    )
    out.append(
        f'<ellipse cx="0" cy="0" rx="{_f(0.32 * r)}" ry="{_f(r)}" fill="none" '
        f'stroke="#bbb" stroke-width="0.7" stroke-dasharray="4 3"/>'
    )
    for axis, (ax, ay, az) in (("x", (1.1, 0, 0)), ("y", (0, 1.1, 0)), ("z", (0, 0, 1.1))):
        px, py = _project(ax, ay, az, r)
        out.append(
            f'<line x1="0" y1="0" x2="{_f(px)}" y2="{_f(py)}" stroke="#777" stroke-width="0.8"/>'
        )
        out.append(
            f'<text x="{_f(px * 1.12)}" y="{_f(py * 1.12 + 3)}" font-size="10" '
            f'fill="#555" text-anchor="middle">{axis}</text>'
        )
    px, py = _project(point.x, point.y, point.z, r)
    out.append(
        f'<line x1="0" y1="0" x2="{_f(px)}" y2="{_f(py)}" stroke="#c0392b" '
        f'stroke-width="1.4" stroke-dasharray="3 2"/>'
    )
    out.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="4" fill="#c0392b"/>')
    out.append(
        f'<text x="0" y="{_f(-r - 10.0)}" font-size="12" fill="#222" text-anchor="middle">{label}</text>'
    )
    out.append(
        f'<text x="0" y="{_f(r + 18.0)}" font-size="9" fill="#555" text-anchor="middle">'
        f"|r| = {_f(point.norm())}</text>"
    )
    out.append("</g>")


def _plane_panel(out: list[str], ox: float, oy: float, entries, opts: RenderOptions) -> None:
    r = opts.radius
    cx, cy = ox + opts.panel / 2.0, oy + opts.panel / 2.0 + 6.0
    out.append(f'<g transform="translate({_f(cx)}, {_f(cy)})">')
    out.append(f'<circle cx="0" cy="0" r="{_f(r)}" fill="none" stroke="#444" stroke-width="1"/>')
    out.append(f'<line x1="{_f(-1.12 * r)}" y1="0" x2="{_f(1.12 * r)}" y2="0" stroke="#777" stroke-width="0.8"/>')
    out.append(f'<line x1="0" y1="{_f(1.12 * r)}" x2="0" y2="{_f(-1.12 * r)}" stroke="#777" stroke-width="0.8"/>')
    out.append(f'<text x="{_f(1.12 * r + 8)}" y="3" font-size="10" fill="#555" text-anchor="middle">Re</text>')
    out.append(f'<text x="0" y="{_f(-1.12 * r - 5)}" font-size="10" fill="#555" text-anchor="middle">Im</text>')
    out.append(f'<text x="0" y="{_f(-r - 22.0)}" font-size="12" fill="#222" text-anchor="middle">complex concurrence</text>')

    # Coincident markers (as for three equal pairwise values) are spread on
    # a small halo so each stays visible; underlying numbers are untouched.
    groups: list[list[int]] = []
    for idx, (_, z) in enumerate(entries):
        for g in groups:
            z0 = entries[g[0]][1]
            if abs(z - z0) < 1e-6:
                g.append(idx)
                break
        else:
            groups.append([idx])
    offsets = {}
    for g in groups:
        if len(g) == 1:
            offsets[g[0]] = (0.0, 0.0)
        else:
            z0 = entries[g[0]][1]
            out.append(
                f'<circle cx="{_f(z0.real * r)}" cy="{_f(-z0.imag * r)}" r="10.5" '
                f'fill="none" stroke="#aaa" stroke-width="0.8" stroke-dasharray="2 2"/>'
            )
            step_vectors = [(0.0, -7.0), (6.1, 3.5), (-6.1, 3.5), (0.0, 7.0)]
            for k, idx in enumerate(g):
                offsets[idx] = step_vectors[k % 4]

    for idx, (name, z) in enumerate(entries):
        dx, dy = offsets[idx]
        px, py = z.real * r + dx, -z.imag * r + dy
        out.append(_marker_svg(_MARKERS[name], px, py, 4.2, _COLORS[name]))

    ly = r + 16.0
    lx = -float(len(entries) - 1) * 34.0
    for name, z in entries:
        out.append(_marker_svg(_MARKERS[name], lx, ly, 3.2, _COLORS[name]))
        out.append(
            f'<text x="{_f(lx + 7)}" y="{_f(ly + 3)}" font-size="9" fill="#333">{name}</text>'
        )
        lx += 68.0
    out.append("</g>")


def render_figure(cs: CoordinateSet, options: RenderOptions | None = None) -> str:
    """Scalable-vector rendering of a coordinate payload (SVG 1.1 text)."""
    opts = options or RenderOptions()
    panels = cs.num_qubits + (1 if cs.num_qubits > 1 else 0)
    width = opts.margin * 2 + panels * opts.panel + (panels - 1) * opts.margin
    height = opts.panel + 2 * opts.margin + 26

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    x = float(opts.margin)
    y = float(opts.margin) + 10.0
    for q in range(cs.num_qubits):
        _bloch_panel(out, x, y, f"qubit {q + 1}", cs.bloch[q], opts)
        x += opts.panel + opts.margin

    if cs.two_q is not None:
        _plane_panel(out, x, y, [("c", cs.two_q.concurrence)], opts)
    elif cs.three_q is not None:
        t = cs.three_q
        _plane_panel(
            out, x, y,
            [("c12", t.c12), ("c13", t.c13), ("c23", t.c23), ("c123", t.c123)],
            opts,
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
