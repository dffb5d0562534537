"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Tolerances are pinned here and never loosened.  Criterion 10 is implemented
exactly as stated and is expected to fail: the coordinate chart it relies on
is demonstrably many-to-one (see test_gsd3.test_coordinate_collision_counterexample
and the notes shipped with the repository), so no branch selection can
recover the original state from concurrences plus frames alone.
"""
import json
import math

import numpy as np
import pytest
from fastapi.testclient import TestClient

from conftest import haar_state, haar_unitary
from qcoords.cli import main
from qcoords.coords import build_coordinate_set, three_coordinates, two_coordinates
from qcoords.core import apply_unitary, fidelity, make_state, partial_trace
from qcoords.dynamics import (
    always_canonical,
    coordinate_distance,
    trajectory,
)
from qcoords.figures import render_figure
from qcoords.gates import Gate, parse_gate_list
from qcoords.gsd3 import (
    assemble3,
    complex_concurrences3,
    concurrences3,
    gsd_decompose,
    invert_coordinates,
)
from qcoords.ketparse import parse_state_spec
from qcoords.oracles import (
    pure2_concurrence_oracle,
    three_tangle,
    wootters_mixed_concurrence,
)
from qcoords.schmidt2 import assemble2, complex_concurrence2, schmidt_decompose
from qcoords.service import create_app


def _report(num: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"criterion {num:02d} {status}  {detail}")


def test_criterion_01_two_qubit_round_trip():
    rng = np.random.default_rng(101)
    worst = 1.0
    for _ in range(1000):
        psi = haar_state(rng, 2)
        worst = min(worst, fidelity(assemble2(schmidt_decompose(psi)), psi))
    ok = worst >= 1 - 1e-10
    _report(1, ok, f"1000 Haar states, worst fidelity {worst:.15f}")
    assert ok


def test_criterion_02_two_qubit_oracle():
    rng = np.random.default_rng(102)
    worst = 0.0
    for _ in range(1000):
        psi = haar_state(rng, 2)
        mod = abs(complex_concurrence2(schmidt_decompose(psi)))
        worst = max(worst, abs(mod - pure2_concurrence_oracle(psi)))
    ok = worst <= 1e-10
    _report(2, ok, f"|concurrence| vs oracle, max diff {worst:.3e}")
    assert ok


def test_criterion_03_bell_family():
    worst_c = 0.0
    worst_b = 0.0
    for alpha in np.linspace(0.0, 2 * math.pi, 32, endpoint=False):
        psi = make_state([1, 0, 0, np.exp(1j * alpha)], 2)
        cs = build_coordinate_set(psi)
        worst_c = max(worst_c, abs(cs.two_q.concurrence - np.exp(1j * alpha)))
        worst_b = max(worst_b, max(b.norm() for b in cs.bloch))
    ok = worst_c <= 1e-10 and worst_b <= 1e-10
    _report(3, ok, f"32 phases, max |C - e^(ia)| {worst_c:.3e}, max Bloch norm {worst_b:.3e}")
    assert ok


def test_criterion_04_three_qubit_round_trip():
    rng = np.random.default_rng(104)
    worst = 1.0
    for _ in range(1000):
        psi = haar_state(rng, 3)
        worst = min(worst, fidelity(assemble3(gsd_decompose(psi)), psi))
    ok = worst >= 1 - 1e-9
    _report(4, ok, f"1000 Haar states, worst fidelity {worst:.15f}")
    assert ok


def test_criterion_05_pairwise_oracle():
    rng = np.random.default_rng(105)
    worst = 0.0
    for _ in range(500):
        psi = haar_state(rng, 3)
        c12, c13, c23, _ = concurrences3(gsd_decompose(psi))
        worst = max(
            worst,
            abs(c12 - wootters_mixed_concurrence(partial_trace(psi, (1, 2)))),
            abs(c13 - wootters_mixed_concurrence(partial_trace(psi, (1, 3)))),
            abs(c23 - wootters_mixed_concurrence(partial_trace(psi, (2, 3)))),
        )
    ok = worst <= 1e-8
    _report(5, ok, f"500 states, max |c_jk - Wootters| {worst:.3e}")
    assert ok


def test_criterion_06_tangle_oracle():
    rng = np.random.default_rng(106)
    worst = 0.0
    for _ in range(500):
        psi = haar_state(rng, 3)
        c123 = concurrences3(gsd_decompose(psi))[3]
        worst = max(worst, abs(c123 - math.sqrt(three_tangle(psi))))
    ghz = make_state([1, 0, 0, 0, 0, 0, 0, 1], 3)
    w = make_state([0, 1, 1, 0, 1, 0, 0, 0], 3)
    ghz_err = abs(concurrences3(gsd_decompose(ghz))[3] - 1.0)
    w_err = abs(concurrences3(gsd_decompose(w))[3])
    ok = worst <= 1e-8 and ghz_err <= 1e-10 and w_err <= 1e-10
    _report(6, ok, f"max |c123 - sqrt(tau)| {worst:.3e}, GHZ err {ghz_err:.3e}, W err {w_err:.3e}")
    assert ok


def test_criterion_07_figure_caption_values():
    worst_phase = 0.0
    worst_rest = 0.0
    for alpha in np.linspace(0.0, 2 * math.pi, 16, endpoint=False):
        psi = make_state([1, 0, 0, 0, 0, 0, 0, np.exp(1j * alpha)], 3)
        cs = build_coordinate_set(psi)
        worst_phase = max(worst_phase, abs(cs.three_q.c123 - np.exp(1j * alpha)))
        worst_rest = max(
            worst_rest,
            abs(cs.three_q.c12), abs(cs.three_q.c13), abs(cs.three_q.c23),
            max(b.norm() for b in cs.bloch),
        )
    fig2c = make_state([1, 0, 0, 0, 0, 1, 1, 0], 3)
    c12, c13, c23, c123 = concurrences3(gsd_decompose(fig2c))
    fig2c_err = max(abs(c12 - 2 / 3), abs(c13 - 2 / 3), abs(c23 - 2 / 3), abs(c123))
    ok = worst_phase <= 1e-10 and worst_rest <= 1e-10 and fig2c_err <= 1e-9
    _report(
        7, ok,
        f"GHZ family phase err {worst_phase:.3e}, residue {worst_rest:.3e}, Fig2c err {fig2c_err:.3e}",
    )
    assert ok


def test_criterion_08_invariance_suite():
    rng = np.random.default_rng(108)
    worst_mod = 0.0
    worst_complex = 0.0
    for _ in range(200):
        psi = haar_state(rng, 3)
        cc0 = complex_concurrences3(gsd_decompose(psi))
        m0 = np.array([abs(z) for z in cc0.as_tuple()])
        rotated = psi
        for q in (1, 2, 3):
            rotated = apply_unitary(rotated, (q,), haar_unitary(rng))
        m1 = np.array([abs(z) for z in complex_concurrences3(gsd_decompose(rotated)).as_tuple()])
        worst_mod = max(worst_mod, float(np.max(np.abs(m1 - m0))))

        u = haar_unitary(rng)
        cc_q3 = complex_concurrences3(gsd_decompose(apply_unitary(psi, (3,), u)))
        cc_q2 = complex_concurrences3(gsd_decompose(apply_unitary(psi, (2,), u)))
        cc_q1 = complex_concurrences3(gsd_decompose(apply_unitary(psi, (1,), u)))
        worst_complex = max(
            worst_complex,
            abs(cc0.c12 - cc_q3.c12),
            abs(cc0.c13 - cc_q2.c13),
            abs(cc0.c23 - cc_q1.c23),
        )
    ok = worst_mod <= 1e-8 and worst_complex <= 1e-8
    _report(8, ok, f"200 pairs, moduli drift {worst_mod:.3e}, complex drift {worst_complex:.3e}")
    assert ok


def test_criterion_09_monogamy_identity():
    rng = np.random.default_rng(109)
    worst = 0.0
    for _ in range(500):
        psi = haar_state(rng, 3)
        c12, c13, c23, c123 = concurrences3(gsd_decompose(psi))
        combos = (
            ((c12, c13), (1,)),
            ((c12, c23), (2,)),
            ((c13, c23), (3,)),
        )
        for (a, b), keep in combos:
            det = np.linalg.det(partial_trace(psi, keep).entries).real
            worst = max(worst, abs(a * a + b * b + c123 * c123 - 4 * det))
    ok = worst <= 1e-8
    _report(9, ok, f"500 states x 3 permutations, max defect {worst:.3e}")
    assert ok


def test_criterion_10_inverse_reconstruction():
    """Implemented exactly as specified; fails because the chart collides.

    Distinct states share identical frames and complex concurrences (the
    reconstruction system is polynomial with several exact canonical
    roots), so no selection rule can recover the original state in those
    cases.  See the decisions ledger and the pinned counterexample in
    test_gsd3.py for the full analysis.
    """
    rng = np.random.default_rng(110)
    failures = 0
    worst = 1.0
    for _ in range(200):
        psi = haar_state(rng, 3)
        coords = gsd_decompose(psi)
        cc = complex_concurrences3(coords)
        back = invert_coordinates(cc, coords.frames)
        f = fidelity(assemble3(back), psi)
        worst = min(worst, f)
        if f < 1 - 1e-6:
            failures += 1
    ok = failures == 0
    _report(
        10, ok,
        f"200 states, {failures} below 1-1e-6 (worst {worst:.9f}); "
        "chart is many-to-one, see ledger",
    )
    assert ok, (
        f"{failures}/200 reconstructions missed the original state: "
        "(frames, concurrences) do not determine a unique state; "
        "see decisions ledger and the pinned collision counterexample"
    )


def test_criterion_11_continuity():
    # GHZ + PHASE sweep: the c123 argument advances by sweep/64 per step.
    total = math.pi / 2
    pts = trajectory(parse_state_spec("ghz"), [Gate("PHASE", (total,), (3,))], steps_per_gate=64)
    args = np.unwrap([np.angle(p.coords.three_q.c123) for p in pts])
    step_err = float(np.max(np.abs(np.diff(args) - total / 64)))
    dists = [coordinate_distance(a.coords, b.coords) for a, b in zip(pts, pts[1:])]
    ghz_ok = step_err <= 1e-6 and max(dists) <= 2 * total / 64

    # Controlled-phase micro-sweep across the maximally entangled family:
    # the continuity-selected sequence stays step-bounded while the static
    # canonical convention jumps at the crossing.
    eps0 = 2e-7
    amp = np.array([1, 1, 1, np.exp(1j * (math.pi - eps0))], dtype=complex) / 2
    pts = trajectory(make_state(amp, 2), [Gate("CPHASE", (2 * eps0,), (1, 2))], steps_per_gate=64)
    step = 2 * eps0 / 64
    selected = max(
        coordinate_distance(a.coords, b.coords) for a, b in zip(pts, pts[1:])
    )
    canon = always_canonical(pts)
    canonical_jump = max(coordinate_distance(a, b) for a, b in zip(canon, canon[1:]))
    bell_ok = selected <= 2 * step and canonical_jump > 10 * (2 * step)
    ok = ghz_ok and bell_ok
    _report(
        11, ok,
        f"phase-step err {step_err:.3e}; crossing: selected {selected:.3e} <= {2*step:.3e}, "
        f"canonical jump {canonical_jump:.3f}",
    )
    assert ok


def test_criterion_12_interface_determinism(tmp_path):
    client = TestClient(create_app())
    parity = True
    for spec in ("ghz", "bell(0.7)", "w-gsd"):
        r = client.post("/api/analyze", json={"state_spec": spec})
        out = tmp_path / "cli.json"
        assert main(["analyze", spec, "--json", str(out)]) == 0
        parity = parity and (out.read_text() in r.text)
    svg_a = tmp_path / "a.svg"
    svg_b = tmp_path / "b.svg"
    coords = tmp_path / "c.json"
    assert main(["analyze", "w", "--json", str(coords)]) == 0
    assert main(["render", str(coords), "--svg", str(svg_a)]) == 0
    assert main(["render", str(coords), "--svg", str(svg_b)]) == 0
    deterministic = svg_a.read_bytes() == svg_b.read_bytes()
    http_svg = client.get("/render.svg", params={"spec": "w"}).text
    out = tmp_path / "w.svg"
    assert main(["analyze", "w", "--svg", str(out)]) == 0
    cross = http_svg == out.read_text()
    ok = parity and deterministic and cross
    _report(12, ok, f"JSON parity {parity}, SVG determinism {deterministic}, HTTP/CLI SVG {cross}")
    assert ok
