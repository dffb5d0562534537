"""Generalized Schmidt decomposition of three-qubit pure states.

The canonical five-term form is
    (U1 x U2 x U3)(l0|000> + e^{i phi} l1|100> + l2|101> + l3|110> + l4|111>)
with nonnegative coefficients and a single residual phase.  The alpha form
moves the trailing z-rotations of the local unitaries into four core phases
alpha_1..alpha_4, leaving pure Rz*Ry frames, and the four complex
concurrences (three pairwise plus one GHZ-type) together with those frames
coordinatize the state completely.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import StateVector, fidelity, make_state
from .errors import DegenerateFamily, DimensionMismatch, Unrealizable
from .schmidt2 import schmidt_decompose
from .su2 import (
    LocalFrame,
    frame_geodesic,
    frame_unitary,
    preparation_unitary,
    wrap_angle,
    zyz_decompose,
)
from .tolerances import EPS_ALPHA_POLE, EPS_NORM, EPS_ZERO

# Amplitudes at |001>, |010>, |011> above this threshold mean the chosen
# pencil root failed to produce a rank-1 block.
EPS_BLOCK_LEAK = 1e-9
# Pencil coefficients below this are treated as exactly zero.
EPS_PENCIL = 1e-12


@dataclass(frozen=True, eq=False)
class CanonicalGSD:
    """Acin-style canonical form: five coefficients, one phase, three unitaries."""

    lam: tuple[float, float, float, float, float]
    varphi: float
    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray
    degenerate_family: bool = False

    def __post_init__(self):
        for u in (self.u1, self.u2, self.u3):
            u.setflags(write=False)
        if abs(sum(l * l for l in self.lam) - 1.0) > 1e-10:
            raise ValueError("GSD coefficients are not normalized")


@dataclass(frozen=True)
class ThreeQubitCoordinates:
    """Alpha-form coordinates: five coefficients, four phases, three frames."""

    lam: tuple[float, float, float, float, float]
    alpha: tuple[float, float, float, float]
    frames: tuple[LocalFrame, LocalFrame, LocalFrame]
    degenerate_family: bool = False

    def __post_init__(self):
        if min(self.lam) < -1e-12:
            raise ValueError("negative Schmidt coefficient")
        if abs(sum(l * l for l in self.lam) - 1.0) > 1e-10:
            raise ValueError("coefficients are not normalized")


@dataclass(frozen=True)
class ComplexConcurrenceSet:
    c12: complex
    c13: complex
    c23: complex
    c123: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.c12, self.c13, self.c23, self.c123)


@dataclass(frozen=True)
class _RootCandidate:
    lam: tuple[float, float, float, float, float]
    varphi_principal: float  # in (-pi, pi]
    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray


def _pencil_roots(t0: np.ndarray, t1: np.ndarray) -> list[tuple[complex, complex]] | None:
    """Projective roots (x, y) of det(x T0 + y T1) = 0, or None if identical zero."""
    det0 = t0[0, 0] * t0[1, 1] - t0[0, 1] * t0[1, 0]
    det1 = t1[0, 0] * t1[1, 1] - t1[0, 1] * t1[1, 0]
    cross = (
        t0[0, 0] * t1[1, 1]
        + t0[1, 1] * t1[0, 0]
        - t0[0, 1] * t1[1, 0]
        - t0[1, 0] * t1[0, 1]
    )
    a, b, c = det1, cross, det0  # c + b r + a r^2 = 0 with r = y/x
    roots: list[tuple[complex, complex]]
    if abs(a) > EPS_PENCIL:
        disc = np.sqrt(b * b - 4.0 * a * c)
        # Branch maximizing |b + disc| for numerical stability.
        if (np.conj(b) * disc).real < 0.0:
            disc = -disc
        q = -0.5 * (b + disc)
        r1 = q / a
        r2 = c / q if abs(q) > 1e-300 else 0.0 + 0.0j
        roots = [(1.0 + 0.0j, r1), (1.0 + 0.0j, r2)]
    elif abs(b) > EPS_PENCIL:
        roots = [(1.0 + 0.0j, -c / b), (0.0j, 1.0 + 0.0j)]
    elif abs(c) > EPS_PENCIL:
        roots = [(0.0j, 1.0 + 0.0j), (0.0j, 1.0 + 0.0j)]
    else:
        return None

    out = []
    for x, y in roots:
        n = math.sqrt(abs(x) ** 2 + abs(y) ** 2)
        x, y = x / n, y / n
        pivot = x if abs(x) >= abs(y) else y
        ph = pivot / abs(pivot)
        out.append((x / ph, y / ph))
    if np.allclose(out[0], out[1], atol=1e-12):
        out = out[:1]
    return out


def _fix_phase(vec: np.ndarray) -> tuple[np.ndarray, complex]:
    """Make the largest-modulus entry real positive; return (vector, phase)."""
    j = int(np.argmax(np.abs(vec)))
    if abs(vec[j]) < 1e-14:
        return vec, 1.0 + 0.0j
    ph = vec[j] / abs(vec[j])
    return vec / ph, ph


def _solve_diagonal_phases(mus: list[complex]) -> tuple[float, float, float]:
    """Phases (a, b, c) zeroing the arguments of the |101>, |110>, |111> terms.

    Rows of the linear system follow the priority order 101, 110, 111 and
    zero-amplitude targets are skipped; the minimum-norm solution keeps the
    outcome deterministic when the system is underdetermined.
    """
    rows, rhs = [], []
    for mu, row in zip(mus, ([1.0, 0.0, 1.0], [1.0, 1.0, 0.0], [1.0, 1.0, 1.0])):
        if abs(mu) > EPS_ZERO:
            rows.append(row)
            rhs.append(-cmath.phase(mu))
    if not rows:
        return 0.0, 0.0, 0.0
    sol, *_ = np.linalg.lstsq(np.array(rows), np.array(rhs), rcond=None)
    return float(sol[0]), float(sol[1]), float(sol[2])


def _evaluate_root(psi3: np.ndarray, x: complex, y: complex) -> _RootCandidate | None:
    v1 = np.array([[x, y], [-np.conj(y), np.conj(x)]], dtype=complex)
    psi_a = np.einsum("ab,bjk->ajk", v1, psi3)
    block = psi_a[0]
    u_a, s_a, vh_a = np.linalg.svd(block)
    if s_a[0] < EPS_BLOCK_LEAK:
        return None

    # Phase-canonicalize the singular bases.  The k=0 phases must move
    # together to preserve the rank-1 product; the k=1 pair is free because
    # its singular value vanishes.
    u_a = u_a.copy()
    vh_a = vh_a.copy()
    col0, p0 = _fix_phase(u_a[:, 0])
    u_a[:, 0] = col0
    vh_a[0, :] = vh_a[0, :] * p0
    u_a[:, 1] = _fix_phase(u_a[:, 1])[0]
    vh_a[1, :] = _fix_phase(vh_a[1, :])[0]

    v2 = u_a.conj().T
    v3 = vh_a.conj()
    psi_b = np.einsum("jm,amn,kn->ajk", v2, psi_a, v3)

    leak = max(abs(psi_b[0, 0, 1]), abs(psi_b[0, 1, 0]), abs(psi_b[0, 1, 1]))
    if leak > EPS_BLOCK_LEAK:
        return None
    lam0 = abs(psi_b[0, 0, 0])
    mu = [psi_b[1, 0, 1], psi_b[1, 1, 0], psi_b[1, 1, 1]]  # |101>, |110>, |111>
    pa, pb, pc = _solve_diagonal_phases(mu)
    mu1 = psi_b[1, 0, 0] * cmath.exp(1j * pa)
    mu2 = mu[0] * cmath.exp(1j * (pa + pc))
    mu3 = mu[1] * cmath.exp(1j * (pa + pb))
    mu4 = mu[2] * cmath.exp(1j * (pa + pb + pc))

    lam = np.array([lam0, abs(mu1), abs(mu2), abs(mu3), abs(mu4)])
    lam /= np.linalg.norm(lam)
    varphi = cmath.phase(mu1) if abs(mu1) > EPS_ZERO else 0.0

    d_phases = [pa, pb, pc]
    units = []
    for v, ph in zip((v1, v2, v3), d_phases):
        units.append(v.conj().T @ np.diag([1.0, cmath.exp(-1j * ph)]))
    return _RootCandidate(
        lam=tuple(float(l) for l in lam),
        varphi_principal=varphi,
        u1=units[0],
        u2=units[1],
        u3=units[2],
    )


def _lam_key_greater(a: tuple, b: tuple, tol: float = 1e-12) -> bool:
    """Lexicographic comparison with tolerance; True when a > b."""
    for x, y in zip(a, b):
        if x > y + tol:
            return True
        if x < y - tol:
            return False
    return False


def _select_candidate(cands: list[_RootCandidate]) -> _RootCandidate:
    in_range = [c for c in cands if c.varphi_principal >= -1e-9]
    pool = in_range if in_range else cands
    best = pool[0]
    for c in pool[1:]:
        key_c = (c.lam[0],) + c.lam[1:]
        key_b = (best.lam[0],) + best.lam[1:]
        if _lam_key_greater(key_c, key_b):
            best = c
    return best


def _cut_states(psi3: np.ndarray) -> list[tuple[float, np.ndarray, np.ndarray]]:
    """Per-qubit (second singular value, local ket, partner amplitudes)."""
    out = []
    for axis in range(3):
        m = np.moveaxis(psi3, axis, 0).reshape(2, 4)
        u, s, _ = np.linalg.svd(m)
        local = _fix_phase(u[:, 0])[0]
        partner = np.tensordot(local.conj(), np.moveaxis(psi3, axis, 0), axes=(0, 0))
        out.append((float(s[1]), local, partner))
    return out


def _fallback_factorized(state: StateVector) -> CanonicalGSD:
    """Handle states where the determinant pencil degenerates.

    These are exactly the states with a product cut: either a full product,
    or one qubit factored off an entangled pair.  The pair is resolved with
    the two-qubit Schmidt machinery and one representative is returned (the
    representation is not unique in the maximally entangled case).
    """
    psi3 = state.tensor()
    cuts = _cut_states(psi3)
    rank1 = [i for i, (s1, _, _) in enumerate(cuts) if s1 < EPS_BLOCK_LEAK]

    if len(rank1) >= 2:
        units = [preparation_unitary(cuts[i][1]) for i in range(3)]
        return CanonicalGSD(
            lam=(1.0, 0.0, 0.0, 0.0, 0.0), varphi=0.0,
            u1=units[0], u2=units[1], u3=units[2], degenerate_family=True,
        )
    if not rank1:
        raise DegenerateFamily("pencil degenerate but no product cut found")

    j = rank1[0]
    local, pair = cuts[j][1], cuts[j][2]
    coords = schmidt_decompose(make_state(pair.reshape(-1), 2))
    ua = frame_unitary(coords.frame1)
    ub = frame_unitary(coords.frame2) @ np.diag([1.0, cmath.exp(1j * coords.alpha)])
    mu0, mu1 = coords.lambda0, coords.lambda1

    if j == 0:  # qubit 1 factors; core mu0|100> + mu1|111>
        return CanonicalGSD(
            lam=(0.0, mu0, 0.0, 0.0, mu1), varphi=0.0,
            u1=preparation_unitary(local, from_one=True), u2=ua, u3=ub,
            degenerate_family=True,
        )
    if j == 1:  # qubit 2 factors; core mu0|000> + mu1|101>
        return CanonicalGSD(
            lam=(mu0, 0.0, mu1, 0.0, 0.0), varphi=0.0,
            u1=ua, u2=preparation_unitary(local), u3=ub,
            degenerate_family=True,
        )
    # qubit 3 factors; core mu0|000> + mu1|110>
    return CanonicalGSD(
        lam=(mu0, 0.0, 0.0, mu1, 0.0), varphi=0.0,
        u1=ua, u2=ub, u3=preparation_unitary(local),
        degenerate_family=True,
    )


def _canonical_from_candidate(c: _RootCandidate) -> CanonicalGSD:
    varphi = c.varphi_principal
    if varphi < 0.0:
        varphi = wrap_angle(varphi)
    return CanonicalGSD(lam=c.lam, varphi=varphi, u1=c.u1, u2=c.u2, u3=c.u3)


def gsd_canonical_all(state: StateVector) -> list[CanonicalGSD]:
    """Canonical GSD for every usable determinant-pencil root.

    The spec-selected representative comes first; trajectory code treats the
    remaining entries as gauge candidates.  Falls back to factor detection
    when the pencil degenerates.
    """
    if state.num_qubits != 3:
        raise DimensionMismatch("gsd decomposition expects a 3-qubit state")
    psi3 = state.tensor()
    roots = _pencil_roots(psi3[0], psi3[1])
    if roots is None:
        return [_fallback_factorized(state)]
    cands = [c for c in (_evaluate_root(psi3, x, y) for x, y in roots) if c is not None]
    if not cands:
        return [_fallback_factorized(state)]
    best = _select_candidate(cands)
    ordered = [best] + [c for c in cands if c is not best]
    return [_canonical_from_candidate(c) for c in ordered]


def gsd_canonical(state: StateVector) -> CanonicalGSD:
    return gsd_canonical_all(state)[0]


def assemble_canonical(g: CanonicalGSD) -> StateVector:
    core = np.zeros(8, dtype=complex)
    core[0] = g.lam[0]
    core[4] = g.lam[1] * cmath.exp(1j * g.varphi)
    core[5], core[6], core[7] = g.lam[2], g.lam[3], g.lam[4]
    u = np.kron(np.kron(g.u1, g.u2), g.u3)
    return make_state(u @ core, 3)


def to_alpha_form(g: CanonicalGSD) -> ThreeQubitCoordinates:
    """Convert a canonical GSD to frames (phi_j, theta_j) plus core phases.

    Each local unitary is ZYZ-decomposed; the trailing z-angles feed the
    relations alpha1 = phi + phi1', alpha2 = phi1' + phi3', alpha3 = phi1' +
    phi2', alpha4 = phi1' + phi2' + phi3'.  Unitaries that are z-only within
    tolerance are treated as having an empty frame so that their whole phase
    surfaces in the alphas (the frame longitude is unobservable at the
    poles).
    """
    phis, thetas, primes = [], [], []
    for u in (g.u1, g.u2, g.u3):
        z = zyz_decompose(u)
        phi, theta, prime = z.phi, z.theta, z.phi_prime
        if theta < EPS_ALPHA_POLE:
            prime = wrap_angle(phi + prime)
            phi = 0.0
        elif math.pi - theta < EPS_ALPHA_POLE:
            prime = wrap_angle(prime - phi)
            phi = 0.0
        phis.append(phi)
        thetas.append(theta)
        primes.append(prime)

    alpha = [
        wrap_angle(g.varphi + primes[0]),
        wrap_angle(primes[0] + primes[2]),
        wrap_angle(primes[0] + primes[1]),
        wrap_angle(primes[0] + primes[1] + primes[2]),
    ]
    for k in range(4):
        if g.lam[k + 1] < EPS_ZERO:
            alpha[k] = 0.0
    return ThreeQubitCoordinates(
        lam=g.lam,
        alpha=tuple(alpha),
        frames=tuple(LocalFrame(p, t) for p, t in zip(phis, thetas)),
        degenerate_family=g.degenerate_family,
    )


def gsd_decompose(state: StateVector) -> ThreeQubitCoordinates:
    """Alpha-form coordinates of a 3-qubit state (composition of the above)."""
    return to_alpha_form(gsd_canonical(state))


def gsd_decompose_all(state: StateVector) -> list[ThreeQubitCoordinates]:
    return [to_alpha_form(g) for g in gsd_canonical_all(state)]


def assemble3(coords: ThreeQubitCoordinates) -> StateVector:
    """(U1 x U2 x U3) applied to the five-term core with its alpha phases."""
    core = np.zeros(8, dtype=complex)
    core[0] = coords.lam[0]
    for k, idx in enumerate((4, 5, 6, 7)):
        core[idx] = coords.lam[k + 1] * cmath.exp(1j * coords.alpha[k])
    u = np.kron(
        np.kron(frame_unitary(coords.frames[0]), frame_unitary(coords.frames[1])),
        frame_unitary(coords.frames[2]),
    )
    return make_state(u @ core, 3)


def complex_concurrences3(coords: ThreeQubitCoordinates) -> ComplexConcurrenceSet:
    l0, l1, l2, l3, l4 = coords.lam
    a1, a2, a3, a4 = coords.alpha
    return ComplexConcurrenceSet(
        c12=2.0 * cmath.exp(1j * a3) * l0 * l3,
        c13=2.0 * cmath.exp(1j * a2) * l0 * l2,
        c23=2.0
        * cmath.exp(-2j * a1)
        * (cmath.exp(1j * (a1 + a4)) * l1 * l4 - cmath.exp(1j * (a2 + a3)) * l2 * l3),
        c123=2.0 * cmath.exp(1j * a4) * l0 * l4,
    )


def concurrences3(coords: ThreeQubitCoordinates) -> tuple[float, float, float, float]:
    """Moduli of the complex concurrences; c123 equals sqrt(3-tangle)."""
    cc = complex_concurrences3(coords)
    return (abs(cc.c12), abs(cc.c13), abs(cc.c23), abs(cc.c123))


def _z_root_residual(
    lam0: float, p2: float, p3: float, p4: float,
    a2: float, a3: float, a4: float, c23: complex,
) -> tuple[float, complex, float] | None:
    """Signed log-modulus of the z-quadratic root nearest the unit circle.

    Returns (log|z|, z, lambda1) or None when lambda1^2 would be negative.
    """
    lam2, lam3, lam4 = p2 / lam0, p3 / lam0, p4 / lam0
    h = 1.0 - lam0 * lam0 - lam2 * lam2 - lam3 * lam3 - lam4 * lam4
    if h < -1e-12:
        return None
    lam1 = math.sqrt(max(h, 0.0))
    qa = -2.0 * cmath.exp(1j * (a2 + a3)) * lam2 * lam3
    qb = 2.0 * cmath.exp(1j * a4) * lam1 * lam4
    qc = -c23
    if abs(qa) < 1e-15:
        if abs(qb) < 1e-15:
            if abs(qc) < 1e-12:
                return (0.0, 1.0 + 0.0j, lam1)
            return None
        z = -qc / qb
        return (math.log(max(abs(z), 1e-300)), z, lam1)
    disc = np.sqrt(qb * qb - 4.0 * qa * qc)
    if (np.conj(qb) * disc).real < 0.0:
        disc = -disc
    q = -0.5 * (qb + disc)
    zs = []
    if abs(q) > 1e-300:
        zs = [q / qa, qc / q]
    else:
        zs = [np.sqrt(-qc / qa)]
        zs.append(-zs[0])
    best = min(zs, key=lambda z: abs(math.log(max(abs(z), 1e-300))))
    return (math.log(max(abs(best), 1e-300)), best, lam1)


def invert_candidates(
    cc: ComplexConcurrenceSet,
    frames: tuple[LocalFrame, LocalFrame, LocalFrame],
) -> list[ThreeQubitCoordinates]:
    """Every coordinate tuple consistent with the given concurrence set.

    The reconstruction system is polynomial and can have several exact
    roots; callers with extra information (such as the reduced Bloch
    vectors) can disambiguate.  Candidates are ordered by the default
    preference: canonical self-consistency first, then larger lambda0.
    """
    p3, p2, p4 = abs(cc.c12) / 2.0, abs(cc.c13) / 2.0, abs(cc.c123) / 2.0
    a3 = cmath.phase(cc.c12) if abs(cc.c12) > EPS_ZERO else 0.0
    a2 = cmath.phase(cc.c13) if abs(cc.c13) > EPS_ZERO else 0.0
    a4 = cmath.phase(cc.c123) if abs(cc.c123) > EPS_ZERO else 0.0
    a3, a2, a4 = wrap_angle(a3), wrap_angle(a2), wrap_angle(a4)

    if max(p2, p3, p4) < EPS_ZERO:
        # lambda0 = 0 family: a lone qubit 1 in front of a (possibly
        # entangled) pair.  One representative is returned; the split of the
        # pair's Schmidt weights is not unique from concurrences alone.
        c = abs(cc.c23)
        if c < EPS_ZERO:
            lam = (1.0, 0.0, 0.0, 0.0, 0.0)
            return [ThreeQubitCoordinates(
                lam=lam, alpha=(0.0, 0.0, 0.0, 0.0), frames=frames,
                degenerate_family=True,
            )]
        if c > 1.0 + 1e-9:
            raise Unrealizable(f"|c23| = {c} exceeds 1")
        c = min(c, 1.0)
        big = math.sqrt((1.0 + math.sqrt(max(0.0, 1.0 - c * c))) / 2.0)
        small = math.sqrt(max(0.0, 1.0 - big * big))
        return [ThreeQubitCoordinates(
            lam=(0.0, big, 0.0, 0.0, small),
            alpha=(0.0, 0.0, 0.0, wrap_angle(cmath.phase(cc.c23))),
            frames=frames,
            degenerate_family=True,
        )]

    def residual(l0: float):
        return _z_root_residual(l0, p2, p3, p4, a2, a3, a4, cc.c23)

    grid = np.linspace(1.0 / 2048.0, 1.0, 2048)
    vals: list[tuple[float, float]] = []
    for l0 in grid:
        r = residual(float(l0))
        if r is not None:
            vals.append((float(l0), r[0]))

    # Sign changes include spurious jumps where the tracked quadratic root
    # switches identity; bisection followed by a residual filter keeps only
    # genuine zeros of log|z|.
    brackets = []
    for (x0, f0), (x1, f1) in zip(vals, vals[1:]):
        if f0 == 0.0:
            brackets.append((x0, x0))
        elif f0 * f1 < 0.0:
            brackets.append((x0, x1))
    solutions = []
    for lo, hi in brackets[:12]:
        for _ in range(100):
            if hi - lo < 1e-14:
                break
            mid = 0.5 * (lo + hi)
            rm = residual(mid)
            rl = residual(lo)
            if rm is None or rl is None:
                break
            if rl[0] * rm[0] <= 0.0:
                hi = mid
            else:
                lo = mid
        solutions.append(0.5 * (lo + hi))
    # Local minima of |log z| catch zeros the sign scan may have missed.
    def ternary_min(lo: float, hi: float) -> None:
        for _ in range(200):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            r1, r2 = residual(m1), residual(m2)
            if r1 is None or r2 is None:
                return
            if abs(r1[0]) < abs(r2[0]):
                hi = m2
            else:
                lo = m1
            if hi - lo < 1e-14:
                break
        solutions.append(0.5 * (lo + hi))

    for i in range(1, len(vals) - 1):
        if abs(vals[i][1]) < abs(vals[i - 1][1]) and abs(vals[i][1]) < abs(vals[i + 1][1]):
            ternary_min(vals[i - 1][0], vals[i + 1][0])

    # A zero can also hide against the feasibility edges, where the grid has
    # no interior neighbor; the exact edges solve x^2 - x + sum(p^2) = 0 and
    # the refinement interval must stay on the feasible side of each edge.
    ssq = p2 * p2 + p3 * p3 + p4 * p4
    disc_b = 1.0 - 4.0 * ssq
    if disc_b >= 0.0 and vals:
        spacing = 2.0 / 2048.0
        edge_lo = math.sqrt((1.0 - math.sqrt(disc_b)) / 2.0)
        edge_hi = math.sqrt((1.0 + math.sqrt(disc_b)) / 2.0)
        if residual(edge_lo) is not None:
            ternary_min(edge_lo, min(edge_lo + spacing, 1.0))
        if residual(edge_hi) is not None:
            ternary_min(max(edge_hi - spacing, 1e-6), min(edge_hi, 1.0))

    # Solutions can also sit exactly on the feasibility boundary lambda1 = 0
    # (the GHZ family does); there the scan residual has no interior zero,
    # so the boundary is handled in closed form: lambda0^2 solves
    # x^2 - x + (p2^2 + p3^2 + p4^2) = 0 and the remaining phase comes from
    # the lambda2*lambda3 term alone.
    boundary: list[tuple[float, complex]] = []
    if disc_b >= -1e-12:
        disc_b = math.sqrt(max(disc_b, 0.0))
        for x in ((1.0 + disc_b) / 2.0, (1.0 - disc_b) / 2.0):
            if x <= EPS_ZERO:
                continue
            l0 = math.sqrt(x)
            prod23 = p2 * p3 / x
            if prod23 > EPS_ZERO:
                z2 = -cc.c23 * x * cmath.exp(-1j * (a2 + a3)) / (2.0 * p2 * p3)
                if abs(abs(z2) - 1.0) > 1e-6:
                    continue
                z = np.sqrt(z2)
            elif abs(cc.c23) <= 1e-9:
                z = 1.0 + 0.0j
            else:
                continue
            boundary.append((l0, complex(z)))

    # The equation system is polynomial and can admit several exact roots:
    # distinct pure states may share every frame and every complex
    # concurrence.  Candidates that are themselves canonical (their
    # assembled state re-decomposes to the inputs) are preferred; the
    # remaining ambiguity is broken by the larger lambda0.
    candidates: list[tuple[float, float, ThreeQubitCoordinates]] = []
    seen: list[float] = []
    work: list[tuple[float, complex | None]] = [(l0, None) for l0 in solutions]
    work.extend(boundary)
    for l0, z_fixed in work:
        if any(abs(l0 - s) < 1e-10 for s in seen):
            continue
        seen.append(l0)
        if z_fixed is None:
            r = residual(l0)
            if r is None or abs(r[0]) > 1e-8 or abs(r[1]) < 1e-12:
                continue
            z = r[1] / abs(r[1])
            lam1 = r[2]
        else:
            z = z_fixed / abs(z_fixed)
            lam1 = 0.0
        a1 = wrap_angle(-cmath.phase(z))
        lam = np.array([l0, lam1, p2 / l0, p3 / l0, p4 / l0])
        lam = lam / np.linalg.norm(lam)
        cand = ThreeQubitCoordinates(
            lam=tuple(float(v) for v in lam),
            alpha=(a1, a2 if lam[2] > EPS_ZERO else 0.0,
                   a3 if lam[3] > EPS_ZERO else 0.0,
                   a4 if lam[4] > EPS_ZERO else 0.0),
            frames=frames,
        )
        formula = complex_concurrences3(cand)
        if max(abs(g - w) for g, w in zip(formula.as_tuple(), cc.as_tuple())) > 1e-6:
            continue
        redec = gsd_decompose(assemble3(cand))
        dev = max(
            abs(g - w)
            for g, w in zip(complex_concurrences3(redec).as_tuple(), cc.as_tuple())
        )
        dev += max(frame_geodesic(fr, fi) for fr, fi in zip(redec.frames, frames))
        candidates.append((dev, l0, cand))

    if not candidates:
        raise Unrealizable("no unimodular phase solution within tolerance")
    self_consistent = [c for c in candidates if c[0] < 1e-6]
    rest = [c for c in candidates if c[0] >= 1e-6]
    # Larger lambda0 mirrors the root preference of the forward
    # decomposition; it cannot resolve genuine collisions.
    self_consistent.sort(key=lambda c: (round(c[0], 9), -c[1]))
    rest.sort(key=lambda c: (round(c[0], 9), -c[1]))
    return [c[2] for c in self_consistent + rest]


def invert_coordinates(
    cc: ComplexConcurrenceSet,
    frames: tuple[LocalFrame, LocalFrame, LocalFrame],
) -> ThreeQubitCoordinates:
    """Reconstruct alpha-form coordinates from concurrences plus frames.

    alpha2/alpha3/alpha4 are read off the arguments of c13/c12/c123 and the
    products l0*l2, l0*l3, l0*l4 off half their moduli.  The remaining
    unknowns (l0, l1, alpha1) satisfy normalization plus the complex c23
    equation, which for fixed l0 is a quadratic in z = e^{-i alpha1}; a
    2048-point scan over l0 with bisection locates roots with |z| = 1.

    Frames plus concurrences can genuinely collide (distinct states with
    identical inputs); this returns the preferred candidate, and
    invert_candidates exposes the full set for callers that can
    disambiguate, e.g. with the reduced Bloch vectors.
    """
    return invert_candidates(cc, frames)[0]
