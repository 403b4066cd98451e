"""Brute-force oracle and numerical verification battery.

Independent of the analytic solver: path lengths here come from a vectorized
re-derivation of the tangent constructions, the supremum from a dense grid,
and every monotonicity/identity/inequality claim used by the solver is
re-tested on deterministic pseudo-random samples.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import regions, worst_case
from .dubins_paths import _ccc_forms, build_path, path_csc, shortest_path
from .geometry import EPS_GEOM, TWO_PI, PairSpec
from .worst_case import SQRT2, case_a_witness, case_b_witness, rsl_length_continuous

_ARC_SNAP = 1e-12


# ---------------------------------------------------------------------------
# Deterministic, portable sampling.
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator: 64-bit state, fixed published constants.

    Chosen over library generators so that sample streams are reproducible
    bit-for-bit from the seed alone, independent of platform or library
    version.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * (1.0 / (1 << 53)))


def _stream(seed: int, index: int) -> SplitMix64:
    """Independent child stream for check number ``index``."""
    rng = SplitMix64((seed ^ (0xA5A5A5A5A5A5A5A5 + index * 0x9E3779B97F4A7C15)) & _MASK64)
    rng.next_u64()
    return rng


# ---------------------------------------------------------------------------
# Vectorized word lengths (the oracle's own construction).
# ---------------------------------------------------------------------------

def _arc_np(x):
    r = np.remainder(x, TWO_PI)
    return np.where(r >= TWO_PI - _ARC_SNAP, 0.0, r)


def word_length_arrays(d: float, alpha, beta) -> dict:
    """Lengths of all six words over arrays of headings; inf where absent."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    half_pi = 0.5 * math.pi
    out = {}

    vx, vy = d - sb + sa, cb - ca
    dist = np.hypot(vx, vy)
    psi = np.arctan2(vy, vx)
    val = dist + _arc_np(psi - alpha) + _arc_np(beta - psi)
    out["LSL"] = np.where(dist == 0.0, _arc_np(beta - alpha), val)

    vx, vy = d + sb - sa, ca - cb
    dist = np.hypot(vx, vy)
    psi = np.arctan2(vy, vx)
    val = dist + _arc_np(alpha - psi) + _arc_np(psi - beta)
    out["RSR"] = np.where(dist == 0.0, _arc_np(alpha - beta), val)

    vx, vy = d + sb + sa, -cb - ca
    dist = np.hypot(vx, vy)
    straight = np.sqrt(np.clip(dist * dist - 4.0, 0.0, None))
    psi = np.arctan2(vy, vx) + np.arctan2(2.0, straight)
    val = straight + _arc_np(psi - alpha) + _arc_np(psi - beta)
    out["LSR"] = np.where(dist >= 2.0 - EPS_GEOM, val, np.inf)

    vx, vy = d - sb - sa, cb + ca
    dist = np.hypot(vx, vy)
    straight = np.sqrt(np.clip(dist * dist - 4.0, 0.0, None))
    psi = np.arctan2(vy, vx) - np.arctan2(2.0, straight)
    val = straight + _arc_np(alpha - psi) + _arc_np(beta - psi)
    out["RSL"] = np.where(dist >= 2.0 - EPS_GEOM, val, np.inf)

    vx, vy = d - sb + sa, cb - ca
    dist = np.hypot(vx, vy)
    ratio = np.clip(dist / 4.0, 0.0, 1.0)
    theta = np.arctan2(vy, vx)
    eta = np.arccos(ratio)
    val = (_arc_np(theta + eta - alpha + half_pi)
           + 2.0 * (math.pi - np.arcsin(ratio))
           + _arc_np(beta - half_pi - theta - math.pi + eta))
    val = np.where(dist == 0.0, TWO_PI + _arc_np(beta - alpha), val)
    out["LRL"] = np.where(dist <= 4.0 + EPS_GEOM, val, np.inf)

    vx, vy = d + sb - sa, ca - cb
    dist = np.hypot(vx, vy)
    ratio = np.clip(dist / 4.0, 0.0, 1.0)
    theta = np.arctan2(vy, vx)
    eta = np.arccos(ratio)
    val = (_arc_np(alpha + half_pi - theta + eta)
           + 2.0 * (math.pi - np.arcsin(ratio))
           + _arc_np(theta + math.pi + eta - beta - half_pi))
    val = np.where(dist == 0.0, TWO_PI + _arc_np(alpha - beta), val)
    out["RLR"] = np.where(dist <= 4.0 + EPS_GEOM, val, np.inf)
    return out


def shortest_length_array(d: float, alpha, beta):
    """Shortest-path length over arrays of headings."""
    return np.minimum.reduce(list(word_length_arrays(d, alpha, beta).values()))


# ---------------------------------------------------------------------------
# Grid supremum.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridReport:
    """Grid estimate of the worst-case excess; a certified lower bound."""

    d: float
    n: int
    sup_est: float
    argmax: tuple[float, float]
    runtime_hint: float


def grid_sup(d: float, n: int) -> GridReport:
    """Max of (shortest length - d) over an n-by-n grid of the canonical triangle.

    Rows are alpha in [0, pi]; each row carries n uniform betas spanning
    [alpha, 2*pi - alpha], boundary included.  Deterministic for fixed (d, n).
    """
    if n < 2:
        raise ValueError(f"grid resolution must be at least 2, got {n}")
    t0 = time.perf_counter()
    alphas = np.linspace(0.0, math.pi, n)
    best = -math.inf
    best_ab = (0.0, 0.0)
    chunk = max(1, 2_000_000 // n)
    for i0 in range(0, n, chunk):
        a = alphas[i0:i0 + chunk]
        betas = np.linspace(a, TWO_PI - a, n, axis=1)
        al = np.broadcast_to(a[:, None], betas.shape)
        lengths = shortest_length_array(d, al, betas)
        k = int(np.argmax(lengths))
        v = float(lengths.flat[k])
        if v > best:
            best = v
            best_ab = (float(al.flat[k]), float(betas.flat[k]))
    return GridReport(d, n, best - d, best_ab, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Finite-difference checks of the analytic partial derivatives.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FdCheck:
    """Analytic vs central-difference gradient components."""

    analytic: tuple
    numeric: tuple
    step: float

    @property
    def max_error(self) -> float:
        return max(abs(a - b) for a, b in zip(self.analytic, self.numeric))


def _rsl_len(d: float, alpha: float, beta: float) -> float:
    path = path_csc(PairSpec(d, alpha, beta), "RSL")
    if path is None:
        raise ValueError("stencil left the RSL existence region")
    return path.total_length


def fd_check_rsl(p: PairSpec, h: float = 1e-5) -> FdCheck:
    """Check d(RSL length)/d(alpha, beta) = (1 - cos of right arc, 1 - cos of left arc).

    Requires both circular arcs of the path to be clearly nonzero.  The
    step shrinks when the admissible neighborhood is smaller than the
    stencil.
    """
    path = path_csc(p, "RSL")
    if path is None:
        raise ValueError(f"no RSL path at ({p.alpha}, {p.beta})")
    gamma_r = path.segments[0].length
    gamma_l = path.segments[2].length
    if min(gamma_r, gamma_l) < 1e-6:
        raise ValueError("circular arc too short to differentiate across")
    analytic = (1.0 - math.cos(gamma_r), 1.0 - math.cos(gamma_l))
    step = h
    for _ in range(4):
        try:
            da = (_rsl_len(p.d, p.alpha + step, p.beta)
                  - _rsl_len(p.d, p.alpha - step, p.beta)) / (2.0 * step)
            db = (_rsl_len(p.d, p.alpha, p.beta + step)
                  - _rsl_len(p.d, p.alpha, p.beta - step)) / (2.0 * step)
            return FdCheck(analytic, (da, db), step)
        except ValueError:
            step *= 0.25
    raise ValueError("could not fit a difference stencil inside the region")


def fd_check_ccc(d: float, sigma: float, delta: float, h: float = 1e-5) -> FdCheck:
    """Check the four partials of the two CCC length forms on the rectangle.

    Components are ordered (lrl/dsigma, lrl/ddelta, rlr/dsigma, rlr/ddelta).
    Raises at the degenerate points where a middle-disk distance hits 0 or 4.
    """
    if not 0.0 < d < 2.0:
        raise ValueError(f"rectangle forms need 0 < d < 2, got {d}")
    a_star = math.asin(d / 2.0)
    if not (1e-9 < sigma < math.pi - 1e-9 and a_star + 1e-9 < delta < math.pi - a_star - 1e-9):
        raise ValueError("point is not interior to the rectangle")
    sd, cd_ = math.sin(delta), math.cos(delta)
    ss, cs = math.sin(sigma), math.cos(sigma)
    d_l = math.hypot(d - 2.0 * sd * cs, 2.0 * sd * ss)
    d_r = math.hypot(d + 2.0 * sd * cs, 2.0 * sd * ss)
    den_l = d_l * math.sqrt(max(1.0 - (d_l / 4.0) ** 2, 0.0))
    den_r = d_r * math.sqrt(max(1.0 - (d_r / 4.0) ** 2, 0.0))
    if den_l < 1e-9 or den_r < 1e-9:
        raise ValueError("derivative undefined: middle-disk distance at 0 or 4")
    analytic = (
        -2.0 * d * sd * ss / den_l,
        2.0 + (-4.0 * cd_ * sd + 2.0 * d * cd_ * cs) / den_l,
        2.0 * d * sd * ss / den_r,
        -2.0 + (-4.0 * cd_ * sd - 2.0 * d * cd_ * cs) / den_r,
    )
    lrl_sp = _ccc_forms(d, sigma + h, delta)[0] - _ccc_forms(d, sigma - h, delta)[0]
    lrl_dp = _ccc_forms(d, sigma, delta + h)[0] - _ccc_forms(d, sigma, delta - h)[0]
    rlr_sp = _ccc_forms(d, sigma + h, delta)[1] - _ccc_forms(d, sigma - h, delta)[1]
    rlr_dp = _ccc_forms(d, sigma, delta + h)[1] - _ccc_forms(d, sigma, delta - h)[1]
    numeric = tuple(v / (2.0 * h) for v in (lrl_sp, lrl_dp, rlr_sp, rlr_dp))
    return FdCheck(analytic, numeric, h)


# ---------------------------------------------------------------------------
# Verification suite: one report per claim the solver leans on.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    samples: int
    violations: int
    worst_margin: float


class _Margins:
    """Accumulates per-sample margins; a negative margin is a violation."""

    def __init__(self):
        self.count = 0
        self.violations = 0
        self.worst = math.inf

    def add(self, margin: float):
        self.count += 1
        if margin < self.worst:
            self.worst = margin
        if margin < 0.0:
            self.violations += 1

    def identity(self, residual: float, tol: float = 1e-8):
        self.add(tol - abs(residual))

    def report(self, lemma_id: str) -> LemmaReport:
        worst = 0.0 if self.count == 0 else self.worst
        return LemmaReport(lemma_id, self.count, self.violations, worst)


_INEQ_SLACK = 1e-9


def _word_len(p: PairSpec, word: str) -> float | None:
    path = build_path(p, word)
    return None if path is None else path.total_length


def _sample_b_triangle(rng: SplitMix64, d: float) -> tuple[float, float]:
    """(alpha, beta) strictly inside the RSL-only part of the triangle."""
    a_star = regions.critical_angles(d).alpha_star
    alpha = rng.uniform(0.0, a_star * (1.0 - 1e-6))
    lo = regions.beta_rl(d, alpha)
    hi = regions.beta_lr(d, alpha)
    return alpha, lo + rng.uniform(1e-3, 1.0 - 1e-3) * (hi - lo)


def _sample_a_sigma_delta(rng: SplitMix64, d: float, triangle: bool = False) -> tuple[float, float]:
    """(sigma, delta) strictly inside region A (optionally inside the triangle)."""
    for _ in range(200):
        sigma = rng.uniform(0.0, math.pi)
        edge = regions.delta_lr_curve(d, sigma)
        lo, hi = edge, math.pi - edge
        if triangle:
            hi = min(hi, sigma)
        if hi - lo < 1e-5:
            continue
        return sigma, lo + rng.uniform(1e-3, 1.0 - 1e-3) * (hi - lo)
    raise RuntimeError(f"failed to sample region A at d={d}")


def _sample_c_triangle(rng: SplitMix64, d: float) -> PairSpec:
    for _ in range(400):
        alpha = rng.uniform(0.0, math.pi)
        beta = rng.uniform(alpha, TWO_PI - alpha)
        p = PairSpec(d, alpha, beta)
        if regions.classify(p).tag == "C":
            return p
    raise RuntimeError(f"failed to sample region C at d={d}")


def _ccc_forms_np(d, sigma, delta):
    sd = np.sin(delta)
    ss, cs = np.sin(sigma), np.cos(sigma)
    d_l = np.hypot(d - 2.0 * sd * cs, 2.0 * sd * ss)
    d_r = np.hypot(d + 2.0 * sd * cs, 2.0 * sd * ss)
    lrl = 4.0 * (math.pi - np.arcsin(np.clip(d_l / 4.0, 0.0, 1.0))) + 2.0 * delta - TWO_PI
    rlr = 4.0 * (math.pi - np.arcsin(np.clip(d_r / 4.0, 0.0, 1.0))) - 2.0 * delta
    return lrl, rlr


def _rect_grid(d: float, g: int):
    a_star = math.asin(d / 2.0)
    sig = np.linspace(0.0, math.pi, g)
    dl = np.linspace(a_star, math.pi - a_star, g)
    s_mesh, d_mesh = np.meshgrid(sig, dl, indexing="ij")
    return sig, dl, s_mesh, d_mesh


def _n_distances(samples: int, lo: int = 2, hi: int = 8) -> int:
    return max(lo, min(hi, samples // 1500))


def _check_equal_angle(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.0, 4.0)
        theta = rng.uniform(0.0, TWO_PI)
        phi = rng.uniform(0.0, TWO_PI)
        px = math.cos(theta - phi)
        py = math.sin(theta - phi)
        qx = d - math.cos(theta + phi)
        qy = math.sin(theta + phi)
        explicit = (qx - px) ** 2 + (qy - py) ** 2
        formula = d * d - 4.0 * d * math.cos(theta) * math.cos(phi) + 4.0 * math.cos(theta) ** 2
        m.identity(explicit - formula, 1e-12)
        # the four substitutions reproduce the squared center distances
        p = PairSpec(d, rng.uniform(0.0, TWO_PI), rng.uniform(0.0, TWO_PI))
        sig, del_ = p.sigma(), p.delta()
        from .geometry import equal_angle_distance

        subs = (
            (0.5 * math.pi - del_, -sig, d * d - 4 * d * math.sin(del_) * math.cos(sig) + 4 * math.sin(del_) ** 2),
            (0.5 * math.pi - del_, math.pi - sig, d * d + 4 * d * math.sin(del_) * math.cos(sig) + 4 * math.sin(del_) ** 2),
            (math.pi - del_, 0.5 * math.pi - sig, d * d + 4 * d * math.cos(del_) * math.sin(sig) + 4 * math.cos(del_) ** 2),
            (-del_, 0.5 * math.pi - sig, d * d - 4 * d * math.cos(del_) * math.sin(sig) + 4 * math.cos(del_) ** 2),
        )
        for theta_s, phi_s, want in subs:
            m.identity(equal_angle_distance(d, theta_s, phi_s) - want, 1e-12)
    return m


def _check_region_boundaries(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        ca = regions.critical_angles(d)
        sigma = rng.uniform(0.0, math.pi)
        edge = regions.delta_lr_curve(d, sigma)
        m.add(edge - ca.alpha_star + _INEQ_SLACK)
        m.add(0.5 * math.pi - edge + _INEQ_SLACK)
        m.identity(regions._dlr_sq(d, sigma, edge) - 4.0, 1e-10)
        s2 = rng.uniform(0.0, ca.sigma_star)
        low = regions.delta_rl_curve(d, s2)
        m.add(low + _INEQ_SLACK)
        m.add(ca.alpha_star - low + _INEQ_SLACK)
        m.identity(regions._drl_sq(d, s2, low) - 4.0, 1e-10)
        # strip alpha* <= delta <= pi/2 keeps the RSL distance at most 2
        d3 = rng.uniform(ca.alpha_star, 0.5 * math.pi)
        m.add(4.0 - regions._drl_sq(d, rng.uniform(0.0, math.pi), d3) + _INEQ_SLACK)
        # middle band sigma* < sigma < pi - sigma* stays strictly below 2
        s4 = rng.uniform(ca.sigma_star + 1e-9, math.pi - ca.sigma_star - 1e-9)
        d4 = rng.uniform(0.0, ca.alpha_star)
        m.add(4.0 - regions._drl_sq(d, s4, d4) + _INEQ_SLACK)
        m.identity(regions.delta_lr_curve(d, 0.0) - ca.alpha_star, 1e-12)
        m.identity(regions.delta_lr_curve(d, math.pi) - ca.alpha_star, 1e-12)
        m.identity(regions.delta_rl_curve(d, 0.0) - ca.alpha_star, 1e-12)
        m.identity(regions.delta_rl_curve(d, ca.sigma_star), 1e-12)
    return m


def _check_case_b_basics(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        alpha, beta = _sample_b_triangle(rng, d)
        p = PairSpec(d, alpha, beta)
        m.add(1.0 if regions.classify(p).tag == "B" else -1.0)
        m.add(p.delta() - 0.5 * math.pi + _INEQ_SLACK)
        m.add(alpha + _INEQ_SLACK)
        m.add(0.5 * math.pi - alpha + _INEQ_SLACK)
        m.add(beta - (math.pi + alpha) + _INEQ_SLACK)
        m.add((TWO_PI - alpha) - beta + _INEQ_SLACK)
    return m


def _check_case_b_alpha_monotone(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        a_star = regions.critical_angles(d).alpha_star
        a1 = rng.uniform(0.0, a_star)
        a2 = rng.uniform(0.0, a_star)
        a1, a2 = min(a1, a2), max(a1, a2)
        b1, b2 = regions.beta_lr(d, a1), regions.beta_lr(d, a2)
        m.add(b1 - b2 + _INEQ_SLACK)  # decreasing
        alpha = rng.uniform(0.0, a_star * (1.0 - 1e-9))
        lr = regions.beta_lr(d, alpha)
        rl = regions.beta_rl(d, alpha)
        m.add(lr - (TWO_PI - a_star) + _INEQ_SLACK)
        m.add((TWO_PI - a_star) - rl + _INEQ_SLACK)
        m.add((TWO_PI - alpha) - lr + _INEQ_SLACK)
        m.add(rl - (alpha + math.pi) + _INEQ_SLACK)
        m.identity(regions._dlr_sq_ab(d, alpha, lr) - 4.0, 1e-10)
        m.identity(regions._drl_sq_ab(d, alpha, rl) - 4.0, 1e-10)
        m.identity(regions.beta_lr(d, a_star) - (TWO_PI - a_star), 1e-12)
        m.identity(regions.beta_rl(d, a_star) - (TWO_PI - a_star), 1e-12)
    return m


def _check_lrl_length_general(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.0, 3.8)
        p = PairSpec(d, rng.uniform(0.0, TWO_PI), rng.uniform(0.0, TWO_PI))
        delta = p.delta()
        for word, sign in (("LRL", +1.0), ("RLR", -1.0)):
            path = build_path(p, word)
            if path is None:
                continue
            mu = 0.5 * path.segments[1].length
            r = math.fmod(path.total_length - (4.0 * mu + sign * 2.0 * delta), TWO_PI)
            r = abs(r)
            m.identity(min(r, TWO_PI - r), 1e-9)
    return m


def _check_lrl_length_specific(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        sigma, delta = _sample_a_sigma_delta(rng, d)
        p = PairSpec.from_sigma_delta(d, sigma, delta)
        lrl_f, rlr_f = _ccc_forms(d, sigma, delta)
        m.identity(_word_len(p, "LRL") - lrl_f, 1e-9)
        m.identity(_word_len(p, "RLR") - rlr_f, 1e-9)
        alpha, beta = _sample_b_triangle(rng, d)
        q = PairSpec(d, alpha, beta)
        lrl_f, rlr_f = _ccc_forms(d, q.sigma(), q.delta())
        m.identity(_word_len(q, "LRL") - lrl_f, 1e-9)
        m.identity(_word_len(q, "RLR") - (rlr_f + TWO_PI), 1e-9)
    return m


def _on_ccw_arc(x: float, start: float, end: float) -> bool | None:
    """Membership of angle x on the ccw arc start->end; None when ambiguous."""
    span = (end - start) % TWO_PI
    pos = (x - start) % TWO_PI
    if min(pos, abs(pos - span), TWO_PI - pos) < 1e-6:
        return None
    return pos <= span


def _check_ccc_endpoint_locations(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        alpha = rng.uniform(0.0, TWO_PI)
        beta = rng.uniform(0.0, TWO_PI)
        p = PairSpec(d, alpha, beta)
        sa, ca = math.sin(alpha), math.cos(alpha)
        sb, cb = math.sin(beta), math.cos(beta)
        d_lr = math.hypot(d + sb + sa, cb + ca)
        d_rl = math.hypot(d - sb - sa, cb + ca)
        if abs(d_lr - 2.0) < 1e-6 or abs(d_rl - 2.0) < 1e-6:
            continue
        # left-disk pair: tangent points of the two candidate middle disks
        vx, vy = d - sb + sa, cb - ca
        d_l = math.hypot(vx, vy)
        if d_l < 1e-6 or d_l > 4.0 - 1e-6:
            continue
        theta = math.atan2(vy, vx)
        eta = math.acos(d_l / 4.0)
        s1, s2 = theta - eta, theta + eta
        got = _on_ccw_arc(alpha - 0.5 * math.pi, s1, s2)
        if got is not None:
            m.add(1.0 if got == (d_rl < 2.0) else -1.0)
        f2, f1 = theta + math.pi - eta, theta + math.pi + eta
        got = _on_ccw_arc(beta - 0.5 * math.pi, f2, f1)
        if got is not None:
            m.add(1.0 if got == (d_lr < 2.0) else -1.0)
        # right-disk pair
        wx, wy = d + sb - sa, ca - cb
        d_r = math.hypot(wx, wy)
        if d_r < 1e-6 or d_r > 4.0 - 1e-6:
            continue
        theta_r = math.atan2(wy, wx)
        eta_r = math.acos(d_r / 4.0)
        s1r, s2r = theta_r + eta_r, theta_r - eta_r
        got = _on_ccw_arc(alpha + 0.5 * math.pi, s2r, s1r)  # cw arc s1r -> s2r
        if got is not None:
            m.add(1.0 if got == (d_lr < 2.0) else -1.0)
        f2r, f1r = theta_r + math.pi + eta_r, theta_r + math.pi - eta_r
        got = _on_ccw_arc(beta + 0.5 * math.pi, f1r, f2r)  # cw arc f2r -> f1r
        if got is not None:
            m.add(1.0 if got == (d_rl < 2.0) else -1.0)
        if d_rl >= 2.0 + 1e-6 and alpha <= 0.5 * math.pi:
            got = _on_ccw_arc(alpha - 0.5 * math.pi, theta - 0.5 * math.pi, s1)
            if got is not None:
                m.add(1.0 if got else -1.0)
    return m


def _check_monotonicity_csc(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d1 = rng.uniform(0.0, 3.0)
        d2 = d1 + rng.uniform(1e-6, 3.5)
        alpha = rng.uniform(0.0, TWO_PI)
        beta = rng.uniform(0.0, TWO_PI)
        p1 = PairSpec(d1, alpha, beta)
        best2 = shortest_path(PairSpec(d2, alpha, beta))[1]
        for word in ("LSL", "RSR", "LSR", "RSL"):
            length = _word_len(p1, word)
            if length is not None:
                m.add(length + (d2 - d1) + _INEQ_SLACK - best2)
    return m


def _check_monotonicity_all_but_rlr(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d1 = rng.uniform(0.05, 1.95)
        alpha, beta = _sample_b_triangle(rng, d1)
        length = _word_len(PairSpec(d1, alpha, beta), "LRL")
        d2 = d1 + rng.uniform(1e-6, 4.0 - d1)
        best2 = shortest_path(PairSpec(d2, alpha, beta))[1]
        m.add(length + (d2 - d1) + _INEQ_SLACK - best2)
    return m


def _lrl_form_ab(d: float, alpha: float, beta: float) -> float:
    return _ccc_forms(d, 0.5 * (alpha + beta), 0.5 * (beta - alpha))[0]


def _check_lrl_changes_alpha_beta(rng, n, grid):
    m = _Margins()
    h = 1e-4
    fd_slack = 1e-6
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        sigma, delta = _sample_a_sigma_delta(rng, d, triangle=True)
        p = PairSpec.from_sigma_delta(d, sigma, delta)
        a, b = p.alpha, p.beta
        m.add(_lrl_form_ab(d, a, b + h) - _lrl_form_ab(d, a, b) + fd_slack)  # rising in beta
        alpha, beta = _sample_b_triangle(rng, d)
        m.add(_lrl_form_ab(d, alpha, beta) - _lrl_form_ab(d, alpha + h, beta) + fd_slack)
        m.add(_lrl_form_ab(d, alpha, beta + h) - _lrl_form_ab(d, alpha, beta) + fd_slack)
        if beta - h >= 1.5 * math.pi:
            slope = (_lrl_form_ab(d, alpha, beta + h) - _lrl_form_ab(d, alpha, beta - h)) / (2.0 * h)
            m.add(slope - 1.0 + fd_slack)
    return m


def _check_l_r_fixed(rng, n, grid):
    m = _Margins()
    h = 1e-5
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        a_star = math.asin(d / 2.0)
        sigma = rng.uniform(2 * h, math.pi - 2 * h)
        delta = rng.uniform(a_star + 2 * h, math.pi - a_star - 2 * h)
        l0, r0 = _ccc_forms(d, sigma, delta)
        l_s, r_s = _ccc_forms(d, sigma + h, delta)
        l_d, r_d = _ccc_forms(d, sigma, delta + h)
        m.add(l0 - l_s + _INEQ_SLACK)  # lrl form falls in sigma
        m.add(r_s - r0 + _INEQ_SLACK)  # rlr form rises in sigma
        m.add(l_d - l0 + _INEQ_SLACK)  # lrl form rises in delta
        m.add(r0 - r_d + _INEQ_SLACK)  # rlr form falls in delta
    return m


def _check_lrl_eq_rlr(rng, n, grid):
    m = _Margins()
    g = max(grid, 101)
    for _ in range(_n_distances(n)):
        d = rng.uniform(0.05, 1.95)
        sig, dl, s_mesh, d_mesh = _rect_grid(d, g)
        lrl, rlr = _ccc_forms_np(d, s_mesh, d_mesh)
        c = np.minimum(lrl, rlr)
        interior = c[1:-1, 1:-1]
        k = int(np.argmax(interior))
        i, j = divmod(k, interior.shape[1])
        s_at, d_at = sig[i + 1], dl[j + 1]
        step = max(sig[1] - sig[0], dl[1] - dl[0])
        dist_boundary = min(s_at - sig[0], sig[-1] - s_at, d_at - dl[0], dl[-1] - d_at)
        dist_center = math.hypot(s_at - 0.5 * math.pi, d_at - 0.5 * math.pi)
        m.add(2.5 * step - min(dist_boundary, dist_center))
    return m


def _check_max_rectii(rng, n, grid):
    m = _Margins()
    g = max(grid, 101)
    for _ in range(_n_distances(n)):
        d = rng.uniform(0.05, 1.95)
        value = case_a_witness(d).value
        sig, dl, s_mesh, d_mesh = _rect_grid(d, g)
        lrl, rlr = _ccc_forms_np(d, s_mesh, d_mesh)
        c = np.minimum(lrl, rlr)
        center = float(np.minimum(*_ccc_forms_np(d, 0.5 * math.pi, 0.5 * math.pi)))
        grid_max = float(c.max())
        m.add(max(value, center) + 1e-9 - grid_max)  # grid never beats the claimed max
        step = max(sig[1] - sig[0], dl[1] - dl[0])
        m.add(grid_max + 8.0 * step - value)  # and comes close to it
        # the claimed rectangle side carries the maximum in each regime
        if d < SQRT2 - 0.05:
            side_best = float(c[-1, :].max())  # sigma = pi edge
        elif d > SQRT2 + 0.05:
            side_best = float(c[:, -1].max())  # delta = pi - alpha* edge
        else:
            side_best = None
        if side_best is not None:
            m.add(side_best + 4.0 * step - grid_max)
    return m


def _check_a_monotonicity(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d1 = rng.uniform(0.01, SQRT2)
        d2 = rng.uniform(0.01, SQRT2)
        d1, d2 = min(d1, d2), max(d1, d2)
        if d2 - d1 < 1e-9:
            continue
        v1 = case_a_witness(d1).value
        v2 = case_a_witness(d2).value
        m.add(v2 - v1 + _INEQ_SLACK)            # value rises with d
        m.add((v1 - d1) - (v2 - d2) + _INEQ_SLACK)  # excess falls with d
    return m


def _check_region1_dist_less_sqrt2(rng, n, grid):
    m = _Margins()
    g = max(grid, 101)
    for _ in range(_n_distances(n)):
        d = rng.uniform(0.01, SQRT2)
        value = case_a_witness(d).value
        _, _, s_mesh, d_mesh = _rect_grid(d, g)
        lrl, rlr = _ccc_forms_np(d, s_mesh, d_mesh)
        grid_max = float(np.minimum(lrl, rlr).max())
        m.add(value + 1e-9 - grid_max)
        center = 3.0 * math.pi - 4.0 * math.asin(math.sqrt(d * d + 4.0) / 4.0)
        got = float(np.minimum(*_ccc_forms_np(d, 0.5 * math.pi, 0.5 * math.pi)))
        m.identity(got - center, 1e-12)
        m.add(value - center + _INEQ_SLACK)
    return m


def _check_region2_lrl_rlr_shorter(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        sigma, delta = _sample_a_sigma_delta(rng, d)
        p = PairSpec.from_sigma_delta(d, sigma, delta)
        m.add(_word_len(p, "LSL") - _word_len(p, "LRL") + _INEQ_SLACK)
        m.add(_word_len(p, "RSR") - _word_len(p, "RLR") + _INEQ_SLACK)
    return m


def _check_a_less_sqrt2(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.01, SQRT2 * (1.0 - 1e-9))
        a_star = math.asin(d / 2.0)
        m.add(case_a_witness(d).value - (TWO_PI + 2.0 * a_star) + _INEQ_SLACK)
    return m


def _check_a_larger_sqrt2(rng, n, grid):
    m = _Margins()
    g = max(grid, 101)
    for _ in range(_n_distances(n)):
        d = rng.uniform(SQRT2 + 1e-3, 1.95)
        sig, dl, s_mesh, d_mesh = _rect_grid(d, g)
        lrl, rlr = _ccc_forms_np(d, s_mesh, d_mesh)
        c = np.minimum(lrl, rlr)
        edges = np.array([regions.delta_lr_curve(d, s) for s in sig])
        mask = ((d_mesh > edges[:, None] + 1e-9)
                & (d_mesh < math.pi - edges[:, None] - 1e-9)
                & (d_mesh <= s_mesh))
        if not mask.any():
            continue
        dub_a_est = float(c[mask].max()) - d
        dub_b = case_b_witness(d).value - d
        m.add(max(TWO_PI, dub_b) + 1e-6 - dub_a_est)
    return m


def _check_rsl_changes_alpha_beta(rng, n, grid):
    m = _Margins()
    h = 1e-5
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        a_star = regions.critical_angles(d).alpha_star
        alpha, beta = _sample_b_triangle(rng, d)
        rsl = _word_len(PairSpec(d, alpha, beta), "RSL")
        up_a = _word_len(PairSpec(d, alpha + h, beta), "RSL")
        up_b = _word_len(PairSpec(d, alpha, beta + h), "RSL")
        if rsl is not None and up_a is not None:
            m.add(up_a - rsl + _INEQ_SLACK)
        if rsl is not None and up_b is not None:
            m.add(up_b - rsl + _INEQ_SLACK)
        a1 = rng.uniform(0.0, a_star * (1.0 - 1e-6))
        a2 = rng.uniform(0.0, a_star * (1.0 - 1e-6))
        a1, a2 = min(a1, a2), max(a1, a2)
        if a2 - a1 > 1e-9:
            lo = rsl_length_continuous(PairSpec(d, a1, TWO_PI - a1))
            hi = rsl_length_continuous(PairSpec(d, a2, TWO_PI - a2))
            m.add(hi - lo + _INEQ_SLACK)  # rising along the diagonal
        if rsl is not None:
            ceiling = 2.0 * a_star + TWO_PI
            m.add(ceiling - rsl + _INEQ_SLACK)
    return m


def _check_region3_lrl_rsl_shorter(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.05, 1.95)
        alpha, beta = _sample_b_triangle(rng, d)
        p = PairSpec(d, alpha, beta)
        lrl = _word_len(p, "LRL")
        m.add(_word_len(p, "LSL") - lrl + _INEQ_SLACK)
        m.add(_word_len(p, "RLR") - lrl + _INEQ_SLACK)
        m.add(_word_len(p, "RSR") - _word_len(p, "RSL") + _INEQ_SLACK)
    return m


def _curve_gap(d: float, alpha: float) -> float:
    beta = regions.beta_lr(d, alpha)
    return (_lrl_form_ab(d, alpha, beta)
            - rsl_length_continuous(PairSpec(d, alpha, beta)))


def _check_lrl_rsl_monotone(rng, n, grid):
    m = _Margins()
    for _ in range(n // 4 + 1):
        d = rng.uniform(0.05, 1.95)
        a_star = regions.critical_angles(d).alpha_star
        a1 = rng.uniform(0.0, a_star * (1.0 - 1e-6))
        a2 = rng.uniform(0.0, a_star * (1.0 - 1e-6))
        a1, a2 = min(a1, a2), max(a1, a2)
        if a2 - a1 < 1e-9:
            continue
        m.add(_curve_gap(d, a1) - _curve_gap(d, a2) + _INEQ_SLACK)
    return m


def _check_blr_no_extremum(rng, n, grid):
    m = _Margins()
    for _ in range(_n_distances(n, lo=3, hi=10)):
        d = rng.uniform(0.05, 1.95)
        a_star = regions.critical_angles(d).alpha_star
        alphas = [a_star * k / 200.0 for k in range(201)]
        vals = []
        for a in alphas:
            beta = regions.beta_lr(d, a)
            vals.append(rsl_length_continuous(PairSpec(d, a, beta)))
        m.add(d + TWO_PI - vals[0] + _INEQ_SLACK)  # the alpha = 0 endpoint
        for i in range(1, 200):
            if vals[i] > vals[i - 1] + 1e-12 and vals[i] > vals[i + 1] + 1e-12:
                m.add(d + TWO_PI - vals[i] + 1e-6)  # interior local maximum
    return m


def _check_dub_b(rng, n, grid):
    m = _Margins()
    d_hi = min(worst_case.d_star() + 1e-6, 1.95)
    for _ in range(_n_distances(n, lo=3, hi=10)):
        d = rng.uniform(SQRT2, d_hi)
        w = case_b_witness(d)
        lrl = _lrl_form_ab(d, w.alpha_b, w.beta_b)
        rsl = rsl_length_continuous(PairSpec(d, w.alpha_b, w.beta_b))
        m.identity(lrl - rsl, 1e-9)
        a_star = regions.critical_angles(d).alpha_star
        for k in range(301):
            a = a_star * k / 300.0
            beta = regions.beta_lr(d, a)
            both = min(_lrl_form_ab(d, a, beta),
                       rsl_length_continuous(PairSpec(d, a, beta)))
            m.add(w.value + 1e-6 - both)
        for _ in range(50):
            alpha, beta = _sample_b_triangle(rng, d)
            both = min(_lrl_form_ab(d, alpha, beta),
                       rsl_length_continuous(PairSpec(d, alpha, beta)))
            m.add(w.value + 1e-6 - both)
    return m


def _check_dub_c_upper_bound(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.01, 6.0)
        p = _sample_c_triangle(rng, d)
        lsr = _word_len(p, "LSR")
        rsr = _word_len(p, "RSR")
        m.add(d + TWO_PI + _INEQ_SLACK - min(lsr, rsr))
    return m


def _check_lower_bound(rng, n, grid):
    m = _Margins()
    for _ in range(n):
        d = rng.uniform(0.0, 6.0)
        m.identity(shortest_path(PairSpec(d, math.pi, math.pi))[1] - (d + TWO_PI), 1e-9)
        if d > 0.0:
            m.add(worst_case.dub(d).dub - TWO_PI + _INEQ_SLACK)
    return m


#: Verification checks in presentation order: id -> (function, one-line claim).
LEMMA_CHECKS = {
    "equal-angle": (_check_equal_angle, "equal-height chord identity and the four center-distance substitutions"),
    "region-boundaries": (_check_region_boundaries, "boundary curves hit distance two and bound the strips"),
    "case-b-basics": (_check_case_b_basics, "RSL-only points sit in the upper heading band"),
    "case-b-alpha-monotone": (_check_case_b_alpha_monotone, "touching curves bracket the region; outer curve decreases"),
    "lrl-length-general": (_check_lrl_length_general, "CCC lengths match 4*mu +/- 2*delta modulo 2*pi"),
    "lrl-length-specific": (_check_lrl_length_specific, "exact 2*pi multiple in the two inner regions"),
    "ccc-endpoint-locations": (_check_ccc_endpoint_locations, "endpoint arc membership tracks the inner-tangent tests"),
    "monotonicity-csc": (_check_monotonicity_csc, "stretching a CSC path adds exactly the extra distance"),
    "monotonicity-all-but-rlr": (_check_monotonicity_all_but_rlr, "stretching extends to LRL in the RSL-only region"),
    "lrl-changes-alpha-beta": (_check_lrl_changes_alpha_beta, "LRL length monotone in each heading where claimed"),
    "l-r-fixed": (_check_l_r_fixed, "rectangle forms strictly monotone in each variable"),
    "lrl-eq-rlr": (_check_lrl_eq_rlr, "interior maximum only at the center or on the boundary"),
    "max-rectii": (_check_max_rectii, "maximizer pinned to the correct rectangle side per regime"),
    "a-monotonicity": (_check_a_monotonicity, "interior-case value rises, its excess falls"),
    "region1-dist-less-sqrt2": (_check_region1_dist_less_sqrt2, "crossing value dominates the rectangle below sqrt(2)"),
    "region2-lrl-rlr-shorter": (_check_region2_lrl_rlr_shorter, "CCC dominates outer tangents in the inner region"),
    "a-less-sqrt2": (_check_a_less_sqrt2, "interior-case value exceeds 2*pi + 2*alpha*"),
    "a-larger-sqrt2": (_check_a_larger_sqrt2, "interior-case excess capped by the boundary-case excess"),
    "rsl-changes-alpha-beta": (_check_rsl_changes_alpha_beta, "patched RSL length monotone with ceiling 2*alpha* + 2*pi"),
    "region3-lrl-rsl-shorter": (_check_region3_lrl_rsl_shorter, "LRL and RSL dominate in the RSL-only region"),
    "lrl-rsl-monotone": (_check_lrl_rsl_monotone, "LRL minus RSL decreases along the touching curve"),
    "blr-no-extremum": (_check_blr_no_extremum, "curve extrema of patched RSL stay within d + 2*pi"),
    "dub_b": (_check_dub_b, "boundary-case witness maximizes min(LRL, RSL)"),
    "dub_c_upper_bound": (_check_dub_c_upper_bound, "RSR or LSR stays within d + 2*pi when LSR exists"),
    "lower-bound": (_check_lower_bound, "opposed headings cost exactly d + 2*pi; excess floor 2*pi"),
}


def lemma_suite(seed: int, samples: int, lemma_ids=None, grid: int = 301) -> list[LemmaReport]:
    """Run the verification battery; deterministic for fixed (seed, samples).

    ``lemma_ids`` restricts the run; grid-backed checks use ``grid`` points
    per axis.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    ids = list(LEMMA_CHECKS) if lemma_ids is None else list(lemma_ids)
    reports = []
    for lemma_id in ids:
        try:
            fn, _ = LEMMA_CHECKS[lemma_id]
        except KeyError:
            raise ValueError(f"unknown lemma id {lemma_id!r}") from None
        index = list(LEMMA_CHECKS).index(lemma_id)
        margins = fn(_stream(seed, index), samples, grid)
        reports.append(margins.report(lemma_id))
    return reports
