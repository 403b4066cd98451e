"""Classification of heading pairs by which inner-tangent paths exist.

Case A: neither inner tangent exists; case B: only the RSL tangent exists;
case C: the LSR tangent exists.  For 0 < d < 2 the boundaries between the
cases are curves along which a center distance equals two; they are located
by bisection on the squared distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import EPS_GEOM, TWO_PI, PairSpec, center_distances
from .search import bisect_root

_RESIDUAL_TOL = 1e-12  # on the squared center distance
_CURVE_EPS = 1e-9


@dataclass(frozen=True)
class CaseLabel:
    """Region tag A | B | C, with a subregion tag when C and d < 2."""

    tag: str
    sub: str | None = None


@dataclass(frozen=True)
class CriticalAngles:
    """Angles where tangent disks coincide (alpha_star) or touch (sigma_star)."""

    alpha_star: float
    sigma_star: float


def critical_angles(d: float) -> CriticalAngles:
    if not 0.0 < d < 2.0:
        raise ValueError(f"critical angles are defined for 0 < d < 2, got {d}")
    return CriticalAngles(alpha_star=math.asin(d / 2.0), sigma_star=math.asin(d / 4.0))


def _dlr_sq(d: float, sigma: float, delta: float) -> float:
    cd = math.cos(delta)
    return d * d + 4.0 * d * cd * math.sin(sigma) + 4.0 * cd * cd


def _drl_sq(d: float, sigma: float, delta: float) -> float:
    cd = math.cos(delta)
    return d * d - 4.0 * d * cd * math.sin(sigma) + 4.0 * cd * cd


def _dlr_sq_ab(d: float, alpha: float, beta: float) -> float:
    x = d + math.sin(beta) + math.sin(alpha)
    y = math.cos(beta) + math.cos(alpha)
    return x * x + y * y


def _drl_sq_ab(d: float, alpha: float, beta: float) -> float:
    x = d - math.sin(beta) - math.sin(alpha)
    y = math.cos(beta) + math.cos(alpha)
    return x * x + y * y


def delta_lr_curve(d: float, sigma: float) -> float:
    """The delta in [alpha*, pi/2) where the LS-to-RF center distance is two.

    The squared distance decreases strictly in delta on the strip, so the
    crossing is unique; at sigma = 0 and sigma = pi it sits exactly at
    alpha*.
    """
    if not 0.0 < d < 2.0:
        raise ValueError(f"boundary curves require 0 < d < 2, got {d}")
    if not -_CURVE_EPS <= sigma <= math.pi + _CURVE_EPS:
        raise ValueError(f"sigma={sigma} outside [0, pi]")
    a_star = math.asin(d / 2.0)
    if sigma <= 1e-12 or sigma >= math.pi - 1e-12:
        return a_star
    return bisect_root(
        lambda delta: _dlr_sq(d, sigma, delta) - 4.0,
        a_star,
        0.5 * math.pi,
        residual_tol=_RESIDUAL_TOL,
    )


def delta_rl_curve(d: float, sigma: float) -> float:
    """The delta in [0, alpha*] where the RS-to-LF center distance is two.

    Defined for 0 <= sigma <= sigma*; endpoints are delta = alpha* at
    sigma = 0 and delta = 0 at sigma = sigma*.  The squared distance is a
    quadratic in cos(delta), so the crossing in this strip is unique.
    """
    if not 0.0 < d < 2.0:
        raise ValueError(f"boundary curves require 0 < d < 2, got {d}")
    sigma_star = math.asin(d / 4.0)
    if not -_CURVE_EPS <= sigma <= sigma_star + _CURVE_EPS:
        raise ValueError(f"sigma={sigma} outside [0, {sigma_star}]")
    a_star = math.asin(d / 2.0)
    if sigma <= 1e-12:
        return a_star
    if sigma >= sigma_star - 1e-12:
        return 0.0
    return bisect_root(
        lambda delta: _drl_sq(d, sigma, delta) - 4.0,
        0.0,
        a_star,
        residual_tol=_RESIDUAL_TOL,
    )


def _beta_curve(sq_fn, d: float, alpha: float) -> float:
    if not 0.0 < d < 2.0:
        raise ValueError(f"boundary curves require 0 < d < 2, got {d}")
    a_star = math.asin(d / 2.0)
    if not -_CURVE_EPS <= alpha <= a_star + _CURVE_EPS:
        raise ValueError(f"alpha={alpha} outside [0, {a_star}]")
    if alpha >= a_star - 1e-12:
        return TWO_PI - a_star
    # Squared distance rises from below 4 at beta = alpha + pi to above 4 at
    # beta = 2*pi - alpha with a single extremum in between: one crossing.
    return bisect_root(
        lambda beta: sq_fn(d, alpha, beta) - 4.0,
        alpha + math.pi,
        TWO_PI - alpha,
        residual_tol=_RESIDUAL_TOL,
    )


def beta_lr(d: float, alpha: float) -> float:
    """The beta in (alpha+pi, 2*pi-alpha) where the LS-to-RF distance is two."""
    return _beta_curve(_dlr_sq_ab, d, alpha)


def beta_rl(d: float, alpha: float) -> float:
    """The beta in (alpha+pi, 2*pi-alpha) where the RS-to-LF distance is two."""
    return _beta_curve(_drl_sq_ab, d, alpha)


def _sub_label(d: float, sigma: float, delta: float) -> str:
    """Resolve C1/C2/C3 from the boundary curves (d < 2 only)."""
    if not (-_CURVE_EPS <= sigma <= math.pi + _CURVE_EPS
            and -_CURVE_EPS <= delta <= math.pi + _CURVE_EPS):
        return "unresolved"
    sigma = min(max(sigma, 0.0), math.pi)
    delta = min(max(delta, 0.0), math.pi)
    sigma_star = math.asin(d / 4.0)
    if delta <= delta_lr_curve(d, sigma) + _CURVE_EPS:
        return "C1"
    if sigma >= math.pi - sigma_star - _CURVE_EPS:
        mirrored = min(max(math.pi - sigma, 0.0), sigma_star)
        if delta >= math.pi - delta_rl_curve(d, mirrored) - _CURVE_EPS:
            return "C2"
    if sigma <= sigma_star + _CURVE_EPS:
        if delta >= math.pi - delta_rl_curve(d, sigma) - _CURVE_EPS:
            return "C3"
    return "unresolved"


def classify(p: PairSpec) -> CaseLabel:
    """Case label from the two inner-tangent existence tests.

    Touching disks count as existing (distance exactly two), consistent
    with the open-disk convention.
    """
    cd = center_distances(p)
    if cd.d_lr >= 2.0 - EPS_GEOM:
        sub = _sub_label(p.d, p.sigma(), p.delta()) if 0.0 < p.d < 2.0 else None
        return CaseLabel("C", sub)
    if cd.d_rl >= 2.0 - EPS_GEOM:
        return CaseLabel("B")
    return CaseLabel("A")
