"""The worst-case excess of shortest bounded-curvature paths over distance.

For each separation d this module computes the supremum, over heading
pairs, of (shortest path length - d): a piecewise curve that falls from
7*pi/3 at d = 0 to 2*pi at d_star ~ 1.5874, with a breakpoint at sqrt(2),
and is constant beyond d_star.  Witness heading pairs are reported along
with whether the supremum is actually attained.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache

from . import regions
from .dubins_paths import _ccc_forms, path_csc
from .geometry import TWO_PI, PairSpec, norm_angle
from .search import bisect_root

SQRT2 = math.sqrt(2.0)

#: Environment variable that overrides the computed plateau breakpoint.
DSTAR_ENV = "DUBINS_DSTAR"

_WIDTH_TOL = 1e-12
_POINT_EPS = 1e-9


@dataclass(frozen=True)
class DubPoint:
    """One sample of the worst-case curve."""

    d: float
    dub: float
    active_case: str
    witness: tuple[float, float]
    attained: bool


@dataclass(frozen=True)
class CaseAWitness:
    """Interior-case maximizer: the crossing of the two CCC length forms."""

    sigma_a: float
    delta_a: float
    value: float


@dataclass(frozen=True)
class CaseBWitness:
    """Boundary-case maximizer on the touching-disk curve beta_lr."""

    alpha_b: float
    beta_b: float
    value: float


def rsl_length_continuous(p: PairSpec) -> float:
    """RSL length patched to its continuous limit at the two jump points.

    At (0, 2*pi) the RSL path collapses to the straight segment but its
    limit is d + 2*pi; at (alpha*, 2*pi - alpha*) the straight segment and
    the left arc vanish together and the limit is 2*alpha* + 2*pi.  Raises
    outside the extended region where RSL exists for 0 <= alpha <= alpha*.
    """
    d = p.d
    if not 0.0 < d < 2.0:
        raise ValueError(f"patched RSL length is defined for 0 < d < 2, got {d}")
    a_star = regions.critical_angles(d).alpha_star
    alpha = p.alpha
    if not -_POINT_EPS <= alpha <= a_star + _POINT_EPS:
        raise ValueError(f"alpha={alpha} outside [0, {a_star}]")
    # Lift beta so the corner (0, 2*pi), normalized to (0, 0), stays inside.
    beta_floor = regions.beta_rl(d, min(max(alpha, 0.0), a_star))
    beta = p.beta
    if beta < beta_floor - _POINT_EPS and beta + TWO_PI <= TWO_PI - alpha + _POINT_EPS:
        beta += TWO_PI
    if not beta_floor - _POINT_EPS <= beta <= TWO_PI - alpha + _POINT_EPS:
        raise ValueError(f"({alpha}, {beta}) outside the extended RSL region")

    if abs(alpha) <= _POINT_EPS and abs(beta - TWO_PI) <= _POINT_EPS:
        return d + TWO_PI
    if abs(alpha - a_star) <= _POINT_EPS and abs(beta - (TWO_PI - a_star)) <= _POINT_EPS:
        return 2.0 * a_star + TWO_PI
    path = path_csc(p, "RSL")
    if path is None:
        raise ValueError(f"RSL does not exist at ({alpha}, {beta})")
    return path.total_length


def _lrl_on_curve(d: float, alpha: float, beta: float) -> float:
    return _ccc_forms(d, 0.5 * (alpha + beta), 0.5 * (beta - alpha))[0]


def case_a_witness(d: float) -> CaseAWitness:
    """Maximizer of the smaller CCC form over the rectangle, for 0 < d < 2.

    For d <= sqrt(2) the crossing sits on the side sigma = pi; beyond, on
    the side delta = pi - alpha*.  Both one-dimensional slices are strictly
    monotone in the search variable, so bisection applies.
    """
    if not 0.0 < d < 2.0:
        raise ValueError(f"interior-case witness requires 0 < d < 2, got {d}")
    a_star = math.asin(d / 2.0)

    def gap(sigma: float, delta: float) -> float:
        lrl, rlr = _ccc_forms(d, sigma, delta)
        return lrl - rlr

    if d <= SQRT2:
        sigma_a = math.pi
        delta_a = bisect_root(
            lambda delta: gap(sigma_a, delta),
            0.5 * math.pi,
            math.pi - a_star,
            width_tol=_WIDTH_TOL,
        )
    else:
        delta_a = math.pi - a_star
        sigma_a = bisect_root(
            lambda sigma: gap(sigma, delta_a),
            0.5 * math.pi,
            math.pi,
            width_tol=_WIDTH_TOL,
        )
    lrl, rlr = _ccc_forms(d, sigma_a, delta_a)
    return CaseAWitness(sigma_a, delta_a, 0.5 * (lrl + rlr))


def case_b_witness(d: float) -> CaseBWitness:
    """Maximizer of min(LRL, patched RSL) along the touching curve beta_lr.

    The difference LRL - RSL decreases strictly in alpha along the curve,
    so its zero is found by bisection on [0, alpha*].
    """
    if not SQRT2 - 1e-12 <= d < 2.0:
        raise ValueError(f"boundary-case witness requires sqrt(2) <= d < 2, got {d}")
    a_star = math.asin(d / 2.0)

    def gap(alpha: float) -> float:
        beta = regions.beta_lr(d, alpha)
        return _lrl_on_curve(d, alpha, beta) - rsl_length_continuous(PairSpec(d, alpha, beta))

    if gap(0.0) <= 0.0:
        alpha_b = 0.0
    elif gap(a_star) >= 0.0:
        alpha_b = a_star
    else:
        alpha_b = bisect_root(gap, 0.0, a_star, width_tol=_WIDTH_TOL)
    beta_b = regions.beta_lr(d, alpha_b)
    lrl = _lrl_on_curve(d, alpha_b, beta_b)
    rsl = rsl_length_continuous(PairSpec(d, alpha_b, beta_b))
    return CaseBWitness(alpha_b, beta_b, 0.5 * (lrl + rsl))


def boundary_case_excess(d: float) -> float:
    """Supremum of (path length - d) over the RSL-only region, sqrt(2) <= d < 2."""
    return case_b_witness(d).value - d


@lru_cache(maxsize=1)
def _computed_d_star() -> float:
    # boundary_case_excess decreases strictly on [sqrt(2), 2), from
    # 5*pi/2 - sqrt(2) down through 2*pi.
    return bisect_root(
        lambda d: boundary_case_excess(d) - TWO_PI,
        SQRT2,
        2.0 - 1e-9,
        width_tol=1e-11,
    )


def d_star() -> float:
    """Distance beyond which the worst-case excess is constant 2*pi.

    Computed once per process; the DUBINS_DSTAR environment variable
    overrides the cached value (for testing).
    """
    override = os.environ.get(DSTAR_ENV)
    if override is not None:
        return float(override)
    return _computed_d_star()


def dub(d: float) -> DubPoint:
    """Worst-case excess at distance d, with witness headings."""
    if d < 0.0:
        raise ValueError(f"distance must be nonnegative, got {d}")
    if d == 0.0:
        return DubPoint(d, 7.0 * math.pi / 3.0, "A", (0.0, math.pi), True)
    if d < SQRT2:
        w = case_a_witness(d)
        witness = (norm_angle(w.sigma_a - w.delta_a), norm_angle(w.sigma_a + w.delta_a))
        return DubPoint(d, w.value - d, "A", witness, True)
    if d < d_star():
        w = case_b_witness(d)
        return DubPoint(d, w.value - d, "B", (w.alpha_b, w.beta_b), False)
    return DubPoint(d, TWO_PI, "C", (math.pi, math.pi), True)


def approx_ratio_constants() -> tuple[float, float, float]:
    """Constants (1 + pi, 2 + 2*pi) bounding the excess, and the resulting
    sequencing approximation ratio 2 + 2/pi + pi/2.

    Cross-checks both constants against samples of the computed curve and
    raises if they disagree beyond 5e-3.
    """
    a_const = 1.0 + math.pi
    b_const = 2.0 + TWO_PI
    ratio = max(a_const, 0.5 * math.pi + b_const / math.pi)

    far = max(1.0 + dub(d).dub / d for d in (2.0, 2.25, 2.5, 3.0, 4.0, 6.0, 10.0))
    if abs(far - a_const) > 5e-3:
        raise ArithmeticError(f"ratio constant cross-check failed: {far} vs {a_const}")
    near = max(dub(0.125 * k).dub + 0.125 * k for k in range(17))
    if abs(near - b_const) > 5e-3:
        raise ArithmeticError(f"excess constant cross-check failed: {near} vs {b_const}")
    return a_const, b_const, ratio
