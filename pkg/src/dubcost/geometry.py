"""Planar oriented configurations, tangent-disk centers, and heading-pair symmetries.

Everything here works with the turning radius scaled to one.  A problem
instance is reduced to the canonical form: start at the origin with heading
``alpha``, arrive at ``(d, 0)`` with heading ``beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# Slack for threshold comparisons against touching-disk boundaries
# (e.g. "center distance >= 2").  Touching disks are a valid boundary,
# so thresholds are applied with this much give.
EPS_GEOM = 1e-12


def norm_angle(theta: float) -> float:
    """Normalize an angle to [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        t = 0.0
    return t


@dataclass(frozen=True)
class Configuration:
    """A planar pose: position plus heading, heading stored in [0, 2*pi)."""

    x: float
    y: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", norm_angle(self.theta))


@dataclass(frozen=True)
class PairSpec:
    """Canonical instance (d, alpha, beta): start (0,0,alpha), goal (d,0,beta)."""

    d: float
    alpha: float
    beta: float

    def __post_init__(self):
        if self.d < 0.0:
            raise ValueError(f"distance must be nonnegative, got {self.d}")
        object.__setattr__(self, "alpha", norm_angle(self.alpha))
        object.__setattr__(self, "beta", norm_angle(self.beta))

    def sigma(self) -> float:
        """Half-sum of the two headings."""
        return 0.5 * (self.beta + self.alpha)

    def delta(self) -> float:
        """Half-difference of the two headings."""
        return 0.5 * (self.beta - self.alpha)

    @classmethod
    def from_sigma_delta(cls, d: float, sigma: float, delta: float) -> "PairSpec":
        return cls(d, sigma - delta, sigma + delta)


@dataclass(frozen=True)
class CenterDistances:
    """Distances between the four start/goal tangent-disk centers."""

    d_l: float
    d_r: float
    d_lr: float
    d_rl: float


@dataclass(frozen=True)
class RigidMotion:
    """Translation followed by a rotation about the origin.

    ``apply`` maps p to R(rotation) @ (p - shift), headings shift by
    ``rotation``.
    """

    shift_x: float
    shift_y: float
    rotation: float

    def apply(self, c: Configuration) -> Configuration:
        dx = c.x - self.shift_x
        dy = c.y - self.shift_y
        cr = math.cos(self.rotation)
        sr = math.sin(self.rotation)
        return Configuration(cr * dx - sr * dy, sr * dx + cr * dy, c.theta + self.rotation)


def canonicalize(start: Configuration, goal: Configuration) -> tuple[PairSpec, RigidMotion]:
    """Reduce a start/goal pose pair to canonical (d, alpha, beta) form.

    Returns the pair spec together with the rigid motion that carries the
    start pose to (0, 0, alpha) and the goal pose to (d, 0, beta).
    """
    dx = goal.x - start.x
    dy = goal.y - start.y
    d = math.hypot(dx, dy)
    if d > 0.0:
        rotation = -math.atan2(dy, dx)
    else:
        rotation = -start.theta  # coincident locations: fix alpha = 0
    motion = RigidMotion(start.x, start.y, rotation)
    return PairSpec(d, start.theta + rotation, goal.theta + rotation), motion


def circle_centers(p: PairSpec) -> tuple[tuple[float, float], ...]:
    """Centers of the unit disks tangent to the two poses: (l_s, r_s, l_f, r_f)."""
    sa, ca = math.sin(p.alpha), math.cos(p.alpha)
    sb, cb = math.sin(p.beta), math.cos(p.beta)
    return ((-sa, ca), (sa, -ca), (p.d - sb, cb), (p.d + sb, -cb))


def _center_distances_alpha_beta(p: PairSpec) -> CenterDistances:
    """Center distances straight from the coordinates (cross-check form)."""
    sa, ca = math.sin(p.alpha), math.cos(p.alpha)
    sb, cb = math.sin(p.beta), math.cos(p.beta)
    d = p.d
    return CenterDistances(
        d_l=math.hypot(d - sb + sa, cb - ca),
        d_r=math.hypot(d + sb - sa, ca - cb),
        d_lr=math.hypot(d + sb + sa, cb + ca),
        d_rl=math.hypot(d - sb - sa, cb + ca),
    )


def center_distances(p: PairSpec) -> CenterDistances:
    """The four center distances, from the half-sum/half-difference form.

    Each squared distance is a quadratic in the half-angles; it is evaluated
    as a hypot of exact component differences, which stays accurate where
    the expanded quadratic cancels to zero.
    """
    sig, del_ = p.sigma(), p.delta()
    d = p.d
    sd, cd_ = math.sin(del_), math.cos(del_)
    ss, cs = math.sin(sig), math.cos(sig)
    out = CenterDistances(
        d_l=math.hypot(d - 2.0 * sd * cs, 2.0 * sd * ss),
        d_r=math.hypot(d + 2.0 * sd * cs, 2.0 * sd * ss),
        d_lr=math.hypot(d + 2.0 * cd_ * ss, 2.0 * cd_ * cs),
        d_rl=math.hypot(d - 2.0 * cd_ * ss, 2.0 * cd_ * cs),
    )
    if __debug__:
        ref = _center_distances_alpha_beta(p)
        scale = max(1.0, d + 2.0)
        for a, b in ((out.d_l, ref.d_l), (out.d_r, ref.d_r),
                     (out.d_lr, ref.d_lr), (out.d_rl, ref.d_rl)):
            assert abs(a - b) <= 1e-12 * scale, (p, out, ref)
    return out


def equal_angle_distance(d: float, theta: float, phi: float) -> float:
    """Squared distance between points at equal heights on the two unit disks.

    For p(t) = (cos t, sin t) on the start disk and q(t) = (d - cos t, sin t)
    on the goal disk, returns |p(theta - phi) q(theta + phi)|^2.
    """
    ct, cp = math.cos(theta), math.cos(phi)
    return d * d - 4.0 * d * ct * cp + 4.0 * ct * ct


def symmetry_images(p: PairSpec) -> set[PairSpec]:
    """Orbit of (alpha, beta) under the two path-length-preserving mirrors."""
    a, b = p.alpha, p.beta
    return {
        PairSpec(p.d, a, b),
        PairSpec(p.d, -a, -b),          # mirror across the x-axis
        PairSpec(p.d, -b, -a),          # mirror across x = d/2, path reversed
        PairSpec(p.d, b, a),            # composition of both
    }


def in_triangle(alpha: float, beta: float, eps: float = EPS_GEOM) -> bool:
    """Membership in the canonical heading triangle 0<=alpha<=pi, alpha<=beta<=2*pi-alpha."""
    return (-eps <= alpha <= math.pi + eps) and (alpha - eps <= beta <= TWO_PI - alpha + eps)


def reduce_to_triangle(p: PairSpec) -> PairSpec:
    """Map a pair into the canonical triangle via its symmetry orbit."""
    a, b = p.alpha, p.beta
    for qa, qb in ((a, b), (-a, -b), (-b, -a), (b, a)):
        q = PairSpec(p.d, qa, qb)
        if in_triangle(q.alpha, q.beta):
            return q
    raise AssertionError(f"symmetry orbit missed the canonical triangle: {p}")
