"""Construction of the six Dubins path types and their exact lengths.

Paths run from (0, 0, alpha) to (d, 0, beta) with unit minimum turning
radius.  CSC words are built from tangent-line geometry, CCC words from the
unique middle disk whose arc exceeds pi.  Lengths of nonexistent paths are
reported as absence (None), never as an error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .geometry import (
    EPS_GEOM,
    TWO_PI,
    CenterDistances,
    Configuration,
    PairSpec,
    center_distances,
    circle_centers,
    norm_angle,
)

#: Fixed tie-break order for equal-length shortest paths.
WORDS = ("LSL", "RSR", "LSR", "RSL", "LRL", "RLR")

# Arc lengths this close below 2*pi are treated as a wrapped zero.
_ARC_SNAP = 1e-12


class SegmentKind(Enum):
    LEFT = "L"
    RIGHT = "R"
    STRAIGHT = "S"


_KIND_BY_LETTER = {"L": SegmentKind.LEFT, "R": SegmentKind.RIGHT, "S": SegmentKind.STRAIGHT}


@dataclass(frozen=True)
class Segment:
    kind: SegmentKind
    length: float


@dataclass(frozen=True)
class DubinsPath:
    """A word type plus its three segments (zero-length segments allowed)."""

    word: str
    segments: tuple[Segment, Segment, Segment]
    total_length: float

    def __post_init__(self):
        if self.word not in WORDS:
            raise ValueError(f"unknown word {self.word!r}")
        for seg, letter in zip(self.segments, self.word):
            if seg.kind is not _KIND_BY_LETTER[letter]:
                raise ValueError(f"segment kinds do not match word {self.word}")
            if seg.length < -1e-12:
                raise ValueError(f"negative segment length {seg.length}")
        total = sum(seg.length for seg in self.segments)
        if abs(total - self.total_length) > 1e-12 * max(1.0, total):
            raise ValueError("total_length inconsistent with segments")
        if self.word in ("LRL", "RLR") and self.segments[1].length < math.pi - 1e-9:
            raise ValueError("CCC middle arc must exceed pi")

    def arc_lengths(self) -> tuple[float, float, float]:
        return tuple(seg.length for seg in self.segments)


@dataclass(frozen=True)
class MuPair:
    """Half middle-arc lengths for the LRL / RLR middle disks.

    A side is None when the corresponding center distance exceeds 4 and no
    middle disk exists.
    """

    mu_l: float | None
    mu_r: float | None


def half_middle_arc(dist: float) -> float:
    """Half the CCC middle-arc length for tangent disks at center distance dist."""
    if dist > 4.0 + EPS_GEOM:
        raise ValueError(f"no middle disk for center distance {dist} > 4")
    return math.pi - math.asin(min(dist / 4.0, 1.0))


def mu_pair(cd: CenterDistances) -> MuPair:
    return MuPair(
        mu_l=half_middle_arc(cd.d_l) if cd.d_l <= 4.0 + EPS_GEOM else None,
        mu_r=half_middle_arc(cd.d_r) if cd.d_r <= 4.0 + EPS_GEOM else None,
    )


def _arc(x: float) -> float:
    """Arc length in [0, 2*pi), snapping wrapped near-zero values to zero."""
    r = math.fmod(x, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI - _ARC_SNAP:
        r = 0.0
    return r


def _make(word: str, a: float, b: float, c: float) -> DubinsPath:
    k1, k2, k3 = (_KIND_BY_LETTER[ch] for ch in word)
    return DubinsPath(word, (Segment(k1, a), Segment(k2, b), Segment(k3, c)), a + b + c)


def path_csc(p: PairSpec, word: str) -> DubinsPath | None:
    """Build a CSC path, or None when the inner-tangent existence test fails."""
    if word not in ("LSL", "RSR", "LSR", "RSL"):
        raise ValueError(f"not a CSC word: {word}")
    l_s, r_s, l_f, r_f = circle_centers(p)
    a, b = p.alpha, p.beta

    if word == "LSL":
        vx, vy = l_f[0] - l_s[0], l_f[1] - l_s[1]
        dist = math.hypot(vx, vy)
        if dist == 0.0:
            return _make(word, _arc(b - a), 0.0, 0.0)
        psi = math.atan2(vy, vx)
        return _make(word, _arc(psi - a), dist, _arc(b - psi))

    if word == "RSR":
        vx, vy = r_f[0] - r_s[0], r_f[1] - r_s[1]
        dist = math.hypot(vx, vy)
        if dist == 0.0:
            return _make(word, _arc(a - b), 0.0, 0.0)
        psi = math.atan2(vy, vx)
        return _make(word, _arc(a - psi), dist, _arc(psi - b))

    if word == "LSR":
        vx, vy = r_f[0] - l_s[0], r_f[1] - l_s[1]
        dist = math.hypot(vx, vy)
        if dist < 2.0 - EPS_GEOM:
            return None
        straight = math.sqrt(max(dist * dist - 4.0, 0.0))
        psi = math.atan2(vy, vx) + math.atan2(2.0, straight)
        return _make(word, _arc(psi - a), straight, _arc(psi - b))

    # RSL
    vx, vy = l_f[0] - r_s[0], l_f[1] - r_s[1]
    dist = math.hypot(vx, vy)
    if dist < 2.0 - EPS_GEOM:
        return None
    straight = math.sqrt(max(dist * dist - 4.0, 0.0))
    psi = math.atan2(vy, vx) - math.atan2(2.0, straight)
    return _make(word, _arc(a - psi), straight, _arc(b - psi))


def path_ccc(p: PairSpec, word: str) -> DubinsPath | None:
    """Build a CCC path, or None when the tangent middle disk does not exist.

    The middle disk is the unique candidate whose arc exceeds pi: it sits on
    the left of the center-to-center direction for LRL, on the right for RLR.
    """
    if word not in ("LRL", "RLR"):
        raise ValueError(f"not a CCC word: {word}")
    l_s, r_s, l_f, r_f = circle_centers(p)
    a, b = p.alpha, p.beta

    if word == "LRL":
        c1, c2 = l_s, l_f
    else:
        c1, c2 = r_s, r_f
    vx, vy = c2[0] - c1[0], c2[1] - c1[1]
    dist = math.hypot(vx, vy)
    if dist > 4.0 + EPS_GEOM:
        return None
    middle = 2.0 * half_middle_arc(dist)

    if dist == 0.0:
        # Coincident end disks: the middle disk is a full loop inserted at
        # the start; the minimal split puts the whole turn before the loop.
        if word == "LRL":
            return _make(word, _arc(b - a), TWO_PI, 0.0)
        return _make(word, _arc(a - b), TWO_PI, 0.0)

    theta = math.atan2(vy, vx)
    eta = math.acos(min(dist / 4.0, 1.0))
    if word == "LRL":
        first = _arc(theta + eta - a + 0.5 * math.pi)
        last = _arc(b - 0.5 * math.pi - (theta + math.pi - eta))
    else:
        first = _arc(a + 0.5 * math.pi - (theta - eta))
        last = _arc(theta + math.pi + eta - (b + 0.5 * math.pi))
    return _make(word, first, middle, last)


def build_path(p: PairSpec, word: str) -> DubinsPath | None:
    """Build any of the six words (None when it does not exist)."""
    if word in ("LRL", "RLR"):
        return path_ccc(p, word)
    return path_csc(p, word)


def shortest_path(p: PairSpec) -> tuple[DubinsPath, float]:
    """Shortest of the existing Dubins paths; ties broken by word order."""
    best: DubinsPath | None = None
    for word in WORDS:
        path = build_path(p, word)
        if path is not None and (best is None or path.total_length < best.total_length):
            best = path
    assert best is not None  # LSL and RSR always exist
    return best, best.total_length


def sample(path: DubinsPath, s: float, p: PairSpec) -> Configuration:
    """Pose after traversing arclength s from the start pose (0, 0, alpha)."""
    if s < -1e-9 or s > path.total_length + 1e-9:
        raise ValueError(f"arclength {s} outside [0, {path.total_length}]")
    s = min(max(s, 0.0), path.total_length)
    x, y, th = 0.0, 0.0, p.alpha
    remaining = s
    for seg in path.segments:
        step = min(remaining, seg.length)
        if seg.kind is SegmentKind.STRAIGHT:
            x += step * math.cos(th)
            y += step * math.sin(th)
        elif seg.kind is SegmentKind.LEFT:
            cx, cy = x - math.sin(th), y + math.cos(th)
            th2 = th + step
            x, y, th = cx + math.sin(th2), cy - math.cos(th2), th2
        else:
            cx, cy = x + math.sin(th), y - math.cos(th)
            th2 = th - step
            x, y, th = cx - math.sin(th2), cy + math.cos(th2), th2
        remaining -= step
        if remaining <= 0.0:
            break
    return Configuration(x, y, th)


def endpoint(path: DubinsPath, p: PairSpec) -> Configuration:
    return sample(path, path.total_length, p)


# ---------------------------------------------------------------------------
# Closed-form CCC lengths.
# ---------------------------------------------------------------------------

def _ccc_forms(d: float, sigma: float, delta: float) -> tuple[float, float]:
    """Raw (lrl, rlr) length formulas 4*mu_l + 2*delta - 2*pi and 4*mu_r - 2*delta.

    Valid as path lengths only where the endpoint-location analysis says so;
    callers own the region bookkeeping.
    """
    sd = math.sin(delta)
    ss, cs = math.sin(sigma), math.cos(sigma)
    d_l = math.hypot(d - 2.0 * sd * cs, 2.0 * sd * ss)
    d_r = math.hypot(d + 2.0 * sd * cs, 2.0 * sd * ss)
    mu_l = half_middle_arc(d_l)
    mu_r = half_middle_arc(d_r)
    return 4.0 * mu_l + 2.0 * delta - TWO_PI, 4.0 * mu_r - 2.0 * delta


def _require_rect(d: float, sigma: float, delta: float) -> None:
    if not 0.0 < d < 2.0:
        raise ValueError(f"rectangle forms need 0 < d < 2, got d={d}")
    a_star = math.asin(d / 2.0)
    if not (-1e-9 <= sigma <= math.pi + 1e-9):
        raise ValueError(f"sigma={sigma} outside [0, pi]")
    if not (a_star - 1e-9 <= delta <= math.pi - a_star + 1e-9):
        raise ValueError(f"delta={delta} outside [{a_star}, {math.pi - a_star}]")


def lrl_formula(d: float, sigma: float, delta: float) -> float:
    """LRL length formula on the rectangle alpha* <= delta <= pi - alpha*, d < 2."""
    _require_rect(d, sigma, delta)
    return _ccc_forms(d, sigma, delta)[0]


def rlr_formula(d: float, sigma: float, delta: float) -> float:
    """RLR length formula on the same rectangle."""
    _require_rect(d, sigma, delta)
    return _ccc_forms(d, sigma, delta)[1]


def ccc_min_formula(d: float, sigma: float, delta: float) -> float:
    """Pointwise minimum of the two rectangle forms."""
    _require_rect(d, sigma, delta)
    lrl, rlr = _ccc_forms(d, sigma, delta)
    return min(lrl, rlr)


def ccc_length_closed_form(p: PairSpec, case) -> tuple[float, float]:
    """Closed-form (lrl, rlr) lengths for a pair classified as case A or B.

    ``case`` may be a region label object with a ``tag`` attribute or the
    plain tag string.  Raises for case C, where no closed form holds.
    """
    tag = getattr(case, "tag", case)
    if tag not in ("A", "B"):
        raise ValueError(f"no closed form in region {tag!r}")
    sigma, delta = p.sigma(), p.delta()
    if not (-1e-9 <= sigma <= math.pi + 1e-9 and -1e-9 <= delta <= math.pi + 1e-9):
        raise ValueError(f"(sigma, delta)=({sigma}, {delta}) outside the unit square of headings")
    lrl, rlr = _ccc_forms(p.d, sigma, delta)
    if tag == "B":
        rlr += TWO_PI
    return lrl, rlr
