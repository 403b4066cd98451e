"""Shortest Dubins paths and the worst-case cost of bounded curvature."""

from .geometry import (
    CenterDistances,
    Configuration,
    PairSpec,
    RigidMotion,
    canonicalize,
    center_distances,
    circle_centers,
    equal_angle_distance,
    reduce_to_triangle,
    symmetry_images,
)
from .dubins_paths import (
    DubinsPath,
    MuPair,
    Segment,
    SegmentKind,
    build_path,
    ccc_length_closed_form,
    mu_pair,
    path_ccc,
    path_csc,
    sample,
    shortest_path,
)
from .regions import CaseLabel, CriticalAngles, classify, critical_angles
from .worst_case import DubPoint, approx_ratio_constants, d_star, dub
from .oracle_verify import GridReport, LemmaReport, grid_sup, lemma_suite

__all__ = [
    "CaseLabel",
    "CenterDistances",
    "Configuration",
    "CriticalAngles",
    "DubPoint",
    "DubinsPath",
    "GridReport",
    "LemmaReport",
    "MuPair",
    "PairSpec",
    "RigidMotion",
    "Segment",
    "SegmentKind",
    "approx_ratio_constants",
    "build_path",
    "canonicalize",
    "ccc_length_closed_form",
    "center_distances",
    "circle_centers",
    "classify",
    "critical_angles",
    "d_star",
    "dub",
    "equal_angle_distance",
    "grid_sup",
    "lemma_suite",
    "mu_pair",
    "path_ccc",
    "path_csc",
    "reduce_to_triangle",
    "sample",
    "shortest_path",
    "symmetry_images",
]
