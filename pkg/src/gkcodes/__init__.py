"""Weierstrass semigroups, pure gaps and multi-point AG codes on the GK curve."""

from .curve import GKParams, Point, PointSet, enumerate_points, h_eval, on_curve, params
from .field import FieldCtx, ctx_create
from .riemann_roch import Divisor, Oracle, canonical_divisor, divisor, onepoint_basis
from .semigroup import (
    gamma_closed_form,
    gamma_from_box,
    gap_box,
    is_pure_gap,
    lub,
    membership_oracle,
    pure_gap_family_cor,
    pure_gap_family_prop,
    semigroup_box,
    single_point_gaps,
)
from .codes import CodeSummary, build_code, min_weight_exhaustive, pure_gap_bound

__all__ = [
    "GKParams", "Point", "PointSet", "enumerate_points", "h_eval", "on_curve",
    "params", "FieldCtx", "ctx_create", "Divisor", "Oracle", "canonical_divisor",
    "divisor", "onepoint_basis", "gamma_closed_form", "gamma_from_box", "gap_box",
    "is_pure_gap", "lub", "membership_oracle", "pure_gap_family_cor",
    "pure_gap_family_prop", "semigroup_box", "single_point_gaps", "CodeSummary",
    "build_code", "min_weight_exhaustive", "pure_gap_bound",
]

__version__ = "0.1.0"
