"""Exact order-theoretic invariants of cofinite subsemigroups of integer cones."""

from .errors import ConesemiError
from .genexp import ExpandDecision, GeneratorInput, expand, is_csemigroup
from .geom import Cone, RayCoords, enumerate_cone_points, lower_set, weight
from .semigroup import (
    CofiniteNat,
    CSemigroup,
    NumericalSemigroup,
    make_csemigroup,
    msg_weight_bound,
)
from .construct import (
    IdemaxialSpec,
    frobenius_band,
    high_elasticity,
    idemaxial,
    lower_set_semigroup,
    pf_lines_check,
)
from .wilf import GenusLevel, WilfReport, WilfSummary, enumerate_genus, wilf_report, wilf_sweep
from .oracle import oracle_all_gapsets, oracle_member, oracle_minimals
from .render import RenderSpec, plot

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "CofiniteNat",
    "ConesemiError",
    "CSemigroup",
    "ExpandDecision",
    "GeneratorInput",
    "GenusLevel",
    "IdemaxialSpec",
    "NumericalSemigroup",
    "RayCoords",
    "RenderSpec",
    "WilfReport",
    "WilfSummary",
    "enumerate_cone_points",
    "enumerate_genus",
    "expand",
    "frobenius_band",
    "high_elasticity",
    "idemaxial",
    "is_csemigroup",
    "lower_set",
    "lower_set_semigroup",
    "make_csemigroup",
    "msg_weight_bound",
    "oracle_all_gapsets",
    "oracle_member",
    "oracle_minimals",
    "pf_lines_check",
    "plot",
    "weight",
    "wilf_report",
    "wilf_sweep",
]
