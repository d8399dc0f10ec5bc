"""Rank-metric codes over F_{q^m}/F_q, their q-systems and minimal codes."""

from .code import RankCode, weight_distribution
from .gf import FieldCtx, build_field, field_from_order
from .geometry import QSystem, phi, psi
from .minimal import MinimalityMethod, is_minimal

__all__ = [
    "FieldCtx",
    "MinimalityMethod",
    "QSystem",
    "RankCode",
    "build_field",
    "field_from_order",
    "is_minimal",
    "phi",
    "psi",
    "weight_distribution",
]
