"""Two-weight linear codes over F_p from defining sets in GF(p^m) x GF(p^m)."""

from .codes import CodeSpec, complete_weight_enumerator, predict_cwe, predict_wd, weight_distribution
from .defining_sets import DefiningSet, Kind, construct
from .gf import ExtensionField, build_field

__all__ = [
    "CodeSpec",
    "DefiningSet",
    "ExtensionField",
    "Kind",
    "build_field",
    "complete_weight_enumerator",
    "construct",
    "predict_cwe",
    "predict_wd",
    "weight_distribution",
]
