"""Exact-arithmetic engine for refined vertex networks, the instanton chi_y-genus and the Fock operators RR^H, RR^V."""

from .fock import RRConfig, rr_h_diagonal, rr_h_trace, rr_v_trace
from .instanton import GenusConfig, chi_y_genus, chi_y_ratio, tangent_character
from .partitions import conjugate, enumerate_partitions, partition
from .series import (
    GenericityError,
    MultiSeries,
    NonFormalSeriesError,
    ParamPoint,
    SeriesMismatchError,
    random_param_point,
)
from .verify import RUNNERS, SUITES, Report
from .vertex import NetworkConfig, normalized_zr, refined_vertex, zr_full

__all__ = [
    "GenericityError",
    "GenusConfig",
    "MultiSeries",
    "NetworkConfig",
    "NonFormalSeriesError",
    "ParamPoint",
    "RRConfig",
    "RUNNERS",
    "Report",
    "SUITES",
    "SeriesMismatchError",
    "chi_y_genus",
    "chi_y_ratio",
    "conjugate",
    "enumerate_partitions",
    "normalized_zr",
    "partition",
    "random_param_point",
    "refined_vertex",
    "rr_h_diagonal",
    "rr_h_trace",
    "rr_v_trace",
    "tangent_character",
    "zr_full",
]
