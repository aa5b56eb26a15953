from .bds import apply_word, assemble_instance, delta, forward_orbit, regular_top
from .config import Config
from .errors import AnalysisError, BDSAError, CrossCheckMismatch, InputError
from .ideals import enumerate_lattice, gauge_pairs, is_minimal, is_simple, quotient_instance
from .instance_io import load_instance, parse_instance, render_instance
from .props import check_condition_K, check_condition_L, enumerate_maximal_tails
from .relgen import to_generalized
from .report import build_report
from .schemas import Instance
from .topograph import build_graph

__all__ = [
    "Config",
    "Instance",
    "BDSAError",
    "InputError",
    "AnalysisError",
    "CrossCheckMismatch",
    "assemble_instance",
    "apply_word",
    "delta",
    "forward_orbit",
    "regular_top",
    "parse_instance",
    "load_instance",
    "render_instance",
    "check_condition_L",
    "check_condition_K",
    "enumerate_maximal_tails",
    "enumerate_lattice",
    "gauge_pairs",
    "is_minimal",
    "is_simple",
    "quotient_instance",
    "to_generalized",
    "build_graph",
    "build_report",
]
