"""Edge-balanced index sets of complete even bipartite graphs K(m,n)."""

from .construction import (
    ConstructionError,
    SwitchTrace,
    construct_for_index,
    generate_trace,
    step0_labeling,
    verify_trace,
)
from .labeling import (
    EdgeLabeling,
    GraphShape,
    LabelingError,
    Switch,
    apply_switch,
    is_edge_friendly,
    make_labeling,
    parse_csv,
    stats,
)
from .oracle import OracleConfig, brute_force_ebi, cross_check, enumerate_edge_friendly
from .theorem import Case, compute_params, ebi_set

__all__ = [
    "Case",
    "ConstructionError",
    "EdgeLabeling",
    "GraphShape",
    "LabelingError",
    "OracleConfig",
    "Switch",
    "SwitchTrace",
    "apply_switch",
    "brute_force_ebi",
    "compute_params",
    "construct_for_index",
    "cross_check",
    "ebi_set",
    "enumerate_edge_friendly",
    "generate_trace",
    "is_edge_friendly",
    "make_labeling",
    "parse_csv",
    "stats",
    "step0_labeling",
    "verify_trace",
]
