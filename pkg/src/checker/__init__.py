from .counterexamples import Witness, belief_counterexamples, describe_witnesses
from .dp import (
    SatTable,
    check_dp,
    check_exhaustive,
    exhaustive_table,
    falsifying_points,
    fill_table,
    hlist,
    trace_dp,
)
from .oracle import evaluate

__all__ = [
    "SatTable",
    "Witness",
    "belief_counterexamples",
    "check_dp",
    "check_exhaustive",
    "describe_witnesses",
    "evaluate",
    "exhaustive_table",
    "falsifying_points",
    "fill_table",
    "hlist",
    "trace_dp",
]
