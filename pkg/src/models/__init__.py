from .loader import dump_model, load_model, model_as_dict, summarize
from .trust import (
    EvalPoint,
    TrustModel,
    ValuationEntry,
    check_point,
    holds_atom,
    indistinguishable,
    trusts,
)

__all__ = [
    "EvalPoint",
    "TrustModel",
    "ValuationEntry",
    "check_point",
    "dump_model",
    "holds_atom",
    "indistinguishable",
    "load_model",
    "model_as_dict",
    "summarize",
    "trusts",
]
