from .formulas import (
    EMPTY,
    RESERVED_ATOM,
    Announce,
    Atom,
    Belief,
    Dataset,
    Formula,
    Implies,
    Not,
    children,
    falsum,
    free_variables,
    iff,
    knows,
    print_formula,
    subformula_occurrences,
    subformulas,
    walk,
)
from .parser import parse, parse_dataset

__all__ = [
    "EMPTY",
    "RESERVED_ATOM",
    "Announce",
    "Atom",
    "Belief",
    "Dataset",
    "Formula",
    "Implies",
    "Not",
    "children",
    "falsum",
    "free_variables",
    "iff",
    "knows",
    "parse",
    "parse_dataset",
    "print_formula",
    "subformula_occurrences",
    "subformulas",
    "walk",
]
