"""The axiom schemas and their instantiation.

Axiom lines carry an explicit substitution; instantiating it and comparing the result
structurally with the claimed formula is all the checker does for them.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum

from src.errors import InstantiationError
from src.logic.formulas import Announce, Belief, Dataset, Formula, Implies, Not, iff, knows


class Schema(StrEnum):
    TRUTH = "Truth"
    DISTRIBUTIVITY_B = "DistributivityB"
    DISTRIBUTIVITY_A = "DistributivityA"
    NEG_INTROSPECTION = "NegIntrospection"
    MONOTONICITY = "Monotonicity"
    TRUST = "Trust"
    COMBINATION = "Combination"
    COMMUTATIVITY = "Commutativity"
    DUALITY = "Duality"
    EMPTY_ANNOUNCEMENT = "EmptyAnnouncement"
    TAUTOLOGY = "Tautology"


FORMULA_METAVARS = ("phi", "psi")
DATASET_METAVARS = ("X", "Y", "T", "T'", "X'")

# schema -> (formula metavariables, dataset metavariables)
SCHEMA_METAVARS: dict[Schema, tuple[tuple[str, ...], tuple[str, ...]]] = {
    Schema.TRUTH: (("phi",), ("X",)),
    Schema.DISTRIBUTIVITY_B: (("phi", "psi"), ("T", "X")),
    Schema.DISTRIBUTIVITY_A: (("phi", "psi"), ("X",)),
    Schema.NEG_INTROSPECTION: (("phi",), ("T", "X")),
    Schema.MONOTONICITY: (("phi",), ("T", "T'", "X", "X'")),
    Schema.TRUST: (("phi",), ("T", "X", "Y")),
    Schema.COMBINATION: (("phi",), ("X", "Y")),
    Schema.COMMUTATIVITY: (("phi",), ("T", "X", "Y")),
    Schema.DUALITY: (("phi",), ("X",)),
    Schema.EMPTY_ANNOUNCEMENT: (("phi",), ()),
    Schema.TAUTOLOGY: ((), ()),
}


@dataclass(frozen=True)
class Substitution:
    formulas: dict[str, Formula] = field(default_factory=dict)
    datasets: dict[str, Dataset] = field(default_factory=dict)

    def bound(self) -> set[str]:
        return set(self.formulas) | set(self.datasets)


def _truth(phi: Formula, X: Dataset) -> Formula:
    return Implies(knows(X, phi), phi)


def _distributivity_b(phi: Formula, psi: Formula, T: Dataset, X: Dataset) -> Formula:
    return Implies(Belief(T, X, Implies(phi, psi)), Implies(Belief(T, X, phi), Belief(T, X, psi)))


def _distributivity_a(phi: Formula, psi: Formula, X: Dataset) -> Formula:
    return Implies(Announce(X, Implies(phi, psi)), Implies(Announce(X, phi), Announce(X, psi)))


def _neg_introspection(phi: Formula, T: Dataset, X: Dataset) -> Formula:
    doubt = Not(Belief(T, X, phi))
    return Implies(doubt, knows(X, doubt))


def _monotonicity(phi: Formula, T: Dataset, T2: Dataset, X: Dataset, X2: Dataset) -> Formula:
    if not T <= T2:
        raise InstantiationError(f"Monotonicity needs T <= T', got T={T}, T'={T2}")
    if not X <= X2:
        raise InstantiationError(f"Monotonicity needs X <= X', got X={X}, X'={X2}")
    return Implies(Belief(T, X, phi), Belief(T2, X2, phi))


def _trust(phi: Formula, T: Dataset, X: Dataset, Y: Dataset) -> Formula:
    return Belief(T, X, Implies(Belief(T, Y, phi), phi))


def _combination(phi: Formula, X: Dataset, Y: Dataset) -> Formula:
    return iff(Announce(X, Announce(Y, phi)), Announce(X | Y, phi))


def _commutativity(phi: Formula, T: Dataset, X: Dataset, Y: Dataset) -> Formula:
    return iff(Announce(Y, Belief(T, X, phi)), Belief(T, Y | X, Announce(Y, phi)))


def _duality(phi: Formula, X: Dataset) -> Formula:
    return iff(Not(Announce(X, phi)), Announce(X, Not(phi)))


def _empty_announcement(phi: Formula) -> Formula:
    return iff(Announce(Dataset(), phi), phi)


_BUILDERS: dict[Schema, Callable[..., Formula]] = {
    Schema.TRUTH: _truth,
    Schema.DISTRIBUTIVITY_B: _distributivity_b,
    Schema.DISTRIBUTIVITY_A: _distributivity_a,
    Schema.NEG_INTROSPECTION: _neg_introspection,
    Schema.MONOTONICITY: _monotonicity,
    Schema.TRUST: _trust,
    Schema.COMBINATION: _combination,
    Schema.COMMUTATIVITY: _commutativity,
    Schema.DUALITY: _duality,
    Schema.EMPTY_ANNOUNCEMENT: _empty_announcement,
}


def instantiate(schema: Schema, subst: Substitution) -> Formula:
    """Build the instance of `schema` under `subst`, with every <-> expanded.

    Raises InstantiationError on a missing or extra binding, a violated side condition,
    or for the Tautology tag, which has no instances of its own.
    """
    if schema is Schema.TAUTOLOGY:
        raise InstantiationError("Tautology lines are checked by truth table, not instantiated")

    formula_vars, dataset_vars = SCHEMA_METAVARS[schema]
    missing = [v for v in (*formula_vars, *dataset_vars) if v not in subst.bound()]
    if missing:
        raise InstantiationError(f"{schema} needs a binding for {', '.join(missing)}")
    extra = sorted(subst.bound() - set(formula_vars) - set(dataset_vars))
    if extra:
        raise InstantiationError(f"{schema} does not use {', '.join(extra)}")
    wrong_kind = [v for v in formula_vars if v not in subst.formulas]
    wrong_kind += [v for v in dataset_vars if v not in subst.datasets]
    if wrong_kind:
        raise InstantiationError(f"{schema}: wrong kind of binding for {', '.join(wrong_kind)}")

    args = [subst.formulas[v] for v in formula_vars] + [subst.datasets[v] for v in dataset_vars]
    return _BUILDERS[schema](*args)
