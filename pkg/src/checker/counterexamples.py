"""Failure witnesses for belief formulas."""

from dataclasses import dataclass

from src.checker.oracle import evaluate, prepare
from src.errors import SemanticError
from src.logic.formulas import Belief, Dataset, Formula
from src.models.trust import EvalPoint, TrustModel


@dataclass(frozen=True)
class Witness:
    """A world that defeats B{T}{X} body at the evaluation point."""

    world: str
    # the witness's own trust set
    trust: Dataset
    # variables of V on which the witness shares a block with the evaluation world
    agrees_on: Dataset


def belief_counterexamples(m: TrustModel, pt: EvalPoint, f: Formula) -> list[str]:
    """Worlds w' with w ~_{X u U} w', T trustworthy in w', and body false at (w', U).

    The list is empty exactly when the belief holds at pt.
    """
    if not isinstance(f, Belief):
        raise SemanticError(f"counterexamples need a belief formula at the top level, got {f}")
    prepare(m, pt, f)
    scope = f.data | pt.announced
    return [
        w
        for w in m.worlds
        if m.same_class(pt.world, w, scope)
        and m.trusted_in(w, f.trust)
        and not evaluate(m, EvalPoint(w, pt.announced), f.body)
    ]


def describe_witnesses(m: TrustModel, pt: EvalPoint, f: Formula) -> list[Witness]:
    return [
        Witness(
            world=w,
            trust=m.trust[w],
            agrees_on=Dataset(tuple(x for x in m.variables if m.same_class(pt.world, w, (x,)))),
        )
        for w in belief_counterexamples(m, pt, f)
    ]
