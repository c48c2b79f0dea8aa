"""Direct satisfaction: w, U |= f, clause by clause."""

import logging

from src.errors import EmptyModelError
from src.logic.formulas import Announce, Atom, Belief, Dataset, Formula, Implies, Not, free_variables
from src.models.trust import EvalPoint, TrustModel, check_point

logger = logging.getLogger(__name__)


def prepare(m: TrustModel, pt: EvalPoint, f: Formula) -> None:
    """Reject empty models, unknown worlds and unknown variables before any evaluation."""
    if not m.worlds:
        raise EmptyModelError()
    check_point(m, pt)
    m.require_variables(free_variables(f))


Goal = tuple[str, Dataset, Formula]


def _subgoals(m: TrustModel, goal: Goal) -> list[Goal]:
    """The (world, announced, formula) points the clause for goal's formula reads."""
    world, announced, f = goal
    match f:
        case Atom():
            return []
        case Not(body):
            return [(world, announced, body)]
        case Implies(lhs, rhs):
            return [(world, announced, lhs), (world, announced, rhs)]
        case Belief(trust, data, body):
            scope = data | announced
            return [
                (other, announced, body)
                for other in m.worlds
                if m.same_class(world, other, scope) and m.trusted_in(other, trust)
            ]
        case Announce(data, body):
            return [(world, announced | data, body)]
    raise TypeError(f"not a formula: {f!r}")


def _clause(m: TrustModel, goal: Goal, values: list[bool]) -> bool:
    world, announced, f = goal
    match f:
        case Atom(prop):
            return m.atom_holds(world, announced, prop)
        case Not():
            return not values[0]
        case Implies():
            return not values[0] or values[1]
        case Belief():
            return all(values)
        case Announce():
            return values[0]
    raise TypeError(f"not a formula: {f!r}")


def _sat(m: TrustModel, world: str, announced: Dataset, f: Formula) -> bool:
    """w, U |= f by the satisfaction clauses, driven by an explicit stack of goals."""
    known: dict[Goal, bool] = {}
    stack: list[tuple[Goal, list[Goal] | None]] = [((world, announced, f), None)]
    while stack:
        goal, needs = stack.pop()
        if goal in known:
            continue
        if needs is None:
            needs = _subgoals(m, goal)
            stack.append((goal, needs))
            stack.extend((sub, None) for sub in needs if sub not in known)
            continue
        known[goal] = _clause(m, goal, [known[sub] for sub in needs])
    return known[(world, announced, f)]


def evaluate(m: TrustModel, pt: EvalPoint, f: Formula) -> bool:
    prepare(m, pt, f)
    return _sat(m, pt.world, pt.announced, f)
