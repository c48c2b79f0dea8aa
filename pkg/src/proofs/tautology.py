"""Propositional tautology checking over the language's ! and -> skeleton."""

import logging

import numpy as np

from src.config import settings
from src.errors import AtomCapExceededError
from src.logic.formulas import Formula, Implies, Not

logger = logging.getLogger(__name__)


def skeleton_atoms(f: Formula) -> list[Formula]:
    """The maximal non-propositional subformulas of f, in first-occurrence order.

    Atoms stand for themselves; Belief and Announce nodes are opaque, so identical
    subtrees (which compare equal) share one slot.
    """
    seen: dict[Formula, None] = {}
    stack = [f]
    while stack:
        node = stack.pop()
        match node:
            case Not(body):
                stack.append(body)
            case Implies(lhs, rhs):
                stack.append(rhs)
                stack.append(lhs)
            case _:
                seen.setdefault(node)
    return list(seen)


def _columns(f: Formula, slots: dict[Formula, np.ndarray]) -> np.ndarray:
    values: dict[Formula, np.ndarray] = dict(slots)
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if node in values:
            continue
        match node:
            case Not(body):
                if expanded:
                    values[node] = ~values[body]
                else:
                    stack.extend([(node, True), (body, False)])
            case Implies(lhs, rhs):
                if expanded:
                    values[node] = ~values[lhs] | values[rhs]
                else:
                    stack.extend([(node, True), (rhs, False), (lhs, False)])
    return values[f]


def is_tautology(f: Formula, cap: int | None = None) -> bool:
    """True iff f is true under every assignment to its abstracted atoms.

    All 2^k rows of the truth table are evaluated at once as boolean vectors.
    """
    cap = settings.tautology_atom_cap if cap is None else cap
    slots = skeleton_atoms(f)
    if len(slots) > cap:
        raise AtomCapExceededError(len(slots), cap)

    rows = np.arange(1 << len(slots), dtype=np.int64)
    columns = {slot: ((rows >> i) & 1).astype(bool) for i, slot in enumerate(slots)}
    result = bool(_columns(f, columns).all())
    logger.debug(f"Tautology check over {len(slots)} atoms: {result}")
    return result
