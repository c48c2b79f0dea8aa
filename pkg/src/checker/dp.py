"""Polynomial model checking by dynamic programming.

`hlist` lists every (environment, subformula) pair the recursive definition would visit,
children first. `fill_table` then computes one column of truth values (one per world)
for each pair in that order, so every lookup hits a column that is already filled.
"""

import logging
from collections.abc import Iterator

from src.checker.oracle import prepare
from src.config import settings
from src.errors import SemanticError
from src.logic.formulas import Announce, Atom, Belief, Dataset, Formula, Implies, Not, free_variables, subformulas
from src.models.trust import EvalPoint, TrustModel

logger = logging.getLogger(__name__)

Pair = tuple[Dataset, Formula]


def hlist(announced: Dataset, f: Formula) -> list[Pair]:
    """H(U, f): one pair per node occurrence, each after the pairs of its children."""
    out: list[Pair] = []
    stack: list[tuple[Dataset, Formula, bool]] = [(announced, f, False)]
    while stack:
        env, node, expanded = stack.pop()
        if expanded:
            out.append((env, node))
            continue
        stack.append((env, node, True))
        match node:
            case Atom():
                pass
            case Not(body) | Belief(_, _, body):
                stack.append((env, body, False))
            case Implies(lhs, rhs):
                stack.append((env, rhs, False))
                stack.append((env, lhs, False))
            case Announce(data, body):
                stack.append((env | data, body, False))
    return out


class SatTable:
    """sat[w, (U, f)], stored as one column of booleans per pair, indexed by world position."""

    def __init__(self, model: TrustModel):
        self.model = model
        self.columns: dict[Pair, list[bool]] = {}
        self._world_index = {w: i for i, w in enumerate(model.worlds)}
        self._keys: dict[Dataset, list[tuple[int, ...]]] = {}

    def __getitem__(self, key: tuple[str, Pair]) -> bool:
        world, pair = key
        return self.columns[pair][self._world_index[world]]

    def __len__(self) -> int:
        return len(self.columns) * len(self.model.worlds)

    def column(self, env: Dataset, f: Formula) -> list[bool]:
        try:
            return self.columns[(env, f)]
        except KeyError:
            raise RuntimeError(f"pair ({env}, {f}) requested before it was computed") from None

    def class_keys(self, scope: Dataset) -> list[tuple[int, ...]]:
        """Per world, its block in every variable of scope; equal keys mean w ~_scope w'."""
        keys = self._keys.get(scope)
        if keys is None:
            keys = [tuple(self.model.block_of(x, w) for x in scope) for w in self.model.worlds]
            self._keys[scope] = keys
        return keys

    def fill(self, env: Dataset, f: Formula) -> None:
        m = self.model
        match f:
            case Atom(prop):
                col = [m.atom_holds(w, env, prop) for w in m.worlds]
            case Not(body):
                col = [not v for v in self.column(env, body)]
            case Implies(lhs, rhs):
                col = [not a or b for a, b in zip(self.column(env, lhs), self.column(env, rhs), strict=True)]
            case Belief(trust, data, body):
                sub = self.column(env, body)
                keys = self.class_keys(data | env)
                # one trusted failure falsifies the belief for its whole class
                failing = {keys[j] for j, w in enumerate(m.worlds) if not sub[j] and m.trusted_in(w, trust)}
                col = [key not in failing for key in keys]
            case Announce(data, body):
                col = self.column(env | data, body)
            case _:
                raise TypeError(f"not a formula: {f!r}")
        self.columns[(env, f)] = col

    def rows(self, pairs: list[Pair]) -> Iterator[tuple[str, Pair, bool]]:
        for pair in pairs:
            for w in self.model.worlds:
                yield w, pair, self[w, pair]


def fill_table(m: TrustModel, pairs: list[Pair]) -> SatTable:
    table = SatTable(m)
    for env, f in pairs:
        # repeated pairs (e.g. p -> p) recompute the same column
        table.fill(env, f)
    return table


def check_dp(m: TrustModel, pt: EvalPoint, f: Formula) -> bool:
    prepare(m, pt, f)
    pairs = hlist(pt.announced, f)
    table = fill_table(m, pairs)
    logger.info(f"DP filled {len(pairs)} pairs x {len(m.worlds)} worlds")
    return table[pt.world, (pt.announced, f)]


def trace_dp(m: TrustModel, pt: EvalPoint, f: Formula) -> tuple[list[Pair], SatTable, bool]:
    """Same run as check_dp, returning the H-list and the filled table as well."""
    prepare(m, pt, f)
    pairs = hlist(pt.announced, f)
    table = fill_table(m, pairs)
    return pairs, table, table[pt.world, (pt.announced, f)]


def exhaustive_table(m: TrustModel, f: Formula) -> SatTable:
    """sat[w, U, g] for every world, every U subset of V and every subformula g.

    The straightforward fixed-V dynamic program: exponential in |V|, so capped.
    """
    cap = settings.exhaustive_max_variables
    if len(m.variables) > cap:
        raise SemanticError(f"exhaustive table needs |V| <= {cap}, model has {len(m.variables)}")
    m.require_variables(free_variables(f))
    table = SatTable(m)
    envs = m.announced_sets()
    subs = subformulas(f)
    for g in subs:
        for env in envs:
            table.fill(env, g)
    logger.info(f"Exhaustive table: {len(envs)} announced sets x {len(subs)} subformulas")
    return table


def check_exhaustive(m: TrustModel, pt: EvalPoint, f: Formula) -> bool:
    prepare(m, pt, f)
    return exhaustive_table(m, f)[pt.world, (pt.announced, f)]


def falsifying_points(m: TrustModel, f: Formula) -> list[EvalPoint]:
    """Every (w, U), U ranging over all subsets of V, where f is false. Empty iff f is valid on m."""
    m.require_variables(free_variables(f))
    failing: list[EvalPoint] = []
    for env in m.announced_sets():
        table = fill_table(m, hlist(env, f))
        failing.extend(EvalPoint(w, env) for w in m.worlds if not table[w, (env, f)])
    return failing
