"""Seeded random models, formulas and axiom instances.

Every generator draws from a numpy Generator; the same seed always yields the same object.
"""

from dataclasses import dataclass, replace

import numpy as np

from src.config import settings
from src.logic.formulas import Announce, Atom, Belief, Dataset, Formula, Implies, Not, knows
from src.models.trust import EvalPoint, TrustModel, ValuationEntry
from src.proofs.schemas import SCHEMA_METAVARS, Schema, Substitution, instantiate

# Atom, Not, Implies, Belief, Announce
CONSTRUCTOR_WEIGHTS = np.array([30, 15, 20, 20, 15]) / 100

# derived checks run next to the axiom schemas
POSITIVE_INTROSPECTION = "PositiveIntrospection"
# Truth with a nonempty trust set; unsound, used to test the tests
BROKEN_TRUTH = "BrokenTruth"

AXIOM_SCHEMAS = tuple(s for s in Schema if s is not Schema.TAUTOLOGY)


@dataclass(frozen=True)
class GenParams:
    max_worlds: int = 6
    max_variables: int = 4
    max_depth: int = 6
    max_dataset: int = 3
    atoms: int = 3
    seed: int = 42

    def __post_init__(self) -> None:
        if self.max_worlds < 1 or self.atoms < 1:
            raise ValueError("GenParams needs at least one world and one atom")
        if min(self.max_variables, self.max_depth, self.max_dataset) < 0:
            raise ValueError("GenParams bounds must not be negative")

    @classmethod
    def from_settings(cls, seed: int | None = None) -> "GenParams":
        return cls(
            max_worlds=settings.gen_max_worlds,
            max_variables=settings.gen_max_variables,
            max_depth=settings.gen_max_depth,
            max_dataset=settings.gen_max_dataset,
            atoms=settings.gen_atoms,
            seed=settings.fuzz_seed if seed is None else seed,
        )

    def with_seed(self, seed: int) -> "GenParams":
        return replace(self, seed=seed)

    def atom_names(self) -> list[str]:
        return [f"p{i}" for i in range(self.atoms)]


def trial_seed(base: int, *key: int) -> int:
    """Independent 64-bit seed for trial `key` of a run seeded with `base`."""
    seq = np.random.SeedSequence(base, spawn_key=key)
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def _rng(params: GenParams, rng: np.random.Generator | None) -> np.random.Generator:
    return np.random.default_rng(params.seed) if rng is None else rng


def gen_dataset(rng: np.random.Generator, pool: list[str], limit: int) -> Dataset:
    size = int(rng.integers(0, min(limit, len(pool)) + 1))
    return Dataset(tuple(rng.choice(pool, size=size, replace=False).tolist())) if size else Dataset()


def _coin_subset(rng: np.random.Generator, pool: list[str], p: float = 0.5) -> list[str]:
    return [x for x, keep in zip(pool, rng.random(len(pool)) < p, strict=True) if keep]


def gen_model(params: GenParams, rng: np.random.Generator | None = None) -> TrustModel:
    rng = _rng(params, rng)
    n_worlds = int(rng.integers(1, params.max_worlds + 1))
    n_vars = int(rng.integers(0, params.max_variables + 1))
    return _build_model(rng, n_worlds, n_vars, params.atom_names())


def _build_model(rng: np.random.Generator, n_worlds: int, n_vars: int, atom_names: list[str]) -> TrustModel:
    worlds = [f"w{i + 1}" for i in range(n_worlds)]
    variables = [f"x{i + 1}" for i in range(n_vars)]

    partitions = {}
    for x in variables:
        labels = rng.integers(0, n_worlds, size=n_worlds)
        blocks: dict[int, list[str]] = {}
        for w, label in zip(worlds, labels.tolist(), strict=True):
            blocks.setdefault(label, []).append(w)
        partitions[x] = tuple(tuple(block) for block in blocks.values())

    trust = {w: Dataset(tuple(_coin_subset(rng, variables))) for w in worlds}

    valuation = {}
    for prop in atom_names:
        permanent = frozenset(_coin_subset(rng, worlds, 0.4))
        n_pairs = int(rng.integers(0, n_worlds + 1))
        announced = frozenset(
            (worlds[int(rng.integers(0, n_worlds))], Dataset(tuple(_coin_subset(rng, variables))))
            for _ in range(n_pairs)
        )
        valuation[prop] = ValuationEntry(permanent, announced)

    return TrustModel(
        worlds=tuple(worlds),
        variables=Dataset(tuple(variables)),
        partitions=partitions,
        trust=trust,
        valuation=valuation,
    )


def gen_formula(
    params: GenParams, variables: Dataset, rng: np.random.Generator | None = None, depth: int | None = None
) -> Formula:
    """Random formula over `variables`, at most `depth` (default params.max_depth) levels deep."""
    rng = _rng(params, rng)
    pool = list(variables.members)
    names = params.atom_names()

    def build(remaining: int) -> Formula:
        kind = 0 if remaining <= 0 else int(rng.choice(5, p=CONSTRUCTOR_WEIGHTS))
        match kind:
            case 0:
                return Atom(names[int(rng.integers(0, len(names)))])
            case 1:
                return Not(build(remaining - 1))
            case 2:
                lhs = build(remaining - 1)
                return Implies(lhs, build(remaining - 1))
            case 3:
                trust = gen_dataset(rng, pool, params.max_dataset)
                data = gen_dataset(rng, pool, params.max_dataset)
                return Belief(trust, data, build(remaining - 1))
            case _:
                return Announce(gen_dataset(rng, pool, params.max_dataset), build(remaining - 1))

    return build(params.max_depth if depth is None else depth)


def gen_point(m: TrustModel, rng: np.random.Generator) -> EvalPoint:
    world = m.worlds[int(rng.integers(0, len(m.worlds)))]
    return EvalPoint(world, Dataset(tuple(_coin_subset(rng, list(m.variables.members)))))


def gen_substitution(
    schema: Schema, params: GenParams, variables: Dataset, rng: np.random.Generator
) -> Substitution:
    """Random bindings for the schema's metavariables; Monotonicity's T', X' extend T, X."""
    pool = list(variables.members)
    formula_vars, dataset_vars = SCHEMA_METAVARS[schema]
    depth = max(params.max_depth - 2, 0)
    subst = Substitution()
    for name in formula_vars:
        subst.formulas[name] = gen_formula(params, variables, rng, depth)
    for name in dataset_vars:
        subst.datasets[name] = gen_dataset(rng, pool, params.max_dataset)
    if schema is Schema.MONOTONICITY:
        subst.datasets["T'"] = subst.datasets["T"] | subst.datasets["T'"]
        subst.datasets["X'"] = subst.datasets["X"] | subst.datasets["X'"]
    return subst


def gen_instance(check: str, params: GenParams, variables: Dataset, rng: np.random.Generator) -> Formula:
    """An instance of an axiom schema, or of one of the derived checks."""
    if check in (POSITIVE_INTROSPECTION, BROKEN_TRUTH):
        pool = list(variables.members)
        phi = gen_formula(params, variables, rng, max(params.max_depth - 2, 0))
        trust = gen_dataset(rng, pool, params.max_dataset)
        data = gen_dataset(rng, pool, params.max_dataset)
        if check == BROKEN_TRUTH:
            if not trust and pool:
                trust = Dataset((pool[0],))
            return Implies(Belief(trust, data, phi), phi)
        belief = Belief(trust, data, phi)
        return Implies(belief, knows(data, belief))

    schema = Schema(check)
    return instantiate(schema, gen_substitution(schema, params, variables, rng))


# --- Fixed-size inputs for scaling measurements ---


def sized_model(n_worlds: int, n_variables: int, seed: int, atoms: int = 3) -> TrustModel:
    """A random model with exactly the requested numbers of worlds and variables."""
    rng = np.random.default_rng(seed)
    return _build_model(rng, n_worlds, n_variables, [f"p{i}" for i in range(atoms)])


def sized_formula(nodes: int, variables: Dataset, seed: int, max_dataset: int = 10, atoms: int = 3) -> Formula:
    """A random formula of exactly `nodes` nodes, built bottom-up without recursion."""
    rng = np.random.default_rng(seed)
    pool = list(variables.members)

    def atom() -> Formula:
        return Atom(f"p{int(rng.integers(0, atoms))}")

    f = atom()
    size = 1
    while size < nodes:
        roll = rng.random()
        if nodes - size >= 2 and roll < 0.3:
            f = Implies(atom(), f) if rng.random() < 0.5 else Implies(f, atom())
            size += 2
        elif roll < 0.45:
            f = Not(f)
            size += 1
        elif roll < 0.75:
            f = Belief(gen_dataset(rng, pool, max_dataset), gen_dataset(rng, pool, max_dataset), f)
            size += 1
        else:
            f = Announce(gen_dataset(rng, pool, max_dataset), f)
            size += 1
    return f
