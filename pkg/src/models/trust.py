"""Trustworthiness models and the semantic primitives the checkers are built on."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from src.errors import UnknownVariableError, UnknownWorldError
from src.logic.formulas import EMPTY, Dataset


@dataclass(frozen=True)
class ValuationEntry:
    """Finite encoding of pi(p): p holds at (w, U) iff w is permanent or (w, U) is listed."""

    permanent: frozenset[str] = frozenset()
    announced: frozenset[tuple[str, Dataset]] = frozenset()

    def holds(self, world: str, announced: Dataset) -> bool:
        return world in self.permanent or (world, announced) in self.announced


@dataclass(frozen=True)
class EvalPoint:
    world: str
    announced: Dataset = EMPTY

    def __str__(self) -> str:
        return f"({self.world}, {self.announced})"


@dataclass(frozen=True)
class TrustModel:
    worlds: tuple[str, ...]
    variables: Dataset
    # variable -> blocks; each block's worlds in model order, blocks ordered by first world
    partitions: Mapping[str, tuple[tuple[str, ...], ...]]
    trust: Mapping[str, Dataset]
    valuation: Mapping[str, ValuationEntry]
    _block_index: dict[str, dict[str, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        order = {w: i for i, w in enumerate(self.worlds)}
        partitions: dict[str, tuple[tuple[str, ...], ...]] = {}
        for var in self.variables:
            blocks = self.partitions.get(var)
            if blocks is None:
                blocks = tuple((w,) for w in self.worlds)
            canonical = [tuple(sorted(block, key=order.__getitem__)) for block in blocks if block]
            canonical.sort(key=lambda block: order[block[0]])
            partitions[var] = tuple(canonical)

        index = {var: {w: i for i, block in enumerate(blocks) for w in block} for var, blocks in partitions.items()}
        trust = {w: self.trust.get(w, EMPTY) for w in self.worlds}
        valuation = {p: entry for p, entry in sorted(self.valuation.items())}

        object.__setattr__(self, "partitions", partitions)
        object.__setattr__(self, "trust", trust)
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "_block_index", index)

    __hash__ = None  # type: ignore[assignment]

    # --- Unchecked fast paths (callers have validated worlds and datasets) ---

    def block_of(self, var: str, world: str) -> int:
        return self._block_index[var][world]

    def same_class(self, w: str, u: str, data: Iterable[str]) -> bool:
        index = self._block_index
        return all(index[x][w] == index[x][u] for x in data)

    def trusted_in(self, world: str, trust: Dataset) -> bool:
        return trust.issubset(self.trust[world])

    def atom_holds(self, world: str, announced: Dataset, prop: str) -> bool:
        entry = self.valuation.get(prop)
        return entry is not None and entry.holds(world, announced)

    # --- Validation helpers ---

    def require_world(self, world: str) -> None:
        if world not in self.trust:
            raise UnknownWorldError(world)

    def require_variables(self, data: Dataset) -> None:
        unknown = [x for x in data if x not in self.variables]
        if unknown:
            raise UnknownVariableError(unknown)

    def announced_sets(self) -> list[Dataset]:
        """All 2^|V| subsets of the model's variables, smallest first."""
        members = self.variables.members
        subsets = [
            Dataset(tuple(m for i, m in enumerate(members) if mask >> i & 1)) for mask in range(1 << len(members))
        ]
        subsets.sort(key=lambda d: (len(d), d.members))
        return subsets


def indistinguishable(m: TrustModel, w: str, u: str, data: Dataset) -> bool:
    """w ~_X u: w and u share a block for every variable of X (always true for X = {})."""
    m.require_world(w)
    m.require_world(u)
    m.require_variables(data)
    return m.same_class(w, u, data)


def trusts(m: TrustModel, w: str, trust: Dataset) -> bool:
    """T is trustworthy in w, i.e. T is a subset of the world's trust set."""
    m.require_world(w)
    return m.trusted_in(w, trust)


def holds_atom(m: TrustModel, pt: EvalPoint, prop: str) -> bool:
    """Propositions without a valuation entry are false everywhere."""
    return m.atom_holds(pt.world, pt.announced, prop)


def check_point(m: TrustModel, pt: EvalPoint) -> None:
    m.require_world(pt.world)
    m.require_variables(pt.announced)
