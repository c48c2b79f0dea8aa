"""Formula language: datasets, the five primitive constructors, and the canonical printer.

Formulas are immutable and hashable. Each node caches its hash at construction, so
hashing and equality checks against unequal nodes stay O(1) even for large trees.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass, fields

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

# Surface keyword for the falsum; never a proposition name
FALSE_KEYWORD = "false"

# Atom used to encode `false`; the parser refuses it in user text
RESERVED_ATOM = "__f"


def is_identifier(name: str) -> bool:
    return bool(_IDENT.match(name)) and name.isascii()


@dataclass(frozen=True)
class Dataset:
    """A finite set of data variables, stored sorted and duplicate-free."""

    members: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        canonical = tuple(sorted(set(self.members)))
        for name in canonical:
            if not is_identifier(name) or name.startswith("_"):
                raise ValueError(f"invalid data variable name '{name}'")
        object.__setattr__(self, "members", canonical)
        object.__setattr__(self, "_set", frozenset(canonical))

    @classmethod
    def of(cls, *names: str) -> "Dataset":
        return cls(tuple(names))

    def union(self, other: "Dataset") -> "Dataset":
        if not other.members or other.members == self.members:
            return self
        if not self.members:
            return other
        return Dataset(self.members + other.members)

    __or__ = union

    def issubset(self, other: "Dataset") -> bool:
        return self._set <= other._set

    __le__ = issubset

    def __contains__(self, name: object) -> bool:
        return name in self._set

    def __iter__(self) -> Iterator[str]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(self.members) + "}"


EMPTY = Dataset()


class Formula:
    """Base class of the five syntax-tree node types."""

    _hash: int

    def _seal(self, *parts: object) -> None:
        object.__setattr__(self, "_hash", hash((type(self).__name__, *parts)))

    def _parts(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))  # type: ignore[arg-type]

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        # iterative: formulas may nest deeper than the recursion limit
        stack: list[tuple[Formula, object]] = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if type(b) is not type(a) or a._hash != b._hash:  # type: ignore[attr-defined]
                return False
            for x, y in zip(a._parts(), b._parts(), strict=True):  # type: ignore[attr-defined]
                if isinstance(x, Formula):
                    stack.append((x, y))
                elif x != y:
                    return False
        return True

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, eq=False)
class Atom(Formula):
    prop: str

    def __post_init__(self) -> None:
        if not is_identifier(self.prop) or self.prop == FALSE_KEYWORD:
            raise ValueError(f"invalid proposition name '{self.prop}'")
        self._seal(self.prop)


@dataclass(frozen=True, eq=False)
class Not(Formula):
    body: Formula

    def __post_init__(self) -> None:
        self._seal(self.body)


@dataclass(frozen=True, eq=False)
class Implies(Formula):
    lhs: Formula
    rhs: Formula

    def __post_init__(self) -> None:
        self._seal(self.lhs, self.rhs)


@dataclass(frozen=True, eq=False)
class Belief(Formula):
    """B^T_X body: body holds in every world agreeing on X plus the announced set where T is trustworthy."""

    trust: Dataset
    data: Dataset
    body: Formula

    def __post_init__(self) -> None:
        self._seal(self.trust, self.data, self.body)


@dataclass(frozen=True, eq=False)
class Announce(Formula):
    data: Dataset
    body: Formula

    def __post_init__(self) -> None:
        self._seal(self.data, self.body)


# --- Derived connectives (expanded, never stored) ---


def knows(data: Dataset, body: Formula) -> Belief:
    return Belief(EMPTY, data, body)


def iff(lhs: Formula, rhs: Formula) -> Formula:
    return Not(Implies(Implies(lhs, rhs), Not(Implies(rhs, lhs))))


def falsum() -> Formula:
    bottom = Atom(RESERVED_ATOM)
    return Not(Implies(bottom, bottom))


# --- Traversals ---


def children(f: Formula) -> tuple[Formula, ...]:
    match f:
        case Atom():
            return ()
        case Not(body) | Belief(_, _, body) | Announce(_, body):
            return (body,)
        case Implies(lhs, rhs):
            return (lhs, rhs)
    raise TypeError(f"not a formula: {f!r}")


def walk(f: Formula) -> Iterator[Formula]:
    """Pre-order over every node occurrence, without recursion."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def subformula_occurrences(f: Formula) -> int:
    return sum(1 for _ in walk(f))


def subformulas(f: Formula) -> list[Formula]:
    """Distinct subformulas, children before parents."""
    seen: set[Formula] = set()
    order: list[Formula] = []
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded:
            seen.add(node)
            order.append(node)
            continue
        stack.append((node, True))
        stack.extend((child, False) for child in reversed(children(node)))
    return order


def free_variables(f: Formula) -> Dataset:
    names: list[str] = []
    for node in walk(f):
        match node:
            case Belief(trust, data, _):
                names.extend(trust.members)
                names.extend(data.members)
            case Announce(data, _):
                names.extend(data.members)
    return Dataset(tuple(names))


# --- Printer ---


def _members(d: Dataset) -> str:
    return ",".join(d.members)


def _operand(f: Formula) -> list[str | Formula]:
    """Prefix bodies and left operands of -> need parentheses around an implication."""
    return ["(", f, ")"] if isinstance(f, Implies) else [f]


def print_formula(f: Formula) -> str:
    """Canonical text with minimal parentheses; `parse(print_formula(f)) == f`."""
    out: list[str] = []
    # pending text and subformulas, next item on top
    stack: list[str | Formula] = [f]
    while stack:
        item = stack.pop()
        match item:
            case str():
                out.append(item)
                continue
            case Atom(prop):
                pending: list[str | Formula] = [prop]
            case Not(body):
                pending = ["!", *_operand(body)]
            case Implies(lhs, rhs):
                pending = [*_operand(lhs), " -> ", rhs]
            case Belief(trust, data, body):
                pending = [f"B{{{_members(trust)}}}{{{_members(data)}}} ", *_operand(body)]
            case Announce(data, body):
                pending = [f"[{_members(data)}] ", *_operand(body)]
            case _:
                raise TypeError(f"not a formula: {item!r}")
        stack.extend(reversed(pending))
    return "".join(out)
