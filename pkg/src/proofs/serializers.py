"""Pydantic models and loading for proof and assumption files."""

import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from src.errors import FormulaSyntaxError, ProofFormatError
from src.logic.formulas import Dataset, Formula
from src.logic.parser import parse
from src.models.loader import format_loc
from src.proofs.checker import (
    AssumptionStep,
    AxiomStep,
    Justification,
    ModusPonens,
    NecAnnounce,
    NecBelief,
    Proof,
    ProofLine,
    TheoremStep,
)
from src.proofs.schemas import DATASET_METAVARS, FORMULA_METAVARS, Schema, Substitution

logger = logging.getLogger(__name__)


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class AxiomBy(_Strict):
    axiom: str
    subst: dict[str, str | list[str]] = Field(default_factory=dict)


class MpBy(_Strict):
    mp: tuple[int, int]


class NecBeliefArgs(_Strict):
    source: int = Field(alias="from")
    T: list[str] = Field(default_factory=list)
    X: list[str] = Field(default_factory=list)


class NecBeliefBy(_Strict):
    necB: NecBeliefArgs


class NecAnnounceArgs(_Strict):
    source: int = Field(alias="from")
    X: list[str] = Field(default_factory=list)


class NecAnnounceBy(_Strict):
    necA: NecAnnounceArgs


class AssumptionBy(_Strict):
    assumption: int


class LineIn(_Strict):
    formula: str
    # exactly one of the keys in _JUSTIFICATIONS (plus "theorem"), checked by the loader
    by: dict[str, Any]


class ProofFile(_Strict):
    conclusion: str
    lines: list[LineIn] = Field(default_factory=list)


_JUSTIFICATIONS: dict[str, type[_Strict]] = {
    "axiom": AxiomBy,
    "mp": MpBy,
    "necB": NecBeliefBy,
    "necA": NecAnnounceBy,
    "assumption": AssumptionBy,
}

_assumptions_adapter = TypeAdapter(list[str])


def _join(path: str, loc: tuple[int | str, ...]) -> str:
    rest = format_loc(loc)
    if rest == "$":
        return path or rest
    if not path:
        return rest
    return path + rest if rest.startswith("[") else f"{path}.{rest}"


def _formula(path: str, text: str) -> Formula:
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise ProofFormatError(path, str(e)) from None


def _dataset(path: str, names: list[str]) -> Dataset:
    try:
        return Dataset(tuple(names))
    except ValueError as e:
        raise ProofFormatError(path, str(e)) from None


def _substitution(path: str, raw: dict[str, str | list[str]]) -> Substitution:
    subst = Substitution()
    for name, value in raw.items():
        where = f"{path}.{name}"
        if name in FORMULA_METAVARS:
            if not isinstance(value, str):
                raise ProofFormatError(where, "formula metavariable needs formula text")
            subst.formulas[name] = _formula(where, value)
        elif name in DATASET_METAVARS:
            if not isinstance(value, list):
                raise ProofFormatError(where, "dataset metavariable needs a list of variables")
            subst.datasets[name] = _dataset(where, value)
        else:
            raise ProofFormatError(where, f"unknown metavariable '{name}'")
    return subst


def _justification(path: str, by: dict[str, Any]) -> Justification:
    kinds = [k for k in by if k in _JUSTIFICATIONS or k == "theorem"]
    if len(kinds) != 1:
        known = ", ".join([*_JUSTIFICATIONS, "theorem"])
        raise ProofFormatError(path, f"justification needs exactly one of {known}")
    (kind,) = kinds
    if kind == "theorem":
        if len(by) != 1:
            raise ProofFormatError(path, "theorem justification takes no other keys")
        return TheoremStep(_proof(f"{path}.theorem", by["theorem"]))
    try:
        raw = _JUSTIFICATIONS[kind].model_validate(by)
    except ValidationError as e:
        err = e.errors()[0]
        raise ProofFormatError(_join(path, tuple(err["loc"])), err["msg"]) from None

    match raw:
        case AxiomBy(axiom=name, subst=subst):
            try:
                schema = Schema(name)
            except ValueError:
                raise ProofFormatError(f"{path}.axiom", f"unknown axiom schema '{name}'") from None
            return AxiomStep(schema, _substitution(f"{path}.subst", subst))
        case MpBy(mp=(premise, implication)):
            return ModusPonens(premise, implication)
        case NecBeliefBy(necB=args):
            return NecBelief(args.source, _dataset(f"{path}.necB.T", args.T), _dataset(f"{path}.necB.X", args.X))
        case NecAnnounceBy(necA=args):
            return NecAnnounce(args.source, _dataset(f"{path}.necA.X", args.X))
        case AssumptionBy(assumption=index):
            return AssumptionStep(index)
    raise TypeError(f"unhandled justification {raw!r}")


def _proof(path: str, data: Any) -> Proof:
    try:
        raw = ProofFile.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        raise ProofFormatError(_join(path, tuple(err["loc"])), err["msg"]) from None

    prefix = f"{path}." if path else ""
    lines = []
    for i, line in enumerate(raw.lines):
        where = f"{prefix}lines[{i}]"
        lines.append(ProofLine(_formula(f"{where}.formula", line.formula), _justification(f"{where}.by", line.by)))
    return Proof(tuple(lines), _formula(f"{prefix}conclusion", raw.conclusion))


def load_proof(content: bytes | str) -> Proof:
    """Parse and validate a proof file. Structural problems raise ProofFormatError."""
    try:
        data = TypeAdapter(Any).validate_json(content)
    except ValidationError as e:
        raise ProofFormatError("$", e.errors()[0]["msg"]) from None
    proof = _proof("", data)
    logger.info(f"Loaded proof: {len(proof.lines)} lines")
    return proof


def load_assumptions(content: bytes | str) -> list[Formula]:
    """An assumptions file is a JSON list of formula texts."""
    try:
        texts = _assumptions_adapter.validate_json(content)
    except ValidationError as e:
        err = e.errors()[0]
        raise ProofFormatError(format_loc(tuple(err["loc"])), err["msg"]) from None
    return [_formula(f"[{i}]", text) for i, text in enumerate(texts)]
