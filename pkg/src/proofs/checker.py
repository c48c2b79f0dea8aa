"""Hilbert-style proof checking for theorems (|- f) and derivations from assumptions (F |- f)."""

import logging
from dataclasses import dataclass, field

from src.errors import AtomCapExceededError, InstantiationError
from src.logic.formulas import Announce, Belief, Dataset, Formula, Implies
from src.proofs.schemas import Schema, Substitution, instantiate
from src.proofs.tautology import is_tautology

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomStep:
    schema: Schema
    subst: Substitution = field(default_factory=Substitution)


@dataclass(frozen=True)
class ModusPonens:
    # 1-based line numbers: the premise f and the implication f -> claim
    premise: int
    implication: int


@dataclass(frozen=True)
class NecBelief:
    source: int
    trust: Dataset
    data: Dataset


@dataclass(frozen=True)
class NecAnnounce:
    source: int
    data: Dataset


@dataclass(frozen=True)
class AssumptionStep:
    index: int


@dataclass(frozen=True)
class TheoremStep:
    proof: "Proof"


Justification = AxiomStep | ModusPonens | NecBelief | NecAnnounce | AssumptionStep | TheoremStep


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    by: Justification


@dataclass(frozen=True)
class Proof:
    lines: tuple[ProofLine, ...]
    conclusion: Formula


@dataclass(frozen=True)
class ProofResult:
    accepted: bool
    conclusion: Formula | None = None
    # 1-based line of the first rejected step
    line: int | None = None
    reason: str = ""

    @classmethod
    def accept(cls, conclusion: Formula) -> "ProofResult":
        return cls(accepted=True, conclusion=conclusion)

    @classmethod
    def reject(cls, line: int, reason: str) -> "ProofResult":
        return cls(accepted=False, line=line, reason=reason)

    def __str__(self) -> str:
        if self.accepted:
            return f"accepted: {self.conclusion}"
        return f"rejected at line {self.line}: {self.reason}"


class _Rejected(Exception):
    pass


def _earlier(ref: int, current: int) -> int:
    if not 1 <= ref < current:
        raise _Rejected(f"line {ref} is not an earlier line")
    return ref


def _justify(
    claimed: Formula,
    by: Justification,
    current: int,
    proved: list[Formula],
    assumptions: list[Formula],
    allow_necessitation: bool,
) -> None:
    match by:
        case AxiomStep(Schema.TAUTOLOGY, subst):
            if subst.bound():
                raise _Rejected(f"{Schema.TAUTOLOGY} does not use {', '.join(sorted(subst.bound()))}")
            try:
                ok = is_tautology(claimed)
            except AtomCapExceededError as e:
                raise _Rejected(str(e)) from None
            if not ok:
                raise _Rejected("not a propositional tautology")
        case AxiomStep(schema, subst):
            try:
                instance = instantiate(schema, subst)
            except InstantiationError as e:
                raise _Rejected(str(e)) from None
            if instance != claimed:
                raise _Rejected(f"formula is not the {schema} instance {instance}")
        case ModusPonens(premise, implication):
            antecedent = proved[_earlier(premise, current) - 1]
            expected = Implies(antecedent, claimed)
            if proved[_earlier(implication, current) - 1] != expected:
                raise _Rejected(f"line {implication} is not {expected}")
        case NecBelief(source, trust, data):
            if not allow_necessitation:
                raise _Rejected("Necessitation not permitted under assumptions")
            expected = Belief(trust, data, proved[_earlier(source, current) - 1])
            if claimed != expected:
                raise _Rejected(f"Necessitation from line {source} gives {expected}")
        case NecAnnounce(source, data):
            if not allow_necessitation:
                raise _Rejected("Necessitation not permitted under assumptions")
            expected = Announce(data, proved[_earlier(source, current) - 1])
            if claimed != expected:
                raise _Rejected(f"Necessitation from line {source} gives {expected}")
        case AssumptionStep(index):
            if not 1 <= index <= len(assumptions):
                raise _Rejected(f"no assumption {index}")
            if assumptions[index - 1] != claimed:
                raise _Rejected(f"assumption {index} is {assumptions[index - 1]}")
        case TheoremStep(proof):
            result = check_proof(proof)
            if not result.accepted:
                raise _Rejected(f"cited theorem is rejected at its line {result.line}: {result.reason}")
            if result.conclusion != claimed:
                raise _Rejected(f"cited theorem proves {result.conclusion}")
        case _:
            raise TypeError(f"unknown justification: {by!r}")


def _check(pf: Proof, assumptions: list[Formula], allow_necessitation: bool) -> ProofResult:
    if not pf.lines:
        return ProofResult.reject(0, "empty proof")

    proved: list[Formula] = []
    for current, line in enumerate(pf.lines, start=1):
        try:
            _justify(line.formula, line.by, current, proved, assumptions, allow_necessitation)
        except _Rejected as e:
            logger.info(f"Proof rejected at line {current}: {e}")
            return ProofResult.reject(current, str(e))
        logger.debug(f"Line {current} ok: {line.formula}")
        proved.append(line.formula)

    if proved[-1] != pf.conclusion:
        return ProofResult.reject(len(proved), f"last line does not match the conclusion {pf.conclusion}")

    logger.info(f"Proof accepted: {pf.conclusion}")
    return ProofResult.accept(pf.conclusion)


def check_proof(pf: Proof) -> ProofResult:
    """|- conclusion: axioms, tautologies, Modus Ponens, both Necessitation rules and cited theorems."""
    return _check(pf, [], allow_necessitation=True)


def check_derivation(assumptions: list[Formula], pf: Proof) -> ProofResult:
    """F |- conclusion. With assumptions present only Modus Ponens may combine lines.

    An empty assumption list is exactly check_proof.
    """
    return _check(pf, list(assumptions), allow_necessitation=not assumptions)
