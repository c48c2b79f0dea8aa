"""Single-line proof mutations, each of which a sound checker must reject at the mutated line."""

from dataclasses import replace

from src.errors import AtomCapExceededError
from src.logic.formulas import Announce, Belief, Dataset, Formula, Implies, Not, children
from src.proofs.checker import AxiomStep, ModusPonens, NecAnnounce, NecBelief, Proof, ProofLine
from src.proofs.schemas import Schema, Substitution
from src.proofs.tautology import is_tautology

# a variable no fixture mentions, so adding it always changes a dataset
FRESH_VARIABLE = "mutated"

# negated proper subterms tried per line, in pre-order
SUBTERM_LIMIT = 8


def _with_line(pf: Proof, k: int, line: ProofLine) -> Proof:
    lines = list(pf.lines)
    lines[k - 1] = line
    return replace(pf, lines=tuple(lines))


def _grow(d: Dataset) -> Dataset:
    return d | Dataset((FRESH_VARIABLE,))


def _not_tautology(f: Formula) -> bool:
    try:
        return not is_tautology(f)
    except AtomCapExceededError:
        return True


def _with_child(node: Formula, slot: int, child: Formula) -> Formula:
    match node:
        case Not():
            return Not(child)
        case Implies(lhs, rhs):
            return Implies(child, rhs) if slot == 0 else Implies(lhs, child)
        case Belief(trust, data, _):
            return Belief(trust, data, child)
        case Announce(data, _):
            return Announce(data, child)
    raise TypeError(f"no subterm {slot} in {node}")


def _negated_subterms(f: Formula) -> list[Formula]:
    """f with one proper subterm wrapped in a negation, for the first SUBTERM_LIMIT positions."""
    paths: list[tuple[int, ...]] = []
    stack: list[tuple[Formula, tuple[int, ...]]] = [(f, ())]
    while stack and len(paths) < SUBTERM_LIMIT + 1:
        node, path = stack.pop()
        paths.append(path)
        stack.extend((child, (*path, i)) for i, child in reversed(list(enumerate(children(node)))))

    out = []
    for path in paths[1:]:
        spine = [f]
        for slot in path:
            spine.append(children(spine[-1])[slot])
        rebuilt: Formula = Not(spine[-1])
        for node, slot in zip(reversed(spine[:-1]), reversed(path), strict=True):
            rebuilt = _with_child(node, slot, rebuilt)
        out.append(rebuilt)
    return out


def _axiom_mutations(schema: Schema, subst: Substitution) -> list[AxiomStep]:
    out = [AxiomStep(other, subst) for other in Schema if other is not schema]
    for name, phi in sorted(subst.formulas.items()):
        out.append(AxiomStep(schema, replace(subst, formulas={**subst.formulas, name: Not(phi)})))
    for name, data in sorted(subst.datasets.items()):
        out.append(AxiomStep(schema, replace(subst, datasets={**subst.datasets, name: _grow(data)})))
    return out


def _line_mutations(pf: Proof, k: int) -> list[ProofLine]:
    line = pf.lines[k - 1]
    claims = [Not(line.formula), *_negated_subterms(line.formula)]
    if line.by == AxiomStep(Schema.TAUTOLOGY):
        # a negated subterm can leave a tautology in place
        claims = [c for c in claims if _not_tautology(c)]
    out = [replace(line, formula=c) for c in claims]

    match line.by:
        case ModusPonens(premise, implication):
            out.append(replace(line, by=ModusPonens(implication, premise)))
            out.append(replace(line, by=ModusPonens(k, implication)))
            premise_formula = pf.lines[premise - 1].formula if 1 <= premise < k else None
            implication_formula = pf.lines[implication - 1].formula if 1 <= implication < k else None
            for other in range(1, k):
                if other != premise and pf.lines[other - 1].formula != premise_formula:
                    out.append(replace(line, by=ModusPonens(other, implication)))
                if other != implication and pf.lines[other - 1].formula != implication_formula:
                    out.append(replace(line, by=ModusPonens(premise, other)))
        case AxiomStep(schema, subst):
            out.extend(replace(line, by=by) for by in _axiom_mutations(schema, subst))
            if schema is not Schema.TAUTOLOGY and _not_tautology(line.formula):
                out.append(replace(line, by=AxiomStep(Schema.TAUTOLOGY)))
        case NecBelief(source, trust, data):
            out.append(replace(line, by=NecBelief(source, _grow(trust), data)))
            out.append(replace(line, by=NecBelief(source, trust, _grow(data))))
            out.append(replace(line, by=NecBelief(k, trust, data)))
        case NecAnnounce(source, data):
            out.append(replace(line, by=NecAnnounce(source, _grow(data))))
            out.append(replace(line, by=NecAnnounce(k, data)))

    unique: list[ProofLine] = []
    for mutant in out:
        if mutant not in unique:
            unique.append(mutant)
    return unique


def proof_mutations(pf: Proof) -> list[tuple[int, Proof]]:
    """(line, mutant) pairs: negated claims and subterms, retagged schemas, altered bindings,
    redirected Modus Ponens indices, altered Necessitation datasets and forward references."""
    return [(k, _with_line(pf, k, mutant)) for k in range(1, len(pf.lines) + 1) for mutant in _line_mutations(pf, k)]
