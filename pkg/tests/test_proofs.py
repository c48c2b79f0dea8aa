import json

import pytest

from src.checker import falsifying_points
from src.errors import AtomCapExceededError, InstantiationError, ProofFormatError
from src.harness import GenParams, gen_model, proof_mutations
from src.harness.generators import sized_model
from src.logic import EMPTY, Atom, Dataset, parse
from src.models import dump_model, load_model
from src.proofs import (
    AssumptionStep,
    AxiomStep,
    ModusPonens,
    NecAnnounce,
    NecBelief,
    Proof,
    ProofLine,
    Schema,
    Substitution,
    TheoremStep,
    check_derivation,
    check_proof,
    instantiate,
    is_tautology,
    load_assumptions,
    load_proof,
)
from tests.conftest import fixture_path

p, q = Atom("p"), Atom("q")
X, T = Dataset.of("x"), Dataset.of("t")


def subst(datasets=None, **formulas) -> Substitution:
    return Substitution({k: parse(v) for k, v in formulas.items()}, dict(datasets or {}))


def proof(*lines: tuple[str, object]) -> Proof:
    body = tuple(ProofLine(parse(text), by) for text, by in lines)
    return Proof(body, body[-1].formula)


class TestInstantiate:
    def test_truth(self):
        assert instantiate(Schema.TRUTH, subst({"X": X}, phi="p")) == parse("B{}{x} p -> p")

    def test_empty_announcement_expands_iff(self):
        assert instantiate(Schema.EMPTY_ANNOUNCEMENT, subst(phi="p")) == parse("!(([]p -> p) -> !(p -> []p))")

    def test_commutativity(self):
        s = subst({"T": T, "X": X, "Y": Dataset.of("y")}, phi="p")
        assert instantiate(Schema.COMMUTATIVITY, s) == parse("[y] B{t}{x} p <-> B{t}{x,y} [y] p")

    def test_combination_unites_datasets(self):
        s = subst({"X": X, "Y": Dataset.of("y")}, phi="p")
        assert instantiate(Schema.COMBINATION, s) == parse("[x][y] p <-> [x,y] p")

    def test_monotonicity_side_condition(self):
        s = subst({"T": T, "T'": EMPTY, "X": X, "X'": X}, phi="p")
        with pytest.raises(InstantiationError, match="T <= T'"):
            instantiate(Schema.MONOTONICITY, s)

    def test_monotonicity(self):
        s = subst({"T": EMPTY, "T'": T, "X": X, "X'": Dataset.of("x", "y")}, phi="p")
        assert instantiate(Schema.MONOTONICITY, s) == parse("B{}{x} p -> B{t}{x,y} p")

    def test_missing_binding(self):
        with pytest.raises(InstantiationError, match="X"):
            instantiate(Schema.TRUTH, subst(phi="p"))

    def test_extra_binding(self):
        with pytest.raises(InstantiationError, match="psi"):
            instantiate(Schema.TRUTH, subst({"X": X}, phi="p", psi="q"))

    def test_tautology_has_no_instances(self):
        with pytest.raises(InstantiationError):
            instantiate(Schema.TAUTOLOGY, Substitution())


class TestTautology:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("p -> p", True),
            ("B{}{x} p -> p", False),
            ("((p -> q) -> p) -> p", True),
            ("B{t}{x} p -> B{t}{x} p", True),
            ("[x] p -> [x] p", True),
            ("B{t}{x} p -> B{}{x} p", False),
            ("p -> q", False),
            ("false -> p", True),
        ],
    )
    def test_truth_table(self, text, expected):
        assert is_tautology(parse(text)) is expected

    def test_cap(self):
        f = parse(" -> ".join(f"a{i}" for i in range(6)))
        with pytest.raises(AtomCapExceededError):
            is_tautology(f, cap=5)

    def test_substitution_instances_are_valid(self):
        # Peirce's law with modal formulas plugged in for p and q
        f = parse("((B{}{x1} p0 -> [x2] p1) -> B{}{x1} p0) -> B{}{x1} p0")
        assert is_tautology(f)
        for seed in range(20):
            m = gen_model(GenParams(seed=seed, max_variables=2, atoms=2))
            if {"x1", "x2"} <= set(m.variables):
                assert falsifying_points(m, f) == []


class TestCheckProof:
    def test_empty_announcement_fixture(self, empty_announcement_proof):
        result = check_proof(empty_announcement_proof)
        assert result.accepted
        assert result.conclusion == parse("[] p -> p")

    def test_positive_introspection_fixture(self, positive_introspection_proof):
        result = check_proof(positive_introspection_proof)
        assert result.accepted, str(result)
        assert result.conclusion == parse("B{t}{x} p -> B{}{x} B{t}{x} p")

    def test_wrong_instance_rejected(self):
        pf = proof(("B{}{x} p -> q", AxiomStep(Schema.TRUTH, subst({"X": X}, phi="p"))))
        result = check_proof(pf)
        assert (result.accepted, result.line) == (False, 1)
        assert "Truth instance" in result.reason

    def test_modus_ponens_shape(self):
        pf = proof(
            ("p -> p", AxiomStep(Schema.TAUTOLOGY)),
            ("(p -> p) -> q -> q -> q", AxiomStep(Schema.TAUTOLOGY)),
            ("q -> q -> q", ModusPonens(1, 2)),
        )
        assert check_proof(pf).accepted
        bad = proof(*[(str(line.formula), line.by) for line in pf.lines[:2]], ("q -> q", ModusPonens(1, 2)))
        assert check_proof(bad).line == 3

    def test_forward_reference(self):
        pf = proof(("p -> p", ModusPonens(1, 1)))
        result = check_proof(pf)
        assert result.line == 1
        assert "earlier" in result.reason

    def test_necessitation(self):
        pf = proof(
            ("p -> p", AxiomStep(Schema.TAUTOLOGY)),
            ("B{t}{x} (p -> p)", NecBelief(1, T, X)),
            ("[x] B{t}{x} (p -> p)", NecAnnounce(2, X)),
        )
        assert check_proof(pf).accepted

    def test_necessitation_dataset_mismatch(self):
        pf = proof(("p -> p", AxiomStep(Schema.TAUTOLOGY)), ("B{}{x} (p -> p)", NecBelief(1, T, X)))
        assert check_proof(pf).line == 2

    def test_conclusion_must_match_last_line(self):
        pf = Proof((ProofLine(parse("p -> p"), AxiomStep(Schema.TAUTOLOGY)),), parse("q -> q"))
        result = check_proof(pf)
        assert (result.accepted, result.line) == (False, 1)

    def test_empty_proof(self):
        assert not check_proof(Proof((), p)).accepted

    def test_cited_theorem(self, empty_announcement_proof):
        pf = proof(
            ("[] p -> p", TheoremStep(empty_announcement_proof)),
            ("[x] ([] p -> p)", NecAnnounce(1, X)),
        )
        assert check_proof(pf).accepted

    def test_assumption_without_assumptions(self):
        assert check_proof(proof(("p", AssumptionStep(1)))).line == 1

    def test_tautology_over_cap_is_a_rejection(self, monkeypatch):
        from src.config import settings

        monkeypatch.setattr(settings, "tautology_atom_cap", 1)
        result = check_proof(proof(("p -> q -> p", AxiomStep(Schema.TAUTOLOGY))))
        assert not result.accepted
        assert "cap" in result.reason

    def test_tautology_line_takes_no_bindings(self):
        result = check_proof(proof(("p -> p", AxiomStep(Schema.TAUTOLOGY, subst(phi="q")))))
        assert (result.accepted, result.line) == (False, 1)
        assert result.reason == "Tautology does not use phi"


class TestCheckDerivation:
    def test_modus_ponens_from_assumptions(self):
        pf = proof(("p", AssumptionStep(1)), ("p -> q", AssumptionStep(2)), ("q", ModusPonens(1, 2)))
        result = check_derivation([p, parse("p -> q")], pf)
        assert result.accepted
        assert result.conclusion == q

    def test_necessitation_forbidden_under_assumptions(self):
        pf = load_proof(fixture_path("proofs", "necessitation_under_assumptions.json").read_bytes())
        assumptions = load_assumptions(fixture_path("proofs", "assumptions_p.json").read_bytes())
        result = check_derivation(assumptions, pf)
        assert (result.accepted, result.line) == (False, 2)
        assert result.reason == "Necessitation not permitted under assumptions"

    def test_no_assumptions_is_check_proof(self, positive_introspection_proof):
        assert check_derivation([], positive_introspection_proof) == check_proof(positive_introspection_proof)

    def test_wrong_assumption(self):
        result = check_derivation([p], proof(("q", AssumptionStep(1))))
        assert result.line == 1


class TestMutations:
    @pytest.mark.parametrize("name", ["empty_announcement_proof", "positive_introspection_proof"])
    def test_every_mutation_rejected_at_its_line(self, request, name):
        pf = request.getfixturevalue(name)
        mutants = proof_mutations(pf)
        assert len(mutants) >= 20
        for line, mutant in mutants:
            result = check_proof(mutant)
            assert not result.accepted
            assert result.line == line, f"{mutant.lines[line - 1]}: {result}"

    def test_every_line_is_mutated(self, empty_announcement_proof):
        lines = {line for line, _ in proof_mutations(empty_announcement_proof)}
        assert lines == {1, 2, 3}

    def test_mutants_differ_from_the_original(self, empty_announcement_proof):
        for line, mutant in proof_mutations(empty_announcement_proof):
            assert mutant.lines[line - 1] != empty_announcement_proof.lines[line - 1]

    def test_schema_retagged(self, empty_announcement_proof):
        retagged = {
            mutant.lines[0].by.schema
            for line, mutant in proof_mutations(empty_announcement_proof)
            if line == 1 and isinstance(mutant.lines[0].by, AxiomStep)
        }
        assert retagged == set(Schema)

    def test_negated_subterm_of_a_tautology_stays_a_non_tautology(self, empty_announcement_proof):
        for line, mutant in proof_mutations(empty_announcement_proof):
            if line == 2 and mutant.lines[1].by == AxiomStep(Schema.TAUTOLOGY):
                assert not is_tautology(mutant.lines[1].formula)


class TestProofFile:
    def _load(self, data) -> Proof:
        return load_proof(json.dumps(data))

    def test_fixture_shape(self, empty_announcement_proof):
        assert len(empty_announcement_proof.lines) == 3
        assert empty_announcement_proof.lines[2].by == ModusPonens(1, 2)

    def test_necessitation_line(self):
        pf = self._load(
            {
                "conclusion": "B{t}{} (p -> p)",
                "lines": [
                    {"formula": "p -> p", "by": {"axiom": "Tautology"}},
                    {"formula": "B{t}{} (p -> p)", "by": {"necB": {"from": 1, "T": ["t"], "X": []}}},
                ],
            }
        )
        assert pf.lines[1].by == NecBelief(1, T, EMPTY)
        assert check_proof(pf).accepted

    def test_inline_theorem(self):
        inner = json.loads(fixture_path("proofs", "empty_announcement.json").read_text())
        pf = self._load({"conclusion": "[] p -> p", "lines": [{"formula": "[] p -> p", "by": {"theorem": inner}}]})
        assert isinstance(pf.lines[0].by, TheoremStep)
        assert check_proof(pf).accepted

    @pytest.mark.parametrize(
        ("data", "path"),
        [
            ({"lines": []}, "conclusion"),
            ({"conclusion": "p", "lines": [{"formula": "p ->", "by": {"assumption": 1}}]}, "lines[0].formula"),
            ({"conclusion": "p", "lines": [{"formula": "p", "by": {"guess": 1}}]}, "lines[0].by"),
            ({"conclusion": "p", "lines": [{"formula": "p", "by": {"axiom": "Magic"}}]}, "lines[0].by.axiom"),
            ({"conclusion": "p", "lines": [{"formula": "p", "by": {"mp": [1]}}]}, "lines[0].by.mp"),
            (
                {"conclusion": "p", "lines": [{"formula": "p", "by": {"axiom": "Truth", "subst": {"Z": []}}}]},
                "lines[0].by.subst.Z",
            ),
            (
                {"conclusion": "p", "lines": [{"formula": "p", "by": {"axiom": "Truth", "subst": {"phi": ["x"]}}}]},
                "lines[0].by.subst.phi",
            ),
            ({"conclusion": "p", "lines": [{"formula": "p", "by": {"necA": {"X": []}}}]}, "lines[0].by.necA.from"),
        ],
    )
    def test_format_errors_name_the_path(self, data, path):
        with pytest.raises(ProofFormatError) as info:
            self._load(data)
        assert info.value.path.startswith(path)

    def test_invalid_json(self):
        with pytest.raises(ProofFormatError):
            load_proof("{")

    def test_assumptions_file(self):
        assert load_assumptions('["p", "p -> q"]') == [p, parse("p -> q")]
        with pytest.raises(ProofFormatError):
            load_assumptions('{"p": 1}')


def _fixture_vocabulary(seed: int):
    # the fixture proofs talk about variables x, t and proposition p
    m = sized_model(1 + seed % 5, 2, seed)
    return load_model(dump_model(m).replace('"x1"', '"x"').replace('"x2"', '"t"').replace('"p0"', '"p"'))


def test_accepted_theorems_hold_on_random_models(positive_introspection_proof, empty_announcement_proof):
    conclusions = [check_proof(pf).conclusion for pf in (positive_introspection_proof, empty_announcement_proof)]
    for seed in range(30):
        m = _fixture_vocabulary(seed)
        for f in conclusions:
            assert falsifying_points(m, f) == []
