import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import ModelValidationError, UnknownVariableError, UnknownWorldError
from src.harness import GenParams, gen_model
from src.logic import EMPTY, Dataset
from src.models import (
    EvalPoint,
    dump_model,
    holds_atom,
    indistinguishable,
    load_model,
    model_as_dict,
    summarize,
    trusts,
)

T = Dataset.of("t")


def _model(**overrides) -> bytes:
    data = {
        "worlds": ["w1", "w2"],
        "variables": ["x"],
        "indistinguishability": {"x": [["w1"], ["w2"]]},
        "trustworthy": {"w1": ["x"]},
        "valuation": {"p": {"permanent": ["w1"]}},
    }
    data.update(overrides)
    return json.dumps(data).encode()


class TestLoadModel:
    def test_m1(self, m1):
        assert m1.worlds == ("w1", "w2", "w3")
        assert m1.variables == T
        assert m1.partitions["t"] == (("w1",), ("w2", "w3"))
        assert m1.trust == {"w1": T, "w2": EMPTY, "w3": T}

    def test_empty_file_is_a_valid_model(self):
        m = load_model("{}")
        assert m.worlds == ()
        assert m.variables == EMPTY

    def test_missing_partition_is_identity(self):
        m = load_model(_model(indistinguishability={}))
        assert m.partitions["x"] == (("w1",), ("w2",))

    def test_blocks_are_canonicalized(self):
        m = load_model(_model(indistinguishability={"x": [["w2", "w1"]]}))
        assert m.partitions["x"] == (("w1", "w2"),)

    def test_missing_trust_is_empty(self):
        m = load_model(_model())
        assert m.trust["w2"] == EMPTY

    @pytest.mark.parametrize(
        ("overrides", "path", "message"),
        [
            ({"worlds": ["w1", "w1"]}, "worlds[1]", "duplicate world"),
            ({"variables": ["x", "x"]}, "variables[1]", "duplicate variable"),
            ({"variables": ["_x"], "indistinguishability": {}, "trustworthy": {}}, "variables[0]", "underscore"),
            ({"indistinguishability": {"y": [["w1", "w2"]]}}, "indistinguishability.y", "unknown variable"),
            ({"indistinguishability": {"x": [["w1"], ["w1", "w2"]]}}, "indistinguishability.x[1]", "already in block 0"),
            ({"indistinguishability": {"x": [["w1"]]}}, "indistinguishability.x", "do not cover"),
            ({"indistinguishability": {"x": [["w1"], []]}}, "indistinguishability.x[1]", "empty block"),
            ({"indistinguishability": {"x": [["w1", "w9"]]}}, "indistinguishability.x[0][1]", "unknown world"),
            ({"trustworthy": {"w9": []}}, "trustworthy.w9", "unknown world"),
            ({"trustworthy": {"w1": ["y"]}}, "trustworthy.w1[0]", "unknown variable"),
            ({"valuation": {"p": {"permanent": ["w9"]}}}, "valuation.p.permanent[0]", "unknown world"),
            ({"valuation": {"p": {"announced": [["w1", ["y"]]]}}}, "valuation.p.announced[0][1][0]", "unknown variable"),
        ],
    )
    def test_invariant_violations_name_the_path(self, overrides, path, message):
        with pytest.raises(ModelValidationError) as info:
            load_model(_model(**overrides))
        assert info.value.path == path
        assert message in info.value.message
        assert info.value.exit_code == 3

    def test_malformed_json(self):
        with pytest.raises(ModelValidationError):
            load_model(b"{not json")

    def test_wrong_shape_reports_pydantic_path(self):
        with pytest.raises(ModelValidationError) as info:
            load_model(_model(worlds="w1"))
        assert info.value.path == "worlds"

    def test_unknown_key_rejected(self):
        with pytest.raises(ModelValidationError):
            load_model(_model(agents=["a"]))


class TestDumpModel:
    def test_round_trip(self, m1, m2, m3):
        for m in (m1, m2, m3):
            assert load_model(dump_model(m)) == m

    def test_as_dict(self, m2):
        data = model_as_dict(m2)
        assert data["valuation"]["p"]["announced"] == [["w", []]]

    @given(st.integers(min_value=0, max_value=2**32))
    def test_generated_models_pass_validation(self, seed):
        m = gen_model(GenParams(seed=seed))
        assert load_model(dump_model(m)) == m

    def test_summary(self, m1):
        summary = summarize(m1)
        assert (summary.worlds, summary.variables, summary.blocks) == (3, 1, {"t": 2})


class TestPrimitives:
    def test_indistinguishable(self, m1, m3):
        assert indistinguishable(m1, "w2", "w3", T)
        assert not indistinguishable(m1, "w1", "w2", T)
        assert indistinguishable(m1, "w1", "w2", EMPTY)
        assert not indistinguishable(m3, "w1", "w2", Dataset.of("x"))
        assert indistinguishable(m3, "w1", "w2", Dataset.of("y"))

    def test_indistinguishable_unknowns(self, m1):
        with pytest.raises(UnknownWorldError):
            indistinguishable(m1, "w1", "w9", T)
        with pytest.raises(UnknownVariableError):
            indistinguishable(m1, "w1", "w2", Dataset.of("z"))

    def test_trusts(self, m1):
        assert not trusts(m1, "w2", T)
        assert trusts(m1, "w3", T)
        assert all(trusts(m1, w, EMPTY) for w in m1.worlds)
        with pytest.raises(UnknownWorldError):
            trusts(m1, "w9", T)

    def test_holds_atom(self, m2, m3):
        assert holds_atom(m2, EvalPoint("w"), "p")
        assert not holds_atom(m2, EvalPoint("w", Dataset.of("x")), "p")
        assert holds_atom(m3, EvalPoint("w1", Dataset.of("x", "y")), "p")

    def test_unknown_proposition_is_false(self, m1):
        assert not holds_atom(m1, EvalPoint("w1"), "rain")

    @given(st.integers(min_value=0, max_value=2**32))
    def test_indistinguishability_is_an_equivalence_refined_by_union(self, seed):
        m = gen_model(GenParams(seed=seed))
        variables = list(m.variables)
        for x in variables:
            d = Dataset.of(x)
            for w in m.worlds:
                assert indistinguishable(m, w, w, d)
                for u in m.worlds:
                    assert indistinguishable(m, w, u, d) == indistinguishable(m, u, w, d)
                    for v in m.worlds:
                        if indistinguishable(m, w, u, d) and indistinguishable(m, u, v, d):
                            assert indistinguishable(m, w, v, d)
        if len(variables) >= 2:
            a, b = Dataset.of(variables[0]), Dataset.of(variables[1])
            for w in m.worlds:
                for u in m.worlds:
                    both = indistinguishable(m, w, u, a | b)
                    assert both == (indistinguishable(m, w, u, a) and indistinguishable(m, w, u, b))
                    if both:
                        assert indistinguishable(m, w, u, a)
