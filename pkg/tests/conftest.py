from pathlib import Path

import pytest

from src.models import TrustModel, load_model
from src.proofs import Proof, load_proof

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(*parts: str) -> Path:
    return FIXTURES.joinpath(*parts)


def load_fixture_model(name: str) -> TrustModel:
    return load_model(fixture_path("models", f"{name}.json").read_bytes())


def load_fixture_proof(name: str) -> Proof:
    return load_proof(fixture_path("proofs", f"{name}.json").read_bytes())


@pytest.fixture
def m1() -> TrustModel:
    """Worlds w1..w3, w2 ~_t w3, t trustworthy in w1 and w3."""
    return load_fixture_model("m1")


@pytest.fixture
def m2() -> TrustModel:
    """One world w; p holds there only while nothing is announced."""
    return load_fixture_model("m2")


@pytest.fixture
def m3() -> TrustModel:
    """w1, w2 told apart by x but not by y; p permanently true in w1."""
    return load_fixture_model("m3")


@pytest.fixture
def empty_announcement_proof() -> Proof:
    return load_fixture_proof("empty_announcement")


@pytest.fixture
def positive_introspection_proof() -> Proof:
    return load_fixture_proof("positive_introspection")
