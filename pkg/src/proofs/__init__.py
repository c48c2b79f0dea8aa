from .checker import (
    AssumptionStep,
    AxiomStep,
    ModusPonens,
    NecAnnounce,
    NecBelief,
    Proof,
    ProofLine,
    ProofResult,
    TheoremStep,
    check_derivation,
    check_proof,
)
from .schemas import SCHEMA_METAVARS, Schema, Substitution, instantiate
from .serializers import load_assumptions, load_proof
from .tautology import is_tautology

__all__ = [
    "SCHEMA_METAVARS",
    "AssumptionStep",
    "AxiomStep",
    "ModusPonens",
    "NecAnnounce",
    "NecBelief",
    "Proof",
    "ProofLine",
    "ProofResult",
    "Schema",
    "Substitution",
    "TheoremStep",
    "check_derivation",
    "check_proof",
    "instantiate",
    "is_tautology",
    "load_assumptions",
    "load_proof",
]
