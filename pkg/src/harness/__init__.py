from .generators import GenParams, gen_formula, gen_instance, gen_model, gen_point, trial_seed
from .mutations import proof_mutations
from .reports import Failure, FuzzReport, SuiteReport
from .suites import SUITES, equivalence_suite, necessitation_suite, replay, shrink, soundness_suite

__all__ = [
    "SUITES",
    "Failure",
    "FuzzReport",
    "GenParams",
    "SuiteReport",
    "equivalence_suite",
    "gen_formula",
    "gen_instance",
    "gen_model",
    "gen_point",
    "necessitation_suite",
    "proof_mutations",
    "replay",
    "shrink",
    "soundness_suite",
    "trial_seed",
]
