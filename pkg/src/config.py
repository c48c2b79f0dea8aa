import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

_ENGINES = ("oracle", "dp", "both", "table")


def _env(name: str, default: str) -> str:
    return os.environ.get(f"TRUSTLOGIC_{name}", default)


@dataclass
class Settings:
    log_level: str
    # Engine used by `check` when --engine is omitted
    default_engine: str
    # Upper bound on distinct atoms after abstraction in tautology checks
    tautology_atom_cap: int
    # The exhaustive engine enumerates 2^|V| announced sets
    exhaustive_max_variables: int
    # Fuzzing defaults
    fuzz_seed: int
    fuzz_workers: int
    shrink_enabled: bool
    # Generator defaults (see GenParams)
    gen_max_worlds: int
    gen_max_variables: int
    gen_max_depth: int
    gen_max_dataset: int
    gen_atoms: int

    @classmethod
    def from_env(cls) -> "Settings":
        log_level = _env("LOG_LEVEL", "WARNING").upper()

        default_engine = _env("DEFAULT_ENGINE", "dp").lower()
        if default_engine not in _ENGINES:
            raise ValueError(f"TRUSTLOGIC_DEFAULT_ENGINE must be one of {', '.join(_ENGINES)}")

        tautology_atom_cap = int(_env("TAUTOLOGY_ATOM_CAP", "20"))
        exhaustive_max_variables = int(_env("EXHAUSTIVE_MAX_VARIABLES", "12"))

        fuzz_seed = int(_env("FUZZ_SEED", "42"))
        fuzz_workers = int(_env("FUZZ_WORKERS", "1"))
        shrink_enabled = _env("SHRINK_ENABLED", "true").lower() == "true"

        gen_max_worlds = int(_env("GEN_MAX_WORLDS", "6"))
        gen_max_variables = int(_env("GEN_MAX_VARIABLES", "4"))
        gen_max_depth = int(_env("GEN_MAX_DEPTH", "6"))
        gen_max_dataset = int(_env("GEN_MAX_DATASET", "3"))
        gen_atoms = int(_env("GEN_ATOMS", "3"))

        if fuzz_workers < 1:
            raise ValueError("TRUSTLOGIC_FUZZ_WORKERS must be at least 1")

        return cls(
            log_level=log_level,
            default_engine=default_engine,
            tautology_atom_cap=tautology_atom_cap,
            exhaustive_max_variables=exhaustive_max_variables,
            fuzz_seed=fuzz_seed,
            fuzz_workers=fuzz_workers,
            shrink_enabled=shrink_enabled,
            gen_max_worlds=gen_max_worlds,
            gen_max_variables=gen_max_variables,
            gen_max_depth=gen_max_depth,
            gen_max_dataset=gen_max_dataset,
            gen_atoms=gen_atoms,
        )


settings = Settings.from_env()
