"""Suite reports, serialized as JSON with pydantic."""

from typing import Any

from pydantic import BaseModel, Field

from src.logic.formulas import Formula
from src.models.loader import model_as_dict
from src.models.trust import EvalPoint, TrustModel


class PointOut(BaseModel):
    world: str
    announced: list[str]


class Failure(BaseModel):
    check: str
    seed: int
    model: dict[str, Any]
    formula: str
    point: PointOut
    expected: bool
    got: bool
    # smallest failing instance re-derived from the same seed, if shrinking found one
    shrunk: "Failure | None" = None

    @classmethod
    def build(
        cls, check: str, seed: int, m: TrustModel, f: Formula, pt: EvalPoint, expected: bool, got: bool
    ) -> "Failure":
        return cls(
            check=check,
            seed=seed,
            model=model_as_dict(m),
            formula=str(f),
            point=PointOut(world=pt.world, announced=list(pt.announced.members)),
            expected=expected,
            got=got,
        )


class SuiteReport(BaseModel):
    suite: str
    trials: int = 0
    # necessitation trials whose premise was not valid on the sampled model
    skipped: int = 0
    failures: list[Failure] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "SuiteReport") -> "SuiteReport":
        return SuiteReport(
            suite=self.suite,
            trials=self.trials + other.trials,
            skipped=self.skipped + other.skipped,
            failures=self.failures + other.failures,
            wall_time=self.wall_time + other.wall_time,
        )

    def summary(self) -> str:
        line = f"{self.suite}: {self.trials} trials, {len(self.failures)} failures"
        if self.skipped:
            line += f", {self.skipped} skipped"
        return f"{line} ({self.wall_time:.2f}s)"


class FuzzReport(BaseModel):
    seed: int
    suites: list[SuiteReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.suites)
