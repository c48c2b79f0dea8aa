from pydantic import BaseModel


class CheckOut(BaseModel):
    result: bool | None
    engine: str
    # per-engine verdicts when more than one engine ran
    engines: dict[str, bool] | None = None


class WitnessOut(BaseModel):
    world: str
    trust: list[str]
    agrees_on: list[str]


class CounterexampleOut(BaseModel):
    formula: str
    holds: bool
    witnesses: list[WitnessOut]
