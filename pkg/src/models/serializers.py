"""Pydantic models for the JSON model file."""

from pydantic import BaseModel, ConfigDict, Field


class ValuationIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    permanent: list[str] = Field(default_factory=list)
    # [world, [variables...]] pairs
    announced: list[tuple[str, list[str]]] = Field(default_factory=list)


class ModelFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    worlds: list[str] = Field(default_factory=list)
    variables: list[str] = Field(default_factory=list)
    indistinguishability: dict[str, list[list[str]]] = Field(default_factory=dict)
    trustworthy: dict[str, list[str]] = Field(default_factory=dict)
    valuation: dict[str, ValuationIn] = Field(default_factory=dict)


class ModelSummary(BaseModel):
    worlds: int
    variables: int
    blocks: dict[str, int]
    propositions: list[str]
