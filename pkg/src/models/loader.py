"""Loading, validating and dumping model files.

Validation is total: either every TrustModel invariant holds or a ModelValidationError
names the first offending path (`indistinguishability.t[1]`, `valuation.p.announced[0]`).
"""

import logging

from pydantic import ValidationError

from src.errors import ModelValidationError
from src.logic.formulas import Dataset, is_identifier
from src.models.serializers import ModelFile, ModelSummary, ValuationIn
from src.models.trust import TrustModel, ValuationEntry

logger = logging.getLogger(__name__)


def format_loc(loc: tuple[int | str, ...]) -> str:
    """Render a pydantic error location as a dotted path with [index] segments."""
    path = ""
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path or "$"


def _first_error(e: ValidationError) -> ModelValidationError:
    err = e.errors()[0]
    return ModelValidationError(format_loc(tuple(err["loc"])), err["msg"])


def _check_name(path: str, name: str, kind: str) -> None:
    if not is_identifier(name):
        raise ModelValidationError(path, f"invalid {kind} name '{name}'")


def _dataset(path: str, names: list[str], variables: set[str]) -> Dataset:
    for i, name in enumerate(names):
        if name not in variables:
            raise ModelValidationError(f"{path}[{i}]", f"unknown variable '{name}'")
    return Dataset(tuple(names))


def _validate(raw: ModelFile) -> TrustModel:
    worlds: list[str] = []
    for i, w in enumerate(raw.worlds):
        _check_name(f"worlds[{i}]", w, "world")
        if w in worlds:
            raise ModelValidationError(f"worlds[{i}]", f"duplicate world '{w}'")
        worlds.append(w)
    known = set(worlds)

    variables: set[str] = set()
    for i, x in enumerate(raw.variables):
        _check_name(f"variables[{i}]", x, "variable")
        if x.startswith("_"):
            raise ModelValidationError(f"variables[{i}]", f"variable '{x}' may not start with an underscore")
        if x in variables:
            raise ModelValidationError(f"variables[{i}]", f"duplicate variable '{x}'")
        variables.add(x)

    partitions: dict[str, tuple[tuple[str, ...], ...]] = {}
    for var, blocks in raw.indistinguishability.items():
        path = f"indistinguishability.{var}"
        if var not in variables:
            raise ModelValidationError(path, f"unknown variable '{var}'")
        seen: dict[str, int] = {}
        for b, block in enumerate(blocks):
            if not block:
                raise ModelValidationError(f"{path}[{b}]", "empty block")
            for j, w in enumerate(block):
                if w not in known:
                    raise ModelValidationError(f"{path}[{b}][{j}]", f"unknown world '{w}'")
                if w in seen:
                    raise ModelValidationError(f"{path}[{b}]", f"world '{w}' already in block {seen[w]}")
                seen[w] = b
        missing = [w for w in worlds if w not in seen]
        if missing:
            raise ModelValidationError(path, f"blocks do not cover world(s) {', '.join(missing)}")
        partitions[var] = tuple(tuple(block) for block in blocks)

    trust: dict[str, Dataset] = {}
    for w, names in raw.trustworthy.items():
        path = f"trustworthy.{w}"
        if w not in known:
            raise ModelValidationError(path, f"unknown world '{w}'")
        trust[w] = _dataset(path, names, variables)

    valuation: dict[str, ValuationEntry] = {}
    for prop, entry in raw.valuation.items():
        path = f"valuation.{prop}"
        _check_name(path, prop, "proposition")
        for i, w in enumerate(entry.permanent):
            if w not in known:
                raise ModelValidationError(f"{path}.permanent[{i}]", f"unknown world '{w}'")
        announced = set()
        for i, (w, names) in enumerate(entry.announced):
            if w not in known:
                raise ModelValidationError(f"{path}.announced[{i}][0]", f"unknown world '{w}'")
            announced.add((w, _dataset(f"{path}.announced[{i}][1]", names, variables)))
        valuation[prop] = ValuationEntry(frozenset(entry.permanent), frozenset(announced))

    return TrustModel(
        worlds=tuple(worlds),
        variables=Dataset(tuple(variables)),
        partitions=partitions,
        trust=trust,
        valuation=valuation,
    )


def load_model(content: bytes | str) -> TrustModel:
    """Parse and validate a model file's content."""
    try:
        raw = ModelFile.model_validate_json(content)
    except ValidationError as e:
        raise _first_error(e) from None

    model = _validate(raw)
    logger.info(f"Loaded model: {len(model.worlds)} worlds, {len(model.variables)} variables")
    return model


def to_model_file(m: TrustModel) -> ModelFile:
    order = {w: i for i, w in enumerate(m.worlds)}
    valuation = {}
    for prop, entry in m.valuation.items():
        announced = sorted(entry.announced, key=lambda pair: (order[pair[0]], len(pair[1]), pair[1].members))
        valuation[prop] = ValuationIn(
            permanent=sorted(entry.permanent, key=order.__getitem__),
            announced=[(w, list(u.members)) for w, u in announced],
        )
    return ModelFile(
        worlds=list(m.worlds),
        variables=list(m.variables.members),
        indistinguishability={x: [list(block) for block in blocks] for x, blocks in m.partitions.items()},
        trustworthy={w: list(t.members) for w, t in m.trust.items()},
        valuation=valuation,
    )


def dump_model(m: TrustModel, indent: int | None = None) -> str:
    """Canonical JSON for a model; `load_model(dump_model(m)) == m`."""
    return to_model_file(m).model_dump_json(indent=indent)


def model_as_dict(m: TrustModel) -> dict:
    return to_model_file(m).model_dump(mode="json")


def summarize(m: TrustModel) -> ModelSummary:
    return ModelSummary(
        worlds=len(m.worlds),
        variables=len(m.variables),
        blocks={x: len(blocks) for x, blocks in m.partitions.items()},
        propositions=sorted(m.valuation),
    )
