"""Model checking, proof checking and fuzzing over trustworthiness models.

Exit codes:

\b
  0  success
  2  formula parse error
  3  model or proof file invalid, or proof rejected
  4  semantic error (unknown world or variable, empty model, cap exceeded)
  5  suite failure, or engines disagree
"""

import logging
import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path

import click

from src.checker import check_dp, check_exhaustive, describe_witnesses, evaluate, trace_dp
from src.cli.serializers import CheckOut, CounterexampleOut, WitnessOut
from src.config import settings
from src.errors import ModelValidationError, ProofFormatError, TrustLogicError
from src.harness import SUITES, FuzzReport, GenParams, SuiteReport, replay
from src.harness.generators import BROKEN_TRUTH
from src.harness.suites import EQUIVALENCE, SOUNDNESS_CHECKS
from src.logic import parse, parse_dataset
from src.models import EvalPoint, TrustModel, load_model, summarize
from src.proofs import check_derivation, check_proof, load_assumptions, load_proof

logger = logging.getLogger(__name__)

ENGINES = ("oracle", "dp", "both", "table")
SUITE_CHOICES = (*SUITES, "all")

EXIT_SUITE_FAILURE = 5
EXIT_REJECTED = 3

_FilePath = click.Path(dir_okay=False, path_type=Path)


def exits_on_error(func: Callable) -> Callable:
    """Turn library errors into their exit code and a one-line message on stderr."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except TrustLogicError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def _read(path: Path, error: type[ModelValidationError] | type[ProofFormatError]) -> bytes:
    try:
        return path.read_bytes()
    except OSError as e:
        raise error(str(path), f"cannot read file: {e.strerror}") from None


def _load_model(path: Path) -> TrustModel:
    return load_model(_read(path, ModelValidationError))


def _point(world: str, announced: str) -> EvalPoint:
    return EvalPoint(world, parse_dataset(announced))


def _verdict(value: bool) -> str:
    return "true" if value else "false"


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" if n == 1 else f"{n} {word}s"


def point_options(func: Callable) -> Callable:
    func = click.option("--formula", "-f", "formula_text", required=True, help="Formula text")(func)
    func = click.option("--announced", "-u", default="", help="Comma list of announced variables")(func)
    func = click.option("--world", "-w", required=True, help="Evaluation world")(func)
    return click.argument("model_path", type=_FilePath)(func)


@click.group(help=__doc__)
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr")
def cli(verbose: bool) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.INFO)


@cli.command(help="Decide whether the formula holds at (world, announced).")
@point_options
@click.option("--engine", type=click.Choice(ENGINES), default=None, help="Defaults to TRUSTLOGIC_DEFAULT_ENGINE")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON object")
@exits_on_error
def check(model_path: Path, world: str, announced: str, formula_text: str, engine: str | None, as_json: bool) -> None:
    m = _load_model(model_path)
    f = parse(formula_text)
    pt = _point(world, announced)
    engine = engine or settings.default_engine

    verdicts: dict[str, bool] = {}
    if engine in ("oracle", "both"):
        verdicts["oracle"] = evaluate(m, pt, f)
    if engine in ("dp", "both"):
        verdicts["dp"] = check_dp(m, pt, f)
    if engine == "table":
        verdicts["table"] = check_exhaustive(m, pt, f)

    agreed = len(set(verdicts.values())) == 1
    result = next(iter(verdicts.values())) if agreed else None
    if as_json:
        out = CheckOut(result=result, engine=engine, engines=verdicts if len(verdicts) > 1 else None)
        click.echo(out.model_dump_json())
    elif result is not None:
        click.echo(_verdict(result))

    if not agreed:
        detail = ", ".join(f"{name}={_verdict(v)}" for name, v in verdicts.items())
        click.echo(f"error: engines disagree ({detail})", err=True)
        sys.exit(EXIT_SUITE_FAILURE)


@cli.command(help="Show the H-list, the filled sat table and the verdict.")
@point_options
@exits_on_error
def trace(model_path: Path, world: str, announced: str, formula_text: str) -> None:
    m = _load_model(model_path)
    f = parse(formula_text)
    pairs, table, result = trace_dp(m, _point(world, announced), f)

    lines = [f"hlist ({_plural(len(pairs), 'pair')}):"]
    lines += [f"  {i}. ({env}, {g})" for i, (env, g) in enumerate(pairs, start=1)]
    lines.append(f"table ({_plural(len(pairs) * len(m.worlds), 'row')}):")
    lines += [f"  {w}  ({env}, {g})  {_verdict(value)}" for w, (env, g), value in table.rows(pairs)]
    lines.append(f"result: {_verdict(result)}")
    click.echo("\n".join(lines))


@cli.command(help="List the worlds that defeat a top-level belief.")
@point_options
@click.option("--json", "as_json", is_flag=True, help="Print a JSON object")
@exits_on_error
def counterexample(model_path: Path, world: str, announced: str, formula_text: str, as_json: bool) -> None:
    m = _load_model(model_path)
    f = parse(formula_text)
    witnesses = describe_witnesses(m, _point(world, announced), f)

    if as_json:
        out = CounterexampleOut(
            formula=str(f),
            holds=not witnesses,
            witnesses=[
                WitnessOut(world=w.world, trust=list(w.trust.members), agrees_on=list(w.agrees_on.members))
                for w in witnesses
            ],
        )
        click.echo(out.model_dump_json())
        return

    if not witnesses:
        click.echo("no counterexamples: belief holds")
        return
    for w in witnesses:
        click.echo(f"{w.world}  trust={w.trust}  agrees_on={w.agrees_on}")


@cli.command(help="Check a proof file; with --assumptions, check a derivation from them.")
@click.argument("proof_path", type=_FilePath)
@click.option("--assumptions", "assumptions_path", type=_FilePath, default=None, help="JSON list of formulas")
@exits_on_error
def prove(proof_path: Path, assumptions_path: Path | None) -> None:
    pf = load_proof(_read(proof_path, ProofFormatError))
    if assumptions_path is None:
        result = check_proof(pf)
    else:
        result = check_derivation(load_assumptions(_read(assumptions_path, ProofFormatError)), pf)

    click.echo(str(result))
    if not result.accepted:
        sys.exit(EXIT_REJECTED)


def _print_report(report: SuiteReport) -> None:
    click.echo(report.summary())
    for failure in report.failures:
        point = f"({failure.point.world}, {{{','.join(failure.point.announced)}}})"
        click.echo(f"  FAIL {failure.check} seed={failure.seed} at {point}: {failure.formula}")
        if failure.shrunk is not None:
            shrunk = failure.shrunk
            click.echo(f"    shrunk to {len(shrunk.model['worlds'])} world(s): {shrunk.formula}")


def _replay(
    suite: str, params: GenParams, check_name: str | None, seed: int, shrink_failures: bool | None
) -> SuiteReport:
    if suite == "all":
        raise click.BadParameter("--replay needs a single --suite", param_hint="--suite")
    if suite == "soundness":
        known = (*SOUNDNESS_CHECKS, BROKEN_TRUTH)
        if check_name not in known:
            raise click.BadParameter(f"pick one of {', '.join(known)}", param_hint="--check")
        check = check_name
    else:
        check = EQUIVALENCE if suite == "equivalence" else "necessitation"
    return replay(suite, params, check, seed, shrink_failures)


@cli.command(help="Run the randomized soundness, equivalence and necessitation suites.")
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all")
@click.option("--trials", type=click.IntRange(min=0), default=100, help="Trials (per schema for soundness)")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Defaults to TRUSTLOGIC_FUZZ_SEED")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Defaults to TRUSTLOGIC_FUZZ_WORKERS")
@click.option("--shrink/--no-shrink", "shrink_failures", default=None, help="Shrink failing instances")
@click.option("--replay", "replay_seed", type=click.IntRange(min=0), default=None, help="Re-run one trial seed")
@click.option("--check", "check_name", default=None, help="Soundness check to replay (schema name)")
@click.option("--inject-broken", is_flag=True, hidden=True)
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
@exits_on_error
def fuzz(
    suite: str,
    trials: int,
    seed: int | None,
    workers: int | None,
    shrink_failures: bool | None,
    replay_seed: int | None,
    check_name: str | None,
    inject_broken: bool,
    as_json: bool,
) -> None:
    params = GenParams.from_settings(seed)
    workers = workers or settings.fuzz_workers

    if replay_seed is not None:
        reports = [_replay(suite, params, check_name, replay_seed, shrink_failures)]
    else:
        names = list(SUITES) if suite == "all" else [suite]
        reports = []
        for name in names:
            options: dict = {"workers": workers, "shrink_failures": shrink_failures}
            if name == "soundness":
                options["inject_broken"] = inject_broken
            reports.append(SUITES[name](params, trials, **options))

    full = FuzzReport(seed=params.seed, suites=reports)
    if as_json:
        click.echo(full.model_dump_json(indent=2))
    else:
        for report in reports:
            _print_report(report)

    if not full.passed:
        sys.exit(EXIT_SUITE_FAILURE)


@cli.command(help="Validate a model file and summarize it.")
@click.argument("model_path", type=_FilePath)
@click.option("--json", "as_json", is_flag=True, help="Print the summary as JSON")
@exits_on_error
def validate(model_path: Path, as_json: bool) -> None:
    summary = summarize(_load_model(model_path))
    if as_json:
        click.echo(summary.model_dump_json())
        return

    lines = [f"{_plural(summary.worlds, 'world')}, {_plural(summary.variables, 'variable')}"]
    lines += [f"  {x}: {_plural(n, 'block')}" for x, n in summary.blocks.items()]
    if summary.propositions:
        lines.append(f"  propositions: {', '.join(summary.propositions)}")
    click.echo("\n".join(lines))
