"""The soundness, equivalence and necessitation suites.

Each trial is a module-level function of (params, check, seed) so it can be replayed from
its seed alone and shipped to worker processes. Trial seeds come from `trial_seed`, which
makes a parallel run produce exactly the sequential report.
"""

import logging
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np

from src.checker.dp import check_dp, falsifying_points
from src.checker.oracle import evaluate
from src.config import settings
from src.errors import SemanticError
from src.harness.generators import (
    AXIOM_SCHEMAS,
    BROKEN_TRUTH,
    POSITIVE_INTROSPECTION,
    GenParams,
    gen_dataset,
    gen_formula,
    gen_instance,
    gen_model,
    gen_point,
    trial_seed,
)
from src.harness.reports import Failure, SuiteReport
from src.logic.formulas import Announce, Belief, Formula
from src.models.trust import TrustModel

logger = logging.getLogger(__name__)

EQUIVALENCE = "dp-vs-oracle"
NECESSITATION_MAX_VARIABLES = 4
# failures per suite run that get shrunk; the rest are reported as found
SHRINK_LIMIT = 10

SOUNDNESS_CHECKS = (*(s.value for s in AXIOM_SCHEMAS), POSITIVE_INTROSPECTION)

# (failure or None, skipped)
TrialResult = tuple[Failure | None, bool]


def _first_falsified(check: str, seed: int, m: TrustModel, f: Formula) -> Failure | None:
    failing = falsifying_points(m, f)
    if not failing:
        return None
    return Failure.build(check, seed, m, f, failing[0], expected=True, got=False)


def soundness_trial(params: GenParams, check: str, seed: int) -> TrialResult:
    rng = np.random.default_rng(seed)
    m = gen_model(params, rng)
    f = gen_instance(check, params, m.variables, rng)
    return _first_falsified(check, seed, m, f), False


def equivalence_trial(params: GenParams, check: str, seed: int) -> TrialResult:
    rng = np.random.default_rng(seed)
    m = gen_model(params, rng)
    f = gen_formula(params, m.variables, rng)
    pt = gen_point(m, rng)
    expected = evaluate(m, pt, f)
    got = check_dp(m, pt, f)
    if expected == got:
        return None, False
    return Failure.build(check, seed, m, f, pt, expected=expected, got=got), False


def necessitation_trial(params: GenParams, check: str, seed: int) -> TrialResult:
    """If f is valid on the sampled model, so must be B{T}{X} f and [X] f."""
    rng = np.random.default_rng(seed)
    m = gen_model(params, rng)
    # half of the premises are axiom instances so that a useful share of trials applies
    if rng.random() < 0.5:
        f = gen_formula(params, m.variables, rng)
    else:
        f = gen_instance(AXIOM_SCHEMAS[int(rng.integers(0, len(AXIOM_SCHEMAS)))], params, m.variables, rng)
    if falsifying_points(m, f):
        return None, True

    pool = list(m.variables.members)
    trust = gen_dataset(rng, pool, params.max_dataset)
    data = gen_dataset(rng, pool, params.max_dataset)
    for rule, conclusion in (("necB", Belief(trust, data, f)), ("necA", Announce(data, f))):
        failure = _first_falsified(rule, seed, m, conclusion)
        if failure is not None:
            return failure, False
    return None, False


Trial = Callable[[GenParams, str, int], TrialResult]


def shrink(trial: Trial, params: GenParams, check: str, seed: int) -> Failure | None:
    """Re-run a failing trial with fewer worlds and shallower formulas, same seed.

    Returns the first failure found scanning from the smallest bounds upward.
    """
    for worlds in range(1, params.max_worlds + 1):
        for depth in range(params.max_depth + 1):
            if (worlds, depth) == (params.max_worlds, params.max_depth):
                return None
            failure, _ = trial(replace(params, max_worlds=worlds, max_depth=depth), check, seed)
            if failure is not None:
                logger.info(f"Shrunk {check} seed {seed} to {worlds} worlds, depth {depth}")
                return failure
    return None


def _run(
    suite: str,
    trial: Trial,
    params: GenParams,
    jobs: list[tuple[str, int]],
    workers: int,
    shrink_failures: bool,
) -> SuiteReport:
    started = time.perf_counter()
    logger.info(f"Running {suite}: {len(jobs)} trials, seed {params.seed}, {workers} worker(s)")
    checks = [check for check, _ in jobs]
    seeds = [seed for _, seed in jobs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunksize = max(1, len(jobs) // (workers * 4))
            results = list(pool.map(trial, [params] * len(jobs), checks, seeds, chunksize=chunksize))
    else:
        results = [trial(params, check, seed) for check, seed in jobs]

    report = SuiteReport(suite=suite, trials=len(jobs))
    for (check, seed), (failure, skipped) in zip(jobs, results, strict=True):
        logger.debug(f"{suite} trial {check} seed {seed}: {'skipped' if skipped else 'ok' if failure is None else 'failed'}")
        if skipped:
            report.skipped += 1
        if failure is None:
            continue
        if shrink_failures and len(report.failures) < SHRINK_LIMIT:
            failure.shrunk = shrink(trial, params, check, seed)
        logger.info(f"{suite} failure: {check} seed {seed}: {failure.formula}")
        report.failures.append(failure)

    report.wall_time = time.perf_counter() - started
    logger.info(report.summary())
    return report


def _shrinking(shrink_failures: bool | None) -> bool:
    return settings.shrink_enabled if shrink_failures is None else shrink_failures


def soundness_suite(
    params: GenParams,
    trials: int,
    *,
    workers: int = 1,
    inject_broken: bool = False,
    shrink_failures: bool | None = None,
) -> SuiteReport:
    """Every axiom schema and positive introspection, `trials` instances each, checked at every (w, U)."""
    checks = [*SOUNDNESS_CHECKS, BROKEN_TRUTH] if inject_broken else list(SOUNDNESS_CHECKS)
    jobs = [(check, trial_seed(params.seed, 0, k, i)) for k, check in enumerate(checks) for i in range(trials)]
    return _run("soundness", soundness_trial, params, jobs, workers, _shrinking(shrink_failures))


def equivalence_suite(
    params: GenParams, trials: int, *, workers: int = 1, shrink_failures: bool | None = None
) -> SuiteReport:
    jobs = [(EQUIVALENCE, trial_seed(params.seed, 1, i)) for i in range(trials)]
    return _run("equivalence", equivalence_trial, params, jobs, workers, _shrinking(shrink_failures))


def necessitation_suite(
    params: GenParams, trials: int, *, workers: int = 1, shrink_failures: bool | None = None
) -> SuiteReport:
    if params.max_variables > NECESSITATION_MAX_VARIABLES:
        raise SemanticError(
            f"necessitation suite enumerates every announced set and needs max variables <= "
            f"{NECESSITATION_MAX_VARIABLES}, got {params.max_variables}"
        )
    jobs = [("necessitation", trial_seed(params.seed, 2, i)) for i in range(trials)]
    return _run("necessitation", necessitation_trial, params, jobs, workers, _shrinking(shrink_failures))


SUITES = {
    "soundness": soundness_suite,
    "equivalence": equivalence_suite,
    "necessitation": necessitation_suite,
}

TRIALS: dict[str, Trial] = {
    "soundness": soundness_trial,
    "equivalence": equivalence_trial,
    "necessitation": necessitation_trial,
}


def replay(suite: str, params: GenParams, check: str, seed: int, shrink_failures: bool | None = None) -> SuiteReport:
    """Re-run one trial from the seed recorded in a failure."""
    return _run(suite, TRIALS[suite], params, [(check, seed)], 1, _shrinking(shrink_failures))
