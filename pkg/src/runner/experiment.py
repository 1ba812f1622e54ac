"""
Experiment loop.

For every seed and iteration t: classify the evaluation points with the
current posterior, record losses, pick the next point with the acquisition
rule, observe it and update the posterior. Max-value variants also store
each iteration's classification on a check set and return the iteration
chosen by estimate_t_check.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from tqdm import tqdm

from ..acquisition import IntersectionTracker, select_next
from ..benchlab import (
    AnalyticBlackBox,
    BlackBox,
    TabulatedBlackBox,
    gen_gp_sample_case1,
    generate_lifetime_standin,
    make_grid,
    uniform_box,
)
from ..discretize import GridSpec, discretization, snap_to_grid
from ..gp import ConditioningError, Dataset, Posterior, fit_posterior, posterior_mean_var, update_posterior
from ..ingestion import LIFETIME_OFFSET, ingest_lifetime_csv
from ..level_set import Classification, classify_mean, estimate_t_check, loss_report
from ..models.experiment import ExperimentConfig
from ..models.records import RunRecord, RunRow
from ..rng import RngState
from .settings import LabSettings, get_settings

logger = logging.getLogger(__name__)

# |X| plugged into |X|-dependent schedules on continuous domains
INFINITE_CARDINALITY = 1e15


class ConfigError(ValueError):
    """Raised when a valid-looking config cannot be realised (missing data, bad constants)."""
    pass


class NumericalError(ArithmeticError):
    """Raised when an observation or posterior quantity is not finite."""
    pass


@dataclass
class Problem:
    """Everything about an experiment that does not depend on the seed."""

    config: ExperimentConfig
    dim: int
    points: Optional[np.ndarray] = None
    blackbox: Optional[BlackBox] = None
    bounds: Optional[np.ndarray] = None
    grid_spec: Optional[GridSpec] = None
    pool_size: int = 4096
    test_set_size: int = 100_000
    t_check_samples: int = 200
    t_check_points: int = 1024
    mile_chunk_size: int = 512
    incremental: bool = False

    @property
    def finite(self) -> bool:
        return self.points is not None


def load_tabulated(config: ExperimentConfig) -> TabulatedBlackBox:
    spec = config.blackbox
    if spec.path is not None:
        return ingest_lifetime_csv(spec.path, strict=spec.strict).to_blackbox()
    points, lifetimes = generate_lifetime_standin(spec.standin_seed)
    return TabulatedBlackBox(points, -lifetimes + LIFETIME_OFFSET)


def prepare_problem(config: ExperimentConfig, settings: Optional[LabSettings] = None) -> Problem:
    """
    Resolve the domain, the shared black box and the runtime knobs.

    Args:
        config: Validated experiment configuration
        settings: Runtime settings; read from the environment when omitted

    Returns:
        Problem shared read-only by every seed

    Raises:
        ConfigError: If r is smaller than the longest side of the box
    """
    settings = settings or get_settings()
    ev = config.eval
    problem = Problem(
        config=config,
        dim=config.dim,
        pool_size=ev.candidate_pool_size or settings.candidate_pool_size,
        test_set_size=ev.test_set_size or settings.test_set_size,
        t_check_samples=ev.t_check_samples or settings.t_check_samples,
        t_check_points=ev.t_check_points or settings.t_check_points,
        mile_chunk_size=settings.mile_chunk_size,
        incremental=settings.incremental_updates,
    )

    domain = config.domain
    if domain.kind == "grid":
        (l1, u1), (l2, u2) = domain.bounds
        n1, n2 = domain.points_per_axis
        problem.points = make_grid(l1, u1, l2, u2, n1, n2)
    elif domain.kind == "box":
        problem.bounds = np.array(domain.bounds, dtype=float)

    if config.blackbox.kind == "analytic":
        problem.blackbox = AnalyticBlackBox(config.blackbox.name)
    elif config.blackbox.kind == "tabulated":
        table = load_tabulated(config)
        problem.blackbox = table
        problem.points = np.array(table.points)
        problem.dim = table.dim

    acq = config.acquisition
    if acq.rule == "rand_straddle_max_infinite":
        sides = problem.bounds[:, 1] - problem.bounds[:, 0]
        r = acq.r if acq.r is not None else float(sides.max())
        if r < sides.max():
            raise ConfigError(f"r = {r:g} is smaller than the longest box side {sides.max():g}")
        problem.grid_spec = GridSpec(a=acq.a, b=acq.b, r=r, d=problem.dim)
    return problem


def _classify(problem: Problem, post: Posterior, xs: np.ndarray, t: int):
    """Membership flags for ``xs``; snapped to the t-th lattice for the infinite max variant."""
    config = problem.config
    if config.algorithm_variant == "max_infinite":
        state = discretization(problem.grid_spec, t)
        lower = problem.bounds[:, 0]
        xs = snap_to_grid(state, xs - lower) + lower
    mean, _ = posterior_mean_var(post, xs)
    if not np.all(np.isfinite(mean)):
        raise NumericalError(f"non-finite posterior mean at iteration {t}")
    return classify_mean(mean, config.theta).high


def run_seed(problem: Problem, seed_index: int) -> RunRecord:
    """
    One simulation. A failure stops this seed only: the record keeps the rows
    produced so far and the error message.

    Args:
        problem: Prepared problem
        seed_index: Index s of the seed; streams derive from (master_seed, s)

    Returns:
        RunRecord with one row per iteration and the terminal report
    """
    config = problem.config
    record = RunRecord(seed=seed_index, acquisition=config.acquisition.label, dim=problem.dim)
    try:
        _run_seed(problem, seed_index, record)
    except Exception as e:
        record.error = f"{type(e).__name__}: {e}"
        logger.error(f"Seed {seed_index} aborted at row {len(record.rows) + 1}: {record.error}")
    return record


def _run_seed(problem: Problem, seed_index: int, record: RunRecord) -> None:
    config = problem.config
    root = RngState(config.master_seed).for_seed(seed_index)
    rng_initial = root.stream("initial")
    rng_noise = root.stream("noise")
    rng_acq = root.stream("acquisition")
    rng_candidates = root.stream("candidates")
    rng_t_check = root.stream("t_check")
    noise = config.noise_variance
    theta = config.theta
    max_variant = config.algorithm_variant != "avg_loss"

    blackbox = problem.blackbox
    if config.blackbox.kind == "gp_sample":
        kernel = config.blackbox.kernel or config.kernel
        blackbox = gen_gp_sample_case1(root.stream("blackbox"), problem.points, kernel)

    if problem.finite:
        eval_points = problem.points
        check_points = problem.points
        eval_mode = "finite_exact"
    else:
        eval_points = uniform_box(problem.bounds, problem.test_set_size, root.stream("test_set"))
        check_points = (
            uniform_box(problem.bounds, problem.t_check_points, rng_t_check)
            if max_variant else None
        )
        eval_mode = "infinite_mc"
    truth = blackbox.evaluate(eval_points)
    record.eval_mode = eval_mode
    record.n_test = eval_points.shape[0] if eval_mode == "infinite_mc" else None
    logger.debug(
        f"Seed {seed_index}: {eval_points.shape[0]} evaluation points ({eval_mode}), "
        f"|H*|={int(np.sum(truth >= theta))}"
    )

    n = problem.points.shape[0] if problem.finite else 0
    mask = np.zeros(n, dtype=bool) if (problem.finite and not config.reobserve) else None

    dataset = Dataset.empty(problem.dim, noise)
    for _ in range(config.initial_points):
        if problem.finite:
            allowed = np.flatnonzero(~mask) if mask is not None else np.arange(n)
            index = int(allowed[int(rng_initial.integers(allowed.shape[0]))])
            x0 = problem.points[index]
            if mask is not None:
                mask[index] = True
        else:
            x0 = uniform_box(problem.bounds, 1, rng_initial)[0]
        dataset = dataset.append(x0, _observe(blackbox, x0, noise, rng_noise))
    post = fit_posterior(dataset, config.kernel)

    persistent = problem.finite
    tracker = IntersectionTracker(n) if persistent else None
    domain_size = n if persistent else INFINITE_CARDINALITY
    stored: List[np.ndarray] = []
    previous_point: Optional[np.ndarray] = None
    cumulative = 0.0

    for t in range(1, config.iterations + 1):
        started = time.perf_counter()
        evaluate = (t - 1) % config.eval.cadence == 0 or t == config.iterations

        report = None
        if evaluate:
            high = _classify(problem, post, eval_points, t)
            report = loss_report(Classification(theta, high), truth, theta, cumulative, eval_mode)
            cumulative = report.R_t
        if max_variant:
            stored.append(high if (problem.finite and evaluate) else _classify(problem, post, check_points, t))

        if problem.finite:
            candidates = problem.points
        elif config.acquisition.rule == "random":
            candidates = uniform_box(problem.bounds, 1, rng_candidates)
        else:
            candidates = uniform_box(problem.bounds, problem.pool_size, rng_candidates)
            if previous_point is not None:
                candidates = np.vstack([candidates, previous_point])

        selection = select_next(
            config.acquisition,
            post,
            candidates,
            theta,
            rng_acq,
            t=t,
            tracker=tracker,
            mask=mask,
            domain_size=domain_size,
            grid_spec=problem.grid_spec,
            persistent=persistent,
            mile_chunk_size=problem.mile_chunk_size,
        )
        y = _observe(blackbox, selection.point, noise, rng_noise)
        if mask is not None:
            mask[selection.index] = True
        previous_point = selection.point

        if problem.incremental:
            post = update_posterior(post, selection.point, y)
        else:
            post = fit_posterior(post.dataset.append(selection.point, y), config.kernel)

        wall_ms = (time.perf_counter() - started) * 1000.0 if config.eval.record_wall_time else 0.0
        record.rows.append(RunRow.from_report(
            seed=seed_index,
            t=t,
            x=[float(v) for v in selection.point],
            y=y,
            beta=selection.beta,
            report=report,
            R_t=cumulative,
            wall_ms=wall_ms,
        ))

    if max_variant:
        t_check = estimate_t_check(
            post, np.vstack(stored), check_points, theta, problem.t_check_samples, rng_t_check
        )
        record.t_check = t_check
        check_truth = truth if problem.finite else blackbox.evaluate(check_points)
        record.terminal = loss_report(
            Classification(theta, stored[t_check - 1]), check_truth, theta, cumulative, eval_mode
        )
    else:
        mean, _ = posterior_mean_var(post, eval_points)
        record.terminal = loss_report(classify_mean(mean, theta), truth, theta, cumulative, eval_mode)


def _observe(blackbox: BlackBox, x, noise: float, rng: RngState) -> float:
    y = blackbox.observe(x, noise, rng)
    if not math.isfinite(y):
        raise NumericalError(f"observation at {np.asarray(x).tolist()} is not finite")
    return y


def run_experiment(
    config: ExperimentConfig,
    settings: Optional[LabSettings] = None,
    show_progress: Optional[bool] = None,
) -> List[RunRecord]:
    """
    Run every seed of ``config`` and return the records ordered by seed.

    Seeds are independent; with ``max_workers > 1`` they run in a thread pool.

    Args:
        config: Validated experiment configuration
        settings: Runtime settings; read from the environment when omitted
        show_progress: Override for the tqdm progress bar

    Returns:
        One RunRecord per seed, failed seeds included
    """
    settings = settings or get_settings()
    if show_progress is None:
        show_progress = settings.show_progress
    problem = prepare_problem(config, settings)
    seeds = range(config.n_seeds)
    logger.info(
        f"Running '{config.name or config.acquisition.label}': {config.n_seeds} seed(s) x "
        f"{config.iterations} iteration(s), rule={config.acquisition.rule}"
    )

    if settings.max_workers > 1 and config.n_seeds > 1:
        with ThreadPoolExecutor(max_workers=settings.max_workers) as pool:
            futures = [pool.submit(run_seed, problem, i) for i in seeds]
            iterator = tqdm(futures, desc="Seeds") if show_progress else futures
            records = [f.result() for f in iterator]
    else:
        iterator = tqdm(seeds, desc="Seeds") if show_progress else seeds
        records = [run_seed(problem, i) for i in iterator]

    failed = [r.seed for r in records if r.failed]
    if failed:
        logger.warning(f"{len(failed)} seed(s) failed: {failed}")
    return records


def first_numerical_failure(records: List[RunRecord]) -> Optional[str]:
    """Error message of the first seed that failed for numerical reasons."""
    names = (ConditioningError.__name__, NumericalError.__name__, "LinAlgError", "FloatingPointError")
    for r in records:
        if r.failed and r.error.split(":", 1)[0] in names:
            return r.error
    return None
