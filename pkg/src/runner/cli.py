"""
Command-line interface.

    python -m src.runner run --config configs/grid_sinusoidal.json --out results/sinusoidal
    python -m src.runner plot --summary results/a/summary.csv --summary results/b/summary.csv --out r_t.svg
    python -m src.runner bound-check --config configs/exact_bayes_desk.json --out bounds.csv
    python -m src.runner ingest --csv lifetime.csv --strict --out configs/lifetime.json
    python -m src.runner standin --out data/lifetime_standin.csv

Exit codes: 0 success, 2 configuration or input error, 3 numerical failure.
"""

import logging
from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from ..benchlab import generate_lifetime_standin, write_lifetime_csv
from ..gp import ConditioningError
from ..ingestion import RECOMMENDED_THETA, LifetimeFormatError, ingest_lifetime_csv
from ..level_set import BoundInputError
from ..models.acquisition import RandStraddleRule
from ..models.experiment import ExperimentConfig, TabulatedBlackBoxSpec, TabulatedDomainSpec
from ..models.kernel import KernelSpec
from .aggregate import SUMMARY_METRICS, aggregate
from .bounds import bound_check
from .experiment import ConfigError, NumericalError, first_numerical_failure, run_experiment
from .export import ExportError, emit_csv, emit_seeds_csv, load_summary_csv
from .plots import UnknownMetricError, emit_plot, summary_label
from .settings import get_settings

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

app = typer.Typer(help="Active level-set estimation experiments", add_completion=False)
console = Console()
logger = logging.getLogger(__name__)

CONFIG_ERRORS = (
    ConfigError,
    ValidationError,
    LifetimeFormatError,
    FileNotFoundError,
    ExportError,
    UnknownMetricError,
    BoundInputError,
)
NUMERICAL_ERRORS = (ConditioningError, NumericalError)


def _setup_logging() -> None:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def _fail(message: str, code: int) -> None:
    """Print an error and exit with ``code``."""
    console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(code)


def _load_config(path: Path) -> ExperimentConfig:
    """
    Load and validate an experiment configuration.

    Args:
        path: JSON configuration file

    Returns:
        Validated ExperimentConfig
    """
    if not path.exists():
        raise FileNotFoundError(f"Config not found: {path}")
    return ExperimentConfig.from_json_file(path)


def _print_terminal(records) -> None:
    table = Table(title="Final iteration per seed")
    for column in ("seed", "rows", "r_t", "fscore", "max_loss", "t_check", "status"):
        table.add_column(column, justify="right")
    for r in records:
        last = r.rows[-1] if r.rows else None
        table.add_row(
            str(r.seed),
            str(len(r.rows)),
            f"{last.r_t:.4g}" if last else "-",
            f"{last.fscore:.4f}" if last else "-",
            f"{last.max_loss:.4g}" if last else "-",
            str(r.t_check) if r.t_check is not None else "-",
            "failed" if r.failed else "ok",
        )
    console.print(table)


@app.command()
def run(
    config: Path = typer.Option(..., "--config", help="Experiment config (JSON)"),
    seeds: Optional[int] = typer.Option(None, "--seeds", min=1, help="Override n_seeds"),
    out: Path = typer.Option(Path("results"), "--out", help="Output directory"),
    timing: bool = typer.Option(False, "--timing", help="Record wall-clock time per iteration"),
    quiet: bool = typer.Option(False, "--quiet", help="Hide progress bars"),
):
    """Run an experiment and write runs.csv, seeds.csv and summary.csv."""
    _setup_logging()
    try:
        cfg = _load_config(config)
        if seeds is not None:
            cfg = cfg.model_copy(update={"n_seeds": seeds})
        if timing:
            cfg = cfg.model_copy(update={"eval": cfg.eval.model_copy(update={"record_wall_time": True})})

        records = run_experiment(cfg, show_progress=False if quiet else None)
        out.mkdir(parents=True, exist_ok=True)
        cfg.to_json_file(out / "config.json")
        emit_csv(records, out / "runs.csv", dim=records[0].dim if records else None)
        emit_seeds_csv(records, out / "seeds.csv")
        emit_csv(aggregate(records), out / "summary.csv")
    except CONFIG_ERRORS as e:
        _fail(str(e), EXIT_CONFIG)
    except NUMERICAL_ERRORS as e:
        _fail(str(e), EXIT_NUMERICAL)
    except ValueError as e:
        _fail(str(e), EXIT_CONFIG)

    _print_terminal(records)
    console.print(f"[green]Wrote results to {out}[/green]")
    failure = first_numerical_failure(records)
    if failure:
        _fail(failure, EXIT_NUMERICAL)
    failure = next((r.error for r in records if r.failed), None)
    if failure:
        _fail(failure, EXIT_CONFIG)


@app.command()
def plot(
    summary: List[Path] = typer.Option(..., "--summary", help="Summary CSV; repeat to compare"),
    metric: str = typer.Option("r_t", "--metric", help=f"One of {', '.join(SUMMARY_METRICS)}"),
    out: Path = typer.Option(..., "--out", help="SVG file to write"),
    title: Optional[str] = typer.Option(None, "--title"),
):
    """Plot a metric from one or more summary files."""
    _setup_logging()
    try:
        summaries = {}
        for path in summary:
            if not path.exists():
                raise FileNotFoundError(f"Summary not found: {path}")
            summaries[summary_label(path)] = load_summary_csv(path)
        emit_plot(summaries, out, metric=metric, title=title)
    except CONFIG_ERRORS as e:
        _fail(str(e), EXIT_CONFIG)
    except ValueError as e:
        _fail(str(e), EXIT_CONFIG)
    console.print(f"[green]Wrote {out}[/green]")


@app.command("bound-check")
def bound_check_command(
    config: Path = typer.Option(..., "--config", help="Experiment config (JSON)"),
    out: Path = typer.Option(..., "--out", help="CSV file for the per-iteration comparison"),
    seeds: Optional[int] = typer.Option(None, "--seeds", min=1, help="Override n_seeds"),
):
    """Run an experiment and compare its mean losses with the theoretical bounds."""
    _setup_logging()
    try:
        cfg = _load_config(config)
        if seeds is not None:
            cfg = cfg.model_copy(update={"n_seeds": seeds})
        records = run_experiment(cfg)
        result = bound_check(records, cfg)
        out.parent.mkdir(parents=True, exist_ok=True)
        result.table.to_csv(out, index=False, lineterminator="\n")
    except CONFIG_ERRORS as e:
        _fail(str(e), EXIT_CONFIG)
    except NUMERICAL_ERRORS as e:
        _fail(str(e), EXIT_NUMERICAL)
    except ValueError as e:
        _fail(str(e), EXIT_CONFIG)

    if result.misspecified:
        console.print("[yellow]Model kernel differs from the target; no verdict (misspecified).[/yellow]")
    elif result.passed:
        console.print(f"[green]PASS[/green] at all {cfg.iterations} iterations")
    else:
        failed = result.table.loc[result.table["verdict"] == "FAIL", "t"].tolist()
        if failed:
            console.print(f"[red]FAIL[/red] at t = {failed[:20]}")
    if result.terminal_loss is not None:
        verdict = {True: "[green]PASS[/green]", False: "[red]FAIL[/red]", None: "n/a"}[result.terminal_passed]
        console.print(
            f"Returned classification (t_check): mean max-value loss {result.terminal_loss:.4g} "
            f"vs bound {result.terminal_bound:.4g} {verdict}"
        )


@app.command()
def ingest(
    csv_path: Path = typer.Option(..., "--csv", help="Lifetime CSV (x1,x2,lifetime)"),
    strict: bool = typer.Option(False, "--strict", help="Require the full 89 x 74 lattice"),
    out: Path = typer.Option(..., "--out", help="Experiment config to write"),
    iterations: int = typer.Option(200, "--iterations", min=1),
):
    """Validate a lifetime map and write a ready-to-run experiment config for it."""
    _setup_logging()
    try:
        data = ingest_lifetime_csv(csv_path, strict=strict)
        cfg = ExperimentConfig(
            name=csv_path.stem,
            blackbox=TabulatedBlackBoxSpec(path=str(csv_path), strict=strict),
            domain=TabulatedDomainSpec(),
            kernel=KernelSpec(variant="matern32", amplitude=4.0, lengthscale=25.0),
            noise_variance=1e-6,
            theta=RECOMMENDED_THETA,
            acquisition=RandStraddleRule(),
            iterations=iterations,
            reobserve=False,
        )
        out.parent.mkdir(parents=True, exist_ok=True)
        cfg.to_json_file(out)
    except CONFIG_ERRORS as e:
        _fail(str(e), EXIT_CONFIG)
    except ValueError as e:
        _fail(str(e), EXIT_CONFIG)
    console.print(f"[green]{len(data):,} points ingested; config written to {out}[/green]")


@app.command()
def standin(
    out: Path = typer.Option(..., "--out", help="CSV file to write"),
    seed: int = typer.Option(0, "--seed", min=0),
):
    """Write a synthetic lifetime map in the ingestion format."""
    _setup_logging()
    points, lifetimes = generate_lifetime_standin(seed)
    write_lifetime_csv(out, points, lifetimes)
    console.print(f"[green]Wrote {points.shape[0]:,} points to {out}[/green]")


def main():
    app()


if __name__ == "__main__":
    main()
