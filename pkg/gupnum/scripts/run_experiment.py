"""
Run one gupnum experiment and write its results table and manifest.

Usage:
    gupnum gram --family sym-eigen --measure standard --eps 0.37 --n=-20..20
    gupnum gup --state maxloc --xi 0
    gupnum vacuum --mass 0 --modified
    python -m gupnum.scripts.run_experiment parseval --eps 1 --truncations 10,100,1000

Exit codes: 0 success, 2 invalid configuration (JSON error object on
stderr), 3 numerical failure (failed rows are flagged in the table).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from gupnum import __version__
from gupnum.config import settings
from gupnum.errors import ConfigError, GupError
from gupnum.experiments import EXPERIMENTS
from gupnum.models.experiment import (
    ExperimentConfig,
    ExperimentName,
    ResultRow,
    ResultTable,
    RowStatus,
)
from gupnum.output import write_results

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

console = Console(stderr=True)
logger = logging.getLogger("gupnum")


def parse_index_range(text: str) -> tuple[int, int]:
    """'a..b' -> (a, b)."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in a..b, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="gupnum", description="Run a GUP minimal-length verification experiment")
    parser.add_argument("experiment", choices=[e.value for e in ExperimentName])
    parser.add_argument("--version", action="version", version=f"gupnum {__version__}")
    parser.add_argument("--config", type=Path, help="JSON config or manifest to start from; flags override it")
    parser.add_argument("--beta", type=float)
    parser.add_argument("--hbar", type=float)
    parser.add_argument("--rel-tol", dest="rel_tol", type=float)
    parser.add_argument("--abs-tol", dest="abs_tol", type=float)
    parser.add_argument("--max-subdivisions", dest="max_subdivisions", type=int)
    parser.add_argument("--output-dir", dest="output_dir", type=Path, help="Defaults to $GUPNUM_OUTPUT_DIR")
    parser.add_argument("--format", dest="output_format", choices=["csv", "json"])
    parser.add_argument("--verbose", "-v", action="store_true", help="Log progress at INFO level")

    group = parser.add_argument_group("experiment parameters")
    group.add_argument("--family", choices=["sym-eigen", "maxloc", "kmm-eigen"])
    group.add_argument("--measure", choices=["standard", "kmm"])
    group.add_argument("--eps", dest="epsilon", type=float, help="Lattice offset in [-1, 1]")
    group.add_argument("--n", dest="n_range", type=parse_index_range, help="Index range a..b; write --n=-20..20 for negative a")
    group.add_argument("--truncations", type=_int_list, help="Comma-separated N values")
    group.add_argument("--state", choices=["sym-eigen", "maxloc", "gaussian"])
    group.add_argument("--xi", type=float)
    group.add_argument("--x-min", dest="x_min", type=float)
    group.add_argument("--x-max", dest="x_max", type=float)
    group.add_argument("--x-count", dest="x_count", type=int)
    group.add_argument("--mode", choices=["exact", "linearized"])
    group.add_argument("--sigmas", type=_float_list, help="Comma-separated Gaussian widths")
    group.add_argument("--mass", type=float)
    group.add_argument("--modified", action="store_true", default=None, help="Use the GUP-modified measure")
    group.add_argument("--cutoffs", type=_float_list, help="Comma-separated momentum cutoffs")
    group.add_argument("--seed", type=int)
    return parser


def _load_base(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}")
    # A manifest carries the resolved config under "config".
    return dict(data.get("config", data))


def resolve_config(argv: list[str] | None = None) -> tuple[ExperimentConfig, bool]:
    """Parse flags on top of an optional config file; returns (config, verbose)."""
    args = build_parser().parse_args(argv)
    values = _load_base(args.config)
    overrides = {
        k: v
        for k, v in vars(args).items()
        if v is not None and k not in ("config", "verbose", "n_range")
    }
    if args.n_range is not None:
        overrides["n_min"], overrides["n_max"] = args.n_range
    values.update(overrides)
    return ExperimentConfig.model_validate(values), args.verbose


def _config_error(exc: Exception) -> int:
    if isinstance(exc, ValidationError):
        detail = exc.errors(include_url=False)
    else:
        detail = str(exc)
    print(json.dumps({"error": "config", "detail": detail}, default=str), file=sys.stderr)
    return EXIT_CONFIG


def run_experiment(config: ExperimentConfig) -> int:
    """Run the configured experiment, write its files and return the exit status."""
    runner = EXPERIMENTS[config.experiment]
    console.print(f"Running [bold]{config.experiment.value}[/bold] (beta={config.beta:g}, hbar={config.hbar:g})")
    try:
        table = runner(config)
    except ConfigError:
        raise
    except GupError as exc:
        logger.error("%s failed: %s", config.experiment.value, exc)
        table = ResultTable(
            experiment=config.experiment,
            rows=[ResultRow(status=RowStatus.failed, detail=f"{type(exc).__name__}: {exc}")],
        )

    results, manifest = write_results(table, config)
    for note in table.notes:
        console.print(f"  {note}", markup=False, highlight=False)
    if table.failed_rows:
        console.print(f"[red]✗[/red] {table.failed_rows} of {len(table.rows)} rows failed; see {results}")
        return EXIT_NUMERICAL
    console.print(f"[green]✓[/green] {len(table.rows)} rows written to [cyan]{results}[/cyan] ({manifest.name})")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        config, verbose = resolve_config(argv)
    except (ValidationError, ConfigError) as exc:
        return _config_error(exc)

    logging.basicConfig(
        level=logging.INFO if verbose else settings.log_level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
    )
    try:
        return run_experiment(config)
    except (ValidationError, ConfigError) as exc:
        return _config_error(exc)


if __name__ == "__main__":
    sys.exit(main())
