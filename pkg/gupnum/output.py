"""Results files: CSV or JSON table plus a JSON manifest.

Nothing written here depends on the clock or the machine, so the same
config always produces byte-identical files.

CSV layout:
    # tool: gupnum
    # version: <version>
    # experiment: <name>
    # config_hash: <16 hex digits>
    <label columns>,<value columns>,status,detail

A real value column ``v`` becomes ``v,v_err``; a complex one becomes
``v_re,v_im,v_err``. Numbers use 12 significant digits.
"""

from __future__ import annotations

import csv
import hashlib
import json
import logging
from pathlib import Path

from gupnum import __version__
from gupnum.models.experiment import (
    ExperimentConfig,
    Manifest,
    Measured,
    OutputFormat,
    ResultRow,
    ResultTable,
)

logger = logging.getLogger(__name__)

SIGNIFICANT = ".12g"


def config_hash(config: ExperimentConfig) -> str:
    canonical = json.dumps(config.computation_dump(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _fmt(value: float) -> str:
    return format(value, SIGNIFICANT)


def _round(value: float) -> float:
    return float(_fmt(value))


def _label(value) -> str:
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def csv_header(table: ResultTable) -> list[str]:
    complex_columns = table.complex_columns()
    header = list(table.label_columns())
    for name in table.value_columns():
        if name in complex_columns:
            header.extend([f"{name}_re", f"{name}_im", f"{name}_err"])
        else:
            header.extend([name, f"{name}_err"])
    header.extend(["status", "detail"])
    return header


def _csv_cells(row: ResultRow, labels: list[str], values: list[str], complex_columns: set[str]) -> list[str]:
    cells = [_label(row.labels[k]) if k in row.labels else "" for k in labels]
    for name in values:
        cell: Measured | None = row.values.get(name)
        width = 3 if name in complex_columns else 2
        if cell is None:
            cells.extend([""] * width)
        elif width == 3:
            cells.extend([_fmt(cell.value), _fmt(cell.imag or 0.0), _fmt(cell.error)])
        else:
            cells.extend([_fmt(cell.value), _fmt(cell.error)])
    cells.extend([row.status.value, row.detail])
    return cells


def write_csv(table: ResultTable, config: ExperimentConfig, path: Path) -> None:
    labels, values = table.label_columns(), table.value_columns()
    complex_columns = table.complex_columns()
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(f"# tool: gupnum\n# version: {__version__}\n")
        f.write(f"# experiment: {table.experiment.value}\n# config_hash: {config_hash(config)}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(csv_header(table))
        for row in table.rows:
            writer.writerow(_csv_cells(row, labels, values, complex_columns))


def _json_cell(cell: Measured | None) -> dict | None:
    if cell is None:
        return None
    data = {"value": _round(cell.value), "error": _round(cell.error)}
    if cell.imag is not None:
        data["imag"] = _round(cell.imag)
    return data


def write_json(table: ResultTable, config: ExperimentConfig, path: Path) -> None:
    document = {
        "tool": "gupnum",
        "version": __version__,
        "experiment": table.experiment.value,
        "config_hash": config_hash(config),
        "rows": [
            {
                "labels": {k: _round(v) if isinstance(v, float) else v for k, v in row.labels.items()},
                "values": {name: _json_cell(cell) for name, cell in row.values.items()},
                "status": row.status.value,
                "detail": row.detail,
            }
            for row in table.rows
        ],
        "notes": table.notes,
    }
    path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def write_results(table: ResultTable, config: ExperimentConfig) -> tuple[Path, Path]:
    """Write the results table and its manifest under config.output_dir."""
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    name = table.experiment.value
    results = out / f"{name}.{config.output_format.value}"
    if config.output_format is OutputFormat.json:
        write_json(table, config, results)
    else:
        write_csv(table, config, results)

    manifest = Manifest(
        version=__version__,
        config=config,
        config_hash=config_hash(config),
        results_file=results.name,
        row_count=len(table.rows),
        failed_rows=table.failed_rows,
        max_errors={k: _round(v) for k, v in table.max_errors().items()},
        notes=table.notes,
    )
    manifest_path = out / f"{name}.manifest.json"
    manifest_path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("wrote %s and %s", results, manifest_path)
    return results, manifest_path
