"""Report serialization and table rendering.

The JSON document mirrors the in-memory report; convergence traces
additionally go to one CSV per (model, optimizer) with one row per
iteration and one column per run. Table cells use 4-significant-digit
scientific notation, mean followed by the standard deviation in
parentheses.
"""
from __future__ import annotations

import dataclasses
import json
from pathlib import Path

from .harness import ExperimentReport

__all__ = [
    "report_to_dict",
    "save_report_json",
    "load_report_json",
    "write_trace_csvs",
    "render_train_table",
    "render_test_table",
    "render_report_csv",
]


def report_to_dict(report: ExperimentReport) -> dict:
    spec = report.spec
    doc: dict = {
        "spec": {
            "models": list(spec.models),
            "optimizers": list(spec.optimizers),
            "runs": spec.runs,
            "master_seed": spec.master_seed,
            "train_fraction": spec.train_fraction,
            "population_size": spec.population_size,
            "max_iterations": spec.max_iterations,
            "mvo_params": dataclasses.asdict(spec.mvo_params),
            "pso_params": dataclasses.asdict(spec.pso_params),
            "alpha": spec.alpha,
        },
        "models": {},
    }
    for name, per_opt in report.results.items():
        entry: dict = {}
        for optimizer, agg in per_opt.items():
            entry[optimizer] = {
                "train": dataclasses.asdict(agg.train),
                "test": dataclasses.asdict(agg.test),
                "runs": [
                    {
                        "seed": r.seed,
                        "train_mse": r.train_mse,
                        "test_mse": r.test_mse,
                        "best_beta": [float(v) for v in r.best_beta],
                        "trace": [float(v) for v in r.trace],
                    }
                    for r in agg.runs
                ],
            }
        if name in report.comparisons:
            entry["comparison"] = dataclasses.asdict(report.comparisons[name])
        doc["models"][name] = entry
    return doc


def save_report_json(report: ExperimentReport, path: str | Path) -> None:
    doc = report_to_dict(report)
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def load_report_json(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def write_trace_csvs(report_doc: dict, out_dir: str | Path) -> list[Path]:
    """One CSV per (model, optimizer): rows = iterations, columns = runs."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, entry in report_doc["models"].items():
        for optimizer in report_doc["spec"]["optimizers"]:
            runs = entry[optimizer]["runs"]
            path = out_dir / f"{name}_{optimizer}_trace.csv"
            header = ",".join(f"run_{i}" for i in range(len(runs)))
            lines = [header]
            n_iter = len(runs[0]["trace"]) if runs else 0
            for it in range(n_iter):
                lines.append(",".join(repr(r["trace"][it]) for r in runs))
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
            written.append(path)
    return written


def format_cell(mean: float, std: float) -> str:
    return f"{mean:.3E}({std:.3E})"


def _column_widths(rows: list[list[str]]) -> list[int]:
    return [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]


def _render_rows(rows: list[list[str]]) -> str:
    widths = _column_widths(rows)
    sep = "  "
    lines = []
    for i, row in enumerate(rows):
        lines.append(sep.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append(sep.join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_train_table(report_doc: dict) -> str:
    """Mean(std) of training MSE per model and optimizer."""
    optimizers = report_doc["spec"]["optimizers"]
    rows = [["Model"] + [o.upper() for o in optimizers]]
    for name, entry in report_doc["models"].items():
        row = [name]
        for o in optimizers:
            stats = entry[o]["train"]
            row.append(format_cell(stats["mean"], stats["std"]))
        rows.append(row)
    return _render_rows(rows)


def render_test_table(report_doc: dict) -> str:
    """Mean(std) of testing MSE per model and optimizer, with p-value and h."""
    optimizers = report_doc["spec"]["optimizers"]
    rows = [["Model"] + [o.upper() for o in optimizers] + ["p-value", "h"]]
    for name, entry in report_doc["models"].items():
        row = [name]
        for o in optimizers:
            stats = entry[o]["test"]
            row.append(format_cell(stats["mean"], stats["std"]))
        comp = entry.get("comparison")
        if comp is None:
            row += ["-", "-"]
        else:
            row += [f"{comp['p_value']:.3E}", str(comp["h"])]
        rows.append(row)
    return _render_rows(rows)


def render_report_csv(report_doc: dict) -> str:
    """Flat CSV of the aggregate cells, one row per (model, optimizer)."""
    lines = ["model,optimizer,train_mean,train_std,test_mean,test_std,p_value,h"]
    for name, entry in report_doc["models"].items():
        comp = entry.get("comparison")
        for o in report_doc["spec"]["optimizers"]:
            tr, te = entry[o]["train"], entry[o]["test"]
            p = repr(comp["p_value"]) if comp else ""
            h = str(comp["h"]) if comp else ""
            lines.append(
                f"{name},{o},{tr['mean']!r},{tr['std']!r},{te['mean']!r},{te['std']!r},{p},{h}")
    return "\n".join(lines) + "\n"
