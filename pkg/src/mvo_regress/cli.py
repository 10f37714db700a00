"""Command-line front end.

Subcommands:
    list                      show the registered models
    fit <model> --optimizer   one seeded fit; writes JSON, trace CSV, two SVGs
    bench                     full benchmark; writes report JSON, tables, traces
    report <report.json>      re-render a saved report as text or CSV

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .data import load_bundled, holdout_split
from .harness import ExperimentSpec, OPTIMIZERS, run_experiment, run_single
from .models import MODEL_NAMES, get_model, load_bounds_file
from .objective import testing_objective, training_objective
from .reporting import (
    load_report_json,
    render_report_csv,
    render_test_table,
    render_train_table,
    report_to_dict,
    save_report_json,
    write_trace_csvs,
)
from .svgplot import scatter_line_svg

log = logging.getLogger("mvo_regress")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvo-regress",
        description="Nonlinear regression coefficient search with MVO and PSO.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered models")

    fit = sub.add_parser("fit", help="fit one model with one optimizer")
    fit.add_argument("model")
    fit.add_argument("--optimizer", choices=sorted(OPTIMIZERS), required=True)
    fit.add_argument("--seed", type=int, default=0)
    fit.add_argument("--iters", type=int, default=100)
    fit.add_argument("--pop", type=int, default=30)
    fit.add_argument("--train-fraction", type=float, default=0.8)
    fit.add_argument("--bounds", type=Path, default=None)
    fit.add_argument("--out", type=Path, default=Path("out"))

    bench = sub.add_parser("bench", help="run the full benchmark")
    bench.add_argument("--models", type=str, default=None,
                       help="comma-separated subset of model names")
    bench.add_argument("--runs", type=int, default=31)
    bench.add_argument("--seed", type=int, default=42)
    bench.add_argument("--iters", type=int, default=100)
    bench.add_argument("--pop", type=int, default=30)
    bench.add_argument("--bounds", type=Path, default=None)
    bench.add_argument("--out", type=Path, default=Path("out"))

    rep = sub.add_parser("report", help="render a saved report")
    rep.add_argument("report_json", type=Path)
    rep.add_argument("--format", choices=("text", "csv"), default="text")

    return parser


def _check_model_name(name: str, parser: argparse.ArgumentParser) -> str:
    key = name.strip().lower()
    if key not in MODEL_NAMES:
        parser.exit(2, f"unknown model {name!r}; valid names: {', '.join(MODEL_NAMES)}\n")
    return key


def _load_bounds(path: Path | None, parser: argparse.ArgumentParser):
    if path is None:
        return None
    try:
        return load_bounds_file(path)
    except (OSError, json.JSONDecodeError) as exc:
        parser.exit(2, f"cannot read bounds file {path}: {exc}\n")


def _cmd_list(_args) -> int:
    for name in MODEL_NAMES:
        model = get_model(name)
        print(f"{name:10s} coefficients={model.num_coefficients} predictors={model.arity}")
    return 0


def _fit_curve_points(model, beta, X):
    """Model curve for plotting: dense grid for 1 predictor, else sample order."""
    if model.arity == 1:
        x = X[:, 0]
        grid = np.linspace(float(x.min()), float(x.max()), 200)
        return grid, model.predict(beta, grid[:, None]), x
    idx = np.arange(X.shape[0], dtype=float)
    return idx, model.predict(beta, X), idx


def _cmd_fit(args, parser) -> int:
    name = _check_model_name(args.model, parser)
    bounds = _load_bounds(args.bounds, parser)
    model = get_model(name, bounds)
    dataset = load_bundled(name)
    result = run_single(
        model, args.optimizer, args.seed, args.train_fraction,
        population_size=args.pop, max_iterations=args.iters, dataset=dataset)
    split = holdout_split(dataset, args.train_fraction, args.seed)
    train_obj = training_objective(model, dataset, split)
    test_obj = testing_objective(model, dataset, split)

    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    stem = f"{name}_{args.optimizer}"
    run_doc = {
        "model": name,
        "optimizer": args.optimizer,
        "seed": result.seed,
        "train_mse": result.train_mse,
        "test_mse": result.test_mse,
        "best_beta": [float(v) for v in result.best_beta],
        "trace": [float(v) for v in result.trace],
    }
    (out / f"{stem}_run.json").write_text(
        json.dumps(run_doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    trace_lines = ["iteration,best_mse"] + [
        f"{i},{v!r}" for i, v in enumerate(result.trace)]
    (out / f"{stem}_trace.csv").write_text("\n".join(trace_lines) + "\n", encoding="utf-8")

    for tag, obj in (("train", train_obj), ("test", test_obj)):
        gx, gy, data_x = _fit_curve_points(model, result.best_beta, obj.X)
        scatter_line_svg(
            out / f"{stem}_{tag}_fit.svg",
            data_x, obj.y, gx, gy,
            title=f"{name} {tag} fit ({args.optimizer}, seed {args.seed})",
            xlabel="x" if model.arity == 1 else "sample",
            ylabel="y")
    log.info("fit %s/%s seed=%d: train MSE %.6g, test MSE %.6g",
             name, args.optimizer, args.seed, result.train_mse, result.test_mse)
    print(f"wrote 4 artifacts to {out}")
    return 0


def _cmd_bench(args, parser) -> int:
    bounds = _load_bounds(args.bounds, parser)
    if args.models is None:
        models = MODEL_NAMES
    else:
        models = tuple(_check_model_name(m, parser) for m in args.models.split(","))
    spec = ExperimentSpec(
        models=models, runs=args.runs, master_seed=args.seed,
        population_size=args.pop, max_iterations=args.iters)
    report = run_experiment(spec, bounds)
    doc = report_to_dict(report)

    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    save_report_json(report, out / "report.json")
    train_table = render_train_table(doc)
    test_table = render_test_table(doc)
    (out / "train_table.txt").write_text(train_table, encoding="utf-8")
    (out / "test_table.txt").write_text(test_table, encoding="utf-8")
    write_trace_csvs(doc, out / "traces")
    print(train_table)
    print(test_table)
    print(f"report written to {out / 'report.json'}")
    return 0


def _cmd_report(args, parser) -> int:
    try:
        doc = load_report_json(args.report_json)
    except FileNotFoundError:
        parser.exit(2, f"no such report: {args.report_json}\n")
    except json.JSONDecodeError as exc:
        parser.exit(2, f"malformed report {args.report_json}: {exc}\n")
    if args.format == "text":
        print(render_train_table(doc))
        print(render_test_table(doc))
    else:
        sys.stdout.write(render_report_csv(doc))
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "fit":
            return _cmd_fit(args, parser)
        if args.command == "bench":
            return _cmd_bench(args, parser)
        if args.command == "report":
            return _cmd_report(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
