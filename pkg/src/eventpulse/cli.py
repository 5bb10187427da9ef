"""Command-line interface.

Subcommands:
  simulate --scenario S --seed N --out trace.jsonl
      Generate a deterministic tweet trace (post-rate-cap applied) from a
      bundled scenario name (``superbowl``, ``regular_season``) or a
      scenario JSON file. ``--seed`` overrides the scenario's seed.
  eval --trace T --truth S --solution two_stage|unified --out report.json
      Replay a trace through the batch engine and score it against the
      truth scenario's injected events (the scenario also supplies the
      game lexicons). Prints the confusion matrix; writes the report.
  roc --out points.csv [--truth S] [--trace T] [--thresholds ...]
      Sweep detection-stage thresholds across adaptive and fixed window
      modes and write one CSV row per (mode, threshold) operating point.
  serve --config service.json|service.toml
      Run the long-running service (stream source, analysis, endpoints).

Exit codes: 0 success, 2 configuration/input error, 3 stream source
failure after retries (serve only).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .detect import TWO_STAGE, UNIFIED, DetectorConfig
from .errors import ConfigError, ParseError
from .evaluate import (
    ConfusionMatrix,
    evaluate_run,
    match_events,
    roc_sweep,
    write_roc_csv,
)
from .pipeline import run_trace
from .service import resolve_scenario, run as run_service
from .simgen import apply_api_constraints, generate, read_trace, write_trace


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eventpulse",
        description="Real-time event detection on simulated tweet streams.")
    parser.add_argument("--verbose", action="store_true",
                        help="log at INFO instead of WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate a deterministic trace")
    p.add_argument("--scenario", required=True,
                   help="bundled name (superbowl, regular_season) or "
                        "scenario JSON path")
    p.add_argument("--seed", type=int, default=None,
                   help="override the scenario's seed")
    p.add_argument("--out", required=True, help="trace JSONL output path")

    p = sub.add_parser("eval", help="score a trace against truth")
    p.add_argument("--trace", required=True, help="trace JSONL path")
    p.add_argument("--truth", required=True,
                   help="truth scenario: bundled name or scenario JSON path "
                        "(supplies injected events and game lexicons)")
    p.add_argument("--solution", required=True,
                   choices=[TWO_STAGE, UNIFIED])
    p.add_argument("--out", required=True, help="report JSON output path")
    p.add_argument("--horizon", type=int, default=90,
                   help="detection-to-truth matching horizon, seconds")

    p = sub.add_parser("roc", help="threshold sweep to CSV operating points")
    p.add_argument("--out", required=True, help="points CSV output path")
    p.add_argument("--truth", default="regular_season",
                   help="truth scenario: bundled name or scenario JSON path")
    p.add_argument("--trace", default=None,
                   help="trace JSONL path (default: simulate the truth "
                        "scenario)")
    p.add_argument("--thresholds", default=None,
                   help="comma-separated ratio thresholds "
                        "(default: the bundled sweep)")

    p = sub.add_parser("serve", help="run the long-running service")
    p.add_argument("--config", required=True,
                   help="service config, JSON or TOML")
    return parser


def _cmd_simulate(args) -> int:
    scenario = resolve_scenario(args.scenario, args.seed)
    trace = apply_api_constraints(generate(scenario), scenario.api)
    write_trace(trace, args.out)
    print(f"wrote {len(trace.tweets)} tweets, {len(trace.truth)} truth "
          f"events over {trace.duration_s}s (seed {trace.seed}) to {args.out}")
    return 0


def _cmd_eval(args) -> int:
    trace = read_trace(args.trace)
    scenario = resolve_scenario(args.truth)
    lexicons = scenario.lexicon_set()
    cfg = DetectorConfig()
    detected = run_trace(trace, lexicons, cfg,
                         solutions=(args.solution,))[args.solution]
    report = evaluate_run(detected, scenario.events, trace, cfg,
                          match_horizon_s=args.horizon,
                          solution=args.solution)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    matching = match_events(detected, scenario.events, args.horizon)
    print(ConfusionMatrix.from_matching(matching).render())
    mean = report["delays"]["mean_s"]
    print(f"{args.solution}: matched {report['matched']}/"
          f"{report['truth_events']} truths, "
          f"{report['false_positives']} false positives, mean delay "
          f"{'n/a' if mean is None else f'{mean:.1f}s'}; "
          f"report -> {args.out}")
    return 0


def _cmd_roc(args) -> int:
    from .scenarios import ROC_THRESHOLDS

    scenario = resolve_scenario(args.truth)
    if args.trace is not None:
        trace = read_trace(args.trace)
    else:
        trace = apply_api_constraints(generate(scenario), scenario.api)
    if args.thresholds is not None:
        try:
            thresholds = tuple(
                float(v) for v in args.thresholds.split(",") if v.strip())
        except ValueError as exc:
            raise ConfigError(f"bad --thresholds: {exc}") from exc
    else:
        thresholds = ROC_THRESHOLDS
    points = roc_sweep(trace, scenario.lexicon_set(), scenario.events,
                       DetectorConfig(), thresholds)
    write_roc_csv(points, args.out)
    n = sum(len(v) for v in points.values())
    print(f"wrote {n} operating points ({len(points)} modes x "
          f"{len(thresholds)} thresholds) to {args.out}")
    return 0


def _cmd_serve(args) -> int:
    return run_service(args.config)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    handler = {
        "simulate": _cmd_simulate,
        "eval": _cmd_eval,
        "roc": _cmd_roc,
        "serve": _cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except (ConfigError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
