"""Command line: validate a scenario, simulate it, or re-derive the network.

Exit codes: 0 success, 1 validation errors, 2 usage errors, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from .backends import make_backend
from .config import ConfigError, SimConfig, load_config
from .emit import emit_run, export_network_from_ndjson, write_edges_csv
from .engine import simulate_run
from .scenario import ScenarioError, parse_scenario
from .validation import Severity, has_errors, report_to_json_lines, validate

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chirpsim",
        description="Scenario-driven social media post simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="check a scenario file")
    p_validate.add_argument("scenario", type=Path)
    p_validate.add_argument(
        "--json", action="store_true", help="print the report as JSON lines"
    )

    p_sim = sub.add_parser("simulate", help="run a scenario")
    p_sim.add_argument("scenario", type=Path)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out", type=Path, default=Path("out"))
    p_sim.add_argument("--config", type=Path, default=None)
    p_sim.add_argument("--backend", choices=["stub", "openai-compatible"], default=None)
    p_sim.add_argument("--endpoint", default=None)
    p_sim.add_argument("--model", default=None)
    p_sim.add_argument("--api-key-env", default=None)
    p_sim.add_argument("--p-peak", type=float, default=None)
    p_sim.add_argument("--p-base", type=float, default=None)
    p_sim.add_argument("--taper-width", type=int, default=None)

    p_export = sub.add_parser(
        "export-network", help="recompute the edge list from emitted NDJSON"
    )
    p_export.add_argument("ndjson", type=Path)
    p_export.add_argument("--out", type=Path, default=Path("edges.csv"))
    return parser


def _resolve_config(args: argparse.Namespace) -> SimConfig:
    config = load_config(args.config) if args.config else SimConfig()
    activation = config.activation
    for attr, flag in (("p_peak", "p_peak"), ("p_base", "p_base"), ("taper_width", "taper_width")):
        value = getattr(args, flag)
        if value is not None:
            activation = dataclasses.replace(activation, **{attr: value})
    backend = config.backend
    for attr in ("endpoint", "model", "api_key_env"):
        value = getattr(args, attr.replace("-", "_"))
        if value is not None:
            backend = dataclasses.replace(backend, **{attr: value})
    if args.backend is not None:
        backend = dataclasses.replace(backend, kind=args.backend)
    return dataclasses.replace(config, activation=activation, backend=backend)


def _cmd_validate(args: argparse.Namespace) -> int:
    spec = parse_scenario(args.scenario)
    report = validate(spec)
    if args.json:
        sys.stdout.write(report_to_json_lines(report))
    else:
        for entry in report:
            print(f"{entry.severity.value.upper()} [{entry.code}] {entry.message}")
        errors = sum(1 for e in report if e.severity is Severity.ERROR)
        warnings = len(report) - errors
        print(f"{errors} error(s), {warnings} warning(s)")
    return EXIT_VALIDATION if has_errors(report) else EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    spec = parse_scenario(args.scenario)
    report = validate(spec)
    if has_errors(report):
        for entry in report:
            if entry.severity is Severity.ERROR:
                print(f"ERROR [{entry.code}] {entry.message}", file=sys.stderr)
        print("scenario has validation errors; refusing to simulate", file=sys.stderr)
        return EXIT_VALIDATION

    config = _resolve_config(args)
    backend = make_backend(config.backend)
    result = simulate_run(spec, config, args.seed, backend)
    paths = emit_run(result, config, args.out)
    print(
        f"simulated '{spec.name}' for {spec.num_timesteps} timesteps: "
        f"{len(result.posts)} posts, {result.randos_spawned} randos spawned"
    )
    for name, path in paths.items():
        print(f"  {name}: {path}")
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    edges = export_network_from_ndjson(args.ndjson)
    write_edges_csv(edges, args.out)
    print(f"wrote {len(edges)} edges to {args.out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "simulate":
            return _cmd_simulate(args)
        return _cmd_export(args)
    except (ScenarioError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION if isinstance(exc, ScenarioError) else EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # runtime failure: engine/backend/IO
        print(f"runtime failure: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    raise SystemExit(main())
