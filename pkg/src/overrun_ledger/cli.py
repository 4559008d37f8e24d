"""Command-line interface.

Subcommands:
  run        evaluate a scenario config and export JSON or CSV
  calibrate  fit the overrun-model constants to anchors and update the config
  sankey     print one plant's causer/type/recipient flows
  rate       back-calculate a financing rate from principal, cost, and schedule
  serve      start the scenario-evaluation HTTP service

Config arguments accept a path, a name under $OVERRUN_LEDGER_CONFIG_DIR, or
a bundled scenario name (us-experience, fixed-construction-proficiency).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .calibration import CalibrationAnchors, calibrate_reference_model
from .config_io import (
    load_config,
    overrun_params_to_dict,
    resolve_config_path,
    write_overrun_params,
)
from .errors import CalibrationError, ConfigError, DomainError, RateSolverError
from .export import export
from .financing import ScheduleState, back_calculate_rate
from .scenario import run_scenario, sankey_flows


def _cmd_run(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    results = run_scenario(config)
    document = export(
        results, config.scenario_name, config.baseline.plant_capacity_kwe, args.format
    )
    if args.out:
        Path(args.out).write_text(document)
        print(f"wrote {args.format} results for {config.n_plants} plants to {args.out}")
    else:
        print(document)
    return 0


def _parse_anchors(text: str) -> CalibrationAnchors:
    values = {}
    for part in text.split(","):
        if "=" not in part:
            raise ConfigError("--anchors", f"expected key=value, got {part!r}")
        key, _, raw = part.partition("=")
        values[key.strip()] = float(raw)
    missing = {"foak", "tenoak"} - set(values)
    if missing:
        raise ConfigError("--anchors", f"missing {sorted(missing)}")
    return CalibrationAnchors(
        foak_usd_per_kwe=values["foak"], tenoak_usd_per_kwe=values["tenoak"]
    )


def _cmd_calibrate(args: argparse.Namespace) -> int:
    path = resolve_config_path(args.config)
    config = load_config(str(path))
    anchors = _parse_anchors(args.anchors)
    params = calibrate_reference_model(anchors, config)
    print(json.dumps(overrun_params_to_dict(params), indent=2))
    if not args.dry_run:
        write_overrun_params(path, params)
        print(f"updated overrun_model in {path}")
    return 0


def _cmd_sankey(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    results = run_scenario(config)
    if not 1 <= args.plant <= len(results):
        raise ConfigError("--plant", f"series has {len(results)} plants")
    flows = sankey_flows(results[args.plant - 1])
    document = {
        "plant_index": args.plant,
        "causer_to_type": [
            {"source": s.value, "target": t.value, "value_usd": v}
            for (s, t), v in flows.causer_to_type.items()
        ],
        "type_to_recipient": [
            {"source": t.value, "target": s.value, "value_usd": v}
            for (t, s), v in flows.type_to_recipient.items()
        ],
    }
    print(json.dumps(document, indent=2))
    return 0


def _cmd_rate(args: argparse.Namespace) -> int:
    rate = back_calculate_rate(
        occ=args.occ,
        cfin_target=args.cfin,
        schedule=ScheduleState(tc_months=args.tc, ts_months=args.ts),
        time_step_months=args.time_step,
    )
    print(f"{rate:.10f}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="overrun-ledger",
        description="Cost/schedule overrun attribution and contract analysis "
        "for multi-plant construction series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="evaluate a scenario and export results")
    p_run.add_argument("config", help="config path or bundled scenario name")
    p_run.add_argument("--format", choices=("json", "csv"), default="json")
    p_run.add_argument("--out", help="output file (default: stdout)")
    p_run.set_defaults(func=_cmd_run)

    p_cal = sub.add_parser("calibrate", help="fit overrun constants to anchors")
    p_cal.add_argument("config", help="config path or bundled scenario name")
    p_cal.add_argument(
        "--anchors",
        required=True,
        help="per-kWe overrun anchors, e.g. foak=9500,tenoak=3120",
    )
    p_cal.add_argument(
        "--dry-run",
        action="store_true",
        help="print fitted constants without touching the config file",
    )
    p_cal.set_defaults(func=_cmd_calibrate)

    p_sankey = sub.add_parser("sankey", help="print one plant's overrun flows")
    p_sankey.add_argument("config", help="config path or bundled scenario name")
    p_sankey.add_argument("--plant", type=int, required=True, help="1-based plant index")
    p_sankey.set_defaults(func=_cmd_sankey)

    p_rate = sub.add_parser("rate", help="back-calculate a financing rate")
    p_rate.add_argument("--occ", type=float, required=True, help="overnight cost (USD)")
    p_rate.add_argument("--cfin", type=float, required=True, help="financing cost (USD)")
    p_rate.add_argument("--tc", type=float, required=True, help="construction months")
    p_rate.add_argument("--ts", type=float, required=True, help="startup months")
    p_rate.add_argument("--time-step", type=float, default=1.0, help="months per step")
    p_rate.set_defaults(func=_cmd_rate)

    p_serve = sub.add_parser("serve", help="start the HTTP evaluation service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, DomainError, RateSolverError, CalibrationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
