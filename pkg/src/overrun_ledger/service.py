"""Stateless scenario-evaluation HTTP service (JSON in, JSON out).

Every endpoint is a thin wrapper over the library: the service adds no
computation of its own, so responses are identical to what the CLI and the
Python API produce for the same inputs. Malformed or out-of-range inputs
come back as 4xx with the offending field named; evaluation failures
(solver breakdowns) come back as 5xx with an error code.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .calibration import CalibrationError
from .config_io import (
    BUNDLED_SCENARIOS,
    bundled_config,
    config_from_dict,
    config_to_dict,
    terms_from_dict,
)
from .contracts import StakeholderScope, profit_curve_samples, summarize_terms
from .errors import AttributionError, ConfigError, DomainError, RateSolverError
from .export import results_to_dict
from .financing import ScheduleState, back_calculate_rate
from .scenario import run_scenario


def _bad_request(field: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": "invalid_input", "field": field, "message": message},
    )


def create_app() -> FastAPI:
    app = FastAPI(title="overrun-ledger scenario service", version="0.1.0")

    @app.exception_handler(ConfigError)
    async def _config_error(request: Request, exc: ConfigError) -> JSONResponse:
        return _bad_request(exc.field, str(exc))

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return _bad_request("", str(exc))

    @app.exception_handler(RateSolverError)
    async def _rate_error(request: Request, exc: RateSolverError) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"error_code": "rate_solver_failed", "message": str(exc)},
        )

    @app.exception_handler(AttributionError)
    async def _attribution_error(request: Request, exc: AttributionError) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"error_code": "attribution_failed", "message": str(exc)},
        )

    @app.exception_handler(CalibrationError)
    async def _calibration_error(request: Request, exc: CalibrationError) -> JSONResponse:
        return JSONResponse(
            status_code=500,
            content={"error_code": "calibration_failed", "message": str(exc)},
        )

    @app.get("/defaults")
    async def defaults() -> dict[str, Any]:
        return {name: config_to_dict(bundled_config(name)) for name in BUNDLED_SCENARIOS}

    @app.post("/scenario")
    async def scenario(body: dict[str, Any]) -> dict[str, Any]:
        config = config_from_dict(body)
        results = run_scenario(config)
        return results_to_dict(
            results, config.scenario_name, config.baseline.plant_capacity_kwe
        )

    @app.post("/contracts/curve")
    async def contracts_curve(body: dict[str, Any]) -> dict[str, Any]:
        for key in ("terms", "we_usd", "scope"):
            if key not in body:
                raise ConfigError(key, "missing")
        terms = terms_from_dict(body["terms"], "terms")
        we = float(body["we_usd"])
        scope_body = body["scope"]
        for key in ("or_caused_usd", "or_received_usd"):
            if key not in scope_body:
                raise ConfigError(f"scope.{key}", "missing")
        scope = StakeholderScope(
            we=we,
            or_caused=float(scope_body["or_caused_usd"]),
            or_received=float(scope_body["or_received_usd"]),
        )
        or_max = float(body.get("or_max_usd", max(we, scope.or_caused, scope.or_received)))
        n = int(body.get("n", 101))
        curve = profit_curve_samples(terms, we, or_max, n, scope)
        summary = summarize_terms(terms, we)
        return {
            "samples": [
                {"overrun_usd": o, "profit_usd": p} for o, p in curve.samples
            ],
            "cause_point": {
                "overrun_usd": curve.cause_point[0],
                "profit_usd": curve.cause_point[1],
            },
            "recipient_point": {
                "overrun_usd": curve.recipient_point[0],
                "profit_usd": curve.recipient_point[1],
            },
            "summary": {
                "margin_at_zero": summary.margin_at_zero,
                "margin_at_30pct": summary.margin_at_30pct,
                "margin_at_60pct": summary.margin_at_60pct,
                "max_margin": summary.max_margin,
                # null = unbounded below (fixed-price losses have no floor)
                "min_margin": None
                if summary.min_margin == float("-inf")
                else summary.min_margin,
            },
        }

    @app.post("/financing/rate")
    async def financing_rate(body: dict[str, Any]) -> dict[str, Any]:
        for key in ("occ_usd", "cfin_usd", "tc_months", "ts_months"):
            if key not in body:
                raise ConfigError(key, "missing")
        schedule = ScheduleState(
            tc_months=float(body["tc_months"]), ts_months=float(body["ts_months"])
        )
        rate = back_calculate_rate(
            occ=float(body["occ_usd"]),
            cfin_target=float(body["cfin_usd"]),
            schedule=schedule,
            time_step_months=float(body.get("time_step_months", 1.0)),
        )
        return {"rate": rate}

    return app
