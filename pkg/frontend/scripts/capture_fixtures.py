#!/usr/bin/env python3
"""Regenerate the dashboard test fixtures from the engine.

Run from the frontend/ directory with the overrun-ledger package installed:

    python3 scripts/capture_fixtures.py
"""

from pathlib import Path

from fastapi.testclient import TestClient

from overrun_ledger.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

ES_SCOPE = {"or_caused_usd": 543e6, "or_received_usd": 954e6}
ES_WE = 3.95e9


def main() -> None:
    client = TestClient(create_app())
    FIXTURES.mkdir(parents=True, exist_ok=True)

    defaults = client.get("/defaults")
    defaults.raise_for_status()
    (FIXTURES / "defaults.json").write_bytes(defaults.content)

    config = defaults.json()["fixed-construction-proficiency"]
    results = client.post("/scenario", json=config)
    results.raise_for_status()
    (FIXTURES / "fixed-cp-results.json").write_bytes(results.content)

    for name, terms in (
        ("performance_based", {"type": "performance_based", "pm_at_zero": 0.16,
                               "zero_profit_overrun_frac": 0.6}),
        ("fixed_price", {"type": "fixed_price", "contingency_frac": 0.3,
                         "pm_at_contingency": 0.08}),
    ):
        curve = client.post(
            "/contracts/curve",
            json={"terms": terms, "we_usd": ES_WE, "n": 41, "scope": ES_SCOPE},
        )
        curve.raise_for_status()
        (FIXTURES / f"curve-{name.replace('_', '-')}.json").write_bytes(curve.content)

    print(f"fixtures refreshed under {FIXTURES}")


if __name__ == "__main__":
    main()
