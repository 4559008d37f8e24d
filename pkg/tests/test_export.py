import csv
import io
import json

import pytest

from overrun_ledger.errors import DomainError
from overrun_ledger.export import (
    export,
    results_from_json,
    results_to_csv,
    results_to_dict,
    results_to_json,
)
from overrun_ledger.scenario import run_scenario


class TestJson:
    def test_empty_series_is_valid_document(self):
        document = json.loads(results_to_json([], "empty", 1000.0))
        assert document["plants"] == []
        assert "aggregate" not in document

    def test_single_plant_round_trip(self, fixed_cp):
        results = run_scenario(fixed_cp)[:1]
        text = results_to_json(results, "one", fixed_cp.baseline.plant_capacity_kwe)
        assert results_from_json(text) == results

    def test_full_series_round_trip(self, fixed_cp):
        results = run_scenario(fixed_cp)
        text = results_to_json(
            results, fixed_cp.scenario_name, fixed_cp.baseline.plant_capacity_kwe
        )
        assert results_from_json(text) == results

    def test_document_carries_capacity_metadata(self, fixed_cp):
        document = results_to_dict(
            run_scenario(fixed_cp), fixed_cp.scenario_name,
            fixed_cp.baseline.plant_capacity_kwe,
        )
        assert document["plant_capacity_kwe"] == fixed_cp.baseline.plant_capacity_kwe
        assert document["currency"] == "2024-USD"

    def test_determinism_byte_identical(self, fixed_cp):
        a = results_to_json(run_scenario(fixed_cp), fixed_cp.scenario_name,
                            fixed_cp.baseline.plant_capacity_kwe)
        b = results_to_json(run_scenario(fixed_cp), fixed_cp.scenario_name,
                            fixed_cp.baseline.plant_capacity_kwe)
        assert a == b


class TestCsv:
    def test_row_count_is_plants_times_ledger_cells(self, fixed_cp):
        results = run_scenario(fixed_cp)
        text = results_to_csv(results, fixed_cp.scenario_name,
                              fixed_cp.baseline.plant_capacity_kwe)
        rows = list(csv.DictReader(io.StringIO(text)))
        # 4 stakeholders x 3 types on each side = 24 money cells per plant
        assert len(rows) == len(results) * 24

    def test_per_kwe_column_consistent(self, fixed_cp):
        capacity = fixed_cp.baseline.plant_capacity_kwe
        text = results_to_csv(run_scenario(fixed_cp), fixed_cp.scenario_name,
                              capacity)
        for row in csv.DictReader(io.StringIO(text)):
            usd = float(row["amount_usd"])
            per_kwe = float(row["amount_usd_per_kwe"])
            assert per_kwe == pytest.approx(usd / capacity, rel=1e-12, abs=1e-15)
            assert float(row["plant_capacity_kwe"]) == capacity

    def test_sides_individually_conserve_totals(self, fixed_cp):
        results = run_scenario(fixed_cp)
        text = results_to_csv(results, fixed_cp.scenario_name,
                              fixed_cp.baseline.plant_capacity_kwe)
        rows = list(csv.DictReader(io.StringIO(text)))
        total = sum(r.total_cost_overrun for r in results)
        caused = sum(float(r["amount_usd"]) for r in rows if r["side"] == "caused_by")
        received = sum(float(r["amount_usd"]) for r in rows
                       if r["side"] == "received_by")
        assert caused == pytest.approx(total, rel=1e-9)
        assert received == pytest.approx(total, rel=1e-9)


class TestExportDispatch:
    def test_formats(self, fixed_cp):
        results = run_scenario(fixed_cp)[:1]
        assert export(results, "x", 1000.0, "json").startswith("{")
        assert export(results, "x", 1000.0, "csv").startswith("scenario,")

    def test_unknown_format_rejected(self, fixed_cp):
        with pytest.raises(DomainError):
            export([], "x", 1000.0, "parquet")
