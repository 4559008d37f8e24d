import pytest

from overrun_ledger.baseline import LeverSchedule, LeverState
from overrun_ledger.contracts import CostPlus
from overrun_ledger.errors import ConfigError, DomainError
from overrun_ledger.financing import FinancingParams
from overrun_ledger.overrun_model import OverrunModelParams
from overrun_ledger.scenario import (
    ContractAssignment,
    ScenarioConfig,
    aggregate,
    run_scenario,
    sankey_flows,
)
from overrun_ledger.stakeholders import (
    CostOverrunType,
    ScheduleOverrunType,
    Stakeholder,
)

from conftest import CR, CS, DM, ES, make_baseline, survey_matrix


def small_config(levers, scd=None, rate=0.04, contracts=None, n=None):
    n = n if n is not None else len(levers)
    return ScenarioConfig(
        scenario_name="test",
        baseline=make_baseline(indirect=400.0, preconstruction=20.0,
                               supplementary=30.0),
        lever_schedule=LeverSchedule(tuple(levers)),
        overrun_params=OverrunModelParams(
            rho_c=0.2, rho_ae=0.3, rho_d=0.25, lambda_lp=1.5, sigma_sched=0.1,
            scd_months_per_plant=tuple(scd if scd is not None else [1.0] * n),
        ),
        financing=FinancingParams(rate=rate),
        responsibility_matrix=survey_matrix(),
        n_plants=n,
        contracts=contracts or {},
    )


class TestRunScenario:
    def test_full_proficiency_single_plant_has_no_overruns(self):
        config = small_config([LeverState(2.0, 1.0, 1.0)], scd=[0.0])
        (result,) = run_scenario(config)
        assert result.overrun_totals.dc_total == 0.0
        assert result.financing_overrun == 0.0
        assert result.tci == result.baseline_tci
        assert result.schedule.overrun_months == 0.0

    def test_tci_is_baseline_plus_overruns(self):
        config = small_config([LeverState(0.5, 0.2, 0.4)])
        (result,) = run_scenario(config)
        assert result.tci == pytest.approx(
            result.baseline_tci
            + result.overrun_totals.dc_total
            + result.financing_overrun,
            rel=1e-12,
        )

    def test_ledger_conserved_per_type(self):
        config = small_config([LeverState(0.5, 0.0, 0.0), LeverState(1.2, 0.5, 0.6)])
        for result in run_scenario(config):
            attribution = result.attribution
            for overrun_type in CostOverrunType:
                caused = sum(
                    v for (s, t), v in attribution.cost_by_causer_and_type.items()
                    if t is overrun_type
                )
                received = sum(
                    v for (t, s), v in attribution.cost_by_type_and_recipient.items()
                    if t is overrun_type
                )
                assert caused == pytest.approx(received, rel=1e-9, abs=1e-9)

    def test_financing_type_total_matches_financing_overrun(self):
        config = small_config([LeverState(0.8, 0.3, 0.1)])
        (result,) = run_scenario(config)
        fin_caused = sum(
            v for (s, t), v in result.attribution.cost_by_causer_and_type.items()
            if t is CostOverrunType.FINANCING
        )
        assert fin_caused == pytest.approx(result.financing_overrun, rel=1e-12)

    def test_supply_chain_delay_creates_financing_flow_to_es(self):
        # full proficiency but a supply-chain delay: the only cost overrun is
        # financing, caused by the equipment suppliers via the schedule
        config = small_config([LeverState(2.0, 1.0, 1.0)], scd=[4.0])
        (result,) = run_scenario(config)
        assert result.overrun_totals.dc_total == 0.0
        assert result.financing_overrun > 0.0
        causer = result.attribution.cost_by_causer_and_type
        assert causer[(ES, CostOverrunType.FINANCING)] == pytest.approx(
            result.financing_overrun, rel=1e-12
        )
        flows = sankey_flows(result)
        assert set(flows.causer_to_type) == {(ES, CostOverrunType.FINANCING)}
        assert set(flows.type_to_recipient) == {(CostOverrunType.FINANCING, CR)}

    def test_zero_rate_means_no_financing_overrun(self):
        config = small_config([LeverState(0.5, 0.0, 0.0)], rate=0.0)
        (result,) = run_scenario(config)
        assert result.financing_overrun == 0.0
        assert result.overrun_totals.dc_total > 0.0

    def test_contract_outcomes_use_ledger_sides(self):
        contracts = {
            ES: ContractAssignment(terms=CostPlus(pm=0.08), we=500.0),
        }
        config = small_config([LeverState(0.5, 0.0, 0.0)], contracts=contracts)
        (result,) = run_scenario(config)
        outcome = result.contract_outcomes[ES]
        assert outcome.or_caused == pytest.approx(
            result.attribution.cost_caused_by(ES), rel=1e-12
        )
        assert outcome.or_received == pytest.approx(
            result.attribution.cost_received_by(ES), rel=1e-12
        )
        assert outcome.delta == pytest.approx(
            0.08 * (outcome.or_received - outcome.or_caused), rel=1e-9
        )

    def test_determinism_identical_results(self):
        config = small_config([LeverState(0.6, 0.2, 0.3), LeverState(1.0, 0.5, 0.5)])
        first = run_scenario(config)
        second = run_scenario(config)
        assert first == second

    def test_mismatched_plant_count_names_field(self):
        config = small_config([LeverState(1.0, 0.5, 0.5)], n=3, scd=[1.0] * 3)
        with pytest.raises(ConfigError) as err:
            run_scenario(config)
        assert "per_plant" in str(err.value)

    def test_short_scd_schedule_names_field(self):
        config = small_config(
            [LeverState(1.0, 0.5, 0.5), LeverState(1.0, 0.5, 0.5)], scd=[1.0]
        )
        with pytest.raises(ConfigError) as err:
            run_scenario(config)
        assert "supply_chain_delay_months" in str(err.value)

    def test_creditor_contract_rejected(self):
        contracts = {CR: ContractAssignment(terms=CostPlus(), we=100.0)}
        config = small_config([LeverState(1.0, 0.5, 0.5)], contracts=contracts)
        with pytest.raises(ConfigError):
            run_scenario(config)


class TestBundledScenarios:
    def test_us_experience_overruns_vanish_from_plant_five(self, us_experience):
        results = run_scenario(us_experience)
        for result in results:
            if result.plant_index >= 5:
                assert result.total_cost_overrun == 0.0
                assert result.schedule.overrun_months == 0.0

    def test_us_experience_total_overrun_non_increasing(self, us_experience):
        results = run_scenario(us_experience)
        totals = [r.total_cost_overrun for r in results]
        for earlier, later in zip(totals, totals[1:]):
            assert later <= earlier + 1e-9

    def test_fixed_cp_overruns_never_vanish(self, fixed_cp):
        for result in run_scenario(fixed_cp):
            assert result.total_cost_overrun > 0.0

    def test_fixed_cp_cs_caused_share_climbs_through_the_ramp(self, fixed_cp):
        results = run_scenario(fixed_cp)
        shares = [
            r.attribution.cost_caused_by(CS) / r.total_cost_overrun for r in results
        ]
        # strictly increasing while the other stakeholders are still ramping
        # (plants 1-5), constant afterwards since plants 6+ are identical
        for earlier, later in zip(shares[:5], shares[1:5]):
            assert later > earlier
        for earlier, later in zip(shares[5:], shares[6:]):
            assert later == pytest.approx(earlier, rel=1e-12)

    def test_fixed_cp_foak_dm_dominates(self, fixed_cp):
        first = run_scenario(fixed_cp)[0]
        dm_share = first.attribution.cost_caused_by(DM) / first.total_cost_overrun
        assert dm_share > 0.5

    def test_foak_matches_anchor_duration(self, fixed_cp):
        first = run_scenario(fixed_cp)[0]
        assert first.schedule.total_months == pytest.approx(119.0, abs=0.2)


class TestAggregate:
    def test_single_plant_identity(self):
        config = small_config([LeverState(0.7, 0.4, 0.2)])
        results = run_scenario(config)
        totals = aggregate(results)
        assert totals.cost_by_causer_and_type == dict(
            results[0].attribution.cost_by_causer_and_type
        )

    def test_two_identical_plants_double(self):
        state = LeverState(0.7, 0.4, 0.2)
        one = aggregate(run_scenario(small_config([state], scd=[1.0])))
        two = aggregate(run_scenario(small_config([state, state], scd=[1.0, 1.0])))
        for key, value in one.cost_by_causer_and_type.items():
            assert two.cost_by_causer_and_type[key] == pytest.approx(
                2 * value, rel=1e-12
            )

    def test_full_series_matches_summation_oracle(self, fixed_cp):
        results = run_scenario(fixed_cp)
        totals = aggregate(results)
        for key in totals.cost_by_causer_and_type:
            oracle = sum(r.attribution.cost_by_causer_and_type[key] for r in results)
            assert totals.cost_by_causer_and_type[key] == pytest.approx(oracle,
                                                                        rel=1e-12)

    def test_empty_series_rejected(self):
        with pytest.raises(DomainError):
            aggregate([])


class TestSankey:
    def test_zero_overrun_plant_has_empty_flows(self):
        config = small_config([LeverState(2.0, 1.0, 1.0)], scd=[0.0])
        (result,) = run_scenario(config)
        flows = sankey_flows(result)
        assert flows.causer_to_type == {}
        assert flows.type_to_recipient == {}

    def test_type_node_inflow_equals_outflow(self, fixed_cp):
        for result in run_scenario(fixed_cp):
            flows = sankey_flows(result)
            for overrun_type in CostOverrunType:
                inflow = sum(
                    v for (_, t), v in flows.causer_to_type.items()
                    if t is overrun_type
                )
                outflow = sum(
                    v for (t, _), v in flows.type_to_recipient.items()
                    if t is overrun_type
                )
                assert inflow == pytest.approx(outflow, rel=1e-9, abs=1e-9)

    def test_foak_dm_causer_share_above_half(self, fixed_cp):
        flows = sankey_flows(run_scenario(fixed_cp)[0])
        dm = sum(v for (s, _), v in flows.causer_to_type.items() if s is DM)
        total = sum(flows.causer_to_type.values())
        assert dm / total > 0.5
