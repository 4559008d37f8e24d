"""overrun-ledger: two-sided cost and schedule overrun accounting for
multi-stakeholder construction series, plus contract structure analysis."""

from .attribution import (
    AttributionResult,
    ResponsibilityCategory,
    ResponsibilityMatrix,
    ResponsibilityShares,
    attribute_lp_causers,
    attribute_recipients,
    attribute_rework_causers,
    attribute_schedule_causers,
    compute_responsibility_shares,
)
from .baseline import (
    CP_MAX,
    CP_MIN,
    BaselineCostModel,
    LeverSchedule,
    LeverState,
)
from .calibration import (
    DEFAULT_FOAK_ANCHOR,
    DEFAULT_TENOAK_ANCHOR,
    CalibrationAnchors,
    calibrate_reference_model,
)
from .config_io import (
    BUNDLED_SCENARIOS,
    bundled_config,
    config_from_dict,
    config_to_dict,
    load_config,
)
from .contracts import (
    ContractSummary,
    CostPlus,
    FixedPrice,
    LitigationAssessment,
    PerformanceBased,
    ProfitCurve,
    StakeholderScope,
    allocation_delta,
    litigation_flags,
    margin,
    profit,
    profit_curve_samples,
    summarize_terms,
)
from .errors import (
    AttributionError,
    CalibrationError,
    ConfigError,
    DomainError,
    RateSolverError,
)
from .financing import (
    FinancingParams,
    ScheduleState,
    attribute_financing_causers,
    back_calculate_rate,
    financing_cost,
    financing_overrun_total,
    spend_fraction,
)
from .overrun_model import (
    OverrunModelParams,
    OverrunTotals,
    ReworkFactors,
    productivity,
    rework_factors,
    total_lp_cost,
    total_rework_cost,
    total_schedule_overruns,
)
from .scenario import (
    AggregateTotals,
    ContractAssignment,
    ContractOutcome,
    PlantResult,
    SankeyFlows,
    ScenarioConfig,
    ScheduleBreakdown,
    aggregate,
    run_scenario,
    sankey_flows,
)
from .stakeholders import (
    CAUSERS,
    Account,
    CostElement,
    CostOverrunType,
    ScheduleOverrunType,
    Stakeholder,
)

__version__ = "0.1.0"
