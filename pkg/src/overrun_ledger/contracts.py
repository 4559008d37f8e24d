"""Contract structures and profit-vs-overrun analysis.

Three families are modeled. In all of them the stakeholder's profit is a
margin applied to what the owner actually pays (baseline scope plus
overrun), which is why even a linear margin schedule produces a curved
profit function.

- performance-based: margin starts at pm_at_zero with no overrun and falls
  linearly to zero at zero_profit_overrun_frac of the scope, clamped at 0.
- fixed-price: the award prices in a contingency; every overrun dollar past
  the contingency comes straight out of profit (slope -1, unbounded below).
- cost-plus: a flat margin on realized cost, whatever the overrun.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class PerformanceBased:
    pm_at_zero: float = 0.16
    zero_profit_overrun_frac: float = 0.60

    def __post_init__(self):
        if self.pm_at_zero < 0:
            raise DomainError("pm_at_zero must be non-negative")
        if self.zero_profit_overrun_frac <= 0:
            raise DomainError("zero_profit_overrun_frac must be positive")


@dataclass(frozen=True)
class FixedPrice:
    contingency_frac: float = 0.30
    pm_at_contingency: float = 0.08

    def __post_init__(self):
        if self.contingency_frac < 0:
            raise DomainError("contingency_frac must be non-negative")


@dataclass(frozen=True)
class CostPlus:
    pm: float = 0.08


ContractTerms = Union[PerformanceBased, FixedPrice, CostPlus]


@dataclass(frozen=True)
class StakeholderScope:
    """A stakeholder's well-executed scope cost and the overruns attributed
    to them under the two allocation rules (all USD)."""

    we: float
    or_caused: float
    or_received: float

    def __post_init__(self):
        if self.we <= 0:
            raise DomainError("well-executed scope cost must be positive")
        if self.or_caused < 0 or self.or_received < 0:
            raise DomainError("overruns must be non-negative")


def profit(terms: ContractTerms, we: float, overrun: float) -> float:
    """Profit (USD) for a stakeholder with scope cost `we` assessed at the
    given overrun level."""
    if we <= 0:
        raise DomainError("well-executed scope cost must be positive")
    if overrun < 0:
        raise DomainError("overrun must be non-negative")
    if isinstance(terms, PerformanceBased):
        frac = overrun / we
        pm = terms.pm_at_zero * (1.0 - frac / terms.zero_profit_overrun_frac)
        pm = min(max(pm, 0.0), terms.pm_at_zero)
        return pm * (we + overrun)
    if isinstance(terms, FixedPrice):
        baseline_profit = terms.pm_at_contingency * we * (1.0 + terms.contingency_frac)
        return baseline_profit - (overrun - terms.contingency_frac * we)
    if isinstance(terms, CostPlus):
        return terms.pm * (we + overrun)
    raise TypeError(f"unknown contract terms: {terms!r}")


def margin(terms: ContractTerms, we: float, overrun: float) -> float:
    """Realized profit margin: profit over what the owner pays (we + overrun)."""
    return profit(terms, we, overrun) / (we + overrun)


def profit_slope(terms: ContractTerms, we: float, overrun: float) -> float:
    """d(profit)/d(overrun) at the given point (analytic, per contract type)."""
    if we <= 0:
        raise DomainError("well-executed scope cost must be positive")
    if isinstance(terms, PerformanceBased):
        threshold = terms.zero_profit_overrun_frac * we
        if overrun >= threshold:
            return 0.0
        # d/dOR [pm0 (1 - OR/(f we)) (we + OR)]
        return terms.pm_at_zero * (
            1.0 - (we + 2.0 * overrun) / threshold
        )
    if isinstance(terms, FixedPrice):
        return -1.0
    if isinstance(terms, CostPlus):
        return terms.pm
    raise TypeError(f"unknown contract terms: {terms!r}")


def allocation_delta(terms: ContractTerms, scope: StakeholderScope) -> float:
    """Profit difference (USD) when the contract is administered on overruns
    received rather than overruns caused. Negative means the stakeholder is
    worse off under a recipient-based allocation."""
    return profit(terms, scope.we, scope.or_received) - profit(
        terms, scope.we, scope.or_caused
    )


@dataclass(frozen=True)
class ProfitCurve:
    """Sampled profit-vs-overrun curve with the two allocation markers."""

    samples: tuple[tuple[float, float], ...]
    cause_point: tuple[float, float]
    recipient_point: tuple[float, float]


def profit_curve_samples(
    terms: ContractTerms,
    we: float,
    or_max: float,
    n: int,
    scope: StakeholderScope,
) -> ProfitCurve:
    """Evenly sample profit over [0, or_max] and mark the profit outcomes at
    the caused and received overrun levels."""
    if n < 2:
        raise DomainError("need at least two samples")
    if or_max <= 0:
        raise DomainError("or_max must be positive")
    step = or_max / (n - 1)
    samples = tuple(
        (i * step, profit(terms, we, i * step)) for i in range(n)
    )
    return ProfitCurve(
        samples=samples,
        cause_point=(scope.or_caused, profit(terms, we, scope.or_caused)),
        recipient_point=(scope.or_received, profit(terms, we, scope.or_received)),
    )


@dataclass(frozen=True)
class ContractSummary:
    """Headline margins of one contract structure on a given scope."""

    margin_at_zero: float
    margin_at_30pct: float
    margin_at_60pct: float
    max_margin: float
    min_margin: float  # -inf for fixed-price: losses are uncapped


def summarize_terms(terms: ContractTerms, we: float) -> ContractSummary:
    """Margins at 0/30/60% overrun plus the extremes over all overruns >= 0."""
    if we <= 0:
        raise DomainError("well-executed scope cost must be positive")
    at = {frac: margin(terms, we, frac * we) for frac in (0.0, 0.3, 0.6)}
    if isinstance(terms, PerformanceBased):
        max_margin, min_margin = terms.pm_at_zero, 0.0
    elif isinstance(terms, FixedPrice):
        # Margin is maximal with no overrun and falls without bound after.
        max_margin, min_margin = at[0.0], float("-inf")
    elif isinstance(terms, CostPlus):
        max_margin = min_margin = terms.pm
    else:
        raise TypeError(f"unknown contract terms: {terms!r}")
    return ContractSummary(
        margin_at_zero=at[0.0],
        margin_at_30pct=at[0.3],
        margin_at_60pct=at[0.6],
        max_margin=max_margin,
        min_margin=min_margin,
    )


@dataclass(frozen=True)
class LitigationAssessment:
    """Who has a financial motive to litigate under a recipient-based award.

    A stakeholder paid less under the recipient-based allocation than their
    caused overruns would warrant has a quantified motive to recover the
    difference from whoever actually caused the excess.
    """

    delta: float
    delta_sign: int
    cause_in_zero_profit_region: bool
    recipient_in_zero_profit_region: bool
    slope_sign_at_recipient: int
    litigation_risk_against_causers: bool


def litigation_flags(terms: ContractTerms, scope: StakeholderScope) -> LitigationAssessment:
    """Classify the dispute exposure of one stakeholder under the terms."""
    delta = allocation_delta(terms, scope)
    if isinstance(terms, PerformanceBased):
        threshold = terms.zero_profit_overrun_frac * scope.we
        cause_zero = scope.or_caused >= threshold
        recipient_zero = scope.or_received >= threshold
    else:
        cause_zero = False
        recipient_zero = False
    slope = profit_slope(terms, scope.we, scope.or_received)
    sign = (delta > 0) - (delta < 0)
    return LitigationAssessment(
        delta=delta,
        delta_sign=sign,
        cause_in_zero_profit_region=cause_zero,
        recipient_in_zero_profit_region=recipient_zero,
        slope_sign_at_recipient=(slope > 0) - (slope < 0),
        litigation_risk_against_causers=delta < 0,
    )
