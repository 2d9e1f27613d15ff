"""
Traces of the Lê-Milnor monodromies alpha_0..alpha_s, computed from the Euler
characteristics of the complex links of the critical locus, and the consistency
facts that follow from them.

The trace of alpha_j sits in cohomological degree n - j; with that placement the
alternating sum telescopes to -1, and multiplying by the global sign (-1)^n gives
A'Campo's Lefschetz number (-1)^(n+1).
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from lemodules import logger
from lemodules.cyclotomic import CyclotomicMultiset, feasible_degree_trace
from lemodules.scenario import LinkModel, Scenario, ScenarioFlag, link_chis_from_model


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class TraceVector:
    # trace(alpha_0), ..., trace(alpha_s)
    traces: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "traces", tuple(int(t) for t in self.traces))

    def __getitem__(self, j: int) -> int:
        return self.traces[j]

    def __len__(self):
        return len(self.traces)

    def __iter__(self):
        return iter(self.traces)

    @property
    def s(self) -> int:
        return len(self.traces) - 1


def lm_traces(scenario: Scenario) -> TraceVector:
    n, s = scenario.n, scenario.s
    traces = [_sign(n - j) * (scenario.chi(s - j - 1) - scenario.chi(s - j)) for j in range(s + 1)]
    return TraceVector(tuple(traces))


def alternating_trace_sum(traces: TraceVector, n: int) -> int:
    return sum(_sign(n - j) * t for j, t in enumerate(traces))


def lefschetz_number(traces: TraceVector, n: int) -> int:
    """Lefschetz number of the monodromy on the vanishing-cycle stalk, (-1)^(n+1) when consistent."""
    return _sign(n) * alternating_trace_sum(traces, n)


def check_telescoping(traces: TraceVector, n: int) -> bool:
    return alternating_trace_sum(traces, n) == -1


def smooth_traces(n: int, s: int) -> TraceVector:
    """All traces vanish except the top one, which is (-1)^(n-s-1)."""
    return TraceVector(tuple([0] * s + [_sign(n - s - 1)]))


def traces_mod_p(traces: TraceVector, p: int) -> Tuple[int, ...]:
    return tuple(t % p for t in traces)


def check_lci_signs(traces: TraceVector, n: int, s: int) -> bool:
    sign = _sign(n - s - 1)
    return all(sign * t >= 0 for t in traces)


@dataclass(frozen=True)
class LevelBound:
    level: int
    trace: int
    lower_bound_lambda_j: int
    le_number: Optional[int] = None
    # |trace| = lambda^j: the characteristic polynomial is (t - 1)^lambda or (t + 1)^lambda
    extremal: bool = False
    forced_charpoly: Optional[CyclotomicMultiset] = None
    feasible: Optional[bool] = None

    def as_dict(self) -> Dict:
        return {
            "level": self.level,
            "trace": self.trace,
            "lower_bound": self.lower_bound_lambda_j,
            "le_number": self.le_number,
            "extremal": self.extremal,
            "forced_charpoly": None if self.forced_charpoly is None else self.forced_charpoly.render(),
            "feasible": self.feasible,
        }


@dataclass(frozen=True)
class BoundsReport:
    levels: Tuple[LevelBound, ...]

    @property
    def lower_bounds(self) -> Tuple[int, ...]:
        return tuple(level.lower_bound_lambda_j for level in self.levels)

    @property
    def violations(self) -> List[LevelBound]:
        return [level for level in self.levels if level.feasible is False]

    def as_dict(self) -> Dict:
        return {
            "lower_bounds": list(self.lower_bounds),
            "levels": [level.as_dict() for level in self.levels],
        }


def _extremal_charpoly(trace: int, le_number: int) -> CyclotomicMultiset:
    if le_number == 0:
        return CyclotomicMultiset()
    return CyclotomicMultiset.from_dict({1 if trace > 0 else 2: le_number})


def lambda_lower_bounds(traces: TraceVector, le_numbers=None) -> BoundsReport:
    """
    lambda^j >= |trace(alpha_j)| at every level. When the Lê numbers are supplied, each
    level also records whether the bound is attained and whether (lambda^j, trace) is
    realizable by a quasi-unipotent automorphism at all.
    """
    levels = []
    for j, t in enumerate(traces):
        le_number = None if le_numbers is None else le_numbers[j]
        bound = abs(t)
        if le_number is None:
            levels.append(LevelBound(level=j, trace=t, lower_bound_lambda_j=bound))
            continue
        extremal = le_number == bound
        feasible = feasible_degree_trace(le_number, t).feasible
        levels.append(
            LevelBound(
                level=j,
                trace=t,
                lower_bound_lambda_j=bound,
                le_number=le_number,
                extremal=extremal,
                forced_charpoly=_extremal_charpoly(t, le_number) if extremal else None,
                feasible=feasible,
            )
        )
    return BoundsReport(tuple(levels))


def bounds_report(scenario: Scenario) -> BoundsReport:
    report = lambda_lower_bounds(lm_traces(scenario), scenario.le_numbers)
    for level in report.violations:
        logger.warning(
            f"lambda^{level.level} = {level.le_number} is incompatible with trace {level.trace} "
            "for an automorphism whose eigenvalues are roots of unity"
        )
    return report


def smooth_exclusions(scenario: Scenario) -> List[int]:
    """Levels j != s where lambda^j = 1 is impossible because the trace vanishes."""
    traces = lm_traces(scenario)
    return [j for j in range(scenario.s) if traces[j] == 0]


def scenario_is_smooth(scenario: Scenario) -> bool:
    return list(scenario.link_chis) == link_chis_from_model(LinkModel.smooth(), scenario.s)


def telescoping_summary(scenario: Scenario) -> Dict:
    traces = lm_traces(scenario)
    summary = {
        "alternating_sum": alternating_trace_sum(traces, scenario.n),
        "holds": check_telescoping(traces, scenario.n),
        "lefschetz_number": lefschetz_number(traces, scenario.n),
    }
    if scenario.has_flag(ScenarioFlag.SIGMA_LCI):
        summary["lci_signs"] = check_lci_signs(traces, scenario.n, scenario.s)
    return summary
