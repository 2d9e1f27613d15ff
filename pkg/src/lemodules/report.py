"""
Reports printed by the command line front end.

A report has a fixed set of sections. Sections that a command does not compute are
left as None, so the JSON schema is the same for every command.
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, List, Optional, Sequence, Tuple

from lemodules import logger
from lemodules.cases import CaseProfile, enumerate_cases, group_cases, lambda0_bound_of_case
from lemodules.modp import (
    TorsionProfile,
    forced_modp_ranks,
    rank_mod_p,
    reduce_and_rank,
    torsion_bounds,
    torsion_upper_bounds,
    uct_dimension,
)
from lemodules.realization import realization_to_dict, realize, verify
from lemodules.scenario import Scenario
from lemodules.traces import (
    bounds_report,
    lm_traces,
    scenario_is_smooth,
    smooth_exclusions,
    telescoping_summary,
    traces_mod_p,
)
from lemodules.utils import ConstraintViolationError, dump_json


@dataclass
class Report:
    scenario: Optional[Dict] = None
    traces: Optional[List[int]] = None
    telescoping: Optional[Dict] = None
    bounds: Optional[Dict] = None
    cases: Optional[List[Dict]] = None
    modp: Optional[Dict] = None
    realization: Optional[Dict] = None

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_json(self) -> str:
        return dump_json(self.as_dict())

    def render(self) -> str:
        lines: List[str] = []
        if self.scenario is not None:
            lines.extend(_render_scenario(self.scenario))
        if self.traces is not None:
            lines.append(f"traces: {_render_list(self.traces)}")
        if self.telescoping is not None:
            lines.extend(_render_telescoping(self.telescoping))
        if self.bounds is not None:
            lines.extend(_render_bounds(self.bounds))
        if self.cases is not None:
            for section in self.cases:
                lines.extend(_render_case_section(section))
        if self.modp is not None:
            lines.extend(_render_modp(self.modp))
        if self.realization is not None:
            lines.extend(_render_realization(self.realization))
        return "\n".join(lines)


def _render_list(values: Sequence) -> str:
    return "[" + ", ".join("?" if v is None else str(v) for v in values) + "]"


def _render_scenario(scenario: Dict) -> List[str]:
    flags = ", ".join(scenario["flags"]) or "none"
    chis = scenario["link_model"]["explicit"]
    return [
        f"scenario: n = {scenario['n']}, s = {scenario['s']}",
        f"  link Euler characteristics: {_render_list(chis)}",
        f"  Lê numbers: {_render_list(scenario['le_numbers'])}",
        f"  flags: {flags}",
    ]


def _render_telescoping(telescoping: Dict) -> List[str]:
    status = "ok" if telescoping["holds"] else "FAILED"
    lines = [
        f"telescoping: sum_j (-1)^(n-j) trace_j = {telescoping['alternating_sum']} ({status})",
        f"  Lefschetz number: {telescoping['lefschetz_number']}",
    ]
    if "lci_signs" in telescoping:
        lines.append(f"  lci sign pattern: {'ok' if telescoping['lci_signs'] else 'FAILED'}")
    return lines


def _render_bounds(bounds: Dict) -> List[str]:
    lines = ["bounds:"]
    for level in bounds["levels"]:
        j = level["level"]
        text = f"  lambda^{j} >= {level['lower_bound']}"
        if level["le_number"] is not None:
            text += f" (given {level['le_number']}"
            if level["feasible"] is False:
                text += ", infeasible"
            elif level["extremal"]:
                text += f", extremal: char = {level['forced_charpoly']}"
            text += ")"
        lines.append(text)
    for j in bounds.get("smooth_exclusions", []):
        lines.append(f"  lambda^{j} != 1 (trace 0 on a smooth critical locus)")
    return lines


def _render_level(level: Dict) -> str:
    if level["rank_h"] is not None:
        h = str(level["rank_h"])
    else:
        h = "lambda0" if level["rank_in"] == 0 else f"lambda0 - {level['rank_in']}"
    cp_h = "?" if level["cp_h"] is None else level["cp_h"]
    return (
        f"      level {level['level']} (trace {level['trace']}): "
        f"image {level['rank_in']} [{level['cp_in']}], "
        f"cohomology {h} [{cp_h}], "
        f"coimage {level['rank_coim']} [{level['cp_coim']}]"
    )


def _render_case_section(section: Dict) -> List[str]:
    count = sum(len(case["profiles"]) for case in section["cases"])
    lines = [
        f"cases for Lê numbers {_render_list(section['le_numbers'])}: "
        f"{len(section['cases'])} case(s), {count} profile(s)"
    ]
    for case in section["cases"]:
        lines.append(f"  case {case['case']}: {case['lambda0'] or 'lambda0 given'}")
        for profile in case["profiles"]:
            betti = ", ".join(f"b_{k} = {v}" for k, v in profile["betti"].items())
            lines.append(f"    profile {profile['profile']}: {betti}")
            for level in profile["levels"]:
                lines.append(_render_level(level))
    if not section["cases"]:
        lines.append("  no admissible case")
    return lines


def _render_modp(modp: Dict) -> List[str]:
    lines = [f"mod {modp['p']}: traces {_render_list(modp['traces'])}"]
    for entry in modp["cases"]:
        lines.append(f"  profile {entry['profile']} (lambda0 = {entry['lambda0']}):")
        for j, least in entry["forced_ranks"].items():
            lines.append(f"    rank d_{j} mod {modp['p']} >= {least}")
        for inequality in entry["inequalities"]:
            lines.append(f"    {inequality['rendered']}")
        bounds = ", ".join(f"t_{k} <= {v}" for k, v in entry["upper_bounds"].items())
        lines.append(f"    individually: {bounds}")
    if not modp["cases"]:
        lines.append("  no admissible case")
    return lines


def _render_realization(realization: Dict) -> List[str]:
    verification = realization["verification"]
    lines = [
        f"realization of profile {realization['profile']} (lambda0 = {realization['lambda0']}): "
        f"{'verified' if verification['passed'] else 'FAILED'}"
    ]
    for level in realization["complex"]["levels"]:
        lines.append(f"  A_{level['level']} = {level['monodromy']}")
        if level["differential"] is not None:
            lines.append(f"  D_{level['level']} = {level['differential']}")
    betti = ", ".join(f"b_{k} = {v}" for k, v in verification["betti"].items())
    lines.append(f"  cohomology: {betti}")
    for failure in verification["failures"]:
        lines.append(f"  failure: {failure}")
    return lines


def scenario_report(scenario: Scenario) -> Report:
    return Report(
        scenario=scenario.to_json(),
        traces=list(lm_traces(scenario)),
        telescoping=telescoping_summary(scenario),
    )


def bounds_section(scenario: Scenario) -> Tuple[Dict, bool]:
    """The bounds section, and whether every given Lê number is feasible."""
    report = bounds_report(scenario)
    section = report.as_dict()
    if scenario_is_smooth(scenario):
        section["smooth_exclusions"] = smooth_exclusions(scenario)
    return section, not report.violations


def cases_section(scenario: Scenario, first_profile: int = 1) -> Tuple[Dict, List[CaseProfile]]:
    profiles = enumerate_cases(scenario)
    numbering = {id(profile): first_profile + k for k, profile in enumerate(profiles)}
    cases = []
    for index, group in enumerate(group_cases(profiles), start=1):
        constraint = group[0].lambda0_constraint
        cases.append(
            {
                "case": index,
                "lambda0": None if constraint is None else constraint.render("lambda0"),
                "profiles": [dict(profile=numbering[id(p)], **p.summary()) for p in group],
            }
        )
    logger.info(f"Lê numbers {list(scenario.le_numbers)}: {len(cases)} case(s), {len(profiles)} profile(s)")
    return {"le_numbers": list(scenario.le_numbers), "cases": cases}, profiles


def realization_section(scenario: Scenario, profile: int, case: CaseProfile, lambda0: Optional[int] = None) -> Dict:
    r = realize(case, lambda0)
    report = verify(r, scenario, case)
    if report.passed:
        logger.info(f"Realized profile {profile} with ranks {list(r.ranks)}")
    return {
        "profile": profile,
        "lambda0": r.ranks[0],
        "complex": realization_to_dict(r),
        "verification": report.as_dict(),
    }


def modp_section(
    scenario: Scenario,
    p: int,
    profiles: Sequence[Tuple[int, CaseProfile]],
    lambda0: Optional[int] = None,
) -> Dict:
    """
    Torsion inequalities for each profile, with lambda^0 instantiated at `lambda0` or at
    its least admissible value. The block witness of each profile is reduced mod p as a
    check that its mod-p cohomology agrees with the Universal Coefficient count.
    """
    entries = []
    for number, case in profiles:
        bound = lambda0_bound_of_case(case)
        value = bound.least if lambda0 is None else lambda0
        if not bound.admits(value):
            logger.debug(f"profile {number} does not admit lambda0 = {value}")
            continue
        r = realize(case, value)
        report = verify(r, scenario, case)
        torsion = TorsionProfile.from_report(report, p)
        dimensions = reduce_and_rank(r, p)
        for degree, dimension in dimensions.items():
            if dimension != uct_dimension(report.betti, torsion, degree):
                raise ConstraintViolationError(
                    f"mod {p} dimension in degree {degree} disagrees with the integral count"
                )
        forced = forced_modp_ranks(scenario, value)
        for j, least in forced.items():
            if rank_mod_p(r.differential(j), p) < least:
                raise ConstraintViolationError(f"witness has rank d_{j} mod {p} below {least}")
        inequalities = torsion_bounds(r.ranks, report.betti, p, r.n, forced)
        entries.append(
            {
                "profile": number,
                "lambda0": value,
                "betti": report.betti,
                "forced_ranks": forced,
                "inequalities": [dict(rendered=i.render(r.n), **i.as_dict()) for i in inequalities],
                "upper_bounds": torsion_upper_bounds(inequalities),
                "witness_dimensions": dimensions,
            }
        )
    return {"p": p, "traces": list(traces_mod_p(lm_traces(scenario), p)), "cases": entries}
