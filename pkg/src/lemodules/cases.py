"""
Exhaustive enumeration of the admissible shapes of the Lê module complex

    0 -> M^s -> M^(s-1) -> ... -> M^0 -> 0,    rank M^j = lambda^j,  M^j in degree n - j.

Every M^j is filtered by the monodromy-invariant submodules im d_(j+1) ⊆ ker d_j ⊆ M^j.
A case fixes, at every level, the rank and the characteristic polynomial of the three
graded pieces (image, cohomology, coimage). The coimage of d_j is carried isomorphically
and equivariantly onto the image in M^(j-1), which links consecutive levels; the traces
of the three pieces add up to the Lê-Milnor trace of the level.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from lemodules import logger
from lemodules.cyclotomic import CyclotomicMultiset, DegreeConstraint, feasible_degree_trace, sorted_charpolys
from lemodules.scenario import Scenario, ScenarioFlag
from lemodules.traces import TraceVector, lm_traces
from lemodules.utils import UnsupportedSymbolicError


EMPTY = CyclotomicMultiset()


@dataclass(frozen=True)
class Lambda0Affine:
    """The rank lambda^0 - offset, for a symbolic lambda^0."""

    offset: int

    def evaluate(self, lambda0: int) -> int:
        return lambda0 - self.offset

    def render(self) -> str:
        if self.offset == 0:
            return "lambda0"
        return f"lambda0 - {self.offset}"

    def __str__(self):
        return self.render()


BettiValue = Union[int, Lambda0Affine]


@dataclass(frozen=True)
class LevelDecomposition:
    level: int
    trace: int
    le_number: Optional[int]
    rank_in: int
    # None at a symbolic level: the cohomology rank is lambda^0 - rank_in
    rank_h: Optional[int]
    rank_coim: int
    cp_in: CyclotomicMultiset
    cp_h: Optional[CyclotomicMultiset]
    cp_coim: CyclotomicMultiset

    @property
    def symbolic(self) -> bool:
        return self.le_number is None

    def rank_key(self) -> Tuple[int, int, int]:
        return (self.rank_in, -1 if self.rank_h is None else self.rank_h, self.rank_coim)

    def cp_key(self):
        return (self.cp_in.sort_key(), () if self.cp_h is None else self.cp_h.sort_key(), self.cp_coim.sort_key())

    def as_dict(self) -> Dict:
        return {
            "level": self.level,
            "le_number": self.le_number,
            "trace": self.trace,
            "rank_in": self.rank_in,
            "rank_h": self.rank_h,
            "rank_coim": self.rank_coim,
            "cp_in": self.cp_in.render(),
            "cp_h": None if self.cp_h is None else self.cp_h.render(),
            "cp_coim": self.cp_coim.render(),
        }


@dataclass(frozen=True)
class CaseProfile:
    n: int
    # levels j = s, s - 1, ..., 0
    levels: Tuple[LevelDecomposition, ...]
    lambda0_constraint: Optional[DegreeConstraint] = None

    @property
    def s(self) -> int:
        return len(self.levels) - 1

    def level(self, j: int) -> LevelDecomposition:
        return self.levels[self.s - j]

    @property
    def symbolic(self) -> bool:
        return self.level(0).symbolic

    @property
    def betti(self) -> Dict[int, BettiValue]:
        return betti_of_case(self, self.n)

    def rank_signature(self):
        constraint = None if self.lambda0_constraint is None else self.lambda0_constraint.as_dict()
        return tuple(level.rank_key() for level in self.levels), repr(constraint)

    def sort_key(self):
        return (
            tuple(level.rank_key() for level in self.levels),
            tuple(level.cp_key() for level in self.levels),
        )

    def summary(self) -> Dict:
        return {
            "levels": [level.as_dict() for level in self.levels],
            "betti": {str(k): v.render() if isinstance(v, Lambda0Affine) else v for k, v in self.betti.items()},
            "lambda0": None if self.lambda0_constraint is None else self.lambda0_constraint.render("lambda0"),
        }


def _flag_switches(scenario: Scenario) -> Tuple[bool, bool]:
    top_nonzero = scenario.has_flag(ScenarioFlag.TOP_DIFFERENTIAL_NONZERO)
    if top_nonzero and scenario.s == 0:
        logger.warning("top_differential_nonzero ignored: there is no differential when s = 0")
        top_nonzero = False
    swing = scenario.has_flag(ScenarioFlag.SWING)
    if swing and scenario.s != 1:
        logger.warning(f"swing ignored: it only applies to one-dimensional critical loci, s = {scenario.s}")
        swing = False
    return top_nonzero, swing


def _residual_constraint(trace: int, rank_in: int, cp_in: CyclotomicMultiset) -> DegreeConstraint:
    return feasible_degree_trace(None, trace - cp_in.trace).shift(rank_in)


def enumerate_cases(scenario: Scenario) -> List[CaseProfile]:
    s, n = scenario.s, scenario.n
    symbolic_levels = [j for j in range(1, s + 1) if scenario.le_numbers[j] is None]
    if symbolic_levels:
        raise UnsupportedSymbolicError(
            f"only lambda^0 may be unknown, got unknown lambda^{', lambda^'.join(map(str, symbolic_levels))}"
        )
    traces = lm_traces(scenario)
    top_nonzero, swing = _flag_switches(scenario)
    profiles: List[CaseProfile] = []

    def close_symbolic(rank_in: int, cp_in: CyclotomicMultiset, built: Tuple[LevelDecomposition, ...]):
        constraint = _residual_constraint(traces[0], rank_in, cp_in)
        if swing and rank_in == 0:
            constraint = constraint.pin(0)
        if not constraint.feasible:
            return
        level = LevelDecomposition(0, traces[0], None, rank_in, None, 0, cp_in, None, EMPTY)
        profiles.append(CaseProfile(n, built + (level,), constraint))

    def descend(j: int, rank_in: int, cp_in: CyclotomicMultiset, built: Tuple[LevelDecomposition, ...]):
        le_number = scenario.le_numbers[j]
        if le_number is None:
            close_symbolic(rank_in, cp_in, built)
            return
        remaining = le_number - rank_in
        if remaining < 0:
            return
        if j == 0 and swing and rank_in == 0 and le_number != 0:
            return
        residual_trace = traces[j] - cp_in.trace
        coim_ranks = [0] if j == 0 else range(remaining + 1)
        for rank_coim in coim_ranks:
            if j == s and top_nonzero and rank_coim == 0:
                continue
            rank_h = remaining - rank_coim
            for trace_coim in range(-rank_coim, rank_coim + 1):
                coim_choices = sorted_charpolys(rank_coim, trace_coim)
                if not coim_choices:
                    continue
                for cp_h in sorted_charpolys(rank_h, residual_trace - trace_coim):
                    for cp_coim in coim_choices:
                        level = LevelDecomposition(
                            j, traces[j], le_number, rank_in, rank_h, rank_coim, cp_in, cp_h, cp_coim
                        )
                        if j == 0:
                            profiles.append(CaseProfile(n, built + (level,)))
                        else:
                            descend(j - 1, rank_coim, cp_coim, built + (level,))

    descend(s, 0, EMPTY, ())
    profiles.sort(key=CaseProfile.sort_key)
    logger.debug(f"{len(profiles)} admissible profiles for lambda = {list(scenario.le_numbers)}")
    return profiles


def group_cases(cases: List[CaseProfile]) -> List[List[CaseProfile]]:
    """Group profiles that differ only in their characteristic-polynomial choices."""
    groups: Dict = {}
    for case in cases:
        groups.setdefault(case.rank_signature(), []).append(case)
    return list(groups.values())


def betti_of_case(case: CaseProfile, n: int) -> Dict[int, BettiValue]:
    """Rational Betti numbers of the reduced Milnor fiber cohomology, keyed by degree."""
    betti: Dict[int, BettiValue] = {}
    for j in range(case.s + 1):
        level = case.level(j)
        degree = n - j
        if level.rank_h is not None:
            betti[degree] = level.rank_h
            continue
        affine = Lambda0Affine(level.rank_in)
        constraint = case.lambda0_constraint
        if constraint is not None and constraint.is_exact:
            betti[degree] = affine.evaluate(constraint.least)
        else:
            betti[degree] = affine
    return dict(sorted(betti.items()))


def lambda0_bound_of_case(case: CaseProfile) -> DegreeConstraint:
    """
    Least lambda^0 (with isolated exclusions) for which the top-degree cohomology
    piece, of rank lambda^0 - rank_in and trace trace(alpha_0) - trace(cp_in), is the
    characteristic data of a quasi-unipotent automorphism.
    """
    level = case.level(0)
    if not level.symbolic:
        return DegreeConstraint.exactly(level.le_number)
    computed = _residual_constraint(level.trace, level.rank_in, level.cp_in)
    pinned = case.lambda0_constraint
    if pinned is not None and pinned.is_exact:
        return computed.pin(pinned.least)
    return computed


def check_case(case: CaseProfile, scenario: Scenario, traces: Optional[TraceVector] = None) -> List[str]:
    """Re-check every structural invariant of a profile; returns the violations found."""
    traces = traces or lm_traces(scenario)
    problems = []
    if case.s != scenario.s:
        return [f"profile has {case.s + 1} levels, scenario needs {scenario.s + 1}"]
    top_nonzero, swing = _flag_switches(scenario)
    for j in range(case.s + 1):
        level = case.level(j)
        if level.level != j:
            problems.append(f"level {j} is labelled {level.level}")
        if level.le_number != scenario.le_numbers[j]:
            problems.append(f"level {j}: lambda {level.le_number} != scenario {scenario.le_numbers[j]}")
        if level.trace != traces[j]:
            problems.append(f"level {j}: trace {level.trace} != {traces[j]}")
        pieces = [("in", level.rank_in, level.cp_in), ("coim", level.rank_coim, level.cp_coim)]
        if not level.symbolic:
            pieces.append(("h", level.rank_h, level.cp_h))
            if level.rank_in + level.rank_h + level.rank_coim != level.le_number:
                problems.append(f"level {j}: ranks do not add up to lambda^{j} = {level.le_number}")
            total = level.cp_in.trace + level.cp_h.trace + level.cp_coim.trace
            if total != traces[j]:
                problems.append(f"level {j}: piece traces add up to {total}, expected {traces[j]}")
        for name, rank, cp in pieces:
            if rank < 0:
                problems.append(f"level {j}: negative rank for {name}")
            if cp.degree != rank:
                problems.append(f"level {j}: cp_{name} has degree {cp.degree}, rank is {rank}")
        if j < case.s:
            above = case.level(j + 1)
            if above.rank_coim != level.rank_in or above.cp_coim != level.cp_in:
                problems.append(f"levels {j + 1}->{j}: coimage and image pieces do not match")
    if case.level(0).rank_coim != 0:
        problems.append("the bottom differential must vanish")
    if case.level(case.s).rank_in != 0:
        problems.append("nothing maps into the top level")
    if top_nonzero and case.level(case.s).rank_coim == 0:
        problems.append("top differential is zero")
    bottom = case.level(0)
    if bottom.symbolic:
        constraint = case.lambda0_constraint
        if constraint is None:
            return problems + ["symbolic lambda^0 without a constraint"]
        bound = lambda0_bound_of_case(case)
        if not bound.feasible or constraint != bound:
            problems.append(f"lambda^0 constraint {constraint} disagrees with {bound}")
        if swing and bottom.rank_in == 0 and constraint != DegreeConstraint.exactly(0):
            problems.append("swing: d_1 = 0 requires lambda^0 = 0")
    elif swing and bottom.rank_in == 0 and bottom.le_number != 0:
        problems.append("swing: d_1 = 0 requires lambda^0 = 0")
    return problems
