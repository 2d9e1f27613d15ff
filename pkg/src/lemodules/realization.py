"""
Explicit integer witnesses for admissible cases, and an independent verifier.

A witness gives, for every level j, the monodromy matrix A_j acting on M^j = Z^(lambda^j)
and, for j >= 1, the differential D_j : M^j -> M^(j-1) as a lambda^(j-1) x lambda^j matrix.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import ImmutableMatrix, Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from lemodules import logger
from lemodules.cases import CaseProfile, Lambda0Affine, betti_of_case, lambda0_bound_of_case
from lemodules.cyclotomic import T, CyclotomicMultiset, IntPolynomial, canonical_charpoly, cyclotomic_part, expand
from lemodules.scenario import Scenario
from lemodules.traces import lm_traces
from lemodules.utils import ConstraintViolationError, parse_int


def int_matrix(rows: int, cols: int, entries: Sequence[Sequence[int]] = ()) -> ImmutableMatrix:
    """An immutable integer matrix of the given shape; missing entries are zero. Works for empty shapes."""
    flat = [0] * (rows * cols)
    if len(entries) > rows or any(len(row) > cols for row in entries):
        raise ValueError(f"entries do not fit a {rows} x {cols} matrix")
    for i, row in enumerate(entries):
        for k, value in enumerate(row):
            flat[i * cols + k] = int(value)
    return ImmutableMatrix(rows, cols, flat)


def matrix_rows(m: ImmutableMatrix) -> List[List[int]]:
    return [[int(m[i, k]) for k in range(m.cols)] for i in range(m.rows)]


def companion_matrix(p: IntPolynomial) -> ImmutableMatrix:
    if not p.monic or p.degree < 1:
        raise ValueError(f"companion matrix needs a monic polynomial of degree >= 1, got {p}")
    d = p.degree
    entries = [[0] * d for _ in range(d)]
    for i in range(1, d):
        entries[i][i - 1] = 1
    for i in range(d):
        entries[i][d - 1] = -p.coefficients[i]
    return int_matrix(d, d, entries)


def block_diagonal(blocks: Sequence[ImmutableMatrix]) -> ImmutableMatrix:
    size = sum(block.rows for block in blocks)
    entries = [[0] * size for _ in range(size)]
    offset = 0
    for block in blocks:
        for i in range(block.rows):
            for k in range(block.cols):
                entries[offset + i][offset + k] = int(block[i, k])
        offset += block.rows
    return int_matrix(size, size, entries)


@dataclass(frozen=True)
class ComplexRealization:
    n: int
    # lambda^0, ..., lambda^s
    ranks: Tuple[int, ...]
    # A_0, ..., A_s
    monodromies: Tuple[ImmutableMatrix, ...]
    # D_1, ..., D_s
    differentials: Tuple[ImmutableMatrix, ...]

    @property
    def s(self) -> int:
        return len(self.ranks) - 1

    def differential(self, j: int) -> ImmutableMatrix:
        """D_j, with D_0 and D_(s+1) the zero maps out of M^0 and into M^s."""
        if j == 0:
            return int_matrix(0, self.ranks[0])
        if j == self.s + 1:
            return int_matrix(self.ranks[self.s], 0)
        return self.differentials[j - 1]


def _piece_blocks(cps: Sequence[CyclotomicMultiset]) -> List[ImmutableMatrix]:
    return [companion_matrix(expand(cp)) for cp in cps if cp.degree > 0]


def realize(case: CaseProfile, concrete_lambda0: Optional[int] = None) -> ComplexRealization:
    """
    Block witness: M^j = (image piece) + (cohomology piece) + (coimage piece), A_j the
    block sum of companion matrices, D_j the identity from the coimage block of M^j onto
    the image block of M^(j-1).
    """
    bottom = case.level(0)
    pieces: Dict[int, Tuple[Tuple[int, CyclotomicMultiset], ...]] = {}
    if bottom.symbolic:
        bound = lambda0_bound_of_case(case)
        if concrete_lambda0 is None:
            concrete_lambda0 = bound.least
        if not bound.admits(concrete_lambda0):
            raise ConstraintViolationError(
                f"lambda^0 = {concrete_lambda0} violates {bound.render('lambda0')} for this case"
            )
        rank_h = concrete_lambda0 - bottom.rank_in
        cp_h = canonical_charpoly(rank_h, bottom.trace - bottom.cp_in.trace)
        pieces[0] = ((bottom.rank_in, bottom.cp_in), (rank_h, cp_h), (0, bottom.cp_coim))
    elif concrete_lambda0 is not None and concrete_lambda0 != bottom.le_number:
        raise ConstraintViolationError(f"lambda^0 is fixed to {bottom.le_number} by the scenario")

    for j in range(case.s + 1):
        if j in pieces:
            continue
        level = case.level(j)
        pieces[j] = ((level.rank_in, level.cp_in), (level.rank_h, level.cp_h), (level.rank_coim, level.cp_coim))

    ranks = tuple(sum(rank for rank, _ in pieces[j]) for j in range(case.s + 1))
    monodromies = tuple(block_diagonal(_piece_blocks([cp for _, cp in pieces[j]])) for j in range(case.s + 1))
    differentials = []
    for j in range(1, case.s + 1):
        (rank_in, _), (rank_h, _), (rank_coim, _) = pieces[j]
        offset = rank_in + rank_h
        entries = [[0] * ranks[j] for _ in range(ranks[j - 1])]
        for i in range(rank_coim):
            entries[i][offset + i] = 1
        differentials.append(int_matrix(ranks[j - 1], ranks[j], entries))
    logger.debug(f"Realized case with ranks {ranks}")
    return ComplexRealization(case.n, ranks, monodromies, tuple(differentials))


def rational_rank(m: ImmutableMatrix) -> int:
    if 0 in m.shape:
        return 0
    return int(Matrix(m).rank())


def _torsion_factors(m: ImmutableMatrix) -> Tuple[int, ...]:
    """Invariant factors > 1 of an integer matrix (Smith normal form by elementary reduction)."""
    if 0 in m.shape:
        return ()
    factors = invariant_factors(Matrix(m), domain=ZZ)
    return tuple(sorted(abs(int(f)) for f in factors if abs(int(f)) > 1))


def _kernel_basis(m: ImmutableMatrix) -> List[Matrix]:
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [Matrix.eye(m.cols)[:, k] for k in range(m.cols)]
    return Matrix(m).nullspace()


def _image_basis(m: ImmutableMatrix) -> List[Matrix]:
    if 0 in m.shape:
        return []
    return Matrix(m).columnspace()


def _restricted_trace(a: ImmutableMatrix, basis: List[Matrix]):
    """Trace of `a` on the invariant subspace spanned by `basis`, over the rationals."""
    if not basis:
        return 0
    k = Matrix.hstack(*basis)
    restricted = (k.T * k).inv() * k.T * Matrix(a) * k
    return restricted.trace()


def _charpoly(a: ImmutableMatrix) -> IntPolynomial:
    if a.rows == 0:
        return IntPolynomial((1,))
    return IntPolynomial(tuple(int(c) for c in reversed(Matrix(a).charpoly(T).all_coeffs())))


@dataclass
class VerificationReport:
    failures: List[str] = field(default_factory=list)
    betti: Dict[int, int] = field(default_factory=dict)
    torsion: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    differential_ranks: Dict[int, int] = field(default_factory=dict)
    charpolys: Dict[int, str] = field(default_factory=dict)
    lefschetz: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "failures": list(self.failures),
            "betti": dict(self.betti),
            "torsion": {k: list(v) for k, v in self.torsion.items()},
            "differential_ranks": dict(self.differential_ranks),
            "charpolys": dict(self.charpolys),
            "lefschetz": self.lefschetz,
        }


def _check_shapes(r: ComplexRealization) -> List[str]:
    problems = []
    if not r.ranks:
        return ["realization has no levels"]
    if len(r.monodromies) != len(r.ranks):
        problems.append(f"{len(r.monodromies)} monodromy matrices for {len(r.ranks)} levels")
    if len(r.differentials) != len(r.ranks) - 1:
        problems.append(f"{len(r.differentials)} differentials for {len(r.ranks)} levels")
    if problems:
        return problems
    for j, a in enumerate(r.monodromies):
        if a.shape != (r.ranks[j], r.ranks[j]):
            problems.append(f"A_{j} has shape {a.shape}, expected {(r.ranks[j], r.ranks[j])}")
    for j in range(1, r.s + 1):
        d = r.differentials[j - 1]
        if d.shape != (r.ranks[j - 1], r.ranks[j]):
            problems.append(f"D_{j} has shape {d.shape}, expected {(r.ranks[j - 1], r.ranks[j])}")
    for name, m in [(f"A_{j}", a) for j, a in enumerate(r.monodromies)] + [
        (f"D_{j + 1}", d) for j, d in enumerate(r.differentials)
    ]:
        if not all(getattr(e, "is_integer", False) for e in m):
            problems.append(f"{name} has non-integer entries")
    return problems


def verify(
    r: ComplexRealization,
    scenario: Optional[Scenario] = None,
    case: Optional[CaseProfile] = None,
) -> VerificationReport:
    """
    Check a realization from scratch: d o d = 0, equivariance, unimodular monodromy,
    cyclotomic characteristic polynomials, traces against the link data, rational
    Betti numbers against the case, and integral torsion of the cohomology.
    """
    report = VerificationReport()
    report.failures.extend(_check_shapes(r))
    if report.failures:
        return report

    n, s = r.n, r.s
    for j in range(1, s):
        product = r.differential(j) * r.differential(j + 1)
        if not product.is_zero_matrix:
            report.failures.append(f"D_{j} D_{j + 1} != 0")

    equivariant = True
    for j in range(1, s + 1):
        d = r.differential(j)
        if r.monodromies[j - 1] * d != d * r.monodromies[j]:
            equivariant = False
            report.failures.append(f"A_{j - 1} D_{j} != D_{j} A_{j}")

    for j, a in enumerate(r.monodromies):
        if a.rows == 0:
            report.charpolys[j] = "1"
            continue
        determinant = int(a.det())
        if abs(determinant) != 1:
            report.failures.append(f"det A_{j} = {determinant} is not a unit")
        poly = _charpoly(a)
        factors, leftover = cyclotomic_part(poly)
        report.charpolys[j] = factors.render() if leftover.degree == 0 else poly.render()
        if leftover.degree != 0:
            report.failures.append(f"char A_{j} = {poly.render()} is not a product of cyclotomic polynomials")

    if scenario is not None:
        traces = lm_traces(scenario)
        if scenario.s != s:
            report.failures.append(f"realization has s = {s}, scenario has s = {scenario.s}")
        else:
            for j, a in enumerate(r.monodromies):
                if int(a.trace()) != traces[j]:
                    report.failures.append(f"trace A_{j} = {int(a.trace())}, expected {traces[j]}")
                expected = scenario.le_numbers[j]
                if expected is not None and expected != r.ranks[j]:
                    report.failures.append(f"rank M^{j} = {r.ranks[j]}, scenario says lambda^{j} = {expected}")

    for j in range(1, s + 1):
        report.differential_ranks[j] = rational_rank(r.differential(j))
    hopf = 0
    for j in range(s + 1):
        degree = n - j
        rank_out = report.differential_ranks.get(j, 0)
        rank_in = report.differential_ranks.get(j + 1, 0)
        report.betti[degree] = r.ranks[j] - rank_out - rank_in
        report.torsion[degree] = _torsion_factors(r.differential(j + 1))
        if equivariant:
            a = r.monodromies[j]
            on_cohomology = _restricted_trace(a, _kernel_basis(r.differential(j))) - _restricted_trace(
                a, _image_basis(r.differential(j + 1))
            )
            hopf += (-1) ** degree * on_cohomology
    report.betti = dict(sorted(report.betti.items()))
    report.torsion = dict(sorted(report.torsion.items()))

    euler_chain = sum((-1) ** (n - j) * r.ranks[j] for j in range(s + 1))
    euler_cohomology = sum((-1) ** k * b for k, b in report.betti.items())
    if euler_chain != euler_cohomology:
        report.failures.append(f"Euler characteristic {euler_chain} != {euler_cohomology} on cohomology")

    lefschetz_chain = sum((-1) ** (n - j) * int(r.monodromies[j].trace()) for j in range(s + 1))
    report.lefschetz = lefschetz_chain
    if equivariant and hopf != lefschetz_chain:
        report.failures.append(f"Hopf trace audit failed: {lefschetz_chain} on chains, {hopf} on cohomology")

    if case is not None:
        expected_betti = betti_of_case(case, case.n)
        for degree, value in expected_betti.items():
            if isinstance(value, Lambda0Affine):
                value = value.evaluate(r.ranks[0])
            if report.betti.get(degree) != value:
                report.failures.append(f"b_{degree} = {report.betti.get(degree)}, case expects {value}")

    if report.failures:
        logger.debug(f"Verification found {len(report.failures)} problem(s)")
    return report


def realization_to_dict(r: ComplexRealization) -> Dict:
    levels = []
    for j in range(r.s + 1):
        levels.append(
            {
                "level": j,
                "rank": r.ranks[j],
                "monodromy": matrix_rows(r.monodromies[j]),
                "differential": matrix_rows(r.differentials[j - 1]) if j >= 1 else None,
            }
        )
    return {"n": r.n, "ranks": list(r.ranks), "levels": levels}


def realization_from_dict(data: Dict) -> ComplexRealization:
    n = parse_int(data["n"])
    ranks = tuple(parse_int(v) for v in data["ranks"])
    levels = sorted(data["levels"], key=lambda level: parse_int(level["level"]))
    if [parse_int(level["level"]) for level in levels] != list(range(len(ranks))):
        raise ValueError("levels must be numbered 0..s without gaps")
    monodromies = []
    differentials = []
    for j, level in enumerate(levels):
        rows = [[parse_int(v) for v in row] for row in level["monodromy"]]
        monodromies.append(int_matrix(ranks[j], ranks[j], rows))
        if j >= 1:
            rows = [[parse_int(v) for v in row] for row in level["differential"]]
            differentials.append(int_matrix(ranks[j - 1], ranks[j], rows))
    return ComplexRealization(n, ranks, tuple(monodromies), tuple(differentials))
