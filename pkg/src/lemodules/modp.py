"""
Mod-p Lê module complexes and Universal Coefficient bookkeeping.

Reducing the Lê module complex modulo p gives a complex of (Z/p)^(lambda^j) whose
cohomology is that of the Milnor fiber with Z/p coefficients. By the Universal
Coefficient Theorem

    dim H^k(F; Z/p) = b_k + t_k + t_(k+1),

where t_k counts the p-primary cyclic summands of H^k(F; Z). Since a complex of
(Z/p)^(lambda^j) has at most lambda^j dimensions of cohomology at each spot, this bounds
the p-torsion by the Lê numbers.
"""
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import GF, ImmutableMatrix, Matrix, ilcm, isprime
from sympy.polys.matrices import DomainMatrix

from lemodules import logger
from lemodules.realization import ComplexRealization, VerificationReport, int_matrix
from lemodules.scenario import Scenario, ScenarioFlag


def _check_prime(p: int):
    if not isprime(p):
        raise ValueError(f"{p} is not a prime")


@dataclass(frozen=True)
class TorsionProfile:
    p: int
    # degree -> number of p-primary cyclic summands of the integral cohomology
    counts: Tuple[Tuple[int, int], ...] = ()

    def t(self, k: int) -> int:
        return dict(self.counts).get(k, 0)

    @classmethod
    def from_dict(cls, p: int, counts: Dict[int, int]) -> "TorsionProfile":
        if any(v < 0 for v in counts.values()):
            raise ValueError("torsion counts must be nonnegative")
        return cls(p, tuple(sorted((k, v) for k, v in counts.items() if v)))

    @classmethod
    def from_report(cls, report: VerificationReport, p: int) -> "TorsionProfile":
        _check_prime(p)
        counts = {degree: sum(1 for f in factors if f % p == 0) for degree, factors in report.torsion.items()}
        return cls.from_dict(p, counts)


def uct_dimension(betti: Dict[int, int], torsion: TorsionProfile, k: int) -> int:
    return betti.get(k, 0) + torsion.t(k) + torsion.t(k + 1)


@dataclass(frozen=True)
class TorsionInequality:
    """
    b + sum(t_k for k in degrees) <= lambda - forced_rank, read off level `level`.
    `forced_rank` is the known lower bound on the mod-p ranks of the two differentials
    at that level.
    """

    level: int
    betti_degree: int
    betti: int
    degrees: Tuple[int, ...]
    le_number: int
    forced_rank: int = 0

    @property
    def bound(self) -> int:
        """Upper bound on the sum of the torsion counts."""
        return self.le_number - self.betti - self.forced_rank

    def render(self, n: Optional[int] = None) -> str:
        def name(k):
            if n is None:
                return f"t_{k}"
            return "t_n" if k == n else f"t_(n{k - n:+d})"

        lhs = " + ".join(name(k) for k in self.degrees) if self.degrees else "0"
        # torsion counts are nonnegative, so a zero bound pins them
        relation = "=" if self.bound == 0 else "<="
        return f"{lhs} {relation} {self.bound}"

    def as_dict(self) -> Dict:
        return {
            "level": self.level,
            "degrees": list(self.degrees),
            "bound": self.bound,
            "le_number": self.le_number,
            "betti": self.betti,
            "forced_rank": self.forced_rank,
        }


def forced_modp_ranks(scenario: Scenario, lambda0: Optional[int] = None) -> Dict[int, int]:
    """
    Lower bounds on rank(d_j mod p), keyed by j, that hold for every prime. The swing
    flag says d_1 stays nonzero mod every prime unless lambda^0 = 0.
    """
    lambda0 = scenario.le_numbers[0] if lambda0 is None else lambda0
    if scenario.s == 1 and scenario.has_flag(ScenarioFlag.SWING) and lambda0:
        return {1: 1}
    return {}


def torsion_bounds(
    le_numbers: Sequence[int],
    betti: Dict[int, int],
    p: int,
    n: int,
    min_ranks: Optional[Dict[int, int]] = None,
) -> List[TorsionInequality]:
    """
    One inequality per level j: b_(n-j) + t_(n-j) + t_(n-j+1) <= lambda^j - r_j - r_(j+1),
    where r_j is a known lower bound on rank(d_j mod p) from `min_ranks` (0 if absent)
    and t_(n+1) is dropped since there is no cohomology above degree n.
    """
    _check_prime(p)
    min_ranks = min_ranks or {}
    inequalities = []
    for j, le_number in enumerate(le_numbers):
        if le_number is None:
            raise ValueError(f"lambda^{j} must be concrete to bound torsion")
        degree = n - j
        degrees = tuple(k for k in (degree, degree + 1) if k <= n)
        forced = min_ranks.get(j, 0) + min_ranks.get(j + 1, 0)
        inequality = TorsionInequality(j, degree, betti.get(degree, 0), degrees, le_number, forced)
        if inequality.bound < 0:
            logger.warning(f"b_{degree} = {inequality.betti} leaves no room below lambda^{j} = {le_number}")
        inequalities.append(inequality)
    return inequalities


def torsion_upper_bounds(inequalities: Sequence[TorsionInequality]) -> Dict[int, int]:
    """Best individual bound on each t_k implied by the inequalities."""
    bounds: Dict[int, int] = {}
    for inequality in inequalities:
        for k in inequality.degrees:
            bounds[k] = min(bounds.get(k, inequality.bound), inequality.bound)
    return dict(sorted(bounds.items()))


def rank_mod_p(m: ImmutableMatrix, p: int) -> int:
    if 0 in m.shape:
        return 0
    return int(DomainMatrix.from_Matrix(Matrix(m)).convert_to(GF(p)).rank())


def reduce_and_rank(r: ComplexRealization, p: int) -> Dict[int, int]:
    """Dimensions over Z/p of the cohomology of the reduced complex, keyed by degree."""
    _check_prime(p)
    ranks = {j: rank_mod_p(r.differential(j), p) for j in range(r.s + 2)}
    return {r.n - j: r.ranks[j] - ranks[j] - ranks[j + 1] for j in range(r.s + 1)}


def modp_traces(r: ComplexRealization, p: int) -> Tuple[int, ...]:
    _check_prime(p)
    return tuple(int(a.trace()) % p for a in r.monodromies)


def _integer_kernel(m: Matrix) -> List[List[int]]:
    """Integer vectors spanning the rational kernel of m (denominators cleared)."""
    if m.rows == 0:
        return [[int(i == k) for i in range(m.cols)] for k in range(m.cols)]
    vectors = []
    for v in m.nullspace():
        scale = ilcm(1, *[term.q for term in v])
        vectors.append([int(term * scale) for term in v])
    return vectors


def random_complex(
    rng: random.Random,
    ranks: Sequence[int],
    n: Optional[int] = None,
    entry_range: Tuple[int, int] = (-5, 5),
    attempts: int = 20,
) -> ComplexRealization:
    """
    A random integer complex with identity monodromy and entries in `entry_range`. D_1 is
    uniformly random; each column of a higher D_(j+1) is a small integer combination of
    kernel vectors of D_j, so d o d = 0. Columns that leave the range are resampled, and
    become zero after `attempts` failures.
    """
    low, high = entry_range
    s = len(ranks) - 1
    n = s if n is None else n
    differentials = []
    for j in range(1, s + 1):
        rows, cols = ranks[j - 1], ranks[j]
        if j == 1 or 0 in (rows, cols):
            entries = [[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)]
        else:
            previous = differentials[-1]
            kernel = _integer_kernel(Matrix(previous)) if previous.cols else []
            entries = [[0] * cols for _ in range(rows)]
            for k in range(cols):
                if not kernel:
                    break
                for _ in range(attempts):
                    coefficients = [rng.randint(-1, 1) for _ in kernel]
                    column = [sum(c * vector[i] for c, vector in zip(coefficients, kernel)) for i in range(rows)]
                    if all(low <= entry <= high for entry in column):
                        for i in range(rows):
                            entries[i][k] = column[i]
                        break
        differentials.append(int_matrix(rows, cols, entries))
    monodromies = tuple(int_matrix(r, r, [[int(i == k) for k in range(r)] for i in range(r)]) for r in ranks)
    return ComplexRealization(n, tuple(ranks), monodromies, tuple(differentials))
