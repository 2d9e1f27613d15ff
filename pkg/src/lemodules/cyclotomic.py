"""
Exact cyclotomic arithmetic over the integers.

Characteristic polynomials of Lê-Milnor monodromies are products of cyclotomic
polynomials, so they are carried around as a `CyclotomicMultiset` (multiplicity of
each Phi_d) and only expanded to an `IntPolynomial` for rendering or for building
companion matrices.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from sympy import Poly, divisors, mobius, symbols, totient

from lemodules import logger
from lemodules.config import MAX_ENUMERATION_DEGREE


T = symbols("t")


@dataclass(frozen=True)
class IntPolynomial:
    # constant term first
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = [int(c) for c in self.coefficients]
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            coefficients = [0]
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coefficients)), T, domain="ZZ")

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    @property
    def degree(self) -> int:
        if self.is_zero:
            return -1
        return len(self.coefficients) - 1

    @property
    def monic(self) -> bool:
        return self.coefficients[-1] == 1

    @property
    def trace(self) -> int:
        """Sum of the roots of a monic polynomial, i.e. minus the second-highest coefficient."""
        if not self.monic:
            raise ValueError("trace is only defined for monic polynomials")
        if self.degree < 1:
            return 0
        return -self.coefficients[-2]

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() * other.to_sympy())

    def __pow__(self, exponent: int) -> "IntPolynomial":
        return IntPolynomial.from_sympy(self.to_sympy() ** exponent)

    def __divmod__(self, other: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        if not other.monic:
            raise ValueError("division is only exact over the integers by monic polynomials")
        quotient, remainder = self.to_sympy().div(other.to_sympy())
        return IntPolynomial.from_sympy(quotient), IntPolynomial.from_sympy(remainder)

    def render(self) -> str:
        terms: List[Tuple[str, str]] = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if power == 0:
                body = str(magnitude)
            else:
                variable = "t" if power == 1 else f"t^{power}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            terms.append(("-" if coefficient < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        text = f"-{first_body}" if first_sign == "-" else first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.render()


def euler_phi(d: int) -> int:
    return int(totient(d))


def moebius_mu(d: int) -> int:
    return int(mobius(d))


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPolynomial:
    """Phi_d, obtained by dividing t^d - 1 by Phi_e for every proper divisor e of d."""
    if d < 1:
        raise ValueError("The argument to cyclotomic_poly must be positive.")

    poly = Poly(T**d - 1, T, domain="ZZ")
    for e in divisors(d):
        if e == d:
            continue
        poly, remainder = poly.div(cyclotomic_poly(int(e)).to_sympy())
        if not remainder.is_zero:
            raise ArithmeticError(f"Phi_{e} does not divide t^{d} - 1")
    return IntPolynomial.from_sympy(poly)


@dataclass(frozen=True)
class CyclotomicMultiset:
    """Multiplicities m_d of the cyclotomic factors Phi_d, kept sorted by d."""

    mults: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for d, m in self.mults:
            d, m = int(d), int(m)
            if d < 1:
                raise ValueError(f"cyclotomic index must be positive, got {d}")
            if m < 0:
                raise ValueError(f"multiplicity of Phi_{d} must be nonnegative, got {m}")
            merged[d] = merged.get(d, 0) + m
        object.__setattr__(self, "mults", tuple(sorted((d, m) for d, m in merged.items() if m > 0)))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "CyclotomicMultiset":
        return cls(tuple(mapping.items()))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.mults)

    @property
    def degree(self) -> int:
        return sum(m * euler_phi(d) for d, m in self.mults)

    @property
    def trace(self) -> int:
        return sum(m * moebius_mu(d) for d, m in self.mults)

    def __add__(self, other: "CyclotomicMultiset") -> "CyclotomicMultiset":
        return CyclotomicMultiset(self.mults + other.mults)

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        return self.mults

    def render(self) -> str:
        if not self.mults:
            return "1"
        return "·".join(f"Φ{d}" if m == 1 else f"Φ{d}^{m}" for d, m in self.mults)

    def __str__(self):
        return self.render()


def expand(ms: CyclotomicMultiset) -> IntPolynomial:
    poly = IntPolynomial((1,))
    for d, m in ms.mults:
        poly = poly * cyclotomic_poly(d) ** m
    return poly


def search_bound(degree: int) -> int:
    """Every d with phi(d) <= degree satisfies d <= 2 * degree**2, since phi(d) >= sqrt(d / 2)."""
    return max(2, 2 * degree * degree)


@lru_cache(maxsize=None)
def _candidates(degree: int) -> Tuple[Tuple[int, int, int], ...]:
    found = []
    for d in range(1, search_bound(degree) + 1):
        phi = euler_phi(d)
        if phi <= degree:
            found.append((d, phi, moebius_mu(d)))
    return tuple(found)


@lru_cache(maxsize=None)
def _enumerate(degree: int, trace: int) -> FrozenSet[CyclotomicMultiset]:
    candidates = _candidates(degree)
    results = set()

    def extend(start: int, remaining_degree: int, remaining_trace: int, chosen: Tuple[Tuple[int, int], ...]):
        if remaining_degree == 0:
            if remaining_trace == 0:
                results.add(CyclotomicMultiset(chosen))
            return
        # each factor contributes |mu(d)| <= phi(d)
        if abs(remaining_trace) > remaining_degree:
            return
        for index in range(start, len(candidates)):
            d, phi, mu = candidates[index]
            if phi > remaining_degree:
                continue
            for m in range(1, remaining_degree // phi + 1):
                extend(index + 1, remaining_degree - m * phi, remaining_trace - m * mu, chosen + ((d, m),))

    extend(0, degree, trace, ())
    return frozenset(results)


def enumerate_charpolys(degree: int, trace: int) -> FrozenSet[CyclotomicMultiset]:
    """All products of cyclotomic polynomials with the given degree and sum of roots."""
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    if abs(trace) > degree:
        return frozenset()
    if degree > MAX_ENUMERATION_DEGREE:
        logger.warning(f"Enumerating cyclotomic products of degree {degree}; this may take a while")
    return _enumerate(degree, trace)


def sorted_charpolys(degree: int, trace: int) -> List[CyclotomicMultiset]:
    return sorted(enumerate_charpolys(degree, trace), key=CyclotomicMultiset.sort_key)


@dataclass(frozen=True)
class DegreeConstraint:
    """
    A set of admissible nonnegative integers: every value from `least` up to `upper`
    (unbounded when `upper` is None) except those in `excluded`. `least=None` is the
    empty set.
    """

    least: Optional[int]
    excluded: Tuple[int, ...] = ()
    upper: Optional[int] = None

    @classmethod
    def infeasible(cls) -> "DegreeConstraint":
        return cls(None)

    @classmethod
    def exactly(cls, value: int) -> "DegreeConstraint":
        return cls(value, (), value)

    @property
    def feasible(self) -> bool:
        return self.least is not None

    @property
    def is_exact(self) -> bool:
        return self.feasible and self.upper == self.least

    def admits(self, value: int) -> bool:
        if not self.feasible or value < self.least:
            return False
        if self.upper is not None and value > self.upper:
            return False
        return value not in self.excluded

    def shift(self, offset: int) -> "DegreeConstraint":
        if not self.feasible:
            return self
        return DegreeConstraint(
            self.least + offset,
            tuple(e + offset for e in self.excluded),
            None if self.upper is None else self.upper + offset,
        )

    def pin(self, value: int) -> "DegreeConstraint":
        return DegreeConstraint.exactly(value) if self.admits(value) else DegreeConstraint.infeasible()

    def render(self, symbol: str = "D") -> str:
        if not self.feasible:
            return "infeasible"
        if self.is_exact:
            return f"{symbol} = {self.least}"
        # a lone admissible value followed by a gap reads better as a disjunction
        if len(self.excluded) == 1 and self.excluded[0] == self.least + 1 and self.upper is None:
            return f"{symbol} = {self.least} or {symbol} >= {self.least + 2}"
        text = f"{symbol} >= {self.least}"
        if self.upper is not None:
            text += f", {symbol} <= {self.upper}"
        for value in self.excluded:
            text += f", {symbol} != {value}"
        return text

    def as_dict(self) -> Dict:
        return {"least": self.least, "excluded": list(self.excluded), "upper": self.upper}


def feasible_degree_trace(degree: Optional[int], trace: int) -> DegreeConstraint:
    """
    Degrees compatible with a quasi-unipotent automorphism of the given trace.

    For a concrete degree this is that degree or nothing. For an unknown degree (None)
    it is {0 if trace == 0} together with every D >= max(1, |trace|), minus D = 1 when
    the trace is 0.
    """
    if degree is not None:
        if enumerate_charpolys(degree, trace):
            return DegreeConstraint.exactly(degree)
        return DegreeConstraint.infeasible()
    if trace == 0:
        return DegreeConstraint(0, (1,))
    return DegreeConstraint(abs(trace))


def canonical_charpoly(degree: int, trace: int) -> Optional[CyclotomicMultiset]:
    """A deterministic admissible multiset of the given degree and trace, or None."""
    if not feasible_degree_trace(None, trace).admits(degree):
        return None
    sign_index = 1 if trace >= 0 else 2
    extremal = abs(trace)
    rest = degree - extremal
    mults: Dict[int, int] = {sign_index: extremal}
    if rest == 1:
        # trade one Phi_{1|2} for Phi_6 (trace 1) or Phi_3 (trace -1)
        mults[sign_index] -= 1
        mults[6 if trace > 0 else 3] = 1
    elif rest % 2:
        mults[1] = mults.get(1, 0) + 1
        mults[3] = 1
        mults[4] = (rest - 3) // 2
    else:
        mults[4] = rest // 2
    return CyclotomicMultiset.from_dict(mults)


def cyclotomic_part(poly: IntPolynomial) -> Tuple[CyclotomicMultiset, IntPolynomial]:
    """
    Divide out cyclotomic factors of a monic integer polynomial.

    Returns the multiset found and the leftover cofactor; the polynomial is a
    product of cyclotomics exactly when the leftover is 1.
    """
    if not poly.monic:
        raise ValueError(f"expected a monic polynomial, got {poly}")
    remaining = poly
    found: Dict[int, int] = {}
    for d in range(1, search_bound(poly.degree) + 1):
        if remaining.degree < 1:
            break
        phi_d = cyclotomic_poly(d)
        if phi_d.degree > remaining.degree:
            continue
        while remaining.degree >= phi_d.degree:
            quotient, remainder = divmod(remaining, phi_d)
            if not remainder.is_zero:
                break
            remaining = quotient
            found[d] = found.get(d, 0) + 1
    return CyclotomicMultiset.from_dict(found), remaining
