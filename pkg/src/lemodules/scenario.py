"""
Topological input of an analysis: dimensions, Euler characteristics of the complex
links of the critical locus, Lê numbers and user-asserted constraint flags.

Unknown Lê numbers are represented by None.
"""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from lemodules import logger
from lemodules.utils import DimensionError, LinkError, ModelMismatchError, NegativeLeNumberError


class ScenarioFlag(str, Enum):
    # the top differential d_s is not the zero map
    TOP_DIFFERENTIAL_NONZERO = "top_differential_nonzero"
    # s = 1: either lambda^0 = 0, or d_1 != 0 integrally and modulo every prime
    SWING = "swing"
    # the critical locus is a local complete intersection with isolating coordinates
    SIGMA_LCI = "sigma_lci"

    @classmethod
    def parse(cls, value: str) -> "ScenarioFlag":
        try:
            return cls(value.strip().lower())
        except ValueError:
            choices = ", ".join(flag.value for flag in cls)
            raise ValueError(f"unknown flag {value!r}, expected one of: {choices}")


class LinkModelKind(str, Enum):
    SMOOTH = "smooth"
    BRANCH_CURVE = "branch_curve"
    CONE_A1 = "cone_a1"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class LinkModel:
    kind: LinkModelKind
    branches: Optional[int] = None
    chis: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind == LinkModelKind.BRANCH_CURVE and (self.branches is None or self.branches < 1):
            raise ValueError("branch_curve needs a positive number of branches")
        if self.kind == LinkModelKind.EXPLICIT and self.chis is None:
            raise ValueError("explicit link model needs a list of Euler characteristics")

    @classmethod
    def smooth(cls) -> "LinkModel":
        return cls(LinkModelKind.SMOOTH)

    @classmethod
    def branch_curve(cls, branches: int) -> "LinkModel":
        return cls(LinkModelKind.BRANCH_CURVE, branches=branches)

    @classmethod
    def cone_a1(cls) -> "LinkModel":
        return cls(LinkModelKind.CONE_A1)

    @classmethod
    def explicit(cls, chis) -> "LinkModel":
        return cls(LinkModelKind.EXPLICIT, chis=tuple(int(c) for c in chis))

    @classmethod
    def from_json(cls, value: Any) -> "LinkModel":
        """Parse the `link_model` entry of a scenario file."""
        if isinstance(value, str):
            kind = value.strip().lower()
            if kind == LinkModelKind.SMOOTH.value:
                return cls.smooth()
            if kind == LinkModelKind.CONE_A1.value:
                return cls.cone_a1()
            raise ValueError(f"unknown link model {value!r}")
        if isinstance(value, dict) and len(value) == 1:
            (key, argument), = value.items()
            if key == LinkModelKind.BRANCH_CURVE.value:
                if isinstance(argument, bool) or not isinstance(argument, int):
                    raise ValueError("branch_curve expects an integer number of branches")
                return cls.branch_curve(argument)
            if key == LinkModelKind.EXPLICIT.value:
                if not isinstance(argument, list) or any(
                    isinstance(c, bool) or not isinstance(c, int) for c in argument
                ):
                    raise ValueError("explicit expects a list of integers")
                return cls.explicit(argument)
            raise ValueError(f"unknown link model {key!r}")
        raise ValueError(f"link model must be a string or a one-key object, got {value!r}")

    def to_json(self) -> Any:
        if self.kind == LinkModelKind.BRANCH_CURVE:
            return {"branch_curve": self.branches}
        if self.kind == LinkModelKind.EXPLICIT:
            return {"explicit": list(self.chis)}
        return self.kind.value

    @property
    def multiplicity(self) -> Optional[int]:
        """Multiplicity of the critical locus at the origin, where the model determines it."""
        if self.kind == LinkModelKind.SMOOTH:
            return 1
        if self.kind == LinkModelKind.CONE_A1:
            return 2
        return None


@dataclass(frozen=True)
class Scenario:
    n: int
    s: int
    # chi(L^0), ..., chi(L^s); chi(L^-1) = 0 is implicit
    link_chis: Tuple[int, ...]
    # lambda^0, ..., lambda^s, None where unknown
    le_numbers: Tuple[Optional[int], ...]
    flags: FrozenSet[ScenarioFlag] = frozenset()

    def chi(self, k: int) -> int:
        if k == -1:
            return 0
        return self.link_chis[k]

    def le_number(self, j: int) -> Optional[int]:
        if j > self.s:
            return 0
        return self.le_numbers[j]

    def has_flag(self, flag: ScenarioFlag) -> bool:
        return flag in self.flags

    def with_le_number(self, j: int, value: Optional[int]) -> "Scenario":
        if not 0 <= j <= self.s:
            raise DimensionError(f"Lê number index {j} outside 0..{self.s}")
        numbers = list(self.le_numbers)
        numbers[j] = value
        return validate_scenario(replace(self, le_numbers=tuple(numbers)))

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "s": self.s,
            "link_model": {"explicit": list(self.link_chis)},
            "le_numbers": list(self.le_numbers),
            "flags": sorted(flag.value for flag in self.flags),
        }


def validate_scenario(raw: Scenario) -> Scenario:
    if raw.n < 0 or raw.s < 0:
        raise DimensionError(f"n and s must be nonnegative, got n={raw.n}, s={raw.s}")
    if raw.s > raw.n:
        raise DimensionError(f"critical locus dimension s={raw.s} exceeds n={raw.n}")
    if len(raw.link_chis) != raw.s + 1:
        raise DimensionError(f"expected {raw.s + 1} link Euler characteristics, got {len(raw.link_chis)}")
    if len(raw.le_numbers) != raw.s + 1:
        raise DimensionError(f"expected {raw.s + 1} Lê numbers, got {len(raw.le_numbers)}")
    if raw.link_chis[raw.s] != 1:
        raise LinkError(f"chi(L^{raw.s}) must be 1 (a cone is contractible), got {raw.link_chis[raw.s]}")
    for j, value in enumerate(raw.le_numbers):
        if value is not None and value < 0:
            raise NegativeLeNumberError(f"lambda^{j} = {value} is negative")
    return raw


def link_chis_from_model(model: LinkModel, s: int) -> List[int]:
    if model.kind == LinkModelKind.SMOOTH:
        return [1] * (s + 1)
    if model.kind == LinkModelKind.BRANCH_CURVE:
        if s != 1:
            raise ModelMismatchError(f"branch_curve needs s = 1, got s = {s}")
        return [model.branches, 1]
    if model.kind == LinkModelKind.CONE_A1:
        if s != 2:
            raise ModelMismatchError(f"cone_a1 needs s = 2, got s = {s}")
        # L^0 ~ 2 points, L^1 ~ circle, L^2 ~ point
        return [2, 0, 1]
    chis = list(model.chis)
    if len(chis) != s + 1:
        raise ModelMismatchError(f"explicit model has {len(chis)} entries, s = {s} needs {s + 1}")
    if chis[s] != 1:
        raise LinkError(f"chi(L^{s}) must be 1, got {chis[s]}")
    return chis


def build_scenario(
    n: int,
    s: int,
    model: LinkModel,
    le_numbers: Optional[List[Optional[int]]] = None,
    flags=(),
) -> Scenario:
    chis = link_chis_from_model(model, s)
    if le_numbers is None:
        le_numbers = [None] * (s + 1)
    return validate_scenario(
        Scenario(
            n=n,
            s=s,
            link_chis=tuple(chis),
            le_numbers=tuple(le_numbers),
            flags=frozenset(flags),
        )
    )


def smooth_line_scenario(n: int, transversal_milnor: Optional[int] = None, swing: bool = True) -> Scenario:
    """
    Smooth one-dimensional critical locus met transversally by V(z_0): lambda^1 is the
    Milnor number of a transversal slice at a nearby point, lambda^0 is left unknown.
    """
    flags = [ScenarioFlag.SWING] if swing else []
    return build_scenario(n, 1, LinkModel.smooth(), [None, transversal_milnor], flags)


def a1_cone_scenario(n: int, normal_milnor: Optional[int] = None, lambda1: Optional[int] = None) -> Scenario:
    """
    Critical locus the cone V(x^2 + y^2 + z^2, w_1, ..., w_{n-2}); lambda^2 is the
    normal-slice Milnor number times the multiplicity 2 of the cone.
    """
    if n < 2:
        raise DimensionError(f"the A1 cone lives in n + 1 >= 3 variables, got n = {n}")
    model = LinkModel.cone_a1()
    lambda2 = None if normal_milnor is None else model.multiplicity * normal_milnor
    if lambda2 is None:
        logger.debug("normal-slice Milnor number not given, lambda^2 left unknown")
    return build_scenario(n, 2, model, [None, lambda1, lambda2], [ScenarioFlag.TOP_DIFFERENTIAL_NONZERO])
