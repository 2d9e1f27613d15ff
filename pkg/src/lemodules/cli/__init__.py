from abc import ABC, abstractmethod
from argparse import ArgumentParser
from typing import Dict, List, Optional, Tuple

from lemodules.config import MAX_SWEEP
from lemodules.params import load_scenario
from lemodules.scenario import Scenario
from lemodules.utils import InvalidArgumentError


class BaseLeModulesCommand(ABC):
    @staticmethod
    @abstractmethod
    def register_subcommand(parser: ArgumentParser):
        raise NotImplementedError()

    @abstractmethod
    def run(self) -> int:
        raise NotImplementedError()


SCENARIO_ARGS = [
    {
        "arg": "file",
        "help": "Scenario file (JSON)",
        "type": str,
    },
    {
        "arg": "--lambda",
        "help": "Set a Lê number, J=V (repeatable)",
        "type": str,
        "action": "append",
        "dest": "le_numbers",
        "default": None,
    },
    {
        "arg": "--json",
        "help": "Print the structured report instead of text",
        "action": "store_true",
    },
]


def add_arguments(parser: ArgumentParser, arg_list: List[Dict]):
    for arg in arg_list:
        kwargs = {k: v for k, v in arg.items() if k not in ("arg", "alias")}
        names = [arg["arg"]] + arg.get("alias", [])
        parser.add_argument(*names, **kwargs)


def parse_assignment(text: str) -> Tuple[int, int]:
    """Parse `J=V` into (J, V)."""
    key, sep, value = text.partition("=")
    if not sep:
        raise InvalidArgumentError(f"expected J=V, got {text!r}")
    try:
        return int(key), int(value)
    except ValueError:
        raise InvalidArgumentError(f"expected integers in J=V, got {text!r}")


def parse_sweep(text: str) -> Tuple[int, range]:
    """Parse `J=A..B` into (J, range(A, B + 1))."""
    key, sep, bounds = text.partition("=")
    low, dots, high = bounds.partition("..")
    if not sep or not dots:
        raise InvalidArgumentError(f"expected J=A..B, got {text!r}")
    try:
        j, low, high = int(key), int(low), int(high)
    except ValueError:
        raise InvalidArgumentError(f"expected integers in J=A..B, got {text!r}")
    if low > high:
        raise InvalidArgumentError(f"empty sweep range {low}..{high}")
    if high - low + 1 > MAX_SWEEP:
        raise InvalidArgumentError(f"sweep of {high - low + 1} values exceeds LEMODULES_MAX_SWEEP={MAX_SWEEP}")
    return j, range(low, high + 1)


def scenario_from_args(path: str, assignments: Optional[List[str]]) -> Scenario:
    scenario = load_scenario(path)
    for text in assignments or []:
        j, value = parse_assignment(text)
        scenario = scenario.with_le_number(j, value)
    return scenario
