import json
from typing import Any


# integers beyond this are written as decimal strings in JSON output
MAX_SAFE_INTEGER = 2**53 - 1


class LeModulesError(ValueError):
    code = "LE_MODULES_ERROR"

    def __init__(self, message: str):
        super().__init__(f"{self.code}: {message}")
        self.message = message


class DimensionError(LeModulesError):
    code = "DIMENSION_ERROR"


class LinkError(LeModulesError):
    code = "LINK_ERROR"


class NegativeLeNumberError(LeModulesError):
    code = "NEGATIVE_LE_NUMBER"


class ModelMismatchError(LeModulesError):
    code = "MODEL_MISMATCH"


class UnsupportedSymbolicError(LeModulesError):
    code = "UNSUPPORTED_SYMBOLIC"


class ConstraintViolationError(LeModulesError):
    code = "CONSTRAINT_VIOLATION"


class ScenarioFileError(LeModulesError):
    code = "SCENARIO_FILE_ERROR"


class InvalidArgumentError(LeModulesError):
    code = "INVALID_ARGUMENT"


def jsonable(value: Any) -> Any:
    """Recursively convert a report payload to plain JSON types, big integers as strings."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        if abs(value) > MAX_SAFE_INTEGER:
            return str(value)
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    # sympy integers and similar
    return int(value)


def dump_json(payload: Any) -> str:
    return json.dumps(jsonable(payload), indent=4, sort_keys=False, ensure_ascii=False)


def parse_int(value: Any) -> int:
    """Inverse of `jsonable` for a single integer."""
    if isinstance(value, bool):
        raise ValueError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value)
    raise ValueError(f"expected an integer, got {value!r}")
