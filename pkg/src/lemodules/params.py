import json
from typing import Any, List, Optional, Union

from pydantic import BaseModel, Field, StrictInt, conint, validator

from lemodules import logger
from lemodules.scenario import LinkModel, Scenario, ScenarioFlag, build_scenario
from lemodules.utils import ScenarioFileError


class LeModulesParams(BaseModel):
    def __init__(self, **data):
        super().__init__(**data)

        # Parameters not supplied by the user
        defaults = {f.name for f in self.__fields__.values() if f.default == self.__dict__[f.name]}
        supplied = set(data.keys())
        not_supplied = defaults - supplied
        if not_supplied:
            logger.debug(f"Parameters not supplied by user and set to default: {', '.join(sorted(not_supplied))}")

        unused = supplied - set(self.__fields__)
        if unused:
            logger.warning(f"Parameters supplied but not used: {', '.join(sorted(unused))}")


NonNegativeInt = conint(strict=True, ge=0)


class ScenarioParams(LeModulesParams):
    n: NonNegativeInt = Field(..., title="Ambient dimension index (f lives on an open set of C^(n+1))")
    s: NonNegativeInt = Field(..., title="Dimension of the critical locus at the origin")
    link_model: Union[str, dict] = Field("smooth", title="Link model of the critical locus")
    le_numbers: Optional[List[Optional[StrictInt]]] = Field(
        None, title="Lê numbers lambda^0..lambda^s, null if unknown"
    )
    flags: List[str] = Field([], title="Constraint flags")

    @validator("link_model")
    def check_link_model(cls, value):
        LinkModel.from_json(value)
        return value

    @validator("flags", each_item=True)
    def check_flag(cls, value):
        return ScenarioFlag.parse(value).value

    def to_scenario(self) -> Scenario:
        return build_scenario(
            n=self.n,
            s=self.s,
            model=LinkModel.from_json(self.link_model),
            le_numbers=self.le_numbers,
            flags=[ScenarioFlag(flag) for flag in self.flags],
        )

    @classmethod
    def from_scenario(cls, scenario: Scenario) -> "ScenarioParams":
        return cls(**scenario.to_json())


def load_scenario_params(path: str) -> ScenarioParams:
    with open(path, encoding="utf-8") as f:
        try:
            data: Any = json.load(f)
        except json.JSONDecodeError as e:
            raise ScenarioFileError(f"{path}: invalid JSON ({e})")
        except UnicodeDecodeError as e:
            raise ScenarioFileError(f"{path}: not UTF-8 text ({e.reason} at byte {e.start})")
    if not isinstance(data, dict):
        raise ScenarioFileError(f"{path}: scenario file must contain a JSON object")
    missing = [key for key in ("n", "s") if key not in data]
    if missing:
        raise ScenarioFileError(f"{path}: missing key(s) {', '.join(missing)}")
    return ScenarioParams(**data)


def load_scenario(path: str) -> Scenario:
    scenario = load_scenario_params(path).to_scenario()
    logger.debug(f"Loaded scenario from {path}: {scenario}")
    return scenario
