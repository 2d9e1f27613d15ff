import pytest

from lemodules.scenario import (
    LinkModel,
    LinkModelKind,
    Scenario,
    ScenarioFlag,
    a1_cone_scenario,
    build_scenario,
    link_chis_from_model,
    smooth_line_scenario,
    validate_scenario,
)
from lemodules.utils import DimensionError, LinkError, ModelMismatchError, NegativeLeNumberError


def test_link_chis_from_models():
    assert link_chis_from_model(LinkModel.smooth(), 3) == [1, 1, 1, 1]
    assert link_chis_from_model(LinkModel.branch_curve(4), 1) == [4, 1]
    assert link_chis_from_model(LinkModel.cone_a1(), 2) == [2, 0, 1]
    assert link_chis_from_model(LinkModel.explicit([5, -2, 1]), 2) == [5, -2, 1]


@pytest.mark.parametrize(
    "model, s",
    [
        (LinkModel.branch_curve(2), 2),
        (LinkModel.cone_a1(), 1),
        (LinkModel.explicit([1, 1]), 2),
    ],
)
def test_link_model_mismatch(model, s):
    with pytest.raises(ModelMismatchError):
        link_chis_from_model(model, s)


def test_explicit_link_must_end_in_a_point():
    with pytest.raises(LinkError):
        link_chis_from_model(LinkModel.explicit([1, 2]), 1)


@pytest.mark.parametrize(
    "value, kind",
    [
        ("smooth", LinkModelKind.SMOOTH),
        ("Cone_A1", LinkModelKind.CONE_A1),
        ({"branch_curve": 3}, LinkModelKind.BRANCH_CURVE),
        ({"explicit": [2, 0, 1]}, LinkModelKind.EXPLICIT),
    ],
)
def test_link_model_from_json(value, kind):
    model = LinkModel.from_json(value)
    assert model.kind == kind
    assert LinkModel.from_json(model.to_json()) == model


@pytest.mark.parametrize(
    "value",
    ["torus", {"branch_curve": "two"}, {"branch_curve": 0}, {"explicit": [1, "x"]}, {"a": 1, "b": 2}, 7],
)
def test_link_model_from_json_rejects(value):
    with pytest.raises(ValueError):
        LinkModel.from_json(value)


def test_multiplicity():
    assert LinkModel.smooth().multiplicity == 1
    assert LinkModel.cone_a1().multiplicity == 2
    assert LinkModel.branch_curve(3).multiplicity is None


def test_validation_errors():
    with pytest.raises(DimensionError):
        build_scenario(1, 2, LinkModel.smooth())
    with pytest.raises(DimensionError):
        build_scenario(3, 1, LinkModel.smooth(), le_numbers=[1, 2, 3])
    with pytest.raises(NegativeLeNumberError):
        build_scenario(3, 1, LinkModel.smooth(), le_numbers=[None, -1])
    with pytest.raises(LinkError):
        validate_scenario(Scenario(3, 1, (1, 0), (None, None)))
    with pytest.raises(DimensionError):
        validate_scenario(Scenario(3, 1, (1, 0, 1), (None, None)))


def test_error_messages_carry_codes():
    with pytest.raises(DimensionError) as excinfo:
        build_scenario(1, 2, LinkModel.smooth())
    assert str(excinfo.value).startswith("DIMENSION_ERROR: ")
    assert "exceeds" in excinfo.value.message


def test_scenario_accessors():
    scenario = build_scenario(3, 2, LinkModel.cone_a1(), [None, 3, 2], [ScenarioFlag.TOP_DIFFERENTIAL_NONZERO])
    assert scenario.chi(-1) == 0
    assert scenario.chi(0) == 2
    assert scenario.le_number(1) == 3
    assert scenario.le_number(3) == 0
    assert scenario.has_flag(ScenarioFlag.TOP_DIFFERENTIAL_NONZERO)
    assert not scenario.has_flag(ScenarioFlag.SWING)
    assert scenario.to_json() == {
        "n": 3,
        "s": 2,
        "link_model": {"explicit": [2, 0, 1]},
        "le_numbers": [None, 3, 2],
        "flags": ["top_differential_nonzero"],
    }


def test_with_le_number():
    scenario = smooth_line_scenario(3, 2)
    updated = scenario.with_le_number(0, 5)
    assert updated.le_numbers == (5, 2)
    assert scenario.le_numbers == (None, 2)
    with pytest.raises(DimensionError):
        scenario.with_le_number(2, 1)
    with pytest.raises(NegativeLeNumberError):
        scenario.with_le_number(1, -3)


def test_presets():
    line = smooth_line_scenario(4, transversal_milnor=3)
    assert line.le_numbers == (None, 3)
    assert line.has_flag(ScenarioFlag.SWING)
    assert not smooth_line_scenario(4, swing=False).flags

    cone = a1_cone_scenario(3, normal_milnor=2, lambda1=3)
    assert cone.le_numbers == (None, 3, 4)
    assert cone.link_chis == (2, 0, 1)
    assert cone.has_flag(ScenarioFlag.TOP_DIFFERENTIAL_NONZERO)
    with pytest.raises(DimensionError):
        a1_cone_scenario(1)


def test_flag_parsing():
    assert ScenarioFlag.parse(" SWING ") == ScenarioFlag.SWING
    with pytest.raises(ValueError):
        ScenarioFlag.parse("sticky")
