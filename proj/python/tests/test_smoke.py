import math

import numpy as np
import pytest

import itguide


def test_nominal_run_intercepts_on_time():
    res = itguide.run(preset="table1-nominal")
    assert res["status"] == "Intercepted"
    assert res["exit_code"] == 0
    m = res["metrics"]
    assert abs(m["impactTime"] - 50.0) <= 0.1
    assert m["missDistance"] <= 1.0
    assert m["maxLeadDeg"] <= 60.0
    traj = res["trajectory"]
    assert list(traj) == itguide.trajectory_columns()
    assert np.all(np.abs(traj["aMy"]) <= 98.1 + 1e-6)
    assert np.all(np.diff(traj["t"]) > 0)


def test_planar_config_text():
    res = itguide.run("mode = planar\nsim.dt = 0.002\n")
    assert res["status"] == "Intercepted"
    assert np.all(res["trajectory"]["aMz"] == 0.0)
    assert abs(res["metrics"]["controlEffort"] - 26453.596) <= 0.1 * 26453.596


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError, match="gains.k1"):
        itguide.validate("gains.k1 = 0.6")
    with pytest.raises(itguide.ValidationError, match="saturation.n"):
        itguide.validate("saturation.n = 4\nsaturation.n = 3")
    with pytest.raises(itguide.ParseError):
        itguide.validate("nonsense")


def test_validate_round_trips():
    text = itguide.validate("scenario.tf = 55")
    assert "scenario.tf = 55" in text
    assert itguide.validate(text) == text


def test_presets():
    assert "fig2-tf-sweep" in itguide.preset_names()
    labels = [label for label, _ in itguide.preset("fig2-tf-sweep")]
    assert labels == ["tf45", "tf50", "tf55"]


def test_shaping_and_saturation_helpers():
    assert itguide.sgmf(150.0, 300.0) == pytest.approx(0.6875)
    assert itguide.sgmf(1e4, 300.0) == 1.0
    assert itguide.desired_lead(150.0) == pytest.approx(math.acos(1 - 0.49 * 0.6875))
    assert itguide.saturation_rate(0.0, 10.0) == pytest.approx(10.0)
    assert itguide.saturation_rate(98.1, 10.0) == pytest.approx(-9.81)
