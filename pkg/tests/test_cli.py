"""CLI golden files, exit codes and file-format round trips.

Set ``PROJKIN_UPDATE_GOLDEN=1`` to rewrite the golden files.
"""
import json
import os
from pathlib import Path

import numpy as np
import pytest

import projkin as pk
from projkin import cli, io

GOLDEN = Path(__file__).parent / "golden"
UNIT = ["--R", "1", "--c", "1"]

INVOCATIONS = {
    "transform": ["transform", "--group", "fantappie", "--kind", "time-translation", "--T", "0.5", *UNIT,
                  "--event", "0.2", "0", "0", "0.4"],
    "compose": ["compose", "--gen", "time-translation:0.5", "--gen", "pulling:0.6:y", *UNIT],
    "distance": ["distance", "--axis", "time", "--B", "0", "0.5", *UNIT, "--gauge", "paper-literal"],
    "scales": ["scales", "--axis", "time", "--range", "0:0.5:0.25", *UNIT],
    "hubble": ["hubble", "--tE", "0", "--x", "0", "0.3", "1.5", *UNIT],
    "drift": ["drift", "--target", "1s", "--R", "1.3e26", "--c", "2.99792458e8"],
    "limits": ["limits", "--kind", "spatial-translation", "--S", "1", "--Rs", "1e2,1e3,1e4",
               "--c", "1", "--event", "0.2", "0.1", "0", "0.3"],
}


def run(argv, tmp_path, name="out.txt"):
    out = tmp_path / name
    code = cli.main([*argv, "--out", str(out)])
    return code, (out.read_bytes() if out.exists() else None)


@pytest.mark.parametrize("name", sorted(INVOCATIONS))
def test_golden(name, tmp_path):
    code, data = run(INVOCATIONS[name], tmp_path)
    assert code == 0
    golden = GOLDEN / f"{name}.txt"
    if os.environ.get("PROJKIN_UPDATE_GOLDEN"):
        golden.write_bytes(data)
    assert data == golden.read_bytes()
    code, again = run(INVOCATIONS[name], tmp_path, "again.txt")
    assert again == data
    assert b"\r" not in data


def test_transform_example_values(tmp_path):
    code, data = run(INVOCATIONS["transform"], tmp_path)
    assert json.loads(data) == [{"x": 0.216506350946, "y": 0.0, "z": 0.0, "t": -0.125}]


def test_scales_example_values(tmp_path):
    _, data = run(["scales", "--axis", "time", "--range", "0:0.5:0.5", *UNIT, "--gauge", "consistent"], tmp_path)
    assert data == b"t_E,t_G\n0.0,0.0\n0.5,0.549306144334\n"
    _, data = run(["scales", "--axis", "space", "--range", "0:1:1", "--R", "1"], tmp_path)
    assert data == b"x_E,x_G\n0.0,0.0\n1.0,0.785398163397\n"


def test_hubble_and_drift_examples(tmp_path):
    _, data = run(["hubble", "--tE", "0", *UNIT, "--x", "0.3"], tmp_path)
    assert data == b"t_E,H,x_E,V_E\n0.0,1.0,0.3,0.3\n"
    _, data = run(["hubble", "--tE", "0", "--format", "json", "--precision", "17"], tmp_path)
    assert json.loads(data)["H"] == pk.DEFAULT_C / pk.DEFAULT_R
    _, data = run(["drift", "--tE", "0"], tmp_path)
    assert data.splitlines()[1].split(b",")[2] == b"0.0"
    _, data = run(["drift", "--tE", "0.5", *UNIT, "--gauge", "paper-literal"], tmp_path)
    assert data.splitlines()[1].split(b",")[2] == b"0.598612288668"
    _, data = run(["drift", "--target", "1s", "--R", "1.3e26", "--c", "2.99792458e8", "--format", "json"], tmp_path)
    obj = json.loads(data)
    assert obj["t_E_s"] == pytest.approx(8.3e11, rel=0.01)
    assert 1e3 <= obj["t_E_yr"] <= 1e5


def test_limits_pulling_not_applicable(tmp_path):
    _, data = run(["limits", "--kind", "pulling", "--V", "0.6", "--Rs", "1e2,1e3,1e4", "--c", "1"], tmp_path)
    obj = json.loads(data)
    assert obj["fitted_slope"] is None and obj["slope_status"] == "not-applicable"
    assert max(obj["deviations"]) < 1e-14


def test_identity_transform_echoes(tmp_path):
    events = [{"x": 0.2, "y": 0.0, "z": 0.0, "t": 0.4}, {"x": -1.5, "y": 2.0, "z": 3.25, "t": 0.1}]
    src = tmp_path / "events.json"
    src.write_text(json.dumps(events))
    _, data = run(["transform", "--kind", "time-translation", "--T", "0", *UNIT, "--events", str(src)], tmp_path)
    assert json.loads(data) == events


def test_transform_with_matrix_file(tmp_path):
    code, data = run(["compose", "--gen", "time-translation:0.5", *UNIT], tmp_path, "g.json")
    assert code == 0
    _, out = run(["transform", "--matrix", str(tmp_path / "g.json"), *UNIT, "--event", "0.2", "0", "0", "0.4"],
                 tmp_path)
    assert json.loads(out) == [{"x": 0.216506350946, "y": 0.0, "z": 0.0, "t": -0.125}]


def test_other_groups(tmp_path):
    _, data = run(["transform", "--group", "galileo", "--kind", "inertial", "--V", "1", *UNIT,
                   "--event", "2", "0", "0", "3"], tmp_path)
    assert json.loads(data)[0] == {"x": 5.0, "y": 0.0, "z": 0.0, "t": 3.0}
    _, data = run(["transform", "--group", "poincare", "--kind", "pulling", "--V", "0.6", *UNIT,
                   "--event", "1", "0", "0", "1"], tmp_path)
    assert json.loads(data)[0] == {"x": 0.5, "y": 0.0, "z": 0.0, "t": 0.5}


@pytest.mark.parametrize("argv,code", [
    (["transform", "--kind", "time-translation", "--T", "0.5", *UNIT, "--event", "0.2", "0", "0", "2"], 3),
    (["transform", "--kind", "time-translation", "--T", "2", *UNIT, "--event", "0", "0", "0", "0"], 2),
    (["scales", "--axis", "time", "--range", "0:1:1", *UNIT], 2),
    (["scales", "--axis", "time", "--range", "0:1", *UNIT], 2),
    (["hubble", "--tE", "-1", *UNIT], 2),
    (["drift", "--target", "1 parsec"], 2),
    (["drift", "--target", "1e3", *UNIT], 4),
    (["limits", "--kind", "spatial-translation", "--S", "1", "--Rs", "1e3,1e2"], 2),
    (["distance", "--axis", "time", "--B", "0.5", "0", *UNIT], 2),
    (["scales", "--range", "0:1:1", "--precision", "3"], 2),
    (["transform", "--bogus"], 2),
    (["transform", *UNIT], 2),
])
def test_exit_codes(argv, code, tmp_path, capsys):
    with_out = [*argv, "--out", str(tmp_path / "x")]
    try:
        got = cli.main(with_out)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_projective_infinity_diagnostic(capsys):
    code = cli.main(["transform", "--kind", "time-translation", "--T", "0.5", *UNIT,
                     "--event", "0", "0", "0", "0", "--event", "0.2", "0", "0", "2"])
    assert code == 3
    assert "projective infinity at event 1" in capsys.readouterr().err


def test_limits_convergence_exit(monkeypatch):
    def boom(*a, **k):
        raise pk.ConvergenceFailure("synthetic")

    monkeypatch.setattr(cli.groups, "limit_deviation", boom)
    assert cli.main(["limits", "--S", "1", "--kind", "spatial-translation", "--Rs", "1,2"]) == 4


# -- schemas ------------------------------------------------------------------

def test_event_schema_round_trip():
    events = [pk.Event(0.1, -2.0, 3e10, 1 / 3), pk.Event(0, 0, 0, -7.25)]
    for prec in (6, 12, 17):
        text = io.dumps_events(events, precision=prec)
        again = io.dumps_events(io.loads_events(text), precision=prec)
        assert again == text
    assert io.loads_events(io.dumps_events(events, precision=17)) == events
    with pytest.raises(pk.DomainError):
        io.loads_events('[{"x": 1, "y": 2}]')
    with pytest.raises(pk.DomainError):
        io.loads_events("not json")


def test_group_element_schema_round_trip():
    p = pk.make_parameters(1, 1)
    g = pk.compose(pk.fantappie_generator(pk.GeneratorParams("pulling", 0.3, "z"), p),
                   pk.fantappie_generator(pk.GeneratorParams("spatial-translation", 0.7), p))
    text = io.dumps_group_element(g)
    obj = json.loads(text)
    assert list(obj) == ["matrix"] and len(obj["matrix"]) == 5 and all(len(r) == 5 for r in obj["matrix"])
    back = io.loads_group_element(text)
    np.testing.assert_allclose(back.M, g.M, atol=1e-11)
    assert io.dumps_group_element(back) == text
    coarse = io.loads_group_element(io.dumps_group_element(g, precision=6))
    np.testing.assert_allclose(coarse.M, g.M, atol=1e-5)
    with pytest.raises(pk.DomainError):
        io.loads_group_element('{"matrix": [[1, 0], [0, 1]]}')


def test_csv_format():
    text = io.dumps_csv(["a", "b"], [[1.0, -0.0], [1 / 3, 2.5e-300]], precision=6)
    assert text == "a,b\n1.0,0.0\n0.333333,2.5e-300\n"
