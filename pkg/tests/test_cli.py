import json

import jsonschema
import pytest

from flopcycles import cli
from flopcycles.classifier import classify
from flopcycles.dynkin import ADEType, ade_types, build_ade
from flopcycles.flop_model import mark
from flopcycles.formats import (
    CONFIG_SCHEMA,
    CYCLE_SCHEMA,
    FACTS_SCHEMA,
    MARK_SCHEMA,
    REPORT_SCHEMA,
    config_from_json,
    config_to_json,
    cycle_from_json,
    cycle_to_json,
    marked_to_json,
    report_to_json,
    to_dot,
)
from flopcycles.fundamental_cycle import fundamental_cycle


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("t", ade_types(12), ids=str)
def test_config_and_cycle_round_trip(t):
    c = build_ade(t)
    data = json.loads(json.dumps(config_to_json(c)))
    jsonschema.validate(data, CONFIG_SCHEMA)
    assert config_from_json(data) == c
    f = fundamental_cycle(c)
    cdata = json.loads(json.dumps(cycle_to_json(f)))
    jsonschema.validate(cdata, CYCLE_SCHEMA)
    assert cycle_from_json(cdata, c) == f


def test_config_json_shape():
    assert config_to_json(build_ade(ADEType("A", 3))) == {
        "family": "A", "rank": 3, "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]],
    }


def test_config_from_json_checks_type():
    data = config_to_json(build_ade(ADEType("D", 5)))
    data["family"] = "A"
    with pytest.raises(ValueError):
        config_from_json(data)


@pytest.mark.parametrize("length", range(1, 7))
def test_report_json_schema(length):
    data = json.loads(json.dumps(report_to_json(classify(length))))
    jsonschema.validate(data, REPORT_SCHEMA)
    assert json.loads(json.dumps(data)) == data


def test_mark_json_schema():
    data = marked_to_json(mark(ADEType("E", 8), 5))
    jsonschema.validate(data, MARK_SCHEMA)


def test_dot_annotation():
    c = build_ade(ADEType("D", 4))
    dot = to_dot(c, fundamental_cycle(c), name="D4")
    assert 'label="2:2"' in dot and "2 -- 4;" in dot
    assert dot.startswith('graph "D4" {')


def test_diagram_commands(capsys):
    code, out, _ = run(capsys, "diagram", "E8", "--fundcycle", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 8
    assert max(data["fundamental_cycle"]["coefficients"].values()) == 6

    code, out, _ = run(capsys, "diagram", "A1")
    assert code == 0 and "1 vertices, 0 edges" in out

    code, out, err = run(capsys, "diagram", "D3")
    assert code == 2 and "rank must be ≥ 4" in err and out == ""

    code, out, _ = run(capsys, "diagram", "E6", "--describe")
    assert "branch vertex" in out

    code, out, _ = run(capsys, "diagram", "E8", "--fundcycle", "--format", "dot")
    assert code == 0 and 'label="3:6"' in out


def test_fundcycle_command(capsys):
    code, out, _ = run(capsys, "fundcycle", "E7", "--trace")
    assert code == 0 and "result: 1:2 2:3 3:4 4:3 5:2 6:1 7:2" in out
    code, out, _ = run(capsys, "fundcycle", "D5", "--format", "json", "--trace")
    assert json.loads(out)["coefficients"] == {"1": 1, "2": 2, "3": 2, "4": 1, "5": 1}


def test_mark_command(capsys):
    code, out, _ = run(capsys, "mark", "D4", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["length"] == 2
    assert [c["type"] for c in data["components"]] == ["A1"] * 3
    assert [c["d"] for c in data["components"]] == [2, 2, 2]

    code, out, _ = run(capsys, "mark", "E7", "2", "--format", "json")
    comps = {c["type"]: c for c in json.loads(out)["components"]}
    assert set(comps) == {"A1", "A5"} and comps["A5"]["d"] == 3

    code, out, _ = run(capsys, "mark", "A1", "1")
    assert code == 0 and "length 1" in out and "components: 0" in out

    code, _, err = run(capsys, "mark", "E6", "9")
    assert code == 2 and err


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "3", "--format", "json")
    assert code == 0
    assert [(d["type"], d["k0"]) for d in json.loads(out)] == [
        ("E6", 3), ("E7", 2), ("E7", 4), ("E8", 6), ("E8", 8)]


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "4")
    assert code == 0 and "survivor: (E7, k0=3)" in out
    code, out, _ = run(capsys, "classify", "1", "--format", "json")
    assert code == 0 and json.loads(out)["survivor"]["type"] == "A1"
    code, _, _ = run(capsys, "classify", "9")
    assert code == 2
    code, _, _ = run(capsys, "classify", "3", "--format", "dot")
    assert code == 2


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "--max-rank", "8", "classify", "2")
    assert code == 0 and json.loads(out)["max_rank"] == 8


def test_usage_errors_exit_2(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "mark", "E6")[0] == 2
    assert run(capsys, "verify", "--max-rank", "5")[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    jsonschema.validate(data["facts"], FACTS_SCHEMA)


def test_output_is_deterministic(capsys):
    for argv in (["classify", "3", "--format", "json"], ["mark", "E8", "5"], ["enumerate", "2"]):
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first
