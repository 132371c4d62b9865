import json
import subprocess
import sys

import pytest

from oligohilb.cli import main, run


def ok(argv, env=None):
    code, text = run(argv, env or {})
    assert code == 0, text
    return json.loads(text)


def test_acl_example():
    r = ok(["acl", "--structure", "vec2", "--set", "[1,0],[0,1]"])
    assert r["result"] == ["[0]", "[1]", "[0,1]", "[1,1]"]
    assert r["structure"]["kind"] == "vector_space" and r["structure"]["params"] == {"q": 2}


def test_double_cosets_example():
    r = ok(["double-cosets", "--structure", "dlo", "--left", "0", "--right", "0"])
    assert r["count"] == 3 and len(r["representatives"]) == 3


def test_spectrum_oracle_example():
    r = ok(["spectrum", "oracle", "--structure", "pure_set", "--bound", "2"])
    assert (r["points"], r["functionals"], r["bijection_ok"]) == (7, 7, True)
    assert len(r["bijection"]) == 7


def test_global_flags_after_subcommand():
    a = run(["--structure", "dlo", "acl", "--set", "0"], {})
    b = run(["acl", "--set", "0", "--structure", "dlo"], {})
    assert a == b and a[0] == 0


def test_other_commands():
    assert ok(["index", "--structure", "vec2", "--left", "[1]", "--right", "[1],[0,1]"]) ["finite"] is False
    assert ok(["index", "--structure", "vec2", "--left", "[1]", "--right", "[0]"])["index"] == 1
    assert ok(["autgroup", "--structure", "pure_set", "--set", "1,2"])["order"] == 2
    assert ok(["canonical-subgroup", "--structure", "pure_set", "--set", "1"])["base"] == ["1"]
    t = ok(["tensor", "--structure", "pure_set", "--left", "1", "--right", "1"])
    assert t["count"] == 2
    assert ok(["algebra", "mul", "--expr", "e[1->2]", "--right", "e[3->4]"])["result"] == "e[1->2, 3->4]"
    assert ok(["algebra", "canon", "--structure", "vec2", "--expr", "e[]"])["result"] == "e[[0]->[0]]"
    n = ok(["algebra", "norm", "--expr", "e[1->2] - e[1->3]"])
    assert n["sup_norm_sq"] == "1" and n["is_real"] is True
    assert ok(["algebra", "eval", "--expr", "2*e[1->2]", "--at", "{1->2}"])["value"] == "2"
    assert ok(["spectrum", "enum", "--bound", "3"])["count"] == 34
    assert ok(["phi", "--point", "{1->2}", "--expr", "3*e[1->2] - e[3->4]"])["value"] == "3"
    assert ok(["convolve", "--left", "{1->2}", "--right", "{3->1}"])["result"] == "{3->2}"
    w = ok(["witness", "--point", "{}", "--expr", "e[1->2] - e[1->2, 3->4]"])
    assert w["value"] == "0"


def test_complex_values_serialize_exactly():
    r = ok(["algebra", "eval", "--expr", "1/2+1i*e[]", "--at", "{}"])
    assert r["value"] == {"re": "1/2", "im": "1"}


def test_check_command():
    r = ok(["check", "--criterion", "8"])
    assert r["passed"] and r["results"][0]["criterion"] == 8


@pytest.mark.parametrize(
    "argv,kind,status",
    [
        (["phi", "--point", "{1->2}", "--expr", "e[1->2"], "SyntaxError", 1),
        (["phi", "--structure", "vec2", "--point", "{[1]->[0,1]}", "--expr", "e[]"], "NotAclClosed", 1),
        (["convolve", "--left", "{1->2, 3->2}", "--right", "{}"], "NonInjective", 1),
        (["spectrum", "enum", "--bound", "9"], "LimitExceeded", 1),
        (["acl", "--structure", "vec2", "--set", "[5]"], "UnknownElementLiteral", 1),
        (["acl", "--structure", "nope", "--set", "1"], "ValueError", 1),
        (["bogus"], "UsageError", 2),
        (["acl"], "UsageError", 2),
    ],
)
def test_errors_are_structured(argv, kind, status):
    code, text = run(argv, {})
    assert code == status
    assert json.loads(text)["error"]["kind"] == kind


def test_table_format():
    code, text = run(["acl", "--structure", "vec2", "--set", "[1]", "--format", "table"], {})
    assert code == 0
    assert any(line.startswith("result[0]") and line.rstrip().endswith("[0]") for line in text.splitlines())
    code, text = run(["bogus", "--format", "table"], {})
    assert code == 2


def test_bounds_env_and_config(tmp_path):
    r = ok(["acl", "--set", "1"], {"OH_BOUNDS": "enum_cap=10,search_cap=20"})
    assert r["structure"]["bounds"] == {"enum_cap": 10, "search_cap": 20}
    code, text = run(["acl", "--set", "1"], {"OH_BOUNDS": "bogus=1"})
    assert code == 1 and json.loads(text)["error"]["kind"] == "ValueError"
    cfg = tmp_path / "m.json"
    cfg.write_text(json.dumps({"kind": "vector_space", "params": {"q": 3}}))
    r = ok(["acl", "--structure", str(cfg), "--set", "[1]"])
    assert r["structure"]["params"] == {"q": 3} and len(r["result"]) == 3


def test_timing_flag():
    assert "seconds" not in ok(["acl", "--set", "1"])
    assert "seconds" in ok(["acl", "--set", "1", "--timing"])


def test_main_prints(capsys):
    assert main(["acl", "--set", "2,1"]) == 0
    assert json.loads(capsys.readouterr().out)["result"] == ["1", "2"]


def test_subprocess_is_byte_identical():
    argv = [sys.executable, "-m", "oligohilb", "tensor", "--structure", "dlo", "--left", "0,1", "--right", "1/2"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout
