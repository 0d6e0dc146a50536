import io
import json

import pytest

from gwweyl.cli import RunConfig, UsageError, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue().strip()


def test_sign_example():
    assert run("sign", "--type", "C3", "--weight", "0,1,0") == (0, "+1")
    assert run("sign", "--type", "C3", "--weight", "1,0,0") == (0, "-1")


def test_tensor_example():
    assert run("tensor", "--type", "A1", "--x", "1", "--y", "1") == (0, "E_2 + E_0")


def test_torsor_example():
    assert run("torsor-lift", "--n", "3") == (0, "OK")


def test_basic_commands():
    assert run("weyl", "--type", "C3") == (0, "48")
    assert run("dim", "--type", "C3", "--weight", "0,1,0") == (0, "14")
    assert run("dim", "--type", "C3", "--weight", "1,1,0", "--basis", "eps") == (0, "14")
    code, text = run("lambda", "--type", "C3", "--k", "3")
    assert code == 0 and text == "E_(0,0,1) + E_(1,0,0)"
    code, text = run("roots", "--type", "C2")
    assert code == 0 and "positive roots (4)" in text
    code, text = run("char", "--type", "C2", "--weight", "0,1")
    assert code == 0 and text.count("t") == 8


def test_gw_commands():
    assert run("gw-mul", "--r", "1", "--x", "V - Hm", "--y", "V - Hm") == (0, "V^2 - 2*Hm*V + 4")
    assert run("augment", "--r", "2", "--x", "L2V") == (0, "6")
    assert run("augment", "--r", "2", "--x", "L2V", "--coeff-model", "real") == (0, "4 + 2*e")
    assert run("augment", "--r", "2", "--gens", "borel", "--x", "s1(b)*s2(b)") == (0, "0")
    code, text = run("gw-mul", "--r", "1", "--x", '{"generators": ["V"], "terms": [{"exp": [1], "coeff": "1"}]}',
                     "--y", "(2+Hm)*V", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["schema"] == 1 and data["terms"] == [{"exp": [2], "coeff": "2 + Hm"}]


def test_restrict_and_symfun():
    assert run("restrict", "--r", "2", "--k", "2") == (0, "v1*v2 + 2")
    assert run("restrict", "--r", "3", "--k", "3", "--symfun") == (0, "2*s1(v) + s3(v)")
    assert run("restrict", "--r", "2", "--k", "2", "--vars", "b", "--symfun") == (0, "Hm*s1(b) + s2(b) + 6")
    assert run("symfun", "--r", "2", "--x", "v1^2 + v2^2") == (0, "s1(v)^2 - 2*s2(v)")
    code, _ = run("symfun", "--r", "2", "--x", "v1")
    assert code == 1


def test_completion_commands():
    code, text = run("complete", "--r", "2", "--precision", "4")
    assert code == 0 and "bijective: yes" in text
    code, text = run("as-map", "--r", "2", "--precision", "4", "--report", "json")
    data = json.loads(text)
    assert code == 0 and data["bijective_onto_invariants"]
    assert [row["invariant_dim"] for row in data["degrees"]] == [2, 2, 4, 4, 6]


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run()[0] == 2
    assert run("sign", "--type", "C3", "--weight", "1,0")[0] == 2
    assert run("sign", "--type", "B3", "--weight", "1,0,0")[0] == 2
    assert run("complete", "--r", "2", "--precision", "11")[0] == 2
    assert run("tensor", "--type", "C2", "--x", "1,0")[0] == 2


def test_computation_errors():
    assert run("sign", "--type", "C2", "--weight", "-1,0", "--basis", "eps")[0] == 1
    assert run("sign", "--type", "T2", "--weight", "1,0", "--preset", "SpIdentity")[0] == 1


def test_json_is_deterministic():
    args = ("tensor", "--type", "C3", "--x", "1,1,0", "--y", "0,1,1", "--format", "json", "--seed", "4")
    a, b = run(*args), run(*args)
    assert a == b
    data = json.loads(a[1])
    assert data["x"] == {"eps": [2, 1, 0], "fund": [1, 1, 0]}


def test_run_config_defaults_and_bounds():
    cfg = RunConfig()
    assert (cfg.coeff_model, cfg.precision, cfg.fmt, cfg.seed) == ("split", 6, "text", 0)
    with pytest.raises(UsageError):
        RunConfig(precision=11)
