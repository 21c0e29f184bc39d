import json

import jsonschema
import pytest

from cliffcpt.cli import main

GAUSS = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}
MATRIX = {"type": "array", "items": {"type": "array", "items": GAUSS}}

SCHEMAS = {
    "algebra": {
        "type": "object",
        "required": ["p", "q", "n", "dimension", "center", "omega_squared", "ring"],
        "properties": {
            "center": {"enum": ["trivial", "two-element"]},
            "omega_squared": {"enum": [1, -1]},
            "ring": {"enum": ["R", "C", "H", "R+R", "H+H"]},
        },
    },
    "group": {
        "type": "object",
        "required": ["order", "elements", "table", "order_structure", "center"],
        "properties": {
            "order": {"type": "integer"},
            "elements": {"type": "array", "items": {"type": "string"}},
            "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
            "order_structure": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
    },
    "rep": {
        "type": "object",
        "required": ["name", "p", "q", "dim", "gammas"],
        "properties": {"gammas": {"type": "array", "items": MATRIX}},
    },
    "cpt": {
        "type": "object",
        "required": ["basis", "blade_labels", "table", "signature", "inner_star", "pi_exact", "degenerate"],
        "properties": {
            "signature": {"type": "string", "pattern": "^[+-]{7}$"},
            "table": {"type": "array", "items": {"type": "array", "items": {
                "type": "object", "required": ["key", "phase"],
                "properties": {"phase": {"enum": [0, 1, 2, 3]}}}}},
        },
    },
    "verify": {
        "type": "object",
        "required": ["claims", "summary"],
        "properties": {
            "claims": {"type": "array", "items": {
                "type": "object", "required": ["id", "expected", "computed", "status"],
                "properties": {"status": {"enum": ["match", "mismatch", "paper-typo-suspected"]}}}},
            "summary": {"type": "object", "required": ["match", "mismatch", "paper-typo-suspected", "total"]},
        },
    },
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[argv[0]])
    return data


# ---------------------------------------------------------------- algebra


def test_algebra_41(capsys):
    d = run_json(capsys, "algebra", "4", "1")
    assert d["center"] == "two-element" and d["omega_squared"] == -1


def test_algebra_13(capsys):
    d = run_json(capsys, "algebra", "1", "3")
    assert d["center"] == "trivial" and d["omega_squared"] == -1


def test_algebra_10_text(capsys):
    code, out, _ = run(capsys, "algebra", "1", "0")
    assert code == 0
    assert "{1, omega}" in out and "omega^2 = +1" in out


@pytest.mark.parametrize("argv", [("algebra", "0", "0"), ("algebra", "6", "5"), ("algebra", "-1", "2"),
                                  ("algebra", "x", "1"), ("nope",), ()])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


# ---------------------------------------------------------------- group


def test_group_13_classify(capsys):
    d = run_json(capsys, "group", "1", "3", "--classify")
    assert d["order"] == 32 and d["order_structure"] == [11, 20]
    assert d["center"] == "Z2" and d["salingaros"] == "N4"


def test_group_32_classify(capsys):
    d = run_json(capsys, "group", "3", "2", "--classify")
    assert d["salingaros"] == "Omega3"


def test_group_10_table(capsys):
    d = run_json(capsys, "group", "1", "0")
    assert d["order"] == 4 and len(d["table"]) == 4
    code, out, _ = run(capsys, "group", "1", "0")
    assert code == 0 and "-e1" in out


def test_group_text_cap(capsys):
    code, out, _ = run(capsys, "group", "3", "3")
    assert code == 0
    assert "table omitted" in out
    code, out, _ = run(capsys, "group", "3", "2")
    assert "table omitted" not in out


# ---------------------------------------------------------------- rep


def test_rep_41(capsys):
    d = run_json(capsys, "rep", "4", "1")
    assert d["dim"] == 4 and len(d["gammas"]) == 5
    # gamma_1 = sigma_1 x 1_2
    assert d["gammas"][0][0][2] == [1, 0]


def test_rep_20(capsys):
    d = run_json(capsys, "rep", "2", "0")
    assert d["gammas"][0] == [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    assert d["gammas"][1] == [[[0, 0], [0, -1]], [[0, 1], [0, 0]]]


def test_rep_fixture(capsys):
    d = run_json(capsys, "rep", "--fixture", "canonical")
    assert d["name"] == "canonical" and (d["p"], d["q"]) == (1, 3)


@pytest.mark.parametrize("argv", [("rep",), ("rep", "1", "0"), ("rep", "1", "3", "--fixture", "weyl"),
                                  ("rep", "--fixture", "bogus")])
def test_rep_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


# ---------------------------------------------------------------- cpt


def test_cpt_canonical(capsys):
    d = run_json(capsys, "cpt", "--basis", "canonical")
    assert d["signature"] == "--+--++"
    assert d["full_cpt"]["order"] == 16


def test_cpt_sitter(capsys):
    d = run_json(capsys, "cpt", "--basis", "sitter")
    assert d["signature"] == "--+-+-+"
    assert d["inner_star"] is False and d["pi_exact"] is False
    code, out, _ = run(capsys, "cpt", "--basis", "sitter")
    assert "scalar matrix" in out


def test_cpt_majorana31(capsys):
    d = run_json(capsys, "cpt", "--basis", "majorana31")
    assert d["blade_labels"]["Pi"] == "+1"
    assert d["degenerate"] is True


# ---------------------------------------------------------------- verify


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "mismatch" in out


def test_verify_g41(capsys):
    d = run_json(capsys, "verify", "--filter", "G41")
    assert d["summary"]["total"] == 5


def test_verify_json_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "verify", "--filter", "EXT13", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    jsonschema.validate(data, SCHEMAS["verify"])


def test_verify_json_bad_path(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--filter", "G13", "--json", str(tmp_path / "missing" / "x.json"))
    assert code == 2


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from cliffcpt import cli
    from cliffcpt.claims import MISMATCH, Claim, Outcome, Report, run_claim

    bad = Report((run_claim(Claim("T.bad", "bad", "none", 1, lambda: Outcome(2, MISMATCH))),))
    monkeypatch.setattr(cli, "run_all_checks", lambda f=None: bad)
    assert run(capsys, "verify")[0] == 1
