import json
import subprocess
import sys

import pytest

from polygram.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_derive_worked_example(capsys):
    code, out, _ = run_cli(capsys, "derive", "--grammar", "u->u*v; v->v",
                           "--start", "u", "--n", "3")
    assert code == 0
    assert out == "u*v + 3*u*v^2 + u*v^3\n"


def test_derive_zero_iterations_echoes_canonical_form(capsys):
    code, out, _ = run_cli(capsys, "derive", "--grammar", "u->u*v; v->v",
                           "--start", "u^2 - u", "--n", "0")
    assert code == 0
    assert out == "-u + u^2\n"


def test_derive_double_angle(capsys):
    code, out, _ = run_cli(capsys, "derive", "--grammar", "f->f*g; g->4*f^2",
                           "--start", "f", "--n", "2")
    assert code == 0
    assert out == "f*g^2 + 4*f^3\n"


def test_derive_weighted_operator(capsys):
    code, out, _ = run_cli(capsys, "derive", "--grammar", "y->z^2; z->y*z",
                           "--start", "y", "--op", "preD:y", "--n", "1")
    assert code == 0
    assert out == "2*y*z^2\n"


def test_derive_json(capsys):
    code, out, _ = run_cli(capsys, "derive", "--grammar", "f->f*g; g->4*f^2",
                           "--start", "f", "--n", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"letters": ["f", "g"], "terms": [{"coeff": "1", "exps": [1, 1]}]}


def test_derive_parse_error_exits_2(capsys):
    code, _, err = run_cli(capsys, "derive", "--grammar", "u -> w",
                           "--start", "u", "--n", "1")
    assert code == 2
    assert "undeclared letter" in err


def test_derive_bad_operator_exits_2(capsys):
    code, _, err = run_cli(capsys, "derive", "--grammar", "u->u", "--start", "u",
                           "--op", "dx", "--n", "1")
    assert code == 2
    assert "operator" in err


def test_derive_config_file(capsys, tmp_path):
    cfg = tmp_path / "grammars.ini"
    cfg.write_text("[double-angle]\nrules = f -> f*g; g -> 4*f^2\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "derive", "--grammar", "@double-angle",
                           "--config", str(cfg), "--start", "f", "--n", "2")
    assert code == 0
    assert out == "f*g^2 + 4*f^3\n"
    code, _, err = run_cli(capsys, "derive", "--grammar", "@missing",
                           "--config", str(cfg), "--start", "f", "--n", "1")
    assert code == 2 and "no grammar named" in err


def test_gamma_families(capsys):
    code, out, _ = run_cli(capsys, "gamma", "--family", "coxeter-a", "--n", "4")
    assert code == 0 and out == "h: 1,11,11,1\ngamma: 1,8\n"
    code, out, _ = run_cli(capsys, "gamma", "--family", "coxeter-b", "--n", "2")
    assert code == 0 and out == "h: 1,6,1\ngamma: 1,4\n"
    code, out, _ = run_cli(capsys, "gamma", "--family", "assoc-b", "--n", "4")
    assert code == 0 and out == "h: 1,16,36,16,1\ngamma: 1,12,6\n"


def test_gamma_json(capsys):
    code, out, _ = run_cli(capsys, "gamma", "--family", "assoc-a", "--n", "3",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == {"family": "assoc-a", "n": 3,
                    "h": ["1", "3", "1"], "gamma": ["1", "1"]}


def test_table_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "--name", "gamma-b", "--rows", "4")
    assert code == 0
    assert out == "1\n1 4\n1 20\n1 72 80\n"
    code, out, _ = run_cli(capsys, "table", "--name", "motzkin-T", "--rows", "2")
    assert code == 0
    assert out == "1 1\n2 2 1\n"
    code, out, _ = run_cli(capsys, "table", "--name", "gamma-a", "--rows", "1")
    assert code == 0
    assert out == "1\n"


def test_table_oeis_alias(capsys):
    _, direct, _ = run_cli(capsys, "table", "--name", "gamma-a", "--rows", "3")
    _, alias, _ = run_cli(capsys, "table", "--name", "A101280", "--rows", "3")
    assert direct == alias


def test_table_bfile(capsys):
    code, out, _ = run_cli(capsys, "table", "--name", "gamma-b", "--rows", "2",
                           "--format", "bfile")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("#") and "offset 1" in lines[0]
    assert lines[1:] == ["1 1", "2 1", "3 4"]


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--name", "eulerian-a", "--rows", "3",
                           "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["rows"] == [["1"], ["1", "1"], ["1", "4", "1"]]


def test_table_unknown_name_exits_2(capsys):
    code, _, err = run_cli(capsys, "table", "--name", "bogus", "--rows", "2")
    assert code == 2 and "unknown triangle" in err


def test_oracle_commands(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--which", "descents-a", "--n", "4")
    assert code == 0 and out == "1 11 11 1\n"
    code, out, _ = run_cli(capsys, "oracle", "--which", "descents-b", "--n", "2")
    assert code == 0 and out == "1 6 1\n"
    code, out, _ = run_cli(capsys, "oracle", "--which", "alternating-a", "--n", "4")
    assert code == 0 and out == "5\n"
    code, out, _ = run_cli(capsys, "oracle", "--which", "motzkin-up", "--n", "2",
                           "--k", "1")
    assert code == 0 and out == "1\n"
    code, out, _ = run_cli(capsys, "oracle", "--which", "left-h", "--n", "1")
    assert code == 0 and out == "1 1\n"
    code, _, err = run_cli(capsys, "oracle", "--which", "descents-a", "--n", "10")
    assert code == 2 and "supports" in err


def test_classical_output(capsys):
    code, out, _ = run_cli(capsys, "classical", "--which", "P", "--n", "1")
    assert code == 0 and out == "1 + u^2\n"
    code, out, _ = run_cli(capsys, "classical", "--which", "Q", "--n", "1")
    assert code == 0 and out == "u\n"
    code, out, _ = run_cli(capsys, "classical", "--which", "T", "--n", "2")
    assert code == 0 and out == "-1 + 2*x^2\n"
    code, out, _ = run_cli(capsys, "classical", "--which", "L", "--n", "1")
    assert code == 0 and out == "2*x\n"


def test_verify_target_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--target", "thm44", "--n-max", "1")
    assert code == 0
    assert out.endswith("thm44: PASS\n")


def test_verify_target_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--target", "prop41", "--n-max", "3",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["target"] == "prop41" and data["ok"] is True
    assert len(data["checks"]) == 3


def test_verify_all_json_structure(capsys):
    code, out, _ = run_cli(capsys, "verify", "--target", "all", "--n-max", "2",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert [t["target"] for t in data["targets"]] == sorted(
        ["thm11", "prop12", "thm21", "thm22", "thm31", "thm32", "cor33",
         "prop41", "thm42", "thm43", "thm44", "egf", "alternating"])


def test_verify_unknown_target_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--target", "thm99"])
    assert err.value.code == 2


def test_cli_byte_determinism_subprocess():
    cmd = [sys.executable, "-m", "polygram", "verify", "--target", "thm21",
           "--n-max", "6", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.strip()
