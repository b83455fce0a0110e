"""Command-line interface: golden outputs, formats, exit codes, config."""

import json
import pathlib
import subprocess
import sys

import pytest

from colorpartitions import cli
from colorpartitions.render import canonical_json
from colorpartitions.verify import CheckRecord, VerificationReport

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_golden_odd_modulus(capsys):
    code, out, err = run_cli(capsys, "table", "7", "1", "10")
    assert code == 0
    assert err == ""
    assert out == (GOLDEN / "table_7_1_10.txt").read_text()
    assert len(out.splitlines()) == 8


def test_table_golden_even_modulus(capsys):
    code, out, _ = run_cli(capsys, "table", "8", "3", "10")
    assert code == 0
    assert out == (GOLDEN / "table_8_3_10.txt").read_text()
    lines = out.splitlines()
    assert len(lines) == 20
    assert "(3,3,3,1) [-1,0,0] (6_1,3_1,1_1)" in lines


def test_table_weight_zero(capsys):
    code, out, _ = run_cli(capsys, "table", "7", "1", "0")
    assert code == 0
    assert out == "() [] ()\n"


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "7", "1", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "partition,ranks,colored"
    assert lines[1] == '"(7,1,1,1)",[3],(10_2)'
    assert lines[2] == '"(6,4)","[4,2]","(7_2,3_1)"'
    assert len(lines) == 9


def test_table_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "table", "8", "3", "10", "-f", "json")
    assert code == 0
    payload = json.loads(out)
    assert canonical_json(payload) == out  # byte-stable serialization
    assert payload["modulus"] == 8
    assert payload["weight"] == 10
    assert len(payload["rows"]) == 20
    first = payload["rows"][0]
    assert first["partition"] == [7, 1, 1, 1]
    assert first["colored"] == [[10, 3]]


def test_coeffs_text(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "fermionic", "5", "2", "10")
    assert code == 0
    assert out == "1 1 1 1 2 2 3 3 4 5 6\n"


def test_coeffs_forms_agree(capsys):
    _, product, _ = run_cli(capsys, "coeffs", "product", "7", "3", "20")
    _, bosonic, _ = run_cli(capsys, "coeffs", "bosonic", "7", "3", "20")
    _, fermionic, _ = run_cli(capsys, "coeffs", "fermionic", "7", "3", "20")
    assert product == bosonic == fermionic


def test_coeffs_csv(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "product", "5", "2", "4", "-f", "csv")
    assert code == 0
    assert out == "degree,coefficient\n0,1\n1,1\n2,1\n3,1\n4,2\n"


def test_coeffs_json_decimal_strings(capsys):
    code, out, _ = run_cli(capsys, "coeffs", "bosonic", "5", "2", "6", "-f", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["coefficients"] == ["1", "1", "1", "1", "2", "2", "3"]
    assert canonical_json(payload) == out


def test_angles_text(capsys):
    code, out, _ = run_cli(capsys, "angles", "7,5,5,5,4,4,2")
    assert code == 0
    assert out == (
        "partition: (7,5,5,5,4,4,2)\n"
        "conjugate: (7,7,6,6,4,1,1)\n"
        "durfee:    4\n"
        "ranks:     [0,-2,-1,-1]\n"
        "widths:    (7,4,3,2)\n"
        "heights:   (7,6,4,3)\n"
        "lengths:   (13,9,6,4)\n"
    )


def test_angles_csv(capsys):
    code, out, _ = run_cli(capsys, "angles", "4,3,2", "-f", "csv")
    assert code == 0
    assert out == "index,width,height,length,rank\n1,4,3,6,1\n2,2,2,3,0\n"


def test_angles_json(capsys):
    code, out, _ = run_cli(capsys, "angles", "4,3,2", "-f", "json")
    payload = json.loads(out)
    assert payload["durfee"] == 2
    assert payload["angles"] == [
        {"width": 4, "height": 3, "length": 6},
        {"width": 2, "height": 2, "length": 3},
    ]
    assert canonical_json(payload) == out


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "bijection", "--M", "7", "--n-max", "10"
    )
    assert code == 0
    assert "PASS: 3 cells" in out
    assert "FAIL" not in out


def test_verify_gordon_single_pair(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "gordon", "--k", "2", "--r", "2", "--n-max", "12"
    )
    assert code == 0
    assert "k=2 r=2" in out


def test_verify_finitized_cell(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "finitized",
        "--k",
        "3",
        "--r",
        "2",
        "--parity",
        "even",
        "--N-max",
        "5",
    )
    assert code == 0
    assert "even k=3 r=2" in out


def test_verify_failure_exit_one(capsys, monkeypatch):
    # exit-code contract: a failed identity turns into exit status 1
    broken = VerificationReport(
        "gordon grid",
        (CheckRecord("gordon", "k=2 r=1", "n<=5", 3, False, "n=2: 1 members vs 2"),),
    )
    monkeypatch.setattr(cli.verify, "verify_gordon_grid", lambda *a, **k: broken)
    code, out, _ = run_cli(capsys, "verify", "gordon")
    assert code == 1
    assert "FAIL" in out
    assert "n=2: 1 members vs 2" in out


def test_verify_report_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "counts", "--M", "5", "--n-max", "8", "-f", "json"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["passed"] is True
    assert [r["params"] for r in payload["records"]] == ["M=5 r=1", "M=5 r=2"]
    assert canonical_json(payload) == out


def test_error_exit_two(capsys):
    # domain errors are reported on stderr with exit status 2
    code, out, err = run_cli(capsys, "table", "7", "5", "10")  # residue too big
    assert code == 2
    assert out == ""
    assert err.startswith("error:")

    code, _, err = run_cli(capsys, "table", "7", "1", "-3")
    assert code == 2
    assert "weight" in err

    code, _, err = run_cli(capsys, "angles", "3,5,1")  # increasing parts
    assert code == 2
    assert err.startswith("error:")


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["unknown-command"])
    assert info.value.code == 2


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.txt"
    code, out, _ = run_cli(capsys, "table", "7", "1", "10", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == (GOLDEN / "table_7_1_10.txt").read_text()


def test_config_file_defaults(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "json"}))
    code, out, _ = run_cli(capsys, "coeffs", "product", "5", "2", "3", "--config", str(config))
    assert code == 0
    json.loads(out)  # config selected JSON output

    # explicit flag beats the config value
    code, out, _ = run_cli(
        capsys, "coeffs", "product", "5", "2", "3", "--config", str(config), "-f", "text"
    )
    assert code == 0
    assert out == "1 1 1 1\n"


def test_config_output_redirect(tmp_path, capsys):
    target = tmp_path / "report.csv"
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"format": "csv", "output": str(target)}))
    code, out, _ = run_cli(
        capsys, "verify", "counts", "--M", "5", "--n-max", "6", "--config", str(config)
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("scope,params,span,checked,ok,note")


def test_bad_config_exit_two(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps(["not", "a", "dict"]))
    code, _, err = run_cli(capsys, "table", "7", "1", "4", "--config", str(config))
    assert code == 2
    assert "config" in err

    code, _, err = run_cli(capsys, "table", "7", "1", "4", "--config", str(tmp_path / "absent.json"))
    assert code == 2

    config.write_text(json.dumps({"format": "yaml"}))
    code, _, err = run_cli(capsys, "table", "7", "1", "4", "--config", str(config))
    assert code == 2
    assert "format" in err


def test_module_entry_point():
    # python -m colorpartitions mirrors the console script
    result = subprocess.run(
        [sys.executable, "-m", "colorpartitions", "coeffs", "fermionic", "5", "2", "10"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "1 1 1 1 2 2 3 3 4 5 6\n"
