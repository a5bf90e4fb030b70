import json
import subprocess
import sys

import pytest

from artifact.cli import main
from artifact.poly import parse_poly
from artifact import displays


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_specht_example(capsys):
    code, data = run_json(capsys, "specht", "--M", "1 1;3 4;4", "--T", "1 2;3 5;4")
    assert code == 0
    assert data["schema_version"] == 1
    assert parse_poly(data["polynomial"]) == displays.CORRECTED.f_mt


def test_json_flag_after_the_subcommand(capsys):
    code, out, _ = run(capsys, "specht", "--M", "0 0;1 2;2", "--T", "1 2;3 5;4", "--quotient", "--json")
    assert code == 0
    assert parse_poly(json.loads(out)["polynomial"]) == displays.q_ct()


def test_tableaux_enumeration(capsys):
    code, data = run_json(capsys, "tableaux", "enum", "--shape", "2,1", "--kind", "syt")
    assert code == 0 and len(data["tableaux"]) == 2
    code, data = run_json(capsys, "tableaux", "enum", "--shape", "2,1", "--kind", "ssyt", "--degree", "2")
    assert code == 0 and data["count"] == len(data["tableaux"])


@pytest.mark.parametrize("op", ["ct", "ev", "iota", "iota-hat"])
def test_map_operations(capsys, op):
    tab = "1 1;3 4;4" if op == "iota-hat" else "1 2;3 5;4"
    code, out, _ = run(capsys, "map", "--op", op, "--in", tab)
    assert code == 0 and out.strip()


def test_decompose_x1(capsys):
    code, data = run_json(capsys, "decompose", "--poly", "x1", "--n", "2")
    assert code == 0
    assert data["window"] == 3
    coords = {(c["label"], c["T"]): c["coefficient"] for c in data["coordinates"]}
    assert coords == {("0 0 1", "1 2 3"): "1/3", ("0 0;1", "1 2;3"): "-1/3", ("0 0;1", "1 3;2"): "-1/3"}
    total = sum((parse_poly(c["polynomial"]) for c in data["components"]), parse_poly("0"))
    assert total == parse_poly("x1")


def test_quotient_slice(capsys):
    code, data = run_json(capsys, "quotient", "--n", "3", "--k", "3", "--s", "3", "--d", "1", "--project", "x1 + x2 + x3")
    assert code == 0
    assert data["dimension"] == 2
    assert data["projection"] == "0"


def test_stable_specht(capsys):
    code, out, _ = run(capsys, "stable-specht", "--finite-part", "3 4;4", "--mult", "1,2", "--T", "3 5;4", "--window", "6")
    assert code == 0
    assert "x6" in out


def test_verify_counting(capsys):
    code, out, _ = run(capsys, "verify", "counting", "--nmax", "4", "--dmax", "2")
    assert code == 0
    assert out.startswith("PASS counting")
    assert "dimension at n=4, d=2: 10" in out


def test_verify_json(capsys):
    code, data = run_json(capsys, "verify", "difmod", "--nmax", "3", "--dmax", "2")
    assert code == 0 and data["ok"] and data["schema_version"] == 1


def test_conjecture_scan(capsys):
    code, out, _ = run(capsys, "conjecture", "scan", "--dmax", "2")
    assert code == 0 and out.startswith("PASS")


@pytest.mark.parametrize(
    "argv",
    [
        ["specht", "--M", "1 x", "--T", "1 2"],
        ["decompose", "--poly", "x1 +", "--n", "2"],
        ["tableaux", "enum", "--shape", "1,2", "--kind", "syt"],
        ["verify", "counting", "--nmax", "12"],
        ["no-such-command"],
    ],
)
def test_unparseable_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["specht", "--M", "1 1;3", "--T", "1 2;3 5;4"],
        ["decompose", "--poly", "x1 + x2^2", "--n", "2"],
        ["quotient", "--n", "2", "--k", "3", "--s", "3", "--d", "1"],
    ],
)
def test_mathematical_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.strip()


def test_structured_error_in_json_mode(capsys):
    code, out, err = run(capsys, "--json", "decompose", "--poly", "x1 + x2^2", "--n", "2")
    assert code == 1
    payload = json.loads(out or err)
    assert payload["error"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artifact", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify" in proc.stdout
