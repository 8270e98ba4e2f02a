import json
import subprocess
import sys

import pytest

from schurkit.cli import main, parse_label


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_label():
    assert parse_label("F0") == ("F", 0, True)
    assert parse_label("S:2,1") == ("S", (2, 1), False)
    with pytest.raises(ValueError):
        parse_label("Q1")


def test_ext_closed(capsys):
    code, out, _ = run(capsys, "ext", "closed", "F0", "S1", "-n", "2")
    assert code == 0 and "q=1:1" in out


def test_ext_brute(capsys):
    code, out, err = run(capsys, "ext", "brute", "F0", "F0", "-p", "3", "-n", "2", "--qmax", "4")
    assert code == 0
    assert "1, 0, 1, 0, 0" in out
    assert "resolving" in err


def test_ext_compare(capsys):
    code, out, _ = run(capsys, "ext", "--compare", "S0", "W0", "-p", "3", "-n", "2")
    assert code == 0 and out.startswith("MATCH")


def test_ext_json_and_csv(capsys):
    code, out, _ = run(capsys, "ext", "closed", "F0", "W1", "--format", "json")
    data = json.loads(out)
    assert data["pair"] == ["F0", "W1"] and data["dims"]["1"] == 1 and data["qmax"] == 4
    code, out, _ = run(capsys, "ext", "closed", "F0", "F1", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "labelA,labelB,q,dim" and lines[2] == "F0,F1,1,1"


def test_ext_general_labels(capsys):
    code, out, _ = run(capsys, "ext", "S:2,1", "W:2,1", "-p", "3", "-n", "2", "--qmax", "2")
    assert code == 0 and "1, 0, 0" in out


def test_sw(capsys):
    assert run(capsys, "sw", "hat", "1,1,1", "-n", "2", "-k", "3")[1].strip() == "1,1,1"
    code, out, _ = run(capsys, "sw", "char", "2,1", "-n", "2", "-k", "2")
    assert code == 0 and "MATCH" in out
    code, out, _ = run(capsys, "sw", "ext", "1,1", "--mu", "2", "-n", "2", "-k", "2", "-p", "2")
    assert code == 0 and "MATCH" in out


def test_yoneda(capsys):
    code, out, _ = run(capsys, "yoneda", "-n", "2", "--table")
    assert code == 0
    assert "dimension 5" in out and "b^1_01 * b^1_10 = b^2_00" in out
    assert "verbatim: fails associativity" in out


def test_rs_and_rjstar(capsys):
    assert run(capsys, "rs", "F", "0", "-p", "3", "-n", "2")[0] == 0
    assert run(capsys, "rjstar", "W", "0", "-p", "3", "-n", "2", "-m", "3")[0] == 0
    code, out, _ = run(capsys, "rjstar", "W", "0", "--printed")
    assert code == 1 and "MISMATCH" in out


def test_character_and_blocks(capsys):
    assert run(capsys, "character", "S:2,1", "-n", "2")[1].strip() == "x1^2*x2 + x1*x2^2"
    code, out, _ = run(capsys, "blocks", "-p", "3", "-n", "3", "-d", "3", "--format", "json")
    assert json.loads(out) == [[[3], [2, 1], [1, 1, 1]]]


def test_exit_codes(capsys):
    assert run(capsys, "ext", "X0", "F0")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    # a general label builds a new module, so nothing comes from earlier caches
    assert run(capsys, "--budget", "10", "ext", "S:3,1,1", "S:3,1,1", "-n", "3", "-p", "5")[0] == 3


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "list")
    assert code == 0 and len(out.strip().splitlines()) == 10


def test_console_script_verify_subset(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "schurkit.cli", "--cache-dir", str(tmp_path),
                           "verify", "--suite", "p3n2", "--criteria", "2,8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.count("[PASS]") == 2


def test_blocks_pretty(capsys):
    code, out, _ = run(capsys, "blocks", "-p", "5", "-n", "2", "-d", "5")
    assert code == 0 and len(out.strip().splitlines()) == 2
    out = run(capsys, "blocks", "-p", "5", "-n", "2", "-d", "2")[1]
    assert len(out.strip().splitlines()) == 2


def test_rejects_composite_p(capsys):
    code, _, err = run(capsys, "blocks", "-p", "4", "-n", "2", "-d", "2")
    assert code == 2 and "not prime" in err


def test_dump(capsys):
    code, out, _ = run(capsys, "dump", "W1", "-n", "2")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 2 and "blocks" not in data
    again = json.loads(run(capsys, "dump", "W1", "-n", "2")[1])
    assert again["digest"] == data["digest"]
    full = json.loads(run(capsys, "--dump-full", "dump", "S0", "-n", "2")[1])
    assert "blocks" in full
