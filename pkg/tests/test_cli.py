import json
import subprocess
import sys

import pytest

from hookblock.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_ext_command(capsys):
    code, out = run(capsys, "ext", "--p", "5", "--from", "F:1", "--to", "S:3")
    assert code == 0
    assert json.loads(out)["dims"] == {"2": 1}


def test_ext_oracle_flag(capsys):
    code, out = run(capsys, "ext", "--p", "3", "--from", "F:0", "--to", "F:0", "--oracle")
    assert json.loads(out)["dims"] == {"0": 1, "2": 1, "4": 1}


def test_decomp_command(capsys):
    code, out = run(capsys, "decomp", "--p", "3")
    assert json.loads(out)["matrix"] == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    code, out = run(capsys, "decomp", "--p", "3", "--format", "table")
    assert out.splitlines() == ["1 1 0", "0 1 1", "0 0 1"]


def test_theta_command(capsys):
    code, out = run(capsys, "theta", "--p", "2", "--core", "1", "--object", "S:2,2")
    assert json.loads(out)["factors"] == {"S:3,2": 1, "S:2,2,1": 1}


def test_abacus_and_block(capsys):
    code, out = run(capsys, "abacus", "--p", "7", "--partition", "4,3,3,1")
    data = json.loads(out)
    assert data["core"] == "2,2" and data["weight"] == 1
    code, out = run(capsys, "block", "--p", "2", "--core", "1")
    assert json.loads(out)["labels"] == ["1,1,1", "3"]


def test_yoneda_and_kl(capsys):
    code, out = run(capsys, "yoneda", "--p", "3", "--family", "simple", "--check")
    assert code == 0 and json.loads(out)["dim"] == 14
    code, out = run(capsys, "kl", "--p", "5")
    assert code == 0


def test_verify_small(capsys):
    code, out = run(capsys, "verify", "--p", "2", "--suite", "oracle")
    assert code == 0
    assert {r["status"] for r in json.loads(out)} == {"pass"}


def test_verify_tier(capsys):
    assert main(["verify", "--p", "5", "--suite", "oracle"]) == 2


def test_bad_prime_is_a_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["decomp", "--p", "4"])
    assert err.value.code != 0


def test_output_is_byte_stable():
    cmd = [sys.executable, "-m", "hookblock", "block", "--p", "3", "--core", "1"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
