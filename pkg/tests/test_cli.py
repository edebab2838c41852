import json
import subprocess
import sys

import pytest

from satotate.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalan_moments(capsys):
    code, out, _ = run(capsys, "moments", "--group", "USp2", "--k", "1", "--max-m", "12")
    assert code == 0
    assert out.strip() == "1,0,1,0,2,0,5,0,14,0,42,0,132"


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table1", "--group", "USp4", "--range", "3")
    rows = [l.split(",") for l in out.strip().splitlines()[1:]]
    assert code == 0
    assert [(r[1], r[2]) for r in rows if r[3] != "0/1"] == [("0", "0")]


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--id", "kappa-identity", "--n", "4", "--m", "3")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "dual-cauchy" in out.split()


def test_char_json_round_trip(capsys):
    from satotate.characters import sp_poly
    from satotate.laurent import LaurentPoly
    code, out, _ = run(capsys, "char", "--lambda", "2,1", "--m", "3", "--format", "json")
    assert code == 0
    assert LaurentPoly.from_json(json.loads(out)) == sp_poly((2, 1), 3)


def test_dim_and_coeff(capsys):
    assert run(capsys, "dim", "--lambda", "3,1", "--m", "2")[1].strip() == "35"
    assert run(capsys, "coeff", "--group", "C2", "--z", "0", "--b", "0")[1].strip() == "1/1"
    assert run(capsys, "coeff", "--family", "psi", "--n", "4", "--z", "1", "--b", "1")[1].strip() == "1/1"


def test_autocorr_json(capsys):
    code, out, _ = run(capsys, "autocorr", "--group", "J(C_3)", "--m", "2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["group"] == "JC3"
    assert d["coefficients"] == {"0,0": "1/1", "0,1": "0/1", "0,2": "2/1", "1,0": "1/1"}


def test_atlas_json(capsys):
    code, out, _ = run(capsys, "atlas", "--group", "O", "--format", "json")
    assert code == 0 and json.loads(out)["cosets"] == 24


def test_mc(capsys):
    code, out, _ = run(capsys, "mc", "--group", "C3", "--m", "2", "--x", "0.3,0.7",
                       "--samples", "20000", "--seed", "42")
    d = json.loads(out)
    assert code == 0 and d["sigma_distance"] <= 4


def test_output_is_deterministic(capsys):
    a = run(capsys, "mc", "--group", "E2", "--samples", "5000")[1]
    b = run(capsys, "mc", "--group", "E2", "--samples", "5000")[1]
    assert a == b


@pytest.mark.parametrize("argv", [
    ["coeff", "--group", "Q9", "--z", "0", "--b", "0"],
    ["char", "--lambda", "1,x", "--m", "2"],
    ["char", "--lambda", "1,1,1", "--m", "2"],
    ["mc", "--group", "C1", "--m", "2", "--x", "0.5"],
    ["autocorr", "--group", "NG3,3", "--m", "1"],
    ["verify", "--id", "nope"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("satotate")


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["dim", "--bogus"])
    assert e.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "satotate", "dim", "--lambda", "1", "--m", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "4"
