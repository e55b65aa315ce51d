import json
import subprocess
import sys

import pytest

from rotpoly import Poly, parse_poly, poly_from_dict
from rotpoly.cli import main


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_mean_example(capsys):
    code, out, _ = run(["mean", "-N", "4", "x1^4*x2^6"], capsys)
    assert code == 0 and out.strip() == "1/512"


def test_basis_example(capsys):
    code, out, _ = run(["basis", "2", "3"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    assert parse_poly(lines[0], 2) == parse_poly("x1^3 - 3*x1*x2^2", 2)


def test_decompose_example(capsys):
    code, out, _ = run(["decompose", "-N", "2", "x1^2"], capsys)
    assert code == 0
    assert out.strip().splitlines() == ["1/2*x1^2 - 1/2*x2^2", "1/2"]


def test_project(capsys):
    code, out, _ = run(["project", "-N", "2", "--", "-1/2", "x1^2"], capsys)
    assert code == 0 and out.strip() == "1/2*x1^2 - 1/2*x2^2 - 1/4"


def test_zonal(capsys):
    code, out, _ = run(["zonal", "1,0,0", "1", "2"], capsys)
    assert code == 0
    q_line, h_line = out.strip().splitlines()
    assert q_line == "q(x1) = x1^2 - 1/3"
    assert parse_poly(h_line.split("=", 1)[1], 3) == parse_poly("2/3*x1^2 - 1/3*x2^2 - 1/3*x3^2", 3)


def test_eigen(capsys):
    code, out, _ = run(["eigen", "1,1", "1,-1", "4"], capsys)
    assert code == 0
    assert parse_poly(out, 4) == parse_poly("x1 + i*x2", 4) * parse_poly("x3 - i*x4", 4)


def test_rotate(tmp_path, capsys):
    m = tmp_path / "a.txt"
    m.write_text("3/5 4/5\n-4/5 3/5\n")
    code, out, _ = run(["rotate", "-N", "2", "--matrix", str(m), "x1"], capsys)
    assert code == 0 and out.strip() == "3/5*x1 - 4/5*x2"
    bad = tmp_path / "b.txt"
    bad.write_text("1 1\n0 1\n")
    code, _, err = run(["rotate", "-N", "2", "--matrix", str(bad), "x1"], capsys)
    assert code == 1 and "orthogonal" in err


@pytest.mark.parametrize("args", [
    ["mean", "-N", "2", "x1^2*x2 + x3"],
    ["mean", "-N", "2", "x1 +"],
    ["basis", "1", "2"],
    ["zonal", "0,0,0", "1", "2"],
    ["eigen", "1", "1", "4"],
    ["project", "-N", "2", "1/0", "x1"],
    ["rotate", "-N", "2", "--matrix", "/nonexistent", "x1"],
    ["verify", "no-such-suite"],
    ["frobnicate"],
])
def test_failures_exit_one(args, capsys):
    code, out, err = run(args, capsys)
    assert code == 1
    assert err.startswith("error:") and len(err.strip().splitlines()) == 1


def test_json_output(capsys):
    code, out, _ = run(["decompose", "-N", "2", "--json", "x1^2"], capsys)
    data = json.loads(out)
    parts = [poly_from_dict(d) for d in data["parts"]]
    assert parts[1] == Poly.constant(2, parse_poly("1/2", 2).constant_term())
    code, out, _ = run(["mean", "-N", "4", "--json", "x1^4*x2^6"], capsys)
    assert json.loads(out)["value"] == {"re_num": 1, "re_den": 512, "im_num": 0, "im_den": 1}


def test_printed_polynomials_reparse(capsys):
    for N, d in ((2, 4), (3, 3), (4, 2)):
        code, out, _ = run(["basis", str(N), str(d)], capsys)
        for line in out.strip().splitlines():
            p = parse_poly(line, N)
            assert str(p) == line


def test_verify_single_suite(capsys):
    code, out, _ = run(["verify", "4"], capsys)
    assert code == 0 and "PASS" in out


def test_verify_failure_exit_code(monkeypatch, capsys):
    from rotpoly import verify

    def broken(rng):
        r = verify.SuiteResult("x", "always fails")
        r.check(False, "forced")
        return r

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out, _ = run(["verify", "broken"], capsys)
    assert code == 2 and "FAIL" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rotpoly", "mean", "-N", "3", "x1^2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1/3"
