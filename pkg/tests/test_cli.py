import csv
import io
import json
import subprocess
import sys

import pytest

from htrig.cli import main, parse_knots, sample_points


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_sample_order_one(capsys):
    code, out, _ = run(capsys, "sample", "--h", "1", "--knots", "0,1", "--order", "1",
                       "--from", "0", "--to", "1", "--step", "0.25")
    assert code == 0
    table = rows(out)
    assert table[0] == ["x", "T_{0,1}"]
    assert [r[0] for r in table[1:]] == ["0.0", "0.25", "0.5", "0.75"]
    for r in table[1:]:
        assert float(r[1]) == pytest.approx(2.943972160909412621, rel=1e-14)


def test_sample_degenerate_range(capsys):
    code, _, err = run(capsys, "sample", "--h", "1", "--knots", "0,1", "--order", "1",
                       "--from", "0", "--to", "0", "--step", "0.25")
    assert code == 2
    assert "error" in err


@pytest.mark.parametrize("argv", [
    ["--knots", "0,x,1"],
    ["--knots", "0,2,1"],
    ["--knots", "0,10"],
    ["--knots", "0,1", "--h", "-1"],
    ["--knots", "0,1", "--order", "2"],
    ["--knots", "@/nonexistent/knots.txt"],
])
def test_sample_bad_input(capsys, argv):
    base = {"--h": "1", "--order": "1"}
    extra = dict(zip(argv[::2], argv[1::2]))
    base.update(extra)
    flat = [tok for kv in base.items() for tok in kv]
    code, _, _ = run(capsys, "sample", *flat, "--from", "0", "--to", "1", "--step", "0.5")
    assert code == 2


def test_sample_complex_flavor_and_knot_file(capsys, tmp_path):
    f = tmp_path / "knots.txt"
    f.write_text("# knots\n0.0\n0.6  # second\n\n1.3\n2.0\n")
    assert parse_knots(f"@{f}") == [0.0, 0.6, 1.3, 2.0]
    code, out, _ = run(capsys, "sample", "--h", "0.5", "--knots", f"@{f}", "--order", "2",
                       "--from", "0", "--to", "2", "--step", "0.05", "--flavor", "E")
    assert code == 0
    table = rows(out)
    assert table[0] == ["x", "E_{0,2}_re", "E_{0,2}_im", "E_{1,2}_re", "E_{1,2}_im"]
    mods = [abs(complex(float(r[1]), float(r[2]))) for r in table[1:]]
    # continuous inside the support: no jumps larger than a few steps of slope
    assert max(abs(a - b) for a, b in zip(mods, mods[1:])) < 0.5


def test_sample_points_half_open():
    assert sample_points(0.0, 1.0, 0.25) == [0.0, 0.25, 0.5, 0.75]
    assert len(sample_points(0.0, 1.0, 0.3)) == 4


def test_sample_deterministic(tmp_path, capsys):
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        assert main(["sample", "--h", "0.3", "--knots", "0,0.5,1.1,1.9,2.4", "--order", "3",
                     "--from", "-0.5", "--to", "3", "--step", "0.01", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_check_json(capsys):
    code, out, err = run(capsys, "check", "--suite", "trig-identities", "--h", "1", "--seed", "42",
                         "--samples", "1000", "--json")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["passed"] is True and rep["max_residual"] < 1e-12
    assert rep["seed"] == 42 and rep["samples"] == 1000
    assert rep["max_residual"] >= rep["mean_residual"] >= 0
    assert "PASS" in err


def test_check_marsden(capsys):
    code, out, _ = run(capsys, "check", "--suite", "marsden", "--h", "0.25", "--tol", "1e-10",
                       "--samples", "20", "--json")
    assert code == 0 and json.loads(out)[0]["passed"]


def test_check_failure_exit(capsys):
    code, out, _ = run(capsys, "check", "--suite", "dd-oracles", "--h", "1", "--samples", "5",
                       "--tol", "1e-30", "--json")
    assert code == 1
    assert json.loads(out)[0]["passed"] is False


def test_check_multiple_h_and_env_seed(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("HTRIG_SEED", "7")
    path = tmp_path / "r.json"
    code, _, _ = run(capsys, "check", "--suite", "operators", "--h", "-0.5", "--h", "2",
                     "--samples", "3", "--json", str(path))
    assert code == 0
    reps = json.loads(path.read_text())
    assert [r["h"] for r in reps] == [-0.5, 2.0]
    assert all(r["seed"] == 7 for r in reps)


def test_check_usage_errors(capsys):
    assert run(capsys, "check", "--suite", "nope")[0] == 2
    assert run(capsys, "check", "--h", "0")[0] == 2
    assert run(capsys, "check", "--samples", "0")[0] == 2
    assert run(capsys, "check", "--seed", "-3")[0] == 2
    assert run(capsys)[0] == 2


def test_converge(capsys):
    code, out, _ = run(capsys, "converge", "--knots", "0,0.4,1.0,1.5,2.1", "--order", "3",
                       "--h-start", "0.1", "--halvings", "6", "--points", "100")
    assert code == 0
    table = rows(out)
    assert table[0] == ["h", "max_error", "ratio"]
    errs = [float(r[1]) for r in table[1:]]
    assert len(errs) == 7
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert all(1.7 <= float(r[2]) <= 2.3 for r in table[2:])
    code, out, _ = run(capsys, "converge", "--knots", "0,1,2", "--order", "2", "--halvings", "0")
    assert code == 0 and len(rows(out)) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "htrig", "check", "--suite", "hcalc",
                          "--samples", "5"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stderr.startswith("PASS hcalc")
