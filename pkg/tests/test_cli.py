import csv
import io
import json
import subprocess
import sys

import pytest

from qdeformed.cli import main
from qdeformed.measures import weight_omega_qgauss
from qdeformed.orthopoly import x_to_theta


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#")))


def test_eval_values(capsys):
    code, out, _ = run(capsys, "eval", "bracket", "--n", "3", "--q", "0.5")
    assert code == 0
    assert float(rows(out)[0]["value_re"]) == 1.75
    _, out, _ = run(capsys, "eval", "phi", "--n", "0", "--x", "0.1")
    assert float(rows(out)[0]["value_re"]) == 1.0
    _, out, _ = run(capsys, "eval", "normalization", "--q", "0.5", "--alpha", "0.25", "--r2", "1.0")
    assert float(rows(out)[0]["value_re"]) == pytest.approx(2.7956321597452622, rel=1e-15)
    _, out, _ = run(capsys, "eval", "pochhammer", "--a", "-0.25", "--n", "2", "--q", "0.5")
    assert float(rows(out)[0]["value_re"]) == 1.40625


@pytest.mark.parametrize(
    "args",
    [
        ["factorial", "--n", "4"],
        ["qexp", "--xi", "0.5+0.5j"],
        ["asc", "--n", "3", "--theta", "1.0", "--alpha", "0.1"],
        ["kernel", "--z", "0.3", "--w", "0.2j", "--alpha", "-0.5"],
        ["wavefunction", "--z", "0.5-0.1j", "--x", "0.3", "--alpha", "0.25"],
        ["weight", "--x", "0.3"],
        ["pochhammer", "--a", "0.5"],
    ],
)
def test_eval_subjects(capsys, args):
    code, out, _ = run(capsys, "eval", *args)
    assert code == 0
    (row,) = rows(out)
    assert "value_re" in row and "tol" in row


def test_eval_float_format(capsys):
    _, out, _ = run(capsys, "eval", "bracket", "--n", "3", "--q", "0.3")
    value = rows(out)[0]["value_re"]
    mantissa = value.split("e")[0].replace(".", "").lstrip("-")
    assert len(mantissa) == 17
    assert float(value) == pytest.approx(1 + 0.3 + 0.09, rel=1e-16)


def test_eval_json(capsys):
    _, out, _ = run(capsys, "eval", "bracket", "--n", "2", "--q", "0.5", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][0]["value_re"] == 1.5


def test_exit_codes(capsys):
    code, _, err = run(capsys, "eval", "bracket", "--n", "3", "--q", "1.5")
    assert code == 2 and "0 < q < 1" in err
    code, _, err = run(capsys, "eval", "bracket", "--q", "0.5", "--alpha", "0.7")
    assert code == 2
    code, _, err = run(capsys, "eval", "qexp", "--xi", "5", "--q", "0.5")
    assert code == 2
    code, _, err = run(capsys, "eval", "phi", "--n", "2")
    assert code == 2 and "--x" in err
    code, _, err = run(capsys, "eval", "normalization", "--r2", "0.5", "--tol", "0")
    assert code == 2 and "rel_tol" in err
    code, _, err = run(capsys, "eval", "qexp", "--xi", "1.9", "--q", "0.5", "--max-terms", "5")
    assert code == 3 and "convergence" in err


def test_verify_pass_and_fail(capsys):
    code, out, err = run(capsys, "verify", "gram", "--q", "0.5", "--alpha", "0.3")
    assert code == 0
    assert all(r["passed"] == "true" for r in rows(out))
    code, out, _ = run(capsys, "verify", "gram", "--q", "0.5", "--alpha", "0.3", "--quad-order", "10")
    assert code == 1
    assert any(r["passed"] == "false" for r in rows(out))


def test_verify_moments_default_grid(capsys):
    code, out, _ = run(capsys, "verify", "moments")
    assert code == 0
    data = rows(out)
    assert len({(r["q"], r["alpha"]) for r in data}) == 9
    assert max(float(r["residual"]) for r in data if r["name"].startswith("moment")) < 1e-8


def test_export_atoms_footer(capsys):
    _, out, _ = run(capsys, "export", "atoms", "--q", "0.5", "--alpha", "0.25")
    footer = [line for line in out.splitlines() if line.startswith("# sum_weight=")]
    assert float(footer[0].split("=")[1]) == pytest.approx(1.0, abs=1e-12)
    assert rows(out)[0].keys() == {"index", "radius", "weight"}


def test_export_deterministic(tmp_path, capsys):
    for subject in ("atoms", "quadrature", "weight-curve", "wavefunction-grid", "sweep"):
        a, b = tmp_path / f"a-{subject}.csv", tmp_path / f"b-{subject}.csv"
        assert main(["export", subject, "--q", "0.8", "--alpha", "-0.5", "--out", str(a)]) == 0
        assert main(["export", subject, "--q", "0.8", "--alpha", "-0.5", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


def test_export_env_outdir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QDEFORMED_OUTDIR", str(tmp_path))
    assert main(["export", "quadrature", "--quad-order", "16", "--format", "json"]) == 0
    doc = json.loads((tmp_path / "quadrature.json").read_text())
    assert len(doc["rows"]) == 16


def test_export_weight_curve_alpha_zero_matches_qgauss(capsys):
    _, out, _ = run(capsys, "export", "weight-curve", "--q", "0.5", "--alpha", "0", "--points", "51")
    for r in rows(out):
        ref = float(weight_omega_qgauss(x_to_theta(float(r["x"]), 0.5), 0.5))
        assert float(r["weight"]) == pytest.approx(ref, abs=1e-13)


def test_export_sweep_monotone(capsys):
    _, out, _ = run(capsys, "export", "sweep")
    errs = [float(r["error"]) for r in rows(out)]
    assert errs == sorted(errs, reverse=True) and len(errs) == 3


def test_export_io_error(capsys):
    code, _, err = run(capsys, "export", "sweep", "--out", "/nonexistent-dir/x.csv")
    assert code == 4 and "/nonexistent-dir/x.csv" in err


def test_help_documents_columns():
    proc = subprocess.run([sys.executable, "-m", "qdeformed", "export", "--help"], capture_output=True, text=True, check=True)
    assert "index, radius, weight" in proc.stdout and "QDEFORMED_OUTDIR" in proc.stdout
