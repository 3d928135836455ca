import json

import pytest

from dirac_spectra import cli
from dirac_spectra.errors import BoundaryZero

BASE = {
    "b1": -1,
    "b2": 2,
    "q12_coeffs": [[0.7, 0], [2, 0]],
    "q21_coeffs": [[3, 0], [-1, 0], [0.5, 0]],
    "boundary_rows": [[1, 1, 0, 0], [0, 0, 1, 1]],
    "order_n": 3,
    "tolerances": {"zero_tol": 1e-9, "ode_tol": 1e-11},
    "scan": {"t_min": 5, "t_max": 40, "points": 6},
}


def _write(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def _run(tmp_path, command, doc, *extra):
    return cli.run([command, "--config", _write(tmp_path, doc), *extra])


def test_classify_regular(tmp_path):
    status, out, _ = _run(tmp_path, "classify", BASE)
    assert status == 0
    assert '"class":"Regular"' in out
    data = json.loads(out)
    assert len(data["p_derivatives"]["x0"]) == 4
    assert data["minors"]["J32"] == [-1, 0]


def test_classify_degenerate(tmp_path):
    doc = dict(BASE, boundary_rows=[[1, 0, 0, 0], [0, 0, 0, 1]])
    status, out, _ = _run(tmp_path, "classify", doc)
    assert status == 0 and '"class":"DegenerateDeltaZeroConstant"' in out


@pytest.mark.parametrize(
    "change",
    [
        {"boundary_rows": [[1, 0, 0, 0], [2, 0, 0, 0]]},  # rank 1
        {"b1": 1},
        {"order_n": 13},
        {"tolerances": {"ode_tol": 1e-3}},
        {"scan": {"t_min": 5, "t_max": 1, "points": 4}},
        {"extra_key": 1},
        {"q12_coeffs": [[1, 2, 3]]},
    ],
)
def test_invalid_configs_exit_2(tmp_path, change):
    status, out, err = _run(tmp_path, "classify", dict(BASE, **change))
    assert status == cli.EXIT_INVALID and out == "" and "invalid" in err


def test_unreadable_config(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.run(["classify", "--config", str(bad)])[0] == cli.EXIT_INVALID
    assert cli.run(["classify", "--config", str(tmp_path / "missing.json")])[0] == cli.EXIT_INVALID


def test_missing_sections_exit_2(tmp_path):
    doc = {k: v for k, v in BASE.items() if k != "scan"}
    assert _run(tmp_path, "scan", doc)[0] == cli.EXIT_INVALID
    assert _run(tmp_path, "eigenvalues", doc)[0] == cli.EXIT_INVALID


def test_numeric_failure_exit_3(tmp_path, monkeypatch):
    def boom(*args, **kwargs):
        raise BoundaryZero("forced")

    monkeypatch.setattr(cli, "locate_zeros", boom)
    doc = dict(BASE, rect={"re_min": -1, "re_max": 1, "im_min": -1, "im_max": 1})
    status, _, err = _run(tmp_path, "eigenvalues", doc)
    assert status == cli.EXIT_NUMERIC and "forced" in err


def test_coefficients_command(tmp_path):
    status, out, _ = _run(tmp_path, "coefficients", BASE)
    data = json.loads(out)
    assert status == 0 and data["closed_form_check"]["ok"]
    assert data["k_plus"] == 0 and len(data["c_plus"]) == 4
    assert len(data["thresholds_plus"]) == 4


def test_scan_csv(tmp_path):
    out_path = tmp_path / "scan.csv"
    status, out, _ = _run(tmp_path, "scan", BASE, "--out", str(out_path))
    assert status == 0 and out == ""
    lines = out_path.read_text().splitlines()
    assert lines[0] == "t,re_norm,im_norm"
    assert len(lines) == 7
    assert float(lines[1].split(",")[0]) == 5.0


def test_verify_asymptotics(tmp_path):
    doc = dict(BASE, boundary_rows=[[1, 0, 0, 0], [0, 0, 0, 1]])
    status, out, _ = _run(tmp_path, "verify-asymptotics", doc)
    data = json.loads(out)
    assert status == 0
    assert data["upper"]["k"] == 2 and data["upper"]["within_2pct"] and data["upper"]["residual_slope_ok"]
    assert data["lower"]["k"] == 0 and data["lower"]["within_2pct"]


def test_eigenvalues(tmp_path):
    doc = dict(BASE, b1=-1, b2=1, q12_coeffs=[], q21_coeffs=[], boundary_rows=[[1, 0, 1, 0], [0, 1, 0, 1]],
               rect={"re_min": -10, "re_max": 10, "im_min": -1, "im_max": 1})
    status, out, _ = _run(tmp_path, "eigenvalues", doc)
    data = json.loads(out)
    assert status == 0 and data["total_count"] == 8
    assert [e["multiplicity"] for e in data["eigenvalues"]] == [2, 2, 2, 2]


def test_report_embeds_rule_and_thresholds(tmp_path):
    status, out, _ = _run(tmp_path, "report", BASE)
    data = json.loads(out)
    assert status == 0
    assert data["verdict"]["rule"] == "Thm-compl-gen-2x2"
    assert data["verdict"]["zero_tol"] == 1e-9
    assert all("threshold" in w for w in data["verdict"]["witnesses"].values())
    assert data["corroboration"]["status"] == "OK"


def test_report_deterministic(tmp_path):
    cfg = _write(tmp_path, BASE)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.run(["report", "--config", cfg, "--out", str(a)])[0] == 0
    assert cli.run(["report", "--config", cfg, "--out", str(b), "--seed", "7"])[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_main_writes_stdout(tmp_path, capsys):
    assert cli.main(["classify", "--config", _write(tmp_path, BASE)]) == 0
    assert capsys.readouterr().out.startswith("{")
