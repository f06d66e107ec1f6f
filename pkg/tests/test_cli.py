from __future__ import annotations

import json
import subprocess
import sys

import pytest

from h4poly.cli import main, main_to_string
from h4poly.golden import parse_scalar


def _json(argv):
    return json.loads(main_to_string(argv))


def test_orbit_600_cell():
    data = _json(["orbit", "--weight", "0,0,0,1"])
    assert data["vertices"] == 120
    assert data["stabilizer_order"] == 120


def test_orbit_listing_and_subgroup():
    data = _json(["orbit", "--group", "h3", "--weight", "1,0,1", "--list"])
    assert data["vertices"] == 60 and len(data["points"]) == 60


@pytest.mark.parametrize("weight", ["0,0,0,0", "0,-1,0,1", "1,2", "x,0,0,1"])
def test_bad_weights_exit_nonzero(weight, capsys):
    assert main(["orbit", "--weight", weight]) == 2
    err = capsys.readouterr().err
    assert "h4poly: error" in err and weight in err


def test_dual_rectified_600_cell():
    data = _json(["dual", "--weight", "0,1,0,0", "--anchor", "4"])
    assert parse_scalar(data["scales"]["1"]) == parse_scalar("2/(3*t)")
    assert data["radii_ratios"]["R4/R4"] == 1.0
    assert abs(1 / data["radii_ratios"]["R1/R4"] - 1.061) < 5e-4
    assert data["dual_vertices"] == 720 and data["dual_cells"] == 1200


def test_table_cartan():
    data = _json(["table", "cartan", "--group", "h4"])
    assert data["cartan"][0][0] == "2"
    assert data["cartan"][0][1] == "-t"
    assert len(data["cartan_inverse"]) == 4


def test_classes():
    data = _json(["classes"])
    assert data["order"] == 120
    assert [c["size"] for c in data["classes"]] == [1, 1, 12, 12, 12, 12, 20, 20, 30]


def test_cells():
    data = _json(["cells", "--weight", "1,1,0,1"])
    assert data["total_cells"] == 2640


def test_shells():
    data = _json(["shells", "--weight", "0,0,0,1"])
    assert [s["size"] for s in data] == [1, 12, 20, 12, 30, 12, 20, 12, 1]


def test_export_shell(tmp_path):
    out = tmp_path / "ico.obj"
    info = _json(["export", "--weight", "0,0,0,1", "--shell", "1", "--format", "obj", str(out)])
    assert info["vertices"] == 12 and info["faces"] == 20
    assert out.exists()


def test_export_dual_cell(tmp_path):
    out = tmp_path / "cell.off"
    info = _json(["export", "--weight", "0,1,0,0", "--dual-cell", str(out)])
    assert info["faces"] == 6
    assert out.read_text().startswith("OFF\n")


def test_export_shell_out_of_range(tmp_path):
    assert main(["export", "--weight", "0,0,0,1", "--shell", "99", str(tmp_path / "x.off")]) == 2


def test_json_file_output(tmp_path):
    out = tmp_path / "b.json"
    assert main(["branch", "--weight", "0,0,0,1", "--json", str(out)]) == 0
    assert json.loads(out.read_text())["orbit_size"] == 120


@pytest.mark.parametrize("sub", ["h3", "a4", "a3"])
def test_jobs_byte_identical(sub):
    argv = ["branch", "--weight", "0,1,0,1", "--subgroup", sub]
    assert main_to_string(argv + ["--jobs", "1"]) == main_to_string(argv + ["--jobs", "8"])


def test_jobs_must_be_positive():
    with pytest.raises(SystemExit):
        main(["branch", "--weight", "0,0,0,1", "--jobs", "0"])


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "h4poly", "orbit", "--weight", "1,0,0,0"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["vertices"] == 600


def test_verify_subset():
    out = main_to_string(["verify-paper", "--only", "1", "4"])
    assert "[PASS]  1." in out and "[PASS]  4." in out
    assert "2/2 criteria pass" in out
