import csv
import io
import json
import subprocess
import sys

import pytest

from phi_descent import render
from phi_descent.cli import main
from phi_descent.criteria import verdict
from phi_descent.gauss import gauss_pair
from phi_descent.ntheory import Triple, valid_triples
from phi_descent.quadforms import class_group
from phi_descent.search import search_solutions


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_example_137(capsys):
    code, out, _ = run(capsys, "check", "--p", "137", "--c", "13", "--l", "2")
    d = json.loads(out)
    assert code == 0
    assert d["schema"] == "phi-descent/1"
    assert (d["status"], d["criterion"]) == ("NoSolutions", "II")
    assert d["evidence"]["value"] == "-1"


def test_check_example_47(capsys):
    code, out, _ = run(capsys, "check", "--p", "47", "--c", "3", "--l", "5")
    d = json.loads(out)
    assert code == 0
    assert (d["status"], d["criterion"], d["evidence"]["h"]) == ("NoSolutions", "III", "5")


def test_check_inconclusive_exit_code(capsys):
    code, out, _ = run(capsys, "check", "--p", "5", "--c", "61", "--l", "2", "--format", "text")
    assert code == 10
    assert "Inconclusive" in out


@pytest.mark.parametrize("argv", [
    ["check", "--p", "9", "--c", "3", "--l", "2"],
    ["check", "--p", "3", "--c", "5", "--l", "2"],
    ["check", "--p", "5", "--c", "2", "--l", "2"],
    ["check", "--p", "5", "--c", "5", "--l", "2"],
    ["check", "--p", "5", "--c", "3", "--l", "1"],
    ["check", "--p", "5", "--c", "3"],
    ["scan", "--p-max", "-1", "--c-max", "5"],
    ["scan", "--p-max", "10", "--c-max", "5", "--l-set", "1,2"],
    ["scan", "--p-max", "10", "--c-max", "5", "--l-set", "two"],
    ["gauss", "--p", "3"],
    ["classgroup", "--p", "8"],
    ["search", "--p", "5", "--c", "61", "--l", "2", "--x-bound", "0"],
    ["bogus"],
    ["check", "--p", "47", "--c", "3", "--l", "5", "--disc-bound", "10"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_scan_examples(capsys):
    code, out, _ = run(capsys, "scan", "--p-max", "7", "--c-max", "5", "--l-set", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["p", "c", "l", "status", "criterion"]
    # (3/7) = -1 and l = 2: both I and II hold, II is reported
    assert ["7", "3", "2", "NoSolutions", "II"] in rows

    _, out, _ = run(capsys, "scan", "--p-max", "5", "--c-max", "3", "--l-set", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 2 and rows[1][:3] == ["5", "3", "2"]


def test_scan_l_odd_reports_i(capsys):
    _, out, _ = run(capsys, "scan", "--p-max", "7", "--c-max", "5", "--l-set", "3")
    assert "7,3,3,NoSolutions,I" in out.splitlines()


@pytest.mark.slow
def test_scan_contains_137(capsys, tmp_path):
    fig = tmp_path / "scan.png"
    code, out, _ = run(capsys, "scan", "--p-max", "200", "--c-max", "20", "--l-set", "2,3",
                       "--figure", str(fig))
    assert code == 0
    assert "137,13,2,NoSolutions,II" in out.splitlines()
    assert fig.stat().st_size > 1000


def test_scan_rows_sorted_and_parallel_identical(capsys):
    _, serial, _ = run(capsys, "scan", "--p-max", "60", "--c-max", "20", "--l-set", "5,2,3")
    _, parallel, _ = run(capsys, "scan", "--p-max", "60", "--c-max", "20", "--l-set", "2,3,5", "--workers", "3")
    assert serial == parallel
    keys = [tuple(map(int, r[:3])) for r in list(csv.reader(io.StringIO(serial)))[1:]]
    assert keys == sorted(keys)
    assert len(keys) == len(valid_triples(60, 20, [2, 3, 5]))


def test_gauss_output(capsys):
    code, out, _ = run(capsys, "gauss", "--p", "5")
    d = json.loads(out)
    assert code == 0
    assert (d["A"], d["B"], d["delta"], d["identity"]) == (["2", "1", "2"], ["0", "1"], "1", "verified")


def test_classgroup_output(capsys):
    code, out, _ = run(capsys, "classgroup", "--p", "47")
    d = json.loads(out)
    assert code == 0
    assert (d["D"], d["h"], len(d["classes"])) == ("-47", "5", 5)


def test_search_output(capsys):
    code, out, _ = run(capsys, "search", "--p", "5", "--c", "61", "--l", "2", "--x-bound", "20")
    d = json.loads(out)
    assert code == 0
    assert {"x": "9", "y": "11"} in d["solutions"]


def test_out_file_and_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "check", "--p", "47", "--c", "3", "--l", "10", "--out", str(a))
    run(capsys, "check", "--p", "47", "--c", "3", "--l", "10", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["criterion"] == "III"


def test_disc_bound_env_and_flag(capsys, monkeypatch):
    monkeypatch.setenv("PHI_DESCENT_DISC_BOUND", "10")
    code, _, err = run(capsys, "check", "--p", "47", "--c", "3", "--l", "5")
    assert code == 2 and "bound" in err
    code, _, _ = run(capsys, "check", "--p", "47", "--c", "3", "--l", "5", "--disc-bound", "100")
    assert code == 0
    monkeypatch.setenv("PHI_DESCENT_DISC_BOUND", "junk")
    code, _, _ = run(capsys, "check", "--p", "47", "--c", "3", "--l", "5")
    assert code == 2


def test_csv_and_text_formats(capsys):
    code, out, _ = run(capsys, "gauss", "--p", "7", "--format", "csv")
    assert out.splitlines() == ["degree,A,B", "0,2,0", "1,1,1", "2,-1,1", "3,-2,0"]
    code, out, _ = run(capsys, "classgroup", "--p", "23", "--format", "csv")
    assert out.splitlines()[0] == "a,b,c" and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "check", "--p", "47", "--c", "3", "--l", "5", "--format", "text")
    assert "criterion III" in out and "h = 5" in out


# -- JSON round trips -------------------------------------------------------


@pytest.mark.parametrize("t", [Triple(137, 13, 2), Triple(137, 13, 3), Triple(47, 3, 5), Triple(5, 61, 2)])
def test_verdict_round_trip(t):
    v = verdict(t)
    assert render.verdict_from_dict(json.loads(render.dumps(render.verdict_to_dict(v)))) == v


@pytest.mark.parametrize("p", [5, 7, 47, 199])
def test_gauss_round_trip(p):
    gp = gauss_pair(p)
    assert render.gauss_from_dict(json.loads(render.dumps(render.gauss_to_dict(gp, True)))) == gp


@pytest.mark.parametrize("D", [-47, 5, 229])
def test_classgroup_round_trip(D):
    G = class_group(D)
    assert render.classgroup_from_dict(json.loads(render.dumps(render.classgroup_to_dict(G)))) == G


def test_search_round_trip():
    t = Triple(5, 61, 2)
    sols = search_solutions(t, 30)
    assert render.search_from_dict(json.loads(render.dumps(render.search_to_dict(t, 30, sols)))) == (t, 30, sols)


def test_large_integers_are_strings():
    d = render.gauss_to_dict(gauss_pair(199), True)
    assert all(isinstance(v, str) for v in d["A"] + d["B"])
    assert d["p"] == "199" and d["delta"] == "-1"


def test_console_entry_point_module():
    res = subprocess.run([sys.executable, "-m", "phi_descent", "check", "--p", "7", "--c", "3", "--l", "3",
                          "--format", "csv"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1] == "7,3,3,NoSolutions,I"
