import io
import json

import pytest

from orbitmethod.cli import execute


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = execute(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def machine(*argv):
    code, out, _ = run(*argv, "--json")
    assert code == 0
    return json.loads(out)


def test_params_enumerate():
    (rep,) = machine("params", "enumerate", "--group", "pgl2", "--a", "1/2")
    assert len(rep["data"]) == 3
    assert rep["data"][0]["y"] == "diag(i, -i)"


def test_params_classify():
    (rep,) = machine("params", "classify", "--a", "3/2")
    assert [r["component_group"] for r in rep["data"]] == ["1", "1", "Z/2"]


def test_kgroup_mg():
    (rep,) = machine("kgroup", "mg", "--group", "pgl2", "--lambda", "rho")
    assert rep["data"]["rows"] == [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
    assert rep["data"]["legend"][2] == "(U,triv)"


def test_kgroup_coords_equal_rho():
    assert machine("kgroup", "mr", "--lambda", "1/2,-1/2") == machine("kgroup", "mr", "--lambda", "rho")


def test_kgroup_packet_all_strata():
    reps = machine("kgroup", "packet")
    assert [r["data"]["stratum"] for r in reps] == ["N", "S", "U"]


def test_duality_map_zero_orbit():
    code, out, _ = run("duality", "map", "--group", "gl2", "--q", "2", "--chol", "0", "--canti", "0")
    assert code == 0
    assert "zero orbit, xi = 0" in out


def test_duality_split():
    (rep,) = machine("duality", "split", "--group", "gl2", "--q", "1,1", "--chol", "i,0", "--canti", "i,0")
    assert rep["data"] == {"levi": [1, 1], "q": [[1], [1]], "xi1": ["i", "0"]}


def test_orbit_commands():
    (rep,) = machine("orbit", "bind", "--levi", "2,1", "--orbits", "1,1;1")
    assert rep["data"]["descriptor"] == [["0", [2, 1]]]
    (rep,) = machine("orbit", "minimal", "--desc", "0:2,1;i:1")
    assert rep["data"]["levi"] == [2, 1, 1]
    (rep,) = machine("orbit", "rigid", "--n", "3")
    assert [r["rigid"] for r in rep["data"]] == [False, False, True]


@pytest.mark.parametrize("argv,name", [
    (("params", "enumerate", "--a", "-1"), "NormalizationViolated"),
    (("params", "enumerate", "--group", "gl3"), "UnsupportedGroup"),
    (("geo", "stratify", "--group", "gl3"), "UnsupportedGeometry"),
    (("duality", "split", "--q", "2", "--chol", "i,0", "--canti", "i,0"), "SL2NotInLevi"),
])
def test_computation_errors(argv, name):
    code, _, err = run(*argv)
    assert code == 1
    assert err.startswith(name)


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("params", "nope"),
    ("params", "enumerate", "--a", "x/y"),
    ("geo", "stratify", "--lambda", "1,2,3"),
    ("kgroup", "mg", "--group", "gl9"),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_report_order_and_stability():
    reps = machine("report", "pgl2", "--all")
    titles = [r["title"] for r in reps]
    assert titles[:4] == [f"Langlands parameters at a = {a}" for a in ("1/2", "3/2", "2/3", "i")]
    assert titles[4].startswith("strata")
    assert titles[5:8] == ["m_g", "m_r", "characteristic cycles of P(xi)"]
    assert [r["data"]["representations"] for r in reps[8:]] == [
        ["triv of G_s", "triv of G_c"], ["sgn of G_s", "triv of G_c"]]
    assert run("report", "pgl2", "--all") == run("report", "pgl2", "--all")


def test_human_and_machine_agree():
    code, out, _ = run("kgroup", "cc")
    assert code == 0
    table, block = out.split("--- machine ---")
    data = json.loads(block)["data"]
    rows = [line.split() for line in table.strip().splitlines()[3:]]
    assert rows == [[r["parameter"], *map(str, r["multiplicities"])] for r in data["cycles"]]


def test_verify_all():
    code, out, _ = run("verify", "all")
    assert code == 0 and "FAIL" not in out
