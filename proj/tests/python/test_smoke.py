import json
import os
import pathlib
import subprocess

import pytest

import clustercat

DATA = pathlib.Path(os.environ.get("CLUSTERCAT_DATA", pathlib.Path(__file__).resolve().parents[2] / "data"))
CLI = os.environ.get("CLUSTERCAT_CLI")


def load(name):
    return json.loads((DATA / name).read_text())


def test_laurent_fraction():
    assert clustercat.laurent("x2^-1*x3 + x1*x2^-1")["fraction"] == "(x1 + x3)/x2"


def test_f_polynomial_and_grassmannian():
    rep = load("kronecker_v.json")
    f = clustercat.f_polynomial(rep)
    assert "2*y1*y2^2" in f
    rows = clustercat.grassmannian(rep)["table"]
    assert [r["chi"] for r in rows if r["chi"]] == [1, 2, 1, 1, 2, 1]


def test_cluster_character_and_mutation():
    assert clustercat.cc("T2")["cc"]["canonical"] == "x2"
    assert clustercat.cc("[2,2]")["index"] == [0, -1, 1, 0]
    assert len(clustercat.cc_table()["entries"]) == 14
    seed = clustercat.mutate([2])
    assert seed["cluster"][1]["fraction"] == "(x1 + x3)/x2"
    assert clustercat.enumerate_seeds(load("a4.json"))["seeds"] == 42


def test_errors_raise():
    with pytest.raises(clustercat.Error, match="HasLoop"):
        clustercat.mutate([1], {"n": 1, "arrows": [{"s": 1, "t": 1}]})
    with pytest.raises(clustercat.Error, match="DepthExceeded"):
        clustercat.enumerate_seeds(load("kronecker.json"), max_depth=4)


def test_verify_reports():
    assert clustercat.verify("char")["passed"] is True
    assert clustercat.verify("char", flip_b=True)["passed"] is False


def test_service_session():
    svc = clustercat.Service()
    status, state = svc.request("POST", "/session")
    assert status == 201
    status, out = svc.request("POST", f"/session/{state['id']}/mutate", {"vertex": 2})
    assert status == 200
    assert out["new_variable"]["fraction"] == "(x1 + x3)/x2"
    status, _ = svc.request("GET", "/session/missing")
    assert status == 404


@pytest.mark.skipif(CLI is None, reason="command-line tool not provided")
@pytest.mark.parametrize(
    "args, code",
    [
        (["verify", "--suite", "fpoly"], 0),
        (["verify", "--suite", "all", "--inject-fault", "flip-b"], 1),
        (["cc", "--object", "[7,1]"], 2),
        (["fpoly"], 2),
        (["mutate", "--seq", "1,x"], 2),
        (["bogus"], 2),
    ],
)
def test_cli_exit_codes(args, code):
    assert subprocess.run([CLI, *args], capture_output=True).returncode == code


@pytest.mark.skipif(CLI is None, reason="command-line tool not provided")
def test_cli_json_outputs():
    out = subprocess.run([CLI, "--json", "cc-table", "--quiver", str(DATA / "a4.json")], capture_output=True, check=True)
    assert len(json.loads(out.stdout)["entries"]) == 14
    out = subprocess.run([CLI, "verify", "--suite", "grass", "--json"], capture_output=True, check=True)
    assert json.loads(out.stdout)["checks"][0]["criterion"] == 1
    out = subprocess.run([CLI, "fpoly", "--rep", str(DATA / "loop_v2.json")], capture_output=True, check=True)
    assert out.stdout.decode().strip() == "y1^2 + y1 + 1"
