import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("EDGEPOLY_CLI", "edgepoly")
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def report(*args):
    code, out, err = run(*args)
    assert code == 0, err
    return json.loads(out)


def test_analyze_path3_report():
    doc = report("analyze", DATA / "path3.json")
    assert list(doc) == sorted(doc)
    assert set(doc) == {
        "delta_c", "num_bases", "facets", "interior_points_n1", "pseudo_gorenstein", "level",
        "int_star_degree", "reflexive_up_to_translation", "delta_vector", "unimodal",
        "witness", "scan_bound_used",
    }
    assert doc["delta_c"] == 3
    assert doc["num_bases"] == 2
    assert doc["facets"] == [
        {"bound": 2, "subset": [1]},
        {"bound": 3, "subset": [2]},
        {"bound": 2, "subset": [3]},
        {"bound": 3, "subset": [1, 3]},
    ]
    assert doc["level"] is True
    assert doc["int_star_degree"] == 1
    assert doc["delta_vector"] == [1, 28, 32, 2]
    assert doc["witness"] is None


def test_analyze_is_deterministic():
    assert run("analyze", DATA / "k34.json") == run("analyze", DATA / "k34.json")


def test_k34_witness_and_strict():
    doc = report("level", DATA / "k34.json")
    assert doc["level"] is False
    assert doc["witness"]["point"] == [1, 1, 1, 2, 3, 3, 3]
    code, _, _ = run("level", DATA / "k34.json", "--strict")
    assert code == 1
    psg = report("psg", DATA / "k34.json")
    assert psg["pseudo_gorenstein"] is True
    assert psg["reflexive_up_to_translation"] is False


def test_c_override_and_delta_vector():
    doc = report("delta-vector", DATA / "p4.json", "--c", "2,2,2,2")
    assert sum(doc["delta_vector"]) > 0
    assert doc["delta_vector"][0] == 1
    code, _, err = run("facets", DATA / "p4.json")
    assert code == 2 and "bound vector" in err


def test_veronese_q6():
    doc = report("veronese", "--a", 6, "--c", "5,3,3,3")
    assert doc["level"] is False
    assert doc["int_star_degree"] == 3
    assert report("veronese", "--a", 4, "--c", "2,2,2", "--formula")["uniform_formula"] is True


def test_reduced_degree():
    doc = report("reduced-degree", "--veronese", "6,5,3,3,3", "--point", "14,1,1,1", "--level", 3)
    assert doc["reduced_degree"] == 3
    code, _, err = run("reduced-degree", "--veronese", "6,5,3,3,3", "--point", "0,0,0,0", "--level", 1)
    assert code == 2 and "interior" in err


def test_bipartite_and_trees():
    assert report("bipartite", "--m", 3, "--n", 4, "--c", "2,2,2,2,2,2,2")["level"] is False
    doc = report("tree-check", DATA / "path3.json")
    assert doc["labeling_pseudo_gorenstein"] is False
    doc = report("tree-check", DATA / "p4.json", "--search", 3)
    assert doc["labeling_pseudo_gorenstein"] is True
    assert doc["search"]["witness"] is not None
    assert report("search-labeling", DATA / "p4.json", "--cmax", 3)["witness"] is not None


def test_sweep_small():
    doc = report("sweep-veronese", "--n", 3, "--cmax", 3)
    assert doc["instances"]
    assert all(x["int_star_degree"] >= 1 for x in doc["instances"])


@pytest.mark.parametrize(
    "args",
    [
        ("analyze", DATA / "bad_loop.json"),
        ("analyze", DATA / "malformed.json"),
        ("analyze", DATA / "missing.json"),
        ("analyze", DATA / "path3.json", "--c", "0,1,1"),
        ("veronese", "--a", 1, "--c", "2,2"),
        ("frobnicate",),
    ],
)
def test_input_errors_exit_2(args):
    code, _, _ = run(*args)
    assert code == 2


def test_budget_exit_3():
    code, _, err = run("level", DATA / "k34.json", "--budget", 5)
    assert code == 3
    assert "instance-too-large" in err
    code, _, err = run("level", "--veronese", "9,2,2,2,2,2,2,2,2", "--budget", 1000)
    assert code == 3
    assert "enumeration-budget-exceeded" in err
