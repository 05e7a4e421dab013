import itertools
import json
import os
import subprocess

import networkx as nx
import pytest

import rgplanar


def edges_of(digraph):
    return {tuple(sorted((a["src"], a["dst"]))) for a in digraph["arcs"] if a["src"] != a["dst"]}


def test_group_elements():
    names = rgplanar.group_elements("D3")
    assert len(names) == 6
    assert "e" in names
    with pytest.raises(rgplanar.RgpError):
        rgplanar.group_elements("Q9")


def test_cyclic_ring_matches_networkx():
    d = rgplanar.cayley_digraph("Z6", 3, ["(1,r1)", "(0,r2)", "(0,r3)"])
    assert d["vertex_count"] == 18
    assert len(d["arcs"]) == 54
    g = nx.Graph()
    g.add_nodes_from(range(18))
    g.add_edges_from(edges_of(d))
    assert g.number_of_edges() == 36
    planar, _ = nx.check_planarity(g)
    assert planar


def test_planarity_agrees_with_networkx_on_random_graphs():
    for seed in range(40):
        g = nx.gnp_random_graph(9, 0.45, seed=seed)
        r = rgplanar.planarity(9, list(g.edges()))
        assert r["planar"] == nx.check_planarity(g)[0]
        assert r["verified"]


def test_decide_examples():
    v = rgplanar.decide("Z2xA4", 2)
    assert v["verdict"] == "non_planar"
    assert v["predicted"] == "non_planar"
    e4 = rgplanar.decide("E", 4)
    assert e4["verdict"] == "planar"
    assert e4["certificate_verified"]
    with pytest.raises(rgplanar.CapExceeded):
        rgplanar.decide("A5", 3)


def test_genus():
    k5 = list(itertools.combinations(range(5), 2))
    assert rgplanar.min_genus(5, k5) == 1
    assert rgplanar.min_genus(5, k5, budget=10) is None


def test_catalog_rows_have_expected_counts():
    for row in rgplanar.catalog(4):
        assert row["vertices"] > 0
        assert row["edges"] >= row["vertices"] - 1


def test_dot_and_cli():
    dot = rgplanar.to_dot("Z6", 3, ["(1,r1)", "(0,r2)", "(0,r3)"])
    assert dot.count("->") == 54
    code, out, err = rgplanar.run_cli(["characterize", "--group", "D3", "--k", "3", "--json"])
    assert code == 0
    assert json.loads(out)["verdict"] == "planar"
    code, _, err = rgplanar.run_cli(["render", "--graph", "K5"])
    assert code == 1
    assert "refused" in err


def test_installed_tool_exit_codes():
    tool = os.environ.get("RGPLANAR_CLI")
    if not tool:
        pytest.skip("command-line tool location not provided")
    assert subprocess.run([tool, "characterize", "--group", "Q9", "--k", "2"], capture_output=True).returncode == 2
    assert subprocess.run([tool, "characterize", "--group", "A5", "--k", "3"], capture_output=True).returncode == 3
