"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import chromagraph as cg


def evaluate(coeffs, x):
    return sum(c * x**k for k, c in enumerate(coeffs))


def test_graph_basics():
    g = cg.Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert g.n == 3
    assert g.has_edge(2, 0)
    assert g == cg.complete_graph(3)  # same edges in the same order
    assert cg.path_graph(4).edges == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        cg.Graph(2, [(0, 0)])


def test_weighted_graph():
    w = cg.WeightedGraph(cg.path_graph(2), [2, 1])
    assert w.total_weight == 3
    assert w.excess_weight == 1
    merged = cg.contract_edge(w, 0)
    assert merged.weights == [3]
    assert cg.delete_edge(w, 0).graph.edges == []


def test_csf_triangle():
    f = cg.csf(cg.complete_graph(3))
    assert f == {
        (1, 1, 1): Fraction(1),
        (2, 1): Fraction(-3),
        (3,): Fraction(2),
    }
    in_path = cg.csf(cg.complete_graph(3), basis="path")
    assert in_path == {(3,): Fraction(2), (2, 1): Fraction(-1)}
    assert sum(in_path.values()) == 1


def test_polynomials_are_consistent():
    k3 = cg.complete_graph(3)
    chi = cg.chromatic_poly(k3)
    assert chi == [0, 2, -3, 1]
    assert evaluate(chi, 3) == 6
    tau = cg.tree_poly(k3)
    assert tau == [0, 2, -1]
    assert evaluate(tau, 1) == 1
    assert cg.collapse(cg.csf(k3)) == chi
    assert cg.collapse(cg.csf(k3, basis="path")) == tau
    assert cg.mobius_substitute(chi, 3) == tau
    assert cg.mobius_substitute(tau, 3) == chi


def test_weighted_tree_poly():
    heavy = cg.WeightedGraph(cg.Graph(1, []), [3])
    assert cg.tree_poly(heavy) == [0, 1, -2, 1]  # x (x-1)^2


def test_complex_listings():
    k3 = cg.complete_graph(3)
    members = cg.bcc_members(k3)
    assert len(members) == 6
    assert [] in members
    assert [1, 2] not in members
    assert cg.maximal_members(k3) == [[0, 1], [0, 2]]
    assert len(cg.cutset_forest_pairs(k3, 2)) == 1
    assert [cg.signed_forest_colouring_eval(k3, x) for x in range(4)] == [
        evaluate(cg.tree_poly(k3), x) for x in range(4)
    ]


def test_partitions():
    assert cg.partitions_of(4)[0] == (4,)
    assert len(cg.partitions_of(6)) == 11


def test_verify_report():
    report = cg.verify(max_n=3, weights=True)
    assert report["passed"] is True
    assert report["total_failures"] == 0
    ids = [c["id"] for c in report["checks"]]
    assert "csf-engines-agree" in ids

    narrowed = cg.verify(max_n=3, only=["tree-poly-at-one"])
    assert [c["id"] for c in narrowed["checks"]] == ["tree-poly-at-one"]
    assert narrowed["passed"] is True
