import json

import networkx as nx
import pytest

import spantree


def test_polynomial_roundtrip():
    p = spantree.Polynomial.parse("3 - 2*x1^-1*q2 + x(1,2)^2")
    assert spantree.Polynomial.parse(str(p)) == p
    assert spantree.Polynomial.from_json(p.to_json()) == p
    assert isinstance(json.loads(p.to_json()), list)
    assert p.coefficient_sum() == 2


def test_division():
    a = spantree.Polynomial.parse("x1 + x2")
    b = spantree.Polynomial.parse("x1 - x2")
    assert spantree.div_exact(a * b, b) == a
    with pytest.raises(spantree.NotDivisible):
        spantree.div_exact(a, spantree.Polynomial.parse("x1"))


@pytest.mark.parametrize("spec,graph", [
    ("K5", nx.complete_graph(5)),
    ("Q3", nx.hypercube_graph(3)),
    ("K3xK3", nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))),
])
def test_count_matches_networkx(spec, graph):
    expected = round(nx.number_of_spanning_trees(graph))
    assert spantree.count(spec) == expected
    assert spantree.count(spec, brute=True) == expected


def test_enumerators_agree():
    det = spantree.tree_enumerator("K2xK3", "direction")
    assert det == spantree.enumerate("K2xK3", "direction")
    assert det == spantree.directions_rhs([2, 3])
    assert spantree.tree_enumerator("K4", "cayley-prufer") == spantree.cayley_prufer_rhs(4)


def test_threshold():
    assert spantree.merris_count([2, 2, 2]) == 3
    with pytest.raises(spantree.NotThresholdSequence):
        spantree.parse_spec("T:2,2,1,1")
    assert spantree.enumerate("T:3,3,2,2", "inout") == spantree.threshold_rhs([3, 3, 2, 2])


def test_verify_and_scan():
    verdicts = spantree.verify("cube", n=2, brute=True)
    assert [v["status"] for v in verdicts] == ["Verified"]
    scan = spantree.conjecture_scan([2, 2])
    assert scan["status"] == "Verified"
    assert scan["min_coefficient"] >= 0


def test_errors():
    with pytest.raises(spantree.ParseError):
        spantree.parse_spec("K3xL4")
    with pytest.raises(spantree.CapExceeded):
        spantree.enumerate("K6", "degree", cap=100)
