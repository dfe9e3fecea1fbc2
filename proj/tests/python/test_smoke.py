"""End to end checks through the python bindings."""

from fractions import Fraction

import nlmult as nl


def poly_at(coeffs, x):
    return sum(Fraction(c) * x**k for k, c in enumerate(coeffs))


def test_graph_roundtrip():
    g = nl.parse_graph6("Dhc")
    assert g.order() == 5
    assert g.edge_count() == 5
    assert nl.parse_graph6(nl.write_graph6(g)) == g
    assert nl.isomorphic(g, nl.cycle_graph(5))


def test_c5_charpoly_exact():
    coeffs = nl.nl_charpoly(nl.cycle_graph(5))
    assert coeffs == ["0/1", "25/16", "-25/4", "35/4", "-5/1", "1/1"]
    assert poly_at(coeffs, Fraction(0)) == 0
    # both theta roots lie strictly inside their isolating intervals
    for t in nl.find_theta(nl.cycle_graph(5)):
        lo, hi = (Fraction(s) for s in t["interval"])
        assert lo < hi
        assert poly_at(t["factor"], lo) * poly_at(t["factor"], hi) < 0


def test_families_have_theta():
    for g, family in [
        (nl.complete_tripartite(3, 2, 2), "tripartite(3,2,2)"),
        (nl.complete_minus_edge(7), "complete_minus_edge"),
        (nl.cycle_graph(5), "cycle_c5"),
    ]:
        thetas = nl.find_theta(g)
        assert thetas, family
        assert thetas[0]["mult"] == g.order() - 3
        assert nl.classify(g) == family


def test_analyze_matches_float():
    g = nl.complete_minus_edge(6)
    a = nl.analyze(g)
    assert a["rho_n_minus_1_is_one"]
    theta = Fraction(6, 5)  # root of the linear theta factor
    assert poly_at(a["thetas"][0]["factor"], theta) == 0
    approx = nl.float_spectrum(g)
    assert sum(abs(x - float(theta)) < 1e-9 for x in approx) == 3


def test_catalog_and_scan():
    catalog = nl.exceptional_catalog()
    assert len(catalog) == 20
    assert [e["order"] for e in catalog] == sorted(e["order"] for e in catalog)
    report = nl.scan_order(5, jobs=2)
    assert report["scanned"] == 21
    assert report["mismatches"] == []
    assert report["problem_counterexamples"] == []
    assert [d["g6"] for d in report["ds"]] == ["DqK"]
    assert all(d["mates"] == [] for d in report["ds"])


def test_enumeration_counts():
    assert [len(nl.connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_lemma_sweep_clean():
    report = nl.lemma_sweep(5, 5)
    assert report["graphs_checked"] == 21
    assert report["omega_graphs"] == 1
    assert report["violations"] == []
