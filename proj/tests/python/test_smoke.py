import pytest

import golay486 as g


def test_code():
    assert g.golay_parameters() == {"n": 11, "k": 6, "d": 5, "perfect": True}
    wd = g.weight_distribution()
    assert sum(wd) == 729
    assert wd[5] == 132 and wd[11] == 24
    assert g.coset_shape_counts() == [1, 2, 20, 40, 180]
    assert g.type_counts() == (36, 45)


def test_gamma():
    gamma = g.build("gamma")
    assert gamma.vertex_count == 243
    assert g.srg_parameters(gamma) == (243, 22, 1, 2)
    assert g.srg_parameters(g.complement(gamma)) == (243, 220, 199, 200)


def test_models():
    assert g.intersection_array(g.build("delta")) == ([45, 44, 36, 5], [1, 9, 40, 45])
    upsilon = g.build("upsilon")
    assert g.intersection_array(upsilon) == ([56, 45, 16, 1], [1, 8, 45, 56])
    assert g.srg_parameters(g.antipodal_fold(upsilon)) == (162, 56, 10, 24)
    assert g.srg_parameters(g.antipodal_fold(g.build("lambda"))) == (81, 20, 1, 6)


def test_isomorphism():
    a, b = g.build("lambda"), g.build("shortened")
    r = g.are_isomorphic(a, b)
    assert r["verdict"] == "isomorphic"
    assert g.is_isomorphism(a, b, r["mapping"])


def test_group():
    assert g.group_order() == "349920"
    assert g.suborbit_sizes() == [1, 2, 20, 36, 40, 45, 72, 90, 180]
    assert len(g.scan()) == 6


def test_graph_roundtrip():
    c5 = g.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert g.Graph.from_graph6(c5.graph6()) == c5
    assert g.intersection_array(c5) == ([2, 1], [1, 1])
    assert "d2" in g.distance_diagram(c5)
    with pytest.raises(g.InputError):
        g.Graph(2, [(0, 0)])
    with pytest.raises(g.InputError):
        g.build("nonsense")


def test_verify(tmp_path):
    report = g.verify(skip=["flats", "iso"])
    assert report["overall"] is True
    bad = tmp_path / "gens.txt"
    bad.write_text("a := (1,2,\n")
    with pytest.raises(g.ParseError):
        g.verify(generators=str(bad))
    with pytest.raises(g.DataError):
        g.verify(generators=str(tmp_path / "missing.txt"))
    with pytest.raises(g.Error):
        g.verify(skip=["bogus"])
