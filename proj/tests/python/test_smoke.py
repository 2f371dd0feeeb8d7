import pytest

import polyaut


def test_catalog():
    names = polyaut.catalog_names()
    assert len(names) == 24
    assert "S3" in names and "Heis27" in names
    g = polyaut.Group.catalog("S3")
    assert g.order == 6
    assert g.center_order() == 1
    assert g.derived_length() == 2


def test_group_arithmetic():
    g = polyaut.Group.catalog("D8")
    r, s = g.gens
    assert g.element_order(r) == 4
    assert g.commutator(r, s) == g.mul(r, r)
    assert g.nilpotency_class() == 2


def test_permutation_group():
    g = polyaut.Group.from_permutations("dih", [[1, 2, 3, 0], [2, 1, 0, 3]])
    assert g.order == 8


def test_analyze():
    info = polyaut.analyze("S3")
    assert info["aut_order"] == 6
    assert info["inner_order"] == 6
    assert info["p0_order"] == 6
    assert info["p0_method"] == "closure"


def test_verify_claim():
    rep = polyaut.verify("D16", "thm-1.1")
    assert rep["pass"] is True
    assert rep["computed"]["group_class"] == 3
    assert rep["computed"]["p_class"] == 2


def test_precondition_raises():
    with pytest.raises(polyaut.PolyautError):
        polyaut.verify("S4", "thm-1.2")


def test_closure_size():
    assert polyaut.closure_size("S3") == 54
    assert polyaut.closure_size("C5") == 5


def test_fm_words():
    a = polyaut.parse_word("a", 2)
    b = polyaut.parse_word("b", 2)
    c = a.commutator(b)
    assert c.is_derived and not c.is_identity
    assert polyaut.parse_word("[a,b]", 2) == c
    back = polyaut.fm_from_json(c.to_json())
    assert back == c


def test_chain():
    rep = polyaut.check_chain("S3")
    assert rep["pass"] is True
    assert rep["p0_method"] == "closure"
    rep = polyaut.check_chain("S4")
    assert rep["pass"] is True
    assert rep["p0_method"] == "inner-equals-aut-squeeze"


def test_ia2poly():
    rep = polyaut.ia2poly("[a,b]", "")
    assert rep["fixes_a"] and rep["fixes_b"]
    assert rep["exponent_sum"] == 1


def test_rank3():
    rep = polyaut.rank3_counterexample()
    assert rep["pass"] is True
    assert rep["ia_property"] is True
    assert rep["commutator_in_ncl_c"] is False
