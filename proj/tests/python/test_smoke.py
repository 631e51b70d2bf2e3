from fractions import Fraction

import pytest

import sato


def test_pullback_examples():
    assert sato.pullback("k1", 3, 4, equivariant=True) == "0"
    assert sato.pullback("kq", 2, 1, q=2, equivariant=True) == "-L1 + 9*psi"
    assert sato.pullback("line", 2, 5, h=5) == "0"
    assert sato.pullback_class("k1", 3, [2]) == "-L2 + L1^2"


def test_pullback_json_schema():
    doc = sato.pullback("kq", 2, 1, q=2, equivariant=True, as_json=True)
    names = [g["name"] for g in doc["generators"]]
    assert names[0] == "psi"
    assert {"exps": [0, 1, 0, 0], "coeff": "-1"} in doc["terms"]


def test_domain_errors():
    with pytest.raises(ValueError):
        sato.pullback("line", 2, 1, h=2)
    with pytest.raises(ValueError):
        sato.schur_mult([1, 2], [1])


def test_schur_and_lr():
    assert sato.schur_mult([1], [1]) == "s(2) + s(1,1)"
    assert sato.lr_coefficients([2, 1], [2, 1])[(3, 2, 1)] == 2
    assert sato.conjugate([4, 2, 1]) == (3, 2, 1, 1)


def test_maya():
    assert sato.partition_from_maya(0, [1]) == (2,)
    assert sato.codimension(3, [3, 2, 1]) == 3
    head = sato.maya_from_partition([5, 3, 3], -2)
    assert sato.partition_from_maya(-2, head) == (5, 3, 3)


def test_gkm():
    table = sato.gkm_schubert(4, 2, [1])
    assert sum(1 for v in table["values"] if v["poly"]["terms"]) == 5
    assert sato.gkm_product(4, 2, [2], [2]) == ("s(2,2)", True)


def test_bernoulli_and_chern_characters():
    assert sato.bernoulli(2) == Fraction(1, 6)
    assert sato.bernoulli_poly(1) == [Fraction(-1, 2), Fraction(1)]
    assert sato.ch_hodge(1, 1, 3) == "1/12*k1"
    assert sato.grr_ch_p(0) == "-1/2*m[0,1] + m[1,0]"
    rows = sato.compare_ch_p(1)
    assert len(rows) == 1
    assert (rows[0]["i"], rows[0]["j"]) == (0, 2)
    assert rows[0]["expansion"] - rows[0]["stated"] == Fraction(1, 12)
    assert sato.compare_ch_p(2) == []


def test_verify_suite():
    results = sato.verify("combinatorics")
    assert results and all(r["passed"] for r in results)
