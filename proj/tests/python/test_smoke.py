from fractions import Fraction

import pytest

import cubick3


def test_classify_14():
    r = cubick3.classify(14)
    assert r["flags"]["starstarstar"]
    assert r["nl"]["gramK"] == [[-3, 1], [1, -5]]
    assert r["nl"]["discK"] == [14]


def test_table_rows():
    rows = cubick3.table(78)
    assert len(rows) == 24
    assert {r["d"] for r in rows if r["starstar"]} == {14, 26, 38, 42, 62, 74, 78}
    assert cubick3.table_csv(42).count("\n") == 13


def test_witnesses_and_pell():
    assert cubick3.witness_sss(38) == (30, 7)
    assert cubick3.witness_sss(74) is None
    assert cubick3.witness_ss(74) == (10, 3)
    assert cubick3.pell_brakkee(42) == (3, 2)
    assert cubick3.pell_brakkee(12) is None
    x, y = cubick3.solve_generalized_pell(61, 1)
    assert x * x - 61 * y * y == 1
    assert cubick3.solve_generalized_pell(3, 2) is None


def test_a2():
    assert cubick3.a2_represents(18, False)
    assert not cubick3.a2_represents(18, True)
    assert len(cubick3.a2_bruteforce(2)) == 6


def test_lattices():
    assert cubick3.signature("Gamma") == (2, 20, 0)
    assert cubick3.determinant("A2") == 3
    assert cubick3.disc_group("LambdaD(14)")["invariant_factors"] == [14]
    big = 10**40
    assert cubick3.determinant([[big, 1], [1, 0]]) == -1
    with pytest.raises(cubick3.LatticeError):
        cubick3.signature("K3")
    with pytest.raises(ValueError):
        cubick3.determinant([[0, 1], [2, 0]])


def test_mukai():
    assert cubick3.sqrt_todd() == [1, Fraction(3, 4), Fraction(11, 32), Fraction(15, 128), Fraction(121, 6144)]
    w = [cubick3.mukai_vector_line(k) for k in range(3)]
    assert w[2][2] == Fraction(123, 32)
    for i in range(3):
        for j in range(3):
            assert cubick3.mukai_pairing(w[i], w[j]) == -cubick3.euler_line(j - i)
    assert cubick3.a2_mukai_gram() == [[2, -1], [-1, 2]]
    s = cubick3.mukai_set()
    assert cubick3.project_right(s["u1"]) == s["vLambda1"]


def test_verify():
    v = cubick3.verify()
    assert v["failures"] == []
    assert v["checks_run"] > 100
