from fractions import Fraction

import pytest

from constel.exactmath import CycNum, Mat, MPoly
from constel.grouprep import (GroupError, Irrep, age_and_valuations,
                              character_inner, enumerate_group,
                              junior_classes, monomial_valuation,
                              verify_irreps)

Z = CycNum.zeta
R = CycNum.rational


def diag(*entries):
    n = len(entries)
    return Mat([[entries[i] if i == j else R(0) for j in range(n)]
                for i in range(n)])


def cyclic_group(r, weights):
    return enumerate_group([diag(*(Z(r, a) for a in weights))])


def test_cyclic_enumeration():
    G = cyclic_group(10, (1, 3, 6))
    assert G.order == 10
    assert len(G.conj_classes) == 10
    e = Mat.identity(3)
    assert G.inverse_of(G.generators[0]) * G.generators[0] == e


def test_enumeration_cap():
    g = Mat([[Z(6, 1), R(0)], [R(0), Z(6, 5)]])
    with pytest.raises(GroupError):
        enumerate_group([g], cap=3)


def test_abelian_juniors():
    G = cyclic_group(10, (1, 3, 6))
    data = age_and_valuations(G)
    juniors = [d for d in data if d.junior]
    assert len(juniors) == 5
    assert sorted(d.order for d in juniors) == [2, 5, 5, 10, 10]
    vs = ("x", "y", "z")
    x = MPoly.variable(vs, "x")
    y = MPoly.variable(vs, "y")
    assert [monomial_valuation(d, x) for d in juniors] == [1, 1, 2, 1, 7]
    assert [monomial_valuation(d, y) for d in juniors] == [3, 3, 1, 1, 1]


def bd12():
    """Binary dihedral group of order 12 with its six irreps."""
    i4 = Z(4, 1)
    g1 = diag(Z(6, 1), Z(6, 5))
    g2 = Mat([[R(0), R(1)], [R(-1), R(0)]])
    G = enumerate_group([g1, g2])
    irreps = [Irrep("rho_%d" % k, [Mat([[R((-1) ** k)]]), Mat([[(-i4) ** k]])])
              for k in range(4)]
    irreps.append(Irrep("V_1", [g1, g2]))
    irreps.append(Irrep("V_2", [diag(Z(6, 2), Z(6, 4)),
                                Mat([[R(0), R(1)], [R(1), R(0)]])]))
    return G, irreps


def test_bd12_character_table():
    G, irreps = bd12()
    assert G.order == 12
    assert len(G.conj_classes) == 6
    verify_irreps(G, irreps)
    chis = [r.character(G) for r in irreps]
    for a in range(len(chis)):
        for b in range(len(chis)):
            inner = character_inner(G, chis[a], chis[b])
            want = R(1 if a == b else 0)
            assert inner == want


def test_bd12_junior_valuations():
    G, _ = bd12()
    juniors = junior_classes(G)
    assert len(juniors) == 5
    vs = ("x", "y")
    x = MPoly.variable(vs, "x")
    y = MPoly.variable(vs, "y")
    i4 = Z(4, 1)
    f1 = x ** 3 + i4 * y ** 3
    f2 = x * y
    f3 = x ** 3 - i4 * y ** 3
    from math import gcd
    types = []
    for d in juniors:
        t = (monomial_valuation(d, f1), monomial_valuation(d, f2),
             monomial_valuation(d, f3))
        g = gcd(gcd(t[0], t[1]), t[2])
        types.append(tuple(v // g for v in t))
    assert sorted(types) == sorted(
        [(1, 2, 1), (1, 1, 1), (3, 2, 3), (3, 2, 5), (5, 2, 3)])


def test_trihedral_21():
    t1 = diag(Z(7, 1), Z(7, 2), Z(7, 4))
    t2 = Mat([[R(0), R(0), R(1)],
              [R(1), R(0), R(0)],
              [R(0), R(1), R(0)]])
    G = enumerate_group([t1, t2])
    assert G.order == 21
    assert len(G.conj_classes) == 5
    w = Z(3, 1)
    irreps = [Irrep("rho_%d" % k, [Mat([[R(1)]]), Mat([[w ** k]])])
              for k in range(3)]
    irreps.append(Irrep("V_1", [t1, t2]))
    irreps.append(Irrep("V_2", [diag(Z(7, 3), Z(7, 6), Z(7, 5)), t2]))
    verify_irreps(G, irreps)
    juniors = junior_classes(G)
    assert len(juniors) == 3
    assert sorted(d.order for d in juniors) == [3, 3, 7]


def test_verify_irreps_rejects_wrong_list():
    G = cyclic_group(3, (1, 2, 0))
    w = Z(3, 1)
    bad = [Irrep("chi_%d" % k, [Mat([[w ** k]])]) for k in range(2)]
    with pytest.raises(GroupError):
        verify_irreps(G, bad)


def test_age_integral_in_sl3():
    G = cyclic_group(10, (1, 3, 6))
    for d in age_and_valuations(G):
        age = Fraction(sum(d.exponents), d.order)
        assert age.denominator == 1 and age in (0, 1, 2)
        assert d.junior == (age == 1)
