import pytest

from constel.exactmath import CycNum, Mat, MPoly
from constel.grouprep import GroupError, Irrep, enumerate_group
from constel import mckay

Z = CycNum.zeta
R = CycNum.rational


def diag(*entries):
    n = len(entries)
    return Mat([[entries[i] if i == j else R(0) for j in range(n)]
                for i in range(n)])


@pytest.fixture(scope="module")
def a2():
    """1/3(1,2): the A_2 Kleinian singularity."""
    g = diag(Z(3, 1), Z(3, 2))
    G = enumerate_group([g])
    irreps = [Irrep("chi_%d" % k, [Mat([[Z(3, k)]])]) for k in range(3)]
    quiver = mckay.build_quiver(G, irreps, ("x", "y"))
    return G, irreps, quiver


def test_arrow_counts_a2(a2):
    G, irreps, _ = a2
    counts = mckay.arrow_counts(G, irreps)
    for a in range(3):
        for b in range(3):
            want = 1 if (b - a) % 3 in (1, 2) else 0
            assert counts[("chi_%d" % a, "chi_%d" % b)] == want


def test_quiver_arrows_equivariant(a2):
    G, irreps, quiver = a2
    assert len(quiver.arrows) == 6
    by_label = {r.label: r for r in irreps}
    for a in quiver.arrows:
        for res in mckay.equivariance_residues(
                G, by_label[a.tail], by_label[a.head], a.matrix,
                quiver.variables):
            assert mckay._mat_is_zero(res)


def test_commutators_vanish(a2):
    _, _, quiver = a2
    assert mckay.commutator_relations(quiver) == {}


def test_coordinate_action_shape(a2):
    G, _, quiver = a2
    xs = mckay.coordinate_action(quiver)
    assert len(xs) == 2
    total = sum(r.dim for r in quiver.irreps)
    for m in xs:
        assert m.rows == m.cols == total


def test_path_matrix_composes(a2):
    _, _, quiver = a2
    a01 = quiver.arrow("chi_0", "chi_1")
    a12 = quiver.arrow("chi_1", "chi_2")
    prod = mckay.path_matrix(quiver, [a12, a01])
    direct = mckay._poly_mat_mul(a12.matrix, a01.matrix)
    assert prod == direct


def test_family_matrices_at_point(a2):
    _, _, quiver = a2
    pt = [R(2), R(5)]
    mats = mckay.family_matrices_at_point(quiver, pt)
    for a in quiver.arrows:
        want = Mat([[e.evaluate(pt) for e in row]
                    for row in a.matrix.entries])
        assert mats[a.name] == want


def test_pinned_basis_rejected_when_not_equivariant():
    g = diag(Z(3, 1), Z(3, 2))
    G = enumerate_group([g])
    irreps = [Irrep("chi_%d" % k, [Mat([[Z(3, k)]])]) for k in range(3)]
    vs = ("x", "y")
    x = MPoly.variable(vs, "x")
    y = MPoly.variable(vs, "y")
    bad = {("chi_0", "chi_1"): [Mat([[y]])]}  # wrong weight: needs x
    with pytest.raises(GroupError):
        mckay.build_quiver(G, irreps, vs, bad)


def test_bd12_quiver(bd12):
    quiver = bd12
    assert len(quiver.arrows) == 10
    counts = mckay.arrow_counts(quiver.group, quiver.irreps)
    assert counts[("V_1", "V_2")] == 1
    assert counts[("rho_0", "V_2")] == 0
    assert counts[("rho_0", "V_1")] == 1
    assert mckay.commutator_relations(quiver) == {}
