import pytest

from constel.exactmath import CycNum, Mat, MPoly
from constel.grouprep import Irrep, enumerate_group
from constel import mckay

Z = CycNum.zeta
R = CycNum.rational


def _diag(*entries):
    n = len(entries)
    return Mat([[entries[i] if i == j else R(0) for j in range(n)]
                for i in range(n)])


def build_bd12_quiver():
    """Binary dihedral group of order 12 with pinned equivariant bases."""
    i4 = Z(4, 1)
    vs = ("x", "y")
    x = MPoly.variable(vs, "x")
    y = MPoly.variable(vs, "y")
    zero = MPoly.zero(vs)
    g1 = _diag(Z(6, 1), Z(6, 5))
    g2 = Mat([[R(0), R(1)], [R(-1), R(0)]])
    G = enumerate_group([g1, g2])
    irreps = [Irrep("rho_%d" % k,
                    [Mat([[R((-1) ** k)]]), Mat([[(-i4) ** k]])])
              for k in range(4)]
    irreps.append(Irrep("V_1", [g1, g2]))
    irreps.append(Irrep("V_2", [_diag(Z(6, 2), Z(6, 4)),
                                Mat([[R(0), R(1)], [R(1), R(0)]])]))
    pinned = {
        ("rho_0", "V_1"): [Mat([[x], [y]])],
        ("V_1", "rho_0"): [Mat([[-y, x]])],
        ("rho_1", "V_2"): [Mat([[-i4 * y], [x]])],
        ("V_2", "rho_1"): [Mat([[x, i4 * y]])],
        ("rho_2", "V_1"): [Mat([[x], [-y]])],
        ("V_1", "rho_2"): [Mat([[y, x]])],
        ("rho_3", "V_2"): [Mat([[i4 * y], [x]])],
        ("V_2", "rho_3"): [Mat([[x, -i4 * y]])],
        ("V_1", "V_2"): [Mat([[x, zero], [zero, y]])],
        ("V_2", "V_1"): [Mat([[-y, zero], [zero, x]])],
    }
    quiver = mckay.build_quiver(G, irreps, vs, pinned)
    quiver.arrow_names = {
        "A_0": quiver.arrow("rho_0", "V_1"), "B_0": quiver.arrow("V_1", "rho_0"),
        "A_1": quiver.arrow("rho_1", "V_2"), "B_1": quiver.arrow("V_2", "rho_1"),
        "A_2": quiver.arrow("rho_2", "V_1"), "B_2": quiver.arrow("V_1", "rho_2"),
        "A_3": quiver.arrow("rho_3", "V_2"), "B_3": quiver.arrow("V_2", "rho_3"),
        "C": quiver.arrow("V_1", "V_2"), "D": quiver.arrow("V_2", "V_1"),
    }
    return quiver


@pytest.fixture(scope="session")
def bd12():
    return build_bd12_quiver()


@pytest.fixture(scope="session")
def bd12_fgens(bd12):
    vs = bd12.variables
    x = MPoly.variable(vs, "x")
    y = MPoly.variable(vs, "y")
    i4 = Z(4, 1)
    return [x ** 3 + i4 * y ** 3, x * y, x ** 3 - i4 * y ** 3]
