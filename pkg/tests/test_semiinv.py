import pytest

from constel.exactmath import CycNum, MPoly
from constel.semiinv import (FactorError, PathMatrixSpec, SemiInvError,
                             StabilityVector, det_semiinvariant,
                             factor_over_generators, factor_semiinvariant,
                             phi, phi_C, psi_C)

Z = CycNum.zeta
R = CycNum.rational

LABELS = ["rho_0", "rho_1", "rho_2", "rho_3", "V_1", "V_2"]
DIMS = [1, 1, 1, 1, 2, 2]


def test_stability_vector_reduced_round_trip():
    theta = StabilityVector.from_reduced(LABELS, DIMS, (1, 0, 0, -1, 2))
    assert theta.reduced() == (1, 0, 0, -1, 2)
    assert theta.is_character()
    assert theta["rho_1"] == 1
    back = StabilityVector.from_json(theta.to_json())
    assert back == theta


def test_path_spec_round_trip():
    spec = PathMatrixSpec.from_json(
        {"name": "t", "blocks": [["B_2", "0"], ["C", "A_3"]]})
    assert PathMatrixSpec.from_json(spec.to_json()).to_json() == spec.to_json()


def test_det_single_arrow(bd12):
    spec = PathMatrixSpec.from_json({"name": "C", "blocks": [["C"]]})
    s = det_semiinvariant(spec, bd12)
    assert s.weight.reduced() == (0, 0, 0, -1, 1)
    x = MPoly.variable(bd12.variables, "x")
    y = MPoly.variable(bd12.variables, "y")
    assert s.phi_image == x * y


def test_det_path_sum(bd12):
    spec = PathMatrixSpec.from_json(
        {"name": "BA", "blocks": [["B_2*A_0"]]})
    s = det_semiinvariant(spec, bd12)
    assert s.weight.reduced() == (0, 1, 0, 0, 0)
    x = MPoly.variable(bd12.variables, "x")
    y = MPoly.variable(bd12.variables, "y")
    assert s.phi_image == 2 * x * y


def test_det_block_matrix(bd12, bd12_fgens):
    spec = PathMatrixSpec.from_json(
        {"name": "t", "blocks": [["B_2", "0"], ["C", "A_3"]]})
    s = det_semiinvariant(spec, bd12)
    factor_semiinvariant(s, bd12_fgens)
    assert s.lattice_vector() == (1, 0, 0, 0, 1, -1, -1, 1)


def test_phi_weight_consistency(bd12):
    spec = PathMatrixSpec.from_json({"name": "C", "blocks": [["C"]]})
    s = det_semiinvariant(spec, bd12)
    img, chars = phi(s, bd12)
    assert img == s.phi_image
    assert len(chars) == len(bd12.group.generators)


def test_factor_over_generators(bd12_fgens):
    f1, f2, f3 = bd12_fgens
    target = f1 * f2 ** 2 * f3
    exps, scalar = factor_over_generators(target, bd12_fgens)
    assert exps == (1, 2, 1)
    assert scalar == R(1)


def test_factor_failure_raises(bd12, bd12_fgens):
    vs = bd12.variables
    x = MPoly.variable(vs, "x")
    with pytest.raises(FactorError):
        factor_over_generators(x ** 2, bd12_fgens)


def test_unknown_arrow_raises(bd12):
    spec = PathMatrixSpec.from_json({"name": "bad", "blocks": [["Q_9"]]})
    with pytest.raises(SemiInvError):
        det_semiinvariant(spec, bd12)


def _abelian_rays_orders():
    """Selected chamber rays of 1/10(1,3,6) at theta_+, in junior order."""
    from constel.cones import RatCone, face_semistable

    r, cvec = 10, (1, 3, 6)
    avecs = []
    for i in range(r):
        for j in range(3):
            vec = [0, 0, 0] + [0] * (r - 1)
            vec[j] = 1
            tgt = (i + cvec[j]) % r
            if tgt:
                vec[3 + tgt - 1] += 1
            if i:
                vec[3 + i - 1] -= 1
            avecs.append(tuple(vec))
    sigma = RatCone.from_inequalities(avecs, 12)

    class Emb:
        pass

    emb = Emb()
    emb.ell = 3
    emb.weight_vectors = avecs
    emb.sigma_w = sigma
    theta_plus = (1,) * 9
    exc = [w for w in sigma.rays
           if face_semistable(emb, theta_plus, w)
           and w[:3] not in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    order_p = [(1, 3, 6), (1, 3, 1), (2, 1, 2), (1, 1, 0), (7, 1, 2)]
    rays = [next(w for w in exc if w[:3] == p) for p in order_p]
    return rays, [10, 5, 5, 2, 10]


def test_phi_c_monomial():
    labels = ["rho_%d" % k for k in range(10)]
    dims = [1] * 10

    class S:
        pass

    s = S()
    s.exponents = (1, 0, 0)
    s.weight = StabilityVector.from_reduced(
        labels, dims, [1, 0, 0, 0, 0, 0, 0, 0, 0])
    s.phi_image = MPoly.variable(("x", "y", "z"), "x")
    rays, orders = _abelian_rays_orders()
    ct = phi_C(s, rays, orders)
    assert ct.t_exponents == (1, 1, 2, 1, 7)


def test_psi_c_matrix():
    rays, orders = _abelian_rays_orders()
    mat = [psi_C(tuple(1 if j == c else 0 for j in range(9)),
                 rays, orders, ell=3)
           for c in range(9)]
    rows = [tuple(mat[c][k] for c in range(9)) for k in range(5)]
    assert rows == [(1, 2, 3, 4, 5, 6, 7, 8, 9),
                    (1, 2, 3, 4, 5, 1, 2, 3, 4),
                    (2, 4, 1, 3, 5, 2, 4, 6, 3),
                    (1, 0, 1, 0, 1, 0, 1, 0, 1),
                    (7, 4, 1, 8, 5, 2, 9, 6, 3)]
