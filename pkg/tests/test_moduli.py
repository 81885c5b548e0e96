import pytest

from constel.exactmath import CycNum, Mat
from constel.grouprep import enumerate_group
from constel import moduli

Z = CycNum.zeta
R = CycNum.rational

W_PRINTED = [(1, 3, 6, -1, -2, -3, -4, -5, -6, -7, -8, -9),
             (1, 3, 1, -1, -2, -3, -4, -5, -1, -2, -3, -4),
             (2, 1, 2, -2, -4, -1, -3, -5, -2, -4, -6, -3),
             (1, 1, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1),
             (7, 1, 2, -7, -4, -1, -8, -5, -2, -9, -6, -3)]

PSI_ROWS = [(1, 2, 3, 4, 5, 6, 7, 8, 9),
            (1, 2, 3, 4, 5, 1, 2, 3, 4),
            (2, 4, 1, 3, 5, 2, 4, 6, 3),
            (1, 0, 1, 0, 1, 0, 1, 0, 1),
            (7, 4, 1, 8, 5, 2, 9, 6, 3)]


@pytest.fixture(scope="module")
def emb():
    g = Mat([[Z(10, 1), R(0), R(0)],
             [R(0), Z(10, 3), R(0)],
             [R(0), R(0), Z(10, 6)]])
    return moduli.abelian_ambient(enumerate_group([g]))


@pytest.fixture(scope="module")
def ctx(emb):
    return moduli.chamber_at(emb, (1,) * 9)


def test_exceptional_data(emb):
    assert emb.exceptional == [((1, 3, 6), 10), ((1, 3, 1), 5),
                               ((2, 1, 2), 5), ((1, 1, 0), 2),
                               ((7, 1, 2), 10)]
    assert emb.ell == 3 and emb.sdim == 9


def test_sigma_rays_and_p_types(emb):
    assert len(emb.sigma_w.rays) == 65
    assert set(emb.p_image_types()) == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 3, 6), (1, 3, 1),
        (2, 1, 2), (1, 1, 0), (7, 1, 2)}


def test_chamber_selected_rays(ctx):
    assert list(ctx.selected) == W_PRINTED


def test_selected_rays_matches_chamber(emb, ctx):
    selected, orders, _ = moduli.selected_rays(emb, (1,) * 9)
    assert list(selected) == list(ctx.selected)
    assert orders == [10, 5, 5, 2, 10]


def test_psi_matrix(ctx):
    assert [tuple(row) for row in ctx.psi_matrix] == PSI_ROWS


def test_chamber_contains_theta(emb, ctx):
    theta = (1,) * 9
    assert ctx.cone.contains_in_relint(theta)
    assert ctx.cone.is_subcone_of(ctx.c_plus)


def test_stability_cone_of_face(emb, ctx):
    for w in ctx.selected:
        c = moduli.stability_cone_of_face(emb, w)
        assert ctx.cone.is_subcone_of(c)


def test_triangulations_and_flops(emb):
    pts = moduli.junior_simplex_points(emb)
    tris, edges = moduli.triangulations(pts)
    assert len(tris) == 6
    anchor = ((2, 6, 2), (5, 5, 0), (7, 1, 2))
    names = moduli.flop_graph_labeling(tris, edges, anchor)
    edge_names = sorted(tuple(sorted((names[i], names[j])))
                        for i, j in edges)
    assert edge_names == [("X_1", "X_2"), ("X_1", "X_3"), ("X_1", "X_4"),
                          ("X_4", "X_5"), ("X_5", "X_6")]


def test_nef_equals_psi_image_of_chamber(emb, ctx):
    pts = moduli.junior_simplex_points(emb)
    tris, edges = moduli.triangulations(pts)
    anchor = ((2, 6, 2), (5, 5, 0), (7, 1, 2))
    names = moduli.flop_graph_labeling(tris, edges, anchor)
    byname = {v: tris[k] for k, v in names.items()}
    nef1 = moduli.nef_cone(byname["X_1"], emb)
    assert nef1 == ctx.psi_image(ctx.cone)


def test_movable_cone(emb):
    mov = moduli.movable_cone(emb)
    assert len(mov.rays) == 9 and len(mov.facets) == 7


def test_classify_wall_type0(emb, ctx):
    wall = (0, 1, 0, 1, 1, 1, 1, 1, 1)
    assert wall in ctx.c_plus.facets
    kind, _ = moduli.classify_wall(ctx, wall)
    assert kind == "type0"


def test_explore_trivial_goal(emb, ctx):
    goal = ctx.psi_image(ctx.cone)
    path = moduli.explore_chambers(emb, (1,) * 9, goal)
    assert len(path) == 1 and path[0][1] == ()


def test_wall_theta_raises(emb):
    # theta = 0 makes every ray semistable, so no chamber is defined
    with pytest.raises(moduli.WallError):
        moduli.chamber_at(emb, (0,) * 9)


def test_distinguished_point(emb, ctx):
    w = ctx.selected[0]
    pt = moduli.distinguished_point(w, emb)
    assert emb.sigma_w.contains(w)
    assert len(pt) == len(emb.weight_vectors)


def test_graded_constellation_round_trip():
    labels = ["rho_0", "rho_1"]
    dims = [1, 1]
    gc = moduli.GradedConstellation(
        labels, dims, [("rho_0", (0, 0)), ("rho_1", (1, 0))],
        [(0, 1)], generator=0, name="R_1")
    back = moduli.GradedConstellation.from_json(gc.to_json(), labels, dims)
    assert back.to_json() == gc.to_json()
