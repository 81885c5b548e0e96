import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from constel.cones import (Polyhedron, RatCone, brute_force_facets, dd_cone,
                           dual_cone, face_semistable, hilbert_mumford_check,
                           hilbert_saturation_check, intersect, lattice_points,
                           lp_by_enumeration, lp_minimize, mat_rank,
                           simplex_solve)


def test_quadrant():
    c = RatCone.from_rays([(1, 0), (0, 1)])
    assert sorted(c.facets) == [(0, 1), (1, 0)]
    assert c.contains((2, 3)) and not c.contains((-1, 0))
    assert c.contains_in_relint((1, 1))
    assert not c.contains_in_relint((1, 0))
    assert c.dim() == 2 and c.is_pointed()


def test_dual_cone_involution():
    c = RatCone.from_rays([(2, 1), (1, 3)])
    dd = dual_cone(dual_cone(c))
    assert dd == c


def test_halfplane_lineality():
    c = RatCone.from_inequalities([(1, 0)], 2)
    assert list(c.lineality) == [(0, 1)]
    assert not c.is_pointed()


def test_intersection_and_subcone():
    a = RatCone.from_rays([(1, 0), (1, 2)])
    b = RatCone.from_rays([(2, 1), (0, 1)])
    c = intersect(a, b)
    assert sorted(c.rays) == [(1, 2), (2, 1)]
    assert c.is_subcone_of(a) and c.is_subcone_of(b)


def test_faces_of_simplex_cone():
    c = RatCone.from_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(c.faces(1)) == 3
    assert len(c.faces(2)) == 3


def test_linear_image_and_preimage():
    c = RatCone.from_rays([(1, 0), (0, 1)])
    m = [(1, 1)]
    img = c.linear_image(m)
    assert list(img.rays) == [(1,)]
    pre = img.preimage_cone(m)
    assert pre.contains((1, 0)) and pre.contains((-1, 2))


def test_json_round_trip():
    c = RatCone.from_inequalities([(1, 0, 0), (0, 1, 0)], 3)
    back = RatCone.from_json(c.to_json())
    assert back == c


ray_lists = st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    min_size=3, max_size=6)


@settings(max_examples=60, deadline=None)
@given(ray_lists)
def test_dd_matches_brute_force(rays):
    c = RatCone.from_rays(rays, dim=3)
    if c.dim() < 3 or not c.is_pointed():
        return
    assert sorted(c.facets) == sorted(brute_force_facets(c.rays, 3))


@settings(max_examples=60, deadline=None)
@given(ray_lists)
def test_dd_round_trip(rays):
    c = RatCone.from_rays(rays, dim=3)
    back = RatCone.from_inequalities(c.facets, 3,
                                     equations=c.equations)
    assert back == c


def _random_polyhedron(rng, dim):
    a_ge = []
    b_ge = []
    for _ in range(rng.randrange(dim + 1, dim + 5)):
        a_ge.append([rng.randrange(-3, 4) for _ in range(dim)])
        b_ge.append(rng.randrange(-4, 5))
    return a_ge, b_ge


def test_lp_agrees_with_enumeration():
    rng = random.Random(7)
    for _ in range(120):
        dim = rng.randrange(2, 4)
        a_ge, b_ge = _random_polyhedron(rng, dim)
        obj = [rng.randrange(-3, 4) for _ in range(dim)]
        poly = Polyhedron.from_hrep(a_ge, b_ge)
        st1, v1, _ = lp_minimize(obj, poly)
        st2, v2, _ = lp_by_enumeration(obj, poly)
        assert st1 == st2
        if st1 == "optimal":
            assert v1 == v2


def test_simplex_with_equalities():
    # min x + y subject to x + y + z = 3, x,y,z >= 0
    status, value, point = simplex_solve(
        [1, 1, 0], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0],
        a_eq=[[1, 1, 1]], b_eq=[3])
    assert status == "optimal" and value == 0
    assert point[2] == 3


def test_simplex_infeasible_and_unbounded():
    status, _, _ = simplex_solve([1], [[1], [-1]], [2, 0])
    assert status == "infeasible"
    status, _, _ = simplex_solve([-1], [[1]], [0])
    assert status == "unbounded"


def test_polyhedron_vertices():
    # unit square
    poly = Polyhedron.from_hrep(
        [[1, 0], [-1, 0], [0, 1], [0, -1]], [0, -1, 0, -1])
    assert sorted(poly.vertices) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert not poly.is_empty()
    assert poly.contains((Fraction(1, 2), Fraction(1, 2)))


def _brute_lattice(cone, grading, bound):
    dim = cone.ambient_dim
    box = 1
    for r in cone.rays:
        deg = sum(g * v for g, v in zip(grading, r))
        scale = Fraction(bound, deg)
        box = max(box, max(abs(int(scale * v)) + 1 for v in r))
    out = []

    def rec(prefix):
        if len(prefix) == dim:
            p = tuple(prefix)
            if cone.contains(p) and sum(
                    g * v for g, v in zip(grading, p)) <= bound:
                out.append(p)
            return
        for v in range(-box, box + 1):
            rec(prefix + [v])

    rec([])
    return sorted(out)


def test_lattice_points_matches_brute_force():
    rng = random.Random(3)
    for _ in range(25):
        rays = [tuple(rng.randrange(-3, 4) for _ in range(2))
                for _ in range(3)]
        c = RatCone.from_rays(rays, dim=2)
        if not c.is_pointed():
            continue
        grading = None
        for cand in ([1, 1], [1, -1], [-1, 1], [-1, -1], [2, 1], [1, 2]):
            if all(sum(g * v for g, v in zip(cand, r)) > 0 for r in c.rays):
                grading = cand
                break
        if grading is None or not c.rays:
            continue
        got = sorted(lattice_points(c, grading, 5))
        assert got == _brute_lattice(c, grading, 5)


def test_lattice_points_requires_positive_grading():
    c = RatCone.from_rays([(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        lattice_points(c, [1, -1], 3)


def test_saturation_detects_gap():
    c = RatCone.from_rays([(1, 0), (1, 3)])
    ok, witness = hilbert_saturation_check([(1, 0), (1, 1), (1, 3)], c, 6)
    assert not ok and witness == (1, 2)
    ok, witness = hilbert_saturation_check(
        [(1, 0), (1, 1), (1, 2), (1, 3)], c, 6)
    assert ok and witness is None


def test_saturation_relative_to_generated_lattice():
    # (1,0) and (1,2) span an index-2 sublattice; (1,1) is outside it,
    # so the semigroup is normal even though it misses (1,1)
    c = RatCone.from_rays([(1, 0), (1, 2)])
    ok, witness = hilbert_saturation_check([(1, 0), (1, 2)], c, 4)
    assert ok and witness is None


def test_mat_rank():
    assert mat_rank([(1, 2), (2, 4)]) == 1
    assert mat_rank([(1, 0), (0, 1)]) == 2


class _FakeEmb:
    def __init__(self, ell, vectors):
        self.ell = ell
        self.weight_vectors = vectors
        self.sigma_w = RatCone.from_rays(vectors)


def test_face_semistable_vs_hilbert_mumford():
    rng = random.Random(11)
    for _ in range(40):
        ell = 2
        sdim = rng.randrange(2, 4)
        vectors = []
        for _ in range(rng.randrange(4, 7)):
            f = [rng.randrange(0, 3) for _ in range(ell)]
            if not any(f):
                f[0] = 1
            q = [rng.randrange(-2, 3) for _ in range(sdim)]
            vectors.append(tuple(f + q))
        emb = _FakeEmb(ell, vectors)
        theta = tuple(rng.randrange(-2, 3) for _ in range(sdim))
        for k in range(1, 3):
            subset = rng.sample(vectors, min(k, len(vectors)))
            pt = tuple(sum(col) for col in zip(*subset))
            assert (face_semistable(emb, theta, pt)
                    == hilbert_mumford_check(emb, theta, pt))
