"""Embeddings of stability data, GIT chambers and birational bookkeeping.

Builds the lattice embedding spanned by semi-invariant weight vectors,
computes the chamber around a generic stability vector, movable and nef
cones in divisor-class coordinates, unimodular triangulations of the junior
simplex with their flip graph, wall classification and chamber exploration,
Cox-generator reports, and orbit cones of graded constellations.
"""

from fractions import Fraction

from .exactmath import MPoly
from .grouprep import (GroupError, character_inner, junior_classes,
                       monomial_valuation)
from .cones import (RatCone, _dot, _primitive, dual_cone, face_semistable,
                    hilbert_saturation_check, mat_rank, orbit_cone_of_ray)
from .semiinv import (CoxTerm, SemiInvError, StabilityVector,
                      factor_semiinvariant, psi_C)


class ModuliError(ValueError):
    pass


class WallError(ModuliError):
    """The stability vector is not generic (it lies on a wall)."""


class EmbeddingData:
    """Lattice data of the semi-invariant embedding.

    weight_vectors are the vectors (a_j | theta_j) in Z^ell (+) Theta-bar
    (reduced coordinates); sigma_w is their dual cone.  `exceptional` lists
    (valuation vector over the f-generators, order) per junior class, in the
    dataset's printing order.
    """

    def __init__(self, ell, weight_vectors, names=None, fgens=None,
                 fgen_names=None, labels=None, dims=None, exceptional=None,
                 order=None):
        self.ell = ell
        self.weight_vectors = [tuple(v) for v in weight_vectors]
        self.names = list(names) if names else \
            ["h_%d" % j for j in range(len(self.weight_vectors))]
        self.fgens = list(fgens) if fgens else None
        self.fgen_names = list(fgen_names) if fgen_names else \
            ["f_%d" % (j + 1) for j in range(ell)]
        self.labels = tuple(labels) if labels else None
        self.dims = tuple(dims) if dims else None
        self.exceptional = [(tuple(p), int(r)) for p, r in exceptional] \
            if exceptional else None
        self.order = order
        self._sigma_w = None

    @property
    def sigma_w(self):
        if self._sigma_w is None:
            dim = len(self.weight_vectors[0])
            self._sigma_w = RatCone.from_inequalities(
                sorted(set(self.weight_vectors)), dim)
        return self._sigma_w

    @property
    def sdim(self):
        """Dimension of the reduced stability space."""
        return len(self.weight_vectors[0]) - self.ell

    def p_image(self, vec):
        p = tuple(vec[:self.ell])
        return _primitive(p) if any(p) else p

    def p_image_types(self):
        """Primitive p-parts of the sigma_W rays, sorted."""
        return sorted(set(self.p_image(r) for r in self.sigma_w.rays))

    def rays_by_p_image(self):
        groups = {}
        for r in self.sigma_w.rays:
            groups.setdefault(self.p_image(r), []).append(r)
        return groups

    def orders(self):
        if self.exceptional is None:
            raise ModuliError("embedding carries no junior data")
        return tuple(r for _, r in self.exceptional)


def build_embedding(f_list, semiinvariants, names=None, fgen_names=None,
                    exceptional=None, order=None):
    """EmbeddingData from factored determinantal semi-invariants.

    Unfactored semi-invariants are factored over f_list first; the lattice
    vectors are their (exponents | reduced weight) rows.
    """
    fgens = [f for f in f_list]
    vectors = []
    labels = dims = None
    for s in semiinvariants:
        if s.exponents is None:
            factor_semiinvariant(s, fgens)
        vectors.append(s.lattice_vector())
        labels = s.weight.labels
        dims = s.weight.dims
    if names is None:
        names = [getattr(s.spec, "name", "h_%d" % j)
                 for j, s in enumerate(semiinvariants)]
    return EmbeddingData(len(fgens), vectors, names=names, fgens=fgens,
                         fgen_names=fgen_names, labels=labels, dims=dims,
                         exceptional=exceptional, order=order)


def _diagonal_weights(group):
    """Exponent vectors of the diagonal cyclic group, or an error."""
    from .grouprep import _diagonal_entries, _exponent_of_root
    r = group.order
    gen = next((g for g in group.elements
                if group.element_orders[group.index[g]] == r), None)
    if gen is None:
        raise GroupError("abelian ambient requires a cyclic group")
    diag = _diagonal_entries(gen)
    if diag is None:
        raise GroupError("abelian ambient requires a diagonal group")
    from .exactmath import CycNum
    weights = []
    for d in diag:
        k = _exponent_of_root(d, r)
        if k is None:
            raise GroupError("diagonal entry is not an r-th root of unity")
        weights.append(k)
    return r, tuple(weights)


def abelian_ambient(group, variables=None):
    """The ambient embedding of a diagonal cyclic group in SL_n.

    One generator x_{i,j} per (character rho_i, coordinate j), with lattice
    vector (e_j | e_{i+c_j} - e_i) in reduced coordinates dropping theta_0.
    """
    r, cvec = _diagonal_weights(group)
    n = group.n
    if variables is None:
        variables = ("x", "y", "z") if n == 3 else \
            tuple("x%d" % (j + 1) for j in range(n))
    vectors = []
    names = []
    for i in range(r):
        for j in range(n):
            vec = [0] * (n + r - 1)
            vec[j] = 1
            tgt = (i + cvec[j]) % r
            if tgt:
                vec[n + tgt - 1] += 1
            if i:
                vec[n + i - 1] -= 1
            vectors.append(tuple(vec))
            names.append("x_%d_%d" % (i, j))
    fgens = [MPoly.variable(variables, v) for v in variables]
    exceptional = [(d.exponents, d.order) for d in junior_classes(group)]
    labels = tuple("rho_%d" % i for i in range(r))
    return EmbeddingData(n, vectors, names=names, fgens=fgens,
                         fgen_names=list(variables), labels=labels,
                         dims=(1,) * r, exceptional=exceptional, order=r)


def distinguished_point(face, embedding):
    """0/1 coordinates of the distinguished point of a face of sigma_W.

    Coordinate x_j is 1 exactly when the j-th weight vector pairs to zero
    on the whole face (the face lies in the hyperplane H_j); for the zero
    face every coordinate is 1.
    """
    if isinstance(face, RatCone):
        gens = list(face.rays) + list(face.lineality)
    elif face and isinstance(face[0], (list, tuple)):
        gens = [tuple(v) for v in face]
    else:
        gens = [tuple(face)]
    return tuple(1 if all(_dot(a, g) == 0 for g in gens) else 0
                 for a in embedding.weight_vectors)


def stability_cone_of_face(embedding, face_point):
    """{theta : the face with relint point face_point is semistable}.

    By the numerical criterion this is the cone spanned by the q-parts of
    the weight vectors vanishing on the face.  Cones are cached on the
    embedding, keyed by the vanishing set, so repeated semistability tests
    reduce to facet evaluations.
    """
    ell = embedding.ell
    key = tuple(j for j, a in enumerate(embedding.weight_vectors)
                if _dot(a, face_point) == 0)
    cache = embedding.__dict__.setdefault("_stability_cache", {})
    cone = cache.get(key)
    if cone is None:
        qs = sorted(set(tuple(embedding.weight_vectors[j][ell:])
                        for j in key))
        cone = RatCone.from_rays(qs, embedding.sdim)
        cone.facets  # force the H-representation while caching
        cache[key] = cone
    return cone


class ChamberContext:
    """A chamber of Theta described by its selected sigma_W rays."""

    def __init__(self, embedding, cone, selected, selected_all, orders,
                 maximal_faces=()):
        self.embedding = embedding
        self.cone = cone
        self.selected = tuple(selected)        # exceptional rays, in order
        self.selected_all = tuple(selected_all)
        self.orders = tuple(orders)
        self.maximal_faces = frozenset(maximal_faces)
        self._c_plus = None

    @property
    def c_plus(self):
        """Intersection of the stability cones of the selected rays."""
        if self._c_plus is None:
            cone = None
            for w in self.selected:
                c = stability_cone_of_face(self.embedding, w)
                cone = c if cone is None else cone.intersect(c)
            self._c_plus = cone
        return self._c_plus

    @property
    def psi_matrix(self):
        """Rows of psi: row k is -q(w_k)."""
        ell = self.embedding.ell
        return tuple(tuple(-c for c in w[ell:]) for w in self.selected)

    def psi(self, theta):
        return psi_C(theta, self.selected, self.orders, ell=self.embedding.ell)

    def psi_image(self, cone):
        return cone.linear_image([list(row) for row in self.psi_matrix])


def selected_rays(embedding, theta):
    """Semistable sigma_W rays at theta, one per p-image.

    Returns (selected, orders, semis): the rays over the exceptional
    p-images (in junior-class order when the embedding carries that data),
    their orders, and the full list of semistable rays.  Raises WallError
    when some p-image admits more than one semistable ray.
    """
    red = theta.reduced() if isinstance(theta, StabilityVector) else tuple(theta)
    ell = embedding.ell
    rays = embedding.sigma_w.rays
    semis = [r for r in rays
             if stability_cone_of_face(embedding, r).contains(red)]
    groups = {}
    for r in semis:
        groups.setdefault(embedding.p_image(r), []).append(r)
    for p, rs in groups.items():
        if len(rs) > 1:
            raise WallError("theta is on a wall: %d semistable rays over "
                            "p-image %r" % (len(rs), p))
    units = [tuple(1 if k == j else 0 for k in range(ell))
             for j in range(ell)]
    exceptional = {p: rs[0] for p, rs in groups.items() if p not in units}
    if embedding.exceptional is not None:
        selected = []
        orders = []
        for p, r_k in embedding.exceptional:
            key = _primitive(p)
            if key not in exceptional:
                raise WallError("no semistable ray over junior p-image %r"
                                % (p,))
            selected.append(exceptional[key])
            orders.append(r_k)
    else:
        selected = [exceptional[p] for p in sorted(exceptional)]
        orders = [1] * len(selected)
    return selected, orders, semis


def chamber_at(embedding, theta):
    """ChamberContext of a generic stability vector (reduced coordinates).

    Selected rays are the semistable rays of sigma_W; genericity demands a
    unique one per p-image.  The chamber is the intersection of the
    stability cones of the maximal semistable faces (the cones of the fan,
    spanned by up to ell selected rays).
    """
    from itertools import combinations

    red = theta.reduced() if isinstance(theta, StabilityVector) else tuple(theta)
    ell = embedding.ell
    selected, orders, semis = selected_rays(embedding, theta)
    maximal = []
    cone = None
    for subset in combinations(sorted(semis), ell):
        point = tuple(sum(c) for c in zip(*subset))
        c = stability_cone_of_face(embedding, point)
        if not c.contains(red):
            continue
        maximal.append(subset)
        cone = c if cone is None else cone.intersect(c)
    if cone is None:
        raise WallError("no maximal semistable face at theta")
    sdim = embedding.sdim
    ctx = ChamberContext(embedding, cone, selected, semis, orders,
                         maximal_faces=maximal)
    if cone.dim() < sdim:
        raise WallError("chamber at theta is not full-dimensional")
    return ctx


def _class_degrees(embedding):
    """Divisor-class degree vectors of the Cox generators.

    Returns (coordinate degrees, exceptional degrees): deg of the generator
    attached to f_j is the vector of its junior valuations, deg of the one
    attached to the k-th exceptional ray is -r_k e_k.
    """
    if embedding.exceptional is None:
        raise ModuliError("movable/nef cones need junior data")
    m = len(embedding.exceptional)
    coord = []
    for j in range(embedding.ell):
        coord.append(tuple(p[j] for p, _ in embedding.exceptional))
    exc = []
    for k, (_, r_k) in enumerate(embedding.exceptional):
        exc.append(tuple(-r_k if i == k else 0 for i in range(m)))
    return coord, exc


def movable_cone(embedding):
    """Mov(X) = intersection over exceptional rays of the C_{tau_i}."""
    coord, exc = _class_degrees(embedding)
    m = len(exc)
    mov = None
    for k in range(m):
        gens = coord + [e for i, e in enumerate(exc) if i != k]
        cone = RatCone.from_rays(gens, m)
        mov = cone if mov is None else mov.intersect(cone)
    return mov


def junior_simplex_points(embedding):
    """Lattice points of the junior simplex, scaled by the group order r.

    The n coordinate vertices become r e_j and the junior class of order
    r_k becomes (r / r_k) v_k; unimodular triangles of this configuration
    are exactly the smooth cones over the simplex.
    """
    if embedding.exceptional is None or embedding.order is None:
        raise ModuliError("junior simplex needs group data")
    r = embedding.order
    n = embedding.ell
    points = [tuple(r if k == j else 0 for k in range(n)) for j in range(n)]
    for p, r_k in embedding.exceptional:
        if r % r_k:
            raise ModuliError("junior order does not divide the group order")
        points.append(tuple((r // r_k) * c for c in p))
    return points


def nef_cone(triangulation, embedding):
    """Nef(X_Sigma) = intersection over maximal cones of the C_tau."""
    coord, exc = _class_degrees(embedding)
    m = len(exc)
    points = junior_simplex_points(embedding)
    degree_of = {}
    for j in range(embedding.ell):
        degree_of[points[j]] = coord[j]
    for k in range(m):
        degree_of[points[embedding.ell + k]] = exc[k]
    for p in triangulation.points:
        if tuple(p) not in degree_of:
            raise ModuliError("triangulation point %r is not a junior "
                              "simplex point" % (p,))
    nef = None
    for simplex in triangulation.simplices:
        used = set(simplex)
        gens = [degree_of[p] for p in triangulation.points
                if tuple(p) not in used]
        cone = RatCone.from_rays(gens, m)
        nef = cone if nef is None else nef.intersect(cone)
    return nef


# -- unimodular triangulations of the junior simplex ------------------------------------


class Triangulation:
    """A set of triangles tiling the (scaled) junior simplex."""

    def __init__(self, points, simplices):
        self.points = [tuple(p) for p in points]
        self.simplices = frozenset(tuple(sorted(s)) for s in simplices)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and \
            self.simplices == other.simplices

    def __hash__(self):
        return hash(self.simplices)

    def key(self):
        return tuple(sorted(self.simplices))

    def contains_simplex(self, simplex):
        return tuple(sorted(tuple(p) for p in simplex)) in self.simplices

    def __repr__(self):
        return "Triangulation(%d simplices)" % len(self.simplices)


def _proj(p):
    return (p[0], p[1])


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _interiors_overlap(tri_a, tri_b):
    """Separating-axis test for two triangles given as projected vertices."""
    for t1, t2 in ((tri_a, tri_b), (tri_b, tri_a)):
        for i in range(3):
            p, q = t1[i], t1[(i + 1) % 3]
            nx, ny = q[1] - p[1], p[0] - q[0]
            a_vals = [nx * v[0] + ny * v[1] for v in t1]
            b_vals = [nx * v[0] + ny * v[1] for v in t2]
            if max(a_vals) <= min(b_vals) or max(b_vals) <= min(a_vals):
                return False
    return True


def triangulations(points):
    """All unimodular triangulations of a junior simplex configuration.

    `points` are integer vectors of equal coordinate sum r (the scaled
    configuration); a triangle is unimodular when its projected determinant
    is +-r.  Returns (list of Triangulation, flip edges (i, j)), the edges
    connecting triangulations differing in exactly two triangles.
    """
    pts = [tuple(int(c) for c in p) for p in points]
    if len(set(pts)) != len(pts):
        raise ModuliError("duplicate points")
    sums = {sum(p) for p in pts}
    if len(sums) != 1:
        raise ModuliError("points do not lie on a common simplex slice")
    r = sums.pop()
    verts = [p for p in pts if sorted(p, reverse=True)[0] == r]
    if len(verts) != 3 or len(pts[0]) != 3:
        raise ModuliError("expected a three-dimensional junior simplex")
    proj = {p: _proj(p) for p in pts}

    candidates = []
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d = _cross(proj[pts[i]], proj[pts[j]], proj[pts[k]])
                if d == r or d == -r:
                    candidates.append(tuple(sorted((pts[i], pts[j], pts[k]))))
    cand_proj = [tuple(proj[p] for p in t) for t in candidates]
    by_pair = {}
    for ci, t in enumerate(candidates):
        for a in range(3):
            for b in range(3):
                if a != b:
                    by_pair.setdefault((t[a], t[b]), []).append(ci)
    overlap = {}

    def overlaps(ci, cj):
        key = (ci, cj) if ci < cj else (cj, ci)
        val = overlap.get(key)
        if val is None:
            val = _interiors_overlap(cand_proj[ci], cand_proj[cj])
            overlap[key] = val
        return val

    # initial frontier: directed primitive boundary segments, interior left
    v1, v2, v3 = verts
    if _cross(proj[v1], proj[v2], proj[v3]) < 0:
        v2, v3 = v3, v2
    frontier = set()
    for a, b in ((v1, v2), (v2, v3), (v3, v1)):
        on_edge = [p for p in pts
                   if _cross(proj[a], proj[b], proj[p]) == 0]
        on_edge.sort(key=lambda p: _dot(tuple(x - y for x, y in zip(b, a)),
                                        p))
        for u, v in zip(on_edge, on_edge[1:]):
            frontier.add((u, v))

    chosen = []
    results = []

    def dfs():
        if not frontier:
            results.append(frozenset(chosen))
            return
        u, v = min(frontier)
        for ci in by_pair.get((u, v), ()):
            t = candidates[ci]
            c = next(p for p in t if p != u and p != v)
            if _cross(proj[u], proj[v], proj[c]) <= 0:
                continue
            if any(overlaps(ci, cj) for cj in chosen):
                continue
            mods = []
            for x, y in ((u, v), (v, c), (c, u)):
                if (x, y) in frontier:
                    frontier.remove((x, y))
                    mods.append(("add", (x, y)))
                else:
                    frontier.add((y, x))
                    mods.append(("remove", (y, x)))
            chosen.append(ci)
            dfs()
            chosen.pop()
            for op, e in reversed(mods):
                if op == "add":
                    frontier.add(e)
                else:
                    frontier.remove(e)

    dfs()
    tris = [Triangulation(pts, [candidates[ci] for ci in res])
            for res in sorted(results, key=lambda res: sorted(
                candidates[ci] for ci in res))]
    edges = []
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if len(tris[i].simplices ^ tris[j].simplices) == 4:
                edges.append((i, j))
    return tris, edges


def flop_graph_labeling(tris, edges, anchor):
    """Label the flip graph in the paper-diagram shape.

    X_1 is the unique triangulation containing the anchor simplex; its
    leaf neighbors are X_2, X_3 (in canonical order), the non-leaf one is
    X_4, followed by the chain X_5, X_6, ...  Raises when the graph does
    not have this shape.
    """
    anchor = tuple(sorted(tuple(p) for p in anchor))
    starts = [i for i, t in enumerate(tris) if anchor in t.simplices]
    if len(starts) != 1:
        raise ModuliError("anchor simplex is not in a unique triangulation")
    adj = {i: set() for i in range(len(tris))}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    labels = {starts[0]: 1}
    nbrs = sorted(adj[starts[0]], key=lambda i: tris[i].key())
    leaves = [i for i in nbrs if len(adj[i]) == 1]
    inner = [i for i in nbrs if len(adj[i]) > 1]
    nxt = 2
    for i in leaves:
        labels[i] = nxt
        nxt += 1
    for i in inner:
        labels[i] = nxt
        nxt += 1
        prev, cur = starts[0], i
        while True:
            rest = [j for j in adj[cur] if j != prev]
            if not rest:
                break
            if len(rest) > 1:
                raise ModuliError("flip graph is not a star with chains")
            labels[rest[0]] = nxt
            nxt += 1
            prev, cur = cur, rest[0]
    if len(labels) != len(tris):
        raise ModuliError("flip graph is not connected through X_1")
    return {i: "X_%d" % k for i, k in labels.items()}


# -- walls and exploration ---------------------------------------------------------------


def classify_wall(chamber, wall):
    """('type0', image) when psi of the wall is full-dimensional in Pic,
    else ('contraction', image face).

    `wall` may be a facet of the chamber cone or of the surrounding
    selected-ray region C_+.
    """
    wall = tuple(wall)
    if wall in chamber.cone.facets:
        cone = chamber.cone
    elif wall in chamber.c_plus.facets:
        cone = chamber.c_plus
    else:
        raise ModuliError("wall is not a facet of the chamber or its region")
    face_rays = [r for r in cone.rays if _dot(wall, r) == 0]
    matrix = chamber.psi_matrix
    images = [tuple(_dot(row, r) for row in matrix) for r in face_rays]
    image = RatCone.from_rays(images, len(matrix))
    kind = "type0" if image.dim() == len(matrix) else "contraction"
    return kind, image


def _adjacent_chamber(embedding, cone, wall, region=False):
    """The chamber just across the given facet of `cone`.

    Steps to scale * (facet relint point) - wall for growing scales; a
    candidate only counts when its chamber closure (its region C_+ when
    `region` is set) contains the whole facet, which rules out
    overshooting into a non-adjacent chamber.
    """
    face_rays = [r for r in cone.rays if _dot(wall, r) == 0]
    if not face_rays:
        raise ModuliError("facet carries no rays")
    base = [sum(c) for c in zip(*face_rays)]
    others = [f for f in cone.facets if f != wall]
    scale = 1
    for _ in range(40):
        theta = tuple(scale * b - w for b, w in zip(base, wall))
        scale *= 2
        if _dot(wall, theta) >= 0 or any(_dot(f, theta) <= 0 for f in others):
            continue
        try:
            nxt = chamber_at(embedding, theta)
        except WallError:
            continue
        target = nxt.c_plus if region else nxt.cone
        if all(target.contains(r) for r in face_rays):
            return nxt
    raise ModuliError("could not step across the wall")


def explore_chambers(embedding, start_theta, goal, max_iters=64):
    """Breadth-first ray swapping until psi(C_+) contains the goal, where
    C_+ is the intersection of the selected rays' stability cones.

    States are the selected-ray regions C_+; crossing a facet of the
    region swaps the selected ray over one or more p-images for the
    adjacent ones.  Among the shortest successful paths the one whose
    final psi-image is smallest under inclusion is returned (the tightest
    region covering the goal), with the swap list as tie break.

    Returns a list of steps (context, swaps); swaps is a tuple of
    (removed ray, added ray) pairs relative to the previous region, empty
    for the starting one.  Raises when the cap is exhausted.
    """
    start = chamber_at(embedding, start_theta)

    def state_key(ctx):
        return tuple(sorted(ctx.selected))

    def success(ctx):
        return goal.is_subcone_of(ctx.psi_image(ctx.c_plus))

    start_step = (start, ())
    if success(start):
        return [start_step]
    seen = {state_key(start)}
    layer = [(start, [start_step])]
    visited = 0
    while layer:
        nxt_layer = []
        found = []
        for ctx, path in layer:
            visited += 1
            if visited > max_iters:
                raise ModuliError("goal not reached within %d regions"
                                  % max_iters)
            for wall in ctx.c_plus.facets:
                try:
                    nxt = _adjacent_chamber(embedding, ctx.c_plus, wall,
                                            region=True)
                except (WallError, ModuliError):
                    continue
                key = state_key(nxt)
                if key in seen:
                    continue
                seen.add(key)
                swaps = tuple((old, new) for old, new
                              in zip(ctx.selected, nxt.selected)
                              if old != new)
                step = (nxt, swaps)
                if success(nxt):
                    found.append(path + [step])
                else:
                    nxt_layer.append((nxt, path + [step]))
        if found:
            def rank(p):
                ctx = p[-1][0]
                return ctx.psi_image(ctx.c_plus)

            best = found[0]
            for cand in found[1:]:
                a, b = rank(cand), rank(best)
                if a == b:
                    if [s for _, s in cand] < [s for _, s in best]:
                        best = cand
                elif a.is_subcone_of(b):
                    best = cand
                elif not b.is_subcone_of(a):
                    if [s for _, s in cand] < [s for _, s in best]:
                        best = cand
            return best
        layer = nxt_layer
    raise ModuliError("goal not reached: no further regions")


# -- Cox generators ----------------------------------------------------------------------


def cox_generators_report(embedding, chamber=None, degree_bound=None):
    """The associated Cox-ring generators, plus a bounded generation check.

    Emits one term f_j prod_k t_k^{nu_k(f_j)} per generator of
    C[V]^[G,G] and one term t_k^{-r_k} per junior class.  When a degree
    bound is given, also verifies that the semigroup spanned by the
    embedding's weight vectors has no gaps in its saturation up to that
    bound; returns (terms, verdict).
    """
    if embedding.exceptional is None or embedding.fgens is None:
        raise ModuliError("cox report needs f-generators and junior data")
    m = len(embedding.exceptional)
    terms = []
    for j, f in enumerate(embedding.fgens):
        exps = tuple(p[j] for p, _ in embedding.exceptional)
        terms.append(CoxTerm(f, exps))
    one = MPoly.constant(embedding.fgens[0].variables, 1)
    for k, (_, r_k) in enumerate(embedding.exceptional):
        terms.append(CoxTerm(one, tuple(-r_k if i == k else 0
                                        for i in range(m))))
    verdict = None
    if degree_bound is not None:
        sigma = embedding.sigma_w
        if sigma.dim() < sigma.ambient_dim:
            raise ModuliError("sigma_W is not full-dimensional; saturation "
                              "check unavailable")
        cone = dual_cone(sigma)
        # degree = total f-exponent; strictly positive on every semigroup
        # generator, hence on the dual cone minus the origin
        grading = [1] * embedding.ell + [0] * embedding.sdim
        verdict = hilbert_saturation_check(embedding.weight_vectors, cone,
                                           degree_bound, grading=grading)
    return terms, verdict


# -- graded constellations ---------------------------------------------------------------


class GradedConstellation:
    """A torus-invariant constellation: graded pieces and their arrows."""

    def __init__(self, labels, dims, pieces, arrows, generator=0, name=None,
                 drop=0):
        self.labels = tuple(labels)
        self.dims = tuple(dims)
        self.pieces = [(lab, tuple(deg)) for lab, deg in pieces]
        self.arrows = [(int(i), int(j)) for i, j in arrows]
        self.generator = generator
        self.name = name
        self.drop = drop

    @classmethod
    def from_json(cls, obj, labels, dims):
        pieces = [(p["irrep"], tuple(p["degree"])) for p in obj["pieces"]]
        return cls(labels, dims, pieces, obj["arrows"],
                   generator=obj.get("generator", 0), name=obj.get("name"))

    def to_json(self):
        return {"name": self.name,
                "pieces": [{"irrep": lab, "degree": list(deg)}
                           for lab, deg in self.pieces],
                "arrows": [list(a) for a in self.arrows],
                "generator": self.generator}

    def check_module_class(self):
        counts = {}
        for lab, _ in self.pieces:
            counts[lab] = counts.get(lab, 0) + 1
        for lab, d in zip(self.labels, self.dims):
            if counts.get(lab, 0) != d:
                raise ModuliError(
                    "%r: irrep %s appears %d times, expected %d"
                    % (self.name, lab, counts.get(lab, 0), d))


def grading_arrows(group, irreps, pieces, step_labels):
    """Arrow list from the degree rule: i -> j when deg_j - deg_i is the
    k-th unit vector and Hom_G(V_k (x) rho_i, rho_j) is nonzero."""
    chars = {rep.label: rep.character(group) for rep in irreps}
    arrows = []
    for i, (lab_i, deg_i) in enumerate(pieces):
        for j, (lab_j, deg_j) in enumerate(pieces):
            diff = tuple(b - a for a, b in zip(deg_i, deg_j))
            if sum(diff) != 1 or any(d < 0 for d in diff):
                continue
            k = diff.index(1)
            prod = [v * x for v, x in zip(chars[step_labels[k]],
                                          chars[lab_i])]
            if character_inner(group, chars[lab_j], prod):
                arrows.append((i, j))
    return arrows


def graded_constellation_orbit_cone(gc):
    """{theta : theta(M) >= 0 for every proper nonzero closed M}.

    Submodules are the successor-closed piece subsets; the cone lives in
    reduced stability coordinates (coordinate `drop` eliminated).
    """
    gc.check_module_class()
    n = len(gc.pieces)
    if n > 22:
        raise ModuliError("too many pieces for subset enumeration")
    succ = [0] * n
    for i, j in gc.arrows:
        succ[i] |= 1 << j
    idx = {lab: k for k, lab in enumerate(gc.labels)}
    d_drop = gc.dims[gc.drop]
    normals = set()
    full = (1 << n) - 1
    for mask in range(1, full):
        ok = True
        for i in range(n):
            if mask >> i & 1 and succ[i] & ~mask:
                ok = False
                break
        if not ok:
            continue
        counts = [0] * len(gc.labels)
        for i in range(n):
            if mask >> i & 1:
                counts[idx[gc.pieces[i][0]]] += 1
        c_drop = Fraction(counts[gc.drop], d_drop)
        vec = tuple(counts[k] - c_drop * gc.dims[k]
                    for k in range(len(gc.labels)) if k != gc.drop)
        if any(vec):
            normals.add(vec)
    sdim = len(gc.labels) - 1
    return RatCone.from_inequalities(sorted(normals), sdim)
