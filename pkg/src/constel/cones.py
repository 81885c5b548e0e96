"""Exact rational polyhedral cones and linear programming.

Everything here works over Fraction/int with no floating point: a double
description converter (with explicit lineality handling and canonical
primitive-integer output), face enumeration, a two-phase simplex with
Bland's rule, polyhedra via homogenization, and the GIT-semistability
helpers built on top of them.
"""

from fractions import Fraction
from math import gcd


# -- small exact linear algebra -----------------------------------------------

def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        acc += a * b
    return acc


def _primitive(vec):
    """Scale a rational vector to a primitive integer tuple."""
    denom = 1
    for c in vec:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in vec]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)


def rref(rows):
    """Reduced row echelon form over Fraction; returns (rows, pivot cols)."""
    work = [[Fraction(c) for c in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [v - f * w for v, w in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def mat_rank(rows):
    return len(rref(rows)[0]) if rows else 0


def _canonical_basis(rows):
    """Canonical primitive-integer basis of the row span."""
    reduced, _ = rref(rows)
    return tuple(sorted(_primitive(row) for row in reduced))


# -- double description --------------------------------------------------------

def dd_cone(normals, dim):
    """Extreme rays and lineality of {x : a . x >= 0 for a in normals}.

    Fukuda-Prodon style incremental insertion with the combinatorial
    adjacency test; constraints are deduplicated and inserted in
    lexicographic order so the output is canonical.
    """
    cons = sorted(set(_primitive(a) for a in normals if any(a)))
    lin = [[Fraction(1 if i == j else 0) for j in range(dim)]
           for i in range(dim)]
    rays = []  # pairs (vector, zero-set bitmask over processed constraints)
    for k, a in enumerate(cons):
        pivot = None
        for i, l in enumerate(lin):
            if _dot(a, l):
                pivot = i
                break
        if pivot is not None:
            l0 = lin.pop(pivot)
            s = _dot(a, l0)
            if s < 0:
                l0 = [-c for c in l0]
                s = -s
            lin = [[v - (_dot(a, l) / s) * w for v, w in zip(l, l0)]
                   for l in lin]
            rays = [([v - (_dot(a, r) / s) * w for v, w in zip(r, l0)], z)
                    for r, z in rays]
            # the freed lineality direction satisfies all earlier
            # constraints with equality and the current one strictly
            rays = [(r, z | (1 << k)) for r, z in rays]
            rays.append((l0, (1 << k) - 1))
            continue
        pos, zer, neg = [], [], []
        for r, z in rays:
            val = _dot(a, r)
            if val > 0:
                pos.append((r, z))
            elif val < 0:
                neg.append((r, z))
            else:
                zer.append((r, z | (1 << k)))
        if not neg:
            rays = [(r, z) for r, z in pos] + zer
            continue
        kept = pos + zer
        new = []
        for rp, zp in pos:
            ap = _dot(a, rp)
            for rn, zn in neg:
                common = zp & zn
                adjacent = True
                for r2, z2 in rays:
                    if r2 is rp or r2 is rn:
                        continue
                    if common & z2 == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                an = -_dot(a, rn)
                combo = [an * p + ap * n for p, n in zip(rp, rn)]
                new.append((combo, common | (1 << k)))
        seen = set()
        rays = []
        for r, z in kept + new:
            key = _primitive(r)
            if key not in seen:
                seen.add(key)
                rays.append((list(map(Fraction, key)), z))
    out = sorted(_primitive(r) for r, _ in rays)
    return tuple(out), _canonical_basis(lin) if lin else ()


def brute_force_facets(rays, dim):
    """Facet normals of a full-dimensional pointed cone by subset search.

    Test oracle: every (dim-1)-subset of generators spanning a hyperplane
    with one-sided residuals contributes its normal. Only sensible in
    small dimension.
    """
    from itertools import combinations
    rays = [tuple(r) for r in rays]
    found = set()
    for subset in combinations(range(len(rays)), dim - 1):
        sub = [rays[i] for i in subset]
        if mat_rank(sub) != dim - 1:
            continue
        # a normal spanning the 1-dim kernel of the subset
        reduced, pivots = rref(sub)
        free = [c for c in range(dim) if c not in pivots]
        if len(free) != 1:
            continue
        normal = [Fraction(0)] * dim
        normal[free[0]] = Fraction(1)
        for row, p in zip(reduced, pivots):
            normal[p] = -row[free[0]]
        normal = _primitive(normal)
        sides = [_dot(normal, r) for r in rays]
        if all(v >= 0 for v in sides):
            found.add(normal)
        elif all(v <= 0 for v in sides):
            found.add(tuple(-c for c in normal))
    return tuple(sorted(found))


# -- cones ----------------------------------------------------------------------

class RatCone:
    """Rational polyhedral cone with canonical double description.

    V-representation: primitive extreme rays plus a lineality basis.
    H-representation: primitive facet normals plus equations cutting out
    the linear span. Either side is computed lazily from the other.
    """

    def __init__(self, dim):
        self.ambient_dim = dim
        self._rays = None
        self._lineality = None
        self._facets = None
        self._equations = None
        self._raw_rays = None
        self._raw_normals = None
        self._raw_equations = None

    @classmethod
    def from_rays(cls, rays, dim=None):
        rays = [tuple(r) for r in rays]
        if dim is None:
            if not rays:
                raise ValueError("dimension required for the empty cone")
            dim = len(rays[0])
        cone = cls(dim)
        cone._raw_rays = [r for r in rays if any(r)]
        return cone

    @classmethod
    def from_inequalities(cls, normals, dim, equations=()):
        cone = cls(dim)
        cone._raw_normals = [tuple(a) for a in normals if any(a)]
        cone._raw_equations = [tuple(e) for e in equations if any(e)]
        return cone

    # -- representation conversion -------------------------------------------
    #
    # Facets are only ever derived from the extreme rays (and vice versa)
    # by double description, so both sides come out canonical and
    # irredundant no matter how the cone was constructed.

    def _ensure_vrep(self):
        if self._rays is not None:
            return
        if self._raw_normals is not None:
            normals = list(self._raw_normals)
            for e in self._raw_equations:
                normals.append(e)
                normals.append(tuple(-c for c in e))
        else:
            self._ensure_hrep()
            normals = list(self._facets)
            for e in self._equations:
                normals.append(e)
                normals.append(tuple(-c for c in e))
        self._rays, self._lineality = dd_cone(normals, self.ambient_dim)

    def _ensure_hrep(self):
        if self._facets is not None:
            return
        if self._raw_rays is not None:
            gens = list(self._raw_rays)
        else:
            self._ensure_vrep()
            gens = list(self._rays)
            for l in self._lineality:
                gens.append(l)
                gens.append(tuple(-c for c in l))
        self._facets, self._equations = dd_cone(gens, self.ambient_dim)

    @property
    def rays(self):
        self._ensure_vrep()
        return self._rays

    @property
    def lineality(self):
        self._ensure_vrep()
        return self._lineality

    @property
    def facets(self):
        self._ensure_hrep()
        return self._facets

    @property
    def equations(self):
        self._ensure_hrep()
        return self._equations

    # -- predicates ------------------------------------------------------------

    def _hdata(self):
        """Some valid (normals, equations) pair, preferring cheap raw input."""
        if self._facets is not None:
            return self._facets, self._equations
        if self._raw_normals is not None:
            return self._raw_normals, self._raw_equations
        self._ensure_hrep()
        return self._facets, self._equations

    def contains(self, v):
        normals, equations = self._hdata()
        return (all(_dot(a, v) >= 0 for a in normals)
                and all(_dot(e, v) == 0 for e in equations))

    def contains_in_relint(self, v):
        self._ensure_hrep()
        return (all(_dot(f, v) > 0 for f in self._facets)
                and all(_dot(e, v) == 0 for e in self._equations))

    def dim(self):
        self._ensure_vrep()
        rows = list(self._rays) + list(self._lineality)
        return mat_rank(rows) if rows else 0

    def is_pointed(self):
        return not self.lineality

    def __eq__(self, other):
        if not isinstance(other, RatCone):
            return NotImplemented
        if self.ambient_dim != other.ambient_dim:
            return False
        return (self.rays == other.rays
                and self.lineality == other.lineality)

    def __hash__(self):
        return hash((self.ambient_dim, self.rays, self.lineality))

    def __repr__(self):
        return "RatCone(dim=%d, rays=%d, lineality=%d)" % (
            self.ambient_dim, len(self.rays), len(self.lineality))

    def is_subcone_of(self, other):
        return (all(other.contains(r) for r in self.rays)
                and all(other.contains(l) and
                        other.contains(tuple(-c for c in l))
                        for l in self.lineality))

    # -- constructions -----------------------------------------------------------

    def intersect(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        n1, e1 = self._hdata()
        n2, e2 = other._hdata()
        return RatCone.from_inequalities(
            list(n1) + list(n2), self.ambient_dim, list(e1) + list(e2))

    def relint_point(self):
        self._ensure_vrep()
        if not self._rays:
            return tuple([0] * self.ambient_dim)
        total = [0] * self.ambient_dim
        for r in self._rays:
            total = [a + b for a, b in zip(total, r)]
        return tuple(total)

    def linear_image(self, matrix):
        """Image cone under the linear map given by `matrix` rows."""
        images = [tuple(_dot(row, r) for row in matrix) for r in self.rays]
        for l in self.lineality:
            img = tuple(_dot(row, l) for row in matrix)
            images.append(img)
            images.append(tuple(-c for c in img))
        return RatCone.from_rays(images, len(matrix))

    def preimage_cone(self, matrix):
        """{x : matrix . x lies in this cone}."""
        ncols = len(matrix[0])
        normals = []
        for f in self.facets:
            normals.append(tuple(_dot(f, [row[j] for row in matrix])
                                 for j in range(ncols)))
        equations = []
        for e in self.equations:
            equations.append(tuple(_dot(e, [row[j] for row in matrix])
                                   for j in range(ncols)))
        return RatCone.from_inequalities(normals, ncols, equations)

    # -- faces ---------------------------------------------------------------------

    def faces(self, k=None):
        """Faces as RatCones; all of them, or only those of dimension k.

        Enumerated from ray/facet incidence by intersecting facet subsets,
        so only meant for cones of modest size.
        """
        self._ensure_vrep()
        self._ensure_hrep()
        rays = self.rays
        facets = self.facets
        incidence = [frozenset(i for i, f in enumerate(facets)
                               if _dot(f, r) == 0) for r in rays]
        top = frozenset(range(len(rays)))
        seen = {top}
        queue = [top]
        out = []
        while queue:
            current = queue.pop()
            out.append(current)
            for fi in range(len(facets)):
                child = frozenset(i for i in current if fi in incidence[i])
                if child != current and child not in seen:
                    seen.add(child)
                    queue.append(child)
        if frozenset() not in seen:
            out.append(frozenset())
        cones = []
        for subset in sorted(out, key=lambda s: (len(s), sorted(s))):
            face = RatCone.from_rays([rays[i] for i in subset],
                                     self.ambient_dim)
            if self.lineality:
                extra = []
                for l in self.lineality:
                    extra.append(l)
                    extra.append(tuple(-c for c in l))
                face = RatCone.from_rays(
                    list(face._raw_rays) + extra, self.ambient_dim)
            if k is None or face.dim() == k:
                cones.append(face)
        return cones

    # -- wire format ------------------------------------------------------------------

    def to_json(self):
        return {"dim": self.ambient_dim,
                "rays": [list(r) for r in self.rays],
                "lineality": [list(l) for l in self.lineality],
                "facets": [list(f) for f in self.facets],
                "equations": [list(e) for e in self.equations]}

    @staticmethod
    def from_json(obj):
        cone = RatCone(obj["dim"])
        cone._rays = tuple(tuple(r) for r in obj["rays"])
        cone._lineality = tuple(tuple(l) for l in obj.get("lineality", []))
        cone._facets = tuple(tuple(f) for f in obj["facets"])
        cone._equations = tuple(tuple(e) for e in obj.get("equations", []))
        return cone


def dual_cone(cone):
    """{f : f(v) >= 0 for all v in cone}."""
    normals = list(cone.rays)
    for l in cone.lineality:
        normals.append(l)
        normals.append(tuple(-c for c in l))
    return RatCone.from_inequalities(normals, cone.ambient_dim)


def intersect(a, b):
    return a.intersect(b)


# -- linear programming ----------------------------------------------------------------

def simplex_solve(c, a_ge, b_ge, a_eq=(), b_eq=()):
    """min c.x subject to a_ge.x >= b_ge and a_eq.x = b_eq, x free.

    Two-phase simplex over Fraction with Bland's rule. Returns
    (status, value, point) with status one of "optimal", "unbounded",
    "infeasible".
    """
    n = len(c)
    rows = []
    rhs = []
    surplus_of = []
    for coeffs, b in zip(a_ge, b_ge):
        rows.append(list(coeffs))
        rhs.append(b)
        surplus_of.append(len(surplus_of))
    n_surplus = len(rows)
    for coeffs, b in zip(a_eq, b_eq):
        rows.append(list(coeffs))
        rhs.append(b)
        surplus_of.append(None)
    m = len(rows)
    # columns: x+ (n), x- (n), surplus (n_surplus), artificial (m)
    width = 2 * n + n_surplus + m
    table = []
    for i in range(m):
        row = [Fraction(0)] * (width + 1)
        for j in range(n):
            row[j] = Fraction(rows[i][j])
            row[n + j] = Fraction(-rows[i][j])
        if surplus_of[i] is not None:
            row[2 * n + surplus_of[i]] = Fraction(-1)
        row[width] = Fraction(rhs[i])
        if row[width] < 0:
            row = [-v for v in row]
        row[2 * n + n_surplus + i] = Fraction(1)
        table.append(row)
    basis = [2 * n + n_surplus + i for i in range(m)]

    def run_phase(cost, blocked):
        # cost: full-width objective row to minimize; Bland's rule
        z = [Fraction(v) for v in cost] + [Fraction(0)]
        for i, b in enumerate(basis):
            f = z[b]
            if f:
                for j in range(width + 1):
                    z[j] -= f * table[i][j]
        while True:
            enter = None
            for j in range(width):
                if j not in blocked and z[j] < 0:
                    enter = j
                    break
            if enter is None:
                return "optimal", -z[width]
            leave = None
            best = None
            for i in range(m):
                if table[i][enter] > 0:
                    ratio = table[i][width] / table[i][enter]
                    if best is None or ratio < best or \
                            (ratio == best and basis[i] < basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return "unbounded", None
            piv = table[leave][enter]
            table[leave] = [v / piv for v in table[leave]]
            for i in range(m):
                if i != leave and table[i][enter]:
                    f = table[i][enter]
                    table[i] = [v - f * w
                                for v, w in zip(table[i], table[leave])]
            f = z[enter]
            if f:
                z = [v - f * w for v, w in zip(z, table[leave])]
            basis[leave] = enter

    if n_surplus == m and all(b <= 0 for b in b_ge):
        # the origin is feasible: the surplus columns already form a
        # feasible basis and phase 1 can be skipped entirely
        for i in range(m):
            if table[i][2 * n + i] < 0:
                table[i] = [-v for v in table[i]]
        basis = list(range(2 * n, 2 * n + m))
    else:
        phase1_cost = [Fraction(0)] * width
        for i in range(m):
            phase1_cost[2 * n + n_surplus + i] = Fraction(1)
        status, value = run_phase(phase1_cost, frozenset())
        if status != "optimal" or value != 0:
            return "infeasible", None, None
    # drive leftover artificials out of the basis when possible
    for i in range(m):
        if basis[i] >= 2 * n + n_surplus:
            for j in range(2 * n + n_surplus):
                if table[i][j]:
                    piv = table[i][j]
                    table[i] = [v / piv for v in table[i]]
                    for i2 in range(m):
                        if i2 != i and table[i2][j]:
                            f = table[i2][j]
                            table[i2] = [v - f * w for v, w
                                         in zip(table[i2], table[i])]
                    basis[i] = j
                    break
    phase2_cost = [Fraction(0)] * width
    for j in range(n):
        phase2_cost[j] = Fraction(c[j])
        phase2_cost[n + j] = Fraction(-c[j])
    # artificials must not re-enter the basis
    blocked = frozenset(range(2 * n + n_surplus, width))
    status, value = run_phase(phase2_cost, blocked)
    if status != "optimal":
        return "unbounded", None, None
    point = [Fraction(0)] * width
    for i, b in enumerate(basis):
        point[b] = table[i][width]
    x = tuple(point[j] - point[n + j] for j in range(n))
    return "optimal", value, x


class Polyhedron:
    """Rational polyhedron with lazy H/V representations (homogenization)."""

    def __init__(self, dim):
        self.ambient_dim = dim
        self._a_ge = None
        self._b_ge = None
        self._a_eq = None
        self._b_eq = None
        self._vertices = None
        self._rays = None
        self._lineality = None

    @classmethod
    def from_hrep(cls, a_ge, b_ge, a_eq=(), b_eq=(), dim=None):
        if dim is None:
            dim = len(a_ge[0]) if a_ge else len(a_eq[0])
        poly = cls(dim)
        poly._a_ge = [tuple(r) for r in a_ge]
        poly._b_ge = list(b_ge)
        poly._a_eq = [tuple(r) for r in a_eq]
        poly._b_eq = list(b_eq)
        return poly

    @classmethod
    def from_vrep(cls, vertices, rays=(), dim=None):
        vertices = [tuple(v) for v in vertices]
        rays = [tuple(r) for r in rays]
        if dim is None:
            dim = len((vertices + rays)[0])
        poly = cls(dim)
        poly._vertices = vertices
        poly._rays = rays
        poly._lineality = []
        return poly

    def _ensure_vrep(self):
        if self._vertices is not None:
            return
        d = self.ambient_dim
        normals = [tuple([1] + [0] * d)]
        for coeffs, b in zip(self._a_ge, self._b_ge):
            normals.append(tuple([-b] + list(coeffs)))
        eqs = [tuple([-b] + list(coeffs))
               for coeffs, b in zip(self._a_eq, self._b_eq)]
        for e in eqs:
            normals.append(e)
            normals.append(tuple(-c for c in e))
        rays, lineality = dd_cone(normals, d + 1)
        verts, rec = [], []
        for r in rays:
            if r[0] > 0:
                verts.append(tuple(Fraction(c, r[0]) for c in r[1:]))
            else:
                rec.append(tuple(r[1:]))
        self._vertices = sorted(verts)
        self._rays = sorted(rec)
        self._lineality = [tuple(l[1:]) for l in lineality]

    @property
    def vertices(self):
        self._ensure_vrep()
        return self._vertices

    @property
    def rays(self):
        self._ensure_vrep()
        return self._rays

    @property
    def lineality(self):
        self._ensure_vrep()
        return self._lineality

    def is_empty(self):
        self._ensure_vrep()
        return not self._vertices

    def contains(self, point):
        if self._a_ge is None:
            raise ValueError("no H-representation available")
        return (all(_dot(a, point) >= b
                    for a, b in zip(self._a_ge, self._b_ge))
                and all(_dot(a, point) == b
                        for a, b in zip(self._a_eq, self._b_eq)))


def lp_minimize(objective, poly):
    """Exact minimum of a linear functional over a polyhedron (simplex)."""
    if poly._a_ge is None:
        raise ValueError("lp_minimize needs an H-representation")
    return simplex_solve(objective, poly._a_ge, poly._b_ge,
                         poly._a_eq, poly._b_eq)


def lp_by_enumeration(objective, poly):
    """Oracle twin of lp_minimize using vertex/ray enumeration."""
    if poly.is_empty():
        return "infeasible", None, None
    for r in poly.rays:
        if _dot(objective, r) < 0:
            return "unbounded", None, None
    for l in poly.lineality:
        if _dot(objective, l) != 0:
            return "unbounded", None, None
    best = None
    arg = None
    for v in poly.vertices:
        val = _dot(objective, v)
        if best is None or val < best:
            best, arg = val, v
    return "optimal", best, arg


# -- GIT semistability ----------------------------------------------------------------------

def face_semistable(embedding, theta, face_point):
    """Prop.-3.6 test for the face of sigma_W with relint point face_point.

    The face is semistable for theta iff the minimum of theta . q(u) over
    the slice {u in sigma_W : p(u) = p(face_point)} is attained at
    face_point itself. Writing u = face_point + (0, d) parametrizes the
    slice directly and makes the origin feasible, so no phase 1 is needed.
    """
    ell = embedding.ell
    sdim = len(theta)
    a_ge = []
    b_ge = []
    for a in embedding.weight_vectors:
        a_ge.append([a[ell + i] for i in range(sdim)])
        b_ge.append(-_dot(a, face_point))
    status, value, _ = simplex_solve(list(theta), a_ge, b_ge)
    return status == "optimal" and value == 0


def semistable_faces(embedding, theta, max_dim=1):
    """Faces of sigma_W (up to max_dim) in the theta-semistable fan."""
    out = []
    if max_dim >= 1:
        for ray in embedding.sigma_w.rays:
            if face_semistable(embedding, theta, ray):
                out.append((ray,))
    if max_dim >= 2:
        for face in embedding.sigma_w.faces():
            d = face.dim()
            if d < 2 or d > max_dim:
                continue
            if face_semistable(embedding, theta, face.relint_point()):
                out.append(tuple(face.rays))
    return out


def hilbert_mumford_check(embedding, theta, face_point):
    """Independent semistability oracle via the tangent cone at a face.

    A one-parameter subgroup w in Theta-dual destabilizes iff every
    semigroup generator vanishing on the face pairs >= 0 with w while
    theta . w < 0; so the face is semistable iff theta lies in the cone
    spanned by the q-parts of the weight vectors vanishing on the face.
    """
    ell = embedding.ell
    tight = [a for a in embedding.weight_vectors
             if _dot(a, face_point) == 0]
    qs = [tuple(a[ell:]) for a in tight]
    if not qs:
        return all(c == 0 for c in theta)
    cone = RatCone.from_rays(qs, len(theta))
    return cone.contains(theta)


def orbit_cone_of_ray(vectors, distinguished, ell):
    """Cone of stabilities selecting `distinguished` among same-p rays.

    C_u = {theta : (q(u_j) - q(u)) . theta >= 0 for all j}.
    """
    if distinguished not in [tuple(v) for v in vectors]:
        raise ValueError("distinguished vector not in the list")
    u = tuple(distinguished)
    sdim = len(u) - ell
    normals = []
    for v in vectors:
        diff = tuple(v[ell + i] - u[ell + i] for i in range(sdim))
        if any(diff):
            normals.append(diff)
    if not normals:
        # no competing ray: all of Theta
        return RatCone.from_inequalities([], sdim)
    return RatCone.from_inequalities(normals, sdim)


def orbit_cone_from_weights(weights, dim=None):
    """Cone generated by the given stability weight vectors."""
    weights = [tuple(w) for w in weights]
    if not weights:
        if dim is None:
            raise ValueError("dimension required for the empty list")
        return RatCone.from_rays([], dim)
    return RatCone.from_rays(weights, dim)


# -- bounded saturation ------------------------------------------------------------------------

def _propagate_bounds(supports, bases, k, lo, hi):
    """Tighten integer box bounds for the free coordinates.

    Constraint r is sum over its support (j, c) with j >= k of c*x_j
    >= bases[r]; lo/hi index coordinates from k on.  Returns narrowed
    (lo, hi) or None when some range empties.  Bounds are sound but not
    necessarily exact, so callers must re-check full points.
    """
    lo = list(lo)
    hi = list(hi)
    changed = True
    rounds = 0
    while changed and rounds < 16:
        changed = False
        rounds += 1
        for pairs, base in zip(supports, bases):
            if not pairs:
                if base > 0:
                    return None
                continue
            contrib = [c * hi[j - k] if c > 0 else c * lo[j - k]
                       for j, c in pairs]
            total = sum(contrib)
            for (j, c), own in zip(pairs, contrib):
                idx = j - k
                need = base - (total - own)
                if c > 0:
                    nb = -((-need) // c)
                    if nb > lo[idx]:
                        lo[idx] = nb
                        changed = True
                        if nb > hi[idx]:
                            return None
                else:
                    nb = need // c
                    if nb < hi[idx]:
                        hi[idx] = nb
                        changed = True
                        if nb < lo[idx]:
                            return None
    return lo, hi


def lattice_points(cone, grading, bound):
    """All lattice points x of the cone with grading . x <= bound.

    Requires the grading functional to be strictly positive on the cone
    minus the origin (checked), so the region is a polytope.  Enumeration
    is a depth-first box search; per-prefix bounds come from integer
    constraint propagation and every full point is verified exactly.
    """
    dim = cone.ambient_dim
    for r in cone.rays:
        if _dot(grading, r) <= 0:
            raise ValueError("grading not strictly positive on the cone")
    if cone.lineality:
        raise ValueError("cone must be pointed")
    rows = [list(f) for f in cone.facets]
    for e in cone.equations:
        rows.append(list(e))
        rows.append([-c for c in e])
    rows.append([-g for g in grading])
    rhs = [0] * (len(rows) - 1) + [-bound]
    # nonzero entries of each row at coordinates >= k, per depth k
    nz = [[(j, c) for j, c in enumerate(row) if c] for row in rows]
    supports = [[[p for p in pairs if p[0] >= k] for pairs in nz]
                for k in range(dim + 1)]
    # box of the polytope conv{0, bound*r/(grading.r)} containing it
    lo0 = [Fraction(0)] * dim
    hi0 = [Fraction(0)] * dim
    for r in cone.rays:
        scale = Fraction(bound, _dot(grading, r))
        for j, c in enumerate(r):
            lo0[j] = min(lo0[j], scale * c)
            hi0[j] = max(hi0[j], scale * c)
    import math
    lo0 = [math.ceil(v) for v in lo0]
    hi0 = [math.floor(v) for v in hi0]
    points = []

    def descend(fixed, bases, lo, hi):
        k = len(fixed)
        if k == dim:
            if all(b <= 0 for b in bases):
                points.append(tuple(fixed))
            return
        narrowed = _propagate_bounds(supports[k], bases, k, lo, hi)
        if narrowed is None:
            return
        nlo, nhi = narrowed
        col = [row[k] for row in rows]
        for val in range(nlo[0], nhi[0] + 1):
            next_bases = [b - c * val for b, c in zip(bases, col)]
            descend(fixed + [val], next_bases, nlo[1:], nhi[1:])

    descend([], list(rhs), lo0, hi0)
    return points


def hermite_rows(rows):
    """Row Hermite form (pivot rows only) of an integer matrix."""
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    width = len(mat[0])
    out = []
    col = 0
    while col < width and mat:
        nz = [r for r in mat if r[col]]
        rest = [r for r in mat if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            pivot = nz[0]
            kept = [pivot]
            for r in nz[1:]:
                q = r[col] // pivot[col]
                red = [a - q * b for a, b in zip(r, pivot)]
                if red[col]:
                    kept.append(red)
                elif any(red):
                    rest.append(red)
            nz = kept
        if nz:
            pivot = nz[0]
            if pivot[col] < 0:
                pivot = [-a for a in pivot]
            out.append(pivot)
        mat = rest
        col += 1
    return out


def in_row_lattice(point, hermite):
    """Whether an integer point lies in the row lattice (rows in Hermite form)."""
    p = list(point)
    for row in hermite:
        col = next(i for i, v in enumerate(row) if v)
        if p[col] % row[col]:
            return False
        q = p[col] // row[col]
        p = [a - q * b for a, b in zip(p, row)]
    return not any(p)


def hilbert_saturation_check(generators, cone, bound, grading=None):
    """Compare the semigroup of `generators` with the cone lattice points.

    The reference lattice is the group generated by the generators (the
    normality notion for affine semigroups).  Returns (True, None) when
    every point of that lattice inside the cone with grading-degree
    <= bound is a nonnegative integer combination of the generators,
    else (False, witness).
    """
    generators = [tuple(g) for g in generators]
    if grading is None:
        grading = [1] * cone.ambient_dim
    for g in generators:
        if not cone.contains(g):
            raise ValueError("generator outside the cone: %r" % (g,))
    hermite = hermite_rows(generators)
    dim = cone.ambient_dim
    if len(hermite) == dim:
        # change coordinates to the generator lattice (x = z . H) and
        # enumerate there; every candidate is then in the lattice
        def to_z_normal(f):
            return tuple(_dot(h, f) for h in hermite)

        cone_z = RatCone.from_inequalities(
            [to_z_normal(f) for f in cone.facets], dim,
            equations=[to_z_normal(e) for e in cone.equations])
        pts = []
        for z in lattice_points(cone_z, to_z_normal(grading), bound):
            pts.append(tuple(sum(z[i] * hermite[i][j] for i in range(dim))
                             for j in range(dim)))
    else:
        pts = [p for p in lattice_points(cone, grading, bound)
               if in_row_lattice(p, hermite)]
    zero = tuple([0] * cone.ambient_dim)
    member = {zero}
    # partial sums of generators never leave the cone, so processing by
    # increasing grading degree makes this one-pass dynamic programming
    for p in sorted(pts, key=lambda p: (_dot(grading, p), p)):
        if p in member:
            continue
        for g in generators:
            rest = tuple(a - b for a, b in zip(p, g))
            if rest in member:
                member.add(p)
                break
        else:
            return False, p
    return True, None
