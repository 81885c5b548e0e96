"""McKay quivers, equivariant hom bases and generic arrow matrices.

The quiver has one vertex per irreducible representation and
a_{rho,rho'} = dim Hom_G(V* (x) rho, rho') arrows rho -> rho'.  Each arrow
carries a matrix of linear forms ("generic matrix") realizing one basis
element of that hom space; evaluating the matrices at a point of V gives the
fibre of the tautological family.  The commutation relations cutting out the
representation space are recovered by assembling the coordinate action on
the total module and testing that the coordinate operators commute.
"""

from fractions import Fraction

from .exactmath import CycNum, Mat, MPoly, ZERO, kernel_basis
from .grouprep import GroupError, character_inner


class Arrow:
    def __init__(self, tail, head, index, matrix):
        self.tail = tail      # irrep label
        self.head = head      # irrep label
        self.index = index    # 0-based among parallel arrows
        self.matrix = matrix  # Mat of MPoly, shape dim(head) x dim(tail)

    @property
    def name(self):
        return "%s->%s#%d" % (self.tail, self.head, self.index)

    def __repr__(self):
        return "Arrow(%s)" % self.name


class McKayQuiver:
    """Vertices = irreps; arrows carry generic matrices of linear forms."""

    def __init__(self, group, irreps, variables, arrows):
        self.group = group
        self.irreps = list(irreps)
        self.by_label = {r.label: r for r in irreps}
        self.variables = tuple(variables)
        self.arrows = list(arrows)
        self.out = {r.label: [] for r in irreps}
        self.into = {r.label: [] for r in irreps}
        for a in self.arrows:
            self.out[a.tail].append(a)
            self.into[a.head].append(a)

    def arrow(self, tail, head, index=0):
        for a in self.arrows:
            if (a.tail, a.head, a.index) == (tail, head, index):
                return a
        raise KeyError("no arrow %s->%s#%d" % (tail, head, index))


def natural_character(group):
    """Character of the defining representation V (the matrices themselves)."""
    return [rep.trace() for rep in group.class_reps]


def dual_character(chi):
    return [c.conjugate() for c in chi]


def arrow_counts(group, irreps):
    """a[(rho, rho')] = number of arrows rho -> rho' in the McKay quiver.

    Computed as dim Hom_G(V (x) rho, rho'): the multiplicity of rho' in
    V (x) rho, i.e. the number of independent coordinate-linear equivariant
    maps rho -> rho'.  This matches the printed quiver diagrams (for self-dual
    V the dual convention gives the same numbers).
    """
    chis = {r.label: r.character(group) for r in irreps}
    chi_v = natural_character(group)
    counts = {}
    for a in irreps:
        for b in irreps:
            prod = [v * x for v, x in zip(chi_v, chis[a.label])]
            val = character_inner(group, chis[b.label], prod)
            if not val.is_rational() or Fraction(val.as_fraction()).denominator != 1:
                raise GroupError("non-integral arrow count %s->%s" % (a.label, b.label))
            counts[(a.label, b.label)] = int(val.as_fraction())
    return counts


def _substituted(group, matrix, gen_index, variables):
    """Apply x_j -> sum_k g[j][k] x_k to every entry, g the given generator."""
    g = group.generators[gen_index]
    n = g.rows
    images = []
    for j in range(n):
        terms = {}
        for k in range(n):
            if g.entries[j][k]:
                exp = [0] * len(variables)
                exp[k] = 1
                terms[tuple(exp)] = g.entries[j][k]
        images.append(MPoly(variables, terms))
    return Mat([[e.substitute(images) for e in row] for row in matrix.entries])


def equivariance_residues(group, rho, rho_prime, matrix, variables):
    """rho'(g) . H - H(g.x) . rho(g), one residue matrix per generator."""
    res = []
    for gi in range(len(group.generators)):
        lhs = _scalar_mat_times_poly(rho_prime.gen_images[gi], matrix)
        rhs = _poly_mat_times_scalar(_substituted(group, matrix, gi, variables),
                                     rho.gen_images[gi])
        res.append(lhs - rhs)
    return res


def _scalar_mat_times_poly(s, p):
    rows, mid, cols = s.rows, s.cols, p.cols
    vs = None
    for row in p.entries:
        for e in row:
            vs = e.variables
            break
        break
    out = []
    for i in range(rows):
        out.append([])
        for j in range(cols):
            acc = MPoly.zero(vs)
            for k in range(mid):
                if s.entries[i][k]:
                    acc = acc + p.entries[k][j] * s.entries[i][k]
            out[-1].append(acc)
    return Mat(out)


def _poly_mat_times_scalar(p, s):
    rows, mid, cols = p.rows, p.cols, s.cols
    vs = p.entries[0][0].variables
    out = []
    for i in range(rows):
        out.append([])
        for j in range(cols):
            acc = MPoly.zero(vs)
            for k in range(mid):
                if s.entries[k][j]:
                    acc = acc + p.entries[i][k] * s.entries[k][j]
            out[-1].append(acc)
    return Mat(out)


def equivariant_hom_basis(group, rho, rho_prime, variables):
    """Basis of Hom_G(V* (x) rho, rho') as matrices of linear forms.

    Unknowns are the coefficients c[i][j][v] of H[i][j] = sum_v c[i][j][v] x_v;
    the equivariance residues for every generator give the linear system.
    """
    n = group.n
    dp, d = rho_prime.dim, rho.dim
    nunk = dp * d * n
    rows = []
    for gi in range(len(group.generators)):
        g = group.generators[gi]
        rp = rho_prime.gen_images[gi]
        r = rho.gen_images[gi]
        # residue entry (i,j), coefficient of x_v:
        #   sum_k rp[i][k] c[k][j][v]  -  sum_{j',u} c[i][j'][u] g[u][v] r[j'][j]
        for i in range(dp):
            for j in range(d):
                for v in range(n):
                    row = [ZERO] * nunk
                    for k in range(dp):
                        if rp.entries[i][k]:
                            row[(k * d + j) * n + v] = row[(k * d + j) * n + v] + rp.entries[i][k]
                    for jp in range(d):
                        for u in range(n):
                            coef = g.entries[u][v] * r.entries[jp][j]
                            if coef:
                                idx = (i * d + jp) * n + u
                                row[idx] = row[idx] - coef
                    rows.append(row)
    basis = kernel_basis(Mat(rows)) if rows else []
    out = []
    for vec in basis:
        entries = []
        for i in range(dp):
            entries.append([])
            for j in range(d):
                terms = {}
                for v in range(n):
                    c = vec[(i * d + j) * n + v]
                    if c:
                        exp = [0] * len(variables)
                        exp[v] = 1
                        terms[tuple(exp)] = c
                entries[-1].append(MPoly(variables, terms))
        out.append(Mat(entries))
    return out


def build_quiver(group, irreps, variables, pinned_bases=None):
    """Assemble the quiver; use pinned generic matrices where provided.

    pinned_bases maps (tail, head) -> list of Mat-of-MPoly.  Pinned matrices
    are verified: equivariance residues must vanish and they must span the
    computed hom space.
    """
    counts = arrow_counts(group, irreps)
    by_label = {r.label: r for r in irreps}
    arrows = []
    for a in irreps:
        for b in irreps:
            k = counts[(a.label, b.label)]
            if k == 0:
                continue
            pinned = None
            if pinned_bases:
                pinned = pinned_bases.get((a.label, b.label))
            if pinned is not None:
                mats = pinned
                if len(mats) != k:
                    raise GroupError("pinned basis %s->%s has wrong size"
                                     % (a.label, b.label))
                for m in mats:
                    for res in equivariance_residues(group, by_label[a.label],
                                                     by_label[b.label], m,
                                                     variables):
                        if not _mat_is_zero(res):
                            raise GroupError(
                                "pinned matrix %s->%s is not equivariant"
                                % (a.label, b.label))
            else:
                mats = equivariant_hom_basis(group, by_label[a.label],
                                             by_label[b.label], variables)
                if len(mats) != k:
                    raise GroupError("hom basis %s->%s: expected %d, got %d"
                                     % (a.label, b.label, k, len(mats)))
            for i, m in enumerate(mats):
                arrows.append(Arrow(a.label, b.label, i, m))
    return McKayQuiver(group, irreps, variables, arrows)


def _mat_is_zero(m):
    return all(not e for row in m.entries for e in row)


def _linear_coefficient(poly, v, nvars):
    exp = tuple(1 if i == v else 0 for i in range(nvars))
    return poly.terms.get(exp, ZERO)


def coordinate_action(quiver):
    """The action of each coordinate x_c on the total module R.

    R = (+)_rho  C^{dim rho} (x) rho, dim |G|.  For every vertex rho the
    fixed splitting V* (x) rho = (+)_a rho'_a is recovered by inverting the
    block matrix of the arrow embeddings; the inverse supplies the projection
    coefficients, and the generic matrices supply the multiplicity maps.
    Returns a list of |G| x |G| matrices of linear forms, one per coordinate.
    """
    n = quiver.group.n
    vs = quiver.variables
    dims = {r.label: r.dim for r in quiver.irreps}
    # global basis offsets: (rho, mult index m, rep index j)
    offset = {}
    pos = 0
    for r in quiver.irreps:
        offset[r.label] = pos
        pos += r.dim * r.dim
    total = pos

    def idx(label, m, j):
        return offset[label] + m * dims[label] + j

    entries = [[[MPoly.zero(vs) for _ in range(total)] for _ in range(total)]
               for _ in range(n)]
    for r in quiver.irreps:
        d = dims[r.label]
        outs = quiver.out[r.label]
        width = sum(dims[a.head] for a in outs)
        if width != n * d:
            raise GroupError("arrow dimensions out of %s do not sum to n*dim"
                             % r.label)
        # embedding block matrix E: rows (c,j), columns (arrow a, i)
        cols = []
        for a in outs:
            for i in range(dims[a.head]):
                col = []
                for c in range(n):
                    for j in range(d):
                        col.append(_linear_coefficient(a.matrix.entries[i][j],
                                                       c, n))
                cols.append(col)
        e_mat = Mat([[cols[cc][rr] for cc in range(n * d)]
                     for rr in range(n * d)])
        p_mat = e_mat.inverse()   # rows (arrow a, i), columns (c, j)
        row_base = {}
        acc = 0
        for a in outs:
            row_base[a.name] = acc
            acc += dims[a.head]
        for a in outs:
            dh = dims[a.head]
            for c in range(n):
                for j in range(d):
                    for i in range(dh):
                        coef = p_mat.entries[row_base[a.name] + i][c * d + j]
                        if not coef:
                            continue
                        # x_c . (u_m (x) e_j) gains  coef * (B_a u_m) (x) e'_i
                        for mp in range(dh):
                            for m in range(d):
                                h = a.matrix.entries[mp][m]
                                if h:
                                    entries[c][idx(a.head, mp, i)][idx(r.label, m, j)] = (
                                        entries[c][idx(a.head, mp, i)][idx(r.label, m, j)]
                                        + h * coef)
    return [Mat(rowset) for rowset in entries]


def commutator_relations(quiver):
    """Residue matrices [X_c, X_d] for every coordinate pair c < d.

    An empty residue list (all matrices zero) certifies that the generic
    matrices define a family of modules over C[V].
    """
    xs = coordinate_action(quiver)
    residues = {}
    n = len(xs)
    for c in range(n):
        for d in range(c + 1, n):
            comm = _poly_mat_mul(xs[c], xs[d]) - _poly_mat_mul(xs[d], xs[c])
            if not _mat_is_zero(comm):
                residues[(c, d)] = comm
    return residues


def _poly_mat_mul(a, b):
    vs = a.entries[0][0].variables
    out = []
    for i in range(a.rows):
        out.append([])
        for j in range(b.cols):
            acc = MPoly.zero(vs)
            for k in range(a.cols):
                l, r = a.entries[i][k], b.entries[k][j]
                if l and r:
                    acc = acc + l * r
            out[-1].append(acc)
    return Mat(out)


def family_matrices_at_point(quiver, point):
    """Evaluate every generic matrix at a point of V (CycNum coordinates)."""
    out = {}
    for a in quiver.arrows:
        out[a.name] = Mat([[e.evaluate(point) for e in row]
                           for row in a.matrix.entries])
    return out


def path_matrix(quiver, path):
    """Product of generic matrices along a path written left to right.

    `path` is a list of arrow (tail, head, index) triples or Arrow objects,
    composed as matrices: path_matrix([f, g]) = M_f . M_g.
    """
    mats = []
    for step in path:
        a = step if isinstance(step, Arrow) else quiver.arrow(*step)
        mats.append(a.matrix)
    result = mats[0]
    for m in mats[1:]:
        result = _poly_mat_mul(result, m)
    return result
