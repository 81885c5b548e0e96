"""Determinantal semi-invariants of the McKay quiver.

A path-matrix spec is a block grid of paths; evaluating every path on the
generic matrices and taking the determinant yields a semi-invariant of the
representation space.  Its weight is a stability-space vector, its value on
the tautological family is a polynomial on V, and together they feed the
Cox-ring homomorphisms phi, phi_C and psi_C.
"""

from fractions import Fraction

from .exactmath import CycNum, MPoly, ONE, as_cyc, poly_det, _det_cofactor
from .mckay import Arrow, _poly_mat_mul, _substituted


class SemiInvError(ValueError):
    pass


class FactorError(SemiInvError):
    """Polynomial is not a scalar times a monomial in the generators."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class StabilityVector:
    """A vector (theta_rho) over Irr(G), with a printing convention.

    The full vector is stored; `reduced` drops the coordinate at `drop`
    (printed conventions eliminate theta_0 via sum dim_rho theta_rho = 0).
    """

    def __init__(self, labels, dims, values, drop=0):
        self.labels = tuple(labels)
        self.dims = tuple(dims)
        self.values = tuple(Fraction(v) for v in values)
        if not (len(self.labels) == len(self.dims) == len(self.values)):
            raise SemiInvError("label/dim/value length mismatch")
        self.drop = drop

    @classmethod
    def from_reduced(cls, labels, dims, reduced, drop=0):
        """Recover the dropped coordinate from sum dim_rho theta_rho = 0."""
        labels, dims = tuple(labels), tuple(dims)
        if len(reduced) != len(labels) - 1:
            raise SemiInvError("reduced vector has wrong length")
        it = iter(Fraction(v) for v in reduced)
        values = [None if i == drop else next(it) for i in range(len(labels))]
        rest = sum(d * v for i, (d, v) in enumerate(zip(dims, values))
                   if i != drop)
        values[drop] = Fraction(-rest, dims[drop])
        return cls(labels, dims, values, drop=drop)

    def reduced(self):
        return tuple(v for i, v in enumerate(self.values) if i != self.drop)

    def is_character(self):
        """Whether the vector lies in Theta-bar: sum dim_rho theta_rho = 0."""
        return sum(d * v for d, v in zip(self.dims, self.values)) == 0

    def __getitem__(self, label):
        return self.values[self.labels.index(label)]

    def __eq__(self, other):
        return (isinstance(other, StabilityVector)
                and self.labels == other.labels and self.values == other.values)

    def __hash__(self):
        return hash((self.labels, self.values))

    def __repr__(self):
        return "StabilityVector(%r)" % (self.values,)

    def to_json(self):
        return {"labels": list(self.labels), "dims": list(self.dims),
                "values": [str(v) for v in self.values], "drop": self.drop}

    @staticmethod
    def from_json(obj):
        return StabilityVector(obj["labels"], obj["dims"],
                               [Fraction(v) for v in obj["values"]],
                               obj.get("drop", 0))


def _parse_path(text):
    names = [p.strip() for p in text.split("*")]
    if not all(names):
        raise SemiInvError("malformed path %r" % text)
    return tuple(names)


class PathMatrixSpec:
    """A named block grid of coefficient-weighted quiver paths.

    Each cell is None (a zero block) or a pair (coefficient, path), the path
    a tuple of arrow display names composed left to right as matrices.
    """

    def __init__(self, name, cells):
        self.name = name
        self.cells = [list(row) for row in cells]
        if not self.cells or not all(len(r) == len(self.cells[0])
                                     for r in self.cells):
            raise SemiInvError("spec %r: ragged or empty block grid" % name)

    @classmethod
    def from_json(cls, obj):
        cells = []
        for row in obj["blocks"]:
            out = []
            for cell in row:
                if cell == "0" or cell == 0 or cell is None:
                    out.append(None)
                elif isinstance(cell, str):
                    out.append((ONE, _parse_path(cell)))
                else:
                    out.append((CycNum.from_json(cell["coeff"]),
                                _parse_path(cell["path"])))
            cells.append(out)
        return cls(obj["name"], cells)

    def to_json(self):
        rows = []
        for row in self.cells:
            out = []
            for cell in row:
                if cell is None:
                    out.append("0")
                elif cell[0] == 1:
                    out.append("*".join(cell[1]))
                else:
                    out.append({"coeff": cell[0].to_json(),
                                "path": "*".join(cell[1])})
            rows.append(out)
        return {"name": self.name, "blocks": rows}

    def __repr__(self):
        return "PathMatrixSpec(%r)" % self.name


class SemiInvariant:
    """A determinantal semi-invariant: spec, weight and phi-image.

    `exponents`/`scalar` are filled in by factoring phi_image over the
    dataset's generators of C[V]^[G,G].
    """

    def __init__(self, spec, weight, phi_image, exponents=None, scalar=None):
        self.spec = spec
        self.weight = weight
        self.phi_image = phi_image
        self.exponents = None if exponents is None else tuple(exponents)
        self.scalar = scalar

    @property
    def degenerate(self):
        return not self.phi_image

    def lattice_vector(self):
        """The M_W vector (a_1..a_ell, reduced weight), as integers."""
        if self.exponents is None:
            raise SemiInvError("semi-invariant %r is not factored"
                               % getattr(self.spec, "name", self.spec))
        vec = tuple(self.exponents) + self.weight.reduced()
        out = []
        for v in vec:
            f = Fraction(v)
            if f.denominator != 1:
                raise SemiInvError("non-integral lattice vector entry %s" % f)
            out.append(int(f))
        return tuple(out)

    def __repr__(self):
        return "SemiInvariant(%r)" % getattr(self.spec, "name", self.spec)


def _resolve_arrow(rep, name):
    names = getattr(rep, "arrow_names", None)
    if names and name in names:
        return names[name]
    if "->" in name:
        tail, rest = name.split("->")
        head, _, idx = rest.partition("#")
        return rep.arrow(tail, head, int(idx or 0))
    raise SemiInvError("unknown arrow name %r" % name)


def _path_data(rep, coeff, path):
    """(matrix, source label, target label) of a coefficient-weighted path."""
    arrows = [_resolve_arrow(rep, n) for n in path]
    for left, right in zip(arrows, arrows[1:]):
        if left.tail != right.head:
            raise SemiInvError("path %s: %s does not compose with %s"
                               % ("*".join(path), left.name, right.name))
    mat = arrows[0].matrix
    for a in arrows[1:]:
        mat = _poly_mat_mul(mat, a.matrix)
    if coeff != 1:
        mat = mat * coeff
    return mat, arrows[-1].tail, arrows[0].head


def det_semiinvariant(spec, rep):
    """Evaluate a path-matrix spec on the generic matrices and take det.

    The weight is +1 per block row target and -1 per block column source
    (no dim factors); the phi-image is the determinant of the assembled
    block matrix of path products.
    """
    nrows = len(spec.cells)
    ncols = len(spec.cells[0])
    mats = [[None] * ncols for _ in range(nrows)]
    sources = [None] * ncols
    targets = [None] * nrows
    for i, row in enumerate(spec.cells):
        for j, cell in enumerate(row):
            if cell is None:
                continue
            mat, src, tgt = _path_data(rep, cell[0], cell[1])
            mats[i][j] = mat
            for store, idx, label, kind in ((sources, j, src, "source"),
                                            (targets, i, tgt, "target")):
                if store[idx] is None:
                    store[idx] = label
                elif store[idx] != label:
                    raise SemiInvError(
                        "spec %r: inconsistent %s in block %s %d"
                        % (spec.name, kind, kind, idx))
    if None in sources or None in targets:
        raise SemiInvError("spec %r has an all-zero block row or column"
                           % spec.name)
    dims = {r.label: r.dim for r in rep.irreps}
    if sum(dims[s] for s in sources) != sum(dims[t] for t in targets):
        raise SemiInvError("spec %r: total block matrix is not square"
                           % spec.name)
    vs = rep.variables
    entries = []
    for i, tgt in enumerate(targets):
        for ii in range(dims[tgt]):
            line = []
            for j, src in enumerate(sources):
                block = mats[i][j]
                for jj in range(dims[src]):
                    line.append(MPoly.zero(vs) if block is None
                                else block.entries[ii][jj])
            entries.append(line)
    from .exactmath import Mat
    det = poly_det(Mat(entries))
    counts = {}
    for t in targets:
        counts[t] = counts.get(t, 0) + 1
    for s in sources:
        counts[s] = counts.get(s, 0) - 1
    labels = [r.label for r in rep.irreps]
    weight = StabilityVector(labels, [dims[l] for l in labels],
                             [counts.get(l, 0) for l in labels])
    return SemiInvariant(spec, weight, det)


def phi(s, rep):
    """phi-image together with the Ab(G)-character by which G acts on it.

    The character is det(+)_rho rho^{c_rho} evaluated on the generators;
    homogeneity of the image under every generator is verified symbolically.
    """
    group = rep.group
    by_label = {r.label: r for r in rep.irreps}
    chars = []
    for gi in range(len(group.generators)):
        chi = ONE
        for label, c in zip(s.weight.labels, s.weight.values):
            cf = Fraction(c)
            if cf.denominator != 1:
                raise SemiInvError("non-integral weight entry")
            d = _det_cofactor(by_label[label].gen_images[gi].entries)
            chi = chi * d ** int(cf)
        chars.append(chi)
    if not s.degenerate:
        from .exactmath import Mat
        wrapped = Mat([[s.phi_image]])
        for gi, chi in enumerate(chars):
            moved = _substituted(group, wrapped, gi, rep.variables)
            if moved.entries[0][0] != s.phi_image * chi:
                raise SemiInvError(
                    "phi-image of %r is not homogeneous of the computed "
                    "character (generator %d)"
                    % (getattr(s.spec, "name", s.spec), gi))
    return s.phi_image, tuple(chars)


def _exact_divide(f, g):
    """Quotient f/g if the division is exact, else None."""
    if not g:
        raise SemiInvError("division by the zero polynomial")
    vs = f.variables
    rem = dict(f.terms)
    glead = max(g.terms)
    gcoef = g.terms[glead]
    quot = {}
    while rem:
        lead = max(rem)
        exp = tuple(a - b for a, b in zip(lead, glead))
        if any(e < 0 for e in exp):
            return None
        coef = rem[lead] * gcoef.inverse()
        quot[exp] = coef
        for ge, gc in g.terms.items():
            key = tuple(a + b for a, b in zip(exp, ge))
            val = rem.get(key, None)
            val = (val - coef * gc) if val is not None else -(coef * gc)
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
    return MPoly(vs, quot)


def factor_over_generators(f, gens):
    """Greedy factorization f = scalar * prod gens[i]^{a_i}, in list order.

    Returns (exponents, scalar); raises FactorError carrying the residual
    when f is not a scalar times a monomial in the generators.
    """
    if not f:
        raise FactorError("cannot factor the zero polynomial", f)
    exps = []
    rest = f
    for g in gens:
        a = 0
        while True:
            q = _exact_divide(rest, g)
            if q is None:
                break
            rest = q
            a += 1
        exps.append(a)
    if len(rest.terms) != 1 or any(e != 0 for e in next(iter(rest.terms))):
        raise FactorError("residual is not a constant", rest)
    scalar = next(iter(rest.terms.values()))
    return tuple(exps), scalar


def factor_semiinvariant(s, gens):
    """Fill in exponents/scalar of a semi-invariant in place; returns s."""
    exps, scalar = factor_over_generators(s.phi_image, gens)
    s.exponents = exps
    s.scalar = scalar
    return s


class CoxTerm:
    """An element f * prod_k t_k^{e_k} of the Cox-ring ambient ring."""

    def __init__(self, base, t_exponents):
        self.base = base
        self.t_exponents = tuple(int(e) for e in t_exponents)

    def __mul__(self, other):
        if len(self.t_exponents) != len(other.t_exponents):
            raise SemiInvError("CoxTerm t-length mismatch")
        return CoxTerm(self.base * other.base,
                       tuple(a + b for a, b in zip(self.t_exponents,
                                                   other.t_exponents)))

    def __eq__(self, other):
        return (isinstance(other, CoxTerm) and self.base == other.base
                and self.t_exponents == other.t_exponents)

    def __hash__(self):
        return hash((tuple(sorted(self.base.terms)), self.t_exponents))

    def to_json(self):
        return {"base": self.base.to_json(), "t": list(self.t_exponents)}

    def __repr__(self):
        ts = " ".join("t%d^%d" % (k + 1, e) if e != 1 else "t%d" % (k + 1)
                      for k, e in enumerate(self.t_exponents) if e)
        return "CoxTerm(%r %s)" % (self.base, ts)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def phi_C(s, rays, orders, valuations=None):
    """Cox-ring image of a factored semi-invariant for fixed chamber rays.

    rays are the selected primitive generators w_k of the orbit-cone data,
    given as lattice vectors (p-part | q-part); the t_k-exponent is
    sum_i a_i nu_k(f_i) - <(a, theta), w_k>.  By default nu_k(f_i) is read
    off the p-part of w_k (the bundled embeddings are built so that the
    p-coordinates are exactly the junior valuations of the generators).
    """
    if s.exponents is None:
        raise SemiInvError("phi_C needs a factored semi-invariant")
    a = s.exponents
    ell = len(a)
    avec = tuple(a) + s.weight.reduced()
    exps = []
    for k, w in enumerate(rays):
        if len(w) != len(avec):
            raise SemiInvError("ray length does not match lattice vector")
        nu = valuations[k] if valuations is not None else w[:ell]
        exps.append(_dot(a, nu) - _dot(avec, w))
    return CoxTerm(s.phi_image, exps)


def psi_C(theta, rays, orders, ell=None):
    """The Pic-degree vector (-theta . q(w_k))_k of a stability vector."""
    red = theta.reduced() if isinstance(theta, StabilityVector) else tuple(theta)
    if ell is None:
        ell = len(rays[0]) - len(red)
    out = []
    for w in rays:
        if len(w) - ell != len(red):
            raise SemiInvError("ray q-part length mismatch")
        out.append(-_dot(red, w[ell:]))
    return tuple(out)
