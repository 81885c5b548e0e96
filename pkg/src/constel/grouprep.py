"""Finite matrix groups with supplied irreducible representations.

Element enumeration, conjugacy classes, character verification, ages of
conjugacy classes, junior classes and the monomial valuations nu_g used by
the Cox-ring bookkeeping.  Irreducible representations are *inputs*
(verified, never computed): the explicit basis choices of the bundled
datasets are load-bearing for everything downstream.
"""

from fractions import Fraction
from math import gcd

from .exactmath import CycNum, Mat, ONE, ZERO, kernel_basis, _det_cofactor


class GroupError(ValueError):
    pass


class MatrixGroup:
    """A finite subgroup of SL_n(C) enumerated from generators."""

    def __init__(self, generators, cap=1024):
        if not generators:
            raise GroupError("need at least one generator")
        self.n = generators[0].rows
        for g in generators:
            if g.rows != g.cols or g.rows != self.n:
                raise GroupError("generators must be square of equal size")
            if _det_cofactor(g.entries) != 1:
                raise GroupError("generator is not unimodular (det != 1)")
        self.generators = list(generators)
        self.elements, self.words = self._enumerate(cap)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.element_orders = [self._element_order(g) for g in self.elements]
        self.conj_classes = self._conjugacy_classes()
        self.class_reps = [cls[0] for cls in self.conj_classes]
        self.class_of = {}
        for ci, cls in enumerate(self.conj_classes):
            for e in cls:
                self.class_of[e] = ci

    def _enumerate(self, cap):
        ident = Mat.identity(self.n)
        elements = [ident]
        words = {ident: ()}
        frontier = [ident]
        while frontier:
            new = []
            for e in frontier:
                for gi, g in enumerate(self.generators):
                    prod = e * g
                    if prod not in words:
                        words[prod] = words[e] + (gi,)
                        elements.append(prod)
                        new.append(prod)
                        if len(elements) > cap:
                            raise GroupError("group order exceeds cap %d" % cap)
            frontier = new
        return elements, words

    def _element_order(self, g):
        ident = Mat.identity(self.n)
        power = g
        k = 1
        while power != ident:
            power = power * g
            k += 1
        return k

    def _conjugacy_classes(self):
        seen = set()
        classes = []
        for e in self.elements:  # enumeration order makes representatives stable
            if e in seen:
                continue
            orbit = {e}
            frontier = [e]
            while frontier:
                cur = frontier.pop()
                for g in self.generators:
                    conj = g * cur * g.inverse()
                    if conj not in orbit:
                        orbit.add(conj)
                        frontier.append(conj)
            cls = [x for x in self.elements if x in orbit]
            classes.append(cls)
            seen |= orbit
        return classes

    def inverse_of(self, g):
        return g.inverse()

    def __len__(self):
        return self.order


def enumerate_group(generators, cap=1024):
    return MatrixGroup(generators, cap=cap)


class Irrep:
    """An irreducible representation given by generator images."""

    def __init__(self, label, gen_images):
        self.label = label
        self.gen_images = list(gen_images)
        self.dim = gen_images[0].rows

    def image(self, group, element):
        word = group.words[element]
        img = Mat.identity(self.dim)
        for gi in word:
            img = img * self.gen_images[gi]
        return img

    def character(self, group):
        return [self.image(group, rep).trace() for rep in group.class_reps]


def verify_irreps(group, irreps):
    """Character table plus validity checks (orthogonality, sum of squares)."""
    if len(irreps) != len(group.conj_classes):
        raise GroupError("need one irrep per conjugacy class (%d classes, %d irreps)"
                         % (len(group.conj_classes), len(irreps)))
    if sum(r.dim ** 2 for r in irreps) != group.order:
        raise GroupError("sum of squared dimensions != |G|")
    # homomorphism property: images multiply like the group on gen * element
    images = [{e: r.image(group, e) for e in group.elements} for r in irreps]
    for r, img in zip(irreps, images):
        for gi, g in enumerate(group.generators):
            for e in group.elements:
                if img[e * g] != img[e] * r.gen_images[gi]:
                    raise GroupError("irrep %s is not a homomorphism" % r.label)
    table = [r.character(group) for r in irreps]
    sizes = [len(cls) for cls in group.conj_classes]
    for i in range(len(irreps)):
        for j in range(i, len(irreps)):
            acc = ZERO
            for k, size in enumerate(sizes):
                acc = acc + size * (table[i][k] * table[j][k].conjugate())
            expected = group.order if i == j else 0
            if acc != expected:
                raise GroupError("character orthogonality fails for %s,%s"
                                 % (irreps[i].label, irreps[j].label))
    return table


def character_inner(group, chi_a, chi_b):
    """<chi_a, chi_b> = (1/|G|) sum over classes of |cls| chi_a conj(chi_b)."""
    acc = ZERO
    for k, cls in enumerate(group.conj_classes):
        acc = acc + len(cls) * (chi_a[k] * chi_b[k].conjugate())
    value = (acc * Fraction(1, group.order))
    return value


class JuniorDatum:
    """Age data of a nontrivial conjugacy class: exponents, order, eigenbasis."""

    def __init__(self, rep, order, exponents, eigenbasis, diagonal):
        self.rep = rep
        self.order = order
        self.exponents = tuple(exponents)
        self.eigenbasis = eigenbasis   # columns are eigenvectors
        self.diagonal = diagonal       # True if rep is diagonal in standard coords
        self.age = Fraction(sum(exponents), order)

    @property
    def junior(self):
        return self.age == 1


def _diagonal_entries(g):
    n = g.rows
    for i in range(n):
        for j in range(n):
            if i != j and g.entries[i][j]:
                return None
    return [g.entries[i][i] for i in range(n)]


def _exponent_of_root(value, r):
    """k with value == zeta_r^k, or None."""
    for k in range(r):
        if value == CycNum.zeta(r, k):
            return k
    return None


def age_and_valuations(group):
    """JuniorDatum for every nontrivial conjugacy class, in class order."""
    data = []
    for ci, rep in enumerate(group.class_reps):
        if rep == Mat.identity(group.n):
            continue
        r = group.element_orders[group.index[rep]]
        diag = _diagonal_entries(rep)
        if diag is not None:
            exps = []
            for d in diag:
                k = _exponent_of_root(d, r)
                if k is None:
                    raise GroupError("diagonal entry is not an r-th root of unity")
                exps.append(k)
            datum = JuniorDatum(rep, r, exps, Mat.identity(group.n), True)
        else:
            lifted = _lift_matrix(rep, r)
            pairs = []   # (exponent, eigenvector)
            for k in range(r):
                shifted = lifted - CycNum.zeta(r, k) * Mat.identity(group.n)
                for vec in kernel_basis(shifted):
                    pairs.append((k, vec))
            if len(pairs) != group.n:
                raise GroupError("element not diagonalizable -- arithmetic bug")
            pairs.sort(key=lambda p: (p[0], _vec_sort_key(p[1])))
            exps = [k for k, _ in pairs]
            basis = Mat([[pairs[j][1][i] for j in range(group.n)]
                         for i in range(group.n)])
            datum = JuniorDatum(rep, r, exps, basis, False)
        if (sum(datum.exponents)) % r != 0:
            raise GroupError("exponent sum not divisible by order (det != 1?)")
        data.append(datum)
    return data


def junior_classes(group):
    return [d for d in age_and_valuations(group) if d.junior]


def _lift_matrix(m, r):
    conductors = {e.conductor for row in m.entries for e in row}
    n = 1
    for c in conductors | {r}:
        n = n * c // gcd(n, c)
    return Mat([[e.lift(n) for e in row] for row in m.entries])


def _vec_sort_key(vec):
    key = []
    for c in vec:
        m = c.minimized()
        key.append((m.conductor,) + tuple((q.numerator, q.denominator) for q in m.coeffs))
    return key


def monomial_valuation(junior, f):
    """nu_g(f): min over monomials (in g's eigencoordinates) of sum a_j e_j."""
    if not f:
        raise ValueError("valuation of the zero polynomial")
    if not junior.diagonal:
        from .exactmath import MPoly
        n = len(junior.exponents)
        vs = f.variables
        images = []
        for j in range(n):
            terms = {}
            for i in range(n):
                c = junior.eigenbasis.entries[j][i]
                if c:
                    exp = [0] * n
                    exp[i] = 1
                    terms[tuple(exp)] = c
            images.append(MPoly(vs, terms))
        f = f.substitute(images)
    return min(sum(a * e for a, e in zip(junior.exponents, exp))
               for exp in f.terms)
