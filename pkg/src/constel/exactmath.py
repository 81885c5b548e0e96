"""Exact arithmetic foundation: rationals, cyclotomic numbers, dense matrices
and multivariate polynomials over cyclotomic fields.

Every value is immutable after construction and every operation is exact --
no floating point anywhere.  Cyclotomic numbers are stored reduced modulo the
cyclotomic polynomial, so Q(zeta_N) is represented as a Q-vector space of
dimension phi(N).  Mixed-conductor arithmetic lifts both operands to the lcm
of their conductors.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _phi(n):
    count = 0
    for k in range(1, n + 1):
        if gcd(k, n) == 1:
            count += 1
    return count


def _poly_divmod_exact(num, den):
    """Quotient of integer polynomials (coefficient lists, low degree first),
    assuming the division is exact.  Used only to build cyclotomic polynomials."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q[i] = c // den[-1]
        for j, d in enumerate(den):
            num[i + j] -= q[i] * d
    assert all(c == 0 for c in num)
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial, low degree first (monic)."""
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_poly(d)
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    return tuple(_poly_divmod_exact(num, den))


def _reduce_mod_cyclotomic(coeffs, n):
    """Reduce a coefficient list (powers of zeta_n) modulo Phi_n in place."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    coeffs = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = Fraction(0)
            for j in range(deg):
                coeffs[i - deg + j] -= c * phi[j]
    return tuple(coeffs[:deg])


class CycNum:
    """An element of the cyclotomic field Q(zeta_N), reduced mod Phi_N."""

    __slots__ = ("conductor", "coeffs", "_canon")

    def __init__(self, conductor, coeffs):
        self.conductor = conductor
        coeffs = [Fraction(c) for c in coeffs]
        self.coeffs = _reduce_mod_cyclotomic(coeffs, conductor)
        self._canon = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(q):
        return CycNum(1, [Fraction(q)])

    @staticmethod
    def zeta(n, k=1):
        k %= n
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return CycNum(n, coeffs)

    # -- conductor management ---------------------------------------------

    def lift(self, m):
        """Rewrite over conductor m (m must be a multiple of the conductor)."""
        if m == self.conductor:
            return self
        assert m % self.conductor == 0
        step = m // self.conductor
        out = [Fraction(0)] * (len(self.coeffs) * step)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] = c
        return CycNum(m, out)

    def minimized(self):
        """Canonical representative over the smallest possible conductor."""
        if self._canon is not None:
            return self._canon
        n = self.conductor
        if n == 1:
            self._canon = self
            return self
        best = self
        for d in sorted(k for k in range(1, n) if n % k == 0):
            sub = _subfield_coords(n, d, self.coeffs)
            if sub is not None:
                best = CycNum(d, sub)
                break
        best._canon = best
        self._canon = best
        return best

    # -- ring structure ----------------------------------------------------

    def _pair(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(other)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    @staticmethod
    def _coercible(other):
        return isinstance(other, (CycNum, int, Fraction))

    def __add__(self, other):
        if not CycNum._coercible(other):
            return NotImplemented
        a, b = self._pair(other)
        return CycNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not CycNum._coercible(other):
            return NotImplemented
        return self + (-other if isinstance(other, CycNum) else CycNum.rational(-Fraction(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not CycNum._coercible(other):
            return NotImplemented
        a, b = self._pair(other)
        n = a.conductor
        out = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycNum(n, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_poly(n)]
        a = list(self.coeffs)
        # extended gcd of a and Phi_n over Q[x]
        r0, r1 = phi, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _deg(r1) > 0:
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        lead = r1[0]
        inv = [c / lead for c in s1]
        return CycNum(n, inv)

    def __truediv__(self, other):
        if not isinstance(other, CycNum):
            other = CycNum.rational(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __rtruediv__(self, other):
        return CycNum.rational(other) * self.inverse()

    def conjugate(self):
        """Complex conjugation zeta -> zeta^{-1}."""
        return self.galois(self.conductor - 1) if self.conductor > 1 else self

    def galois(self, t):
        """Galois automorphism zeta_n -> zeta_n^t (t coprime to n)."""
        n = self.conductor
        assert gcd(t, n) == 1
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            if c:
                out[(i * t) % n] += c
        return CycNum(n, out)

    # -- predicates & conversions -------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        m = self.minimized()
        return hash((m.conductor, m.coeffs))

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self):
        m = self.minimized()
        if m.conductor != 1:
            raise ValueError("not a rational number: %r" % (self,))
        return m.coeffs[0]

    def __complex__(self):
        from cmath import exp, pi
        z = exp(2j * pi / self.conductor)
        return sum(complex(c) * z ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        m = self.minimized()
        if m.conductor == 1:
            return str(m.coeffs[0])
        terms = []
        for i, c in enumerate(m.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                    power = "z%d" % m.conductor + ("^%d" % i if i > 1 else "")
                    terms.append(head + power)
        return " + ".join(terms) if terms else "0"

    # -- JSON wire format ----------------------------------------------------

    def to_json(self):
        m = self.minimized()
        return {"conductor": m.conductor, "coeffs": [str(c) for c in m.coeffs]}

    @staticmethod
    def from_json(obj):
        if isinstance(obj, (int, str)):
            return CycNum.rational(Fraction(obj))
        return CycNum(obj["conductor"], [Fraction(c) for c in obj["coeffs"]])


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _deg(p):
    return len(_trim(p)) - 1


def _poly_divmod_q(a, b):
    a, b = _trim(a), _trim(b)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = list(a)
    while _deg(r) >= _deg(b) and any(r):
        shift = _deg(r) - _deg(b)
        c = _trim(r)[-1] / b[-1]
        q[shift] += c
        for j, bc in enumerate(b):
            r[shift + j] -= c * bc
        r = _trim(r) + [Fraction(0)] * 0
    return _trim(q), _trim(r)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


@lru_cache(maxsize=None)
def _subfield_basis(n, d):
    """Coordinate vectors (over the zeta_n power basis) of zeta_d^j, j < phi(d)."""
    step = n // d
    basis = []
    for j in range(_phi(d)):
        coeffs = [Fraction(0)] * (j * step + 1)
        coeffs[j * step] = Fraction(1)
        basis.append(_reduce_mod_cyclotomic(coeffs, n))
    return basis


def _subfield_coords(n, d, coeffs):
    """Coordinates of an element of Q(zeta_n) over Q(zeta_d) if it lies there."""
    basis = _subfield_basis(n, d)
    rows = _phi(n)
    aug = [[basis[j][i] for j in range(len(basis))] + [coeffs[i]] for i in range(rows)]
    sol = _solve_rational(aug, len(basis))
    return sol


def _solve_rational(aug, ncols):
    """Solve an augmented rational system; returns one solution or None."""
    rows = len(aug)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return tuple(sol)


def as_cyc(value):
    if isinstance(value, CycNum):
        return value
    return CycNum.rational(Fraction(value))


class Mat:
    """Dense rectangular matrix over CycNum (or any exact ring element)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        assert all(len(row) == self.cols for row in self.entries), "ragged matrix"

    @staticmethod
    def identity(n, one=None):
        one = ONE if one is None else one
        zero = one - one
        return Mat([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(row[j] for row in self.entries)

    def __mul__(self, other):
        if isinstance(other, Mat):
            assert self.cols == other.rows, "dimension mismatch"
            return Mat([[_dot(self.entries[i], other.col(j))
                         for j in range(other.cols)] for i in range(self.rows)])
        return Mat([[e * other for e in row] for row in self.entries])

    def __rmul__(self, scalar):
        return Mat([[scalar * e for e in row] for row in self.entries])

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Mat([[a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Mat([[a - b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Mat([[-e for e in row] for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, Mat) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def transpose(self):
        return Mat([self.col(j) for j in range(self.cols)])

    def is_zero(self):
        return all(not e for row in self.entries for e in row)

    def trace(self):
        assert self.rows == self.cols
        t = self.entries[0][0]
        for i in range(1, self.rows):
            t = t + self.entries[i][i]
        return t

    def conjugate(self):
        return Mat([[e.conjugate() for e in row] for row in self.entries])

    def inverse(self):
        """Inverse over a field (entries must support division)."""
        assert self.rows == self.cols
        n = self.rows
        work = [list(row) + list(Mat.identity(n).entries[i])
                for i, row in enumerate(self.entries)]
        for c in range(n):
            pivot = next((i for i in range(c, n) if work[i][c]), None)
            if pivot is None:
                raise ZeroDivisionError("singular matrix")
            work[c], work[pivot] = work[pivot], work[c]
            inv = work[c][c].inverse()
            work[c] = [v * inv for v in work[c]]
            for i in range(n):
                if i != c and work[i][c]:
                    f = work[i][c]
                    work[i] = [v - f * w for v, w in zip(work[i], work[c])]
        return Mat([row[n:] for row in work])

    def __repr__(self):
        return "Mat(%r)" % (self.entries,)

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    @staticmethod
    def from_json(obj):
        return Mat([[CycNum.from_json(e) for e in row] for row in obj])


def _dot(xs, ys):
    acc = None
    for x, y in zip(xs, ys):
        term = x * y
        acc = term if acc is None else acc + term
    return acc


def kernel_basis(m):
    """Basis of the right kernel of a CycNum matrix, echelon-normalized.

    Returned vectors are tuples of CycNum; an empty list means trivial kernel.
    """
    rows = [list(r) for r in m.entries]
    ncols = m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(tuple(vec))
    return basis


def solve_linear(m, rhs=None):
    """Exact kernel (rhs None/zero) of a CycNum matrix; see kernel_basis."""
    if rhs is not None and any(e for row in rhs.entries for e in row):
        raise NotImplementedError("only homogeneous systems are needed here")
    return kernel_basis(m)


class MPoly:
    """Multivariate polynomial over CycNum in a fixed tuple of variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms):
        self.variables = tuple(variables)
        clean = {}
        for exp, coeff in terms.items():
            coeff = as_cyc(coeff)
            if coeff:
                clean[tuple(exp)] = coeff
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(variables):
        return MPoly(variables, {})

    @staticmethod
    def constant(variables, c):
        return MPoly(variables, {(0,) * len(variables): as_cyc(c)})

    @staticmethod
    def variable(variables, name, coeff=1):
        exp = [0] * len(variables)
        exp[tuple(variables).index(name)] = 1
        return MPoly(variables, {tuple(exp): as_cyc(coeff)})

    @staticmethod
    def monomial(variables, exp, coeff=1):
        return MPoly(variables, {tuple(exp): as_cyc(coeff)})

    # -- ring structure --------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.variables, other)
        assert other.variables == self.variables, "variable mismatch"
        return other

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, ZERO) + c
        return MPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c0 = as_cyc(other)
            return MPoly(self.variables, {e: c * c0 for e, c in self.terms.items()})
        other = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                terms[exp] = terms.get(exp, ZERO) + prod
        return MPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            other = MPoly.constant(self.variables, other)
        return isinstance(other, MPoly) and self.variables == other.variables \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- structure ---------------------------------------------------------------

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def monomials(self):
        return sorted(self.terms, reverse=True)

    def leading(self):
        """(exponent, coefficient) of the lexicographically largest monomial."""
        exp = max(self.terms)
        return exp, self.terms[exp]

    def substitute(self, images):
        """Substitute each variable by the given MPoly (list indexed like variables)."""
        out = MPoly.zero(images[0].variables)
        for exp, c in self.terms.items():
            term = MPoly.constant(images[0].variables, c)
            for v, e in enumerate(exp):
                if e:
                    term = term * images[v] ** e
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a tuple of CycNum values."""
        return mpoly_eval(self, point)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join("%s^%d" % (v, e) if e > 1 else v
                            for v, e in zip(self.variables, exp) if e)
            s = repr(c)
            if " + " in s or s.startswith("-") and mono:
                s = "(%s)" % s
            bits.append(s + ("*" + mono if mono else ""))
        return " + ".join(bits)

    def exact_divide(self, divisor):
        """Exact multivariate division; raises if the division is not exact."""
        divisor = self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot = MPoly.zero(self.variables)
        dexp, dc = divisor.leading()
        dc_inv = dc.inverse()
        while rem:
            rexp, rc = rem.leading()
            qexp = tuple(a - b for a, b in zip(rexp, dexp))
            if any(e < 0 for e in qexp):
                raise ArithmeticError("inexact polynomial division")
            qterm = MPoly.monomial(self.variables, qexp, rc * dc_inv)
            quot = quot + qterm
            rem = rem - qterm * divisor
        return quot

    def to_json(self):
        return [{"exp": list(e), "coeff": c.to_json()}
                for e, c in sorted(self.terms.items(), reverse=True)]

    @staticmethod
    def from_json(variables, obj):
        return MPoly(variables, {tuple(t["exp"]): CycNum.from_json(t["coeff"])
                                 for t in obj})


def mpoly_eval(poly, point):
    """Evaluate an MPoly at a tuple of CycNum coordinates."""
    acc = ZERO
    for exp, c in poly.terms.items():
        val = c
        for v, e in enumerate(exp):
            for _ in range(e):
                val = val * as_cyc(point[v])
        acc = acc + val
    return acc


def poly_det(m):
    """Exact determinant of a square Mat with MPoly (or CycNum) entries.

    Cofactor expansion below size 4, fraction-free Bareiss elimination above;
    the result is independent of pivot order.
    """
    assert m.rows == m.cols, "determinant of non-square matrix"
    n = m.rows
    if n == 0:
        raise ValueError("empty matrix")
    if n < 4:
        return _det_cofactor(m.entries)
    work = [list(row) for row in m.entries]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not work[k][k]:
            pivot = next((i for i in range(k + 1, n) if work[i][k]), None)
            if pivot is None:
                return _zero_like(work[0][0])
            work[k], work[pivot] = work[pivot], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = num if prev is None else _exact_div(num, prev)
            work[i][k] = _zero_like(work[i][k])
        prev = work[k][k]
    det = work[n - 1][n - 1]
    return det if sign == 1 else -det


def _zero_like(x):
    return x - x


def _exact_div(num, den):
    if isinstance(num, MPoly):
        if not num:
            return num
        if isinstance(den, MPoly):
            return num.exact_divide(den)
        return num * as_cyc(den).inverse()
    return num / den


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = None
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    if acc is None:
        return _zero_like(rows[0][0])
    return acc
