"""Polynomial matrices and exact determinants.

Three determinant routes, all returning identical results:

* cofactor expansion (reference oracle, small sides only);
* fraction-free Bareiss elimination over the polynomial ring (default);
* evaluation/interpolation: evaluate the matrix at rational points,
  take fast integer determinants, and rebuild the polynomial on a
  triangular interpolation grid (used for large sides, e.g. the 10x10
  variable Gram determinants in five chart variables).

The interpolation core works for any vector-valued polynomial map and is
reused to reconstruct Schur complement matrices entrywise.
"""

from fractions import Fraction
from math import lcm

from .linalg import frac
from .poly import MultiPoly

# ---------------------------------------------------------------------
# Numeric determinants (Fraction entries)
# ---------------------------------------------------------------------


def det_fraction_matrix(m):
    """Exact determinant of a Fraction matrix; scales to integers first."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in m:
        for x in row:
            den = lcm(den, x.denominator)
    a = [[int(x * den) for x in row] for row in m]
    from .zlinalg import int_det

    return Fraction(int_det(a), den ** n)


# ---------------------------------------------------------------------
# PolyMatrix
# ---------------------------------------------------------------------


class PolyMatrix:
    __slots__ = ("rows", "cols", "vars", "entries")

    def __init__(self, entries):
        if not entries or not entries[0]:
            raise ValueError("PolyMatrix must be nonempty")
        self.rows = len(entries)
        self.cols = len(entries[0])
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged rows")
        self.vars = entries[0][0].vars
        for r in entries:
            for p in r:
                if p.vars != self.vars:
                    raise ValueError("entries have mixed variable contexts")
        self.entries = [list(r) for r in entries]

    @classmethod
    def from_scalar_matrix(cls, m, variables):
        return cls([[MultiPoly.const(variables, x) for x in row] for row in m])

    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        return self.entries[i][j]

    def evaluate(self, point):
        return [[p.evaluate(point) for p in row] for row in self.entries]

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        z = MultiPoly.zero(self.vars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = z
                for k in range(self.cols):
                    s = s + self.entries[i][k] * other.entries[k][j]
                row.append(s)
            out.append(row)
        return PolyMatrix(out)

    def transpose(self):
        return PolyMatrix([list(c) for c in zip(*self.entries)])

    def scale(self, p: MultiPoly):
        return PolyMatrix([[p * e for e in row] for row in self.entries])

    def degree_bound(self):
        """Sum over rows of the max entry degree: a bound on deg(det)."""
        total = 0
        for row in self.entries:
            d = max((p.degree() for p in row), default=-1)
            if d < 0:
                return -1  # a zero row
            total += d
        return total

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.entries == other.entries
        )


# ---------------------------------------------------------------------
# Determinant strategies
# ---------------------------------------------------------------------

MAX_SIDE = 12


def det_cofactor(m: PolyMatrix) -> MultiPoly:
    """Reference cofactor expansion; exponential, keep sides <= 5."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows

    def rec(rows, cols):
        if len(cols) == 1:
            return m.entries[rows[0]][cols[0]]
        acc = MultiPoly.zero(m.vars)
        r = rows[0]
        rest = rows[1:]
        for k, c in enumerate(cols):
            sub = rec(rest, cols[:k] + cols[k + 1:])
            term = m.entries[r][c] * sub
            acc = acc + term if k % 2 == 0 else acc - term
        return acc

    return rec(tuple(range(n)), tuple(range(n)))


def det_bareiss(m: PolyMatrix) -> MultiPoly:
    """Fraction-free Bareiss elimination over the polynomial ring."""
    from .poly import div_exact

    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [row[:] for row in m.entries]
    one = MultiPoly.const(m.vars, 1)
    prev = one
    sign = 1
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = None
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    piv = i
                    break
            if piv is None:
                return MultiPoly.zero(m.vars)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is one else div_exact(num, prev)
            a[i][k] = MultiPoly.zero(m.vars)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


# ---------------------------------------------------------------------
# Interpolation on the triangular grid
# ---------------------------------------------------------------------


def interpolate_poly_map(oracle, variables, degree, width):
    """Reconstruct a vector of polynomials from point evaluations.

    oracle(point) must return a sequence of `width` Fractions, the values
    of `width` polynomials of total degree <= degree at the point.  The
    number of distinct evaluations is C(degree + nvars, nvars); grid
    nodes are the small nonnegative integers.  Evaluations are memoized,
    so vector components share every oracle call.
    """
    variables = tuple(variables)
    m = len(variables)
    if degree < 0:
        raise ValueError("degree bound must be nonnegative")
    nodes = list(range(degree + 1))  # integer nodes: cheap hashing, exact
    memo = {}

    def ev(pt):
        if pt not in memo:
            val = tuple(frac(x) for x in oracle(pt))
            if len(val) != width:
                raise ValueError("oracle returned wrong width")
            memo[pt] = val
        return memo[pt]

    zero = MultiPoly.zero(variables)

    def interp(sample, nv, d):
        # sample: tuple of length nv -> tuple of `width` Fractions
        if nv == 0:
            vals = sample(())
            return [MultiPoly.const(variables, v) for v in vals]
        xname = variables[nv - 1]
        x = MultiPoly.var(variables, xname)
        result = [zero] * width
        omega = MultiPoly.const(variables, 1)
        for i in range(d + 1):
            # divided-difference weights for nodes[0..i]
            ws = []
            for j in range(i + 1):
                w = Fraction(1)
                for k in range(i + 1):
                    if k != j:
                        w /= (nodes[j] - nodes[k])
                ws.append(w)

            def sub(pre, _i=i, _ws=ws):
                acc = [Fraction(0)] * width
                for j in range(_i + 1):
                    vals = sample(pre + (nodes[j],))
                    for t in range(width):
                        acc[t] += _ws[j] * vals[t]
                return acc

            ci = interp(sub, nv - 1, d - i)
            for t in range(width):
                if not ci[t].is_zero():
                    result[t] = result[t] + ci[t] * omega
            if i < d:
                omega = omega * (x - nodes[i])
        return result

    return interp(ev, m, degree)


def det_interpolate(m: PolyMatrix, degree=None) -> MultiPoly:
    """Determinant by evaluation at grid points plus interpolation."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    if degree is None:
        degree = m.degree_bound()
    if degree < 0:
        return MultiPoly.zero(m.vars)
    if not m.vars or degree == 0:
        point = [Fraction(0)] * len(m.vars)
        return MultiPoly.const(m.vars, det_fraction_matrix(m.evaluate(point)))

    def oracle(pt):
        return (det_fraction_matrix(m.evaluate(list(pt))),)

    return interpolate_poly_map(oracle, m.vars, degree, 1)[0]


def det_poly_matrix(m: PolyMatrix, strategy="auto") -> MultiPoly:
    """Exact determinant; result is identical to cofactor expansion.

    strategy: "auto" | "bareiss" | "interpolate" | "cofactor".  Auto uses
    Bareiss for small instances and switches to interpolation when the
    symbolic elimination would swell (large side with several variables).
    """
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    if m.rows > MAX_SIDE:
        raise ValueError("side %d exceeds the supported bound %d" % (m.rows, MAX_SIDE))
    if strategy == "cofactor":
        return det_cofactor(m)
    if strategy == "bareiss":
        return det_bareiss(m)
    if strategy == "interpolate":
        return det_interpolate(m)
    if strategy != "auto":
        raise ValueError("unknown strategy %r" % (strategy,))
    nv = sum(1 for v in m.vars if any(p.degree_in(v) > 0 for row in m.entries for p in row))
    if m.rows <= 5 or nv <= 1:
        return det_bareiss(m)
    return det_interpolate(m)


def adjugate_poly_matrix(m: PolyMatrix) -> PolyMatrix:
    """Adjugate: m * adj(m) = det(m) * identity, exactly."""
    if not m.is_square():
        raise ValueError("adjugate of a non-square matrix")
    if m.rows > MAX_SIDE:
        raise ValueError("side %d exceeds the supported bound %d" % (m.rows, MAX_SIDE))
    n = m.rows
    if n == 1:
        return PolyMatrix([[MultiPoly.const(m.vars, 1)]])
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows = [r for r in range(n) if r != j]
            cols = [c for c in range(n) if c != i]
            sub = PolyMatrix([[m.entries[r][c] for c in cols] for r in rows])
            d = det_poly_matrix(sub)
            out[i][j] = d if (i + j) % 2 == 0 else -d
    return PolyMatrix(out)


def cofactor_matrix(m: PolyMatrix) -> PolyMatrix:
    """Matrix of cofactors (transpose of the adjugate)."""
    return adjugate_poly_matrix(m).transpose()
