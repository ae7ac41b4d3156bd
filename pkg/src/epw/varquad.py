"""Variable quadratic forms: duals, wedge powers, corank duality and the
graded expansion of det(q_* + q).

A QuadSpace is a quadratic form on Q^d given by its symmetric Gram
matrix.  A PencilFamily is a base form q_* together with a linear family
q(t) = sum t_a B_a; the graded pieces Phi_i of det(q_* + q(t)) are then
homogeneous of degree i in t and the corank/kernel statements about them
are checkable exactly.
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .linalg import fmat, fvec, rank, restrict_gram
from .poly import MultiPoly, homogeneous_part
from .polymat import PolyMatrix, det_poly_matrix


class QuadSpace:
    """A quadratic form on Q^d, d <= 10, by its symmetric Gram matrix.

    Wedge powers live on larger spaces; the cap applies to base spaces.
    """

    __slots__ = ("dim", "gram")

    def __init__(self, gram, _cap=10):
        g = fmat(gram)
        if _cap is not None and len(g) > _cap:
            raise ValueError("dimension bound is %d" % _cap)
        if not linalg.is_symmetric(g):
            raise ValueError("Gram matrix must be symmetric")
        self.dim = len(g)
        self.gram = g

    def corank(self):
        return self.dim - rank(self.gram)

    def kernel(self):
        return linalg.nullspace(self.gram)

    def value(self, v):
        v = fvec(v)
        gv = linalg.mat_vec(self.gram, v)
        return sum(a * b for a, b in zip(v, gv))

    def pairing(self, v, w):
        v, w = fvec(v), fvec(w)
        gw = linalg.mat_vec(self.gram, w)
        return sum(a * b for a, b in zip(v, gw))


def cork_restrict(q: QuadSpace, s_rows) -> int:
    """Corank of the restriction of q to the subspace spanned by s_rows."""
    basis = linalg.row_basis(fmat(s_rows))
    if not basis:
        return 0
    g = restrict_gram(q.gram, basis)
    return len(basis) - rank(g)


class DualForm:
    """The dual form on Ann(ker q), with its chosen covector basis."""

    __slots__ = ("ann_basis", "gram")

    def __init__(self, ann_basis, gram):
        self.ann_basis = ann_basis  # rows: covectors in the standard dual basis
        self.gram = gram

    def corank_on(self, covector_rows):
        """Corank of the dual form restricted to a span of covectors.

        The covectors must lie in Ann(ker q).
        """
        coords = []
        for phi in covector_rows:
            x = linalg.solve(linalg.transpose(self.ann_basis), fvec(phi))
            if x is None:
                raise ValueError("covector is not in Ann(ker q)")
            coords.append(x)
        basis = linalg.row_basis(coords)
        if not basis:
            return 0
        g = restrict_gram(self.gram, basis)
        return len(basis) - rank(g)


def dual_form(q: QuadSpace) -> DualForm:
    """Dual quadratic form: inverse of the map induced on Q^d / ker q.

    Concretely: a basis phi_1..phi_r of Ann(ker q) (the row space of the
    Gram matrix) plus the Gram matrix [phi_j(x_i)] where q~ x_i = phi_i.
    For nondegenerate q this is the inverse Gram matrix in disguise.
    """
    ann = linalg.row_basis(q.gram)
    xs = []
    for phi in ann:
        x = linalg.solve(q.gram, phi)
        assert x is not None  # rows of the Gram span its column space
        xs.append(x)
    gram = [[sum(xs[i][t] * ann[j][t] for t in range(q.dim)) for j in range(len(ann))]
            for i in range(len(ann))]
    assert linalg.is_symmetric(gram)
    return DualForm(ann, gram)


def ann_of_span(rows, dim):
    """Covector basis of the annihilator of a span inside Q^dim."""
    if not rows:
        return linalg.identity(dim)
    return linalg.nullspace(fmat(rows))


def wedge_power_form(q: QuadSpace, i: int) -> QuadSpace:
    """The induced form on Lambda^i: the i-th compound of the Gram matrix.

    On a decomposable v_1 ^ ... ^ v_i the value is the determinant of the
    Gram matrix of q restricted to span(v_1..v_i) in that basis.
    """
    if not 1 <= i <= q.dim:
        raise ValueError("power out of range")
    subsets = list(combinations(range(q.dim), i))
    g = q.gram
    out = []
    for a in subsets:
        row = []
        for b in subsets:
            sub = [[g[r][c] for c in b] for r in a]
            row.append(linalg.det(sub))
        out.append(row)
    return QuadSpace(out, _cap=None)


def decomposable_coords(vectors, dim):
    """Coordinates of v_1 ^ ... ^ v_i in the lexicographic basis of Lambda^i."""
    i = len(vectors)
    m = fmat(vectors)
    out = []
    for sub in combinations(range(dim), i):
        out.append(linalg.det([[m[r][c] for c in sub] for r in range(i)]))
    return out


class PencilFamily:
    """q_* plus a linear family q(t) = sum_a t_a B_a of symmetric forms."""

    __slots__ = ("base", "coeffs", "varnames")

    def __init__(self, base: QuadSpace, coeffs, varnames=None):
        self.base = base
        self.coeffs = [fmat(b) for b in coeffs]
        if len(self.coeffs) > 5:
            raise ValueError("at most five parameters")
        for b in self.coeffs:
            if len(b) != base.dim or not linalg.is_symmetric(b):
                raise ValueError("coefficient matrices must be symmetric of matching size")
        self.varnames = tuple(varnames or ("t%d" % (a + 1) for a in range(len(self.coeffs))))

    def gram_poly(self) -> PolyMatrix:
        d = self.base.dim
        entries = []
        for i in range(d):
            row = []
            for j in range(d):
                terms = {}
                e0 = (0,) * len(self.coeffs)
                if self.base.gram[i][j] != 0:
                    terms[e0] = self.base.gram[i][j]
                for a, b in enumerate(self.coeffs):
                    if b[i][j] != 0:
                        e = [0] * len(self.coeffs)
                        e[a] = 1
                        terms[tuple(e)] = b[i][j]
                row.append(MultiPoly(self.varnames, terms))
            entries.append(row)
        return PolyMatrix(entries)

    def form_at(self, tvals) -> QuadSpace:
        tvals = fvec(tvals)
        d = self.base.dim
        g = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for j in range(d):
                v = Fraction(0)
                for a, b in enumerate(self.coeffs):
                    v += tvals[a] * b[i][j]
                g[i][j] = v
        return QuadSpace(g)


def phi_expansion(fam: PencilFamily):
    """The graded pieces Phi_0..Phi_d of det(q_* + q(t)) in t."""
    det = det_poly_matrix(fam.gram_poly())
    return [homogeneous_part(det, i) for i in range(fam.base.dim + 1)]


def degenerate_cone_check(fam: PencilFamily):
    """Kernel-block statement: with k = cork q_*, Phi_i = 0 for i < k and
    Phi_k(q) = c det(q|_K) for a single nonzero constant c.

    Returns (ok, c, phis).
    """
    k = fam.base.corank()
    phis = phi_expansion(fam)
    for i in range(k):
        if not phis[i].is_zero():
            return False, None, phis
    kern = fam.base.kernel()
    rhs = _restricted_det_poly(fam, kern)
    # c is None when both sides vanish identically on the pencil; the
    # proportionality claim lives on the full space of forms, so a pencil
    # on which both sides are zero is consistent
    ok, c = _proportional(phis[k], rhs)
    return ok, c, phis


def _restricted_det_poly(fam: PencilFamily, basis_rows):
    """det of q(t) restricted to a constant subspace, as a polynomial in t."""
    if not basis_rows:
        return MultiPoly.const(fam.varnames, 1)
    b = fmat(basis_rows)
    n = len(b)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            terms = {}
            for a, mat in enumerate(fam.coeffs):
                v = sum(b[i][r] * sum(mat[r][c] * b[j][c] for c in range(fam.base.dim))
                        for r in range(fam.base.dim))
                if v != 0:
                    e = [0] * len(fam.coeffs)
                    e[a] = 1
                    terms[tuple(e)] = v
            row.append(MultiPoly(fam.varnames, terms))
        entries.append(row)
    return det_poly_matrix(PolyMatrix(entries))


def _proportional(p: MultiPoly, q: MultiPoly):
    """(p == c * q, c); c = None when both vanish."""
    if p.is_zero() and q.is_zero():
        return True, None
    if p.is_zero() or q.is_zero():
        return False, None
    e, cq = q.leading()
    cp = p.coeff(e)
    if cp == 0:
        return False, None
    c = cp / cq
    return p == q * c, c


def vanishing_kernel_check(fam: PencilFamily):
    """Restricted-to-V_K statement: if every member of the family kills the
    kernel K of q_*, then Phi_i = 0 for i < 2k and Phi_2k(q) =
    c det(q_*^dual restricted to q~(K)).

    Returns (ok, c, phis).  Raises if the family is not inside V_K.
    """
    k = fam.base.corank()
    kern = fam.base.kernel()
    for b in fam.coeffs:
        for u in kern:
            for w in kern:
                val = sum(u[i] * sum(b[i][j] * w[j] for j in range(fam.base.dim))
                          for i in range(fam.base.dim))
                if val != 0:
                    raise ValueError("family does not vanish on ker q_*")
    phis = phi_expansion(fam)
    for i in range(2 * k):
        if not phis[i].is_zero():
            return False, None, phis
    if k == 0:
        return True, Fraction(1), phis
    # Gram of the dual form on the moving covectors q~(t) kappa_i, entries
    # quadratic in t; build it from solutions of q_* x = phi.
    d = fam.base.dim
    cov = []  # cov[i][a] = B_a kappa_i (a covector column)
    for u in kern:
        cov.append([linalg.mat_vec(b, u) for b in fam.coeffs])
    sols = []  # sols[i][a]: solution of q_* x = cov[i][a]
    for i in range(k):
        row = []
        for a in range(len(fam.coeffs)):
            x = linalg.solve(fam.base.gram, cov[i][a])
            if x is None:
                raise ValueError("q~(K) does not land in the image of q_*")
            row.append(x)
        sols.append(row)
    entries = []
    for i in range(k):
        row = []
        for j in range(k):
            terms = {}
            for a in range(len(fam.coeffs)):
                for b in range(len(fam.coeffs)):
                    v = sum(sols[i][a][t] * cov[j][b][t] for t in range(d))
                    if v != 0:
                        e = [0] * len(fam.coeffs)
                        e[a] += 1
                        e[b] += 1
                        key = tuple(e)
                        terms[key] = terms.get(key, Fraction(0)) + v
            row.append(MultiPoly(fam.varnames, {e: c for e, c in terms.items() if c != 0}))
        entries.append(row)
    rhs = det_poly_matrix(PolyMatrix(entries), strategy="bareiss")
    ok, c = _proportional(phis[2 * k], rhs)
    return ok, c, phis


def phi2_rank(fam: PencilFamily):
    """Both sides of the corank-1 rank formula, with an equality flag.

    Preconditions: cork q_* = 1 with kernel <e>, and every member of the
    family kills e.  Left side: rank of Phi_2 as a quadratic form in t.
    Right side: cod(T, U) - cork(qbar_* on T/<e>) where T is the common
    annihilator of the moving images of e.

    Returns (lhs, rhs, equal).
    """
    if fam.base.corank() != 1:
        raise ValueError("base form must have corank 1")
    e = fam.base.kernel()[0]
    d = fam.base.dim
    for b in fam.coeffs:
        if sum(e[i] * sum(b[i][j] * e[j] for j in range(d)) for i in range(d)) != 0:
            raise ValueError("family does not kill the kernel vector")
    phis = phi_expansion(fam)
    phi2 = phis[2]
    # Gram of Phi_2 in the parameters
    m = len(fam.coeffs)
    g = [[Fraction(0)] * m for _ in range(m)]
    for exp, c in phi2.terms.items():
        idx = [i for i, k in enumerate(exp) for _ in range(k)]
        i, j = idx[0], idx[1]
        if i == j:
            g[i][i] = c
        else:
            g[i][j] += c / 2
            g[j][i] += c / 2
    lhs = rank(g) if m else 0
    # T = Ann of the span of B_a e
    images = [linalg.mat_vec(b, e) for b in fam.coeffs]
    img_basis = linalg.row_basis(images)
    cod = len(img_basis)
    t_basis = linalg.nullspace(img_basis) if img_basis else linalg.identity(d)
    # cork of the induced form on T/<e>: e lies in T and in ker(q_*|_T)
    gt = restrict_gram(fam.base.gram, t_basis) if t_basis else []
    cork_t = (len(t_basis) - rank(gt)) if t_basis else 0
    rhs = cod - (cork_t - 1)
    return lhs, rhs, lhs == rhs
