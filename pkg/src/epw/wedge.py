"""Exterior algebra of a 6-dimensional rational vector space.

Fixed basis e1..e6; Lambda^3 V has the 20 lexicographic basis trivectors
e_ijk (i<j<k) and carries the symplectic wedge pairing normalized by
vol(e1^...^e6) = 1.  All signs flow from lexicographic index order.

Lagrangian subspaces are stored as reduced-echelon 10x20 rational
matrices.  Degeneracy loci, the Theta condition, sigma levels, the dual
membership test and the pointwise curve predicates are exact rank
computations.
"""

from fractions import Fraction
from itertools import combinations
import random

from . import linalg
from .linalg import frac, fvec, rank, stack

DIM = 6
TRIPLES = tuple(combinations(range(DIM), 3))          # 20 basis trivectors
QUADS = tuple(combinations(range(DIM), 4))            # 15 basis 4-vectors
PAIRS6 = tuple(combinations(range(DIM), 2))           # 15 basis bivectors
TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}
QUAD_INDEX = {q: i for i, q in enumerate(QUADS)}


def perm_sign(seq):
    """Sign of the permutation sorting seq; 0 if entries repeat."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# pairing sign between complementary triples: e_I ^ e_J = s * e_123456
_PAIRING_SIGN = {}
for _t in TRIPLES:
    _c = tuple(sorted(set(range(DIM)) - set(_t)))
    _PAIRING_SIGN[_t] = (perm_sign(_t + _c), _c)


def symplectic_pairing(a, b) -> Fraction:
    """Coefficient of e1^...^e6 in a ^ b; bilinear and antisymmetric."""
    a, b = fvec(a), fvec(b)
    total = Fraction(0)
    for i, t in enumerate(TRIPLES):
        if a[i] == 0:
            continue
        s, c = _PAIRING_SIGN[t]
        j = TRIPLE_INDEX[c]
        if b[j] != 0:
            total += s * a[i] * b[j]
    return total


def symplectic_gram():
    g = [[Fraction(0)] * 20 for _ in range(20)]
    for i, t in enumerate(TRIPLES):
        s, c = _PAIRING_SIGN[t]
        g[i][TRIPLE_INDEX[c]] = Fraction(s)
    return g


_SYMPLECTIC_GRAM = symplectic_gram()


def basis_trivector(i, j, k):
    v = [Fraction(0)] * 20
    s = perm_sign((i, j, k))
    if s == 0:
        return v
    v[TRIPLE_INDEX[tuple(sorted((i, j, k)))]] = Fraction(s)
    return v


def trivector_from_vectors(u, v, w):
    """Coordinates of u ^ v ^ w in the lexicographic trivector basis."""
    u, v, w = fvec(u), fvec(v), fvec(w)
    out = []
    for (i, j, k) in TRIPLES:
        out.append(
            u[i] * (v[j] * w[k] - v[k] * w[j])
            - u[j] * (v[i] * w[k] - v[k] * w[i])
            + u[k] * (v[i] * w[j] - v[j] * w[i])
        )
    return out


def wedge_vector_trivector(v, t):
    """v ^ t in the lexicographic 4-vector basis (15 coordinates)."""
    v, t = fvec(v), fvec(t)
    out = [Fraction(0)] * len(QUADS)
    for i in range(DIM):
        if v[i] == 0:
            continue
        for idx, tri in enumerate(TRIPLES):
            if t[idx] == 0 or i in tri:
                continue
            s = perm_sign((i,) + tri)
            out[QUAD_INDEX[tuple(sorted((i,) + tri))]] += s * v[i] * t[idx]
    return out


def wedge_bivector_basis(v):
    """Spanning rows of v ^ Lambda^2 V inside Lambda^3 V (rank 10 for v != 0)."""
    v = fvec(v)
    rows = []
    for (i, j) in PAIRS6:
        row = [Fraction(0)] * 20
        for a in range(DIM):
            if v[a] == 0 or a in (i, j):
                continue
            s = perm_sign((a, i, j))
            row[TRIPLE_INDEX[tuple(sorted((a, i, j)))]] += s * v[a]
        rows.append(row)
    return linalg.row_basis(rows)


class Subspace3:
    """A 3-dimensional subspace of V, stored as a reduced 3x6 matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        m = linalg.row_basis(linalg.fmat(rows))
        if len(m) != 3:
            raise ValueError("expected rank 3, got %d" % len(m))
        self.rows = m

    def __eq__(self, other):
        return isinstance(other, Subspace3) and self.rows == other.rows

    def __repr__(self):
        return "Subspace3(%r)" % (self.rows,)

    def contains_vector(self, v):
        return linalg.in_rowspace(self.rows, fvec(v))

    def top_wedge(self):
        """Coordinates of Lambda^3 W (one generator)."""
        return trivector_from_vectors(*self.rows)

    def wedge2_wedge_v_basis(self):
        """Canonical basis of Lambda^2 W ^ V (a 10-dimensional space)."""
        rows = []
        w = self.rows
        for a in range(3):
            for b in range(a + 1, 3):
                for k in range(DIM):
                    ek = [Fraction(0)] * DIM
                    ek[k] = Fraction(1)
                    rows.append(trivector_from_vectors(w[a], w[b], ek))
        return linalg.row_basis(rows)


class LagrangianFrame:
    """A Lagrangian 10-space of Lambda^3 V: reduced-echelon 10x20 matrix."""

    __slots__ = ("matrix",)

    def __init__(self, rows, check=True):
        m = linalg.row_basis(linalg.fmat(rows))
        if len(m) != 10:
            raise ValueError("expected rank 10, got %d" % len(m))
        if check and not _pairings_vanish(m):
            raise ValueError("subspace is not isotropic for the wedge pairing")
        self.matrix = m

    def __eq__(self, other):
        return isinstance(other, LagrangianFrame) and self.matrix == other.matrix

    def __repr__(self):
        return "LagrangianFrame(<10x20>)"

    @property
    def rows(self):
        return self.matrix

    def contains(self, trivector):
        return linalg.in_rowspace(self.matrix, fvec(trivector))


def _pairings_vanish(rows):
    g = _SYMPLECTIC_GRAM
    gr = [linalg.mat_vec(g, r) for r in rows]
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if sum(rows[i][t] * gr[j][t] for t in range(20)) != 0:
                return False
    return True


def is_lagrangian(rows) -> bool:
    """True iff the rows span a 10-space on which the wedge pairing vanishes."""
    m = linalg.fmat(rows)
    if rank(m) != 10:
        return False
    return _pairings_vanish(linalg.row_basis(m))


def degeneracy_dim(a: LagrangianFrame, v) -> int:
    """dim(A ∩ (v ^ Lambda^2 V)); the point [v] lies in Y_A[k] iff k <= this."""
    v = fvec(v)
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no degeneracy dimension")
    w = wedge_bivector_basis(v)
    return 10 + len(w) - rank(stack(a.matrix, w))


def decompose_trivector(t):
    """W with t in Lambda^3 W, or None if t is not decomposable."""
    t = fvec(t)
    if all(x == 0 for x in t):
        raise ValueError("zero trivector")
    cols = [wedge_vector_trivector(_unit(i), t) for i in range(DIM)]
    sysm = [[cols[i][r] for i in range(DIM)] for r in range(len(QUADS))]
    ker = linalg.nullspace(sysm)
    if len(ker) != 3:
        return None
    w = Subspace3(ker)
    top = w.top_wedge()
    # t must be proportional to the top wedge of the kernel
    if rank([top, t]) != 1:
        return None
    return w


def _unit(i):
    v = [Fraction(0)] * DIM
    v[i] = Fraction(1)
    return v


def theta_contains(a: LagrangianFrame, w: Subspace3) -> bool:
    """Whether Lambda^3 W is contained in A (the Theta_A condition)."""
    return a.contains(w.top_wedge())


def sigma_level(a: LagrangianFrame, w: Subspace3):
    """(theta, level): theta = Lambda^3 W ⊂ A, level = dim(A ∩ (Λ²W ∧ V)).

    (W, A) has sigma level >= d+1 exactly when theta holds and
    level >= d+1.
    """
    basis = w.wedge2_wedge_v_basis()
    level = 10 + len(basis) - rank(stack(a.matrix, basis))
    return theta_contains(a, w), level


def dual_membership(a: LagrangianFrame, e_rows) -> bool:
    """Whether the 5-space E satisfies (Lambda^3 E) ∩ A != 0.

    This is membership of E in the dual degeneracy locus.
    """
    em = linalg.row_basis(linalg.fmat(e_rows))
    if len(em) != 5:
        raise ValueError("E must have rank 5")
    tri = [trivector_from_vectors(em[i], em[j], em[k])
           for (i, j, k) in combinations(range(5), 3)]
    tri = linalg.row_basis(tri)
    return rank(stack(a.matrix, tri)) < len(tri) + 10


def curve_membership(a: LagrangianFrame, w: Subspace3, wvec) -> bool:
    """Pointwise support test for the curve inside P(W): degeneracy >= 2."""
    wvec = fvec(wvec)
    if not w.contains_vector(wvec):
        raise ValueError("point is not in W")
    if not theta_contains(a, w):
        raise ValueError("Lambda^3 W is not contained in A")
    return degeneracy_dim(a, wvec) >= 2


def bscript_membership(a: LagrangianFrame, w: Subspace3, known_theta, wvec) -> bool:
    """Bad-locus test at [w] relative to a caller-supplied list of Theta planes.

    True if some supplied W' != W contains the point, or if
    dim(A ∩ (w ^ Λ²V) ∩ (Λ²W ∧ V)) >= 2 (checked exactly).
    """
    wvec = fvec(wvec)
    for wp in known_theta:
        if wp == w:
            continue
        if wp.contains_vector(wvec):
            return True
    first = linalg.intersect_rowspaces(a.matrix, wedge_bivector_basis(wvec))
    if len(first) < 2:
        return False
    triple = linalg.intersect_rowspaces(first, w.wedge2_wedge_v_basis())
    return len(triple) >= 2


def curve_smooth_at(a: LagrangianFrame, w: Subspace3, known_theta, v0) -> bool:
    """Smooth-curve criterion at [v0]: degeneracy exactly 2 and off the bad locus."""
    v0 = fvec(v0)
    if not w.contains_vector(v0):
        raise ValueError("point is not in W")
    if not theta_contains(a, w):
        raise ValueError("Lambda^3 W is not contained in A")
    if degeneracy_dim(a, v0) != 2:
        return False
    return not bscript_membership(a, w, known_theta, v0)


# ---------------------------------------------------------------------
# Graph Lagrangians over a chart basis
# ---------------------------------------------------------------------

PAIRS5 = tuple(combinations(range(5), 2))     # bivector index order for Λ²V0
TRIPLES5 = tuple(combinations(range(5), 3))   # trivector index order for Λ³V0
PAIR5_INDEX = {p: i for i, p in enumerate(PAIRS5)}


def vol5_sign(indices):
    """Sign of e_{i1}^...^e_{i5} against the ordered chart basis, or 0."""
    return perm_sign(indices)


def chart_pairing_matrix():
    """P[k][j] = vol0(gamma_k ^ beta_j) for the chart bases; signed permutation."""
    p = [[Fraction(0)] * 10 for _ in range(10)]
    for k, tri in enumerate(TRIPLES5):
        rest = tuple(sorted(set(range(5)) - set(tri)))
        p[k][PAIR5_INDEX[rest]] = Fraction(vol5_sign(tri + rest))
    return p


_P5 = chart_pairing_matrix()


def pluecker_coefficient_matrices():
    """B[a][i][j] = vol0(c_a ^ beta_i ^ beta_j): constant sign data.

    The Gram matrix of the variable quadratic form at v = sum t_a c_a is
    sum_a t_a B[a]; this depends only on index combinatorics, not on the
    actual chart vectors.
    """
    mats = []
    for a in range(5):
        m = [[Fraction(0)] * 10 for _ in range(10)]
        for i, p in enumerate(PAIRS5):
            for j, q in enumerate(PAIRS5):
                seq = (a,) + p + q
                if len(set(seq)) == 5:
                    m[i][j] = Fraction(vol5_sign(seq))
        mats.append(m)
    return mats


_B5 = pluecker_coefficient_matrices()


def lagrangian_from_graph_basis(v0, cbasis, gram) -> LagrangianFrame:
    """The graph Lagrangian {v0 ^ alpha + q(alpha)} for a symmetric Gram matrix.

    cbasis: five vectors spanning a complement of [v0]; gram: 10x10
    symmetric matrix of the quadratic form on Lambda^2 V0 in the
    lexicographic pair basis, through the vol0 identification.
    """
    g = linalg.fmat(gram)
    if not linalg.is_symmetric(g):
        raise ValueError("Gram matrix must be symmetric (otherwise the graph is not Lagrangian)")
    v0 = fvec(v0)
    c = [fvec(x) for x in cbasis]
    if rank(stack([v0], c)) != 6:
        raise ValueError("v0 and the chart basis do not span V")
    # T = G * P^{-1}; P is a signed permutation so P^{-1} = P^t
    t = linalg.mat_mul(g, linalg.transpose(_P5))
    rows = []
    for i, (p, q) in enumerate(PAIRS5):
        row = trivector_from_vectors(v0, c[p], c[q])
        for k, tri in enumerate(TRIPLES5):
            if t[i][k] != 0:
                gk = trivector_from_vectors(c[tri[0]], c[tri[1]], c[tri[2]])
                row = [x + t[i][k] * y for x, y in zip(row, gk)]
        rows.append(row)
    return LagrangianFrame(rows)


def lagrangian_from_graph(chart, gram) -> LagrangianFrame:
    """Graph Lagrangian over an existing chart (its center and basis)."""
    return lagrangian_from_graph_basis(chart.v0, chart.basis, gram)


def graph_gram(a: LagrangianFrame, v0, cbasis):
    """Extract the symmetric Gram matrix of A as a graph over the chart.

    Inverse of lagrangian_from_graph_basis; raises if Lambda^3 V0 meets A
    (no transversality, so A is not a graph in this chart).
    """
    v0 = fvec(v0)
    c = [fvec(x) for x in cbasis]
    first = [trivector_from_vectors(v0, c[p], c[q]) for (p, q) in PAIRS5]
    second = [trivector_from_vectors(c[i], c[j], c[k]) for (i, j, k) in TRIPLES5]
    m = stack(first, second)
    minv = linalg.inverse(linalg.transpose(m))
    coords = [linalg.mat_vec(minv, row) for row in a.matrix]
    x = [row[:10] for row in coords]
    y = [row[10:] for row in coords]
    try:
        xinv = linalg.inverse(x)
    except ValueError:
        raise ValueError("Lambda^3 V0 meets A: chart is not transversal") from None
    t = linalg.mat_mul(xinv, y)
    g = linalg.mat_mul(t, _P5)
    if not linalg.is_symmetric(g):
        raise AssertionError("extracted Gram is not symmetric; sign conventions broken")
    return g


def pluecker_gram_numeric(tvals):
    """Gram matrix of the variable quadratic form at chart coordinates t."""
    tvals = fvec(tvals)
    g = [[Fraction(0)] * 10 for _ in range(10)]
    for a in range(5):
        if tvals[a] == 0:
            continue
        ba = _B5[a]
        for i in range(10):
            for j in range(10):
                if ba[i][j] != 0:
                    g[i][j] += tvals[a] * ba[i][j]
    return g


def apply_gl6_trivector(g6, t):
    """Push a trivector through the basis substitution e_i -> row i of g6."""
    rows = linalg.fmat(g6)
    t = fvec(t)
    out = [Fraction(0)] * 20
    for idx, (i, j, k) in enumerate(TRIPLES):
        if t[idx] == 0:
            continue
        img = trivector_from_vectors(rows[i], rows[j], rows[k])
        out = [x + t[idx] * y for x, y in zip(out, img)]
    return out


def apply_gl6_frame(g6, a: LagrangianFrame) -> LagrangianFrame:
    return LagrangianFrame([apply_gl6_trivector(g6, r) for r in a.matrix])


# ---------------------------------------------------------------------
# Seeded samplers
# ---------------------------------------------------------------------

COEFF_BOX = 5  # sampler coefficients are uniform in [-5, 5]


def _rand_frac(rng):
    return Fraction(rng.randint(-COEFF_BOX, COEFF_BOX))


def random_symmetric(rng, n, invertible=False):
    while True:
        g = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                g[i][j] = g[j][i] = _rand_frac(rng)
        if not invertible or rank(g) == n:
            return g


def random_vector(rng, n, nonzero=False):
    while True:
        v = [_rand_frac(rng) for _ in range(n)]
        if not nonzero or any(x != 0 for x in v):
            return v


def standard_chart_basis():
    """v0 = e1 and V0 = span(e2..e6)."""
    return _unit(0), [_unit(i) for i in range(1, 6)]


def random_graph_lagrangian(rng, corank=0):
    """Graph Lagrangian over the standard chart with prescribed Gram corank.

    Returns (frame, gram).  corank = degeneracy dimension at the chart
    center.
    """
    v0, c = standard_chart_basis()
    if corank == 0:
        g = random_symmetric(rng, 10, invertible=True)
    else:
        g = symmetric_with_kernel(rng, 10, [random_vector(rng, 10) for _ in range(corank)])
    return lagrangian_from_graph_basis(v0, c, g), g


def symmetric_with_kernel(rng, n, kernel_rows):
    """Random symmetric n x n matrix whose kernel is exactly span(kernel_rows)."""
    k = linalg.row_basis(linalg.fmat(kernel_rows))
    s = len(k)
    if s == 0:
        return random_symmetric(rng, n, invertible=True)
    ann = linalg.nullspace(k)  # (n-s) rows spanning Ann(span k)
    attempts = 0
    while True:
        attempts += 1
        if attempts > 100:
            raise RuntimeError("could not hit the requested kernel")
        smat = random_symmetric(rng, n - s, invertible=True)
        c = ann
        g = linalg.mat_mul(linalg.mat_mul(linalg.transpose(c), smat), c)
        if rank(g) == n - s and all(
            all(x == 0 for x in linalg.mat_vec(g, kv)) for kv in k
        ):
            return g


class ConstraintError(RuntimeError):
    """Raised when a sampler cannot satisfy its constraints."""


def lagrangian_containing(w: Subspace3, level=1, extra_theta=(), seed=0, attempts=100):
    """Seeded Lagrangian A with Lambda^3 W ⊂ A and sigma level exactly `level`.

    extra_theta: at most one further 3-space W' with dim(W ∩ W') = 1; its
    top wedge is built into A as well.  Deterministic for a fixed seed;
    every returned frame is re-verified with sigma_level.
    """
    if level not in (1, 2, 3):
        raise ValueError("level must be 1, 2 or 3")
    extra_theta = list(extra_theta)
    if len(extra_theta) > 1:
        raise ConstraintError("at most one extra Theta plane is supported")
    rng = random.Random(seed)

    # chart center: a point of W (in W ∩ W' when W' is given)
    if extra_theta:
        wp = extra_theta[0]
        inter = linalg.intersect_rowspaces(w.rows, wp.rows)
        if len(inter) != 1:
            raise ConstraintError("W and W' must meet in a line")
        v0 = inter[0]
    else:
        v0 = w.rows[0]

    # complete v0 to a basis of W, then W' directions, then coordinate fill
    wbasis = [v0]
    for r in w.rows:
        if rank(stack(wbasis, [r])) > len(wbasis):
            wbasis.append(r)
    c = wbasis[1:]  # c1, c2 span W ∩ V0
    if extra_theta:
        for r in extra_theta[0].rows:
            if rank(stack([v0], c, [r])) > 1 + len(c):
                c.append(r)
        if len(c) != 4:
            raise ConstraintError("unexpected degeneration of W + W'")
    for i in range(DIM):
        if len(c) == 5:
            break
        if rank(stack([v0], c, [_unit(i)])) > 1 + len(c):
            c.append(_unit(i))

    # Gram constraints in the lexicographic pair basis over c1..c5:
    # pairs containing c1 or c2 occupy the first seven slots.
    for _ in range(attempts):
        kernel7 = [[Fraction(1)] + [Fraction(0)] * 6]
        for _ in range(level - 1):
            kernel7.append(random_vector(rng, 7))
        if rank(kernel7) != level:
            continue
        g77 = symmetric_with_kernel(rng, 7, kernel7)
        g = [[Fraction(0)] * 10 for _ in range(10)]
        for i in range(7):
            for j in range(7):
                g[i][j] = g77[i][j]
        for i in range(7, 10):
            for j in range(1, 7):
                g[i][j] = g[j][i] = _rand_frac(rng)
        for i in range(7, 10):
            for j in range(i, 10):
                g[i][j] = g[j][i] = _rand_frac(rng)
        if extra_theta:
            idx = PAIR5_INDEX[(2, 3)]  # bivector c3 ^ c4 spans Λ²(W' ∩ V0)
            for t in range(10):
                g[idx][t] = g[t][idx] = Fraction(0)
        frame = lagrangian_from_graph_basis(v0, c, g)
        theta, lv = sigma_level(frame, w)
        if not theta or lv != level:
            continue
        if extra_theta and not theta_contains(frame, extra_theta[0]):
            continue
        return frame
    raise ConstraintError("sampler failed after %d attempts" % attempts)
