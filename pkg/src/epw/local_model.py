"""Local determinantal models of the degeneracy sextic.

A chart at a point [v0] is a transversal 5-space V0 with an ordered
basis; through the volume identification of Lambda^3 V0 with the dual of
Lambda^2 V0 the Lagrangian becomes the graph of a symmetric quadratic
form q_A, the moving point contributes the variable quadratic form q_v,
and the local equation of the degeneracy locus is det(q_A + q_v), a
polynomial of degree at most six in the five chart coordinates.

The Schur complement of the nondegenerate block of q_A is kept as an
exact pair (M_hat, D) with M_J = M_hat / D; the analytic square root
factorization that motivates it is replaced by the polynomial identity

    det(q_A + q_v) * D^(k-1) = det(M_hat),   k = dim ker q_A,

which is checked exactly.  The double cover above the chart is cut out
by M_hat * xi and D^(k-1) * xi xi^t - cof(M_hat).
"""

from fractions import Fraction
import random

from . import linalg, wedge
from .linalg import fvec, rank, stack
from .poly import MultiPoly, homogeneous_part, is_homogeneous, \
    div_exact, squarefree_part, quadratic_form_rank
from .polymat import PolyMatrix, det_poly_matrix, det_fraction_matrix, \
    cofactor_matrix, interpolate_poly_map

CHART_VARS = ("t1", "t2", "t3", "t4", "t5")


class ChartError(RuntimeError):
    """No transversal complement found: possible pathology (the dual
    degeneracy locus may be the whole projective space)."""


class Chart:
    """A point [v0], a transversal basis c1..c5, and the derived Gram data."""

    __slots__ = ("v0", "basis", "gram_form", "gram_moving")

    def __init__(self, frame: wedge.LagrangianFrame, v0, basis):
        self.v0 = fvec(v0)
        self.basis = [fvec(c) for c in basis]
        if rank(stack([self.v0], self.basis)) != 6:
            raise ValueError("v0 plus basis must span V")
        # raises if Lambda^3 V0 meets A
        self.gram_form = wedge.graph_gram(frame, self.v0, self.basis)
        self.gram_moving = moving_gram_matrix()

    def gram_at(self, tvals):
        """Numeric Gram of the local pencil at chart coordinates t.

        An element v0 ^ alpha + q~(alpha) of the graph lies over the point
        [v0 + v] exactly when q~(alpha) = v ^ alpha, so the pencil whose
        corank computes the degeneracy dimension is G_A minus the moving
        Pluecker Gram of v.
        """
        qv = wedge.pluecker_gram_numeric(tvals)
        return linalg.mat_sub(self.gram_form, qv)

    def point_at(self, tvals):
        """The vector v0 + sum t_a c_a of V represented by chart coordinates."""
        tvals = fvec(tvals)
        out = self.v0[:]
        for a in range(5):
            out = [x + tvals[a] * c for x, c in zip(out, self.basis[a])]
        return out

    def kernel(self):
        """Canonical basis of ker q_A (bivector coordinates)."""
        return linalg.nullspace(self.gram_form)

    def corank(self):
        return 10 - rank(self.gram_form)


_MOVING_GRAM = None


def moving_gram_matrix() -> PolyMatrix:
    """10x10 symbolic Gram of the moving part of the local pencil.

    Entries are linear in t1..t5; the sign is the one that makes
    corank(gram_form + moving(t)) equal to the degeneracy dimension at
    the chart point [v0 + sum t_a c_a].  Universal sign data, shared by
    every chart.
    """
    global _MOVING_GRAM
    if _MOVING_GRAM is None:
        entries = []
        for i in range(10):
            row = []
            for j in range(10):
                terms = {}
                for a in range(5):
                    c = wedge._B5[a][i][j]
                    if c != 0:
                        e = [0] * 5
                        e[a] = 1
                        terms[tuple(e)] = -c
                row.append(MultiPoly(CHART_VARS, terms))
            entries.append(row)
        _MOVING_GRAM = PolyMatrix(entries)
    return _MOVING_GRAM


def make_chart(frame: wedge.LagrangianFrame, v0, seed=0, attempts=40) -> Chart:
    """Find a chart at [v0]: try coordinate complements, then seeded random ones."""
    v0 = fvec(v0)
    if all(x == 0 for x in v0):
        raise ValueError("v0 must be nonzero")
    tried = []
    for excl in range(6):
        if v0[excl] == 0:
            continue
        basis = [wedge._unit(i) for i in range(6) if i != excl]
        tried.append(basis)
    rng = random.Random(seed)
    while len(tried) < attempts:
        basis = [wedge.random_vector(rng, 6) for _ in range(5)]
        if rank(stack([v0], basis)) == 6:
            tried.append(basis)
    for basis in tried:
        if _transversal(frame, basis):
            return Chart(frame, v0, basis)
    raise ChartError(
        "no transversal V0 found in %d attempts: possible pathology "
        "(dual degeneracy locus equal to the whole dual space)" % len(tried)
    )


def _transversal(frame, basis):
    tri = [wedge.trivector_from_vectors(basis[i], basis[j], basis[k])
           for (i, j, k) in wedge.TRIPLES5]
    return rank(stack(frame.matrix, tri)) == 20


class LocalSextic:
    """det(q_A + q_v) in chart coordinates together with its graded pieces."""

    __slots__ = ("f", "parts")

    def __init__(self, f: MultiPoly):
        if f.degree() > 6:
            raise AssertionError(
                "local determinant has degree %d > 6; conventions are broken" % f.degree()
            )
        self.f = f
        self.parts = [homogeneous_part(f, i) for i in range(7)]

    def part(self, i):
        return self.parts[i]

    def degree(self):
        return self.f.degree()

    def is_pathological(self):
        return self.f.is_zero()


def local_sextic(frame: wedge.LagrangianFrame, chart: Chart, strategy="auto") -> LocalSextic:
    """The local equation det(q_A + q_v) of the degeneracy locus in the chart."""
    if strategy in ("auto", "interpolate"):
        f = _det_gram_interpolated(chart)
    else:
        const = PolyMatrix.from_scalar_matrix(chart.gram_form, CHART_VARS)
        m = const.add(chart.gram_moving)
        f = det_poly_matrix(m, strategy=strategy)
    return LocalSextic(f)


def _det_gram_interpolated(chart: Chart):
    """Interpolated det(q_A + q_v): integer-scaled fast path.

    The Gram of q_A is scaled to an integer matrix once; the moving form
    has integer sign coefficients, so every grid evaluation is a plain
    integer determinant.
    """
    from math import lcm
    from .zlinalg import int_det

    g = chart.gram_form
    den = 1
    for row in g:
        for x in row:
            den = lcm(den, x.denominator)
    gi = [[int(x * den) for x in row] for row in g]
    bs = [[[-int(x) for x in row] for row in b] for b in wedge._B5]
    scale = Fraction(1, den ** 10)

    def oracle(pt):
        m = [row[:] for row in gi]
        for a in range(5):
            t = pt[a]
            if t:
                ba = bs[a]
                td = t * den
                for i in range(10):
                    bai = ba[i]
                    mi = m[i]
                    for j in range(10):
                        if bai[j]:
                            mi[j] += td * bai[j]
        return (int_det(m) * scale,)

    f = interpolate_poly_map(oracle, CHART_VARS, 10, 1)[0]
    return f


class TaylorReport:
    __slots__ = ("k", "theta_case", "checks")

    def __init__(self, k, theta_case, checks):
        self.k = k
        self.theta_case = theta_case
        self.checks = checks

    @property
    def ok(self):
        return all(passed for _, passed in self.checks)

    def lines(self):
        return ["%s %s" % ("PASS" if p else "FAIL", name) for name, p in self.checks]


def taylor_order_check(frame, chart, known_theta=(), sextic=None) -> TaylorReport:
    """Check the vanishing orders of the local equation at the chart center.

    With no supplied Theta plane through [v0]: f_0 = ... = f_{k-1} = 0 and
    f_k != 0, where k is the degeneracy dimension at [v0].  With some
    supplied W containing v0: f_0 = f_1 = 0.
    """
    k = wedge.degeneracy_dim(frame, chart.v0)
    ls = sextic if sextic is not None else local_sextic(frame, chart)
    through = [w for w in known_theta if w.contains_vector(chart.v0)
               and wedge.theta_contains(frame, w)]
    checks = []
    if through:
        checks.append(("f0 = 0 (plane case)", ls.part(0).is_zero()))
        checks.append(("f1 = 0 (plane case)", ls.part(1).is_zero()))
        return TaylorReport(k, True, checks)
    for i in range(min(k, 7)):
        checks.append(("f%d = 0" % i, ls.part(i).is_zero()))
    if k <= 6:
        checks.append(("f%d != 0" % k, not ls.part(k).is_zero()))
    return TaylorReport(k, False, checks)


def rank_f2(frame, w: wedge.Subspace3, known_theta, chart: Chart, sextic=None) -> int:
    """Rank of the quadratic Taylor term at a point of P(W) off the curve.

    Equals 4 - dim(A ∩ (Λ²W ∧ V)); a mismatch raises, since it would
    falsify the rank formula.
    """
    if not w.contains_vector(chart.v0):
        raise ValueError("chart center must lie in W")
    if not wedge.theta_contains(frame, w):
        raise ValueError("Lambda^3 W is not contained in A")
    if wedge.degeneracy_dim(frame, chart.v0) != 1:
        raise ValueError("chart center lies on the curve (degeneracy >= 2)")
    ls = sextic if sextic is not None else local_sextic(frame, chart)
    r = quadratic_form_rank(ls.part(2))
    _, level = wedge.sigma_level(frame, w)
    if r != 4 - level:
        raise AssertionError(
            "rank f2 = %d but 4 - level = %d; rank formula violated" % (r, 4 - level)
        )
    return r


# ---------------------------------------------------------------------
# Schur complement data and the double cover
# ---------------------------------------------------------------------


class SchurData:
    """Exact Schur reduction of q_A + q_v by the nondegenerate block.

    Fields: j_indices (coordinate bivectors spanning J), k_basis (rows
    spanning ker q_A), n_j (constant Gram block), the symbolic blocks
    q_j, r_j, p_j, the common denominator `denom` = det(N_J + Q_J), and
    m_hat with M_J = m_hat / denom.
    """

    __slots__ = ("k", "j_indices", "k_basis", "n_j", "q_j", "r_j", "p_j",
                 "denom", "m_hat", "adapted")

    def __init__(self, k, j_indices, k_basis, n_j, q_j, r_j, p_j, denom, m_hat, adapted):
        self.k = k
        self.j_indices = j_indices
        self.k_basis = k_basis
        self.n_j = n_j
        self.q_j = q_j
        self.r_j = r_j
        self.p_j = p_j
        self.denom = denom
        self.m_hat = m_hat
        self.adapted = adapted   # 10x10 change of basis (rows = adapted basis)


def _greedy_principal_block(g, target):
    """Indices of a nonsingular principal block of the given size, grown
    greedily one coordinate (or one coordinate pair) at a time."""
    n = len(g)
    chosen = []
    while len(chosen) < target:
        grew = False
        for i in range(n):
            if i in chosen:
                continue
            sub = chosen + [i]
            if det_fraction_matrix([[g[a][b] for b in sub] for a in sub]) != 0:
                chosen = sub
                grew = True
                break
        if grew:
            continue
        for i in range(n):
            if i in chosen:
                continue
            for j in range(i + 1, n):
                if j in chosen:
                    continue
                sub = chosen + [i, j]
                if det_fraction_matrix([[g[a][b] for b in sub] for a in sub]) != 0:
                    chosen = sub
                    grew = True
                    break
            if grew:
                break
        if not grew:
            raise AssertionError("rank bookkeeping is inconsistent")
    return chosen


def schur_complement(frame, chart: Chart, k_basis=None) -> SchurData:
    """Compute (M_hat, D) with M_J = M_hat / D in the adapted basis.

    k_basis optionally fixes the basis of ker q_A (rows in bivector
    coordinates), e.g. to put a decomposable kernel direction first;
    supplied rows are cleared of denominators.  The grid evaluations run
    on integer-scaled data: per point one fraction-free solve gives both
    det(N + Q) and adj(N + Q) R^t.
    """
    from math import lcm
    from .zlinalg import bareiss_solve, int_adjugate, int_det

    g = chart.gram_form
    kern = chart.kernel()
    k = len(kern)
    if k_basis is not None:
        kb = [fvec(r) for r in k_basis]
        if len(kb) != k or rank(kb) != k or rank(stack(kern, kb)) != k:
            raise ValueError("supplied kernel basis does not span ker q_A")
        kern = kb
    # integer adapted basis: coordinate bivectors of J, then the kernel
    j = _greedy_principal_block(g, 10 - k)
    adapted = []
    for i in j:
        row = [Fraction(0)] * 10
        row[i] = Fraction(1)
        adapted.append(row)
    kern_scaled = []
    for krow in kern:
        kden = 1
        for x in krow:
            kden = lcm(kden, x.denominator)
        kern_scaled.append([x * kden for x in krow])
    kern = kern_scaled
    adapted.extend(kern)
    c = adapted
    gp = linalg.mat_mul(linalg.mat_mul(c, g), linalg.transpose(c))
    jdim = 10 - k
    n_j = [row[:jdim] for row in gp[:jdim]]
    for i in range(10):
        for jj in range(10):
            if (i >= jdim or jj >= jdim) and gp[i][jj] != 0:
                raise AssertionError("adapted Gram is not block diagonal")
    # moving Gram in the adapted basis: integer coefficient matrices per t_a
    ci = [[int(x) for x in row] for row in c]
    cb = []
    for a in range(5):
        ba = [[-int(x) for x in row] for row in wedge._B5[a]]
        tmp = [[sum(ci[i][t] * ba[t][s] for t in range(10)) for s in range(10)]
               for i in range(10)]
        cb.append([[sum(tmp[i][s] * ci[jj][s] for s in range(10)) for jj in range(10)]
                   for i in range(10)])

    def linear_block(r0, r1, c0, c1):
        entries = []
        for i in range(r0, r1):
            row = []
            for jj in range(c0, c1):
                terms = {}
                for a in range(5):
                    v = cb[a][i][jj]
                    if v:
                        e = [0] * 5
                        e[a] = 1
                        terms[tuple(e)] = Fraction(v)
                row.append(MultiPoly(CHART_VARS, terms))
            entries.append(row)
        return PolyMatrix(entries)

    q_j = linear_block(0, jdim, 0, jdim)
    p_j = linear_block(jdim, 10, jdim, 10) if k else None
    r_j = linear_block(jdim, 10, 0, jdim) if k else None

    # integer scaling of the constant block
    den = 1
    for row in gp:
        for x in row:
            den = lcm(den, x.denominator)
    a0 = [[int(x * den) for x in row] for row in gp]

    def full_int(pt):
        m = [row[:] for row in a0]
        for a in range(5):
            t = pt[a]
            if t:
                td = t * den
                cba = cb[a]
                for i in range(10):
                    mi = m[i]
                    ci_row = cba[i]
                    for s in range(10):
                        if ci_row[s]:
                            mi[s] += td * ci_row[s]
        return m  # equals den * (gp + moving'(t))

    if k == 0:
        def oracle0(pt):
            return (Fraction(int_det(full_int(pt)), den ** 10),)

        denom = interpolate_poly_map(oracle0, CHART_VARS, 10, 1)[0]
        return SchurData(0, j, [], n_j, q_j, r_j, p_j, denom, None, c)

    dscale = Fraction(1, den ** jdim)
    mscale = Fraction(1, den ** (jdim + 1))

    def oracle(pt):
        m = full_int(pt)
        nq = [row[:jdim] for row in m[:jdim]]
        r = [row[:jdim] for row in m[jdim:]]
        p = [row[jdim:] for row in m[jdim:]]
        rt = [[r[t][s] for t in range(k)] for s in range(jdim)]
        det, x = bareiss_solve(nq, rt)
        out = [det * dscale]
        if x is not None:
            # M_hat = det * (P - R X), scaled back by den powers
            for i in range(k):
                for jj in range(k):
                    s = Fraction(p[i][jj])
                    for t in range(jdim):
                        s -= r[i][t] * x[t][jj]
                    out.append(det * s * mscale)
        else:
            adj = int_adjugate(nq)
            for i in range(k):
                for jj in range(k):
                    s = 0
                    for t in range(jdim):
                        for u in range(jdim):
                            s += r[i][t] * adj[t][u] * r[jj][u]
                    out.append(Fraction(-s) * mscale)
        return out

    flat = interpolate_poly_map(oracle, CHART_VARS, jdim + 1, 1 + k * k)
    denom = flat[0]
    m_hat = PolyMatrix([[flat[1 + i * k + jj] for jj in range(k)] for i in range(k)])
    return SchurData(k, j, kern, n_j, q_j, r_j, p_j, denom, m_hat, c)


def schur_identity_check(frame, chart: Chart, sd: SchurData, sextic=None) -> bool:
    """det(q_A + q_v) * D^(k-1) == det(M_hat), as exact polynomials.

    Both sides live in the adapted basis; the left side is obtained from
    the chart determinant by the congruence scale det(C)^2.  For k = 0
    the identity degenerates to D == det(q_A + q_v).
    """
    ls = sextic if sextic is not None else local_sextic(frame, chart)
    scale = linalg.det(sd.adapted) ** 2
    f = ls.f * scale
    if sd.k == 0:
        return f == sd.denom
    lhs = f
    for _ in range(sd.k - 1):
        lhs = lhs * sd.denom
    # cofactor expansion: k <= 3, and it avoids large exact divisions
    rhs = det_poly_matrix(sd.m_hat, strategy="cofactor")
    return lhs == rhs


class DoubleCoverData:
    """Generators of the local double-cover ideal, denominators cleared."""

    __slots__ = ("k", "vars", "generators", "notice")

    def __init__(self, k, variables, generators, notice=""):
        self.k = k
        self.vars = variables
        self.generators = generators
        self.notice = notice


def double_cover_ideal(frame, chart: Chart, k_basis=None) -> DoubleCoverData:
    """Equations of the double cover over the chart, in t1..t5, xi1..xik.

    Generators: the k entries of M_hat * xi, then for i <= j the cleared
    fiber equations D^(k-1) * xi_i xi_j - cof(M_hat)_ij.  For k = 0 the
    cover is an unramified double sheet and the ideal is empty.
    """
    sd = schur_complement(frame, chart, k_basis=k_basis)
    k = sd.k
    if k == 0:
        return DoubleCoverData(0, CHART_VARS, [],
                               "etale point: unramified double cover, empty ideal")
    if k > 3:
        raise ValueError("double cover model implemented for kernel dimension <= 3")
    evars = CHART_VARS + tuple("xi%d" % (i + 1) for i in range(k))
    lift = {v: MultiPoly.var(evars, v) for v in CHART_VARS}
    mhat = [[sd.m_hat.entries[i][j].substitute(lift) for j in range(k)] for i in range(k)]
    denom = sd.denom.substitute(lift)
    cof = cofactor_matrix(sd.m_hat)
    cof = [[cof.entries[i][j].substitute(lift) for j in range(k)] for i in range(k)]
    xi = [MultiPoly.var(evars, "xi%d" % (i + 1)) for i in range(k)]
    gens = []
    for i in range(k):
        row = MultiPoly.zero(evars)
        for j in range(k):
            row = row + mhat[i][j] * xi[j]
        gens.append(row)
    dpow = MultiPoly.const(evars, 1)
    for _ in range(k - 1):
        dpow = dpow * denom
    for i in range(k):
        for j in range(i, k):
            gens.append(dpow * xi[i] * xi[j] - cof[i][j])
    return DoubleCoverData(k, evars, gens)


# ---------------------------------------------------------------------
# Plane sextic singularity analyzer
# ---------------------------------------------------------------------


class SexticSingularity:
    __slots__ = ("multiplicity", "reduced", "consecutive_triple", "simple")

    def __init__(self, multiplicity, reduced, consecutive_triple):
        self.multiplicity = multiplicity
        self.reduced = reduced
        self.consecutive_triple = consecutive_triple
        self.simple = bool(
            reduced and multiplicity <= 3
            and not (multiplicity == 3 and consecutive_triple)
        )

    def as_dict(self):
        return {
            "multiplicity": self.multiplicity,
            "reduced": self.reduced,
            "consecutive_triple": self.consecutive_triple,
            "simple": self.simple,
        }


def sextic_singularity(f: MultiPoly, p) -> SexticSingularity:
    """Classify the singularity of a plane sextic at an on-curve point.

    multiplicity: lowest degree of the local Taylor expansion; reduced:
    no repeated component through p (global squarefree part as the
    certificate); consecutive_triple: for multiplicity 3, whether the
    strict transform in the blow-up keeps a triple point over p, checked
    in both charts; simple: the A-D-E condition.
    """
    if len(f.vars) != 3:
        raise ValueError("expected a polynomial in three variables")
    if f.is_zero() or not is_homogeneous(f, 6):
        raise ValueError("expected a nonzero homogeneous sextic")
    p = fvec(p)
    if len(p) != 3 or all(x == 0 for x in p):
        raise ValueError("point must be a nonzero projective triple")
    if f.evaluate(p) != 0:
        raise ValueError("point does not lie on the curve")

    piv = next(i for i in range(3) if p[i] != 0)
    others = [i for i in range(3) if i != piv]
    local_vars = ("x", "y")
    x = MultiPoly.var(local_vars, "x")
    y = MultiPoly.var(local_vars, "y")
    images = {}
    for i in range(3):
        img = MultiPoly.const(local_vars, p[i])
        if i == others[0]:
            img = img + x
        if i == others[1]:
            img = img + y
        images[f.vars[i]] = img
    g = f.substitute(images)

    mult = 0
    while mult <= 6 and homogeneous_part(g, mult).is_zero():
        mult += 1

    sf = squarefree_part(f)
    if sf.degree() == f.degree():
        reduced = True
    else:
        excess = div_exact(f, sf)
        reduced = excess.evaluate(p) != 0

    consecutive = False
    if mult == 3:
        consecutive = _has_consecutive_triple(g)
    return SexticSingularity(mult, reduced, consecutive)


def _binary_cube_root(g3: MultiPoly):
    """For a binary cubic: the linear form l with g3 = c * l^3, else None."""
    c30 = g3.coeff((3, 0))
    c21 = g3.coeff((2, 1))
    c12 = g3.coeff((1, 2))
    c03 = g3.coeff((0, 3))
    x = MultiPoly.var(g3.vars, g3.vars[0])
    y = MultiPoly.var(g3.vars, g3.vars[1])
    if c30 != 0:
        r = c21 / (3 * c30)
        cand = x + r * y
        if c30 * cand ** 3 == g3:
            return cand
        return None
    if c21 == 0 and c12 == 0 and c03 != 0:
        return y
    return None


def _has_consecutive_triple(g: MultiPoly) -> bool:
    """g has multiplicity 3 at the origin; does the strict transform keep a
    point of multiplicity 3 over it?"""
    g3 = homogeneous_part(g, 3)
    ell = _binary_cube_root(g3)
    if ell is None:
        return False  # three tangent directions are not all equal
    a = ell.coeff((1, 0))
    b = ell.coeff((0, 1))
    # tangent direction (x : y) with a x + b y = 0
    parts = [homogeneous_part(g, i) for i in range(3, g.degree() + 1)]
    tvar = ("t",)
    t = MultiPoly.var(tvar, "t")
    if a != 0:
        # direction (-b/a : 1): use the chart x = y (t + t0), exceptional y = 0
        t0 = -b / a
        sub = {g.vars[0]: t + t0, g.vars[1]: MultiPoly.const(tvar, 1)}
    else:
        # direction (1 : 0): chart y = x t, exceptional x = 0
        t0 = Fraction(0)
        sub = {g.vars[0]: MultiPoly.const(tvar, 1), g.vars[1]: t + t0}
    best = None
    for i, gi in enumerate(parts, start=3):
        if gi.is_zero():
            continue
        u = gi.substitute(sub)
        ordt = 0
        while ordt <= u.degree() and u.coeff((ordt,)) == 0:
            ordt += 1
        total = ordt + (i - 3)
        if best is None or total < best:
            best = total
    return best is not None and best >= 3
