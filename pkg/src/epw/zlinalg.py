"""Integer matrix routines for lattice arithmetic.

Smith normal form with unimodular transforms, Hermite form for lattice
bases, saturated kernels, and a fraction-free integer determinant.
"""


def int_det(m):
    """Determinant of an integer matrix by Bareiss elimination (exact)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    piv = i
                    break
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bareiss_solve(m, rhs):
    """Fraction-free solve of an integer system with integer right sides.

    Returns (det, X) with M X = rhs and X a Fraction matrix; X is None
    when M is singular.  Forward elimination is pure integer Bareiss.
    """
    from fractions import Fraction

    j = len(m)
    k = len(rhs[0]) if rhs and rhs[0] else 0
    a = [list(map(int, m[i])) + list(map(int, rhs[i] if rhs else [])) for i in range(j)]
    sign = 1
    prev = 1
    for col in range(j - 1):
        if a[col][col] == 0:
            piv = next((i for i in range(col + 1, j) if a[i][col] != 0), None)
            if piv is None:
                return 0, None
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for i in range(col + 1, j):
            aic = a[i][col]
            acc = a[col][col]
            for c in range(col + 1, j + k):
                a[i][c] = (acc * a[i][c] - aic * a[col][c]) // prev
            a[i][col] = 0
        prev = a[col][col]
    det = sign * a[j - 1][j - 1]
    if det == 0:
        return 0, None
    x = [[None] * k for _ in range(j)]
    for i in range(j - 1, -1, -1):
        for c in range(k):
            s = Fraction(a[i][j + c])
            for t in range(i + 1, j):
                s -= a[i][t] * x[t][c]
            x[i][c] = s / a[i][i]
    return det, x


def int_adjugate(m):
    """Adjugate of an integer matrix by cofactor determinants (any rank)."""
    n = len(m)
    if n == 1:
        return [[1]]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for jj in range(n):
            sub = [[m[r][c] for c in range(n) if c != i] for r in range(n) if r != jj]
            s = int_det(sub)
            out[i][jj] = s if (i + jj) % 2 == 0 else -s
    return out


def smith_normal_form(m):
    """Smith normal form with transforms.

    Returns (d, u, v) where u m v = d, u and v unimodular and d diagonal
    with d[i] | d[i+1].  d is returned as a full matrix of the same shape.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, row)) for row in m]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in a:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(rows, cols):
        # find a pivot of minimal absolute value in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility fix-up: pivot must divide the rest of the block
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v


def invariant_factors(m):
    d, _, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i] != 0]


def int_kernel(m):
    """Basis of the saturated kernel {x : m x = 0} of an integer matrix.

    Rows of the result form a basis of the kernel lattice.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        return [[int(i == j) for j in range(cols)] for i in range(cols)]
    d, _, v = smith_normal_form(m)
    zero_cols = [j for j in range(cols) if j >= rows or d[j][j] == 0]
    return [[v[i][j] for i in range(cols)] for j in zero_cols]


def hnf_row_basis(gens):
    """Row Hermite basis of the lattice spanned by integer row vectors.

    Returns a list of linearly independent rows (upper triangular shape).
    """
    a = [list(map(int, row)) for row in gens if any(row)]
    if not a:
        return []
    cols = len(a[0])
    out = []
    work = a
    for col in range(cols):
        pos = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not pos:
            work = rest
            continue
        while len(pos) > 1:
            pos.sort(key=lambda r: abs(r[col]))
            p = pos[0]
            newpos = [p]
            for r in pos[1:]:
                q = r[col] // p[col]
                r2 = [x - q * y for x, y in zip(r, p)]
                if r2[col] != 0:
                    newpos.append(r2)
                elif any(r2):
                    rest.append(r2)
            if len(newpos) == 1:
                pos = newpos
                break
            pos = newpos
        p = pos[0]
        if p[col] < 0:
            p = [-x for x in p]
        out.append(p)
        work = rest
    # reduce entries above pivots for a canonical-ish form
    for i in range(len(out) - 1, -1, -1):
        pc = next(j for j in range(cols) if out[i][j] != 0)
        for k in range(i):
            if out[k][pc] != 0:
                q = out[k][pc] // out[i][pc]
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def lattice_basis_from_rational_gens(gens):
    """Basis of the lattice generated by rational row vectors.

    Returns (basis_rows, denominator): basis_rows are integer rows and the
    lattice is (1/denominator) * rowspan_Z(basis_rows).
    """
    from fractions import Fraction
    from math import lcm

    den = 1
    for row in gens:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in row] for row in gens]
    return hnf_row_basis(scaled), den
