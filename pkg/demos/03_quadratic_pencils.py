"""The graded expansion of det(q_* + q) for a pencil of quadratic forms.

Three exact facts drive the local geometry: the first nonzero graded
piece is det(q restricted to ker q_*); on families vanishing on the
kernel the first piece jumps to degree 2k and is a dual-form
determinant; and for corank one the rank of the quadratic piece is a
codimension minus a corank.
"""

from fractions import Fraction

from epw.varquad import (
    PencilFamily, QuadSpace, degenerate_cone_check, phi2_rank, phi_expansion,
    wedge_power_form, dual_form,
)


def diag(*entries):
    n = len(entries)
    return [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


# the worked corank-1 example: q_* = diag(0,1,1), family spanned by xy
base = QuadSpace(diag(0, 1, 1))
b = [[Fraction(0), Fraction(1, 2), Fraction(0)],
     [Fraction(1, 2), Fraction(0), Fraction(0)],
     [Fraction(0), Fraction(0), Fraction(0)]]
fam = PencilFamily(base, [b])
phis = phi_expansion(fam)
print("det(q_* + t*q) =", " + ".join(p.to_text() for p in phis if not p.is_zero()))
lhs, rhs, equal = phi2_rank(fam)
print("rank Phi_2 = %d, codim - corank = %d, equal: %s" % (lhs, rhs, equal))

# kernel-block statement on a corank-2 example
base = QuadSpace(diag(0, 0, 1, 1))
fam = PencilFamily(base, [diag(1, 2, 0, 0), diag(0, 1, 1, 0)])
ok, c, phis = degenerate_cone_check(fam)
print("\ncorank-2 base: Phi_0 = Phi_1 = 0:",
      phis[0].is_zero() and phis[1].is_zero())
print("Phi_2 = c * det(q|_K) with c =", c, "->", ok)

# the wedge power on decomposables is a restricted Gram determinant
q = QuadSpace(diag(2, 3, 5))
w2 = wedge_power_form(q, 2)
print("\nwedge square of diag(2,3,5):", [w2.gram[i][i] for i in range(3)])
print("dual of diag(2,3):", dual_form(QuadSpace(diag(2, 3))).gram)
