"""Simple singularities of plane sextic curves.

A point is a simple singularity when the curve is reduced there, the
multiplicity is at most 3, and a triple point does not stay triple after
one blow-up.  These are exactly the A-D-E points relevant to double
covers of the plane.
"""

from epw.local_model import sextic_singularity
from epw.poly import poly_from_text

XYZ = ("x", "y", "z")
P = lambda s: poly_from_text(s, XYZ)

cases = [
    ("smooth point", P("x^6 + y^6 - 2*z^6"), [1, 1, 1]),
    ("node (conic x quartic)",
     P("x^2 + y^2 - z^2") * P("x^3*y + x^4 + x*z^3 - 2*z^4"), [1, 0, 1]),
    ("cusp", P("x^3 - y^2*z") * P("x^3 + y^3 + z^3"), [0, 0, 1]),
    ("ordinary triple point",
     P("x*y") * P("x + y") * P("z^3") - P("x^6 + y^6"), [0, 0, 1]),
    ("consecutive triple point", P("x^6 - y^3*z^3"), [0, 0, 1]),
    ("triple line", P("x") ** 3 * P("x^3 + y^3 + z^3"), [0, 1, 0]),
]

for label, f, p in cases:
    r = sextic_singularity(f, p)
    print("%-28s mult=%d reduced=%-5s consecutive=%-5s simple=%s"
          % (label, r.multiplicity, r.reduced, r.consecutive_triple, r.simple))
