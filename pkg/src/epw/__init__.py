"""Exact-arithmetic toolkit for EPW sextics.

Local determinantal models of the degeneracy sextic and its double
cover, the variable-quadratic-form calculus, even-lattice discriminant
and root-orbit machinery, and the Hilbert-square Pell-class analysis.
All computations are over the rationals or the integers; there are no
floats and no tolerances.
"""

__version__ = "0.1.0"

from .poly import (
    MultiPoly,
    homogeneous_part,
    homogeneous_parts,
    squarefree_part,
    poly_from_text,
)
from .polymat import PolyMatrix, det_poly_matrix, adjugate_poly_matrix
from .zroot2 import QuadInt
from .wedge import (
    LagrangianFrame,
    Subspace3,
    symplectic_pairing,
    is_lagrangian,
    degeneracy_dim,
    decompose_trivector,
    sigma_level,
    dual_membership,
    curve_membership,
    bscript_membership,
    curve_smooth_at,
    lagrangian_containing,
    lagrangian_from_graph,
    lagrangian_from_graph_basis,
)
from .local_model import (
    Chart,
    ChartError,
    make_chart,
    local_sextic,
    taylor_order_check,
    rank_f2,
    schur_complement,
    schur_identity_check,
    double_cover_ideal,
    sextic_singularity,
)
from .varquad import (
    QuadSpace,
    PencilFamily,
    cork_restrict,
    dual_form,
    wedge_power_form,
    phi_expansion,
    phi2_rank,
)
from .lattices import (
    EvenLattice,
    DiscGroup,
    disc_group,
    divisibility_and_star,
    is_root,
    eichler_equivalent,
    classify_negative_root,
    reflection,
    iota_swap,
    overlattices,
    sublattice_index_and_discr,
    orth_complement,
)
from .hilbert_square import (
    HilbClass,
    NSRank2,
    bb_form,
    fujiki_quartic,
    conic_class_arithmetic,
    delta_case_check,
    degree2_case_check,
    pell_square_two_classes,
    trace_pairing,
    alpha_class,
    is_effective_double,
    obstruction_pairing,
)
