"""Exact combinatorics of type-A tableau crystals.

The package realizes highest-weight crystals as semistandard tableaux,
walks them along a fixed reduced word to produce decorated triangles,
and uses the resulting coefficients to verify a deformed character
identity and to tabulate deformed weight multiplicities, all in exact
integer arithmetic.
"""

from .bzl import (
    DecoratedTriangle,
    LongWord,
    bzl_path,
    c_coefficient,
    decorate_via_operators,
    decorate_via_stats,
    g_coefficient,
    long_word,
    path_entry_sum,
    triangle_from_json,
)
from .crystal import (
    TensorElement,
    e_op,
    enumerate_crystal,
    epsilon,
    f_op,
    highest_weight_tableau,
    i_signature,
    phi,
    reading_word,
    tensor_e_op,
    tensor_f_op,
)
from .hpoly import (
    HTable,
    SpecPoint,
    h_direct,
    h_table,
    h_tensor,
    specialize,
    tensor_weight_multiplicity,
    weight_multiplicity,
)
from .laurent import (
    IdentityReport,
    LaurentPoly,
    character,
    cs_lhs,
    cs_rhs,
    deformed_product,
    verify_bn_form,
    verify_identity,
)
from .rootsys import (
    AlphaVector,
    GLWeight,
    Shape,
    alpha_to_gl,
    dot_action,
    dot_orbit_sign,
    gl_to_alpha,
    lambda_from_fundamental,
    rho,
    simple_root,
    theta,
)
from .tableaux import (
    Segment,
    Tableau,
    TriangularArray,
    content,
    is_strict,
    make_tableau,
    parse_tableau,
    segments,
    stats_a,
    stats_b,
    tableau_from_json,
)
from .tpoly import QLaurent, TPoly

__version__ = "0.1.0"
