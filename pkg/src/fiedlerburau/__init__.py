"""Fiedler's small state-sum invariant of closed braids, computed exactly.

Two independent routes give the invariant: the state sum over crossing
smoothings, and the ``h``-linear part of ``det(I - x B(e^h))`` for the
Burau matrix ``B(t)``. The same numbers are recovered from the Alexander
polynomial of the closed braid together with its axis.
"""

__version__ = "0.1.0"

from .alexander import (
    BivariatePoly,
    GeneralLinkInvariant,
    RecoveryError,
    RecoveryResult,
    alexander_closed_braid_with_axis,
    general_link_invariant,
    recover_fiedler_from_alexander,
    scramble_units,
)
from .braidword import (
    BraidError,
    BraidWord,
    Permutation,
    closure_component_count,
    concat,
    conjugate,
    inverse,
    is_knot_closure,
    parse_braid_word,
    permutation_of,
    random_braid,
    smoothed_pass_permutation,
    writhe,
)
from .burau import (
    Matrix,
    burau_generator,
    burau_jet_matrix,
    burau_matrix,
    charpoly_cofactor,
    charpoly_newton,
    f_from_traces,
    jet_expansion,
    power_sum_traces,
    verify_determinant,
)
from .fiedler import (
    FiedlerPoly,
    ascending_start,
    fiedler_from_burau,
    fiedler_statesum,
    m_of_crossing,
    render_fiedler,
    verify_routes,
)
from .polyring import ExactDivisionError, Jet1, LaurentPoly, XPoly
