"""The trefoil as the closure of sigma_1^3, worked through every route.

Run with ``python demos/trefoil_walkthrough.py``.
"""

from fiedlerburau import (
    BraidWord,
    alexander_closed_braid_with_axis,
    burau_matrix,
    charpoly_newton,
    fiedler_from_burau,
    fiedler_statesum,
    jet_expansion,
    render_fiedler,
    writhe,
)
from fiedlerburau.fiedler import crossing_m_values

beta = BraidWord.from_ints([1, 1, 1])
print("braid:", beta, "on", beta.n, "strands, writhe", writhe(beta))

# Smoothing each crossing in turn: the ascending string closes up after m(r) trips.
print("m(r) for each crossing:", crossing_m_values(beta))
print("state sum F =", render_fiedler(fiedler_statesum(beta)))

B = burau_matrix(beta)
print()
print("Burau matrix:")
print(B.format())

cp = charpoly_newton(B)
print()
print("det(I - x B(t)) =", cp)

a0, a1 = jet_expansion(beta)
print("at t = e^h:  h^0 part", a0, "  h^1 part", a1)
print("so f_1 =", a1[1], "and f_2 =", a1[2], "(= -writhe)")
print("Burau route F =", render_fiedler(fiedler_from_burau(beta)))

print()
print("Alexander polynomial of closure plus axis:", alexander_closed_braid_with_axis(beta))
