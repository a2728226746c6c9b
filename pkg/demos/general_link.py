"""The a1 mod a0 invariant for a link that need not come with its braid."""

from fiedlerburau import BivariatePoly, alexander_closed_braid_with_axis, general_link_invariant, parse_braid_word

# As a check, first a closed braid plus axis, where a0 is forced to be 1 + x + ... + x^(n-1).
beta = parse_braid_word("1 2 -1 2", 3)
inv = general_link_invariant(alexander_closed_braid_with_axis(beta))
print("closed braid:", beta)
print("  a0 =", inv.a0, "  a1 =", inv.a1, "  a1 mod a0 =", inv.a1_reduced)

# A hand-written polynomial with a unit factor in front; the shift is undone first.
delta = BivariatePoly.parse("x^-2 + t^2*x^-1 - t*x^-1 + t^3")
inv = general_link_invariant(delta)
print()
print("Delta:", delta)
print("  x shift", inv.x_shift, "  a0 =", inv.a0, "  a1 =", inv.a1, "  a1 mod a0 =", inv.a1_reduced)

# When a0 is not monic the remainder would need fractions, so none is reported.
inv = general_link_invariant(BivariatePoly.parse("1 + 2*t*x^2"))
print()
print("non-monic a0:", inv.a0, " reduced:", inv.a1_reduced)
