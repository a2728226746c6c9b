"""Reading Fiedler's invariant back out of an Alexander polynomial known only up to units.

The polynomial is scrambled by an arbitrary unit +-x^a t^b first, as it
would be if it came from some other program with its own normalisation.
"""

from fiedlerburau import (
    alexander_closed_braid_with_axis,
    fiedler_statesum,
    parse_braid_word,
    recover_fiedler_from_alexander,
    render_fiedler,
    scramble_units,
    writhe,
)

beta = parse_braid_word("1 -2 1 2 2 -3 2", 4)
delta = alexander_closed_braid_with_axis(beta)
print("braid:", beta)
print("Delta:", delta)

messy = scramble_units(delta, a=3, b=-2, sign=-1)
print("after multiplying by -x^3 t^-2:", messy)

res = recover_fiedler_from_alexander(messy, beta.n)
print()
print("recovered F =", render_fiedler(res.fiedler))
print("direct    F =", render_fiedler(fiedler_statesum(beta)))
# the t^b ambiguity moves weight between f_0 and f_n but not their sum
print(f"f0 = {res.f0}, f{beta.n} = {res.fn}, sum = {res.f0 + res.fn}, -writhe = {-writhe(beta)}")
