"""Both routes to Fiedler's invariant on a batch of random knot-closure braids."""

import random

from fiedlerburau import fiedler_from_burau, fiedler_statesum, random_braid, render_fiedler, writhe
from fiedlerburau.harness import valid_lengths

rng = random.Random(2024)
agree = 0
for trial in range(12):
    n = rng.randint(2, 7)
    k = rng.choice(valid_lengths(n, 1, 20))
    beta = random_braid(n, k, seed=rng.getrandbits(32), require_knot=True)
    F = fiedler_statesum(beta)
    G = fiedler_from_burau(beta)
    agree += F == G
    print(f"n={n} w={writhe(beta):+d}  {render_fiedler(F):<40} {'ok' if F == G else 'MISMATCH'}")

print(f"{agree}/12 agree")
