"""
Twisted commutation strata
==========================

For a generator A and an m-th root of unity xi, the stratum is the linear
space of X with X A = xi A X.  An invertible element in it centralizes the
class of A in PGL_n.
"""

from pglcent.cyclofield import CycNum
from pglcent.exactla import diag
from pglcent.twistcent import GeneratorSet, all_twists, solve_stratum

w = CycNum.root(3)
A = diag([w, w * w, 1], 3)
gens = GeneratorSet((A,))

for twist in all_twists(3, 1):
    s = solve_stratum(gens, twist)
    print(f"twist {twist}: dim {s.dim}, status {s.status}")
    for B in s.space.basis:
        print("   ", B.to_text())
    if s.witness is not None:
        X = s.witness
        print("    witness", X.to_text())
        # check the twisted relation by hand
        xi = CycNum.root(3, twist[0])
        print("    X A == xi A X:", X @ A == (A @ X).scale(xi))

# a generic diagonal only commutes with diagonals
generic = GeneratorSet((diag([2, 3, 1], 3),))
print([solve_stratum(generic, t).dim for t in all_twists(3, 1)])
