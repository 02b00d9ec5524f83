"""
Component groups
================

pi_0 of the centralizer in PGL_n is the group of twists whose stratum holds
an invertible matrix.  Its invariant factors come from a Smith normal form.
"""

from pglcent.compgroup import component_group
from pglcent.cyclofield import CycNum
from pglcent.exactla import Matrix, diag
from pglcent.families import FamilySpec, build_family
from pglcent.twistcent import GeneratorSet

# Pauli matrices: they anticommute, so each twist pattern is realised
pauli = GeneratorSet.from_rows([[[0, 1], [1, 0]], [[1, 0], [0, -1]]])
r = component_group(pauli)
print("pauli:", r.iso_label, r.invariant_factors, r.nonempty_twists)

# clock and shift in dimension 3
w = CycNum.root(3)
clock = diag([1, w, w * w], 3)
shift = Matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]], 3)
r = component_group(GeneratorSet((clock, shift)))
print("clock/shift:", r.iso_label, "order", r.group_order)

# the built-in families
for fid, params in [
    ("principal-series", {"a1": 2, "a2": 3}),
    ("principal-series", {"a1": w, "a2": w * w}),
    ("steinberg3", {}),
    ("dihedral-chi", {"c": 5}),
    ("tetrahedral-chi", {"c": 5}),
    ("steinberg2-chi", {"k": 5}),
]:
    r = component_group(build_family(FamilySpec(fid, params)))
    print(f"{fid:18s} centralizer dim {r.centralizer_dim}  ->  {r.iso_label}")
