"""
Arithmetic in Q(zeta_m)
=======================

Elements are polynomials in z reduced modulo the m-th cyclotomic polynomial,
with exact rational coefficients.
"""

from pglcent.cyclofield import CycNum, cyclotomic_poly, parse_cyc

w = CycNum.root(3)
print("w       =", w)
print("w^2     =", w * w)          # z^2 = -1 - z modulo 1 + z + z^2
print("w^3     =", w**3)
print("1/(1+w) =", (1 + w).inverse())

# the reduction polynomials themselves
for m in (3, 4, 5, 8, 12):
    print(m, cyclotomic_poly(m))

# expressions use the same grammar as problem files
x = parse_cyc(8, "(1 + z)^3 / 2")
print(x, "  times its inverse:", x * x.inverse())
