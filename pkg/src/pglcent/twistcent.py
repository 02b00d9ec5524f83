"""Twisted commutation strata ``{X : X A_i = zeta^e_i A_i X for all i}``.

For invertible A, B the class [B] centralizes [A] in PGL_n exactly when
``A B = xi B A`` for some scalar xi, and taking determinants forces xi^n = 1.
So the centralizer of a finitely generated subgroup of PGL_n is the union,
over twist tuples ``(e_1, ..., e_k)`` in (Z/mZ)^k with m = n, of the invertible
points of the linear spaces solved here.

The linear system for one generator is built against the row-major vec
convention of :mod:`pglcent.exactla`: row ``i*n + j`` of the system matrix
holds the coefficients of entry (i, j) of ``X A - xi A X``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .cyclofield import CycNum, FieldMismatchError
from .exactla import LinearSpace, Matrix, mat_det, rref, rref_kernel, unvec

__all__ = [
    "GeneratorSet",
    "Stratum",
    "EMPTY_SPACE",
    "NO_INVERTIBLE",
    "WITNESSED",
    "DEFAULT_TRIALS",
    "DEFAULT_COEFF_BOUND",
    "build_twisted_system",
    "solve_stratum",
    "find_invertible",
    "centralizer",
    "all_twists",
    "det_polynomial",
    "stratum_residual_ok",
]

EMPTY_SPACE = "empty-space"
NO_INVERTIBLE = "no-invertible"
WITNESSED = "nonempty-with-witness"

DEFAULT_TRIALS = 32
DEFAULT_COEFF_BOUND = 10


@dataclass(frozen=True)
class GeneratorSet:
    """Invertible n x n generators of a subgroup of PGL_n, over Q(zeta_m).

    ``m`` is both the field order and the modulus of the twist exponents.
    """

    gens: tuple[Matrix, ...]
    order: int | None = None

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("a generator set needs at least one matrix")
        n = gens[0].nrows
        order = self.order if self.order is not None else n
        object.__setattr__(self, "order", order)
        for idx, A in enumerate(gens):
            if not A.is_square or A.nrows != n:
                raise ValueError(f"generator {idx} is {A.nrows}x{A.ncols}, expected {n}x{n}")
            if A.order != order:
                raise FieldMismatchError(
                    f"generator {idx} has entries in Q(zeta_{A.order}), expected order {order}"
                )
            if mat_det(A).is_zero():
                raise ValueError(f"generator {idx} is singular (det = 0)")

    @classmethod
    def from_rows(cls, mats, order=None) -> GeneratorSet:
        """Build from nested lists; the field order defaults to the dimension."""
        mats = list(mats)
        if order is None:
            order = len(mats[0])
        return cls(tuple(Matrix(rows, order) for rows in mats), order)

    @property
    def n(self) -> int:
        return self.gens[0].nrows

    @property
    def m(self) -> int:
        return self.order

    @property
    def k(self) -> int:
        return len(self.gens)

    def __len__(self):
        return len(self.gens)

    def appended(self, *extra: Matrix) -> GeneratorSet:
        return GeneratorSet(self.gens + tuple(extra), self.order)

    def mapped(self, fn) -> GeneratorSet:
        return GeneratorSet(tuple(fn(A) for A in self.gens), self.order)


@dataclass(frozen=True)
class Stratum:
    twist: tuple[int, ...]
    space: LinearSpace
    witness: Matrix | None = field(default=None)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def status(self) -> str:
        if self.space.dim == 0:
            return EMPTY_SPACE
        return WITNESSED if self.witness is not None else NO_INVERTIBLE

    @property
    def nonempty(self) -> bool:
        return self.witness is not None


def all_twists(m: int, k: int):
    """Every twist tuple of length k, in lexicographic order."""
    return list(product(range(m), repeat=k))


def _twisted_rows(A: Matrix, xi: CycNum):
    n = A.n
    zero = CycNum.zero(A.order)
    L = [[zero] * (n * n) for _ in range(n * n)]
    a = A.rows
    for i in range(n):
        for j in range(n):
            row = L[i * n + j]
            # (XA)_ij = sum_k X_ik A_kj
            for k in range(n):
                if a[k][j]:
                    row[i * n + k] = row[i * n + k] + a[k][j]
            # (A X)_ij = sum_k A_ik X_kj
            for k in range(n):
                if a[i][k]:
                    row[k * n + j] = row[k * n + j] - xi * a[i][k]
    return L


def build_twisted_system(A: Matrix, xi: CycNum) -> Matrix:
    """The n^2 x n^2 matrix L with ``L vec(X) = vec(X A - xi A X)``."""
    if xi.order != A.order:
        raise FieldMismatchError(f"xi lives in Q(zeta_{xi.order}), matrix in Q(zeta_{A.order})")
    if not (xi**A.order).is_one():
        raise ValueError(f"{xi} is not a {A.order}-th root of unity")
    return Matrix._raw(_twisted_rows(A, xi), A.order)


def _check_twist(gens, twist):
    twist = tuple(int(e) for e in twist)
    if len(twist) != gens.k:
        raise ValueError(f"twist has {len(twist)} exponents for {gens.k} generators")
    if any(not 0 <= e < gens.m for e in twist):
        raise ValueError(f"twist exponents must lie in [0, {gens.m}), got {twist}")
    return twist


def solve_stratum(
    gens: GeneratorSet,
    twist,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> Stratum:
    """Solve all k twisted equations at once and look for an invertible solution."""
    twist = _check_twist(gens, twist)
    n, m = gens.n, gens.m
    rows, pivots = [], []
    for A, e in zip(gens.gens, twist):
        rows, pivots = rref(rows + _twisted_rows(A, CycNum.root(m, e)), n * n)
        if len(pivots) == n * n:
            break
    basis = [unvec(v, n, m) for v in rref_kernel(rows, pivots, n * n, m)]
    space = LinearSpace(n, m, basis)
    witness = None
    if space.dim:
        rng = random.Random(f"{seed}:{','.join(map(str, twist))}")
        witness = find_invertible(space, rng=rng, trials=trials, coeff_bound=coeff_bound)
    return Stratum(twist, space, witness)


def centralizer(gens: GeneratorSet, **kwargs) -> Stratum:
    """The untwisted stratum: matrices commuting with every generator."""
    return solve_stratum(gens, (0,) * gens.k, **kwargs)


# -- invertible elements of a matrix space ---------------------------------
#
# Polynomials in the combination coefficients t_0..t_{d-1} are dicts mapping
# exponent tuples to nonzero CycNum.


def _poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = out.get(e)
            c = c1 * c2 if c is None else c + c1 * c2
            if c.is_zero():
                out.pop(e, None)
            else:
                out[e] = c
    return out


def _poly_add(p, q, sign=1):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e)
        v = (c if sign > 0 else -c) if v is None else (v + c if sign > 0 else v - c)
        if v.is_zero():
            out.pop(e, None)
        else:
            out[e] = v
    return out


def det_polynomial(space: LinearSpace) -> dict:
    """``det(sum_j t_j B_j)`` expanded as a polynomial in the t_j.

    Laplace expansion along rows, memoized on the set of used columns, so the
    cost is about 2^n * n polynomial products.
    """
    n, d = space.n, space.dim
    entries = [[{} for _ in range(n)] for _ in range(n)]
    for j, B in enumerate(space.basis):
        e = tuple(1 if t == j else 0 for t in range(d))
        for r in range(n):
            for c in range(n):
                x = B.rows[r][c]
                if x:
                    entries[r][c][e] = x
    one = {(0,) * d: CycNum.one(space.order)}
    # minors[S] = det of rows 0..|S|-1 restricted to column set S (bitmask)
    minors = {0: one}
    for r in range(n):
        nxt = {}
        for S, sub in minors.items():
            if not sub:
                continue
            for c in range(n):
                if S >> c & 1 or not entries[r][c]:
                    continue
                # sign of placing column c after the columns of S greater than c
                sign = -1 if bin(S >> (c + 1)).count("1") % 2 else 1
                term = _poly_mul(sub, entries[r][c])
                T = S | (1 << c)
                nxt[T] = _poly_add(nxt.get(T, {}), term, sign)
        minors = nxt
    return minors.get((1 << n) - 1, {})


def _substitute(poly, var, value):
    out = {}
    for e, c in poly.items():
        c = c * (value ** e[var]) if e[var] else c
        if c.is_zero():
            continue
        e2 = e[:var] + (0,) + e[var + 1 :]
        v = out.get(e2)
        v = c if v is None else v + c
        if v.is_zero():
            out.pop(e2, None)
        else:
            out[e2] = v
    return out


def find_invertible(
    space: LinearSpace,
    rng: random.Random | None = None,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> Matrix | None:
    """An invertible element of ``span(space.basis)``, or None if there is none.

    Tries the basis elements, then the plain sum of the basis, then random
    integer combinations, and finally decides exactly by expanding the
    determinant polynomial.  A nonzero polynomial of degree <= n in each
    variable has a nonvanishing point on {0..n}^d, found one coordinate at a
    time.  Witnesses are scaled so their first nonzero entry is 1.
    """
    if space.dim == 0:
        return None
    if rng is None:
        rng = random.Random(0)
    for B in space.basis:
        if mat_det(B):
            return B.normalized()
    if space.dim > 1:
        S = space.combine([1] * space.dim)
        if mat_det(S):
            return S.normalized()
    for _ in range(trials):
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in space.basis]
        X = space.combine(coeffs)
        if mat_det(X):
            return X.normalized()
    poly = det_polynomial(space)
    if not poly:
        return None
    point = []
    for var in range(space.dim):
        for value in range(space.n + 1):
            reduced = _substitute(poly, var, CycNum.rational(space.order, value))
            if reduced:
                poly = reduced
                point.append(value)
                break
        else:  # pragma: no cover - excluded by the degree bound
            raise AssertionError("no nonvanishing grid value for a nonzero polynomial")
    X = space.combine(point)
    assert mat_det(X), "grid point does not give an invertible element"
    return X.normalized()


def stratum_residual_ok(gens: GeneratorSet, stratum: Stratum) -> bool:
    """True when every basis element satisfies its twisted equations exactly."""
    for A, e in zip(gens.gens, stratum.twist):
        xi = CycNum.root(gens.m, e)
        for B in stratum.space.basis:
            if not (B @ A - (A @ B).scale(xi)).is_zero():
                return False
    return True

