"""Dense exact linear algebra over Q(zeta_m).

Matrices are immutable tuples of rows of :class:`CycNum`.  Vectorization is
row-major throughout: ``vec(X)`` lists row 1, then row 2, and so on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from numbers import Rational

from .cyclofield import CycNum, FieldMismatchError, parse_cyc

__all__ = [
    "Matrix",
    "SquareMatrix",
    "LinearSpace",
    "SingularMatrixError",
    "identity",
    "diag",
    "elementary",
    "mat_mul",
    "mat_det",
    "mat_inv",
    "mat_rank",
    "mat_kernel",
    "rref",
    "rref_kernel",
    "vec",
    "unvec",
]


class SingularMatrixError(ArithmeticError):
    pass


def _entry(order, x):
    if isinstance(x, CycNum):
        if x.order != order:
            raise FieldMismatchError(f"entry lives in Q(zeta_{x.order}), expected order {order}")
        return x
    if isinstance(x, str):
        return parse_cyc(order, x)
    if isinstance(x, (int, Rational)):
        return CycNum.rational(order, Fraction(x))
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class Matrix:
    """Rectangular matrix over Q(zeta_order).

    Entries may be given as CycNum, ints, Fractions or expression strings::

        >>> Matrix([[0, 1], ["z", 0]], order=3).rows[1][0]
        CycNum(3, 'z')
    """

    __slots__ = ("order", "rows", "nrows", "ncols", "_hash")

    def __init__(self, rows, order: int):
        rows = tuple(tuple(_entry(order, x) for x in row) for row in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self.order = order
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows, order):
        # skip coercion; rows already hold CycNum of the right order
        m = object.__new__(cls)
        m.order = order
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = len(m.rows[0]) if m.rows else 0
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows, ncols, order):
        z = CycNum.zero(order)
        return cls._raw([[z] * ncols for _ in range(nrows)], order)

    @property
    def n(self):
        if self.nrows != self.ncols:
            raise ValueError(f"{self.nrows}x{self.ncols} matrix is not square")
        return self.nrows

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.rows))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.to_text()}, order={self.order})"

    def to_text(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def transpose(self) -> Matrix:
        return Matrix._raw(zip(*self.rows), self.order) if self.rows else self

    def scale(self, c) -> Matrix:
        c = _entry(self.order, c)
        return Matrix._raw([[c * x for x in r] for r in self.rows], self.order)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_same_shape(self, other)
        return Matrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.order
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        _check_same_shape(self, other)
        return Matrix._raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.order
        )

    def __neg__(self):
        return Matrix._raw([[-a for a in r] for r in self.rows], self.order)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def normalized(self) -> Matrix:
        """Scale so that the first nonzero entry in row-major order is 1."""
        for r in self.rows:
            for x in r:
                if not x.is_zero():
                    return self if x.is_one() else self.scale(x.inverse())
        return self


SquareMatrix = Matrix


def _check_same_shape(a, b):
    if a.order != b.order:
        raise FieldMismatchError(f"matrix orders differ: {a.order} vs {b.order}")
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValueError(f"shape mismatch: {a.nrows}x{a.ncols} vs {b.nrows}x{b.ncols}")


def identity(n: int, order: int) -> Matrix:
    return diag([1] * n, order)


def diag(entries, order: int) -> Matrix:
    n = len(entries)
    entries = [_entry(order, x) for x in entries]
    z = CycNum.zero(order)
    return Matrix._raw([[entries[i] if i == j else z for j in range(n)] for i in range(n)], order)


def elementary(n: int, i: int, j: int, order: int) -> Matrix:
    """The matrix unit E_ij (0-based indices)."""
    return Matrix([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)], order)


def vec(X: Matrix) -> list[CycNum]:
    return [x for r in X.rows for x in r]


def unvec(v, n: int, order: int) -> Matrix:
    v = list(v)
    if len(v) != n * n:
        raise ValueError(f"vector of length {len(v)} does not reshape to {n}x{n}")
    return Matrix._raw([v[i * n : (i + 1) * n] for i in range(n)], order)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.order != B.order:
        raise FieldMismatchError(f"matrix orders differ: {A.order} vs {B.order}")
    if A.ncols != B.nrows:
        raise ValueError(f"cannot multiply {A.nrows}x{A.ncols} by {B.nrows}x{B.ncols}")
    zero = CycNum.zero(A.order)
    cols = list(zip(*B.rows))
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = zero
            for a, b in zip(r, c):
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return Matrix._raw(out, A.order)


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def mat_det(A: Matrix) -> CycNum:
    """Cofactor (Leibniz) expansion for n <= 4, fraction-free Bareiss above."""
    n = A.n
    order = A.order
    if n == 0:
        return CycNum.one(order)
    if n <= 4:
        total = CycNum.zero(order)
        for p in permutations(range(n)):
            term = CycNum.one(order)
            for i in range(n):
                term = term * A.rows[i][p[i]]
                if term.is_zero():
                    break
            else:
                total = total + term if _perm_sign(p) > 0 else total - term
        return total
    M = [list(r) for r in A.rows]
    sign = 1
    prev = CycNum.one(order)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return CycNum.zero(order)
        piv = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * piv - M[i][k] * M[k][j]) / prev
            M[i][k] = CycNum.zero(order)
        prev = piv
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(rows, ncols=None):
    """Reduced row echelon form of a list of CycNum rows.

    Pivot is the first nonzero entry scanning down each column; returns
    ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    M = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        for i in range(r, len(M)):
            if not M[i][c].is_zero():
                break
        else:
            continue
        M[r], M[i] = M[i], M[r]
        piv = M[r][c]
        # entries left of c are already zero in the pivot row
        if not piv.is_one():
            inv = piv.inverse()
            M[r][c:] = [x * inv if x else x for x in M[r][c:]]
        tail = [(j, y) for j, y in enumerate(M[r][c:], c) if y]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if not f.is_zero():
                    row = M[i]
                    for j, y in tail:
                        row[j] = row[j] - f * y
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _rows_of(M):
    if isinstance(M, Matrix):
        return M.rows, M.ncols, M.order
    rows = [list(r) for r in M]
    if not rows:
        raise ValueError("cannot infer width of an empty row list")
    return rows, len(rows[0]), rows[0][0].order


def mat_rank(M) -> int:
    rows, ncols, _ = _rows_of(M)
    return len(rref(rows, ncols)[1])


def mat_kernel(M) -> list[list[CycNum]]:
    """Basis of the right nullspace ``{v : M v = 0}``.

    One basis vector per free column, in increasing column order, with that
    free variable set to 1 and the other free variables set to 0.
    """
    rows, ncols, order = _rows_of(M)
    R, pivots = rref(rows, ncols)
    return rref_kernel(R, pivots, ncols, order)


def rref_kernel(R, pivots, ncols: int, order: int) -> list[list[CycNum]]:
    """:func:`mat_kernel` for a matrix already in reduced row echelon form."""
    pivset = set(pivots)
    zero, one = CycNum.zero(order), CycNum.one(order)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(R, pivots):
            if not row[f].is_zero():
                v[p] = -row[f]
        basis.append(v)
    return basis


def mat_inv(A: Matrix) -> Matrix:
    n = A.n
    order = A.order
    zero, one = CycNum.zero(order), CycNum.one(order)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(A.rows)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise SingularMatrixError("matrix is singular")
    return Matrix._raw([r[n:] for r in R[:n]], order)


class LinearSpace:
    """A subspace of n x n matrices, given by an independent basis."""

    __slots__ = ("n", "order", "basis")

    def __init__(self, n: int, order: int, basis=()):
        self.n = n
        self.order = order
        self.basis = tuple(basis)
        for B in self.basis:
            if B.order != order or B.nrows != n or B.ncols != n:
                raise ValueError("basis element does not live in the ambient matrix space")
        if self.basis and mat_rank([vec(B) for B in self.basis]) != len(self.basis):
            raise ValueError("basis elements are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"LinearSpace(n={self.n}, order={self.order}, dim={self.dim})"

    # equality is on the stored basis; use same_span for subspace equality
    def __eq__(self, other):
        if not isinstance(other, LinearSpace):
            return NotImplemented
        return (self.n, self.order, self.basis) == (other.n, other.order, other.basis)

    def __hash__(self):
        return hash((self.n, self.order, self.basis))

    def contains(self, X: Matrix) -> bool:
        if X.is_zero():
            return True
        if not self.basis:
            return False
        rows = [vec(B) for B in self.basis]
        return mat_rank(rows + [vec(X)]) == len(rows)

    def __contains__(self, X):
        return self.contains(X)

    def same_span(self, other: LinearSpace) -> bool:
        if self.dim != other.dim:
            return False
        return all(other.contains(B) for B in self.basis)

    def combine(self, coeffs) -> Matrix:
        """The element sum_j coeffs[j] * basis[j]."""
        out = Matrix.zeros(self.n, self.n, self.order)
        for c, B in zip(coeffs, self.basis):
            c = _entry(self.order, c)
            if c:
                out = out + B.scale(c)
        return out
