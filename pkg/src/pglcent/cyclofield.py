"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are polynomials in ``z`` reduced modulo the m-th cyclotomic
polynomial, stored as an integer numerator vector over one positive
denominator.  Every value has a unique canonical form, so equality is a plain
comparison of coefficient vectors.

    >>> w = CycNum.root(3)
    >>> w * w
    CycNum(3, '-1-z')
    >>> (1 + w).inverse()
    CycNum(3, '-z')
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "CycNum",
    "FieldMismatchError",
    "CycSyntaxError",
    "cyclotomic_poly",
    "totient",
    "cyc_make",
    "cyc_mul",
    "cyc_inv",
    "parse_cyc",
    "format_cyc",
]


class FieldMismatchError(ValueError):
    """Raised when values from two different cyclotomic fields meet."""


class CycSyntaxError(ValueError):
    """Raised by :func:`parse_cyc` on malformed input; ``pos`` is 0-based."""

    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at column {pos + 1})")
        self.msg = msg
        self.pos = pos


def _poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_int(a, b):
    # b monic with integer coefficients
    a = list(a)
    db = len(b) - 1
    if len(a) <= db:
        return [0], a
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, a[:db]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod_int(num, cyclotomic_poly(d))
            assert not any(r)
            num = q
    return tuple(num)


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _reduction_table(m):
    # rows[k] = coefficients of z^k mod Phi_m, for 0 <= k <= 2*phi - 2
    phi = totient(m)
    mod = cyclotomic_poly(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(max(2 * phi - 1, 1)):
        rows.append(tuple(cur))
        # multiply by z, then fold the overflow coefficient
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * mod[j]
    return tuple(rows)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_m), immutable.

    ``num`` has exactly ``totient(order)`` integer entries and ``den`` is the
    positive common denominator, with gcd(num, den) = 1.
    """

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, num, den: int = 1):
        # trusted constructor: callers pass an already reduced vector
        n, d = _normalize(num, den)
        self.order = order
        self.num = n
        self.den = d
        self._hash = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_poly(cls, order: int, poly) -> CycNum:
        """Reduce an arbitrary rational polynomial modulo Phi_order."""
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"cyclotomic order must be a positive integer, got {order!r}")
        coeffs = [Fraction(c) for c in poly]
        den = math.lcm(1, *(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        phi = totient(order)
        _, r = _poly_divmod_int(ints, cyclotomic_poly(order))
        r = list(r) + [0] * (phi - len(r))
        return cls(order, r[:phi], den)

    @classmethod
    def rational(cls, order: int, q) -> CycNum:
        q = Fraction(q)
        phi = totient(order)
        return cls(order, [q.numerator] + [0] * (phi - 1), q.denominator)

    @classmethod
    def root(cls, order: int, k: int = 1) -> CycNum:
        """zeta_order ** k."""
        k %= order
        return cls.from_poly(order, [0] * k + [1])

    @classmethod
    def zero(cls, order: int) -> CycNum:
        return cls.rational(order, 0)

    @classmethod
    def one(cls, order: int) -> CycNum:
        return cls.rational(order, 1)

    # -- inspection -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.order == other.order and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.order, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"CycNum({self.order}, {format_cyc(self)!r})"

    def __str__(self):
        return format_cyc(self)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycNum.rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return CycNum(self.order, [a + b for a, b in zip(self.num, other.num)], self.den)
        return CycNum(
            self.order,
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.num, other.num
        phi = len(a)
        if not any(b[1:]):
            return CycNum(self.order, [x * b[0] for x in a], self.den * other.den)
        if not any(a[1:]):
            return CycNum(self.order, [a[0] * y for y in b], self.den * other.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        table = _reduction_table(self.order)
        out = list(prod[:phi])
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = table[k]
                for j in range(phi):
                    out[j] += c * row[j]
        return CycNum(self.order, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum.rational(self.order, Fraction(self.den, self.num[0]))
        # invariant: s * self == r0 (mod Phi), t * self == r1 (mod Phi)
        r0 = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r1 = _poly_trim(Fraction(c) for c in self.num)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_m is irreducible
        c = r1[0]
        inv = CycNum.from_poly(self.order, [x / c for x in s1])
        return inv * self.den

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = CycNum.one(self.order)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out) or [Fraction(0)]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim(x - y for x, y in zip(a, b)) or [Fraction(0)]


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _poly_trim(a[:db])


def cyc_make(order: int, poly) -> CycNum:
    return CycNum.from_poly(order, poly)


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    if a.order != b.order:
        raise FieldMismatchError(f"orders differ: {a.order} vs {b.order}")
    return a * b


def cyc_inv(a: CycNum) -> CycNum:
    return a.inverse()


# -- textual syntax -------------------------------------------------------


def format_cyc(x: CycNum) -> str:
    """Render ``x`` in the expression grammar accepted by :func:`parse_cyc`."""
    parts = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if j == 0:
            body = str(mag)
        else:
            power = "z" if j == 1 else f"z^{j}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += sign + body
    return out


class _ExprParser:
    # expr  := term (('+'|'-') term)*
    # term  := unary (('*'|'/') unary)*
    # unary := ('+'|'-') unary | power
    # power := atom ('^' '-'? INT)?
    # atom  := INT | 'z' | '(' expr ')'

    def __init__(self, order, text):
        self.order = order
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self):
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        value = self.expr()
        if self._peek():
            raise CycSyntaxError(f"unexpected {self._peek()!r}", self.pos)
        return value

    def expr(self):
        value = self.term()
        while self._peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self._peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            at = self.pos
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise CycSyntaxError("division by zero", at)
                value = value / rhs
        return value

    def unary(self):
        c = self._peek()
        if c == "-":
            self.pos += 1
            return -self.unary()
        if c == "+":
            self.pos += 1
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self._peek() == "^":
            self.pos += 1
            neg = False
            if self._peek() == "-":
                neg = True
                self.pos += 1
            e = self._int()
            if neg:
                if base.is_zero():
                    raise CycSyntaxError("negative power of zero", self.pos)
                e = -e
            base = base**e
        return base

    def _int(self):
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise CycSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def atom(self):
        c = self._peek()
        if c.isdigit():
            return CycNum.rational(self.order, self._int())
        if c == "z":
            self.pos += 1
            return CycNum.root(self.order, 1)
        if c == "(":
            self.pos += 1
            value = self.expr()
            if self._peek() != ")":
                raise CycSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return value
        if not c:
            raise CycSyntaxError("unexpected end of expression", self.pos)
        raise CycSyntaxError(f"unexpected {c!r}", self.pos)


def parse_cyc(order: int, text: str) -> CycNum:
    """Parse expressions such as ``2+3*z^2`` or ``-1/4*z`` into Q(zeta_order)."""
    return _ExprParser(order, text).parse()
