"""Exact scalar arithmetic: rationals and real quadratic irrationals a + b*sqrt(D).

All geometric and cohomological data in this package is carried by "exact
scalars": Python ints, fractions.Fraction, or QuadExt (an element of the
real quadratic field Q(sqrt(D))).  Every operation below is exact; floats
appear only through an explicit call to ``as_float``.
"""

from __future__ import annotations

import math
from fractions import Fraction


def is_square_free(n):
    if n < 1:
        return False
    d = 2
    m = n
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        while m % d == 0:
            m //= d
        d += 1
    return True


def _split_square(n):
    """Write n = s*s * d with d square-free; returns (s, d)."""
    s, d, p = 1, 1, 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    d *= m
    return s, d


class QuadExt:
    """An element a + b*sqrt(D) of Q(sqrt(D)), D a square-free integer > 1.

    Elements with b == 0 are plain rationals and compare/hash equal to the
    corresponding Fraction regardless of D.  Mixing two different fields is
    an error unless one operand is rational.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D=0):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            D = 0
        else:
            if D <= 1 or not is_square_free(D):
                raise ValueError(f"D must be a square-free integer > 1, got {D}")
        self.a = a
        self.b = b
        self.D = D

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def of(x, D=0):
        if isinstance(x, QuadExt):
            return x
        return QuadExt(Fraction(x), 0, 0)

    def _pair(self, other):
        other = QuadExt.of(other)
        if self.D and other.D and self.D != other.D:
            raise ValueError(f"mixed quadratic fields: sqrt({self.D}) vs sqrt({other.D})")
        return other, self.D or other.D

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        other, D = self._pair(other)
        return QuadExt(self.a + other.a, self.b + other.b, D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        other, D = self._pair(other)
        return QuadExt(self.a - other.a, self.b - other.b, D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        other, D = self._pair(other)
        return QuadExt(self.a * other.a + self.b * other.b * D,
                       self.a * other.b + self.b * other.a, D)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.D)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        other, D = self._pair(other)
        norm = other.a * other.a - other.b * other.b * D
        if norm == 0:
            raise ZeroDivisionError("division by zero field element")
        num = self * other.conjugate()
        return QuadExt(num.a / norm, num.b / norm, num.D)

    def __rtruediv__(self, other):
        return QuadExt.of(other, self.D) / self

    def __pow__(self, n):
        if n < 0:
            return 1 / (self ** (-n))
        out = QuadExt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order and equality -------------------------------------------------

    def sign(self):
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 D
        lhs, rhs = a * a, b * b * self.D
        if a > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if rhs > lhs else (-1 if rhs < lhs else 0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.D == other.D and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def _cmp(self, other):
        diff = self - other
        return diff.sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- conversion ---------------------------------------------------------

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D) if self.b else float(self.a)

    def is_rational(self):
        return self.b == 0

    def as_fraction(self):
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def __repr__(self):
        if self.b == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.D}))"


# -- helpers over the union type int | Fraction | QuadExt | float ------------

def as_float(x):
    return float(x)


def is_exact(x):
    return isinstance(x, (int, Fraction, QuadExt))


def exact_zero(x):
    """Exact zero test for exact scalars; small-tolerance test for floats."""
    if isinstance(x, float):
        return abs(x) < 1e-12
    return x == 0


def quad_parts(x):
    """Split an exact scalar into (rational part, sqrt coefficient, D)."""
    if isinstance(x, QuadExt):
        return x.a, x.b, x.D
    return Fraction(x), Fraction(0), 0


def common_field(values):
    """The D shared by a collection of exact scalars (0 if all rational)."""
    D = 0
    for v in values:
        if isinstance(v, QuadExt) and v.D:
            if D and v.D != D:
                raise ValueError("values live in different quadratic fields")
            D = v.D
    return D


def sqrt_quad(n):
    """sqrt(n) for a positive integer n, as an exact scalar."""
    s, d = _split_square(n)
    if d == 1:
        return Fraction(s)
    return QuadExt(0, s, d)


def golden_ratio():
    """(1 + sqrt(5))/2 as an exact scalar."""
    return QuadExt(Fraction(1, 2), Fraction(1, 2), 5)


# -- JSON forms ---------------------------------------------------------------
#
# Exact numbers travel in documents as: int, "p/q" strings, or
# {"a": "p/q", "b": "p/q", "D": n}.

def number_from_json(obj, where="number"):
    from .schemas import SchemaError

    if isinstance(obj, bool):
        raise SchemaError(where, "expected a number, got a boolean")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        raise SchemaError(where, "floats are not allowed in exact documents; use 'p/q'")
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(where, f"cannot parse rational {obj!r}")
    if isinstance(obj, dict):
        extra = set(obj) - {"a", "b", "D"}
        if extra:
            raise SchemaError(where, f"unknown keys {sorted(extra)} in quadratic number")
        try:
            a = Fraction(obj.get("a", 0))
            b = Fraction(obj.get("b", 0))
            D = int(obj.get("D", 0))
        except (ValueError, TypeError, ZeroDivisionError):
            raise SchemaError(where, "malformed quadratic number")
        if b == 0:
            return a
        if not is_square_free(D) or D <= 1:
            raise SchemaError(where, f"D = {D} is not a square-free integer > 1")
        return QuadExt(a, b, D)
    raise SchemaError(where, f"cannot interpret {obj!r} as a number")


def number_to_json(x):
    if isinstance(x, float):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, QuadExt):
        if x.b == 0:
            return number_to_json(x.a)
        return {"a": number_to_json(x.a), "b": number_to_json(x.b), "D": x.D}
    raise TypeError(f"not a scalar: {x!r}")
