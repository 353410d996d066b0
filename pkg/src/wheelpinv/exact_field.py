"""Exact scalars: rationals and the real quadratic fields Q(sqrt(d)).

Rationals are :class:`fractions.Fraction`, which already keeps every value
in lowest terms with a positive denominator.  :class:`QuadExt` adds the
element ``a + b*sqrt(d)`` for a square-free ``d > 1``.
"""

from __future__ import annotations

import functools
import math
import operator
import re
from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DiscriminantMismatch(ValueError):
    """Raised when two QuadExt values from different fields meet."""


class SurdNotZero(ValueError):
    """Raised when a QuadExt expected to be rational carries a sqrt(d) part."""

    def __init__(self, value: "QuadExt"):
        self.value = value
        self.coefficient = value.surd_part
        super().__init__(
            f"value {value} is not rational: sqrt({value.d}) coefficient is {value.surd_part}"
        )


_RAT_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rat_arith(x: Scalar, y: Scalar, op: str) -> Fraction:
    """Apply ``op`` (add, sub, mul, div) to two rationals exactly.

    >>> rat_arith(Fraction(1, 3), Fraction(1, 6), "add")
    Fraction(1, 2)
    """
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and y == 0:
        raise ZeroDivisionError(f"division of {x} by zero")
    return Fraction(fn(Fraction(x), Fraction(y)))


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Return ``(s, t)`` with ``m == s * t**2`` and ``s`` square-free, for m > 0."""
    if m <= 0:
        raise ValueError(f"expected a positive integer, got {m}")
    s, t = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            t *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    return s * m, t


@functools.lru_cache(maxsize=None)
def _check_discriminant(d: int) -> None:
    if d <= 1 or squarefree_decompose(d)[1] != 1:
        raise ValueError(f"discriminant must be a square-free integer > 1, got {d}")


def is_perfect_square(m: int) -> bool:
    return m >= 0 and math.isqrt(m) ** 2 == m


class QuadExt:
    """An element ``rat_part + surd_part * sqrt(d)`` of Q(sqrt(d)).

    ``d`` must be a square-free integer greater than one so that the
    representation is unique.  Values are immutable; ints and Fractions
    are promoted on arithmetic.
    """

    __slots__ = ("rat_part", "surd_part", "d")

    def __init__(self, rat_part: Scalar = 0, surd_part: Scalar = 0, d: int = 5):
        d = int(d)
        _check_discriminant(d)
        object.__setattr__(self, "rat_part", Fraction(rat_part))
        object.__setattr__(self, "surd_part", Fraction(surd_part))
        object.__setattr__(self, "d", d)

    @classmethod
    def _new(cls, a: Fraction, b: Fraction, d: int) -> "QuadExt":
        # trusted constructor: a, b already Fractions, d already validated
        self = object.__new__(cls)
        object.__setattr__(self, "rat_part", a)
        object.__setattr__(self, "surd_part", b)
        object.__setattr__(self, "d", d)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt(cls, d: int) -> "QuadExt":
        return cls(0, 1, d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DiscriminantMismatch(
                    f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt._new(Fraction(other), _ZERO, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._new(self.rat_part + o.rat_part, self.surd_part + o.surd_part, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt._new(-self.rat_part, -self.surd_part, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt._new(self.rat_part - o.rat_part, self.surd_part - o.surd_part, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt._new(self.rat_part * other, self.surd_part * other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, e = self.rat_part, self.surd_part, o.rat_part, o.surd_part
        return QuadExt._new(a * c + self.d * b * e, a * e + b * c, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt._new(self.rat_part, -self.surd_part, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - d*b**2``; zero only for the zero element."""
        return self.rat_part ** 2 - self.d * self.surd_part ** 2

    def inverse(self) -> "QuadExt":
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(%d))" % self.d)
        return QuadExt._new(self.rat_part / nrm, -self.surd_part / nrm, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadExt._new(self.rat_part / other, self.surd_part / other, self.d)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return quad_pow(self.inverse(), -k)
        return quad_pow(self, k)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.d, self.rat_part, self.surd_part) == (other.d, other.rat_part, other.surd_part)
        if isinstance(other, (int, Fraction)):
            return self.surd_part == 0 and self.rat_part == other
        return NotImplemented

    def __hash__(self):
        if self.surd_part == 0:
            return hash(self.rat_part)
        return hash((self.rat_part, self.surd_part, self.d))

    def __bool__(self):
        return bool(self.rat_part) or bool(self.surd_part)

    def is_rational(self) -> bool:
        return self.surd_part == 0

    def __float__(self):
        return float(self.rat_part) + float(self.surd_part) * math.sqrt(self.d)

    def __str__(self):
        return format_quadext(self)

    def __repr__(self):
        return f"QuadExt({self.rat_part!s}, {self.surd_part!s}, d={self.d})"


def quad_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    """Apply ``op`` (add, sub, mul, div) to two elements of the same field."""
    if not isinstance(x, QuadExt) or not isinstance(y, QuadExt):
        raise TypeError("quad_arith expects two QuadExt values")
    if x.d != y.d:
        raise DiscriminantMismatch(f"discriminants differ: {x.d} vs {y.d}")
    try:
        fn = _RAT_OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


def quad_pow(x: QuadExt, k: int) -> QuadExt:
    """``x**k`` for ``k >= 0`` by repeated squaring."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = QuadExt._new(_ONE, _ZERO, x.d)
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def extract_rational(x: QuadExt | Scalar) -> Fraction:
    """Return the rational value of ``x``, refusing anything with a surd part."""
    if isinstance(x, QuadExt):
        if x.surd_part != 0:
            raise SurdNotZero(x)
        return x.rat_part
    return Fraction(x)


def format_rational(x: Scalar) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_quadext(x: QuadExt) -> str:
    return f"{x.rat_part} + {x.surd_part}*sqrt({x.d})"


_QUAD_RE = re.compile(
    r"^\s*(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<b>[+-]?\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(?P<d>\d+)\s*\)\s*$"
)


def parse_quadext(text: str) -> QuadExt:
    """Parse ``"a + b*sqrt(d)"``; ``a - b*sqrt(d)`` is accepted too."""
    m = _QUAD_RE.match(text)
    if m is None:
        raise ValueError(f"not a quadratic-extension literal: {text!r}")
    b = Fraction(m["b"])
    if m["sign"] == "-":
        b = -b
    return QuadExt(Fraction(m["a"]), b, int(m["d"]))
