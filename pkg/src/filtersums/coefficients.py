"""Exact scalars of a skew field: rationals and rational quaternions.

Rationals are plain :class:`fractions.Fraction` values.  Quaternions are
immutable 4-tuples of fractions with Hamilton multiplication, so left and
right actions stay distinguishable in every product that follows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class Quaternion:
    """``a + b*i + c*j + d*k`` with rational components."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def _coerce(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return Quaternion(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = o.parts
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self

    def conjugate(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        """Reduced norm ``q * conj(q)``, a nonnegative rational."""
        return self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2

    def inverse(self) -> Quaternion:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quaternion 0 has no inverse")
        c = self.conjugate()
        return Quaternion(c.a / n, c.b / n, c.c / n, c.d / n)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.parts == other.parts
        if isinstance(other, (int, Fraction)):
            return self.parts == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        if self.b == self.c == self.d == 0:
            return hash(self.a)
        return hash(self.parts)

    def __repr__(self):
        return "q({})".format(",".join(_fmt_rational(x) for x in self.parts))


Scalar = Union[Fraction, Quaternion]

I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def _fmt_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_scalar(x) -> Scalar:
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def _check_same_variant(x, y):
    if isinstance(x, Quaternion) != isinstance(y, Quaternion):
        raise TypeError(f"scalar variant mismatch: {x!r} vs {y!r}")


def add(x: Scalar, y: Scalar) -> Scalar:
    _check_same_variant(x, y)
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    _check_same_variant(x, y)
    return x * y


def inv(x: Scalar) -> Scalar:
    if isinstance(x, Quaternion):
        return x.inverse()
    if x == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / Fraction(x)


def is_zero(x) -> bool:
    return x == 0


def format_scalar(x) -> str:
    """DSL literal for a scalar: ``3/4`` or ``q(a,b,c,d)``."""
    if isinstance(x, Quaternion):
        return repr(x)
    return _fmt_rational(Fraction(x))
