"""Exact values in Q/Z and eighth roots of unity.

Rational numbers themselves are :class:`fractions.Fraction`; this module only
adds the quotient Q/Z (the value group of every quadratic and bilinear map)
and :class:`Mu8`, the value group of sigma invariants.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

Rat = Fraction


class QZ:
    """An element of Q/Z, stored as ``num/den`` with ``0 <= num < den``."""

    __slots__ = ("num", "den")

    def __init__(self, num: int = 0, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("QZ denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if num == 0:
            den = 1
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QZ is immutable")

    @classmethod
    def from_fraction(cls, x: Fraction) -> QZ:
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> QZ:
        """Parse ``"num/den"`` (or a bare integer)."""
        num, sep, den = str(text).strip().partition("/")
        try:
            return cls(int(num), int(den) if sep else 1)
        except ValueError:
            raise ValueError(f"not a Q/Z value: {text!r}") from None

    @property
    def order(self) -> int:
        """Additive order in Q/Z."""
        return self.den

    def lift(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: QZ) -> QZ:
        if not isinstance(other, QZ):
            return NotImplemented
        return QZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> QZ:
        return QZ(-self.num, self.den)

    def __sub__(self, other: QZ) -> QZ:
        if not isinstance(other, QZ):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> QZ:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return QZ(k * self.num, self.den)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.num != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QZ):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int) and not isinstance(other, bool):
            return self.num == 0 and other == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((QZ, self.num, self.den))

    def __lt__(self, other: QZ) -> bool:
        return self.lift() < other.lift()

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"QZ({self.num}, {self.den})"


def qz_make(num: int, den: int) -> QZ:
    return QZ(num, den)


def qz_add(a: QZ, b: QZ) -> QZ:
    return a + b


def qz_scale(k: int, a: QZ) -> QZ:
    return k * a


def qz_order(a: QZ) -> int:
    return a.order


class Mu8:
    """The eighth root of unity ``exp(2*pi*i*exp/8)``."""

    __slots__ = ("exp",)

    def __init__(self, exp: int = 0):
        object.__setattr__(self, "exp", exp % 8)

    def __setattr__(self, name, value):
        raise AttributeError("Mu8 is immutable")

    def __mul__(self, other: Mu8) -> Mu8:
        if not isinstance(other, Mu8):
            return NotImplemented
        return Mu8(self.exp + other.exp)

    def __truediv__(self, other: Mu8) -> Mu8:
        return Mu8(self.exp - other.exp)

    def __pow__(self, k: int) -> Mu8:
        return Mu8(self.exp * k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mu8) and self.exp == other.exp

    def __hash__(self) -> int:
        return hash((Mu8, self.exp))

    def __complex__(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exp / 8)

    def __repr__(self) -> str:
        return f"Mu8({self.exp})"
