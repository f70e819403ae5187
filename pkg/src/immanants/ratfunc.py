"""Minimal exact rational functions in one variable.

The moment formulas are written against ordinary ring arithmetic, so passing
``RatFunc.variable()`` in place of an integer ``N`` yields the formula as a
rational function of ``N``.  Fractions are never reduced by a gcd; the
leading-order behaviour at infinity does not depend on that.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    size = max(len(a), len(b))
    return _trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
    )


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


class RatFunc:
    """``num(N) / den(N)`` with Fraction coefficients, lowest degree first."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        self.num = _trim(Fraction(c) for c in num)
        self.den = _trim(Fraction(c) for c in den)
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls((0, 1))

    @classmethod
    def _lift(cls, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Rational):
            return cls((Fraction(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return not (self - other).num

    def __hash__(self):
        return id(self)

    def __call__(self, x) -> Fraction:
        return _peval(self.num, Fraction(x)) / _peval(self.den, Fraction(x))

    def degree(self) -> int:
        """``deg num - deg den``; the function behaves like ``N**degree`` at infinity."""
        if not self.num:
            raise ValueError("zero function has no degree")
        return (len(self.num) - 1) - (len(self.den) - 1)

    def leading_coefficient(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        return self.num[-1] / self.den[-1]

    def __repr__(self):
        return f"RatFunc(num={list(map(str, self.num))}, den={list(map(str, self.den))})"
