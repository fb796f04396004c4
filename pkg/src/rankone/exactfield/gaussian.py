"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` rational.

Stored as ``(re_num + im_num*i) / den`` with ``den > 0`` and
``gcd(re_num, im_num, den) == 1``; this keeps every operation down to a
handful of integer multiplications and one gcd.
"""
from __future__ import annotations

import re as _re
from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "GR", "ZERO", "ONE", "I"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self._a, self._b, self._d = a, b, d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            x = Fraction(x)
            return cls._raw(x.numerator, 0, x.denominator)
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    # -- accessors -----------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = other._a, other._b, other._d
        if d1 == d2:
            return GaussianRational._raw(a1 + a2, b1 + b2, d1)
        return GaussianRational._raw(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, d1 = self._a, self._b, self._d
        a2, b2, d2 = other._a, other._b, other._d
        if b1 == 0 and b2 == 0:
            return GaussianRational._raw(a1 * a2, 0, d1 * d2)
        return GaussianRational._raw(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        # d/(a+bi) = d(a-bi)/(a^2+b^2)
        return GaussianRational._raw(d * a, -d * b, n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(Fraction(self._a, self._d)) if self._b == 0 else hash((self._a, self._b, self._d))
            self._hash = h
        return h

    def __bool__(self):
        return not self.is_zero()

    # -- text ----------------------------------------------------------
    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        sign = "-" if im_ < 0 else "+"
        return f"{re_}{sign}{abs(im_)}*i"

    def __repr__(self):
        return f"GaussianRational('{self}')"

    _TOKEN = _re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*i)?\s*")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"-i"``, ``"3*i"`` and similar."""
        s = text.strip()
        if not s:
            raise ValueError("empty Gaussian rational literal")
        pos = 0
        re_part = Fraction(0)
        im_part = Fraction(0)
        seen = False
        while pos < len(s):
            m = cls._TOKEN.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
            sign, num, imag = m.groups()
            if num is None and imag is None:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
            if seen and not sign:
                raise ValueError(f"malformed Gaussian rational: {text!r}")
            val = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                val = -val
            if imag:
                im_part += val
            else:
                re_part += val
            seen = True
            pos = m.end()
        return cls(re_part, im_part)


GR = GaussianRational.coerce
ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)
