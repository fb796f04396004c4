"""Reduced rational functions ``num/den`` in ``h``."""
from __future__ import annotations

from .gaussian import GR, ONE, GaussianRational
from .polynomial import Polynomial, poly_gcd

__all__ = ["RatFun"]


class RatFun:
    """``numerator/denominator`` with monic denominator and coprime parts."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        if not isinstance(numerator, Polynomial):
            numerator = Polynomial.constant(numerator)
        if denominator is None:
            denominator = Polynomial.constant(ONE)
        elif not isinstance(denominator, Polynomial):
            denominator = Polynomial.constant(denominator)
        if denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numerator.is_zero():
            numerator, denominator = numerator, Polynomial.constant(ONE)
        elif denominator.degree > 0:
            g = poly_gcd(numerator, denominator)
            if g.degree > 0:
                numerator = numerator // g
                denominator = denominator // g
        lead = denominator.leading()
        if lead != 1:
            inv = lead.inverse()
            numerator = numerator * inv
            denominator = denominator * inv
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def coerce(cls, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.numerator.degree <= 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.numerator.leading()

    def __add__(self, other):
        other = RatFun.coerce(other)
        if self.denominator == other.denominator:
            return RatFun(self.numerator + other.numerator, self.denominator)
        return RatFun(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        other = RatFun.coerce(other)
        return RatFun(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.denominator, self.numerator)

    def __truediv__(self, other):
        return self * RatFun.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.numerator ** n, self.denominator ** n)

    def shift(self, delta) -> "RatFun":
        """``h -> f(h + delta)``."""
        return RatFun(self.numerator.shift(delta), self.denominator.shift(delta))

    def __call__(self, x) -> GaussianRational:
        x = GR(x)
        return self.numerator(x) / self.denominator(x)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.numerator == other.numerator and self.denominator == other.denominator
        if isinstance(other, (int, GaussianRational, Polynomial)):
            return self == RatFun(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RatFun({self.numerator!r}, {self.denominator!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"
