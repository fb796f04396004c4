"""Dense univariate polynomials in ``h`` over the Gaussian rationals."""
from __future__ import annotations

from typing import Iterable, Sequence

from .gaussian import GR, ONE, ZERO, GaussianRational

__all__ = ["Polynomial", "poly_gcd", "H"]


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of ``h**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GR(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, cs: list) -> "Polynomial":
        while cs and cs[-1].is_zero():
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=ONE) -> "Polynomial":
        return cls([ZERO] * degree + [GR(c)])

    @classmethod
    def linear(cls, root) -> "Polynomial":
        """``h - root``."""
        return cls((-GR(root), ONE))

    @classmethod
    def from_roots(cls, roots: Sequence, c=ONE) -> "Polynomial":
        p = cls.constant(c)
        for t in roots:
            p = p * cls.linear(t)
        return p

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return Polynomial._trusted([c * inv for c in self.coeffs])

    def __call__(self, x) -> GaussianRational:
        x = GR(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = GR(other)
            return Polynomial._trusted([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._trusted([])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        if len(rem) - 1 < dd:
            return Polynomial._trusted([]), self
        inv_lead = other.coeffs[-1].inverse()
        quot = [ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * inv_lead
            quot[k - dd] = q
            for j, oc in enumerate(other.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * oc
        return Polynomial._trusted(quot), Polynomial._trusted(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divide_linear(self, root) -> tuple["Polynomial", GaussianRational]:
        """Synthetic division by ``h - root``: returns ``(quotient, p(root))``."""
        root = GR(root)
        cs = self.coeffs
        if not cs:
            return self, ZERO
        out = [ZERO] * (len(cs) - 1)
        acc = ZERO
        for k in range(len(cs) - 1, 0, -1):
            acc = acc * root + cs[k]
            out[k - 1] = acc
        rem = acc * root + cs[0]
        return Polynomial._trusted(out), rem

    def shift(self, delta) -> "Polynomial":
        """Taylor shift: the polynomial ``h -> p(h + delta)``."""
        delta = GR(delta)
        if delta.is_zero() or len(self.coeffs) <= 1:
            return self
        # Horner in the shifted variable.
        out: list[GaussianRational] = []
        for c in reversed(self.coeffs):
            # out <- out*(h+delta) + c
            new = [ZERO] * (len(out) + 1)
            for k, x in enumerate(out):
                new[k + 1] = new[k + 1] + x
                new[k] = new[k] + x * delta
            new[0] = new[0] + c
            out = new
        return Polynomial._trusted(out)

    def derivative(self) -> "Polynomial":
        return Polynomial._trusted([c * k for k, c in enumerate(self.coeffs)][1:])

    def multiplicity(self, root) -> int:
        """Multiplicity of ``root`` as a zero (0 if not a root)."""
        if self.is_zero():
            raise ValueError("multiplicity undefined for the zero polynomial")
        p, k = self, 0
        while True:
            q, r = p.divide_linear(root)
            if not r.is_zero():
                return k
            p, k = q, k + 1

    # -- comparison / text ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, GaussianRational)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            if not mono:
                terms.append(f"({c})" if not c.is_real() else str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                cs = f"({c})" if not c.is_real() else str(c)
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


H = Polynomial((ZERO, ONE))
