"""Multiplicative normal form ``c * prod (h - t)**m(t)`` of nonzero rational functions."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import NonSplittingFactor
from .gaussian import GR, ONE, GaussianRational
from .polynomial import Polynomial
from .ratfun import RatFun

__all__ = ["FactoredRF", "factor_linear", "split_pos_neg", "factor_ratfun"]


def _root_key(t: GaussianRational):
    return t.sort_key()


class FactoredRF:
    """Scalar ``c`` together with an exponent function ``root -> m(root)``.

    Zero exponents are dropped on construction and roots are kept in
    ``(re, im)`` lexicographic order.
    """

    __slots__ = ("c", "factors", "_map")

    def __init__(self, c=ONE, factors: Mapping | Iterable = ()):
        c = GR(c)
        if c.is_zero():
            raise ValueError("FactoredRF requires a nonzero scalar")
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[GaussianRational, int] = {}
        for t, m in items:
            t = GR(t)
            acc[t] = acc.get(t, 0) + int(m)
        self.c = c
        self._map = {t: m for t, m in acc.items() if m != 0}
        self.factors: tuple[tuple[GaussianRational, int], ...] = tuple(
            sorted(self._map.items(), key=lambda kv: _root_key(kv[0]))
        )

    @classmethod
    def linear(cls, root, exponent: int = 1) -> "FactoredRF":
        return cls(ONE, {GR(root): exponent})

    @classmethod
    def constant(cls, c) -> "FactoredRF":
        return cls(c, {})

    # -- queries -------------------------------------------------------
    def exponent(self, t) -> int:
        return self._map.get(GR(t), 0)

    @property
    def exponents(self) -> dict[GaussianRational, int]:
        """The exponent function as a fresh dict."""
        return dict(self.factors)

    def support(self) -> tuple[GaussianRational, ...]:
        return tuple(t for t, _ in self.factors)

    def is_constant(self) -> bool:
        return not self.factors

    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    # -- group operations ----------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, FactoredRF):
            other = FactoredRF.constant(other)
        acc = dict(self._map)
        for t, m in other.factors:
            acc[t] = acc.get(t, 0) + m
        return FactoredRF(self.c * other.c, acc)

    __rmul__ = __mul__

    def inverse(self) -> "FactoredRF":
        return FactoredRF(self.c.inverse(), {t: -m for t, m in self.factors})

    def __truediv__(self, other):
        if not isinstance(other, FactoredRF):
            other = FactoredRF.constant(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FactoredRF.constant(other) * self.inverse()

    def __neg__(self):
        return FactoredRF(-self.c, self._map)

    def __pow__(self, n: int):
        return FactoredRF(self.c ** n, {t: m * n for t, m in self.factors})

    def shift(self, delta) -> "FactoredRF":
        """``h -> u(h + delta)``: each root ``t`` moves to ``t - delta``."""
        delta = GR(delta)
        return FactoredRF(self.c, {t - delta: m for t, m in self.factors})

    # -- conversions ---------------------------------------------------
    def numerator(self) -> Polynomial:
        """``c * prod_{m>0} (h-t)^m``."""
        p = Polynomial.constant(self.c)
        for t, m in self.factors:
            if m > 0:
                p = p * Polynomial.linear(t) ** m
        return p

    def denominator(self) -> Polynomial:
        """Monic ``prod_{m<0} (h-t)^(-m)``."""
        p = Polynomial.constant(ONE)
        for t, m in self.factors:
            if m < 0:
                p = p * Polynomial.linear(t) ** (-m)
        return p

    def to_ratfun(self) -> RatFun:
        return RatFun(self.numerator(), self.denominator())

    def __call__(self, x) -> GaussianRational:
        x = GR(x)
        acc = self.c
        for t, m in self.factors:
            acc = acc * (x - t) ** m
        return acc

    def __eq__(self, other):
        if isinstance(other, FactoredRF):
            return self.c == other.c and self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash((self.c, self.factors))

    def __repr__(self):
        fs = ", ".join(f"{t}: {m}" for t, m in self.factors)
        return f"FactoredRF(c={self.c}, {{{fs}}})"

    def __str__(self):
        parts = [] if self.c == 1 and self.factors else [f"({self.c})" if not self.c.is_real() else str(self.c)]
        for t, m in self.factors:
            lin = "h" if t.is_zero() else f"(h - ({t}))" if not t.is_real() else (
                f"(h - {t})" if t.re > 0 else f"(h + {-t.re})"
            )
            parts.append(lin if m == 1 else f"{lin}^{m}")
        return "*".join(parts)


def _to_sympy_poly(p: Polynomial):
    from sympy import Poly, Symbol, QQ_I

    h = Symbol("h")
    coeffs = [QQ_I(c.re, c.im) for c in reversed(p.coeffs)]
    return Poly.from_list(coeffs, h, domain=QQ_I)


def _from_sympy_gaussian(z) -> GaussianRational:
    re = Fraction(int(z.x.numerator), int(z.x.denominator))
    im = Fraction(int(z.y.numerator), int(z.y.denominator))
    return GaussianRational(re, im)


def factor_linear(p: Polynomial) -> FactoredRF:
    """Split ``p`` into linear factors over Q(i).

    Raises :class:`NonSplittingFactor` if some irreducible factor has degree >= 2.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return FactoredRF.constant(p.leading())
    lead = p.leading()
    monic = p.monic()
    roots: dict[GaussianRational, int] = {}
    # Peel off the roots we can see cheaply before calling the general factoriser.
    rest = monic
    for cand in (GaussianRational(0),):
        k = rest.multiplicity(cand)
        if k:
            roots[cand] = k
            for _ in range(k):
                rest = rest.divide_linear(cand)[0]
    if rest.degree == 1:
        t = -rest.coeffs[0]
        roots[t] = roots.get(t, 0) + 1
    elif rest.degree > 1:
        _, facs = _to_sympy_poly(rest).factor_list()
        for fac, mult in facs:
            cs = fac.rep.to_list()
            if len(cs) != 2:
                raise NonSplittingFactor(
                    f"irreducible factor of degree {len(cs) - 1} over Q(i) in {p}"
                )
            a, b = _from_sympy_gaussian(cs[0]), _from_sympy_gaussian(cs[1])
            t = -b / a
            roots[t] = roots.get(t, 0) + mult
    return FactoredRF(lead, roots)


def factor_ratfun(f: RatFun) -> FactoredRF:
    if f.is_zero():
        raise ValueError("zero has no multiplicative normal form")
    return factor_linear(f.numerator) / factor_linear(f.denominator)


def split_pos_neg(u: FactoredRF) -> tuple[Polynomial, Polynomial]:
    """Monic ``(alpha, beta)`` with ``u = c * alpha / beta``."""
    alpha = Polynomial.constant(ONE)
    beta = Polynomial.constant(ONE)
    for t, m in u.factors:
        if m > 0:
            alpha = alpha * Polynomial.linear(t) ** m
        else:
            beta = beta * Polynomial.linear(t) ** (-m)
    return alpha, beta
