"""Additive normal form of rational functions.

A :class:`PartialFraction` is ``poly + sum_{t,k} coeff[t][k-1] / (h - t)**k``,
i.e. an element written in the basis of monomials ``h**i`` and fractions
``1/(h - t)**k``.  Multiplication and division by linear factors are done
directly in this basis, so nothing ever has to be re-factored.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .factored import FactoredRF, factor_linear
from .gaussian import GR, ONE, ZERO, GaussianRational
from .polynomial import Polynomial
from .ratfun import RatFun

__all__ = [
    "PartialFraction",
    "expand_partial_fractions",
    "pf_combine",
    "pf_multiply_polynomial",
    "shift_substitute",
]


def _trim(cs: list) -> list:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


class PartialFraction:
    __slots__ = ("poly", "poles", "_hash")

    def __init__(self, poly=(), poles: Mapping | Iterable = ()):
        if not isinstance(poly, Polynomial):
            poly = Polynomial(poly) if isinstance(poly, (list, tuple)) else Polynomial.constant(poly)
        items = poles.items() if isinstance(poles, Mapping) else poles
        acc: dict[GaussianRational, list] = {}
        for key, coeff in items:
            if isinstance(key, tuple):
                t, k = key
                t = GR(t)
                lst = acc.setdefault(t, [])
                if len(lst) < k:
                    lst.extend([ZERO] * (k - len(lst)))
                lst[k - 1] = lst[k - 1] + GR(coeff)
            else:
                t = GR(key)
                lst = acc.setdefault(t, [])
                for k, c in enumerate(coeff):
                    if len(lst) <= k:
                        lst.append(ZERO)
                    lst[k] = lst[k] + GR(c)
        self.poly = poly
        self.poles = PartialFraction._freeze(acc)
        self._hash = None

    @staticmethod
    def _freeze(acc: dict) -> tuple:
        out = []
        for t, cs in acc.items():
            cs = _trim(list(cs))
            if cs:
                out.append((t, tuple(cs)))
        out.sort(key=lambda kv: kv[0].sort_key())
        return tuple(out)

    @classmethod
    def _make(cls, poly: Polynomial, acc: dict) -> "PartialFraction":
        obj = object.__new__(cls)
        obj.poly = poly
        obj.poles = cls._freeze(acc)
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls) -> "PartialFraction":
        return cls._make(Polynomial(), {})

    @classmethod
    def one(cls) -> "PartialFraction":
        return cls._make(Polynomial.constant(ONE), {})

    @classmethod
    def from_polynomial(cls, p) -> "PartialFraction":
        if not isinstance(p, Polynomial):
            p = Polynomial.constant(p)
        return cls._make(p, {})

    @classmethod
    def monomial(cls, degree: int) -> "PartialFraction":
        return cls._make(Polynomial.monomial(degree), {})

    @classmethod
    def pole(cls, t, k: int = 1, coeff=ONE) -> "PartialFraction":
        """``coeff / (h - t)**k``."""
        if k < 1:
            raise ValueError("pole order must be >= 1")
        return cls._make(Polynomial(), {GR(t): [ZERO] * (k - 1) + [GR(coeff)]})

    @classmethod
    def from_factored(cls, u: FactoredRF) -> "PartialFraction":
        return cls.one().mul_factored(u)

    @classmethod
    def from_ratfun(cls, f: RatFun) -> "PartialFraction":
        return expand_partial_fractions(f)

    # -- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.poly.is_zero() and not self.poles

    def is_polynomial(self) -> bool:
        return not self.poles

    def pole_orders(self) -> dict[GaussianRational, int]:
        return {t: len(cs) for t, cs in self.poles}

    def coefficient(self, t, k: int) -> GaussianRational:
        t = GR(t)
        for s, cs in self.poles:
            if s == t:
                return cs[k - 1] if k <= len(cs) else ZERO
        return ZERO

    def items(self):
        """Yield ``((t, k), coeff)`` for every nonzero pole coefficient."""
        for t, cs in self.poles:
            for k, c in enumerate(cs, start=1):
                if not c.is_zero():
                    yield (t, k), c

    def pole_patterns(self) -> set[tuple[GaussianRational, int]]:
        return {key for key, _ in self.items()}

    # -- linear structure ----------------------------------------------
    def _acc(self) -> dict:
        return {t: list(cs) for t, cs in self.poles}

    def __add__(self, other):
        if not isinstance(other, PartialFraction):
            other = PartialFraction.from_polynomial(other)
        acc = self._acc()
        for t, cs in other.poles:
            lst = acc.get(t)
            if lst is None:
                acc[t] = list(cs)
                continue
            if len(lst) < len(cs):
                lst.extend([ZERO] * (len(cs) - len(lst)))
            for k, c in enumerate(cs):
                lst[k] = lst[k] + c
        return PartialFraction._make(self.poly + other.poly, acc)

    __radd__ = __add__

    def scale(self, c) -> "PartialFraction":
        c = GR(c)
        if c.is_zero():
            return PartialFraction.zero()
        acc = {t: [x * c for x in cs] for t, cs in self.poles}
        return PartialFraction._make(self.poly * c, acc)

    def __neg__(self):
        return self.scale(-ONE)

    def __sub__(self, other):
        if not isinstance(other, PartialFraction):
            other = PartialFraction.from_polynomial(other)
        return self + other.scale(-ONE)

    def __rsub__(self, other):
        return PartialFraction.from_polynomial(other) - self

    # -- multiplicative kernels ----------------------------------------
    def mul_linear(self, t) -> "PartialFraction":
        """Multiply by ``h - t``."""
        t = GR(t)
        poly = self.poly * Polynomial((-t, ONE))
        const = ZERO
        acc = {}
        for s, cs in self.poles:
            # (h-t)/(h-s)^k = 1/(h-s)^(k-1) + (s-t)/(h-s)^k
            d = s - t
            n = len(cs)
            new = [ZERO] * n
            for k in range(n):
                v = cs[k] * d if not d.is_zero() else ZERO
                if k + 1 < n:
                    v = v + cs[k + 1]
                new[k] = v
            const = const + cs[0]
            acc[s] = new
        if not const.is_zero():
            poly = poly + Polynomial.constant(const)
        return PartialFraction._make(poly, acc)

    def div_linear(self, t) -> "PartialFraction":
        """Divide by ``h - t``."""
        t = GR(t)
        quot, rem = self.poly.divide_linear(t)
        acc: dict[GaussianRational, list] = {}
        at_t = [rem] if not rem.is_zero() else [ZERO]
        for s, cs in self.poles:
            if s == t:
                # c/(h-t)^k -> c/(h-t)^(k+1)
                lst = [at_t[0]] + list(cs)
                at_t = lst
                continue
            # c/((h-s)^k (h-t)) = c d^k/(h-t) - sum_j c d^(k-j+1)/(h-s)^j, d = 1/(t-s)
            d = (t - s).inverse()
            n = len(cs)
            new = [ZERO] * n
            dpow = [ONE] * (n + 2)
            for e in range(1, n + 2):
                dpow[e] = dpow[e - 1] * d
            lead = ZERO
            for k in range(1, n + 1):
                c = cs[k - 1]
                if c.is_zero():
                    continue
                lead = lead + c * dpow[k]
                for j in range(1, k + 1):
                    new[j - 1] = new[j - 1] - c * dpow[k - j + 1]
            at_t[0] = at_t[0] + lead
            acc[s] = new
        acc[t] = at_t
        return PartialFraction._make(quot, acc)

    def mul_factored(self, u: FactoredRF) -> "PartialFraction":
        """Multiply by ``u`` given in multiplicative normal form."""
        out = self.scale(u.c) if u.c != 1 else self
        for t, m in u.factors:
            if m > 0:
                for _ in range(m):
                    out = out.mul_linear(t)
        for t, m in u.factors:
            if m < 0:
                for _ in range(-m):
                    out = out.div_linear(t)
        return out

    def mul_polynomial(self, p: Polynomial) -> "PartialFraction":
        return pf_multiply_polynomial(self, p)

    def shift(self, delta) -> "PartialFraction":
        """``h -> b(h + delta)``; a pole at ``t`` moves to ``t - delta``."""
        delta = GR(delta)
        acc = {s - delta: list(cs) for s, cs in self.poles}
        return PartialFraction._make(self.poly.shift(delta), acc)

    # -- conversions ---------------------------------------------------
    def denominator(self) -> Polynomial:
        d = Polynomial.constant(ONE)
        for t, cs in self.poles:
            d = d * Polynomial.linear(t) ** len(cs)
        return d

    def to_ratfun(self) -> RatFun:
        den = self.denominator()
        num = self.poly * den
        for t, cs in self.poles:
            n = len(cs)
            rest = den
            for _ in range(n):
                rest = rest.divide_linear(t)[0]
            # rest = den / (h-t)^n; c_k/(h-t)^k = c_k (h-t)^(n-k) rest / den
            lin = Polynomial.linear(t)
            acc = Polynomial()
            power = Polynomial.constant(ONE)
            for k in range(n, 0, -1):
                acc = acc + power * cs[k - 1]
                power = power * lin
            num = num + acc * rest
        return RatFun(num, den)

    def __call__(self, x) -> GaussianRational:
        x = GR(x)
        acc = self.poly(x)
        for t, cs in self.poles:
            inv = (x - t).inverse()
            p = inv
            for c in cs:
                acc = acc + c * p
                p = p * inv
        return acc

    def __eq__(self, other):
        if isinstance(other, PartialFraction):
            return self.poly == other.poly and self.poles == other.poles
        if isinstance(other, (int, GaussianRational, Polynomial)):
            return self == PartialFraction.from_polynomial(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.poly, self.poles))
        return self._hash

    def __repr__(self):
        return f"PartialFraction({self})"

    def __str__(self):
        parts = []
        if not self.poly.is_zero():
            parts.append(str(self.poly))
        for (t, k), c in self.items():
            lin = "h" if t.is_zero() else f"(h - ({t}))"
            den = lin if k == 1 else f"{lin}^{k}"
            cs = str(c) if c.is_real() else f"({c})"
            parts.append(f"{cs}/{den}")
        return " + ".join(parts) if parts else "0"


def expand_partial_fractions(f: RatFun) -> PartialFraction:
    """Decompose ``f`` by Taylor extraction at each pole.

    For a pole ``t`` of multiplicity ``k`` write ``f = N/((h-t)^k Q)``; the
    Taylor coefficients ``a_0..a_{k-1}`` of ``N/Q`` at ``t`` give the
    coefficients of ``1/(h-t)^k .. 1/(h-t)``.
    """
    if f.is_zero():
        return PartialFraction.zero()
    num, den = f.numerator, f.denominator
    quot, _ = num.divmod(den)
    if den.degree == 0:
        return PartialFraction.from_polynomial(quot)
    fac = factor_linear(den)
    acc: dict[GaussianRational, list] = {}
    for t, k in fac.factors:
        q = den
        for _ in range(k):
            q = q.divide_linear(t)[0]
        n_t = num.shift(t).coeffs
        q_t = q.shift(t).coeffs
        inv0 = q_t[0].inverse()
        series: list[GaussianRational] = []
        for j in range(k):
            v = n_t[j] if j < len(n_t) else ZERO
            for i in range(1, min(j, len(q_t) - 1) + 1):
                v = v - q_t[i] * series[j - i]
            series.append(v * inv0)
        # series[j] multiplies y^j, i.e. 1/(h-t)^(k-j)
        acc[t] = [series[k - order] for order in range(1, k + 1)]
    return PartialFraction._make(quot, acc)


def shift_substitute(f, delta):
    """Substitute ``h -> h + delta`` in any of the normal forms."""
    if isinstance(f, (PartialFraction, FactoredRF, Polynomial, RatFun)):
        return f.shift(delta)
    raise TypeError(f"cannot shift {type(f).__name__}")


def pf_combine(f: PartialFraction, g: PartialFraction, scalar_f=ONE, scalar_g=ONE) -> PartialFraction:
    """``scalar_f * f + scalar_g * g``."""
    return f.scale(scalar_f) + g.scale(scalar_g)


def pf_multiply_polynomial(f: PartialFraction, p: Polynomial) -> PartialFraction:
    """Exact product with a polynomial, re-expanded in the fraction basis."""
    if p.is_zero():
        return PartialFraction.zero()
    # Horner on the pf side keeps every intermediate in normal form.
    out = PartialFraction.zero()
    for c in reversed(p.coeffs):
        out = out.mul_linear(ZERO) + f.scale(c)
    return out
