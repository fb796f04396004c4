"""Skew Laurent polynomials ``k[x, x^-1, sigma]`` over ``k = Q(i)(h)`` with a shift ``sigma``.

Also hosts the sigma-subgroup ``G_sigma = {r / sigma(r)}``, exponent-function
bookkeeping along shift orbits, canonical strip representatives, and the
one-dimensional modules ``N_u`` (``x . b = sigma(b) u``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import MismatchedShift, NotInGSigma
from .exactfield import GR, ONE, FactoredRF, GaussianRational, PartialFraction, Polynomial, RatFun

__all__ = [
    "ShiftAut",
    "SkewLaurent",
    "RankOneModule",
    "skew_multiply",
    "orbit_sum_zero",
    "in_G_sigma",
    "witness_r",
    "canonical_rep",
    "modules_isomorphic",
    "module_x_act",
    "strip_translate",
]


@dataclass(frozen=True)
class ShiftAut:
    """``sigma(b)(h) = b(h + delta)``; ``delta = -2`` sends ``h`` to ``h - 2``."""

    delta: Fraction

    def __post_init__(self):
        d = Fraction(self.delta)
        if d == 0:
            raise ValueError("shift must be nonzero")
        object.__setattr__(self, "delta", d)

    @property
    def width(self) -> Fraction:
        return abs(self.delta)

    def power(self, n: int) -> "ShiftAut":
        return ShiftAut(self.delta * n)

    def __call__(self, f, n: int = 1):
        """Apply ``sigma**n`` to a polynomial, rational function or normal form."""
        if n == 0:
            return f
        return f.shift(self.delta * n)

    def inverse(self, f):
        return self(f, -1)


SIGMA_SL2 = ShiftAut(Fraction(-2))
SIGMA_OSP = ShiftAut(Fraction(-1))


# -- skew Laurent ring --------------------------------------------------------

class SkewLaurent:
    """Finite sum ``sum_i a_i(h) x^i`` with rational-function coefficients on the left."""

    __slots__ = ("terms", "shift")

    def __init__(self, terms: Mapping[int, object] | None = None, shift: ShiftAut = SIGMA_SL2):
        acc: dict[int, RatFun] = {}
        for deg, c in (terms or {}).items():
            c = RatFun.coerce(c if not isinstance(c, PartialFraction) else c.to_ratfun())
            if not c.is_zero():
                acc[int(deg)] = c
        self.terms = dict(sorted(acc.items()))
        self.shift = shift

    @classmethod
    def x(cls, power: int = 1, shift: ShiftAut = SIGMA_SL2) -> "SkewLaurent":
        return cls({power: 1}, shift)

    @classmethod
    def scalar(cls, c, shift: ShiftAut = SIGMA_SL2) -> "SkewLaurent":
        return cls({0: c}, shift)

    def _check(self, other: "SkewLaurent"):
        if self.shift != other.shift:
            raise MismatchedShift(f"shift {self.shift.delta} vs {other.shift.delta}")

    def _lift(self, other) -> "SkewLaurent":
        if isinstance(other, SkewLaurent):
            self._check(other)
            return other
        return SkewLaurent.scalar(other, self.shift)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc[d] + c if d in acc else c
        return SkewLaurent(acc, self.shift)

    __radd__ = __add__

    def __neg__(self):
        return SkewLaurent({d: -c for d, c in self.terms.items()}, self.shift)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return skew_multiply(self, self._lift(other))

    def __rmul__(self, other):
        return skew_multiply(self._lift(other), self)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return set(self.terms) <= {0}

    def coefficient(self, deg: int) -> RatFun:
        return self.terms.get(deg, RatFun(0))

    def __eq__(self, other):
        if isinstance(other, SkewLaurent):
            return self.shift == other.shift and self.terms == other.terms
        return self == SkewLaurent.scalar(other, self.shift)

    def __hash__(self):
        return hash((self.shift, tuple(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"[{c}]x^{d}" for d, c in self.terms.items()) or "0"
        return f"SkewLaurent({body}; delta={self.shift.delta})"


def skew_multiply(p: SkewLaurent, q: SkewLaurent) -> SkewLaurent:
    """``(a x^i)(b x^j) = a sigma^i(b) x^(i+j)``."""
    if p.shift != q.shift:
        raise MismatchedShift(f"shift {p.shift.delta} vs {q.shift.delta}")
    sigma = p.shift
    acc: dict[int, RatFun] = {}
    for i, a in p.terms.items():
        for j, b in q.terms.items():
            term = a * sigma(b, i)
            acc[i + j] = acc[i + j] + term if i + j in acc else term
    return SkewLaurent(acc, sigma)


# -- orbits, G_sigma, canonical forms -----------------------------------------

def _floor_div(x: Fraction, w: Fraction) -> int:
    return math.floor(x / w)


def _orbit_coord(t: GaussianRational, width: Fraction) -> tuple[tuple[Fraction, Fraction], int]:
    """Orbit key and integer position: ``t = base + n * width`` with ``Re(base)`` in ``[0, width)``."""
    n = _floor_div(t.re, width)
    return (t.re - n * width, t.im), n


def strip_translate(t: GaussianRational, omega, width) -> GaussianRational:
    """Translate ``t`` by a multiple of ``width`` so its real part lies in ``[omega, omega + width)``."""
    omega, width = Fraction(omega), Fraction(width)
    n = _floor_div(t.re - omega, width)
    return t - GR(n * width)


def in_strip(t: GaussianRational, omega, width) -> bool:
    omega, width = Fraction(omega), Fraction(width)
    return omega <= t.re < omega + width


def _orbits(m: Mapping[GaussianRational, int], width: Fraction) -> dict:
    groups: dict = {}
    for t, v in m.items():
        if v == 0:
            continue
        key, n = _orbit_coord(GR(t), width)
        groups.setdefault(key, {})[n] = groups.setdefault(key, {}).get(n, 0) + v
    return groups


def orbit_sum_zero(m: Mapping | FactoredRF, shift: ShiftAut) -> bool:
    """Whether ``m`` sums to zero over every ``<sigma>``-orbit."""
    if isinstance(m, FactoredRF):
        m = m.exponents
    return all(sum(vals.values()) == 0 for vals in _orbits(m, shift.width).values())


def in_G_sigma(w: FactoredRF, shift: ShiftAut) -> bool:
    """Membership in ``G_sigma``: absolute value 1 and zero orbit sums."""
    return w.c == 1 and orbit_sum_zero(w, shift)


def witness_r(w: FactoredRF, shift: ShiftAut) -> FactoredRF:
    """Some ``r`` with ``w = r / sigma(r)``.

    Built from generators ``(h - s) / sigma(h - s)``: along each orbit the
    exponent of ``h - s`` in ``r`` is the running sum of ``m_w`` walked in the
    direction of ``-delta``.
    """
    if not in_G_sigma(w, shift):
        raise NotInGSigma(f"{w} is not of the form r/sigma(r) for delta={shift.delta}")
    width = shift.width
    step = -1 if shift.delta > 0 else 1  # direction of -delta in orbit coordinates
    exps: dict[GaussianRational, int] = {}
    for (base_re, base_im), vals in sorted(_orbits(w.exponents, width).items()):
        lo, hi = min(vals), max(vals)
        order = range(lo, hi + 1) if step == 1 else range(hi, lo - 1, -1)
        running = 0
        for n in order:
            running += vals.get(n, 0)
            if running:
                exps[GaussianRational(base_re + n * width, base_im)] = running
    return FactoredRF(ONE, exps)


def canonical_rep(u: FactoredRF, omega, shift: ShiftAut) -> FactoredRF:
    """Representative of ``G_sigma . u`` with every root in the strip ``[omega, omega + |delta|)``."""
    width = shift.width
    acc: dict[GaussianRational, int] = {}
    for t, m in u.factors:
        s = strip_translate(t, omega, width)
        acc[s] = acc.get(s, 0) + m
    return FactoredRF(u.c, acc)


def modules_isomorphic(u: FactoredRF, v: FactoredRF, omega, shift: ShiftAut) -> bool:
    return canonical_rep(u, omega, shift) == canonical_rep(v, omega, shift)


# -- rank one modules ----------------------------------------------------------

@dataclass(frozen=True)
class RankOneModule:
    """``N_u``: the field ``k`` with ``x . b = sigma(b) u``."""

    u: FactoredRF
    shift: ShiftAut = SIGMA_SL2

    def act_x(self, b: PartialFraction, power: int = 1) -> PartialFraction:
        return module_x_act(self, b, power)


def module_x_act(M: RankOneModule, b: PartialFraction, power: int) -> PartialFraction:
    """Action of ``x**power`` on ``N_u`` (iterated for ``|power| > 1``)."""
    sigma = M.shift
    out = b
    if power >= 0:
        for _ in range(power):
            out = sigma(out).mul_factored(M.u)
    else:
        inv_u = sigma.inverse(M.u).inverse()
        for _ in range(-power):
            out = sigma.inverse(out).mul_factored(inv_u)
    return out


def ratfun_as_skew(f, shift: ShiftAut = SIGMA_SL2) -> SkewLaurent:
    if isinstance(f, Polynomial):
        f = RatFun(f)
    return SkewLaurent.scalar(f, shift)
