"""sl2 modules realised in ``N_u`` through the embedding of ``U_theta`` into the skew Laurent ring.

``e`` acts as ``x``, ``f`` as ``(theta - (h+1)^2)/4 * x^-1`` and ``h`` by
multiplication, with ``sigma(h) = h - 2``.  The central character is fixed
through a root ``r1`` of ``theta - (h+1)^2`` so that ``theta = (r1+1)^2``
stays inside Q(i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .descriptor import PoleRay, SocleDescriptor, enumerate_window
from .errors import StripViolation
from .exactfield import GR, ONE, FactoredRF, GaussianRational, PartialFraction, Polynomial, RatFun
from .oracle import ClosureResult, closure_patterns, orbit_window
from .skewlaurent import SIGMA_SL2, SkewLaurent, canonical_rep, in_strip

__all__ = [
    "Sl2Params",
    "ModuleParamSl2",
    "make_params",
    "act_e",
    "act_f",
    "e_action",
    "f_action",
    "act_h",
    "casimir_identity_check",
    "socle_descriptor",
    "brute_force_socle",
    "oracle_closure",
    "is_finitely_generated",
    "casimir_operator",
]

SIGMA = SIGMA_SL2
STRIP_WIDTH = Fraction(2)


@dataclass(frozen=True)
class Sl2Params:
    r1: GaussianRational
    r2: GaussianRational
    theta: GaussianRational
    omega: Fraction
    t1: GaussianRational
    t2: GaussianRational
    n1: int
    n2: int
    m1: int
    m2: int

    @property
    def roots(self) -> tuple[GaussianRational, GaussianRational]:
        return (self.r1, self.r2)

    def casimir_numerator(self) -> FactoredRF:
        """``(theta - (h+1)^2)/4 = -(h - r1)(h - r2)/4``."""
        return FactoredRF(GR(Fraction(-1, 4)), {self.r1: 1}) * FactoredRF.linear(self.r2)

    def with_u(self, u: FactoredRF, canonicalize: bool = False) -> "ModuleParamSl2":
        return ModuleParamSl2.from_u(self, u, canonicalize=canonicalize)


def make_params(r1) -> Sl2Params:
    r1 = GR(r1)
    r2 = GR(-2) - r1
    theta = (r1 + 1) ** 2
    omega = 3 + max(r1.re, r2.re)

    def lift(r: GaussianRational) -> tuple[GaussianRational, int]:
        n = math.ceil((omega - r.re) / 2)
        t = r + GR(2 * n)
        assert omega <= t.re < omega + 2
        return t, n

    t1, n1 = lift(r1)
    t2, n2 = lift(r2)
    mult = 2 if r1 == r2 else 1
    P = Sl2Params(r1, r2, theta, omega, t1, t2, n1, n2, mult, mult)
    # theta - (h+1)^2 == -(h - r1)(h - r2)
    lhs = Polynomial.constant(theta) - Polynomial((ONE, ONE)) ** 2
    assert lhs == Polynomial.from_roots([r1, r2], -ONE)
    assert n1 >= 2 and n2 >= 2
    return P


@dataclass(frozen=True)
class ModuleParamSl2:
    """Canonical datum ``u = c * prod_{t in strip} (h - t)^m(t)`` together with the central character."""

    base: Sl2Params
    c: GaussianRational
    m: tuple[tuple[GaussianRational, int], ...]

    def __post_init__(self):
        for t, _ in self.m:
            if not in_strip(t, self.base.omega, STRIP_WIDTH):
                raise StripViolation(
                    f"root {t} outside strip [{self.base.omega}, {self.base.omega + 2})"
                )

    @classmethod
    def from_u(cls, base: Sl2Params, u: FactoredRF, canonicalize: bool = False) -> "ModuleParamSl2":
        if canonicalize:
            u = canonical_rep(u, base.omega, SIGMA)
        return cls(base, u.c, u.factors)

    @classmethod
    def make(cls, r1, u: FactoredRF, canonicalize: bool = False) -> "ModuleParamSl2":
        return cls.from_u(make_params(r1), u, canonicalize)

    @property
    def u(self) -> FactoredRF:
        return FactoredRF(self.c, self.m)

    @property
    def exponents(self) -> dict[GaussianRational, int]:
        return dict(self.m)

    def exponent(self, s) -> int:
        return self.exponents.get(GR(s), 0)


# -- actions -------------------------------------------------------------------

def e_action(u: FactoredRF, b: PartialFraction) -> PartialFraction:
    """``e . b = sigma(b) u`` for an arbitrary (not necessarily canonical) ``u``."""
    return SIGMA(b).mul_factored(u)


def f_action(base: Sl2Params, u: FactoredRF, b: PartialFraction) -> PartialFraction:
    """``f . b = (theta - (h+1)^2)/4 * sigma^-1(b) / sigma^-1(u)``."""
    return SIGMA.inverse(b).mul_factored(base.casimir_numerator() / SIGMA.inverse(u))


def act_e(P: ModuleParamSl2, b: PartialFraction) -> PartialFraction:
    return e_action(P.u, b)


def act_f(P: ModuleParamSl2, b: PartialFraction) -> PartialFraction:
    return f_action(P.base, P.u, b)


def act_h(b: PartialFraction) -> PartialFraction:
    return b.mul_linear(GR(0))


def casimir_operator(P: ModuleParamSl2, b: PartialFraction) -> PartialFraction:
    """``((h+1)^2 + 4 f e) . b``; equals ``theta * b`` on every module."""
    hp1 = b.mul_linear(GR(-1)).mul_linear(GR(-1))
    return hp1 + act_f(P, act_e(P, b)).scale(4)


def embedding(P: Sl2Params) -> dict[str, SkewLaurent]:
    """Images of ``e, f, h`` in the skew Laurent ring."""
    num = P.casimir_numerator().to_ratfun()
    return {
        "e": SkewLaurent.x(1, SIGMA),
        "f": SkewLaurent({-1: num}, SIGMA),
        "h": SkewLaurent.scalar(RatFun(Polynomial((0, 1))), SIGMA),
    }


def casimir_identity_check(P: Sl2Params) -> bool:
    """Casimir and weight relations for the images of ``e, f, h``, checked symbolically."""
    img = embedding(P)
    e, f, h = img["e"], img["f"], img["h"]
    hp1 = SkewLaurent.scalar(RatFun(Polynomial((1, 1))), SIGMA)
    hm1 = SkewLaurent.scalar(RatFun(Polynomial((-1, 1))), SIGMA)
    theta = SkewLaurent.scalar(P.theta, SIGMA)
    two = SkewLaurent.scalar(2, SIGMA)
    return (
        hp1 * hp1 + f * e * 4 == theta
        and hm1 * hm1 + e * f * 4 == theta
        and h * e == e * (h + two)
        and h * f == f * (h - two)
        and e * f - f * e == h
    )


# -- closed-form socle -------------------------------------------------------------

def socle_descriptor(P: ModuleParamSl2) -> SocleDescriptor:
    """Rays of the simple socle ``K_u`` inside ``N_u``.

    * ``m(s) < 0``: poles ``s + 2i`` (``i >= 0``) of order ``<= -m(s)``;
    * ``m(s) > 0``: poles ``s - 2i`` (``i >= 1``) of order
      ``<= m(s) - #{j : r_j in {s-4, ..., s-2i}}``, the ray stopping once that hits 0.
    """
    rays = []
    roots = P.base.roots
    for s, m in P.m:
        if m < 0:
            rays.append(PoleRay.constant(s, 2, 0, -m))
            continue
        # indices at which some r_j = s - 2l, l >= 2, enters the subtracted set
        drops: dict[int, int] = {}
        for r in roots:
            diff = s - r
            if diff.is_real() and diff.re.denominator == 1 and diff.re % 2 == 0 and diff.re >= 4:
                l = int(diff.re) // 2
                drops[l] = drops.get(l, 0) + 1
        steps = [(1, m)]
        running = m
        for l in sorted(drops):
            running -= drops[l]
            steps.append((l, running))
        rays.append(PoleRay.stepwise(s, -2, 1, steps))
    return SocleDescriptor(tuple(rays), True)


def is_finitely_generated(P: ModuleParamSl2) -> bool:
    """``0 <= m(s) <= #{j : r_j in s - 2Z_{>0}}`` for every ``s`` in the strip."""
    for s, m in P.m:
        count = 0
        for r in P.base.roots:
            diff = s - r
            if diff.is_real() and diff.re.denominator == 1 and diff.re % 2 == 0 and diff.re > 0:
                count += 1
        if not 0 <= m <= count:
            return False
    return True


# -- brute-force oracle --------------------------------------------------------------

def _window(P: ModuleParamSl2, max_shift: int) -> set[GaussianRational]:
    return orbit_window((t for t, _ in P.m), GR(2), max_shift)


def _default_max_order(P: ModuleParamSl2) -> int:
    return sum(abs(m) for _, m in P.m) + 2


def oracle_closure(
    P: ModuleParamSl2, max_shift: int, max_degree: int, rounds: int = 200, max_order: int | None = None
) -> ClosureResult:
    ops = (lambda b: act_e(P, b), lambda b: act_f(P, b))
    return closure_patterns(
        ops, _window(P, max_shift), max_degree, rounds, max_order or _default_max_order(P)
    )


def brute_force_socle(
    P: ModuleParamSl2, max_shift: int, max_degree: int, rounds: int = 200
) -> list[PartialFraction]:
    """Basis of ``U_theta . C[h]`` visible in the window, found by exact closure.

    Returns the monomials ``h^0..h^max_degree`` followed by every reachable
    basis fraction ``1/(h - t)^k``, in the same order as :func:`enumerate_window`.
    """
    res = oracle_closure(P, max_shift, max_degree, rounds)
    out = [PartialFraction.monomial(d) for d in range(max_degree + 1)]
    out.extend(PartialFraction.pole(t, k) for t, k in res.sorted_patterns())
    return out


def orbit_offset(t: GaussianRational, bases) -> int | None:
    """Signed number of steps of 2 from the strip base in ``t``'s orbit."""
    for s in bases:
        d = GR(t) - s
        if d.is_real() and d.re.denominator == 1 and d.re % 2 == 0:
            return int(d.re) // 2
    return None


def interior(patterns, bases, max_shift: int, margin: int = 1):
    """Patterns whose orbit offset is at most ``max_shift - margin`` in absolute value."""
    return {
        (t, k) for t, k in patterns if abs(orbit_offset(t, bases)) <= max_shift - margin
    }


def descriptor_window_patterns(D: SocleDescriptor, max_shift: int) -> set:
    from .descriptor import pole_patterns_of

    return pole_patterns_of(enumerate_window(D, max_shift, 0))
