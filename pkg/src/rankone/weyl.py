"""First Weyl algebra ``A_1 = <a, b : ab - ba = 1>`` acting on ``N_u`` via ``a -> x``, ``b -> -(h/2) x^-1``.

Parameters live in the strip ``C_0 = {0 <= Re < 2}``.  When ``m(0) > 0`` the
polynomial ring is *not* contained in the simple socle ``F_u``: ``h*C[h]`` is a
proper submodule, and ``F_u = h * D_u`` where ``D_u`` is the closed-form
description.  :func:`socle_generator` returns the monic generator of
``F_u ∩ C[h]`` and the oracle works in the rescaled copy
``N_{u'}``, ``u' = u * sigma(g)/g``, where ``D_u`` is literally the socle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .descriptor import PoleRay, SocleDescriptor
from .errors import StripViolation
from .exactfield import GR, FactoredRF, GaussianRational, PartialFraction, Polynomial, RatFun
from .oracle import ClosureResult, closure_patterns, orbit_window
from .skewlaurent import SIGMA_SL2, SkewLaurent, canonical_rep, in_strip, modules_isomorphic

__all__ = [
    "ModuleParamWeyl",
    "act_a",
    "act_b",
    "weyl_relation_check",
    "weyl_socle_descriptor",
    "weyl_is_finitely_generated",
    "weyl_brute_force_socle",
    "weyl_oracle_closure",
    "socle_generator",
    "weyl_isomorphic",
]

SIGMA = SIGMA_SL2
OMEGA = Fraction(0)
STRIP_WIDTH = Fraction(2)
ZERO_ROOT = GR(0)
_B_FACTOR = FactoredRF(GR(Fraction(-1, 2)), {ZERO_ROOT: 1})  # -h/2


@dataclass(frozen=True)
class ModuleParamWeyl:
    c: GaussianRational
    m: tuple[tuple[GaussianRational, int], ...]

    def __post_init__(self):
        for t, _ in self.m:
            if not in_strip(t, OMEGA, STRIP_WIDTH):
                raise StripViolation(f"root {t} outside strip [0, 2)")

    @classmethod
    def from_u(cls, u: FactoredRF, canonicalize: bool = False) -> "ModuleParamWeyl":
        if canonicalize:
            u = canonical_rep(u, OMEGA, SIGMA)
        return cls(u.c, u.factors)

    @property
    def u(self) -> FactoredRF:
        return FactoredRF(self.c, self.m)

    @property
    def exponents(self) -> dict[GaussianRational, int]:
        return dict(self.m)


def act_a(P: ModuleParamWeyl, b: PartialFraction) -> PartialFraction:
    """``a . b = sigma(b) u``."""
    return SIGMA(b).mul_factored(P.u)


def act_b(P: ModuleParamWeyl, v: PartialFraction) -> PartialFraction:
    """``b . v = -(h/2) sigma^-1(v) / sigma^-1(u)``."""
    return SIGMA.inverse(v).mul_factored(_B_FACTOR / SIGMA.inverse(P.u))


def embedding() -> dict[str, SkewLaurent]:
    minus_half_h = RatFun(Polynomial((0, Fraction(-1, 2))))
    return {"a": SkewLaurent.x(1, SIGMA), "b": SkewLaurent({-1: minus_half_h}, SIGMA)}


def weyl_relation_check() -> bool:
    """``Psi(a) Psi(b) - Psi(b) Psi(a) == 1`` and ``-2 Psi(b) Psi(a) == h`` in the skew Laurent ring."""
    img = embedding()
    a, b = img["a"], img["b"]
    h = SkewLaurent.scalar(RatFun(Polynomial((0, 1))), SIGMA)
    return a * b - b * a == SkewLaurent.scalar(1, SIGMA) and b * a * (-2) == h


def weyl_socle_descriptor(P: ModuleParamWeyl) -> SocleDescriptor:
    rays = []
    for s, m in P.m:
        if m < 0:
            rays.append(PoleRay.constant(s, 2, 0, -m))
        elif s == ZERO_ROOT:
            rays.append(PoleRay.constant(s, -2, 1, m - 1))
        else:
            rays.append(PoleRay.constant(s, -2, 1, m))
    meta = {"generator": str(socle_generator(P))}
    return SocleDescriptor(tuple(rays), True, meta)


def weyl_is_finitely_generated(P: ModuleParamWeyl) -> bool:
    """``m == 0``, or ``m`` supported at ``0`` alone with ``m(0) == 1``."""
    m = P.exponents
    return not m or m == {ZERO_ROOT: 1}


def socle_generator(P: ModuleParamWeyl) -> Polynomial:
    """Monic generator of ``F_u ∩ C[h]``: ``h`` when ``m(0) > 0``, else ``1``."""
    if P.exponents.get(ZERO_ROOT, 0) > 0:
        return Polynomial((0, 1))
    return Polynomial.constant(1)


def rescaled_u(P: ModuleParamWeyl) -> FactoredRF:
    """``u' = u * sigma(g) / g``; multiplication by ``1/g`` maps ``N_u`` onto ``N_{u'}``."""
    if socle_generator(P).degree == 0:
        return P.u
    return P.u * FactoredRF.linear(2) / FactoredRF.linear(0)


def weyl_oracle_closure(
    P: ModuleParamWeyl,
    max_shift: int,
    max_degree: int,
    rounds: int = 200,
    max_order: int | None = None,
    seed: str = "socle",
) -> ClosureResult:
    """Closure of ``g*C[h]`` (``seed="socle"``) or of ``C[h]`` (``seed="polynomials"``).

    Patterns are reported for the rescaled module ``(1/g) * U.(g C[h])``.
    """
    u = rescaled_u(P) if seed == "socle" else P.u
    ops = (
        lambda b: SIGMA(b).mul_factored(u),
        lambda v: SIGMA.inverse(v).mul_factored(_B_FACTOR / SIGMA.inverse(u)),
    )
    window = orbit_window((t for t, _ in P.m), GR(2), max_shift)
    order = max_order or sum(abs(m) for _, m in P.m) + 2
    return closure_patterns(ops, window, max_degree, rounds, order)


def weyl_brute_force_socle(
    P: ModuleParamWeyl, max_shift: int, max_degree: int, rounds: int = 200
) -> list[PartialFraction]:
    res = weyl_oracle_closure(P, max_shift, max_degree, rounds)
    out = [PartialFraction.monomial(d) for d in range(max_degree + 1)]
    out.extend(PartialFraction.pole(t, k) for t, k in res.sorted_patterns())
    return out


def weyl_isomorphic(P: ModuleParamWeyl, Q: ModuleParamWeyl) -> bool:
    return modules_isomorphic(P.u, Q.u, OMEGA, SIGMA)
