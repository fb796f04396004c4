"""osp(1|2) modules: the graded matrix model ``M_{u,lambda} = N_u + N_u`` and the ungraded Weyl pullback.

The odd generators act on pairs ``(even, odd)`` of elements of ``N_u`` over
``sigma_1(h) = h - 1``::

    p = [[0, x], [x, 0]]
    q = [[0, (h - lam)/2 x^-1], [(h + lam + 1)/2 x^-1, 0]]

and the even part ``e = p^2``, ``f = -q^2`` restricts to sl2 modules with
``u^(2) = u sigma_1(u)`` over ``sigma = sigma_1^2`` and central characters
``(lam+1)^2`` (even) and ``lam^2`` (odd).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import sl2, weyl
from .descriptor import SocleDescriptor
from .errors import NonScalarAction
from .exactfield import GR, FactoredRF, GaussianRational, PartialFraction, Polynomial, RatFun
from .skewlaurent import SIGMA_OSP, SkewLaurent, canonical_rep, in_G_sigma

__all__ = [
    "OspParams",
    "GradedElement",
    "act_p",
    "act_q",
    "act_h",
    "act_e",
    "act_f",
    "act_scasimir",
    "verify_superrelations",
    "scasimir_action",
    "casimir_scalars",
    "restrict_to_sl2",
    "graded_socle_descriptor",
    "graded_iso",
    "parity_change",
    "theta_quotient_check",
    "UngradedOspModule",
    "ungraded_to_weyl",
]

SIGMA1 = SIGMA_OSP
OMEGA1 = Fraction(0)
HALF = GR(Fraction(1, 2))


def _normalize_sign(c: GaussianRational) -> GaussianRational:
    if c.re > 0 or (c.re == 0 and c.im > 0):
        return c
    return -c


@dataclass(frozen=True)
class OspParams:
    """``(u, lam)``; ``u`` is any nonzero factored rational function (see :meth:`canonical`)."""

    u: FactoredRF
    lam: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "lam", GR(self.lam))

    def canonical(self) -> "OspParams":
        """Representative of the graded isomorphism class.

        Roots go into the width-one strip ``[0, 1)`` and the scalar is fixed up to sign.
        """
        v = canonical_rep(self.u, OMEGA1, SIGMA1)
        return OspParams(FactoredRF(_normalize_sign(v.c), v.factors), self.lam)

    @property
    def u2(self) -> FactoredRF:
        """``u^(2) = u * sigma_1(u)``."""
        return self.u * SIGMA1(self.u)


@dataclass(frozen=True)
class GradedElement:
    even: PartialFraction
    odd: PartialFraction

    @classmethod
    def zero(cls) -> "GradedElement":
        return cls(PartialFraction.zero(), PartialFraction.zero())

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.even - other.even, self.odd - other.odd)

    def scale(self, c) -> "GradedElement":
        return GradedElement(self.even.scale(c), self.odd.scale(c))

    def swap(self) -> "GradedElement":
        return GradedElement(self.odd, self.even)

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()


# -- operators -----------------------------------------------------------------

def _x(P: OspParams, b: PartialFraction) -> PartialFraction:
    return SIGMA1(b).mul_factored(P.u)


def _x_inv(P: OspParams, b: PartialFraction) -> PartialFraction:
    return SIGMA1.inverse(b).mul_factored(SIGMA1.inverse(P.u).inverse())


def _times_linear(b: PartialFraction, root: GaussianRational) -> PartialFraction:
    """``(h - root)/2 * b``."""
    return b.mul_linear(root).scale(HALF)


def act_p(P: OspParams, v: GradedElement) -> GradedElement:
    return GradedElement(_x(P, v.odd), _x(P, v.even))


def act_q(P: OspParams, v: GradedElement) -> GradedElement:
    lam = P.lam
    return GradedElement(
        _times_linear(_x_inv(P, v.odd), lam),
        _times_linear(_x_inv(P, v.even), -lam - 1),
    )


def act_h(v: GradedElement) -> GradedElement:
    return GradedElement(v.even.mul_linear(GR(0)), v.odd.mul_linear(GR(0)))


def act_e(P: OspParams, v: GradedElement) -> GradedElement:
    return act_p(P, act_p(P, v))


def act_f(P: OspParams, v: GradedElement) -> GradedElement:
    return act_q(P, act_q(P, v)).scale(-1)


def act_scasimir(P: OspParams, v: GradedElement) -> GradedElement:
    """``Sigma = pq - qp + 1/2``."""
    pq = act_p(P, act_q(P, v))
    qp = act_q(P, act_p(P, v))
    return pq - qp + v.scale(HALF)


Operator = Callable[[OspParams, GradedElement], GradedElement]


def random_graded_element(rng: random.Random, roots, max_order: int = 2, degree: int = 2) -> GradedElement:
    from .sampling import random_partial_fraction

    return GradedElement(
        random_partial_fraction(rng, roots, max_order, degree),
        random_partial_fraction(rng, roots, max_order, degree),
    )


def verify_superrelations(
    P: OspParams, samples: int = 5, seed: int = 0, q: Operator | None = None
) -> bool:
    """Check the defining relations exactly on random graded elements.

    ``[h,p] = p``, ``[h,q] = -q``, ``pq + qp = h`` and, for ``e = p^2``,
    ``f = -q^2``: ``[h,e] = 2e``, ``[h,f] = -2f``, ``[e,f] = h``.  ``q`` may be
    replaced to run negative controls.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    q = q or act_q
    rng = random.Random(seed)
    roots = list(P.u.support()) + [GR(0), GR(Fraction(1, 2)), P.lam]

    def p_(v):
        return act_p(P, v)

    def q_(v):
        return q(P, v)

    def e_(v):
        return p_(p_(v))

    def f_(v):
        return q_(q_(v)).scale(-1)

    for _ in range(samples):
        v = random_graded_element(rng, roots)
        hv = act_h(v)
        checks = (
            act_h(p_(v)) - p_(hv) == p_(v),
            act_h(q_(v)) - q_(hv) == q_(v).scale(-1),
            p_(q_(v)) + q_(p_(v)) == hv,
            act_h(e_(v)) - e_(hv) == e_(v).scale(2),
            act_h(f_(v)) - f_(hv) == f_(v).scale(-2),
            e_(f_(v)) - f_(e_(v)) == hv,
        )
        if not all(checks):
            return False
    return True


# -- symbolic 2x2 matrices over the skew Laurent ring -----------------------------

Matrix = tuple[tuple[SkewLaurent, SkewLaurent], tuple[SkewLaurent, SkewLaurent]]


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)) for i in range(2)
    )


def _mat_add(A: Matrix, B: Matrix, sign: int = 1) -> Matrix:
    return tuple(tuple(A[i][j] + B[i][j] * sign for j in range(2)) for i in range(2))


def _scalar_mat(c) -> Matrix:
    s = SkewLaurent.scalar(c, SIGMA1)
    z = SkewLaurent({}, SIGMA1)
    return ((s, z), (z, s))


def matrix_model(lam) -> dict[str, Matrix]:
    """Images of ``p``, ``q``, ``h`` as 2x2 matrices over ``k[x, x^-1, sigma_1]``."""
    lam = GR(lam)
    z = SkewLaurent({}, SIGMA1)
    x = SkewLaurent.x(1, SIGMA1)
    a_q = RatFun(Polynomial((-lam / 2, HALF)))  # (h - lam)/2
    b_q = RatFun(Polynomial(((lam + 1) / 2, HALF)))  # (h + lam + 1)/2
    p = ((z, x), (x, z))
    q = ((z, SkewLaurent({-1: a_q}, SIGMA1)), (SkewLaurent({-1: b_q}, SIGMA1), z))
    h = _scalar_mat(RatFun(Polynomial((0, 1))))
    return {"p": p, "q": q, "h": h}


def _diagonal_scalars(M: Matrix) -> tuple[GaussianRational, GaussianRational]:
    off = M[0][1], M[1][0]
    if any(not entry.is_zero() for entry in off):
        raise NonScalarAction("action mixes even and odd components")
    out = []
    for entry in (M[0][0], M[1][1]):
        if not entry.is_scalar():
            raise NonScalarAction(f"diagonal entry {entry!r} is not a scalar")
        c = entry.coefficient(0)
        if not c.is_constant():
            raise NonScalarAction(f"diagonal entry {c} depends on h")
        out.append(c.constant_value())
    return out[0], out[1]


def scasimir_action(P: OspParams) -> tuple[GaussianRational, GaussianRational]:
    """Scalars by which ``Sigma = pq - qp + 1/2`` acts on the even and odd components."""
    m = matrix_model(P.lam)
    sig = _mat_add(_mat_add(_mat_mul(m["p"], m["q"]), _mat_mul(m["q"], m["p"]), -1), _scalar_mat(HALF))
    return _diagonal_scalars(sig)


def casimir_scalars(P: OspParams) -> tuple[GaussianRational, GaussianRational]:
    """Scalars of the sl2 Casimir ``(h+1)^2 - 4 q^2 p^2`` on the even and odd components."""
    m = matrix_model(P.lam)
    p2 = _mat_mul(m["p"], m["p"])
    q2 = _mat_mul(m["q"], m["q"])
    hp1 = _mat_add(m["h"], _scalar_mat(1))
    cas = _mat_add(_mat_mul(hp1, hp1), _mat_mul(_mat_mul(q2, p2), _scalar_mat(4)), -1)
    return _diagonal_scalars(cas)


# -- restriction to sl2 ------------------------------------------------------------

@dataclass(frozen=True)
class Sl2Restriction:
    """One graded component viewed as an sl2 module ``N_{u^(2)}`` with ``theta = (r1+1)^2``."""

    u2: FactoredRF
    theta: GaussianRational
    r1: GaussianRational

    def module(self) -> sl2.ModuleParamSl2:
        return sl2.ModuleParamSl2.make(self.r1, self.u2, canonicalize=True)


def restrict_to_sl2(P: OspParams) -> tuple[Sl2Restriction, Sl2Restriction]:
    """Even component: ``theta = (lam+1)^2`` (``r1 = lam``); odd: ``theta = lam^2`` (``r1 = lam - 1``)."""
    u2 = P.u2
    lam = P.lam
    return (
        Sl2Restriction(u2, (lam + 1) ** 2, lam),
        Sl2Restriction(u2, lam**2, lam - 1),
    )


def graded_socle_descriptor(P: OspParams) -> tuple[SocleDescriptor, SocleDescriptor]:
    out = []
    for part in restrict_to_sl2(P):
        M = part.module()
        D = sl2.socle_descriptor(M)
        meta = {"theta": str(part.theta), "omega": str(M.base.omega), "u2": str(M.u)}
        out.append(SocleDescriptor(D.rays, D.includes_all_polynomials, meta))
    return out[0], out[1]


def even_e_matches_sl2(P: OspParams, b: PartialFraction) -> bool:
    """``p^2`` on ``(b, 0)`` equals the sl2 ``e``-action at ``u^(2)`` (no strip change)."""
    lhs = act_e(P, GradedElement(b, PartialFraction.zero()))
    rhs = sl2.e_action(P.u2, b)
    return lhs.odd.is_zero() and lhs.even == rhs


# -- isomorphism, parity ------------------------------------------------------------

def graded_iso(P: OspParams, Q: OspParams) -> bool:
    if P.lam != Q.lam:
        return False
    ratio = Q.u / P.u
    return in_G_sigma(ratio, SIGMA1) or in_G_sigma(-ratio, SIGMA1)


def parity_change(P: OspParams) -> OspParams:
    """Parameters of the parity-shifted module: ``(u, -lam - 1)``."""
    return OspParams(P.u, -P.lam - 1)


# -- Weyl quotient ------------------------------------------------------------------

def theta_images() -> dict[str, SkewLaurent]:
    """Images under the quotient map to ``A_1``, with scaled odd generators ``p' = a``, ``q' = -b``."""
    W = weyl.embedding()
    a, b = W["a"], W["b"]
    half = SkewLaurent.scalar(HALF, a.shift)
    return {
        "p'": a,
        "q'": -b,
        "h": -(a * b + b * a) * half,
        "e": a * a * half,
        "f": -(b * b) * half,
        "a": a,
        "b": b,
    }


def theta_quotient_check() -> bool:
    """Defining relations of osp(1|2) under the quotient map, with ``Sigma`` sent to 0."""
    T = theta_images()
    p, q, h, e, f, a, b = (T[k] for k in ("p'", "q'", "h", "e", "f", "a", "b"))
    one = SkewLaurent.scalar(1, a.shift)
    half = SkewLaurent.scalar(HALF, a.shift)
    return (
        p * p == e * 2
        and q * q == f * (-2)
        and p * q + q * p == h * 2
        and p * q - q * p + one == SkewLaurent({}, a.shift)
        and h == -(a * b) + half
        and h * p - p * h == p
        and h * q - q * h == -q
        and h * e - e * h == e * 2
        and h * f - f * h == f * (-2)
        and e * f - f * e == h
    )


@dataclass(frozen=True)
class UngradedOspModule:
    """A Weyl module ``N_u`` viewed as an osp(1|2) module through the quotient map.

    Odd generators are exposed in the scaled form ``p' = sqrt(2) p`` and
    ``q' = sqrt(2) q`` so that no square root enters the coefficient field.
    """

    weyl_params: weyl.ModuleParamWeyl

    def act_p_scaled(self, v: PartialFraction) -> PartialFraction:
        return weyl.act_a(self.weyl_params, v)

    def act_q_scaled(self, v: PartialFraction) -> PartialFraction:
        return -weyl.act_b(self.weyl_params, v)

    def act_h(self, v: PartialFraction) -> PartialFraction:
        """``-(ab + ba)/2``, which is multiplication by ``(h - 1)/2``."""
        P = self.weyl_params
        ab = weyl.act_a(P, weyl.act_b(P, v))
        ba = weyl.act_b(P, weyl.act_a(P, v))
        return (ab + ba).scale(-HALF)

    def act_e(self, v: PartialFraction) -> PartialFraction:
        P = self.weyl_params
        return weyl.act_a(P, weyl.act_a(P, v)).scale(HALF)

    def act_f(self, v: PartialFraction) -> PartialFraction:
        P = self.weyl_params
        return weyl.act_b(P, weyl.act_b(P, v)).scale(-HALF)

    def act_scasimir(self, v: PartialFraction) -> PartialFraction:
        """``pq - qp + 1/2 = (p'q' - q'p')/2 + 1/2``."""
        pq = self.act_p_scaled(self.act_q_scaled(v))
        qp = self.act_q_scaled(self.act_p_scaled(v))
        return (pq - qp + v).scale(HALF)

    def scasimir_scalar(self) -> GaussianRational:
        img = self.act_scasimir(PartialFraction.one())
        if not img.is_polynomial() or img.poly.degree > 0:
            raise NonScalarAction("super Casimir is not scalar on the ungraded module")
        return img.poly(GR(0)) if not img.is_zero() else GR(0)

    def isomorphic(self, other: "UngradedOspModule") -> bool:
        return weyl.weyl_isomorphic(self.weyl_params, other.weyl_params)


def ungraded_to_weyl(P: weyl.ModuleParamWeyl) -> UngradedOspModule:
    return UngradedOspModule(P)
