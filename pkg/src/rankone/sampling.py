"""Seeded random generators for property checks and the acceptance suite."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exactfield import GaussianRational, FactoredRF, PartialFraction, Polynomial

__all__ = [
    "random_gaussian",
    "random_root",
    "random_partial_fraction",
    "random_factored",
    "random_polynomial",
]


def random_gaussian(rng: random.Random, bound: int = 5, denom: int = 3, complex_part: bool = True) -> GaussianRational:
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, denom))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, denom)) if complex_part and rng.random() < 0.3 else 0
    return GaussianRational(re, im)


def random_nonzero_gaussian(rng: random.Random, bound: int = 5, denom: int = 3) -> GaussianRational:
    while True:
        c = random_gaussian(rng, bound, denom)
        if not c.is_zero():
            return c


def random_root(rng: random.Random, span: int = 4) -> GaussianRational:
    """A root with half-integer real part and occasionally a unit imaginary part."""
    return GaussianRational(Fraction(rng.randint(-2 * span, 2 * span), 2), rng.choice((0, 0, 0, 1, -1)))


def random_polynomial(rng: random.Random, degree: int = 3) -> Polynomial:
    return Polynomial([random_gaussian(rng) for _ in range(rng.randint(0, degree) + 1)])


def random_partial_fraction(
    rng: random.Random, roots: Sequence[GaussianRational], max_order: int = 2, degree: int = 2
) -> PartialFraction:
    """Random element with a small polynomial part and poles drawn from ``roots``."""
    out = PartialFraction.from_polynomial(random_polynomial(rng, degree))
    for t in rng.sample(list(roots), k=min(len(roots), rng.randint(0, 3))):
        for k in range(1, rng.randint(1, max_order) + 1):
            out = out + PartialFraction.pole(t, k, random_gaussian(rng))
    return out


def random_factored(
    rng: random.Random, roots: Sequence[GaussianRational] | None = None, max_roots: int = 2, max_exp: int = 3
) -> FactoredRF:
    """Random ``c * prod (h - t)^m`` with ``|m| <= max_exp``."""
    factors: dict = {}
    for _ in range(rng.randint(0, max_roots)):
        t = rng.choice(list(roots)) if roots else random_root(rng)
        m = rng.choice([e for e in range(-max_exp, max_exp + 1) if e])
        factors[t] = factors.get(t, 0) + m
    return FactoredRF(random_nonzero_gaussian(rng), factors)
