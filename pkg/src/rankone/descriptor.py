"""Finite symbolic descriptions of the infinite socle bases.

A socle is ``C[h]`` plus a union of pole rays.  A ray with base ``s`` and
direction ``d`` admits the fractions ``1/(h - s - d*i)^k`` for ``i >= start``
and ``1 <= k <= bound(i)``, where ``bound`` is a non-increasing step function.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactfield import GR, GaussianRational, PartialFraction

__all__ = ["PoleRay", "SocleDescriptor", "membership", "enumerate_window", "pole_patterns_of"]


@dataclass(frozen=True)
class PoleRay:
    base: GaussianRational
    direction: int
    start: int
    bounds: tuple[tuple[int, int], ...]
    tail_bound: int

    def __post_init__(self):
        if self.direction not in (-2, 2, -1, 1):
            raise ValueError(f"bad ray direction {self.direction}")
        prev = None
        for i, k in self.bounds:
            if prev is not None and k > prev:
                raise ValueError("ray order bounds must be non-increasing")
            prev = k
        if self.bounds and self.tail_bound != self.bounds[-1][1]:
            raise ValueError("tail bound must equal the last step value")

    @classmethod
    def constant(cls, base, direction: int, start: int, bound: int) -> "PoleRay":
        bound = max(bound, 0)
        return cls(GR(base), direction, start, ((start, bound),), bound)

    @classmethod
    def stepwise(cls, base, direction: int, start: int, steps) -> "PoleRay":
        """``steps`` is an iterable of ``(index, bound)`` change points; values clamp at 0."""
        out: list[tuple[int, int]] = []
        for i, k in sorted(steps):
            k = max(k, 0)
            if out and out[-1][1] == k:
                continue
            out.append((i, k))
            if k == 0:
                break
        return cls(GR(base), direction, start, tuple(out), out[-1][1])

    def bound(self, i: int) -> int:
        if i < self.start:
            return 0
        k = 0
        for idx, b in self.bounds:
            if idx <= i:
                k = b
            else:
                break
        return k

    def is_finite(self) -> bool:
        return self.tail_bound == 0

    def last_index(self) -> int | None:
        """Largest admitted index for a finite ray (``None`` if empty or infinite)."""
        if not self.is_finite():
            return None
        nonzero = [i for i, k in self.bounds if k > 0]
        if not nonzero:
            return None
        return self.bounds[-1][0] - 1

    def pole(self, i: int) -> GaussianRational:
        return self.base + GR(self.direction * i)

    def index_of(self, t: GaussianRational) -> int | None:
        diff = GR(t) - self.base
        if not diff.is_real():
            return None
        q = diff.re / self.direction
        if q.denominator != 1:
            return None
        return int(q)

    def is_empty(self) -> bool:
        return all(k == 0 for _, k in self.bounds)

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "direction": self.direction,
            "start": self.start,
            "bounds": [[i, k] for i, k in self.bounds],
            "tailBound": self.tail_bound,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PoleRay":
        return cls(
            GR(obj["base"]),
            int(obj["direction"]),
            int(obj["start"]),
            tuple((int(i), int(k)) for i, k in obj["bounds"]),
            int(obj["tailBound"]),
        )


@dataclass(frozen=True)
class SocleDescriptor:
    rays: tuple[PoleRay, ...] = ()
    includes_all_polynomials: bool = True
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def nonempty_rays(self) -> tuple[PoleRay, ...]:
        return tuple(r for r in self.rays if not r.is_empty())

    def all_rays_finite(self) -> bool:
        return all(r.is_finite() for r in self.rays)

    def admits(self, t, k: int) -> bool:
        t = GR(t)
        for ray in self.rays:
            i = ray.index_of(t)
            if i is not None and ray.bound(i) >= k:
                return True
        return False

    def patterns(self, max_shift: int) -> set[tuple[GaussianRational, int]]:
        """Admitted ``(pole, order)`` pairs with ray index ``<= max_shift``."""
        out = set()
        for ray in self.rays:
            for i in range(ray.start, max_shift + 1):
                for k in range(1, ray.bound(i) + 1):
                    out.add((ray.pole(i), k))
        return out

    def to_json(self) -> dict:
        return {"polynomials": self.includes_all_polynomials, "rays": [r.to_json() for r in self.nonempty_rays()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SocleDescriptor":
        return cls(tuple(PoleRay.from_json(r) for r in obj["rays"]), bool(obj.get("polynomials", True)))


def membership(D: SocleDescriptor, b: PartialFraction) -> bool:
    """Whether every pole of ``b`` (with its order) is admitted by some ray."""
    if not D.includes_all_polynomials and not b.poly.is_zero():
        return False
    return all(D.admits(t, len(cs)) for t, cs in b.poles)


def _pattern_key(p):
    t, k = p
    return (t.sort_key(), k)


def enumerate_window(D: SocleDescriptor, max_shift: int, max_degree: int) -> list[PartialFraction]:
    """Monomials ``h^0..h^max_degree`` followed by admitted fractions with ray index ``<= max_shift``."""
    if max_shift < 0 or max_degree < 0:
        raise ValueError("window parameters must be non-negative")
    out = [PartialFraction.monomial(d) for d in range(max_degree + 1)]
    for t, k in sorted(D.patterns(max_shift), key=_pattern_key):
        out.append(PartialFraction.pole(t, k))
    return out


def pole_patterns_of(elements) -> set[tuple[GaussianRational, int]]:
    """Patterns of the pure basis fractions in a list such as :func:`enumerate_window` returns."""
    out = set()
    for b in elements:
        if b.poly.is_zero() and len(b.poles) == 1:
            t, cs = b.poles[0]
            if all(c.is_zero() for c in cs[:-1]) and cs[-1] == 1:
                out.add((t, len(cs)))
    return out
