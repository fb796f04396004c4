"""Brute-force closure of ``C[h]`` under module operators, inside a finite window.

The closure is computed in the quotient ``N_u / C[h]``: the seed already
contains every polynomial, so an element is tracked through its principal
parts only.  The span is kept in exact row-echelon form keyed by basis
fractions ``1/(h - t)^k``; a pattern ``(t, k)`` is reported when that basis
fraction lies in the span.  Images with a pole outside the window, or with
an order above ``max_order``, are discarded.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import WindowTooSmall
from .exactfield import ONE, GaussianRational, PartialFraction, Polynomial

__all__ = ["ClosureResult", "closure_patterns", "orbit_window"]

log = logging.getLogger(__name__)

Key = tuple  # ((re, im), k) sortable stand-in for (t, k)
Operator = Callable[[PartialFraction], PartialFraction]


def _key(t: GaussianRational, k: int):
    return (t.sort_key(), k)


class _Echelon:
    """Row-echelon basis; each row's pivot is its largest key."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> row dict (pivot coefficient 1)
        self.roots: dict = {}  # sort key -> GaussianRational

    def _vector(self, b: PartialFraction) -> dict:
        vec = {}
        for (t, k), c in b.items():
            key = _key(t, k)
            self.roots[key[0]] = t
            vec[key] = c
        return vec

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        while vec:
            top = max(vec)
            row = self.rows.get(top)
            if row is None:
                return vec
            c = vec[top]
            for key, v in row.items():
                nv = vec.get(key)
                nv = -c * v if nv is None else nv - c * v
                if nv.is_zero():
                    vec.pop(key, None)
                else:
                    vec[key] = nv
        return vec

    def insert(self, b: PartialFraction) -> bool:
        vec = self.reduce(self._vector(b))
        if not vec:
            return False
        top = max(vec)
        inv = vec[top].inverse()
        self.rows[top] = {key: v * inv for key, v in vec.items()}
        return True

    def contains_basis(self, key) -> bool:
        return not self.reduce({key: ONE})

    def row_pf(self, pivot) -> PartialFraction:
        row = self.rows[pivot]
        return PartialFraction(Polynomial(), {(self.roots[rk], k): v for (rk, k), v in row.items()})

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class ClosureResult:
    patterns: frozenset  # of (GaussianRational, k)
    rank: int
    sweeps: int

    def sorted_patterns(self) -> list[tuple[GaussianRational, int]]:
        return sorted(self.patterns, key=lambda p: (p[0].sort_key(), p[1]))


def orbit_window(bases: Iterable[GaussianRational], step, max_shift: int) -> set[GaussianRational]:
    """Points ``s + j*step`` for every base ``s`` and ``|j| <= max_shift``."""
    out = set()
    for s in bases:
        for j in range(-max_shift, max_shift + 1):
            out.add(s + step * j)
    return out


def closure_patterns(
    operators: Sequence[Operator],
    window: set[GaussianRational],
    max_degree: int,
    rounds: int,
    max_order: int,
) -> ClosureResult:
    """Fixed point of the operators applied to ``C[h]`` (modulo ``C[h]``) within the window.

    Seeds are the principal parts of every operator applied to ``h^0..h^max_degree``.
    Each sweep applies the operators, plus multiplication by ``h`` and by
    ``h - t`` at the poles of the element, to the rows added in the previous
    sweep.  Raises :class:`WindowTooSmall` if new rows still appear after
    ``rounds`` sweeps.
    """
    if max_degree < 0 or rounds < 1:
        raise ValueError("window parameters must be positive")

    def admissible(b: PartialFraction) -> bool:
        return all(t in window and len(cs) <= max_order for t, cs in b.poles)

    def principal(b: PartialFraction) -> PartialFraction:
        return b if b.poly.is_zero() else PartialFraction(Polynomial(), b.poles)

    ech = _Echelon()
    frontier: list[PartialFraction] = []

    def offer(b: PartialFraction):
        b = principal(b)
        if b.is_zero() or not admissible(b):
            return
        if ech.insert(b):
            frontier.append(b)

    for d in range(max_degree + 1):
        mono = PartialFraction.monomial(d)
        for op in operators:
            offer(op(mono))

    sweeps = 0
    while frontier:
        if sweeps >= rounds:
            raise WindowTooSmall(f"closure still growing after {rounds} sweeps (rank {len(ech)})")
        sweeps += 1
        current, frontier = frontier, []
        for b in current:
            for op in operators:
                offer(op(b))
            offer(b.mul_linear(GaussianRational(0)))
            for t, _ in b.poles:
                offer(b.mul_linear(t))
        log.debug("sweep %d: rank %d", sweeps, len(ech))

    patterns = set()
    for t in window:
        for k in range(1, max_order + 1):
            key = _key(t, k)
            ech.roots.setdefault(key[0], t)
            if ech.contains_basis(key):
                patterns.add((t, k))
    return ClosureResult(frozenset(patterns), len(ech), sweeps)
