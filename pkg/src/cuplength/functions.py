"""Persistent cup-length functions as generator sets, and erosion distance.

A function Int -> N is represented by finitely many generators
(interval, value); it evaluates on a query interval to the maximum value
over generators containing the query, 0 when none does.  This makes the
function monotone by construction (shrinking the query can only grow the
containing set) and makes reconstruction from a diagram the identity on
the point data.

Erosion distance is computed exactly: the eroded predicate is monotone in
epsilon, and as epsilon grows the combinatorial configuration only changes
when a shrunk generator endpoint crosses another endpoint or a generator
collapses to a point.  All such breakpoints are differences or half
differences of finite generator endpoints, so probing the predicate
between consecutive candidates pins the infimum to a candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:  # pragma: no cover
    from .cup import CupDiagram

INF = math.inf


@dataclass(frozen=True)
class Interval:
    """A real interval with explicit endpoint closures; right end may be inf."""

    left: float
    right: float
    left_closed: bool = True
    right_closed: bool = False

    def __post_init__(self) -> None:
        if math.isinf(self.left):
            raise ValueError("left endpoint must be finite")
        if math.isinf(self.right) and self.right_closed:
            object.__setattr__(self, "right_closed", False)
        if self.left > self.right:
            raise ValueError(f"empty interval ({self.left}, {self.right})")
        if self.left == self.right and not (self.left_closed and self.right_closed):
            raise ValueError("a degenerate interval must be closed at both ends")

    @classmethod
    def closed(cls, a: float, b: float) -> "Interval":
        return cls(a, b, True, True) if not math.isinf(b) else cls(a, b, True, False)

    @classmethod
    def closed_open(cls, a: float, b: float) -> "Interval":
        return cls(a, b, True, False)

    @classmethod
    def open(cls, a: float, b: float) -> "Interval":
        return cls(a, b, False, False)

    @classmethod
    def point(cls, a: float) -> "Interval":
        return cls(a, a, True, True)

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.right)

    @property
    def length(self) -> float:
        return self.right - self.left

    def contains(self, other: "Interval") -> bool:
        """Set containment, honoring closures: a closed query endpoint may
        not sit on an open generator endpoint."""
        if self.left > other.left:
            return False
        if self.left == other.left and other.left_closed and not self.left_closed:
            return False
        if self.right < other.right:
            return False
        if self.right == other.right and other.right_closed and not self.right_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval | None":
        if self.left > other.left or (self.left == other.left and not self.left_closed):
            left, lc = self.left, self.left_closed
            if other.left == left:
                lc = lc and other.left_closed
        else:
            left, lc = other.left, other.left_closed
            if self.left == left:
                lc = lc and self.left_closed
        if self.right < other.right or (self.right == other.right and not self.right_closed):
            right, rc = self.right, self.right_closed
            if other.right == right:
                rc = rc and other.right_closed
        else:
            right, rc = other.right, other.right_closed
            if self.right == right:
                rc = rc and self.right_closed
        if left > right or (left == right and not (lc and rc)):
            return None
        return Interval(left, right, lc, rc)

    def __str__(self) -> str:
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        right = "inf" if self.unbounded else f"{self.right:g}"
        return f"{lb}{self.left:g}, {right}{rb}"


Generator = tuple[Interval, int]


@dataclass(frozen=True)
class CupFunction:
    """Finite generator set for a monotone function from intervals to N."""

    generators: tuple[Generator, ...]

    def __post_init__(self) -> None:
        gens = sorted(
            set(self.generators),
            key=lambda g: (g[0].left, g[0].right, g[0].left_closed, g[0].right_closed, g[1]),
        )
        for _, v in gens:
            if v < 1:
                raise ValueError("generator values must be positive")
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Generator]) -> "CupFunction":
        return cls(tuple(pairs))

    @classmethod
    def zero(cls) -> "CupFunction":
        return cls(())

    def __call__(self, interval: Interval) -> int:
        return evaluate(self, interval)


def evaluate(f: CupFunction, interval: Interval) -> int:
    """Largest generator value over generators containing the query, else 0."""
    best = 0
    for gen, value in f.generators:
        if value > best and gen.contains(interval):
            best = value
    return best


def reconstruct(diagram: "CupDiagram") -> CupFunction:
    """Cup-length function realized by a diagram: its points become the
    generators, so evaluation is the max of the diagram over containing
    intervals."""
    return CupFunction.from_pairs((i, v) for i, v in diagram.points.items())


def pointwise_sum(f: CupFunction, g: CupFunction) -> CupFunction:
    """Generator set evaluating to f + g everywhere.

    Besides both generator sets, every non-empty pairwise intersection is
    added with the summed value; the max rule then realizes the sum.
    """
    gens = list(f.generators) + list(g.generators)
    for gf, vf in f.generators:
        for gg, vg in g.generators:
            inter = gf.intersect(gg)
            if inter is not None:
                gens.append((inter, vf + vg))
    return CupFunction.from_pairs(gens)


def pointwise_max(f: CupFunction, g: CupFunction) -> CupFunction:
    return CupFunction.from_pairs(tuple(f.generators) + tuple(g.generators))


def _erosion_candidates(f: CupFunction, g: CupFunction) -> list[float]:
    ends: list[float] = []
    for gen, _ in f.generators + g.generators:
        ends.append(gen.left)
        if not gen.unbounded:
            ends.append(gen.right)
    cands = {0.0}
    for i, x in enumerate(ends):
        for y in ends[i:]:
            d = abs(x - y)
            cands.add(d)
            cands.add(d / 2.0)
    return sorted(cands)


def _covers_shrunk(f: CupFunction, outer: Interval, value: int, eps: float) -> bool:
    """Does some generator of f with value >= ``value`` contain every closed
    query [a, b] whose eps-expansion lies inside ``outer``?"""
    lo = outer.left + eps
    left_attained = outer.left_closed
    if outer.unbounded:
        hi = INF
        right_attained = False
    else:
        hi = outer.right - eps
        right_attained = outer.right_closed
        if lo > hi:
            return True
        if lo == hi and not (left_attained and right_attained):
            return True
    for gen, v in f.generators:
        if v < value:
            continue
        if gen.left > lo:
            continue
        if gen.left == lo and left_attained and not gen.left_closed:
            continue
        if outer.unbounded:
            if not gen.unbounded:
                continue
        else:
            if gen.right < hi:
                continue
            if gen.right == hi and right_attained and not gen.right_closed:
                continue
        return True
    return False


def _eroded(f: CupFunction, g: CupFunction, eps: float) -> bool:
    """The eroded predicate for closed query intervals at a given eps."""
    for outer, value in g.generators:
        if not _covers_shrunk(f, outer, value, eps):
            return False
    for outer, value in f.generators:
        if not _covers_shrunk(g, outer, value, eps):
            return False
    return True


def erosion_distance(f: CupFunction, g: CupFunction) -> float:
    """Infimum over eps such that each function dominates the other after
    expanding closed query intervals by eps; inf if no eps suffices.

    The predicate is monotone in eps and piecewise constant between the
    endpoint-difference candidates, so it is probed at midpoints of
    consecutive candidates and the left candidate of the first passing
    gap is the infimum.
    """
    cands = _erosion_candidates(f, g)
    for i, c in enumerate(cands):
        upper = cands[i + 1] if i + 1 < len(cands) else c + 1.0
        if _eroded(f, g, (c + upper) / 2.0):
            return c
    return INF


def analytic_vr_circle(L: int) -> CupFunction:
    """Cup-length function of the Rips filtration of the unit geodesic circle.

    Value 1 on each open scale window (2*pi*l/(2l+1), 2*pi*(l+1)/(2l+3)),
    materialized for l = 0..L.
    """
    if L < 1:
        raise ValueError("L must be at least 1")
    gens = []
    for l in range(L + 1):
        a = 2.0 * math.pi * l / (2 * l + 1)
        b = 2.0 * math.pi * (l + 1) / (2 * l + 3)
        gens.append((Interval.open(a, b), 1))
    return CupFunction.from_pairs(gens)


def analytic_vr_torus(L: int) -> CupFunction:
    """Same windows as the circle at value 2 (the product of two circles
    under the sup metric doubles the cup-length on each window)."""
    return CupFunction.from_pairs((gen, 2) for gen, _ in analytic_vr_circle(L).generators)


def analytic_vr_wedge_lower() -> CupFunction:
    """Known lower part of the Rips cup-length function of a wedge of a
    circle, a 2-sphere and a circle: value 1 on (0, arccos(-1/3))."""
    zeta = math.acos(-1.0 / 3.0)
    return CupFunction.from_pairs([(Interval.open(0.0, zeta), 1)])
