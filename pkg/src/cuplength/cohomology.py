"""Persistent cohomology barcodes with representative cocycles over Z2.

The barcode is harvested from a single column reduction of the full
coboundary matrix (vertex block included) in anti-filtration cosimplex
order.  A non-zero reduced column pairs its (birth) simplex with the
simplex of its pivot row (death); a zero column whose own row is never a
pivot yields an essential class.  The matching V column, read as a set of
cosimplices, is the representative cocycle: its coboundary is supported
on simplices entering at or after the death grade, so its restriction to
any stage before death is a cocycle there.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import z2
from .functions import Interval
from .simplicial import FilteredComplex, Verts, faces

INF = math.inf


@dataclass(frozen=True)
class Cochain:
    """A Z2 formal sum of p-cosimplices, stored as the set of summands."""

    p: int
    summands: frozenset[Verts]

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", frozenset(tuple(v) for v in self.summands))
        for v in self.summands:
            if len(v) != self.p + 1:
                raise ValueError(f"summand {v} is not {self.p}-dimensional")

    @classmethod
    def zero(cls, p: int) -> "Cochain":
        return cls(p, frozenset())

    @classmethod
    def of(cls, *summands) -> "Cochain":
        vs = [tuple(s) for s in summands]
        if not vs:
            raise ValueError("use Cochain.zero(p) for the empty cochain")
        return cls(len(vs[0]) - 1, frozenset(vs))

    def is_zero(self) -> bool:
        return not self.summands

    def __xor__(self, other: "Cochain") -> "Cochain":
        if self.p != other.p:
            raise ValueError("cochain dimensions differ")
        return Cochain(self.p, self.summands ^ other.summands)

    def restrict(self, c: FilteredComplex, t: float) -> "Cochain":
        """Drop the summands that have not entered the filtration by t."""
        return Cochain(self.p, frozenset(v for v in self.summands if c.grade_of(v) <= t))

    def sorted_summands(self) -> list[Verts]:
        return sorted(self.summands)


def cochain_coboundary(c: FilteredComplex, sigma: Cochain, t: float) -> Cochain:
    """Coboundary of sigma evaluated in the stage-t subcomplex."""
    out: set[Verts] = set()
    q = sigma.p + 1
    for verts, grade in zip(c.simplices, c.grades):
        if grade > t:
            break
        if len(verts) != q + 1:
            continue
        count = sum(1 for f in faces(verts) if f in sigma.summands)
        if count & 1:
            out.add(verts)
    return Cochain(q, frozenset(out))


@dataclass(frozen=True)
class Bar:
    """One barcode interval with its representative cocycle.

    Reported as closed-open [birth, death); ``death`` is ``math.inf`` for
    essential classes.  The representative of a finite bar restricts to a
    cocycle at every critical value strictly before death; an essential
    bar's representative is a cocycle of the final stage.
    """

    dim: int
    birth: float
    death: float
    representative: Cochain

    def __post_init__(self) -> None:
        if not self.birth < self.death:
            raise ValueError(f"bar [{self.birth}, {self.death}) is empty")

    @property
    def essential(self) -> bool:
        return math.isinf(self.death)

    @property
    def length(self) -> float:
        return self.death - self.birth

    def contains(self, t: float) -> bool:
        return self.birth <= t < self.death

    def interval(self) -> Interval:
        return Interval(self.birth, self.death, left_closed=True, right_closed=False)


def _bar_sort_key(bar: Bar):
    return (bar.death, bar.birth, bar.dim, bar.representative.sorted_summands())


@dataclass
class AnnotatedBarcode:
    """Positive-dimensional bars, sorted by death then birth."""

    bars: list[Bar]
    dim_bound: int

    def __post_init__(self) -> None:
        self.bars = sorted(self.bars, key=_bar_sort_key)

    def in_dim(self, p: int) -> list[Bar]:
        return [b for b in self.bars if b.dim == p]

    def __len__(self) -> int:
        return len(self.bars)


def _harvest(c: FilteredComplex, max_bar_dim: int) -> list[Bar]:
    rc = z2.reduce_coboundary(c, include_dim0=True)
    m = rc.R.n_rows
    simplices = c.simplices
    grades = c.grades
    bars = []
    for col in range(m):
        i = m - 1 - col
        dim = len(simplices[i]) - 1
        if dim > max_bar_dim:
            continue
        pivot = rc.R.pivot(col)
        if pivot is not None:
            death = grades[m - 1 - pivot]
            if grades[i] == death:
                continue
            rep = _column_cochain(rc.V, col, simplices, m, dim)
            bars.append(Bar(dim, grades[i], death, rep))
        elif col not in rc.pivots:
            rep = _column_cochain(rc.V, col, simplices, m, dim)
            bars.append(Bar(dim, grades[i], INF, rep))
    return bars


def _column_cochain(V: z2.SparseZ2Matrix, col: int, simplices: list[Verts], m: int, p: int) -> Cochain:
    return Cochain(p, frozenset(simplices[m - 1 - r] for r in V.column(col)))


def compute_barcode(c: FilteredComplex, k: int) -> AnnotatedBarcode:
    """Barcode of dimensions 1..k with a family of representative cocycles.

    The complex must already be truncated to dimension k+1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if c.dim > k + 1:
        raise ValueError(f"complex has dimension {c.dim}; truncate to {k + 1} first")
    bars = [b for b in _harvest(c, k) if b.dim >= 1]
    return AnnotatedBarcode(bars, dim_bound=k)


def connected_component_bars(c: FilteredComplex) -> list[Bar]:
    """Dimension-0 bars (component merge events), for reporting."""
    return sorted((b for b in _harvest(c, 0)), key=_bar_sort_key)


@dataclass
class FamilyReport:
    """Outcome of validating the representative-family property."""

    ok: bool
    first_failure: tuple[float, int] | None = None
    failures: list[tuple[float, int, str]] = field(default_factory=list)


def validate_family(b: AnnotatedBarcode, c: FilteredComplex) -> FamilyReport:
    """Check that the bar representatives restrict to a basis at every stage.

    At each critical value t and dimension p, the representatives of the
    bars containing t must restrict to cocycles whose classes are linearly
    independent modulo coboundaries and as numerous as the oracle's
    dim H^p.  Independence is checked through exactness tests of all 2^n-1
    non-trivial combinations (random combinations past 12 alive bars).
    """
    from . import oracle

    report = FamilyReport(ok=True)

    def fail(t: float, p: int, reason: str) -> None:
        if report.ok:
            report.first_failure = (t, p)
        report.ok = False
        report.failures.append((t, p, reason))

    rc = z2.reduce_coboundary(c, include_dim0=False)
    rng = random.Random(0)
    for t in c.critical_values:
        basis = oracle.cohomology_basis(c, t, b.dim_bound)
        for p in range(1, b.dim_bound + 1):
            alive = [bar for bar in b.bars if bar.dim == p and bar.contains(t)]
            expected = len(basis.basis.get(p, []))
            if len(alive) != expected:
                fail(t, p, f"{len(alive)} bars alive but dim H^{p} = {expected}")
                continue
            restricted = [bar.representative.restrict(c, t) for bar in alive]
            bad = next(
                (i for i, s in enumerate(restricted) if not cochain_coboundary(c, s, t).is_zero()),
                None,
            )
            if bad is not None:
                fail(t, p, f"representative of bar {alive[bad]} is not a cocycle at {t}")
                continue
            n = len(restricted)
            if n == 0:
                continue
            if n <= 12:
                combos = range(1, 1 << n)
            else:
                combos = [rng.randrange(1, 1 << n) for _ in range(256)]
            for mask in combos:
                acc = Cochain.zero(p)
                mm = mask
                while mm:
                    low = mm & -mm
                    acc ^= restricted[low.bit_length() - 1]
                    mm ^= low
                if z2.is_coboundary(acc, t, rc, c):
                    fail(t, p, f"combination {mask:b} of restrictions is exact at {t}")
                    break
    return report
