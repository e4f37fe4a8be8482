"""Cup products of Z2 cochains and the persistent cup-length diagram.

The diagram algorithm multiplies bar representatives pairwise: new
factors always come from the barcode itself, which together with
associativity and symmetry of the product reaches every multi-fold
product.  Each non-trivial product is located on the critical grid: its
right end is inherited from the intersection of the factor intervals and
its left end is the smallest barcode birth at which the restricted
product cochain is still not a coboundary.  Zero-ness of the restricted
class is monotone along the filtration, so that left end is found by
bisection over the birth grid; the result is identical to a linear
left-to-right descent.
"""

from __future__ import annotations

import math
import os
from bisect import bisect_left, bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import z2
from .cohomology import AnnotatedBarcode, Cochain, compute_barcode
from .functions import Interval
from .simplicial import FilteredComplex, Verts, truncate

INF = math.inf


def cup_product(sigma1: Cochain, sigma2: Cochain, c: FilteredComplex) -> Cochain:
    """Cochain-level cup product inside c.

    Summand pairs whose overlap vertex matches concatenate to a candidate
    simplex; candidates present in c survive, cancelling mod 2.  Returns
    the zero cochain when the product dimension exceeds the dimension of
    the complex.
    """
    p = sigma1.p + sigma2.p
    if p > c.dim or sigma1.is_zero() or sigma2.is_zero():
        return Cochain.zero(p)
    by_first: dict[int, list[Verts]] = {}
    for b in sigma2.summands:
        by_first.setdefault(b[0], []).append(b)
    index = c.index_of
    out: set[Verts] = set()
    for a in sigma1.summands:
        for b in by_first.get(a[-1], ()):
            cand = a + b[1:]
            if cand in index:
                out ^= {cand}
    return Cochain(p, frozenset(out))


@dataclass(frozen=True)
class _Entry:
    """A product interval with the cochain that realizes it."""

    interval: Interval
    cochain: Cochain

    def sort_key(self):
        return (
            self.interval.left,
            self.interval.right,
            self.cochain.p,
            self.cochain.sorted_summands(),
        )


@dataclass
class CupDiagram:
    """Finite map from intervals to the maximal product fold realizing them."""

    points: dict[Interval, int]

    def sorted_points(self) -> list[tuple[Interval, int]]:
        return sorted(
            self.points.items(),
            key=lambda kv: (kv[0].left, kv[0].unbounded, kv[0].right, kv[1]),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CupDiagram) and self.points == other.points


@dataclass
class RunStats:
    m_k: int
    q_1: int
    q_ell: dict[int, int] = field(default_factory=dict)
    product_count: int = 0
    coboundary_test_count: int = 0


class _TestCounter:
    __slots__ = ("n",)

    def __init__(self) -> None:
        self.n = 0


def _grid_right_end(interval: Interval, c: FilteredComplex) -> float:
    """Last critical value at which the (closed-open) interval is alive."""
    if interval.unbounded:
        return c.final_value()
    return c.previous_critical(interval.right)


def support(
    sigma_prod: Cochain,
    factor_intervals: list[Interval],
    rc: z2.ReducedCoboundary,
    c: FilteredComplex,
    birth_grid: list[float],
    _counter: _TestCounter | None = None,
) -> Interval | None:
    """Parameter interval on which a product of representatives is non-zero.

    Returns None when the factor intervals do not intersect or the product
    class is already exact at the right end of their intersection.
    Otherwise the right end is that of the intersection and the left end
    is the smallest birth value whose stage still carries a non-zero
    restriction.
    """
    counter = _counter if _counter is not None else _TestCounter()
    inter: Interval | None = factor_intervals[0]
    for other in factor_intervals[1:]:
        inter = inter.intersect(other)
        if inter is None:
            return None
    d_grid = _grid_right_end(inter, c)

    def exact_at(t: float) -> bool:
        counter.n += 1
        mask = 0
        position_of = rc.position_of
        grades = c.grades
        index = c.index_of
        for v in sigma_prod.summands:
            if grades[index[v]] <= t:
                mask |= 1 << position_of[v]
        return z2.in_reduced_column_space(mask, t, rc)

    if exact_at(d_grid):
        return None
    lo = bisect_left(birth_grid, inter.left)
    hi = bisect_right(birth_grid, d_grid) - 1
    if hi < lo:
        return None
    # With trimming the grid may be coarser than the true support, so the
    # topmost candidate can already be exact; then no candidate is usable.
    if birth_grid[hi] != d_grid and exact_at(birth_grid[hi]):
        return None
    # invariant: non-exact at birth_grid[hi]; exactness is monotone downward
    while lo < hi:
        mid = (lo + hi) // 2
        if exact_at(birth_grid[mid]):
            lo = mid + 1
        else:
            hi = mid
    b_left = birth_grid[hi]
    return Interval(b_left, inter.right, left_closed=True, right_closed=inter.right_closed)


def cup_diagram(
    b: AnnotatedBarcode, c: FilteredComplex, k: int, trim_eps: float = 0.0
) -> tuple[CupDiagram, RunStats]:
    """Persistent cup-length diagram of a (k+1)-truncated filtration.

    Bars of length below ``trim_eps`` are discarded first.  Every
    surviving bar contributes its own interval at value 1; repeated
    products against the bar set contribute the interval of each
    non-empty support at the fold count, merged by maximum.  Products
    whose total dimension would exceed k are skipped, matching the
    truncation's trustworthy range.

    Results are independent of evaluation order; set CUPLENGTH_THREADS to
    evaluate the product pairs in a thread pool (the output is identical
    to the serial run by construction).
    """
    if trim_eps < 0:
        raise ValueError("trim_eps must be non-negative")
    if any(bar.dim > k for bar in b.bars):
        raise ValueError("barcode contains dimensions above k")
    bars = [bar for bar in b.bars if bar.length >= trim_eps]
    points: dict[Interval, int] = {}

    def record(interval: Interval, value: int) -> None:
        if points.get(interval, 0) < value:
            points[interval] = value

    base = [_Entry(bar.interval(), bar.representative) for bar in bars]
    for e in base:
        record(e.interval, 1)

    stats = RunStats(
        m_k=sum(1 for v in c.simplices if len(v) > 1),
        q_1=len(base),
        q_ell={1: len(base)},
    )
    if not base or k < 2:
        return CupDiagram(points), stats

    rc = z2.reduce_coboundary(c, include_dim0=False)
    birth_grid = sorted({e.interval.left for e in base})
    threads = max(1, int(os.environ.get("CUPLENGTH_THREADS", "1")))

    def one_pair(pair: tuple[_Entry, _Entry], counter: _TestCounter):
        e1, e2 = pair
        sigma = cup_product(e1.cochain, e2.cochain, c)
        if sigma.is_zero():
            return None
        supp = support(
            sigma, [e1.interval, e2.interval], rc, c, birth_grid, _counter=counter
        )
        if supp is None:
            return None
        return _Entry(supp, sigma)

    current = base
    ell = 1
    while current and ell <= k - 1:
        pairs = [
            (e1, e2)
            for e1 in base
            for e2 in current
            if e1.cochain.p + e2.cochain.p <= min(k, c.dim)
            and e1.interval.intersect(e2.interval) is not None
        ]
        stats.product_count += len(pairs)
        if threads > 1 and len(pairs) > 1:
            chunks = [pairs[i::threads] for i in range(threads)]
            counters = [_TestCounter() for _ in chunks]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                produced = list(
                    pool.map(
                        lambda cc: [one_pair(p, cc[1]) for p in cc[0]],
                        zip(chunks, counters),
                    )
                )
            results = [e for chunk in produced for e in chunk if e is not None]
            for cnt in counters:
                stats.coboundary_test_count += cnt.n
        else:
            counter = _TestCounter()
            results = [r for r in (one_pair(p, counter) for p in pairs) if r is not None]
            stats.coboundary_test_count += counter.n
        fresh: dict[tuple[Interval, frozenset[Verts]], _Entry] = {}
        for e in results:
            fresh.setdefault((e.interval, e.cochain.summands), e)
        nxt = sorted(fresh.values(), key=_Entry.sort_key)
        for e in nxt:
            record(e.interval, ell + 1)
        ell += 1
        stats.q_ell[ell] = len(nxt)
        current = nxt
    return CupDiagram(points), stats


def compute_cup_diagram(
    c: FilteredComplex, k: int, trim_eps: float = 0.0
) -> tuple[CupDiagram, RunStats, AnnotatedBarcode]:
    """Truncate, compute the annotated barcode, and build the diagram."""
    ct = truncate(c, k + 1)
    barcode = compute_barcode(ct, k)
    diagram, stats = cup_diagram(barcode, ct, k, trim_eps)
    return diagram, stats, barcode
