"""Brute-force ground truth, kept independent of the main pipeline.

Everything here is recomputed from scratch with its own plain Gaussian
elimination over Z2 (bitmask row echelon) and its own cup product against
an explicit stage simplex set.  It exists to verify the reduction-based
pipeline, so it shares no matrix code with it; only the complex and
cochain containers are reused.  Intended for desk-scale instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .cohomology import Cochain
from .errors import NotCriticalValue
from .functions import CupFunction, Interval
from .simplicial import FilteredComplex, Verts, faces

INF = math.inf


class _Echelon:
    """Row-echelon accumulator over Z2 bitmask vectors."""

    def __init__(self) -> None:
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            top = v.bit_length() - 1
            pivot = rows.get(top)
            if pivot is None:
                return v
            v ^= pivot
        return 0

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[v.bit_length() - 1] = v
            return True
        return False

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


class _Stage:
    """The subcomplex at one parameter, with per-dimension indexing."""

    def __init__(self, c: FilteredComplex, t: float):
        self.t = t
        self.alive: set[Verts] = set()
        self.by_dim: dict[int, list[Verts]] = {}
        for verts, grade in zip(c.simplices, c.grades):
            if grade > t:
                break
            self.alive.add(verts)
            self.by_dim.setdefault(len(verts) - 1, []).append(verts)
        self.index: dict[int, dict[Verts, int]] = {
            p: {v: i for i, v in enumerate(sorted(vs))} for p, vs in self.by_dim.items()
        }

    def mask(self, sigma: Cochain) -> int:
        idx = self.index.get(sigma.p, {})
        m = 0
        for v in sigma.summands:
            m |= 1 << idx[v]
        return m

    def coboundary_map(self, p: int) -> list[int]:
        """For each p-simplex (sorted order) the mask of its cofacets."""
        src = self.index.get(p, {})
        out = [0] * len(src)
        up = self.index.get(p + 1, {})
        for verts, bit in up.items():
            for f in faces(verts):
                j = src.get(f)
                if j is not None:
                    out[j] |= 1 << bit
        return out

    def exact_span(self, p: int) -> _Echelon:
        """Echelon of the image of the degree-(p-1) coboundary map."""
        ech = _Echelon()
        if p >= 1:
            for image in self.coboundary_map(p - 1):
                ech.insert(image)
        return ech

    def product(self, sigma1: Cochain, sigma2: Cochain) -> Cochain:
        out: set[Verts] = set()
        for a in sigma1.summands:
            for b in sigma2.summands:
                if a[-1] == b[0]:
                    cand = a + b[1:]
                    if cand in self.alive:
                        out ^= {cand}
        return Cochain(sigma1.p + sigma2.p, frozenset(out))


@dataclass
class CohomBasis:
    """Representative cocycles forming a basis of H^p at one stage."""

    t: float
    basis: dict[int, list[Cochain]]

    def dim(self, p: int) -> int:
        return len(self.basis.get(p, []))


def _kernel_basis(images: list[int]) -> list[int]:
    """Combination masks spanning the kernel of a Z2 linear map given by
    the image of each generator."""
    stored: dict[int, tuple[int, int]] = {}
    kernel = []
    for j, v in enumerate(images):
        combo = 1 << j
        while v:
            top = v.bit_length() - 1
            hit = stored.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        if v:
            stored[v.bit_length() - 1] = (v, combo)
        else:
            kernel.append(combo)
    return kernel


def cohomology_basis(c: FilteredComplex, t: float, k: int) -> CohomBasis:
    """Bases of H^p of the stage-t subcomplex for p = 0..k, by elimination."""
    if t not in c.critical_values:
        raise NotCriticalValue(f"{t} is not a critical value")
    stage = _Stage(c, t)
    basis: dict[int, list[Cochain]] = {}
    for p in range(k + 1):
        gens = sorted(stage.by_dim.get(p, []))
        if not gens:
            basis[p] = []
            continue
        kernel = _kernel_basis(stage.coboundary_map(p))
        exact = stage.exact_span(p)
        reps = []
        for combo in kernel:
            if exact.insert(combo):
                summands = frozenset(gens[i] for i in _bits(combo))
                reps.append(Cochain(p, summands))
        basis[p] = reps
    return CohomBasis(t, basis)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _length_at_stage(
    stage: _Stage, restricted: list[Cochain], k: int, spans: dict[int, _Echelon]
) -> int:
    """Largest number of factors with a non-exact product at this stage.

    Tuples are drawn with repetition from the restricted basis, pruned to
    total dimension at most k; each candidate product is computed at
    cochain level and tested against the exact span of its dimension.
    """

    def span(p: int) -> _Echelon:
        if p not in spans:
            spans[p] = stage.exact_span(p)
        return spans[p]

    def nonzero_class(sigma: Cochain) -> bool:
        if sigma.is_zero():
            return False
        return not span(sigma.p).contains(stage.mask(sigma))

    usable = [s for s in restricted if nonzero_class(s)]
    if not usable:
        return 0
    best = 1
    for ell in range(k, 1, -1):
        found = False
        for tup in combinations_with_replacement(usable, ell):
            if sum(s.p for s in tup) > k:
                continue
            prod = tup[0]
            for extra in tup[1:]:
                prod = stage.product(prod, extra)
                if prod.is_zero():
                    break
            else:
                if nonzero_class(prod):
                    found = True
                    break
        if found:
            best = ell
            break
    return best


def image_cup_length(c: FilteredComplex, t: float, s: float, k: int) -> int:
    """Cup-length of the image ring of the stage-s cohomology inside stage t.

    Restricts a basis of the positive-dimensional cohomology at s down to
    t and searches for the largest tuple (dimension sum capped at k) with
    a product that is not exact at t.
    """
    if t > s:
        raise ValueError("need t <= s")
    if t not in c.critical_values or s not in c.critical_values:
        raise NotCriticalValue(f"({t}, {s}) must be critical values")
    src = cohomology_basis(c, s, k)
    restricted = [
        sigma.restrict(c, t) for p in range(1, k + 1) for sigma in src.basis.get(p, [])
    ]
    stage = _Stage(c, t)
    return _length_at_stage(stage, restricted, k, {})


def oracle_cup_function(c: FilteredComplex, k: int) -> CupFunction:
    """The cup-length function evaluated cell by cell on the critical grid.

    Generators are closed grid rectangles of positive value (the last
    column extends to infinity, since the complex is constant past its
    final critical value), pruned of dominated entries; evaluation on any
    closed interval with critical endpoints equals the direct image
    computation.
    """
    cvs = c.critical_values
    stages = {t: _Stage(c, t) for t in cvs}
    spans: dict[float, dict[int, _Echelon]] = {t: {} for t in cvs}
    gens: list[tuple[Interval, int]] = []
    for sj, s in enumerate(cvs):
        src = cohomology_basis(c, s, k)
        reps = [sigma for p in range(1, k + 1) for sigma in src.basis.get(p, [])]
        for ti in range(sj + 1):
            t = cvs[ti]
            restricted = [sigma.restrict(c, t) for sigma in reps]
            value = _length_at_stage(stages[t], restricted, k, spans[t])
            if value > 0:
                right = INF if sj == len(cvs) - 1 else s
                gens.append((Interval.closed(t, right), value))
    kept = []
    for gen, v in gens:
        dominated = False
        for og, ov in gens:
            if (og, ov) == (gen, v):
                continue
            if og.left <= gen.left and og.right >= gen.right and ov >= v:
                dominated = True
                break
        if not dominated:
            kept.append((gen, v))
    return CupFunction.from_pairs(kept)
