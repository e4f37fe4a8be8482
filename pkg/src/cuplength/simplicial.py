"""Finite filtered simplicial complexes over a discrete grid of critical values.

A complex stores its simplices in a single canonical total order that is
compatible with the filtration: grade ascending, then dimension ascending,
then lexicographic on vertices.  Everything downstream (matrix reduction,
barcode harvesting, stage restriction) indexes simplices by their position
in this order, so the order is part of the data structure's contract.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    AsymmetricMatrix,
    DuplicateSimplex,
    MissingFace,
    NegativeDistance,
    NonMonotoneGrades,
    UnknownSimplex,
)

Verts = tuple[int, ...]


@dataclass(frozen=True)
class Simplex:
    """A simplex as a strictly increasing tuple of non-negative vertex ids."""

    vertices: Verts

    def __post_init__(self) -> None:
        v = tuple(self.vertices)
        object.__setattr__(self, "vertices", v)
        if not v:
            raise ValueError("simplex needs at least one vertex")
        if any(x < 0 for x in v):
            raise ValueError(f"negative vertex id in {v}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"vertices must be strictly increasing: {v}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


def faces(verts: Verts) -> list[Verts]:
    """All codimension-1 faces of a vertex tuple."""
    return [verts[:i] + verts[i + 1 :] for i in range(len(verts))]


def _order_key(verts: Verts, grade: float) -> tuple[float, int, Verts]:
    return (grade, len(verts), verts)


@dataclass
class FilteredComplex:
    """A face-closed simplicial complex with a grade per simplex.

    ``simplices[i]`` is the vertex tuple at order position ``i`` and
    ``grades[i]`` its filtration value; positions follow the canonical
    (grade, dimension, lexicographic) order.  Instances are treated as
    immutable after construction and are safe to share between threads.
    """

    simplices: list[Verts]
    grades: list[float]
    index_of: dict[Verts, int] = field(repr=False)
    critical_values: list[float]
    dim: int

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, verts) -> bool:
        key = verts.vertices if isinstance(verts, Simplex) else tuple(verts)
        return key in self.index_of

    def grade_of(self, verts) -> float:
        key = verts.vertices if isinstance(verts, Simplex) else tuple(verts)
        try:
            return self.grades[self.index_of[key]]
        except KeyError:
            raise UnknownSimplex(f"simplex {key} not in complex") from None

    def alive_at(self, s, t: float) -> bool:
        """True iff the simplex has entered the filtration by parameter t."""
        return self.grade_of(s) <= t

    def stage_count(self, t: float) -> int:
        """Number of simplices with grade <= t (a prefix of the order)."""
        return bisect.bisect_right(self.grades, t)

    def positive_dim_positions(self) -> list[int]:
        return [i for i, v in enumerate(self.simplices) if len(v) > 1]

    def final_value(self) -> float:
        return self.critical_values[-1]

    def previous_critical(self, t: float) -> float:
        """Largest critical value strictly below t."""
        i = bisect.bisect_left(self.critical_values, t)
        if i == 0:
            raise ValueError(f"no critical value below {t}")
        return self.critical_values[i - 1]

    def next_critical(self, t: float) -> float:
        """Smallest critical value strictly above t, or +inf."""
        i = bisect.bisect_right(self.critical_values, t)
        return self.critical_values[i] if i < len(self.critical_values) else math.inf


def from_simplex_list(entries: Iterable[tuple[Sequence[int], float]]) -> FilteredComplex:
    """Build a validated complex from (vertex list, grade) pairs.

    Vertex lists are treated as sets and sorted; duplicate simplices,
    missing faces and non-monotone grades are rejected rather than fixed
    up silently.
    """
    graded: dict[Verts, float] = {}
    for raw, grade in entries:
        verts = tuple(sorted(raw))
        if len(set(verts)) != len(verts):
            raise DuplicateSimplex(f"repeated vertex in {raw}")
        Simplex(verts)
        if verts in graded:
            raise DuplicateSimplex(f"simplex {verts} listed twice")
        graded[verts] = float(grade)
    if not graded:
        raise MissingFace("empty simplex list")

    for verts, grade in graded.items():
        if len(verts) == 1:
            continue
        for face in faces(verts):
            if face not in graded:
                raise MissingFace(f"face {face} of {verts} is missing")
            if graded[face] > grade:
                raise NonMonotoneGrades(
                    f"face {face} at {graded[face]} enters after {verts} at {grade}"
                )

    ordered = sorted(graded.items(), key=lambda it: _order_key(it[0], it[1]))
    simplices = [v for v, _ in ordered]
    grades = [g for _, g in ordered]
    return FilteredComplex(
        simplices=simplices,
        grades=grades,
        index_of={v: i for i, v in enumerate(simplices)},
        critical_values=sorted(set(grades)),
        dim=max(len(v) for v in simplices) - 1,
    )


def build_vietoris_rips(
    D: Sequence[Sequence[float]], max_dim: int, max_scale: float
) -> FilteredComplex:
    """Vietoris-Rips filtration of a finite metric space.

    Contains every simplex on at most ``max_dim + 1`` points whose diameter
    is at most ``max_scale``, graded by diameter; vertices enter at 0.
    """
    n = len(D)
    for i in range(n):
        if len(D[i]) != n:
            raise AsymmetricMatrix("distance matrix is not square")
        if D[i][i] != 0:
            raise AsymmetricMatrix(f"non-zero diagonal entry at {i}")
        for j in range(n):
            if D[i][j] < 0:
                raise NegativeDistance(f"negative distance at ({i},{j})")
            if D[i][j] != D[j][i]:
                raise AsymmetricMatrix(f"asymmetry at ({i},{j})")
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")

    entries: list[tuple[Verts, float]] = [((i,), 0.0) for i in range(n)]
    frontier: list[tuple[Verts, float]] = [((i,), 0.0) for i in range(n)]
    for _ in range(max_dim):
        grown: list[tuple[Verts, float]] = []
        for verts, diam in frontier:
            # extend by smaller-id vertices only, so each clique appears once
            for v in range(verts[0]):
                d = diam
                ok = True
                for u in verts:
                    duv = D[u][v]
                    if duv > max_scale:
                        ok = False
                        break
                    if duv > d:
                        d = duv
                if ok:
                    grown.append(((v,) + verts, d))
        entries.extend(grown)
        frontier = grown

    simplices = [v for v, _ in entries]
    grades = [g for _, g in entries]
    order = sorted(range(len(entries)), key=lambda i: _order_key(simplices[i], grades[i]))
    ordered = [simplices[i] for i in order]
    ordered_grades = [grades[i] for i in order]
    return FilteredComplex(
        simplices=ordered,
        grades=ordered_grades,
        index_of={v: i for i, v in enumerate(ordered)},
        critical_values=sorted(set(ordered_grades)),
        dim=max(len(v) for v in ordered) - 1,
    )


def truncate(c: FilteredComplex, dim_cap: int) -> FilteredComplex:
    """Keep exactly the simplices of dimension <= dim_cap, grades unchanged.

    To preserve cohomology up to dimension k, pass ``dim_cap = k + 1``.
    """
    if dim_cap < 0:
        raise ValueError("dim_cap must be non-negative")
    if c.dim <= dim_cap:
        return c
    simplices = [v for v in c.simplices if len(v) - 1 <= dim_cap]
    grades = [c.grades[c.index_of[v]] for v in simplices]
    return FilteredComplex(
        simplices=simplices,
        grades=grades,
        index_of={v: i for i, v in enumerate(simplices)},
        critical_values=sorted(set(grades)),
        dim=max(len(v) for v in simplices) - 1,
    )


def alive_at(c: FilteredComplex, s, t: float) -> bool:
    return c.alive_at(s, t)


def diameter(D: Sequence[Sequence[float]]) -> float:
    return max(max(row) for row in D)


def distances_from_points(points: Sequence[Sequence[float]]) -> list[list[float]]:
    """Euclidean distance matrix of a point cloud."""
    n = len(points)
    out = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = math.dist(points[i], points[j])
            out[i][j] = out[j][i] = d
    return out
