"""Reference filtered complexes used by the tests, the CLI fixtures and docs."""

from __future__ import annotations

import math

from .simplicial import FilteredComplex, Verts, faces, from_simplex_list


def close_under_faces(entries: dict[Verts, float]) -> dict[Verts, float]:
    """Add every missing face with the earliest grade of its cofaces.

    Explicit entries keep their grade when it is lower than any coface
    demands; monotonicity is validated later by from_simplex_list.
    """
    out = dict(entries)
    for length in range(max(len(v) for v in entries), 1, -1):
        for verts in [v for v in out if len(v) == length]:
            grade = out[verts]
            for f in faces(verts):
                out[f] = min(out.get(f, math.inf), grade)
    return out


def _complex(entries: dict[Verts, float]) -> FilteredComplex:
    closed = close_under_faces(entries)
    return from_simplex_list([(list(v), g) for v, g in sorted(closed.items())])


def hollow_triangle() -> FilteredComplex:
    """A circle: three vertices and three edges at grade 0."""
    return _complex({(0, 1): 0.0, (0, 2): 0.0, (1, 2): 0.0})


def filled_triangle() -> FilteredComplex:
    """A disk: the full 2-simplex at grade 0."""
    return _complex({(0, 1, 2): 0.0})


def two_disks() -> FilteredComplex:
    """Two disjoint circles filled one after the other.

    Circle A enters at 0 and is capped at 2, circle B enters at 1 and is
    capped at 3; the positive-dimensional barcode is [0,2) and [1,3).
    """
    entries: dict[Verts, float] = {}
    for e in [(0, 1), (0, 2), (1, 2)]:
        entries[e] = 0.0
    for e in [(3, 4), (3, 5), (4, 5)]:
        entries[e] = 1.0
    entries[(0, 1, 2)] = 2.0
    entries[(3, 4, 5)] = 3.0
    return _complex(entries)


def unit_square_distances() -> list[list[float]]:
    """Distance matrix of the unit square's corners (sides 1, diagonals sqrt 2)."""
    r2 = math.sqrt(2.0)
    return [
        [0.0, 1.0, r2, 1.0],
        [1.0, 0.0, 1.0, r2],
        [r2, 1.0, 0.0, 1.0],
        [1.0, r2, 1.0, 0.0],
    ]


def projective_plane() -> FilteredComplex:
    """The 6-vertex triangulation of the real projective plane, grade 0.

    10 triangles on the complete graph K6; over Z2 both H^1 and H^2 have
    rank one and the square of the 1-class is the 2-class.
    """
    triangles = [
        (1, 2, 5),
        (1, 2, 6),
        (1, 3, 4),
        (1, 3, 6),
        (1, 4, 5),
        (2, 3, 4),
        (2, 3, 5),
        (2, 4, 6),
        (3, 5, 6),
        (4, 5, 6),
    ]
    return _complex({t: 0.0 for t in triangles})


def csaszar_torus() -> FilteredComplex:
    """The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7, grade 0."""
    triangles = []
    for i in range(7):
        triangles.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        triangles.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return _complex({t: 0.0 for t in triangles})


def staged_klein() -> FilteredComplex:
    """A Klein bottle swept in over the grid {0, 1, 2, 3}.

    Stage 0 is a point; stage 1 adds a 4-cycle through it; stage 2
    completes a 12-vertex triangulated Klein bottle; stage 3 cones a disk
    onto the loop, killing its class.  The loop is the one-sided curve of
    the surface (its neighborhood is a Mobius band), which forces the
    surviving degree-1 class after capping to have a non-zero square.

    The identification is a 4x3 grid, cyclic vertically and glued
    horizontally with a vertical flip.  Vertex (i, j) has id 3*i + j and
    the cone apex is 12.
    """

    def vid(i: int, j: int) -> int:
        return 3 * i + j

    entries: dict[Verts, float] = {}
    for i in range(4):
        for j in range(3):
            p = vid(i, j)
            r = vid(i, (j + 1) % 3)
            if i < 3:
                q = vid(i + 1, j)
                s = vid(i + 1, (j + 1) % 3)
            else:
                q = vid(0, (3 - j) % 3)
                s = vid(0, (2 - j) % 3)
            entries[tuple(sorted((p, q, s)))] = 2.0
            entries[tuple(sorted((p, s, r)))] = 2.0

    loop = [vid(0, 0), vid(1, 0), vid(2, 0), vid(3, 0)]
    for a, b in zip(loop, loop[1:] + loop[:1]):
        entries[tuple(sorted((a, b)))] = 1.0
    for v in loop:
        entries[(v,)] = 1.0
    entries[(vid(0, 0),)] = 0.0

    apex = 12
    for a, b in zip(loop, loop[1:] + loop[:1]):
        entries[tuple(sorted((a, b, apex)))] = 3.0
    return _complex(entries)


def disjoint_union(a: FilteredComplex, b: FilteredComplex) -> FilteredComplex:
    """Disjoint union with b's vertex ids shifted above a's."""
    shift = 1 + max(v[-1] for v in a.simplices)
    entries = [(list(v), a.grades[a.index_of[v]]) for v in a.simplices]
    entries += [
        ([x + shift for x in v], b.grades[b.index_of[v]]) for v in b.simplices
    ]
    return from_simplex_list(entries)
