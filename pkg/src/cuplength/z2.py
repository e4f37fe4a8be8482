"""Sparse linear algebra over Z2 for coboundary matrices.

Columns are stored as Python integers used as bitmasks of row indices, so
column addition is XOR and the pivot of a column is its highest set bit.
A bitmask is exactly a sorted set of row indices, just packed.

The cosimplex basis runs anti-parallel to the filtration: the matrix
position of the i-th simplex (in filtration order, m simplices total) is
m - 1 - i.  With this ordering the coboundary matrix, its column
reduction and the row reduction matrix are all strictly or weakly upper
triangular, which is what makes restriction to a filtration stage a
simple trailing principal submatrix.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .errors import SimplexNotAlive
from .simplicial import FilteredComplex, Verts, faces

if TYPE_CHECKING:  # pragma: no cover
    from .cohomology import Cochain


class SparseZ2Matrix:
    """A matrix over Z2 with per-column bitmask storage."""

    __slots__ = ("n_rows", "n_cols", "_cols")

    def __init__(self, n_rows: int, n_cols: int, cols: list[int] | None = None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self._cols = [0] * n_cols if cols is None else cols
        if len(self._cols) != n_cols:
            raise ValueError("column count mismatch")

    @classmethod
    def from_columns(cls, n_rows: int, columns: Iterable[Iterable[int]]) -> "SparseZ2Matrix":
        cols = [sum(1 << r for r in set(col)) for col in columns]
        return cls(n_rows, len(cols), cols)

    @classmethod
    def identity(cls, n: int) -> "SparseZ2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    def column(self, j: int) -> tuple[int, ...]:
        """Row indices of the ones in column j, strictly sorted."""
        return tuple(_bits(self._cols[j]))

    def col_mask(self, j: int) -> int:
        return self._cols[j]

    def entry(self, i: int, j: int) -> int:
        return (self._cols[j] >> i) & 1

    def pivot(self, j: int) -> int | None:
        """Largest row index with a one in column j, or None."""
        m = self._cols[j]
        return m.bit_length() - 1 if m else None

    def is_zero(self) -> bool:
        return not any(self._cols)

    def nnz(self) -> int:
        return sum(c.bit_count() for c in self._cols)

    def row_masks(self) -> list[int]:
        """Transposed view: per-row bitmask of column indices."""
        rows = [0] * self.n_rows
        for j, cm in enumerate(self._cols):
            for i in _bits(cm):
                rows[i] |= 1 << j
        return rows

    def multiply(self, other: "SparseZ2Matrix") -> "SparseZ2Matrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        cols = []
        for j in range(other.n_cols):
            acc = 0
            for i in _bits(other._cols[j]):
                acc ^= self._cols[i]
            cols.append(acc)
        return SparseZ2Matrix(self.n_rows, other.n_cols, cols)

    def is_upper_triangular(self, unit_diagonal: bool = False) -> bool:
        for j, cm in enumerate(self._cols):
            if cm >> (j + 1):
                return False
            if unit_diagonal and not (cm >> j) & 1:
                return False
        return True

    def copy(self) -> "SparseZ2Matrix":
        return SparseZ2Matrix(self.n_rows, self.n_cols, list(self._cols))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseZ2Matrix)
            and self.n_rows == other.n_rows
            and self._cols == other._cols
        )

    def __repr__(self) -> str:
        return f"SparseZ2Matrix({self.n_rows}x{self.n_cols}, nnz={self.nnz()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def coboundary_matrix(c: FilteredComplex, include_dim0: bool = False) -> SparseZ2Matrix:
    """Square coboundary matrix over the anti-filtration cosimplex basis.

    Row/column position of the i-th included simplex is m - 1 - i, so the
    matrix is strictly upper triangular.  By default only simplices of
    positive dimension are indexed; ``include_dim0`` adds the vertex block
    (used by the barcode computation, which needs the full pairing).
    """
    included = [v for v in c.simplices if include_dim0 or len(v) > 1]
    m = len(included)
    pos = {v: m - 1 - i for i, v in enumerate(included)}
    cols = [0] * m
    for v in included:
        if len(v) == 1:
            continue
        r = pos[v]
        bit = 1 << r
        for f in faces(v):
            j = pos.get(f)
            if j is not None:
                cols[j] |= bit
    return SparseZ2Matrix(m, m, cols)


@dataclass
class ReducedCoboundary:
    """Result of reducing a coboundary matrix: R = A V over Z2.

    ``pivots`` maps each pivot row to the unique column owning it.  When
    built by :func:`reduce_coboundary` the object also knows the complex,
    the matrix position of every included simplex, and per critical value
    the count of included simplices alive there (``stage_sizes``), which
    is what the trailing-submatrix restriction trick needs.

    The row reduction matrix U (bottom-to-top elimination of R) is
    computed lazily on first access.
    """

    A: SparseZ2Matrix
    R: SparseZ2Matrix
    V: SparseZ2Matrix
    pivots: frozenset[int]
    pivot_to_col: dict[int, int] = field(repr=False)
    complex: FilteredComplex | None = None
    includes_dim0: bool = False
    position_of: dict[Verts, int] | None = field(default=None, repr=False)
    stage_sizes: dict[float, int] | None = None
    _included_grades: list[float] | None = field(default=None, repr=False)
    _U: SparseZ2Matrix | None = field(default=None, repr=False)
    _U_rows: list[int] | None = field(default=None, repr=False)

    @property
    def U(self) -> SparseZ2Matrix:
        if self._U is None:
            self._U = row_reduce(self.R)
        return self._U

    def u_row_masks(self) -> list[int]:
        if self._U_rows is None:
            self._U_rows = self.U.row_masks()
        return self._U_rows

    def alive_count(self, t: float) -> int:
        assert self._included_grades is not None
        return bisect.bisect_right(self._included_grades, t)

    def trail_mask(self, t: float) -> int:
        """Mask of the matrix positions of simplices alive at t."""
        s = self.alive_count(t)
        m = self.R.n_rows
        return ((1 << m) - 1) ^ ((1 << (m - s)) - 1)

    def cochain_mask(self, sigma: "Cochain") -> int:
        assert self.position_of is not None
        y = 0
        for v in sigma.summands:
            y |= 1 << self.position_of[v]
        return y


def column_reduce(A: SparseZ2Matrix) -> ReducedCoboundary:
    """Left-to-right column reduction R = A V with unique column pivots."""
    if A.n_rows != A.n_cols:
        raise ValueError("column_reduce expects a square matrix")
    n = A.n_cols
    R = list(A._cols)
    V = [1 << j for j in range(n)]
    pivot_to_col: dict[int, int] = {}
    for j in range(n):
        col = R[j]
        while col:
            p = col.bit_length() - 1
            owner = pivot_to_col.get(p)
            if owner is None:
                pivot_to_col[p] = j
                break
            col ^= R[owner]
            V[j] ^= V[owner]
        R[j] = col
    return ReducedCoboundary(
        A=A,
        R=SparseZ2Matrix(n, n, R),
        V=SparseZ2Matrix(n, n, V),
        pivots=frozenset(pivot_to_col),
        pivot_to_col=pivot_to_col,
    )


def reduce_coboundary(c: FilteredComplex, include_dim0: bool = False) -> ReducedCoboundary:
    """Build and column-reduce the coboundary matrix of a complex."""
    rc = column_reduce(coboundary_matrix(c, include_dim0=include_dim0))
    included = [v for v in c.simplices if include_dim0 or len(v) > 1]
    m = len(included)
    rc.complex = c
    rc.includes_dim0 = include_dim0
    rc.position_of = {v: m - 1 - i for i, v in enumerate(included)}
    rc._included_grades = [c.grades[c.index_of[v]] for v in included]
    rc.stage_sizes = {t: rc.alive_count(t) for t in c.critical_values}
    return rc


def row_reduce(R: SparseZ2Matrix) -> SparseZ2Matrix:
    """Bottom-to-top row reduction of a column-reduced matrix.

    Walking the columns left to right, every entry above a column's pivot
    is cleared by adding the pivot row to it.  Because pivots are unique,
    earlier (already cleared) columns are never disturbed, and additions
    only ever target rows above the pivot, so U stays upper triangular
    with unit diagonal.  Returns U with U R having at most one non-zero
    entry per row and per column in the pivot rows.
    """
    m, n = R.n_rows, R.n_cols
    cols = list(R._cols)
    rows = R.row_masks()
    u_rows = [1 << i for i in range(m)]
    for j in range(n):
        col = cols[j]
        if not col:
            continue
        p = col.bit_length() - 1
        rest = col ^ (1 << p)
        if not rest:
            continue
        rp = rows[p]
        up = u_rows[p]
        for i in _bits(rest):
            rows[i] ^= rp
            u_rows[i] ^= up
            for jj in _bits(rp):
                cols[jj] ^= 1 << i
    u_cols = [0] * m
    for i, rm in enumerate(u_rows):
        for j in _bits(rm):
            u_cols[j] |= 1 << i
    return SparseZ2Matrix(m, m, u_cols)


def is_coboundary(
    sigma: "Cochain", t: float, rc: ReducedCoboundary, c: FilteredComplex
) -> bool:
    """Whether the restriction of sigma to the stage-t subcomplex is exact there.

    Every summand of sigma must already be alive at t.  For dimensions two
    and up the test takes the trailing block of the row reduction matrix U
    and of the coefficient vector y and checks that all non-zero rows of
    the product are pivot rows of R; the block trick is valid because A, V
    and U are all upper triangular.  Dimension-1 cochains are exact iff
    they are a vertex-set cut of the stage-t graph, which the positive-
    dimensional matrix cannot see, so that case runs a direct two-coloring
    unless rc was built with the vertex block included.
    """
    for v in sigma.summands:
        if c.grade_of(v) > t:
            raise SimplexNotAlive(f"summand {v} enters after t={t}")
    if sigma.p == 0:
        return not sigma.summands
    if sigma.p == 1 and not rc.includes_dim0:
        return _is_cut_cochain(sigma, t, c)

    y = rc.cochain_mask(sigma)
    m = rc.R.n_rows
    lo = m - rc.alive_count(t)
    u_rows = rc.u_row_masks()
    pivots = rc.pivots
    for i in range(m - 1, lo - 1, -1):
        if i in pivots:
            continue
        if (u_rows[i] & y).bit_count() & 1:
            return False
    return True


def in_reduced_column_space(mask: int, t: float, rc: ReducedCoboundary) -> bool:
    """Fast equivalent of :func:`is_coboundary` for an alive coefficient mask.

    Reduces the vector against the stage-restricted pivot columns of R;
    membership in their span is exactness.  Same predicate as the U-block
    test, exercised against it in the test suite, but cheaper inside the
    support-descent hot loop.
    """
    trail = rc.trail_mask(t)
    y = mask & trail
    cols = rc.R._cols
    pivot_to_col = rc.pivot_to_col
    while y:
        p = y.bit_length() - 1
        j = pivot_to_col.get(p)
        if j is None:
            return False
        y ^= cols[j] & trail
    return True


def _is_cut_cochain(sigma: "Cochain", t: float, c: FilteredComplex) -> bool:
    """Exactness of a 1-cochain: is it delta of a vertex indicator at stage t?"""
    parent: dict[int, int] = {}
    parity: dict[int, int] = {}

    def find(v: int) -> tuple[int, int]:
        path = []
        while parent.get(v, v) != v:
            path.append(v)
            v = parent[v]
        acc = 0
        for u in reversed(path):
            acc ^= parity[u]
            parent[u] = v
            parity[u] = acc
        return v, acc

    summands = sigma.summands
    for verts, grade in zip(c.simplices, c.grades):
        if grade > t:
            break
        if len(verts) != 2:
            continue
        u, w = verts
        bit = 1 if verts in summands else 0
        ru, pu = find(u)
        rw, pw = find(w)
        if ru == rw:
            if pu ^ pw != bit:
                return False
        else:
            parent[ru] = rw
            parity[ru] = pu ^ pw ^ bit
    return True
