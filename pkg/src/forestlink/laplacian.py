"""Exact integer Laplacian matrices, their minors, and matrix-tree weights.

The Laplacian of a weighted multigraph is indexed by the vertices in sorted
label order: the diagonal entry at a vertex is the sum of the weights of
its non-loop incident edges, and the off-diagonal entry for a pair of
vertices is minus the sum of the weights of the edges joining them.  Loops
contribute nothing.  When the graph is the Tait graph of a link diagram,
knot theorists know this matrix as an unreduced Goeritz matrix.

By the matrix tree theorem every principal minor of the Laplacian equals
the tree weight, and more generally the principal minor deleting the rows
and columns of a root set equals the forest weight rooted there (sign +1).
Minors that delete different row and column sets are exposed as raw signed
determinants; no uniform sign relation to mixed-root forest weights is
claimed here, only the magnitude agreements exercised by the tests.

Determinants use fraction-free Bareiss elimination with row pivoting, so
all intermediate values are integers and results are exact at any size.
Floating point never appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import GraphError, WeightedMultigraph


class MatrixError(ValueError):
    """Malformed matrix input or an invalid minor request."""


@dataclass(frozen=True)
class IntegerMatrix:
    """Arbitrary-precision integer matrix, row-major, optionally labeled."""

    rows: int
    cols: int
    entries: tuple[int, ...]
    row_labels: tuple[int, ...] | None = None
    col_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise MatrixError("entry count does not match the matrix shape")
        if self.row_labels is not None and len(self.row_labels) != self.rows:
            raise MatrixError("row label count does not match the row count")
        if self.col_labels is not None and len(self.col_labels) != self.cols:
            raise MatrixError("column label count does not match the column count")

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[int]],
        row_labels: Iterable[int] | None = None,
        col_labels: Iterable[int] | None = None,
    ) -> "IntegerMatrix":
        data = [list(r) for r in rows]
        n = len(data)
        m = len(data[0]) if data else 0
        if any(len(r) != m for r in data):
            raise MatrixError("rows have unequal lengths")
        return cls(
            n,
            m,
            tuple(int(x) for r in data for x in r),
            tuple(row_labels) if row_labels is not None else None,
            tuple(col_labels) if col_labels is not None else None,
        )

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]


# A Laplacian is an IntegerMatrix whose row and column labels are both the
# vertex set in sorted order; nothing more is needed structurally.
LaplacianMatrix = IntegerMatrix


def laplacian_matrix(graph: WeightedMultigraph) -> IntegerMatrix:
    """Laplacian (unreduced Goeritz matrix) of ``graph``.

    Symmetric with zero row sums; loops are ignored.
    """
    verts = graph.sorted_vertices()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    a = [[0] * n for _ in range(n)]
    for e in graph.edges:
        if e.is_loop:
            continue
        i, j = index[e.u], index[e.v]
        a[i][i] += e.weight
        a[j][j] += e.weight
        a[i][j] -= e.weight
        a[j][i] -= e.weight
    return IntegerMatrix.from_rows(a, row_labels=verts, col_labels=verts)


def _bareiss(a: list[list[int]]) -> int:
    """Exact determinant of a square list-of-lists, destructively."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                # Fraction-free update: the division is exact.
                row_i[j] = (row_i[j] * pk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def determinant(matrix: IntegerMatrix) -> int:
    """Exact determinant; the empty 0x0 matrix has determinant 1."""
    if matrix.rows != matrix.cols:
        raise MatrixError(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    return _bareiss(matrix.to_rows())


def minor(
    matrix: IntegerMatrix,
    delete_rows: Iterable[int],
    delete_cols: Iterable[int],
) -> int:
    """Determinant after deleting the labeled rows and columns.

    Rows and columns are named by labels, never by raw indices, so results
    are stable under graph relabeling.
    """
    dr = list(delete_rows)
    dc = list(delete_cols)
    if len(dr) != len(dc):
        raise MatrixError("must delete equally many rows and columns")
    if len(set(dr)) != len(dr) or len(set(dc)) != len(dc):
        raise MatrixError("deletion sets contain repeats")
    if matrix.row_labels is None or matrix.col_labels is None:
        raise MatrixError("minors by label require a labeled matrix")
    unknown = (set(dr) - set(matrix.row_labels)) | (set(dc) - set(matrix.col_labels))
    if unknown:
        raise MatrixError(f"unknown labels: {sorted(unknown)}")
    drop_r = set(dr)
    drop_c = set(dc)
    keep_r = [i for i, lab in enumerate(matrix.row_labels) if lab not in drop_r]
    keep_c = [j for j, lab in enumerate(matrix.col_labels) if lab not in drop_c]
    sub = [[matrix.at(i, j) for j in keep_c] for i in keep_r]
    return _bareiss(sub)


def tree_weight_mtt(graph: WeightedMultigraph) -> int:
    """Tree weight via the principal Laplacian minor at the lowest vertex."""
    if not graph.vertices:
        raise GraphError("the tree weight via minors needs at least one vertex")
    v0 = min(graph.vertices)
    return minor(laplacian_matrix(graph), [v0], [v0])


def rooted_forest_weight_mtt(graph: WeightedMultigraph, gamma: Iterable[int]) -> int:
    """Rooted forest weight via the principal minor deleting ``gamma``.

    With ``gamma`` equal to the whole vertex set this is the empty minor,
    so the weight is 1 (the empty forest); with a singleton it is the tree
    weight.
    """
    g = list(gamma)
    if not g:
        raise GraphError("gamma must be nonempty")
    if len(set(g)) != len(g):
        raise GraphError("gamma contains repeated vertices")
    missing = set(g) - graph.vertices
    if missing:
        raise GraphError(f"gamma names vertices not in the graph: {sorted(missing)}")
    return minor(laplacian_matrix(graph), g, g)
