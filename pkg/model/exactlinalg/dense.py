"""
Exact dense matrices over a FieldSpec, with rank, echelon forms, kernels and
determinants computed by sympy's DomainMatrix.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy.polys.matrices import DomainMatrix

from model.polyring import FieldSpec

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseMatrix:
    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: Optional[int] = None) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("Ragged rows")
        coerce = field.coerce
        return cls(len(rows), cols, tuple(coerce(a) for r in rows for a in r), field)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int) -> "DenseMatrix":
        return cls.from_rows(field, [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "DenseMatrix":
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "DenseMatrix":
        return cls(n, n, tuple(field.one if i == j else field.zero
                               for i in range(n) for j in range(n)), field)

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.cols, self.rows,
                           tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows)),
                           self.field)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "DenseMatrix":
        return DenseMatrix(len(row_idx), len(col_idx),
                           tuple(self.entry(i, j) for i in row_idx for j in col_idx), self.field)

    def hstack(self, other: "DenseMatrix") -> "DenseMatrix":
        if other.rows != self.rows:
            raise ValueError("Row counts differ")
        return DenseMatrix.from_rows(self.field, [list(self.row(i)) + list(other.row(i))
                                                  for i in range(self.rows)], self.cols + other.cols)

    def apply(self, vector: Sequence) -> tuple:
        if len(vector) != self.cols:
            raise ValueError("Vector length does not match columns")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            acc = zero
            for a, v in zip(self.row(i), vector):
                if a and v:
                    acc += a * v
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError("Shapes do not match")
        cols = [other.column(j) for j in range(other.cols)]
        products = [self.apply(c) for c in cols]
        return DenseMatrix.from_rows(self.field, [[p[i] for p in products] for i in range(self.rows)],
                                     other.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(self.row(i)) for i in range(self.rows)],
                            (self.rows, self.cols), self.field.domain)

    def to_float_rows(self) -> list[list[float]]:
        return [[self.field.to_float(a) for a in self.row(i)] for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols


def _sparse_rows(R: DomainMatrix, rows: int, cols: int, zero) -> list[list]:
    # SDM is a dict of row dicts holding the nonzero entries
    rep = R.to_sparse().rep
    out = []
    for i in range(rows):
        row = rep.get(i, {})
        out.append([row.get(j, zero) for j in range(cols)])
    return out


def rank(M: DenseMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    r = M.to_domain_matrix().to_sparse().rank()
    LOGGER.debug("rank of %dx%d matrix: %d", M.rows, M.cols, r)
    return r


def corank(M: DenseMatrix) -> int:
    """rows - rank."""
    return M.rows - rank(M)


def rref(M: DenseMatrix) -> tuple[list[list], tuple[int, ...]]:
    """
    Forma escalonada reducida por filas y columnas pivote (deterministas).
    """
    if M.rows == 0 or M.cols == 0:
        return [list(M.row(i)) for i in range(M.rows)], ()
    R, pivots = M.to_domain_matrix().to_sparse().rref()
    return _sparse_rows(R, M.rows, M.cols, M.field.zero), tuple(pivots)


def nullspace_basis(M: DenseMatrix) -> list[tuple]:
    """
    Right kernel in reduced echelon normalization: one vector per free column f,
    with v[f] = 1 and v[j] = 0 for the other free columns.
    """
    zero, one = M.field.zero, M.field.one
    if M.cols == 0:
        return []
    R, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        v = [zero] * M.cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(tuple(v))
    return basis


def left_nullspace(M: DenseMatrix) -> list[tuple]:
    """Vectors w with w * M = 0."""
    return nullspace_basis(M.transpose())


def solve(M: DenseMatrix, b: Sequence) -> Optional[tuple]:
    """
    Particular solution of M x = b with free variables zero, or None.
    """
    if len(b) != M.rows:
        raise ValueError("Right-hand side length does not match rows")
    zero = M.field.zero
    if M.rows == 0:
        return (zero,) * M.cols
    b = [M.field.coerce(x) for x in b]
    augmented = DenseMatrix.from_rows(M.field, [list(M.row(i)) + [b[i]] for i in range(M.rows)],
                                      M.cols + 1)
    R, pivots = rref(augmented)
    if M.cols in pivots:
        return None
    x = [zero] * M.cols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][M.cols]
    return tuple(x)


def pivot_columns(M: DenseMatrix) -> tuple[int, ...]:
    return rref(M)[1]


def determinant(M: DenseMatrix):
    if M.rows != M.cols:
        raise ValueError(f"Determinant of a non-square {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return M.field.one
    return M.to_domain_matrix().det()


def charpoly(M: DenseMatrix) -> list:
    """Coefficients of det(z*I - M), leading coefficient first."""
    if M.rows != M.cols:
        raise ValueError("Characteristic polynomial of a non-square matrix")
    if M.rows == 0:
        return [M.field.one]
    return list(M.to_domain_matrix().charpoly())


def inverse(M: DenseMatrix) -> DenseMatrix:
    if M.rows != M.cols:
        raise ValueError("Inverse of a non-square matrix")
    columns = []
    for j in range(M.cols):
        e = [M.field.one if i == j else M.field.zero for i in range(M.rows)]
        x = solve(M, e)
        if x is None:
            raise ArithmeticError("Matrix is singular")
        columns.append(x)
    return DenseMatrix.from_columns(M.field, columns, M.rows)
