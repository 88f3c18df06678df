# This file is part of the Neural Network Rule Verifier (nnrules).
#
# Copyright (C) 2026 The nnrules developers.
#
# nnrules is released under the Revised BSD License. See file LICENSE for
# full license details.

"""Exact rational vectors and matrices. Both types are immutable; all
operations return new objects and never round.
"""

from __future__ import annotations
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from nnrules.arith.rational import Rational, to_rational
from nnrules.error import DimensionError


class QVector(object):
    """Immutable vector of rational entries."""
    def __init__(self, entries: Iterable = ()):
        """Initialize the vector entries. Entries are converted to rationals.

        Parameters
        ----------
        entries: iterable
            Vector entries (fractions, integers or rational strings).
        """
        self._entries = tuple(to_rational(v) for v in entries)

    def __add__(self, other: QVector) -> QVector:
        """Componentwise sum of two vectors of equal dimension."""
        self._check_dim(other)
        return QVector(a + b for a, b in zip(self._entries, other._entries))

    def __eq__(self, other) -> bool:
        """Vectors are equal if they have equal entries."""
        if isinstance(other, QVector):
            return self._entries == other._entries
        return False

    def __getitem__(self, index):
        """Get an entry or a sub-vector (for slices)."""
        if isinstance(index, slice):
            return QVector(self._entries[index])
        return self._entries[index]

    def __hash__(self) -> int:
        return hash(self._entries)

    def __iter__(self) -> Iterator[Rational]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __neg__(self) -> QVector:
        return QVector(-a for a in self._entries)

    def __repr__(self) -> str:
        return 'QVector({})'.format([str(v) for v in self._entries])

    def __sub__(self, other: QVector) -> QVector:
        """Componentwise difference of two vectors of equal dimension."""
        self._check_dim(other)
        return QVector(a - b for a, b in zip(self._entries, other._entries))

    def _check_dim(self, other: QVector):
        """Raise a dimension error if the other vector has a different
        dimension.
        """
        if len(other) != len(self):
            raise DimensionError(
                'vector dimensions {} and {} differ'.format(len(self), len(other))
            )

    def concat(self, other: QVector) -> QVector:
        """Concatenate this vector with another vector."""
        return QVector(self._entries + tuple(other))

    @property
    def dim(self) -> int:
        """Number of entries."""
        return len(self._entries)

    def dot(self, other: Sequence[Rational]) -> Rational:
        """Exact inner product with a vector of equal dimension.

        Parameters
        ----------
        other: nnrules.arith.vector.QVector or sequence of fractions

        Returns
        -------
        fractions.Fraction
        """
        if len(other) != len(self):
            raise DimensionError(
                'vector dimensions {} and {} differ'.format(len(self), len(other))
            )
        result = Fraction(0)
        for a, b in zip(self._entries, other):
            if a:
                result += a * b
        return result

    def scale(self, factor: Rational) -> QVector:
        """Multiply all entries with a scalar."""
        factor = to_rational(factor)
        return QVector(factor * a for a in self._entries)

    def support(self) -> List[int]:
        """Get the indices of all nonzero entries."""
        return [i for i, a in enumerate(self._entries) if a != 0]

    def to_list(self) -> List[Rational]:
        """Get the entries as a list."""
        return list(self._entries)

    @staticmethod
    def unit(dim: int, index: int) -> QVector:
        """Get the unit vector of the given dimension with one at the given
        position.
        """
        return QVector(1 if i == index else 0 for i in range(dim))

    @staticmethod
    def zeros(dim: int) -> QVector:
        """Get the zero vector of the given dimension."""
        return QVector([0] * dim)


class QMatrix(object):
    """Immutable matrix of rational entries stored in row-major order."""
    def __init__(self, rows: int, cols: int, entries: Iterable):
        """Initialize the matrix shape and entries.

        Parameters
        ----------
        rows: int
            Number of rows.
        cols: int
            Number of columns.
        entries: iterable
            Row-major matrix entries.

        Raises
        ------
        nnrules.error.DimensionError
        """
        self.rows = rows
        self.cols = cols
        self._entries = tuple(to_rational(v) for v in entries)
        if len(self._entries) != rows * cols:
            raise DimensionError(
                'expected {} entries for {}x{} matrix, got {}'.format(
                    rows * cols, rows, cols, len(self._entries)
                )
            )

    def __eq__(self, other) -> bool:
        if isinstance(other, QMatrix):
            return self.shape == other.shape and self._entries == other._entries
        return False

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __repr__(self) -> str:
        return 'QMatrix({})'.format([[str(v) for v in r] for r in self.to_lists()])

    def at(self, row: int, col: int) -> Rational:
        """Get a single matrix entry."""
        return self._entries[row * self.cols + col]

    @staticmethod
    def block_diag(blocks: Sequence[QMatrix]) -> QMatrix:
        """Get the block-diagonal matrix with the given blocks on the
        diagonal.
        """
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        data = [[Fraction(0)] * cols for _ in range(rows)]
        r0, c0 = 0, 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b.at(i, j)
            r0 += b.rows
            c0 += b.cols
        return QMatrix.from_rows(data, cols=cols)

    def column(self, index: int) -> QVector:
        """Get a matrix column as a vector."""
        return QVector(self.at(i, index) for i in range(self.rows))

    @staticmethod
    def from_rows(rows: Sequence[Sequence], cols: int = None) -> QMatrix:
        """Create a matrix from a list of rows.

        Parameters
        ----------
        rows: list of list
            Matrix rows.
        cols: int, default=None
            Number of columns. Required if the list of rows is empty.

        Returns
        -------
        nnrules.arith.vector.QMatrix

        Raises
        ------
        nnrules.error.DimensionError
        """
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError('number of columns required for empty matrix')
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError('rows of differing length {} and {}'.format(len(r), cols))
        return QMatrix(len(rows), cols, [v for r in rows for v in r])

    @staticmethod
    def identity(dim: int) -> QMatrix:
        """Get the identity matrix of the given dimension."""
        return QMatrix(dim, dim, [1 if i == j else 0 for i in range(dim) for j in range(dim)])

    def mat_mul(self, other: QMatrix) -> QMatrix:
        """Exact matrix product self x other.

        Raises
        ------
        nnrules.error.DimensionError
        """
        if self.cols != other.rows:
            raise DimensionError(
                'cannot multiply {}x{} and {}x{} matrices'.format(
                    self.rows, self.cols, other.rows, other.cols
                )
            )
        cols = [other.column(j) for j in range(other.cols)]
        return QMatrix(
            self.rows,
            other.cols,
            [self.row(i).dot(c) for i in range(self.rows) for c in cols]
        )

    def row(self, index: int) -> QVector:
        """Get a matrix row as a vector."""
        start = index * self.cols
        return QVector(self._entries[start:start + self.cols])

    @property
    def shape(self) -> Tuple[int, int]:
        """Get the (rows, cols) pair."""
        return (self.rows, self.cols)

    def to_lists(self) -> List[List[Rational]]:
        """Get the matrix as a list of rows."""
        return [self.row(i).to_list() for i in range(self.rows)]

    def vstack(self, other: QMatrix) -> QMatrix:
        """Concatenate the rows of two matrices with equal column count."""
        if other.cols != self.cols:
            raise DimensionError('column counts {} and {} differ'.format(self.cols, other.cols))
        return QMatrix(self.rows + other.rows, self.cols, self._entries + other._entries)

    @staticmethod
    def zeros(rows: int, cols: int) -> QMatrix:
        """Get the zero matrix of the given shape."""
        return QMatrix(rows, cols, [0] * (rows * cols))


def mat_vec(A: QMatrix, x: Sequence[Rational]) -> QVector:
    """Exact matrix-vector product.

    Parameters
    ----------
    A: nnrules.arith.vector.QMatrix
        Matrix with A.cols = len(x).
    x: nnrules.arith.vector.QVector or sequence of fractions
        Vector.

    Returns
    -------
    nnrules.arith.vector.QVector

    Raises
    ------
    nnrules.error.DimensionError
    """
    if A.cols != len(x):
        raise DimensionError(
            'cannot multiply {}x{} matrix with vector of dimension {}'.format(
                A.rows, A.cols, len(x)
            )
        )
    return QVector(A.row(i).dot(x) for i in range(A.rows))
