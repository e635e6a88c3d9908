"""Exact sparse rational matrices with fraction-free rank computation."""
from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence

__all__ = ["ExactMatrix", "integer_row", "sparse_rank"]

LOGGER = logging.getLogger(__name__)

Key = Hashable
SparseRow = Dict[Key, Rational]


def integer_row(row: Mapping[Key, Rational]) -> Dict[Key, int]:
    """Scale a rational row to a primitive integer row with the same span."""
    denominator = 1
    for value in row.values():
        denominator = lcm(denominator, Fraction(value).denominator)
    scaled = {key: int(Fraction(value) * denominator) for key, value in row.items() if value}
    content = 0
    for value in scaled.values():
        content = gcd(content, value)
    if content > 1:
        scaled = {key: value // content for key, value in scaled.items()}
    return scaled


def sparse_rank(rows: Iterable[Mapping[Key, Rational]], column_order: Mapping[Key, int]) -> int:
    """Rank by incremental fraction-free elimination on sparse integer rows.

    Each incoming row is reduced against the stored pivot rows by
    row := a * row - b * pivot (a, b integers), then divided by its content,
    so every intermediate entry stays an integer.
    """
    pivots: Dict[Key, Dict[Key, int]] = {}
    for raw in rows:
        row = integer_row(raw)
        while row:
            lead = min(row, key=column_order.__getitem__)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break
            a, b = pivot[lead], row[lead]
            reduced = {key: a * value for key, value in row.items()}
            for key, value in pivot.items():
                entry = reduced.get(key, 0) - b * value
                if entry:
                    reduced[key] = entry
                else:
                    reduced.pop(key, None)
            row = integer_row(reduced)
    return len(pivots)


class ExactMatrix:
    """Sparse matrix over Q indexed by arbitrary hashable row and column keys."""

    def __init__(
        self,
        rows: Sequence[Key],
        cols: Sequence[Key],
        entries: Optional[Mapping[Key, Mapping[Key, Rational]]] = None,
    ) -> None:
        self.rows: List[Key] = list(rows)
        self.cols: List[Key] = list(cols)
        self._row_index = {key: k for k, key in enumerate(self.rows)}
        self._col_index = {key: k for k, key in enumerate(self.cols)}
        self.entries: Dict[Key, Dict[Key, Rational]] = {}
        for r, row in (entries or {}).items():
            for c, value in row.items():
                self.add(r, c, value)

    @classmethod
    def from_columns(
        cls, rows: Sequence[Key], cols: Sequence[Key], columns: Mapping[Key, Mapping[Key, Rational]]
    ) -> "ExactMatrix":
        matrix = cls(rows, cols)
        for c, column in columns.items():
            for r, value in column.items():
                matrix.add(r, c, value)
        return matrix

    @classmethod
    def inclusion(cls, rows: Sequence[Key], cols: Sequence[Key]) -> "ExactMatrix":
        """0/1 matrix sending each column key to the row with the same key."""
        return cls(rows, cols, {c: {c: 1} for c in cols})

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.cols))

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.entries.values())

    def add(self, r: Key, c: Key, value: Rational) -> None:
        if r not in self._row_index:
            raise KeyError(f"Row key {r!r} is not part of the matrix")
        if c not in self._col_index:
            raise KeyError(f"Column key {c!r} is not part of the matrix")
        if not value:
            return
        row = self.entries.setdefault(r, {})
        total = row.get(c, 0) + value
        if total:
            row[c] = total
        else:
            del row[c]
            if not row:
                del self.entries[r]

    def is_zero(self) -> bool:
        return not self.entries

    def rank(self) -> int:
        rank = sparse_rank(self.entries.values(), self._col_index)
        LOGGER.debug("Rank of %dx%d matrix with %d nonzeros: %d", *self.shape, self.nnz, rank)
        return rank

    def nullity(self) -> int:
        return len(self.cols) - self.rank()

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        result = ExactMatrix(self.rows, other.cols)
        for r, row in self.entries.items():
            for k, value in row.items():
                for c, other_value in other.entries.get(k, {}).items():
                    result.add(r, c, value * other_value)
        return result

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        """Stack rows of two maps with the same source; row keys are tagged by origin."""
        if self.cols != other.cols:
            raise ValueError("vstack requires identical column keys")
        rows = [(0, r) for r in self.rows] + [(1, r) for r in other.rows]
        result = ExactMatrix(rows, self.cols)
        for tag, matrix in ((0, self), (1, other)):
            for r, row in matrix.entries.items():
                for c, value in row.items():
                    result.add((tag, r), c, value)
        return result

