"""
Dense exact matrices and the elimination kernel.

Two interchangeable eliminators produce the reduced row echelon form:
- python-flint's fmpq_mat.rref (fast, used whenever flint imports)
- a Fraction eliminator over row dictionaries (always available)

Both return identical results because the RREF of a row space is unique.
Nullspace bases follow the echelon-complement convention: one vector per
free column in increasing order, with a 1 at the free column and minus the
RREF entries at the pivot columns.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from leibniz_lab.config.settings import get_linalg_backend
from leibniz_lab.errors import DimensionMismatch
from leibniz_lab.linalg.scalars import LaurentScalar, as_laurent, as_rational

try:
    from flint import fmpq, fmpq_mat
except ImportError:
    fmpq = None
    fmpq_mat = None

logger = logging.getLogger(__name__)

SparseRow = dict[int, Fraction]

_FLINT_WARNED = False


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        if any(isinstance(value, LaurentScalar) for value in self.entries):
            coerced = tuple(as_laurent(value) for value in self.entries)
        else:
            coerced = tuple(as_rational(value) for value in self.entries)
        object.__setattr__(self, "entries", coerced)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "ExactMatrix":
        height = len(rows)
        width = len(rows[0]) if height else 0
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(height, width, tuple(value for row in rows for value in row))

    @classmethod
    def identity(cls, size: int, laurent: bool = False) -> "ExactMatrix":
        one = LaurentScalar.one() if laurent else Fraction(1)
        zero = LaurentScalar.zero() if laurent else Fraction(0)
        return cls(
            size,
            size,
            tuple(one if r == c else zero for r in range(size) for c in range(size)),
        )

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "ExactMatrix":
        size = len(values)
        laurent = any(isinstance(value, LaurentScalar) for value in values)
        zero = LaurentScalar.zero() if laurent else Fraction(0)
        return cls(
            size,
            size,
            tuple(values[r] if r == c else zero for r in range(size) for c in range(size)),
        )

    @property
    def is_laurent(self) -> bool:
        return bool(self.entries) and isinstance(self.entries[0], LaurentScalar)

    def __getitem__(self, index: tuple[int, int]) -> Any:
        row, col = index
        return self.entries[row * self.cols + col]

    def row(self, index: int) -> list[Any]:
        start = index * self.cols
        return list(self.entries[start : start + self.cols])

    def to_rows(self) -> list[list[Any]]:
        return [self.row(r) for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(self[r, c] for c in range(self.cols) for r in range(self.rows)),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        laurent = self.is_laurent or other.is_laurent
        zero = LaurentScalar.zero() if laurent else Fraction(0)
        product = []
        for r in range(self.rows):
            left = self.row(r)
            for c in range(other.cols):
                total = zero
                for k, value in enumerate(left):
                    if value != 0:
                        total = total + value * other[k, c]
                product.append(total)
        return ExactMatrix(self.rows, other.cols, tuple(product))

    def map_entries(self, func) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(func(value) for value in self.entries))

    def sparse_rows(self) -> list[SparseRow]:
        result = []
        for r in range(self.rows):
            result.append({c: v for c, v in enumerate(self.row(r)) if v != 0})
        return result


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form: rows[i] has leading 1 at pivots[i]."""

    cols: int
    rows: tuple
    pivots: tuple

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> list[int]:
        pivot_set = set(self.pivots)
        return [c for c in range(self.cols) if c not in pivot_set]

    def nullspace(self) -> list[list[Fraction]]:
        basis = []
        for free_col in self.free_columns():
            vector = [Fraction(0)] * self.cols
            vector[free_col] = Fraction(1)
            for pivot, row in zip(self.pivots, self.rows):
                value = row.get(free_col)
                if value:
                    vector[pivot] = -value
            basis.append(vector)
        return basis


class EchelonBasis:
    """
    Incrementally maintained RREF of a growing set of vectors.

    add() reports whether a vector was independent of the ones before it,
    which gives column-space bases made of original vectors and exact span
    membership without rebuilding the elimination.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self._pivot_rows: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        reduced = dict(row)
        for col in list(reduced):
            factor = reduced.get(col)
            if not factor:
                continue
            pivot_row = self._pivot_rows.get(col)
            if pivot_row is None:
                continue
            for c, v in pivot_row.items():
                updated = reduced.get(c, Fraction(0)) - factor * v
                if updated:
                    reduced[c] = updated
                else:
                    reduced.pop(c, None)
        return reduced

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def add(self, row: SparseRow) -> bool:
        reduced = self.reduce(row)
        if not reduced:
            return False
        pivot = min(reduced)
        lead = reduced[pivot]
        normalized = {c: v / lead for c, v in reduced.items()}
        for other in self._pivot_rows.values():
            factor = other.get(pivot)
            if not factor:
                continue
            for c, v in normalized.items():
                updated = other.get(c, Fraction(0)) - factor * v
                if updated:
                    other[c] = updated
                else:
                    other.pop(c, None)
        self._pivot_rows[pivot] = normalized
        return True

    def echelon(self) -> Echelon:
        pivots = tuple(sorted(self._pivot_rows))
        return Echelon(self.cols, tuple(dict(self._pivot_rows[p]) for p in pivots), pivots)


def flint_available() -> bool:
    return fmpq_mat is not None


def _use_flint() -> bool:
    global _FLINT_WARNED
    backend = get_linalg_backend()
    if backend == "fraction":
        return False
    if fmpq_mat is None:
        if not _FLINT_WARNED:
            logger.warning("python-flint not installed; using the Fraction eliminator")
            _FLINT_WARNED = True
        return False
    return True


def _rref_flint(rows: list[SparseRow], cols: int) -> Echelon:
    mat = fmpq_mat(len(rows), cols)
    for r, row in enumerate(rows):
        for c, value in row.items():
            mat[r, c] = fmpq(value.numerator, value.denominator)
    rref_mat, rk = mat.rref()

    zero = fmpq(0)
    reduced_rows = []
    pivots = []
    for r in range(int(rk)):
        entries: SparseRow = {}
        for c in range(cols):
            value = rref_mat[r, c]
            if value != zero:
                entries[c] = Fraction(int(value.p), int(value.q))
        pivots.append(min(entries))
        reduced_rows.append(entries)
    return Echelon(cols, tuple(reduced_rows), tuple(pivots))


def _rref_fraction(rows: list[SparseRow], cols: int) -> Echelon:
    basis = EchelonBasis(cols)
    for row in rows:
        basis.add(row)
    return basis.echelon()


def row_reduce(rows: Iterable[SparseRow], cols: int) -> Echelon:
    """RREF of a system given as sparse rows; zero and duplicate rows are dropped first."""
    seen = set()
    unique: list[SparseRow] = []
    for row in rows:
        cleaned = {c: Fraction(v) for c, v in row.items() if v != 0}
        if not cleaned:
            continue
        key = tuple(sorted(cleaned.items()))
        if key in seen:
            continue
        seen.add(key)
        unique.append(cleaned)
    if not unique:
        return Echelon(cols, (), ())
    logger.debug("row_reduce: %d rows x %d cols", len(unique), cols)
    if _use_flint():
        return _rref_flint(unique, cols)
    return _rref_fraction(unique, cols)


def to_sparse(vector: Sequence[Any]) -> SparseRow:
    return {i: Fraction(v) for i, v in enumerate(vector) if v != 0}


def rank(m: ExactMatrix) -> int:
    return row_reduce(m.sparse_rows(), m.cols).rank


def nullspace_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """Basis of {v : m v = 0}, free variables ascending, pivot-normalized."""
    return row_reduce(m.sparse_rows(), m.cols).nullspace()


def independent_subset(vectors: Sequence[Sequence[Any]]) -> list[int]:
    """Indices of the pivot columns of the matrix whose columns are `vectors`."""
    if not vectors:
        return []
    basis = EchelonBasis(len(vectors[0]))
    return [index for index, vector in enumerate(vectors) if basis.add(to_sparse(vector))]


def span_rank(vectors: Sequence[Sequence[Any]]) -> int:
    if not vectors:
        return 0
    return row_reduce((to_sparse(v) for v in vectors), len(vectors[0])).rank


def in_span(v: Sequence[Any], basis: Sequence[Sequence[Any]]) -> bool:
    if basis and any(len(b) != len(v) for b in basis):
        raise DimensionMismatch("vectors of different lengths")
    echelon = EchelonBasis(len(v))
    for vector in basis:
        echelon.add(to_sparse(vector))
    return echelon.contains(to_sparse(v))


def mat_vec(m: ExactMatrix, v: Sequence[Any]) -> list[Any]:
    if m.cols != len(v):
        raise DimensionMismatch(f"{m.rows}x{m.cols} matrix against vector of length {len(v)}")
    result = []
    for r in range(m.rows):
        total = Fraction(0)
        for value, x in zip(m.row(r), v):
            if value != 0 and x != 0:
                total = total + value * x
        result.append(total)
    return result


def verify_inverse_pair(g: ExactMatrix, ginv: ExactMatrix) -> bool:
    """True iff g ginv = ginv g = identity, entries compared as Laurent polynomials."""
    if g.rows != g.cols or ginv.rows != ginv.cols or g.rows != ginv.rows:
        return False
    identity = ExactMatrix.identity(g.rows, laurent=True)
    left = (g @ ginv).map_entries(as_laurent)
    right = (ginv @ g).map_entries(as_laurent)
    return left == identity and right == identity
