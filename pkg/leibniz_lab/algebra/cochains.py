from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Mapping, Sequence

from leibniz_lab.errors import DimensionMismatch
from leibniz_lab.linalg.scalars import as_rational


@dataclass(frozen=True)
class Cochain2:
    """Bilinear map phi(e_i, e_j) = sum_k values[i][j][k] e_k."""

    dim: int
    values: tuple

    def __post_init__(self) -> None:
        d = self.dim
        if len(self.values) != d or any(
            len(row) != d or any(len(cell) != d for cell in row) for row in self.values
        ):
            raise DimensionMismatch(f"cochain must have shape {d}x{d}x{d}")

    @classmethod
    def zeros(cls, dim: int) -> "Cochain2":
        return cls.from_entries(dim, {})

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple[int, int], Mapping[int, Any]]) -> "Cochain2":
        cells = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), image in entries.items():
            for k, value in image.items():
                cells[i][j][k] += as_rational(value)
        return cls(dim, tuple(tuple(tuple(cell) for cell in row) for row in cells))

    @classmethod
    def from_vector(cls, dim: int, vector: Sequence[Any]) -> "Cochain2":
        if len(vector) != dim**3:
            raise DimensionMismatch(f"expected {dim ** 3} coordinates, got {len(vector)}")
        entries: dict[tuple[int, int], dict[int, Any]] = {}
        for index, value in enumerate(vector):
            if value != 0:
                i, rest = divmod(index, dim * dim)
                j, k = divmod(rest, dim)
                entries.setdefault((i, j), {})[k] = value
        return cls.from_entries(dim, entries)

    def value(self, i: int, j: int) -> tuple:
        return self.values[i][j]

    def entries(self) -> Iterator[tuple[int, int, int, Fraction]]:
        for i, row in enumerate(self.values):
            for j, cell in enumerate(row):
                for k, value in enumerate(cell):
                    if value != 0:
                        yield i, j, k, value

    def to_vector(self) -> list[Fraction]:
        """Flatten in (i, j, k) lexicographic order."""
        return [value for row in self.values for cell in row for value in cell]

    def is_zero(self) -> bool:
        return next(self.entries(), None) is None

    def __add__(self, other: "Cochain2") -> "Cochain2":
        if other.dim != self.dim:
            raise DimensionMismatch("cochains of different dimension")
        return Cochain2.from_vector(
            self.dim, [a + b for a, b in zip(self.to_vector(), other.to_vector())]
        )

    def scale(self, factor: Any) -> "Cochain2":
        factor = as_rational(factor)
        return Cochain2.from_vector(self.dim, [factor * value for value in self.to_vector()])


def flat_index(dim: int, i: int, j: int, k: int) -> int:
    return (i * dim + j) * dim + k
