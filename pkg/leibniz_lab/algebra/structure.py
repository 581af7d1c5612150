"""
Structure-constant representation of finite-dimensional Leibniz algebras.

Convention: [e_i, e_j] = sum_k gamma[i][j][k] e_k, first index the left
factor, indices 0-based in code (1-based in printed output). The Leibniz
identity checked throughout is

    [x, [y, z]] = [[x, y], z] - [[x, z], y]

so every right multiplication R_z(y) = [y, z] is a derivation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Iterator, Mapping, Sequence

from leibniz_lab.errors import BadInverse, BadNilradical, DimensionMismatch
from leibniz_lab.linalg import EchelonBasis, ExactMatrix, row_reduce, verify_inverse_pair
from leibniz_lab.linalg.scalars import LaurentScalar, as_rational

logger = logging.getLogger(__name__)

Vector = list
SparseVector = dict


@dataclass(frozen=True)
class StructureTensor:
    dim: int
    gamma: tuple

    def __post_init__(self) -> None:
        d = self.dim
        if len(self.gamma) != d or any(
            len(row) != d or any(len(cell) != d for cell in row) for row in self.gamma
        ):
            raise DimensionMismatch(f"structure tensor must have shape {d}x{d}x{d}")

    @classmethod
    def zeros(cls, dim: int) -> "StructureTensor":
        zero = Fraction(0)
        return cls(dim, tuple(tuple(tuple(zero for _ in range(dim)) for _ in range(dim)) for _ in range(dim)))

    @classmethod
    def from_products(
        cls, dim: int, products: Mapping[tuple[int, int], Mapping[int, Any]]
    ) -> "StructureTensor":
        """Build from {(i, j): {k: coefficient}}; omitted products are zero."""
        cells = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), image in products.items():
            for k, coefficient in image.items():
                cells[i][j][k] = coefficient
        return cls.from_nested(dim, cells)

    @classmethod
    def from_nested(cls, dim: int, cells: Sequence) -> "StructureTensor":
        laurent = any(
            isinstance(value, LaurentScalar) for row in cells for cell in row for value in cell
        )
        convert = (lambda v: v if isinstance(v, LaurentScalar) else LaurentScalar.constant(as_rational(v))) if laurent else as_rational
        return cls(
            dim,
            tuple(tuple(tuple(convert(value) for value in cell) for cell in row) for row in cells),
        )

    @property
    def is_laurent(self) -> bool:
        return any(isinstance(c, LaurentScalar) for _, _, _, c in self.nonzero())

    def entry(self, i: int, j: int, k: int) -> Any:
        return self.gamma[i][j][k]

    def nonzero(self) -> Iterator[tuple[int, int, int, Any]]:
        for i, row in enumerate(self.gamma):
            for j, cell in enumerate(row):
                for k, value in enumerate(cell):
                    if value != 0:
                        yield i, j, k, value

    @cached_property
    def table(self) -> dict[tuple[int, int], dict[int, Any]]:
        """Nonzero products {(i, j): {k: gamma_ij^k}}."""
        result: dict[tuple[int, int], dict[int, Any]] = {}
        for i, j, k, value in self.nonzero():
            result.setdefault((i, j), {})[k] = value
        return result

    def product(self, i: int, j: int) -> dict[int, Any]:
        return self.table.get((i, j), {})

    def right_operator(self, j: int) -> list[list[Any]]:
        """Matrix of R_{e_j}: column i holds the coordinates of [e_i, e_j]."""
        d = self.dim
        matrix = [[Fraction(0)] * d for _ in range(d)]
        for i in range(d):
            for k, value in self.product(i, j).items():
                matrix[k][i] = value
        return matrix


@dataclass(frozen=True)
class Algebra:
    name: str
    tensor: StructureTensor
    basis_labels: tuple[str, ...]
    nilradical: tuple[int, ...] | None = None
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if len(self.basis_labels) != self.tensor.dim:
            raise DimensionMismatch(
                f"{self.name}: {len(self.basis_labels)} labels for dimension {self.tensor.dim}"
            )

    @property
    def dim(self) -> int:
        return self.tensor.dim


def sparse_bracket(t: StructureTensor, u: Mapping[int, Any], v: Mapping[int, Any]) -> SparseVector:
    result: dict[int, Any] = {}
    for i, ui in u.items():
        if ui == 0:
            continue
        for j, vj in v.items():
            if vj == 0:
                continue
            for k, value in t.product(i, j).items():
                result[k] = result.get(k, 0) + ui * vj * value
    return {k: value for k, value in result.items() if value != 0}


def _dense(sparse: Mapping[int, Any], dim: int) -> Vector:
    vector = [Fraction(0)] * dim
    for k, value in sparse.items():
        vector[k] = value
    return vector


def _sparse(vector: Sequence[Any]) -> SparseVector:
    return {k: value for k, value in enumerate(vector) if value != 0}


def bracket(t: StructureTensor, u: Sequence[Any], v: Sequence[Any]) -> Vector:
    if len(u) != t.dim or len(v) != t.dim:
        raise DimensionMismatch(f"vectors must have length {t.dim}")
    return _dense(sparse_bracket(t, _sparse(u), _sparse(v)), t.dim)


def _basis_vector(i: int) -> SparseVector:
    return {i: Fraction(1)}


def leibniz_defects(t: StructureTensor) -> list[tuple[int, int, int, Vector]]:
    """
    All basis triples with nonzero [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j].
    """
    d = t.dim
    defects = []
    for i in range(d):
        ei = _basis_vector(i)
        for j in range(d):
            ej = _basis_vector(j)
            eij = t.product(i, j)
            for k in range(d):
                ek = _basis_vector(k)
                total: dict[int, Any] = {}
                terms = (
                    (1, sparse_bracket(t, ei, t.product(j, k))),
                    (-1, sparse_bracket(t, eij, ek)),
                    (1, sparse_bracket(t, t.product(i, k), ej)),
                )
                for sign, image in terms:
                    for m, value in image.items():
                        total[m] = total.get(m, 0) + sign * value
                cleaned = {m: value for m, value in total.items() if value != 0}
                if cleaned:
                    defects.append((i, j, k, _dense(cleaned, d)))
    return defects


def is_leibniz(t: StructureTensor) -> bool:
    return not leibniz_defects(t)


def right_annihilator(t: StructureTensor) -> list[Vector]:
    """Basis of {x : [y, x] = 0 for all y}."""
    d = t.dim
    rows = []
    for i in range(d):
        for k in range(d):
            row = {j: t.entry(i, j, k) for j in range(d) if t.entry(i, j, k) != 0}
            if row:
                rows.append(row)
    return row_reduce(rows, d).nullspace()


def _span(vectors: Iterable[SparseVector], dim: int) -> list[SparseVector]:
    basis = EchelonBasis(dim)
    for vector in vectors:
        basis.add(vector)
    return [dict(row) for row in basis.echelon().rows]


def _series_dims(t: StructureTensor, step) -> list[int]:
    d = t.dim
    current = [_basis_vector(i) for i in range(d)]
    dims = [d]
    while dims[-1] > 0:
        following = _span(step(current), d)
        if len(following) == dims[-1]:
            break
        dims.append(len(following))
        current = following
    return dims


def lower_central_dims(t: StructureTensor) -> list[int]:
    """dim L^1, dim L^2, ... with L^{k+1} = [L^k, L], until stabilization."""
    generators = [_basis_vector(j) for j in range(t.dim)]

    def step(current: list[SparseVector]) -> Iterator[SparseVector]:
        for u in current:
            for v in generators:
                yield sparse_bracket(t, u, v)

    return _series_dims(t, step)


def derived_dims(t: StructureTensor) -> list[int]:
    """dim L^[1], dim L^[2], ... with L^[s+1] = [L^[s], L^[s]], until stabilization."""

    def step(current: list[SparseVector]) -> Iterator[SparseVector]:
        for u in current:
            for v in current:
                yield sparse_bracket(t, u, v)

    return _series_dims(t, step)


def is_nilpotent(t: StructureTensor) -> bool:
    return lower_central_dims(t)[-1] == 0


def is_solvable(t: StructureTensor) -> bool:
    return derived_dims(t)[-1] == 0


def restrict(t: StructureTensor, subset: Sequence[int]) -> StructureTensor:
    """Tensor of the subalgebra spanned by the given basis vectors (assumed closed)."""
    indices = sorted(set(subset))
    position = {index: p for p, index in enumerate(indices)}
    products: dict[tuple[int, int], dict[int, Any]] = {}
    for (i, j), image in t.table.items():
        if i in position and j in position:
            products[(position[i], position[j])] = {
                position[k]: value for k, value in image.items() if k in position
            }
    return StructureTensor.from_products(len(indices), products)


def is_ideal(t: StructureTensor, subset: Iterable[int]) -> bool:
    members = set(subset)
    for i in members:
        for j in range(t.dim):
            for image in (t.product(i, j), t.product(j, i)):
                if any(k not in members for k in image):
                    return False
    return True


def verify_nilpotent_ideal(t: StructureTensor, subset: Iterable[int]) -> bool:
    """span(subset) is a two-sided ideal and nilpotent; maximality is not checked."""
    members = sorted(set(subset))
    if any(index < 0 or index >= t.dim for index in members):
        raise DimensionMismatch(f"index outside 0..{t.dim - 1}")
    if not is_ideal(t, members):
        return False
    return is_nilpotent(restrict(t, members))


def require_declared_nilradical(algebra: Algebra) -> None:
    """Raise BadNilradical when the declared nilradical fails verify_nilpotent_ideal."""
    if algebra.nilradical is None:
        return
    if not verify_nilpotent_ideal(algebra.tensor, algebra.nilradical):
        labels = [algebra.basis_labels[index] for index in algebra.nilradical]
        raise BadNilradical(
            f"{algebra.name}: span of {labels} is not a nilpotent ideal",
            {"nilradical": [index + 1 for index in algebra.nilradical]},
        )


def apply_basis_change(t: StructureTensor, g: ExactMatrix, ginv: ExactMatrix) -> StructureTensor:
    """
    Tensor of (g*lambda)(x, y) = g(lambda(g^-1 x, g^-1 y)).

    Columns of g hold the coordinates of g(e_j). Works over rationals and,
    for degeneration families, over Laurent polynomials.
    """
    if g.rows != t.dim:
        raise DimensionMismatch(f"basis change of size {g.rows} for dimension {t.dim}")
    if not verify_inverse_pair(g, ginv):
        raise BadInverse("g * g_inverse is not the identity")
    d = t.dim
    laurent = g.is_laurent or ginv.is_laurent or t.is_laurent
    zero = LaurentScalar.zero() if laurent else Fraction(0)
    # ginv columns: coordinates of g^-1(e_i) as combinations of e_a
    ginv_columns = [
        [(a, ginv[a, i]) for a in range(d) if ginv[a, i] != 0] for i in range(d)
    ]
    g_columns = [[(k, g[k, c]) for k in range(d) if g[k, c] != 0] for c in range(d)]
    cells = [[[zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            accumulated: dict[int, Any] = {}
            for a, left in ginv_columns[i]:
                for b, right in ginv_columns[j]:
                    image = t.product(a, b)
                    if not image:
                        continue
                    weight = left * right
                    for c, value in image.items():
                        for k, gk in g_columns[c]:
                            accumulated[k] = accumulated.get(k, zero) + weight * value * gk
            for k, value in accumulated.items():
                cells[i][j][k] = value
    return StructureTensor.from_nested(d, cells)
