"""
Derivations and second adjoint cohomology of Leibniz algebras.

- derivation_space: nullspace of D[x,y] = [Dx,y] + [x,Dy] over basis pairs
- coboundary_space: span of d1(E_ab) over the elementary endomorphisms
- cocycle_space: nullspace of the d2 system, one row per (x, y, z, m)
- hl2_dim / classes_independent: quotient dimension and independence mod BL^2

Unknowns are flattened as u(a, b, c) = (a*d + b)*d + c, the coefficient of
e_c in phi(e_a, e_b). Derivation unknowns are D[r][c] at r*d + c, where
D(e_c) = sum_r D[r][c] e_r. All indices are 0-based.

Results are cached per structure tensor; the tensors are immutable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Mapping, Sequence

from leibniz_lab.algebra.cochains import Cochain2, flat_index
from leibniz_lab.algebra.structure import StructureTensor, is_leibniz, sparse_bracket
from leibniz_lab.errors import DimensionMismatch, InclusionViolated, NotCocycle, NotLeibniz
from leibniz_lab.linalg import EchelonBasis, ExactMatrix, row_reduce, to_sparse

logger = logging.getLogger(__name__)

KIND_COCYCLES = "cocycles"
KIND_COBOUNDARIES = "coboundaries"


@dataclass(frozen=True)
class CochainSpace:
    dim_ambient: int
    basis: tuple
    kind: str

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def cochains(self, dim: int) -> list[Cochain2]:
        return [Cochain2.from_vector(dim, vector) for vector in self.basis]


@dataclass(frozen=True)
class CohomologySummary:
    der: int
    zl2: int
    bl2: int
    hl2: int

    def as_dict(self) -> dict[str, int]:
        return {"der": self.der, "zl2": self.zl2, "bl2": self.bl2, "hl2": self.hl2}


def _require_leibniz(t: StructureTensor) -> None:
    if t.is_laurent:
        raise NotLeibniz("cohomology needs a tensor over the rationals")
    if not _is_leibniz_cached(t):
        raise NotLeibniz("tensor fails the Leibniz identity")


@lru_cache(maxsize=64)
def _is_leibniz_cached(t: StructureTensor) -> bool:
    return is_leibniz(t)


# -- derivations and coboundaries ---------------------------------------------


def _derivation_rows(t: StructureTensor) -> list[dict[int, Fraction]]:
    d = t.dim
    rows = []
    for i in range(d):
        for j in range(d):
            row_by_m: dict[int, dict[int, Fraction]] = {}

            def bump(m: int, unknown: int, value: Fraction) -> None:
                row = row_by_m.setdefault(m, {})
                row[unknown] = row.get(unknown, Fraction(0)) + value

            # [D e_i, e_j]
            for r in range(d):
                for m, value in t.product(r, j).items():
                    bump(m, r * d + i, value)
            # [e_i, D e_j]
            for r in range(d):
                for m, value in t.product(i, r).items():
                    bump(m, r * d + j, value)
            # -D[e_i, e_j]
            for k, value in t.product(i, j).items():
                for m in range(d):
                    bump(m, m * d + k, -value)
            rows.extend(row_by_m.values())
    return rows


@lru_cache(maxsize=64)
def _derivation_vectors(t: StructureTensor) -> tuple:
    _require_leibniz(t)
    d = t.dim
    echelon = row_reduce(_derivation_rows(t), d * d)
    basis = echelon.nullspace()
    logger.info("derivations: %d unknowns, rank %d, dim Der %d", d * d, echelon.rank, len(basis))
    return tuple(tuple(vector) for vector in basis)


def derivation_space(t: StructureTensor) -> list[ExactMatrix]:
    """Basis of Der(L) as d x d matrices whose column c holds D(e_c)."""
    d = t.dim
    return [ExactMatrix(d, d, vector) for vector in _derivation_vectors(t)]


def is_derivation(t: StructureTensor, endomorphism: ExactMatrix) -> bool:
    return coboundary_of(t, endomorphism).is_zero()


def _coboundary_entries(
    t: StructureTensor, columns: Sequence[Mapping[int, Any]]
) -> dict[tuple[int, int], dict[int, Fraction]]:
    """f(e_i, e_j) = [D e_i, e_j] + [e_i, D e_j] - D[e_i, e_j], D given by its columns."""
    d = t.dim
    entries: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(d):
        for j in range(d):
            total: dict[int, Fraction] = {}
            for image in (
                sparse_bracket(t, columns[i], {j: Fraction(1)}),
                sparse_bracket(t, {i: Fraction(1)}, columns[j]),
            ):
                for k, value in image.items():
                    total[k] = total.get(k, Fraction(0)) + value
            for c, coefficient in t.product(i, j).items():
                for k, value in columns[c].items():
                    total[k] = total.get(k, Fraction(0)) - coefficient * value
            cleaned = {k: value for k, value in total.items() if value != 0}
            if cleaned:
                entries[(i, j)] = cleaned
    return entries


def coboundary_of(t: StructureTensor, endomorphism: ExactMatrix) -> Cochain2:
    d = t.dim
    if endomorphism.rows != d or endomorphism.cols != d:
        raise DimensionMismatch(f"endomorphism must be {d}x{d}")
    columns = [
        {r: endomorphism[r, c] for r in range(d) if endomorphism[r, c] != 0} for c in range(d)
    ]
    return Cochain2.from_entries(d, _coboundary_entries(t, columns))


def _elementary_coboundary(t: StructureTensor, a: int, b: int) -> dict[int, Fraction]:
    # d1 of E_ab, the endomorphism e_b -> e_a, as a sparse flattened cochain
    d = t.dim
    vector: dict[int, Fraction] = {}

    def bump(index: int, value: Fraction) -> None:
        updated = vector.get(index, Fraction(0)) + value
        if updated:
            vector[index] = updated
        else:
            vector.pop(index, None)

    for j in range(d):
        for k, value in t.product(a, j).items():
            bump(flat_index(d, b, j, k), value)
    for i in range(d):
        for k, value in t.product(i, a).items():
            bump(flat_index(d, i, b, k), value)
    for i in range(d):
        for j in range(d):
            value = t.entry(i, j, b)
            if value != 0:
                bump(flat_index(d, i, j, a), -value)
    return vector


@lru_cache(maxsize=64)
def coboundary_space(t: StructureTensor) -> CochainSpace:
    """BL^2: an independent subset of the d1(E_ab) images, in (a, b) order."""
    _require_leibniz(t)
    d = t.dim
    echelon = EchelonBasis(d**3)
    basis = []
    for a in range(d):
        for b in range(d):
            image = _elementary_coboundary(t, a, b)
            if echelon.add(image):
                dense = [Fraction(0)] * d**3
                for index, value in image.items():
                    dense[index] = value
                basis.append(tuple(dense))
    logger.info("coboundaries: dim BL^2 = %d of %d images", len(basis), d * d)
    return CochainSpace(d**3, tuple(basis), KIND_COBOUNDARIES)


# -- cocycles --------------------------------------------------------------------


def cocycle_rows(t: StructureTensor) -> list[dict[int, Fraction]]:
    """One sparse row per (x, y, z, m) of the d2 system, zero rows dropped."""
    d = t.dim
    rows: dict[tuple[int, int, int, int], dict[int, Fraction]] = {}

    def bump(key: tuple[int, int, int, int], unknown: int, value: Fraction) -> None:
        row = rows.setdefault(key, {})
        row[unknown] = row.get(unknown, Fraction(0)) + value

    for (p, q), image in t.table.items():
        for r, value in image.items():
            for u in range(d):
                for v in range(d):
                    # [x, phi(y, z)] with (x, k) = (p, q), m = r
                    bump((p, u, v, r), flat_index(d, u, v, q), value)
                    # -[phi(x, y), z] with (k, z) = (p, q)
                    bump((u, v, q, r), flat_index(d, u, v, p), -value)
                    # +[phi(x, z), y] with (k, y) = (p, q)
                    bump((u, q, v, r), flat_index(d, u, v, p), value)
                    # +phi(x, [y, z]) with (y, z) = (p, q), bracket -> e_r
                    bump((u, p, q, v), flat_index(d, u, r, v), value)
                    # -phi([x, y], z) with (x, y) = (p, q)
                    bump((p, q, u, v), flat_index(d, r, u, v), -value)
                    # +phi([x, z], y) with (x, z) = (p, q)
                    bump((p, u, q, v), flat_index(d, r, u, v), value)
    cleaned = []
    for row in rows.values():
        nonzero = {index: value for index, value in row.items() if value != 0}
        if nonzero:
            cleaned.append(nonzero)
    return cleaned


@lru_cache(maxsize=64)
def cocycle_space(t: StructureTensor) -> CochainSpace:
    """ZL^2 as the nullspace of the stacked d2 equations."""
    _require_leibniz(t)
    d = t.dim
    rows = cocycle_rows(t)
    echelon = row_reduce(rows, d**3)
    basis = echelon.nullspace()
    logger.info(
        "cocycles: %d equations x %d unknowns, rank %d, dim ZL^2 %d",
        len(rows),
        d**3,
        echelon.rank,
        len(basis),
    )
    return CochainSpace(d**3, tuple(tuple(vector) for vector in basis), KIND_COCYCLES)


def _phi(phi: Cochain2, u: Mapping[int, Any], v: Mapping[int, Any]) -> dict[int, Fraction]:
    result: dict[int, Fraction] = {}
    for i, ui in u.items():
        for j, vj in v.items():
            for k, value in enumerate(phi.value(i, j)):
                if value != 0:
                    result[k] = result.get(k, Fraction(0)) + ui * vj * value
    return {k: value for k, value in result.items() if value != 0}


def d2_apply(t: StructureTensor, phi: Cochain2, x: int, y: int, z: int) -> list[Fraction]:
    """
    (d2 phi)(e_x, e_y, e_z) =
        [x, phi(y,z)] - [phi(x,y), z] + [phi(x,z), y]
        + phi(x, [y,z]) - phi([x,y], z) + phi([x,z], y)
    """
    d = t.dim
    if phi.dim != d:
        raise DimensionMismatch(f"cochain of dimension {phi.dim} on algebra of dimension {d}")
    ex, ey, ez = ({x: Fraction(1)}, {y: Fraction(1)}, {z: Fraction(1)})
    terms = (
        (1, sparse_bracket(t, ex, _phi(phi, ey, ez))),
        (-1, sparse_bracket(t, _phi(phi, ex, ey), ez)),
        (1, sparse_bracket(t, _phi(phi, ex, ez), ey)),
        (1, _phi(phi, ex, t.product(y, z))),
        (-1, _phi(phi, t.product(x, y), ez)),
        (1, _phi(phi, t.product(x, z), ey)),
    )
    result = [Fraction(0)] * d
    for sign, image in terms:
        for k, value in image.items():
            result[k] += sign * value
    return result


def is_cocycle(t: StructureTensor, phi: Cochain2) -> bool:
    d = t.dim
    return all(
        not any(d2_apply(t, phi, x, y, z))
        for x in range(d)
        for y in range(d)
        for z in range(d)
    )


# -- quotient --------------------------------------------------------------------


def _echelon_of(space: CochainSpace) -> EchelonBasis:
    echelon = EchelonBasis(space.dim_ambient)
    for vector in space.basis:
        echelon.add(to_sparse(vector))
    return echelon


def hl2_dim(t: StructureTensor) -> int:
    """dim ZL^2 - dim BL^2 after checking BL^2 lies inside ZL^2."""
    cocycles = cocycle_space(t)
    coboundaries = coboundary_space(t)
    echelon = _echelon_of(cocycles)
    for index, vector in enumerate(coboundaries.basis):
        if not echelon.contains(to_sparse(vector)):
            raise InclusionViolated(
                f"coboundary basis vector {index} is not a cocycle", {"index": index}
            )
    return cocycles.dimension - coboundaries.dimension


def is_coboundary(t: StructureTensor, phi: Cochain2) -> bool:
    return _echelon_of(coboundary_space(t)).contains(to_sparse(phi.to_vector()))


def classes_independent(t: StructureTensor, reps: Sequence[Cochain2]) -> bool:
    """True iff the classes of reps are linearly independent in HL^2."""
    for index, rep in enumerate(reps):
        if not is_cocycle(t, rep):
            raise NotCocycle(f"representative {index} fails the cocycle equations", {"index": index})
    echelon = _echelon_of(coboundary_space(t))
    return all(echelon.add(to_sparse(rep.to_vector())) for rep in reps)


def cohomology_summary(t: StructureTensor) -> CohomologySummary:
    hl2 = hl2_dim(t)
    return CohomologySummary(
        der=len(_derivation_vectors(t)),
        zl2=cocycle_space(t).dimension,
        bl2=coboundary_space(t).dimension,
        hl2=hl2,
    )


def cochain_to_vector(phi: Cochain2) -> list[Fraction]:
    return phi.to_vector()


def cochain_from_vector(dim: int, vector: Sequence[Any]) -> Cochain2:
    return Cochain2.from_vector(dim, vector)
