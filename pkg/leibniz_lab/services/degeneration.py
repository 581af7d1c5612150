"""
Degenerations through one-parameter basis changes.

A family g_t is given as a Laurent-polynomial matrix (columns are g_t(e_j))
together with an explicit Laurent-polynomial inverse. The transformed
bracket [x, y]_t = g_t [g_t^-1 x, g_t^-1 y] is computed exactly and its
t -> 0 limit is compared with the claimed target entry for entry.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Sequence

from leibniz_lab.algebra.structure import Algebra, StructureTensor, apply_basis_change, leibniz_defects
from leibniz_lab.catalog import build
from leibniz_lab.errors import (
    BadInverse,
    BadParams,
    DimensionMismatch,
    InconsistentDegeneration,
    LimitNotLeibniz,
    TargetMismatch,
)
from leibniz_lab.linalg import ExactMatrix, LaurentScalar, laurent_limit, verify_inverse_pair
from leibniz_lab.services.invariants import VERDICT_RULED_OUT, DegenerationReport, degeneration_report

logger = logging.getLogger(__name__)

STATUS_VERIFIED = "verified"


@dataclass(frozen=True)
class BasisChangeFamily:
    dim: int
    g: ExactMatrix
    g_inverse: ExactMatrix

    def __post_init__(self) -> None:
        if self.g.rows != self.dim or self.g_inverse.rows != self.dim:
            raise DimensionMismatch(f"family matrices must be {self.dim}x{self.dim}")
        if not verify_inverse_pair(self.g, self.g_inverse):
            raise BadInverse("g_t * g_t^-1 is not the identity")

    @classmethod
    def from_images(cls, dim: int, images: Mapping[int, Mapping[int, LaurentScalar]],
                    inverse_images: Mapping[int, Mapping[int, LaurentScalar]]) -> "BasisChangeFamily":
        """Basis vectors missing from images are mapped to themselves."""
        return cls(dim, _matrix_from_images(dim, images), _matrix_from_images(dim, inverse_images))


@dataclass(frozen=True)
class DegenerationFixture:
    name: str
    source: Algebra
    family: BasisChangeFamily
    target: Algebra
    post_change: tuple | None = None

    def __post_init__(self) -> None:
        if not (self.source.dim == self.target.dim == self.family.dim):
            raise DimensionMismatch(
                f"{self.name}: source {self.source.dim}, target {self.target.dim}, family {self.family.dim}"
            )


@dataclass(frozen=True)
class FixtureVerdict:
    name: str
    status: str
    limit: StructureTensor
    report: DegenerationReport | None = field(default=None, compare=False)

    @property
    def consistent(self) -> bool:
        return self.report is None or self.report.verdict != VERDICT_RULED_OUT

    def as_dict(self) -> dict[str, Any]:
        return {
            "fixture": self.name,
            "status": self.status,
            "consistent": self.consistent,
            "report": self.report.as_dict() if self.report else None,
        }


def _matrix_from_images(dim: int, images: Mapping[int, Mapping[int, Any]]) -> ExactMatrix:
    entries = [LaurentScalar.zero()] * (dim * dim)
    for column in range(dim):
        image = images.get(column)
        if image is None:
            entries[column * dim + column] = LaurentScalar.one()
            continue
        for row, value in image.items():
            entries[row * dim + column] = value if isinstance(value, LaurentScalar) else LaurentScalar.constant(value)
    return ExactMatrix(dim, dim, tuple(entries))


def _t(exponent: int, coefficient: Any = 1) -> LaurentScalar:
    return LaurentScalar.monomial(coefficient, exponent)


def scaling_family(dim: int, exponents: Sequence[int]) -> BasisChangeFamily:
    """g_t(e_i) = t^exponents[i] e_i."""
    if len(exponents) != dim:
        raise DimensionMismatch(f"{len(exponents)} exponents for dimension {dim}")
    return BasisChangeFamily(
        dim,
        ExactMatrix.diagonal([_t(e) for e in exponents]),
        ExactMatrix.diagonal([_t(-e) for e in exponents]),
    )


def evaluate_at_one(family: BasisChangeFamily) -> tuple[ExactMatrix, ExactMatrix]:
    """Substitute t = 1 in g_t and its inverse."""
    return (
        family.g.map_entries(lambda value: value.evaluate(1)),
        family.g_inverse.map_entries(lambda value: value.evaluate(1)),
    )


def transformed_tensor(source: StructureTensor, family: BasisChangeFamily) -> StructureTensor:
    return apply_basis_change(source, family.g, family.g_inverse)


def limit_tensor(t: StructureTensor) -> StructureTensor:
    d = t.dim
    cells = [
        [[laurent_limit(t.entry(i, j, k), (i, j, k)) for k in range(d)] for j in range(d)]
        for i in range(d)
    ]
    limit = StructureTensor.from_nested(d, cells)
    defects = leibniz_defects(limit)
    if defects:
        i, j, k, _ = defects[0]
        raise LimitNotLeibniz(
            f"limit fails the Leibniz identity at ({i + 1},{j + 1},{k + 1})",
            {"defects": len(defects)},
        )
    return limit


def _first_difference(got: StructureTensor, expected: StructureTensor) -> tuple | None:
    d = got.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if got.entry(i, j, k) != expected.entry(i, j, k):
                    return i, j, k, got.entry(i, j, k), expected.entry(i, j, k)
    return None


def run_fixture(fixture: DegenerationFixture, with_report: bool = True) -> FixtureVerdict:
    limit = limit_tensor(transformed_tensor(fixture.source.tensor, fixture.family))
    if fixture.post_change is not None:
        g, g_inverse = fixture.post_change
        limit = apply_basis_change(limit, g, g_inverse)
    difference = _first_difference(limit, fixture.target.tensor)
    if difference is not None:
        raise TargetMismatch(*difference)
    report = degeneration_report(fixture.source, fixture.target) if with_report else None
    if report is not None and report.verdict == VERDICT_RULED_OUT:
        raise InconsistentDegeneration(
            f"{fixture.name}: limit matches the target but the report rules it out ({', '.join(report.failures)})",
            {"failures": list(report.failures)},
        )
    logger.info("fixture %s: %s", fixture.name, STATUS_VERIFIED)
    return FixtureVerdict(fixture.name, STATUS_VERIFIED, limit, report)


def _solvable_scaling(n: int, first: int, rest) -> BasisChangeFamily:
    # g_t(x) = x, g_t(e_1) = t^first e_1, g_t(e_i) = t^rest(i) e_i
    exponents = [first] + [rest(i) for i in range(2, n + 1)] + [0]
    return scaling_family(n + 1, exponents)


def _filiform_switch(n: int) -> BasisChangeFamily:
    # g_t(e_1) = e_1 - t^-1 e_2, g_t(e_2) = t^-1 e_2
    images = {0: {0: _t(0), 1: _t(-1, -1)}, 1: {1: _t(-1)}}
    inverse_images = {0: {0: _t(0), 1: _t(0)}, 1: {1: _t(1)}}
    return BasisChangeFamily.from_images(n, images, inverse_images)


def builtin_fixtures(n: int) -> list[DegenerationFixture]:
    """The six catalog degenerations at size n (n >= 4)."""
    if n < 4:
        raise BadParams(f"builtin fixtures need n >= 4, got {n}")
    r5_params = {"a4": Fraction(1)}
    return [
        DegenerationFixture(
            f"F1g({n}) -> F2g({n})", build("F1g", n), _filiform_switch(n), build("F2g", n)
        ),
        DegenerationFixture(
            f"RNF({n}) -> R2({n},alpha=1)",
            build("RNF", n),
            _solvable_scaling(n, -1, lambda i: 2 - i),
            build("R2", n, {"alpha": 1}),
        ),
        DegenerationFixture(
            f"R1({n}) -> R2({n},alpha=0)",
            build("R1", n),
            _solvable_scaling(n, 0, lambda i: 1),
            build("R2", n, {"alpha": 0}),
        ),
        DegenerationFixture(
            f"R3({n}) -> R2({n},alpha={1 - n})",
            build("R3", n),
            _solvable_scaling(n, 0, lambda i: 1),
            build("R2", n, {"alpha": 1 - n}),
        ),
        DegenerationFixture(
            f"R4({n}) -> R2({n},alpha={2 - n})",
            build("R4", n),
            _solvable_scaling(n, 0, lambda i: 1),
            build("R2", n, {"alpha": 2 - n}),
        ),
        DegenerationFixture(
            f"R5({n},a4=1) -> R5({n})",
            build("R5", n, r5_params),
            _solvable_scaling(n, 1, lambda i: i - 1),
            build("R5", n),
        ),
    ]
