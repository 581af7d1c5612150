"""
Trace invariants and necessary conditions for degenerations.

Traces are taken of RIGHT multiplications R_x(y) = [y, x]; those are the
operators that act as derivations in a (right) Leibniz algebra.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from leibniz_lab.algebra.structure import (
    Algebra,
    StructureTensor,
    is_leibniz,
    lower_central_dims,
    require_declared_nilradical,
)
from leibniz_lab.config.settings import get_sampling_seed
from leibniz_lab.errors import DimensionMismatch, NotLeibniz, PreconditionError
from leibniz_lab.linalg import ExactMatrix
from leibniz_lab.services.cohomology import derivation_space

logger = logging.getLogger(__name__)

REASON_TRACE_ZERO = "trace-zero"
REASON_KAPPA_ZERO = "kappa-zero"
REASON_NOT_PROPORTIONAL = "not-proportional"
REASON_TOO_FEW_SAMPLES = "too-few-samples"
REASON_NOT_INVARIANT = "not-invariant"

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_UNDEFINED = "undefined"
STATUS_UNKNOWN = "unknown"

VERDICT_POSSIBLE = "possible"
VERDICT_RULED_OUT = "ruled_out"

_SAMPLE_NUMERATOR = 9
_SAMPLE_DENOMINATOR = 5


@dataclass(frozen=True)
class TraceForm:
    tau: tuple
    kappa: tuple


@dataclass(frozen=True)
class InvariantValue:
    defined: bool
    value: Fraction | None = None
    reason: str | None = None
    not_invariant: bool = False

    def render(self) -> str:
        return str(self.value) if self.defined else f"undefined ({self.reason})"


@dataclass(frozen=True)
class ConditionRecord:
    condition: str
    status: str
    lhs: Any = None
    rhs: Any = None

    def as_dict(self) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "status": self.status,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }


@dataclass(frozen=True)
class DegenerationReport:
    source: str
    target: str
    conditions: tuple = field(default_factory=tuple)

    @property
    def failures(self) -> list[str]:
        return [record.condition for record in self.conditions if record.status == STATUS_FAIL]

    @property
    def verdict(self) -> str:
        return VERDICT_RULED_OUT if self.failures else VERDICT_POSSIBLE

    def condition(self, name: str) -> ConditionRecord:
        for record in self.conditions:
            if record.condition == name:
                return record
        raise KeyError(name)

    def as_dict(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "target": self.target,
            "verdict": self.verdict,
            "reasons": self.failures,
            "conditions": [record.as_dict() for record in self.conditions],
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, InvariantValue):
        return str(value.value) if value.defined else None
    return value


# -- traces ----------------------------------------------------------------------


def _right_operators(t: StructureTensor) -> list[list[list[Fraction]]]:
    return [t.right_operator(j) for j in range(t.dim)]


def _trace_of_product(left: Sequence[Sequence[Fraction]], right: Sequence[Sequence[Fraction]]) -> Fraction:
    size = len(left)
    return sum(
        (left[a][b] * right[b][a] for a in range(size) for b in range(size) if left[a][b] and right[b][a]),
        Fraction(0),
    )


def trace_form(t: StructureTensor) -> TraceForm:
    operators = _right_operators(t)
    d = t.dim
    tau = tuple(sum((operators[i][a][a] for a in range(d)), Fraction(0)) for i in range(d))
    kappa = tuple(
        tuple(_trace_of_product(operators[i], operators[j]) for j in range(d)) for i in range(d)
    )
    return TraceForm(tau, kappa)


def c11_exact(t: StructureTensor) -> InvariantValue:
    """
    tr R_x tr R_y / tr(R_x R_y) when it does not depend on x and y.

    That happens exactly when kappa = tau tau^T / c for a rational c != 0.
    """
    form = trace_form(t)
    if not any(form.tau):
        return InvariantValue(False, reason=REASON_TRACE_ZERO)
    pivot = next(
        ((i, j) for i, row in enumerate(form.kappa) for j, value in enumerate(row) if value),
        None,
    )
    if pivot is None:
        return InvariantValue(False, reason=REASON_KAPPA_ZERO)
    i, j = pivot
    c = form.tau[i] * form.tau[j] / form.kappa[i][j]
    d = t.dim
    proportional = c != 0 and all(
        form.kappa[a][b] * c == form.tau[a] * form.tau[b] for a in range(d) for b in range(d)
    )
    if not proportional:
        return InvariantValue(False, reason=REASON_NOT_PROPORTIONAL)
    return InvariantValue(True, value=c)


def _operator_of(t: StructureTensor, vector: Sequence[Fraction]) -> ExactMatrix:
    d = t.dim
    entries = [Fraction(0)] * (d * d)
    for j, coefficient in enumerate(vector):
        if not coefficient:
            continue
        for i in range(d):
            for k, value in t.product(i, j).items():
                entries[k * d + i] += coefficient * value
    return ExactMatrix(d, d, tuple(entries))


def _power(matrix: ExactMatrix, exponent: int) -> ExactMatrix:
    result = matrix
    for _ in range(exponent - 1):
        result = result @ matrix
    return result


def _trace(matrix: ExactMatrix) -> Fraction:
    return sum((matrix[a, a] for a in range(matrix.rows)), Fraction(0))


def _random_vector(rng: random.Random, dim: int) -> list[Fraction]:
    return [
        Fraction(rng.randint(-_SAMPLE_NUMERATOR, _SAMPLE_NUMERATOR), rng.randint(1, _SAMPLE_DENOMINATOR))
        for _ in range(dim)
    ]


def cij_sampled(t: StructureTensor, i: int, j: int, samples: int = 12) -> InvariantValue:
    """
    tr(R_x)^i tr(R_y)^j / tr(R_x^i R_y^j) at seeded random rational x, y.

    Evaluations with a zero numerator or denominator are skipped. Defined when
    at least half of the samples (rounded up) succeed and all of them agree.
    """
    if i < 1 or j < 1:
        raise PreconditionError(f"i and j must be positive, got ({i}, {j})")
    if samples < 1:
        raise PreconditionError("samples must be positive")
    rng = random.Random(get_sampling_seed())
    values: list[Fraction] = []
    for _ in range(samples):
        rx = _operator_of(t, _random_vector(rng, t.dim))
        ry = _operator_of(t, _random_vector(rng, t.dim))
        denominator = _trace(_power(rx, i) @ _power(ry, j))
        numerator = _trace(rx) ** i * _trace(ry) ** j
        if denominator == 0 or numerator == 0:
            continue
        values.append(numerator / denominator)
    if len(values) < math.ceil(samples / 2):
        logger.debug("c_%d,%d: %d of %d samples usable", i, j, len(values), samples)
        return InvariantValue(False, reason=REASON_TOO_FEW_SAMPLES)
    if any(value != values[0] for value in values):
        return InvariantValue(False, reason=REASON_NOT_INVARIANT, not_invariant=True)
    return InvariantValue(True, value=values[0])


def orbit_dim(t: StructureTensor) -> int:
    return t.dim**2 - len(derivation_space(t))


# -- degeneration report -------------------------------------------------------------


def _stabilized(dims: list[int], length: int) -> list[int]:
    return dims + [dims[-1]] * (length - len(dims))


def degeneration_report(source: Algebra, target: Algebra) -> DegenerationReport:
    """Necessary conditions for source to degenerate to target."""
    if source.dim != target.dim:
        raise DimensionMismatch(f"{source.name} has dim {source.dim}, {target.name} has dim {target.dim}")
    if source.tensor == target.tensor:
        raise PreconditionError("source and target coincide; a nontrivial candidate is required")
    for algebra in (source, target):
        if not is_leibniz(algebra.tensor):
            raise NotLeibniz(f"{algebra.name} fails the Leibniz identity")
        require_declared_nilradical(algebra)

    records: list[ConditionRecord] = []

    der_source = len(derivation_space(source.tensor))
    der_target = len(derivation_space(target.tensor))
    records.append(
        ConditionRecord("der", STATUS_PASS if der_source < der_target else STATUS_FAIL, der_source, der_target)
    )

    lcs_source = lower_central_dims(source.tensor)
    lcs_target = lower_central_dims(target.tensor)
    length = max(len(lcs_source), len(lcs_target))
    for m, (lhs, rhs) in enumerate(
        zip(_stabilized(lcs_source, length), _stabilized(lcs_target, length)), start=1
    ):
        records.append(ConditionRecord(f"power_{m}", STATUS_PASS if lhs >= rhs else STATUS_FAIL, lhs, rhs))

    c_source = c11_exact(source.tensor)
    c_target = c11_exact(target.tensor)
    if c_source.defined and c_target.defined:
        status = STATUS_PASS if c_source.value == c_target.value else STATUS_FAIL
    else:
        status = STATUS_UNDEFINED
    records.append(ConditionRecord("c11", status, c_source, c_target))

    if source.nilradical is not None and target.nilradical is not None:
        lhs, rhs = len(source.nilradical), len(target.nilradical)
        records.append(ConditionRecord("nilradical", STATUS_PASS if rhs >= lhs else STATUS_FAIL, lhs, rhs))
    else:
        records.append(ConditionRecord("nilradical", STATUS_UNKNOWN))

    records.append(ConditionRecord("lie", STATUS_UNKNOWN))

    report = DegenerationReport(source.name, target.name, tuple(records))
    logger.info("report %s -> %s: %s %s", source.name, target.name, report.verdict, report.failures)
    return report
