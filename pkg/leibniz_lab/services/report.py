"""
Regeneration of the numeric tables.

For each n the report recomputes, over the catalog cases of
data.expected_values.table_cases:
- Leibniz defects, derivation and coboundary dimensions
- cocycle and HL^2 dimensions where a value is published
- c_{1,1} and the R2 coincidences with the other families
- independence of the listed HL^2 representatives
- the six builtin degenerations

Rows come out in a fixed order so two runs print identical tables.
"""

import logging
from fractions import Fraction
from typing import Any, Callable

from leibniz_lab.algebra.structure import leibniz_defects
from leibniz_lab.catalog import build, list_representatives, representative_cocycle
from leibniz_lab.data import expected_values as expected
from leibniz_lab.errors import LeibnizError
from leibniz_lab.services.cohomology import (
    classes_independent,
    coboundary_space,
    cocycle_space,
    derivation_space,
    hl2_dim,
)
from leibniz_lab.services.degeneration import STATUS_VERIFIED, builtin_fixtures, run_fixture
from leibniz_lab.services.invariants import c11_exact

logger = logging.getLogger(__name__)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
UNDEFINED = "undefined"


def _render(value: Any) -> str:
    if value is None:
        return UNDEFINED
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def _row(quantity: str, algebra: str, n: int, compute: Callable[[], Any], expected_value: Any) -> dict[str, Any]:
    try:
        computed = _render(compute())
    except LeibnizError as exc:
        logger.warning("%s of %s failed: %s", quantity, algebra, exc.message)
        computed = f"error: {exc.message}"
    wanted = _render(expected_value)
    return {
        "quantity": quantity,
        "algebra": algebra,
        "n": n,
        "computed": computed,
        "expected": wanted,
        "status": STATUS_PASS if computed == wanted else STATUS_FAIL,
    }


def _c11_value(tensor) -> Fraction | None:
    value = c11_exact(tensor)
    return value.value if value.defined else None


def _representatives_count(key: str, n: int, params: dict[str, Any], tensor) -> int | str:
    names = list_representatives(key, n, params)
    reps = [representative_cocycle(key, n, name, params) for name in names]
    return len(reps) if classes_independent(tensor, reps) else "dependent"


def _case_rows(n: int, key: str, params: dict[str, Any]) -> list[dict[str, Any]]:
    algebra = build(key, n, params)
    tensor = algebra.tensor
    name = algebra.name
    rows = [_row("leibniz_defects", name, n, lambda: len(leibniz_defects(tensor)), 0)]
    if leibniz_defects(tensor):
        return rows

    der = expected.expected_der(key, n, params)
    if der is not None:
        rows.append(_row("der", name, n, lambda: len(derivation_space(tensor)), der))
        rows.append(_row("bl2", name, n, lambda: coboundary_space(tensor).dimension, expected.expected_bl2(key, n, params)))
    zl2 = expected.expected_zl2(key, n, params)
    if zl2 is not None:
        rows.append(_row("zl2", name, n, lambda: cocycle_space(tensor).dimension, zl2))
    hl2 = expected.expected_hl2(key, n, params)
    if hl2 is not None:
        rows.append(_row("hl2", name, n, lambda: hl2_dim(tensor), hl2))
        try:
            list_representatives(key, n, params)
        except LeibnizError:
            pass
        else:
            rows.append(
                _row("hl2_basis", name, n, lambda: _representatives_count(key, n, params, tensor), hl2)
            )
    if expected.family_weights(key, n, params) is not None:
        rows.append(_row("c11", name, n, lambda: _c11_value(tensor), expected.expected_c11(key, n, params)))
    return rows


def _coincidence_rows(n: int) -> list[dict[str, Any]]:
    rows = []
    for key, params, other in expected.coincidence_pairs(n):
        algebra = build(key, n, params)
        partner = build(other, n)
        rows.append(
            _row(
                f"c11 = c11({other})",
                algebra.name,
                n,
                lambda tensor=algebra.tensor: _c11_value(tensor),
                _c11_value(partner.tensor),
            )
        )
    return rows


def _fixture_rows(n: int) -> list[dict[str, Any]]:
    rows = []
    for fixture in builtin_fixtures(n):
        rows.append(
            _row(
                "degeneration",
                fixture.name,
                n,
                lambda fixture=fixture: run_fixture(fixture).status,
                STATUS_VERIFIED,
            )
        )
    return rows


def build_rows(nmin: int, nmax: int) -> list[dict[str, Any]]:
    rows: list[dict[str, Any]] = []
    for n in range(nmin, nmax + 1):
        logger.info("tables for n = %d", n)
        for key, params in expected.table_cases(n):
            rows.extend(_case_rows(n, key, params))
        rows.extend(_coincidence_rows(n))
        if n >= 4:
            rows.extend(_fixture_rows(n))
    return rows


def failed_rows(rows: list[dict[str, Any]]) -> list[dict[str, Any]]:
    return [row for row in rows if row.get("status") != STATUS_PASS]
