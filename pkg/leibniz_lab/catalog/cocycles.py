"""
Named 2-cocycle representatives for the solvable families R2, R3, R4, R5.

Each builder returns a Cochain2 on the algebra built by families.build with
the same key, n and parameters. Values not listed are zero.

list_representatives() names the cochains whose classes form a basis of
HL^2 for the given parameters; cohomology.classes_independent is the check.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable, Mapping

from leibniz_lab.algebra.cochains import Cochain2
from leibniz_lab.catalog.families import X, ProductTable, build, get_entry, normalize_params
from leibniz_lab.errors import Undefined

logger = logging.getLogger(__name__)


def _solvable_table(n: int) -> ProductTable:
    return ProductTable(n, solvable=True)


def _cochain(table: ProductTable) -> Cochain2:
    return Cochain2.from_entries(table.dim, table.items)


def _weighted_scaling(n: int) -> ProductTable:
    # (e_1,x) -> e_1, (e_i,x) -> (i-2) e_i, (x,e_1) -> -e_1
    table = _solvable_table(n)
    table.add(1, X, 1)
    for i in range(3, n + 1):
        table.add(i, X, i, i - 2)
    table.add(X, 1, 1, -1)
    return table


def _alpha(params: Mapping[str, Fraction]) -> Fraction:
    return params.get("alpha", Fraction(0))


def _r5_alpha(params: Mapping[str, Fraction], index: int) -> Fraction:
    return params.get(f"a{index}", Fraction(0))


def _all_zero(params: Mapping[str, Fraction]) -> bool:
    return all(value == 0 for value in params.values())


# -- R3 / R4 -------------------------------------------------------------------


def _r3_xi(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    return _weighted_scaling(n)


def _r4_rho(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _weighted_scaling(n)
    table.add(X, X, n - 1, -1)
    return table


# -- R2(alpha) -----------------------------------------------------------------


def _r2_rho(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    return _weighted_scaling(n)


def _r2_psi1(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _solvable_table(n)
    for i in range(2, n + 1):
        table.add(i, X, i)
    return table


def _r2_psi2(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if _alpha(params) != -1:
        raise Undefined("R2 psi2 is a cocycle only at alpha = -1")
    table = _solvable_table(n)
    for i in range(2, n + 1):
        table.add(i, 2, i)
    return table


def _r2_psi3(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _solvable_table(n)
    table.add(1, X, n)
    table.add(X, X, n - 1, -1)
    return table


def _r2_psi4(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if n != 3 or _alpha(params) != -1:
        raise Undefined("R2 psi4 exists only for n = 3, alpha = -1")
    table = _solvable_table(n)
    table.add(1, 2, n)
    table.add(X, 2, n - 1, -1)
    return table


def _r2_toward_r1(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if _alpha(params) != 0:
        raise Undefined("toward_r1 is defined at alpha = 0")
    table = _solvable_table(n)
    table.add(X, 1, 2, -1)
    return table


def _r2_toward_rnf(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if _alpha(params) != 1:
        raise Undefined("toward_rnf is defined at alpha = 1")
    table = _solvable_table(n)
    table.add(1, 1, 2)
    return table


def _r2_toward_r3(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if _alpha(params) != 1 - n:
        raise Undefined(f"toward_r3 is defined at alpha = {1 - n}")
    table = _solvable_table(n)
    table.add(X, X, n)
    return table


def _r2_toward_r4(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    if _alpha(params) != 2 - n:
        raise Undefined(f"toward_r4 is defined at alpha = {2 - n}")
    return _r2_psi3(n, params)


# -- R5(a4..an) ----------------------------------------------------------------


def _r5_rho(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _solvable_table(n)
    table.add(1, X, 1)
    table.add(1, X, 2, -1)
    for i in range(3, n + 1):
        table.add(i, X, i, i - 2)
    table.add(X, 1, 2)
    table.add(X, 1, 1, -1)
    table.add(X, 1, n, -_r5_alpha(params, n))
    return table


def _r5_psi(k: int) -> Callable[[int, Mapping[str, Fraction]], ProductTable]:
    def builder(n: int, params: Mapping[str, Fraction]) -> ProductTable:
        table = _solvable_table(n)
        if k == n:
            table.add(2, X, n)
            return table
        table.add(1, X, k)
        for i in range(2, n - k + 3):
            table.add(i, X, k + i - 2)
        return table

    return builder


def _r5_phi(k: int) -> Callable[[int, Mapping[str, Fraction]], ProductTable]:
    def builder(n: int, params: Mapping[str, Fraction]) -> ProductTable:
        a = lambda index: _r5_alpha(params, index)  # noqa: E731
        table = _solvable_table(n)
        table.add(n, 1, k)
        if k == 2:
            table.add(1, 1, 2, -a(n))
            for j in range(3, n):
                table.add(1, X, j, -a(n) * a(j + 1))
            for i in range(3, n):
                for j in range(2, i):
                    table.add(i, X, j, a(n + j + 1 - i))
            for j in range(3, n):
                table.add(n, X, j, a(j + 1))
            return table
        table.add(1, X, k - 1, a(n))
        for i in range(3, n):
            upper = i + k - 3 if i <= n + 2 - k else n
            for j in range(k, upper + 1):
                table.add(i, X, j, a(n + j + 3 - i - k))
        for j in range(k + 1, n + 1):
            table.add(n, X, j, a(j + 3 - k))
        return table

    return builder


def _builders(key: str, n: int) -> dict[str, Callable[[int, Mapping[str, Fraction]], ProductTable]]:
    if key == "R3":
        return {"xi": _r3_xi}
    if key == "R4":
        return {"rho": _r4_rho}
    if key == "R2":
        return {
            "rho": _r2_rho,
            "psi1": _r2_psi1,
            "psi2": _r2_psi2,
            "psi3": _r2_psi3,
            "psi4": _r2_psi4,
            "toward_r1": _r2_toward_r1,
            "toward_rnf": _r2_toward_rnf,
            "toward_r3": _r2_toward_r3,
            "toward_r4": _r2_toward_r4,
        }
    if key == "R5":
        named = {"rho": _r5_rho}
        named.update({f"psi{k}": _r5_psi(k) for k in range(4, n + 1)})
        named.update({f"phi{k}": _r5_phi(k) for k in range(2, n)})
        return named
    return {}


def available_representatives(key: str, n: int) -> list[str]:
    return list(_builders(get_entry(key).key, n))


def representative_cocycle(
    key: str, n: int, which: str, params: Mapping[str, Any] | None = None
) -> Cochain2:
    """Transcribed representative WHICH for the algebra KEY(n, params)."""
    canonical = get_entry(key).key
    cleaned = normalize_params(params)
    # validates n and the parameters
    build(canonical, n, cleaned)
    builder = _builders(canonical, n).get(which)
    if builder is None:
        raise Undefined(f"no representative {which!r} for {canonical}({n})")
    return _cochain(builder(n, cleaned))


def _r2_basis(n: int, alpha: Fraction) -> list[str]:
    tangents = {
        Fraction(0): "toward_r1",
        Fraction(1): "toward_rnf",
        Fraction(1 - n): "toward_r3",
        Fraction(2 - n): "psi3",
    }
    if alpha == -1:
        return ["psi1", "psi2", "psi3", "psi4"] if n == 3 else ["psi1", "psi2"]
    if alpha in tangents:
        return ["rho", tangents[alpha]]
    return ["rho"]


def _r5_basis(n: int, params: Mapping[str, Fraction]) -> list[str]:
    psis = list(range(4, n + 1))
    if not _all_zero(params):
        # sum of (k-2) a_k psi_k is a coboundary, so one psi_k with a_k != 0 goes
        psis.remove(next(k for k in psis if _r5_alpha(params, k) != 0))
    return ["rho"] + [f"psi{k}" for k in psis] + [f"phi{k}" for k in range(2, n)]


def list_representatives(key: str, n: int, params: Mapping[str, Any] | None = None) -> list[str]:
    """
    Names of representatives whose classes form a basis of HL^2.

    Raises Undefined where no listed basis exists (R4 at n = 3 and families
    without listed classes).
    """
    canonical = get_entry(key).key
    cleaned = normalize_params(params)
    build(canonical, n, cleaned)
    if canonical == "RNF":
        return []
    if canonical == "R3":
        return ["xi"]
    if canonical == "R4":
        if n < 4:
            raise Undefined("R4 at n = 3 has no listed HL^2 basis")
        return ["rho"]
    if canonical == "R2":
        return _r2_basis(n, _alpha(cleaned))
    if canonical == "R5":
        return _r5_basis(n, cleaned)
    raise Undefined(f"no listed HL^2 basis for {canonical}")


def scaling_combination(n: int, params: Mapping[str, Any]) -> Cochain2:
    """sum over k of (k-2) a_k psi_k for R5; a coboundary for every parameter choice."""
    cleaned = normalize_params(params)
    build("R5", n, cleaned)
    total = Cochain2.zeros(n + 1)
    for k in range(4, n + 1):
        coefficient = (k - 2) * _r5_alpha(cleaned, k)
        if coefficient:
            total = total + _cochain(_r5_psi(k)(n, cleaned)).scale(coefficient)
    return total
