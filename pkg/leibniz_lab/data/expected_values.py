"""
Expected dimensions and invariants for the catalog families.

These are the published values the `report tables` command checks against,
with the corrected c_{1,1} closed forms. Every function returns None where
no value is known.
"""

import hashlib
import json
from fractions import Fraction
from typing import Any, Mapping

SCHEMA_VERSION = 1
TABLES_ID = "leibniz_tables"
TABLES_VERSION = 2
FINGERPRINT_RANGE = range(3, 11)


def _alpha(params: Mapping[str, Any]) -> Fraction:
    return Fraction(params.get("alpha", 0))


def _all_zero(params: Mapping[str, Any]) -> bool:
    return all(Fraction(value) == 0 for value in params.values())


def r2_special_alphas(n: int) -> set[Fraction]:
    return {Fraction(0), Fraction(1), Fraction(-1), Fraction(1 - n), Fraction(2 - n)}


def r2_samples(n: int) -> list[Fraction]:
    samples = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(1 - n), Fraction(2 - n)]
    return list(dict.fromkeys(samples))


def expected_der(key: str, n: int, params: Mapping[str, Any] | None = None) -> int | None:
    params = params or {}
    if key in {"RNF", "R1"}:
        return 2
    if key == "R3" or (key == "R4" and n >= 4):
        return 3
    if key == "R2":
        return 4 if _alpha(params) in {Fraction(1 - n), Fraction(2 - n)} else 3
    if key == "R5":
        return n if _all_zero(params) else n - 1
    return None


def expected_bl2(key: str, n: int, params: Mapping[str, Any] | None = None) -> int | None:
    der = expected_der(key, n, params)
    return None if der is None else (n + 1) ** 2 - der


def expected_zl2(key: str, n: int, params: Mapping[str, Any] | None = None) -> int | None:
    params = params or {}
    square = (n + 1) ** 2
    if key in {"RNF", "R3"} or (key == "R4" and n >= 4):
        return square - 2
    if key == "R2":
        alpha = _alpha(params)
        if n == 3:
            if alpha == -1:
                return 16
            return 15 if alpha in {Fraction(0), Fraction(1)} else 14
        return square - 1 if alpha in {Fraction(0), Fraction(1), Fraction(-1)} else square - 2
    if key == "R5":
        return n * n + 3 * n - 3
    return None


def expected_hl2(key: str, n: int, params: Mapping[str, Any] | None = None) -> int | None:
    params = params or {}
    if key == "RNF":
        return 0
    if key == "R3" or (key == "R4" and n >= 4):
        return 1
    if key == "R2":
        alpha = _alpha(params)
        if n == 3:
            if alpha == -1:
                return 4
            return 2 if alpha in {Fraction(0), Fraction(1), Fraction(-2)} else 1
        return 2 if alpha in r2_special_alphas(n) else 1
    if key == "R5":
        return 2 * n - 4 if _all_zero(params) else 2 * n - 5
    return None


def c11_from_weights(weights: list[Fraction]) -> Fraction:
    """(sum w)^2 / sum w^2 for a diagonalizable R_x with these eigenvalues."""
    total = sum(weights, Fraction(0))
    squares = sum((w * w for w in weights), Fraction(0))
    return total * total / squares


def family_weights(key: str, n: int, params: Mapping[str, Any] | None = None) -> list[Fraction] | None:
    """Eigenvalues of R_x on e_1..e_n, x for the solvable families."""
    params = params or {}
    if key == "RNF":
        return [Fraction(i) for i in range(1, n + 1)] + [Fraction(0)]
    if key == "R1":
        return [Fraction(1)] + [Fraction(i - 1) for i in range(2, n + 1)] + [Fraction(0)]
    if key == "R2":
        alpha = _alpha(params)
        return [Fraction(1)] + [i - 1 + alpha for i in range(2, n + 1)] + [Fraction(0)]
    if key == "R3":
        return [Fraction(1)] + [Fraction(i - n) for i in range(2, n + 1)] + [Fraction(0)]
    if key == "R4":
        return [Fraction(1)] + [Fraction(i + 1 - n) for i in range(2, n + 1)] + [Fraction(0)]
    if key == "R5":
        return [Fraction(0)] + [Fraction(1)] * (n - 1) + [Fraction(0)]
    if key in {"RL1", "RL2"}:
        return [Fraction(1), Fraction(n - 1, 2)] + [Fraction(i - 1) for i in range(3, n + 1)] + [Fraction(0)]
    if key == "RL3":
        j = int(params["j"])
        return [Fraction(1), Fraction(j - 2)] + [Fraction(i - 1) for i in range(3, n + 1)] + [Fraction(0)]
    return None


def expected_c11(key: str, n: int, params: Mapping[str, Any] | None = None) -> Fraction | None:
    """Closed forms where one is known, otherwise the weight formula; None if undefined."""
    params = params or {}
    if key == "RNF":
        return Fraction(3 * n * (n + 1), 2 * (2 * n + 1))
    if key == "R3":
        if n == 3:
            return None
        return Fraction(3 * n * (n - 3) ** 2, 2 * (2 * n * n - 9 * n + 13))
    if key == "R4":
        numerator = 3 * (n * n - 5 * n + 2) ** 2
        return Fraction(numerator, 2 * (2 * n**3 - 15 * n * n + 37 * n - 18)) if numerator else None
    if key == "R5":
        return Fraction(n - 1)
    if key in {"RL1", "RL2"}:
        return Fraction(3 * (n * n - 1), 4 * n - 3)
    if key == "RL3":
        j = int(params["j"])
        return Fraction(
            3 * (n * n - n + 2 * j - 4) ** 2, 2 * (2 * n**3 - 3 * n * n + n + 6 * (j - 2) ** 2)
        )
    weights = family_weights(key, n, params)
    if weights is None or sum(weights) == 0:
        return None
    return c11_from_weights(weights)


def coincidence_pairs(n: int) -> list[tuple[str, dict[str, Any], str]]:
    """R2 parameters whose c_{1,1} coincides with another family's."""
    return [
        ("R2", {"alpha": 1}, "RNF"),
        ("R2", {"alpha": 0}, "R1"),
        ("R2", {"alpha": 1 - n}, "R3"),
        ("R2", {"alpha": 2 - n}, "R4"),
    ]


def table_cases(n: int) -> list[tuple[str, dict[str, Any]]]:
    """Algebras covered by the tables at size n."""
    cases: list[tuple[str, dict[str, Any]]] = [("RNF", {}), ("R1", {})]
    cases += [("R2", {"alpha": alpha}) for alpha in r2_samples(n)]
    cases += [("R3", {}), ("R4", {})]
    if n >= 4:
        cases += [("R5", {}), ("R5", {"a4": 1})]
    cases.append(("RL1", {}))
    if n % 2 == 1 and n >= 5:
        cases.append(("RL2", {"beta": 1}))
    if n >= 4:
        cases += [("RL3", {"j": j}) for j in range(4, n + 1)]
    return cases


def _render(value: Any) -> Any:
    return None if value is None else str(value)


def expected_fingerprint() -> str:
    signature = []
    for n in FINGERPRINT_RANGE:
        for key, params in table_cases(n):
            signature.append(
                {
                    "key": key,
                    "n": n,
                    "params": {name: str(value) for name, value in params.items()},
                    "der": expected_der(key, n, params),
                    "zl2": expected_zl2(key, n, params),
                    "hl2": expected_hl2(key, n, params),
                    "c11": _render(expected_c11(key, n, params)),
                }
            )
    payload = json.dumps(signature, sort_keys=True, ensure_ascii=False).encode("utf-8")
    return f"sha256:{hashlib.sha256(payload).hexdigest()}"
