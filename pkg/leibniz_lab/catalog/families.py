"""
Constructors for the named Leibniz algebras and families.

Nilpotent families live on e_1..e_n; solvable ones add x as the last basis
vector. Products not written are zero. Parameters are exact rationals and
are never normalized (the first nonzero alpha of R5 may be any value).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Mapping

from leibniz_lab.algebra.structure import Algebra, StructureTensor
from leibniz_lab.errors import BadParams, ParseError
from leibniz_lab.linalg.scalars import as_rational, render_rational

logger = logging.getLogger(__name__)

X = "x"

_NAME_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_]*)\s*\(\s*([^()]*)\)\s*$")
_INDEXED_RE = re.compile(r"^([ab])(\d+)$")


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    title: str
    params: str
    validity: str
    citation: str
    solvable: bool


class ProductTable:
    def __init__(self, n: int, solvable: bool):
        self.n = n
        self.dim = n + 1 if solvable else n
        self.items: dict[tuple[int, int], dict[int, Fraction]] = {}

    def _index(self, label: Any) -> int:
        return self.n if label == X else int(label) - 1

    def add(self, left: Any, right: Any, target: Any, coefficient: Any = 1) -> None:
        value = Fraction(coefficient)
        if value == 0:
            return
        image = self.items.setdefault((self._index(left), self._index(right)), {})
        k = self._index(target)
        image[k] = image.get(k, Fraction(0)) + value

    def tensor(self) -> StructureTensor:
        return StructureTensor.from_products(self.dim, self.items)


def _labels(n: int, solvable: bool) -> tuple[str, ...]:
    labels = tuple(f"e{i}" for i in range(1, n + 1))
    return labels + (X,) if solvable else labels


def _indexed(params: Mapping[str, Fraction], prefix: str, index: int) -> Fraction:
    return params.get(f"{prefix}{index}", Fraction(0))


# -- nilpotent families ------------------------------------------------------


def _abelian(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    return ProductTable(n, solvable=False)


def _null_filiform(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = ProductTable(n, solvable=False)
    for i in range(1, n):
        table.add(i, 1, i + 1)
    return table


def _filiform_one(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = ProductTable(n, solvable=False)
    for i in range(2, n):
        table.add(i, 1, i + 1)
    return table


def _filiform_two(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = ProductTable(n, solvable=False)
    table.add(1, 1, 3)
    for i in range(3, n):
        table.add(i, 1, i + 1)
    return table


def _filiform_three(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    alpha = params.get("alpha", Fraction(0))
    table = ProductTable(n, solvable=False)
    for i in range(2, n):
        table.add(i, 1, i + 1)
        table.add(1, i, i + 1, -1)
    for i in range(2, n):
        table.add(i, n + 1 - i, n, alpha * (-1) ** (i + 1))
    return table


def _filiform_family_one(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _filiform_one(n, params)
    table.add(1, 2, n, params.get("theta", Fraction(0)))
    for j in range(2, n - 1):
        for k in range(4, n + 3 - j):
            table.add(j, 2, j + k - 2, _indexed(params, "a", k))
    return table


def _filiform_family_two(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _filiform_two(n, params)
    for k in range(4, n + 1):
        table.add(1, 2, k, _indexed(params, "b", k))
    table.add(2, 2, n, params.get("gamma", Fraction(0)))
    for j in range(3, n - 1):
        for k in range(4, n + 3 - j):
            table.add(j, 2, j + k - 2, _indexed(params, "b", k))
    return table


# -- solvable families -------------------------------------------------------


def _solvable_null_filiform(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = ProductTable(n, solvable=True)
    for i in range(1, n):
        table.add(i, 1, i + 1)
    table.add(X, 1, 1, -1)
    for i in range(1, n + 1):
        table.add(i, X, i, i)
    return table


def _r_base(n: int) -> ProductTable:
    table = ProductTable(n, solvable=True)
    for i in range(2, n):
        table.add(i, 1, i + 1)
    table.add(X, 1, 1, -1)
    table.add(1, X, 1)
    return table


def _r_one(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _r_base(n)
    table.add(X, 1, 2, -1)
    for i in range(2, n + 1):
        table.add(i, X, i, i - 1)
    return table


def _r_two(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    alpha = params.get("alpha", Fraction(0))
    table = _r_base(n)
    for i in range(2, n + 1):
        table.add(i, X, i, i - 1 + alpha)
    return table


def _r_three(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _r_base(n)
    for i in range(2, n + 1):
        table.add(i, X, i, i - n)
    table.add(X, X, n)
    return table


def _r_four(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _r_base(n)
    table.add(1, X, n)
    for i in range(2, n + 1):
        table.add(i, X, i, i + 1 - n)
    table.add(X, X, n - 1, -1)
    return table


def _r_five(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = ProductTable(n, solvable=True)
    table.add(1, 1, 3)
    for i in range(2, n):
        table.add(i, 1, i + 1)
    table.add(1, X, 2)
    for i in range(4, n):
        table.add(1, X, i, _indexed(params, "a", i))
    for i in range(2, n + 1):
        table.add(i, X, i)
        for j in range(i + 2, n + 1):
            table.add(i, X, j, _indexed(params, "a", j - i + 2))
    return table


def _rl_base(n: int, weight_two: Fraction) -> ProductTable:
    table = ProductTable(n, solvable=True)
    table.add(1, 1, 3)
    for i in range(3, n):
        table.add(i, 1, i + 1)
    table.add(X, 1, 1, -1)
    table.add(1, X, 1)
    table.add(X, 2, 2, -weight_two)
    table.add(2, X, 2, weight_two)
    for i in range(3, n + 1):
        table.add(i, X, i, i - 1)
    return table


def _rl_one(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    table = _rl_base(n, Fraction(n - 1, 2))
    table.add(2, 2, n)
    return table


def _rl_two(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    beta = params.get("beta", Fraction(1))
    table = _rl_one(n, params)
    table.add(1, 2, (n + 3) // 2, beta)
    for i in range(3, (n + 1) // 2 + 1):
        table.add(i, 2, (n - 1 + 2 * i) // 2, beta)
    table.add(X, 2, (n + 1) // 2, -beta)
    return table


def _rl_three(n: int, params: Mapping[str, Fraction]) -> ProductTable:
    j = int(params["j"])
    table = _rl_base(n, Fraction(j - 2))
    table.add(1, 2, j)
    for i in range(3, n + 3 - j):
        table.add(i, 2, j + i - 2)
    table.add(X, 2, j - 1, -1)
    return table


# -- validation ----------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParams(message)


def _allowed_indexed(n: int, prefix: str) -> set[str]:
    return {f"{prefix}{k}" for k in range(4, n + 1)}


def _validate(key: str, n: int, params: Mapping[str, Fraction]) -> None:
    allowed = _PARAMETERS[key](n)
    unknown = sorted(set(params) - allowed)
    _require(not unknown, f"{key}: unknown parameters {unknown}")
    _require(n >= _MIN_N[key], f"{key} requires n >= {_MIN_N[key]}, got {n}")
    if key == "F3g":
        alpha = params.get("alpha", Fraction(0))
        allowed_alpha = {Fraction(0), Fraction(1)} if n % 2 == 0 else {Fraction(0)}
        _require(alpha in allowed_alpha, f"F3g({n}) requires alpha in {sorted(map(str, allowed_alpha))}")
    if key == "RL2":
        _require(n % 2 == 1, f"RL2 requires odd n, got {n}")
    if key == "RL3":
        _require("j" in params, "RL3 requires the parameter j")
        j = params["j"]
        _require(j.denominator == 1 and 4 <= j <= n, f"RL3 requires integer 4 <= j <= n, got j={j}")


_BUILDERS: dict[str, Callable[[int, Mapping[str, Fraction]], ProductTable]] = {
    "abelian": _abelian,
    "NF": _null_filiform,
    "RNF": _solvable_null_filiform,
    "F1g": _filiform_one,
    "F2g": _filiform_two,
    "F3g": _filiform_three,
    "F1fam": _filiform_family_one,
    "F2fam": _filiform_family_two,
    "R1": _r_one,
    "R2": _r_two,
    "R3": _r_three,
    "R4": _r_four,
    "R5": _r_five,
    "RL1": _rl_one,
    "RL2": _rl_two,
    "RL3": _rl_three,
}

_MIN_N = {
    "abelian": 0,
    "NF": 1,
    "RNF": 2,
    "F1g": 3,
    "F2g": 3,
    "F3g": 3,
    "F1fam": 4,
    "F2fam": 4,
    "R1": 3,
    "R2": 3,
    "R3": 3,
    "R4": 3,
    "R5": 4,
    "RL1": 3,
    "RL2": 5,
    "RL3": 4,
}

_PARAMETERS: dict[str, Callable[[int], set[str]]] = {
    "abelian": lambda n: set(),
    "NF": lambda n: set(),
    "RNF": lambda n: set(),
    "F1g": lambda n: set(),
    "F2g": lambda n: set(),
    "F3g": lambda n: {"alpha"},
    "F1fam": lambda n: _allowed_indexed(n, "a") | {"theta"},
    "F2fam": lambda n: _allowed_indexed(n, "b") | {"gamma"},
    "R1": lambda n: set(),
    "R2": lambda n: {"alpha"},
    "R3": lambda n: set(),
    "R4": lambda n: set(),
    "R5": lambda n: _allowed_indexed(n, "a"),
    "RL1": lambda n: set(),
    "RL2": lambda n: {"beta"},
    "RL3": lambda n: {"j"},
}

_ENTRIES = (
    CatalogEntry("abelian", "abelian algebra of dimension n", "-", "n >= 0", "zero bracket", False),
    CatalogEntry("NF", "null-filiform NF_n", "-", "n >= 1", "[e_i,e_1]=e_{i+1}", False),
    CatalogEntry("RNF", "solvable with nilradical NF_n", "-", "n >= 2", "[x,e_1]=-e_1, [e_i,x]=i e_i", True),
    CatalogEntry("F1g", "naturally graded filiform F_n^1", "-", "n >= 3", "[e_i,e_1]=e_{i+1}, 2<=i<=n-1", False),
    CatalogEntry("F2g", "naturally graded filiform F_n^2", "-", "n >= 3", "[e_1,e_1]=e_3, [e_i,e_1]=e_{i+1}, 3<=i<=n-1", False),
    CatalogEntry("F3g", "naturally graded filiform F_n^3(alpha)", "alpha", "n >= 3; alpha in {0,1} for even n, alpha=0 for odd n", "[e_i,e_{n+1-i}]=alpha(-1)^{i+1}e_n", False),
    CatalogEntry("F1fam", "filiform family F_1(a4..an, theta)", "a4..an, theta", "n >= 4", "[e_1,e_2]=theta e_n, [e_j,e_2]=sum a_k e_{j+k-2}", False),
    CatalogEntry("F2fam", "filiform family F_2(b4..bn, gamma)", "b4..bn, gamma", "n >= 4", "[e_1,e_2]=sum b_k e_k, [e_2,e_2]=gamma e_n", False),
    CatalogEntry("R1", "solvable R_1 with nilradical F_n^1", "-", "n >= 3", "[x,e_1]=-e_1-e_2, [e_i,x]=(i-1)e_i", True),
    CatalogEntry("R2", "solvable R_2(alpha) with nilradical F_n^1", "alpha", "n >= 3", "[e_i,x]=(i-1+alpha)e_i", True),
    CatalogEntry("R3", "solvable R_3 with nilradical F_n^1", "-", "n >= 3", "[e_i,x]=(i-n)e_i, [x,x]=e_n", True),
    CatalogEntry("R4", "solvable R_4 with nilradical F_n^1", "-", "n >= 3", "[e_1,x]=e_1+e_n, [x,x]=-e_{n-1}", True),
    CatalogEntry("R5", "solvable R_5(a4..an) with nilradical F_n^1", "a4..an", "n >= 4", "[e_1,x]=e_2+sum a_i e_i", True),
    CatalogEntry("RL1", "solvable extension R(L_1)", "-", "n >= 3", "[e_2,e_2]=e_n, [x,e_2]=-(n-1)/2 e_2", True),
    CatalogEntry("RL2", "solvable extension R(L_2^beta)", "beta", "odd n >= 5", "[e_1,e_2]=beta e_{(n+3)/2}", True),
    CatalogEntry("RL3", "solvable extension R(L_3^j)", "j", "n >= 4; 4 <= j <= n", "[x,e_2]=-(j-2)e_2-e_{j-1}", True),
)

_KEYS_BY_LOWER = {entry.key.lower(): entry.key for entry in _ENTRIES}


def list_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(key: str) -> CatalogEntry:
    canonical = _KEYS_BY_LOWER.get(str(key).strip().lower())
    if canonical is None:
        raise BadParams(f"unknown catalog key {key!r}; valid keys: {', '.join(e.key for e in _ENTRIES)}")
    return next(entry for entry in _ENTRIES if entry.key == canonical)


def normalize_params(params: Mapping[str, Any] | None) -> dict[str, Fraction]:
    cleaned: dict[str, Fraction] = {}
    for name, value in (params or {}).items():
        cleaned[str(name).strip()] = as_rational(value)
    return cleaned


def format_name(key: str, n: int, params: Mapping[str, Fraction]) -> str:
    ordered = sorted(params.items(), key=lambda item: _param_sort_key(item[0]))
    parts = [str(n)] + [f"{name}={render_rational(value)}" for name, value in ordered]
    return f"{key}({','.join(parts)})"


def _param_sort_key(name: str) -> tuple:
    match = _INDEXED_RE.match(name)
    if match:
        return (0, match.group(1), int(match.group(2)))
    return (1, name, 0)


def build(key: str, n: int, params: Mapping[str, Any] | None = None) -> Algebra:
    """Construct the catalog algebra KEY at size n."""
    entry = get_entry(key)
    if isinstance(n, bool) or not isinstance(n, int):
        raise BadParams(f"n must be an integer, got {n!r}")
    cleaned = normalize_params(params)
    _validate(entry.key, n, cleaned)
    table = _BUILDERS[entry.key](n, cleaned)
    tensor = table.tensor()
    # e_1..e_n: the nilradical of every solvable family here has dimension n,
    # and for the nilpotent families it is the whole algebra
    nilradical = tuple(range(n))
    meta = {"key": entry.key, "n": n, **{name: value for name, value in cleaned.items()}}
    logger.debug("built %s(%d) dim=%d", entry.key, n, tensor.dim)
    return Algebra(
        name=format_name(entry.key, n, cleaned),
        tensor=tensor,
        basis_labels=_labels(n, entry.solvable),
        nilradical=nilradical,
        params=meta,
    )


def parse_name(text: str) -> tuple[str, int, dict[str, Fraction]]:
    """Parse KEY(n[, name=value ...]), e.g. "R2(5,alpha=1/2)"."""
    match = _NAME_RE.match(str(text))
    if not match:
        raise ParseError(f"bad algebra name {text!r}; expected KEY(n[,param=value...])")
    key = get_entry(match.group(1)).key
    pieces = [piece.strip() for piece in match.group(2).split(",") if piece.strip()]
    if not pieces:
        raise ParseError(f"missing n in {text!r}")
    try:
        n = int(pieces[0])
    except ValueError as exc:
        raise ParseError(f"n must be an integer in {text!r}") from exc
    params: dict[str, Fraction] = {}
    for piece in pieces[1:]:
        if "=" not in piece:
            raise ParseError(f"parameter {piece!r} must look like name=value")
        name, value = (part.strip() for part in piece.split("=", 1))
        params[name] = as_rational(value)
    return key, n, params


def build_from_name(text: str) -> Algebra:
    key, n, params = parse_name(text)
    return build(key, n, params)
