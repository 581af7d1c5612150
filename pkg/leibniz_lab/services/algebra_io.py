"""
JSON documents for algebras, cochains, degeneration fixtures and reports.

Indices are 1-based in every document. Rationals are strings "p/q" (q
omitted when 1); Laurent scalars are objects {"exponent": "p/q"}.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from leibniz_lab.algebra.cochains import Cochain2
from leibniz_lab.algebra.structure import Algebra, StructureTensor, require_declared_nilradical
from leibniz_lab.catalog import build_from_name
from leibniz_lab.errors import ParseError
from leibniz_lab.linalg import ExactMatrix, LaurentScalar, as_rational, render_rational
from leibniz_lab.services.degeneration import BasisChangeFamily, DegenerationFixture

logger = logging.getLogger(__name__)


def _scalar_to_json(value: Any) -> Any:
    if isinstance(value, LaurentScalar):
        return value.to_json()
    return render_rational(value)


def _scalar_from_json(value: Any) -> Any:
    if isinstance(value, dict):
        return LaurentScalar.from_json(value)
    return as_rational(value)


def _index(entry: dict, key: str, dim: int) -> int:
    value = entry.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= dim:
        raise ParseError(f"index {key}={value!r} outside 1..{dim}")
    return value - 1


def _require_dict(data: Any, what: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    return data


def _dim(data: dict) -> int:
    dim = data.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
        raise ParseError(f"bad dim {dim!r}")
    return dim


def _triples_to_json(entries) -> list[dict[str, Any]]:
    return [
        {"i": i + 1, "j": j + 1, "k": k + 1, "c": _scalar_to_json(value)}
        for i, j, k, value in entries
    ]


def _triples_from_json(items: Any, dim: int) -> dict[tuple[int, int], dict[int, Any]]:
    if not isinstance(items, list):
        raise ParseError("entries must be a list")
    products: dict[tuple[int, int], dict[int, Any]] = {}
    for item in items:
        item = _require_dict(item, "entry")
        i, j, k = (_index(item, key, dim) for key in ("i", "j", "k"))
        if "c" not in item:
            raise ParseError("entry without coefficient 'c'")
        products.setdefault((i, j), {})[k] = _scalar_from_json(item["c"])
    return products


# -- algebras ------------------------------------------------------------------


def algebra_to_json(algebra: Algebra) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "name": algebra.name,
        "dim": algebra.dim,
        "basis": list(algebra.basis_labels),
        "brackets": _triples_to_json(algebra.tensor.nonzero()),
    }
    if algebra.nilradical is not None:
        payload["nilradical"] = [index + 1 for index in algebra.nilradical]
    if algebra.params:
        payload["params"] = {
            key: render_rational(value) if isinstance(value, Fraction) else value
            for key, value in algebra.params.items()
        }
    return payload


def algebra_from_json(data: Any) -> Algebra:
    data = _require_dict(data, "algebra")
    dim = _dim(data)
    labels = data.get("basis") or [f"e{i}" for i in range(1, dim + 1)]
    if not isinstance(labels, list) or len(labels) != dim:
        raise ParseError(f"basis must list {dim} labels")
    tensor = StructureTensor.from_products(dim, _triples_from_json(data.get("brackets", []), dim))
    nilradical = data.get("nilradical")
    if nilradical is not None:
        if not isinstance(nilradical, list):
            raise ParseError("nilradical must be a list of indices")
        nilradical = tuple(_index({"n": value}, "n", dim) for value in nilradical)
    params = data.get("params") or {}
    if not isinstance(params, dict):
        raise ParseError("params must be an object")
    algebra = Algebra(
        name=str(data.get("name") or "algebra"),
        tensor=tensor,
        basis_labels=tuple(str(label) for label in labels),
        nilradical=nilradical,
        params=dict(params),
    )
    require_declared_nilradical(algebra)
    return algebra


# -- cochains ------------------------------------------------------------------


def cochain_to_json(phi: Cochain2) -> dict[str, Any]:
    return {"dim": phi.dim, "entries": _triples_to_json(phi.entries())}


def cochain_from_json(data: Any) -> Cochain2:
    data = _require_dict(data, "cochain")
    dim = _dim(data)
    return Cochain2.from_entries(dim, _triples_from_json(data.get("entries", []), dim))


# -- fixtures ------------------------------------------------------------------


def _matrix_to_json(matrix: ExactMatrix) -> list[list[Any]]:
    return [[_scalar_to_json(value) for value in row] for row in matrix.to_rows()]


def _matrix_from_json(rows: Any, laurent: bool) -> ExactMatrix:
    if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
        raise ParseError("matrix must be a list of rows")
    convert = LaurentScalar.from_json if laurent else as_rational
    return ExactMatrix.from_rows([[convert(value) for value in row] for row in rows])


def _algebra_reference(value: Any) -> Algebra:
    if isinstance(value, str):
        return build_from_name(value)
    return algebra_from_json(value)


def fixture_to_json(fixture: DegenerationFixture) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "name": fixture.name,
        "source": algebra_to_json(fixture.source),
        "target": algebra_to_json(fixture.target),
        "g": _matrix_to_json(fixture.family.g),
        "g_inverse": _matrix_to_json(fixture.family.g_inverse),
    }
    if fixture.post_change is not None:
        g, g_inverse = fixture.post_change
        payload["post_change"] = {"g": _matrix_to_json(g), "g_inverse": _matrix_to_json(g_inverse)}
    return payload


def fixture_from_json(data: Any) -> DegenerationFixture:
    data = _require_dict(data, "fixture")
    for key in ("source", "target", "g", "g_inverse"):
        if key not in data:
            raise ParseError(f"fixture is missing {key!r}")
    source = _algebra_reference(data["source"])
    target = _algebra_reference(data["target"])
    family = BasisChangeFamily(
        source.dim,
        _matrix_from_json(data["g"], laurent=True),
        _matrix_from_json(data["g_inverse"], laurent=True),
    )
    post_change = None
    if data.get("post_change"):
        post = _require_dict(data["post_change"], "post_change")
        post_change = (
            _matrix_from_json(post.get("g"), laurent=False),
            _matrix_from_json(post.get("g_inverse"), laurent=False),
        )
    name = str(data.get("name") or f"{source.name} -> {target.name}")
    return DegenerationFixture(name, source, family, target, post_change)


# -- files ----------------------------------------------------------------------


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def write_json(path: str | Path, data: Any) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    with tempfile.NamedTemporaryFile(
        mode="w",
        encoding="utf-8",
        delete=False,
        dir=target.parent,
    ) as tmp_file:
        tmp_file.write(payload)
        tmp_file.flush()
        os.fsync(tmp_file.fileno())
        temp_name = tmp_file.name
    os.replace(temp_name, target)
    return target


def load_algebra(reference: str) -> Algebra:
    """A catalog name such as "R2(5,alpha=1/2)", or the path of an algebra JSON file."""
    path = Path(reference)
    if reference.lower().endswith(".json") or path.is_file():
        logger.debug("loading algebra from %s", path)
        return algebra_from_json(read_json(path))
    return build_from_name(reference)
