import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import pandas as pd

from leibniz_lab.config.settings import get_export_dir, get_results_path
from leibniz_lab.data.expected_values import (
    SCHEMA_VERSION,
    TABLES_ID,
    TABLES_VERSION,
    expected_fingerprint,
)

logger = logging.getLogger(__name__)

ROW_FIELDS = ["quantity", "algebra", "n", "computed", "expected", "status"]
_VALID_FORMATS = {"csv", "json"}


def append_run(
    *,
    rows: list[dict[str, Any]],
    nmin: int,
    nmax: int,
    path: str | Path | None = None,
) -> dict[str, Any]:
    """Append one report run to the JSONL history and return the stored record."""
    payload: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "tables_id": TABLES_ID,
        "tables_version": TABLES_VERSION,
        "expected_fingerprint": expected_fingerprint(),
        "created_at": _utc_now_iso(),
        "range": {"nmin": nmin, "nmax": nmax},
        "rows": rows,
        "summary": summarize(rows),
    }
    target = Path(path) if path is not None else get_results_path()
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("a", encoding="utf-8") as handle:
        handle.write(json.dumps(payload, ensure_ascii=False) + "\n")
    return payload


def read_runs(path: str | Path | None = None) -> list[dict[str, Any]]:
    target = Path(path) if path is not None else get_results_path()
    if not target.exists():
        return []

    runs: list[dict[str, Any]] = []
    with target.open("r", encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            content = line.strip()
            if not content:
                continue
            try:
                data = json.loads(content)
            except json.JSONDecodeError:
                logger.warning("skipping corrupted line %d in %s", number, target)
                continue
            if isinstance(data, dict):
                runs.append(data)
    return runs


def summarize(rows: list[dict[str, Any]]) -> dict[str, Any]:
    total = len(rows)
    by_status: dict[str, int] = {}
    by_quantity: dict[str, dict[str, int]] = {}
    for row in rows:
        status = str(row.get("status", ""))
        by_status[status] = by_status.get(status, 0) + 1
        counts = by_quantity.setdefault(str(row.get("quantity", "")), {})
        counts[status] = counts.get(status, 0) + 1
    passed = by_status.get("pass", 0)
    return {
        "total": total,
        "by_status": by_status,
        "by_quantity": by_quantity,
        "pass_rate": round(passed / total, 4) if total else 0,
    }


def rows_frame(rows: list[dict[str, Any]]) -> pd.DataFrame:
    frame = pd.DataFrame(rows, columns=ROW_FIELDS)
    return frame.fillna("")


def export_rows(rows: list[dict[str, Any]], fmt: str, export_dir: str | Path | None = None) -> str:
    fmt = fmt.strip().lower()
    if fmt not in _VALID_FORMATS:
        raise ValueError(f"unsupported export format {fmt!r}")
    directory = Path(export_dir) if export_dir is not None else get_export_dir()
    directory.mkdir(parents=True, exist_ok=True)
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    path = directory / f"tables_{timestamp}.{fmt}"
    if fmt == "csv":
        rows_frame(rows).to_csv(path, index=False)
    else:
        with path.open("w", encoding="utf-8") as handle:
            json.dump(
                {"expected_fingerprint": expected_fingerprint(), "rows": rows},
                handle,
                indent=2,
                ensure_ascii=False,
            )
    logger.info("exported %d rows to %s", len(rows), path)
    return str(path)


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()
