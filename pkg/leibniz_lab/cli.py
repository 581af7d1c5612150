"""
Command-line front end: python -m leibniz_lab VERB ...

Exit status 0 on success, 1 on a computation-level error (or a failed
check), 2 on a usage error. Human-readable tables by default, --json for
the documented JSON schemas.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

import pandas as pd

from leibniz_lab.algebra.structure import (
    Algebra,
    derived_dims,
    is_nilpotent,
    is_solvable,
    leibniz_defects,
    lower_central_dims,
    verify_nilpotent_ideal,
)
from leibniz_lab.catalog import available_representatives, list_entries, list_representatives, representative_cocycle
from leibniz_lab.config.settings import get_log_level
from leibniz_lab.errors import BadParams, LeibnizError, ParseError
from leibniz_lab.linalg import render_rational
from leibniz_lab.services import algebra_io, report, results_store
from leibniz_lab.services.cohomology import classes_independent, cohomology_summary, derivation_space
from leibniz_lab.services.degeneration import builtin_fixtures, run_fixture
from leibniz_lab.services.invariants import c11_exact, cij_sampled, degeneration_report, orbit_dim

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

NAME_GRAMMAR = 'KEY(n[,param=value...]), e.g. "R2(5,alpha=1/2)", "R5(6,a4=1)", "RL3(6,j=4)", or an algebra JSON file'


class _Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, payload: Any, text: str) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
        else:
            print(text)


def _frame_text(rows: list[dict[str, Any]], columns: Sequence[str] | None = None) -> str:
    if not rows:
        return "(none)"
    frame = pd.DataFrame(rows, columns=list(columns) if columns else None)
    return frame.to_string(index=False)


def _label(algebra: Algebra, index: int) -> str:
    return algebra.basis_labels[index]


def _vector_text(algebra: Algebra, coefficients: dict[int, Any]) -> str:
    parts = []
    for k, value in sorted(coefficients.items()):
        rendered = str(value)
        if rendered == "1":
            parts.append(_label(algebra, k))
        elif rendered == "-1":
            parts.append(f"-{_label(algebra, k)}")
        else:
            parts.append(f"{rendered}*{_label(algebra, k)}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


# -- verbs ---------------------------------------------------------------------


def _cmd_catalog(args: argparse.Namespace, out: _Output) -> int:
    entries = [
        {
            "key": entry.key,
            "title": entry.title,
            "params": entry.params,
            "validity": entry.validity,
            "solvable": entry.solvable,
        }
        for entry in list_entries()
    ]
    out.emit(entries, _frame_text(entries) + f"\n\nname grammar: {NAME_GRAMMAR}")
    return EXIT_OK


def _cmd_show(args: argparse.Namespace, out: _Output) -> int:
    algebra = algebra_io.load_algebra(args.algebra)
    rows = [
        {"product": f"[{_label(algebra, i)},{_label(algebra, j)}]", "value": _vector_text(algebra, image)}
        for (i, j), image in sorted(algebra.tensor.table.items())
    ]
    text = f"{algebra.name} (dim {algebra.dim})\n" + _frame_text(rows)
    out.emit(algebra_io.algebra_to_json(algebra), text)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace, out: _Output) -> int:
    algebra = algebra_io.load_algebra(args.algebra)
    defects = leibniz_defects(algebra.tensor)
    payload: dict[str, Any] = {
        "name": algebra.name,
        "leibniz": not defects,
        "defects": [
            {"i": i + 1, "j": j + 1, "k": k + 1, "value": [render_rational(v) for v in vector]}
            for i, j, k, vector in defects
        ],
    }
    lines = [f"{algebra.name}: {'Leibniz' if not defects else f'{len(defects)} defective triples'}"]
    for record in payload["defects"][:20]:
        lines.append(f"  ({record['i']},{record['j']},{record['k']}): {record['value']}")
    if not defects:
        payload["lower_central"] = lower_central_dims(algebra.tensor)
        payload["derived"] = derived_dims(algebra.tensor)
        payload["nilpotent"] = is_nilpotent(algebra.tensor)
        payload["solvable"] = is_solvable(algebra.tensor)
        lines += [
            f"  lower central dims: {payload['lower_central']}",
            f"  derived dims: {payload['derived']}",
            f"  nilpotent: {payload['nilpotent']}, solvable: {payload['solvable']}",
        ]
        if algebra.nilradical is not None:
            payload["nilradical_verified"] = verify_nilpotent_ideal(algebra.tensor, algebra.nilradical)
            lines.append(f"  declared nilradical is a nilpotent ideal: {payload['nilradical_verified']}")
    out.emit(payload, "\n".join(lines))
    return EXIT_OK if not defects else EXIT_FAILURE


def _cmd_der(args: argparse.Namespace, out: _Output) -> int:
    algebra = algebra_io.load_algebra(args.algebra)
    basis = derivation_space(algebra.tensor)
    matrices = [[[render_rational(v) for v in row] for row in matrix.to_rows()] for matrix in basis]
    lines = [f"dim Der({algebra.name}) = {len(basis)}", f"orbit dimension = {orbit_dim(algebra.tensor)}"]
    for number, matrix in enumerate(matrices, start=1):
        frame = pd.DataFrame(matrix, index=algebra.basis_labels, columns=algebra.basis_labels)
        lines.append(f"\nd_{number}:\n{frame.to_string()}")
    out.emit({"name": algebra.name, "dim": len(basis), "basis": matrices}, "\n".join(lines))
    return EXIT_OK


def _representative_status(algebra: Algebra) -> dict[str, Any] | None:
    key = algebra.params.get("key")
    n = algebra.params.get("n")
    if key is None or n is None:
        return None
    params = {name: value for name, value in algebra.params.items() if name not in {"key", "n"}}
    if not available_representatives(key, n):
        return None
    try:
        names = list_representatives(key, n, params)
    except LeibnizError as exc:
        return {"listed": None, "reason": exc.message}
    reps = [representative_cocycle(key, n, name, params) for name in names]
    return {"listed": names, "independent": classes_independent(algebra.tensor, reps)}


def _cmd_cohomology(args: argparse.Namespace, out: _Output) -> int:
    algebra = algebra_io.load_algebra(args.algebra)
    summary = cohomology_summary(algebra.tensor)
    payload: dict[str, Any] = {"name": algebra.name, **summary.as_dict()}
    lines = [
        f"{algebra.name}",
        f"  dim Der  = {summary.der}",
        f"  dim ZL^2 = {summary.zl2}",
        f"  dim BL^2 = {summary.bl2}",
        f"  dim HL^2 = {summary.hl2}",
    ]
    status = _representative_status(algebra)
    if status is not None:
        payload["representatives"] = status
        if status.get("listed") is None:
            lines.append(f"  representatives: {status['reason']}")
        else:
            lines.append(
                f"  representatives {status['listed']}: "
                f"{'independent' if status['independent'] else 'dependent'} mod BL^2"
            )
    out.emit(payload, "\n".join(lines))
    return EXIT_OK


def _cmd_invariant(args: argparse.Namespace, out: _Output) -> int:
    algebra = algebra_io.load_algebra(args.algebra)
    if args.kind == "c11":
        value = c11_exact(algebra.tensor)
        label = "c11"
    else:
        value = cij_sampled(algebra.tensor, args.i, args.j, args.samples)
        label = f"c{args.i},{args.j}"
    payload = {
        "name": algebra.name,
        "invariant": label,
        "defined": value.defined,
        "value": str(value.value) if value.defined else None,
        "reason": value.reason,
        "not_invariant": value.not_invariant,
    }
    out.emit(payload, value.render())
    return EXIT_OK


def _cmd_degenerate(args: argparse.Namespace, out: _Output) -> int:
    if args.builtin:
        if args.n is None:
            raise BadParams("--builtin needs --n N")
        fixtures = builtin_fixtures(args.n)
    elif args.fixture:
        fixtures = [algebra_io.fixture_from_json(algebra_io.read_json(args.fixture))]
    else:
        raise BadParams("give --builtin --n N or a fixture file")
    verdicts = [run_fixture(fixture) for fixture in fixtures]
    rows = [{"fixture": v.name, "status": v.status, "consistent": v.consistent} for v in verdicts]
    out.emit([verdict.as_dict() for verdict in verdicts], "\n".join(f"{v.name}: {v.status}" for v in verdicts))
    return EXIT_OK if all(row["consistent"] for row in rows) else EXIT_FAILURE


def _cmd_compare(args: argparse.Namespace, out: _Output) -> int:
    source = algebra_io.load_algebra(args.source)
    target = algebra_io.load_algebra(args.target)
    result = degeneration_report(source, target)
    payload = result.as_dict()
    rows = [
        {"condition": c["condition"], "status": c["status"], "source": c["lhs"], "target": c["rhs"]}
        for c in payload["conditions"]
    ]
    verdict = result.verdict if not result.failures else f"{result.verdict} ({', '.join(result.failures)})"
    out.emit(payload, f"{source.name} -> {target.name}: {verdict}\n" + _frame_text(rows))
    return EXIT_OK


def _cmd_report(args: argparse.Namespace, out: _Output) -> int:
    if args.nmin < 3 or args.nmax < args.nmin:
        raise BadParams(f"need 3 <= nmin <= nmax, got {args.nmin}..{args.nmax}")
    rows = report.build_rows(args.nmin, args.nmax)
    failures = report.failed_rows(rows)
    if args.out is not None:
        path = Path(args.out) if args.out else None
        results_store.append_run(rows=rows, nmin=args.nmin, nmax=args.nmax, path=path)
    export_path = results_store.export_rows(rows, args.export) if args.export else None
    summary = results_store.summarize(rows)
    text = _frame_text(rows, results_store.ROW_FIELDS)
    text += f"\n\n{summary['total']} rows, {len(failures)} failed"
    if export_path:
        text += f"\nexported to {export_path}"
    out.emit({"rows": rows, "summary": summary, "export": export_path}, text)
    return EXIT_OK if not failures else EXIT_FAILURE


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibniz_lab",
        description="Exact computations on Leibniz algebras.",
        epilog=f"algebra names: {NAME_GRAMMAR}",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of tables")
    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    verbs.add_parser("catalog", parents=[common], help="list catalog families")
    for verb, help_text in (
        ("show", "print the bracket table"),
        ("check", "check the Leibniz identity and series"),
        ("der", "derivation algebra"),
        ("cohomology", "dimensions of Der, ZL^2, BL^2, HL^2"),
    ):
        sub = verbs.add_parser(verb, parents=[common], help=help_text)
        sub.add_argument("algebra", help=NAME_GRAMMAR)

    invariant = verbs.add_parser("invariant", parents=[common], help="trace invariants")
    invariant.add_argument("kind", choices=["c11", "cij"])
    invariant.add_argument("algebra")
    invariant.add_argument("--i", type=int, default=1)
    invariant.add_argument("--j", type=int, default=1)
    invariant.add_argument("--samples", type=int, default=12)

    degenerate = verbs.add_parser("degenerate", parents=[common], help="verify degeneration fixtures")
    degenerate.add_argument("fixture", nargs="?", help="fixture JSON file")
    degenerate.add_argument("--builtin", action="store_true")
    degenerate.add_argument("--n", type=int)

    compare = verbs.add_parser("compare", parents=[common], help="necessary conditions for SRC -> TGT")
    compare.add_argument("source")
    compare.add_argument("target")

    tables = verbs.add_parser("report", parents=[common], help="regenerate the numeric tables")
    # "tables" is kept as an alias of "paper"
    tables.add_argument("which", choices=["paper", "tables"])
    tables.add_argument("--nmin", type=int, default=4)
    tables.add_argument("--nmax", type=int, default=5)
    tables.add_argument("--out", nargs="?", const="", default=None, help="append the run to a JSONL history")
    tables.add_argument("--export", choices=["csv", "json"])
    return parser


_HANDLERS = {
    "catalog": _cmd_catalog,
    "show": _cmd_show,
    "check": _cmd_check,
    "der": _cmd_der,
    "cohomology": _cmd_cohomology,
    "invariant": _cmd_invariant,
    "degenerate": _cmd_degenerate,
    "compare": _cmd_compare,
    "report": _cmd_report,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    out = _Output(getattr(args, "json", False))
    try:
        return _HANDLERS[args.verb](args, out)
    except (ParseError, BadParams) as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc.filename}: file not found", file=sys.stderr)
        return EXIT_USAGE
    except LeibnizError as exc:
        print(f"error: {type(exc).__name__}: {exc.message}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> int:
    logging.basicConfig(level=get_log_level(), format="%(levelname)s %(name)s: %(message)s")
    return run(sys.argv[1:])
