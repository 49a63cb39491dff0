"""Command-line front end: census tables, classification listings, checks.

Four subcommands share one report pipeline:

* ``tables`` renders the census/analysis tables (always recomputed);
* ``classify`` lists every positive tritangent of one curve type;
* ``verify`` runs the acceptance checks and exits nonzero on failure;
* ``act`` applies a translation to a homology class and prints the
  matrix, with ``--mod2`` switching to the mod-2 action.

Reports render as markdown (default), csv, or json; json documents carry
``{title, columns, rows, meta{version, seed}}`` with sorted keys.  Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .homology_action import H1Class, action_matrix, section_delta
from .lattices import (
    KNOWN_FAULTS,
    SexticType,
    SurfaceType,
    UnsupportedTypeError,
    build_lattice,
    set_fault,
)
from .mapping_class import ModSElement, translation_class
from .mod2 import Mod2Vector
from .tables import (
    Report,
    all_tables,
    line_class_table,
    mw_table,
    strata_table,
    tritangent_table,
)
from .translations import H1Mod2Class, mw_act_h1_mod2
from .tritangents import TritangentType, enumerate_tritangents
from .verify import run_all


class UsageError(Exception):
    """Bad command-line input (wrong key, wrong dimension): exit code 2."""


# ---------------------------------------------------------------------------
# rendering


def _md_cell(value: object) -> str:
    return str(value).replace("|", "\\|")


def _render_md(reports: Sequence[Report]) -> str:
    blocks = []
    for report in reports:
        lines = [f"## {report.title}", ""]
        lines.append("| " + " | ".join(_md_cell(c) for c in report.columns) + " |")
        lines.append("| " + " | ".join("---" for _ in report.columns) + " |")
        for row in report.rows:
            lines.append("| " + " | ".join(_md_cell(c) for c in row) + " |")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _render_csv(reports: Sequence[Report]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for i, report in enumerate(reports):
        if i:
            out.write("\n")
        out.write(f"# {report.title}\n")
        writer.writerow(report.columns)
        writer.writerows(report.rows)
    return out.getvalue()


def _report_object(report: Report, meta: dict) -> dict:
    return {
        "title": report.title,
        "columns": list(report.columns),
        "rows": [list(row) for row in report.rows],
        "meta": meta,
    }


def _render_json(reports: Sequence[Report], meta: dict) -> str:
    objects = [_report_object(r, meta) for r in reports]
    payload = objects[0] if len(objects) == 1 else objects
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render(reports: Sequence[Report], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return _render_json(reports, meta)
    if fmt == "csv":
        return _render_csv(reports)
    return _render_md(reports)


# ---------------------------------------------------------------------------
# argument parsing helpers


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    if text.strip() in ("", "-"):
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"{what} must be comma-separated integers: {text!r}") from exc


def _parse_sextic(key: str) -> SexticType:
    try:
        return SexticType.from_key(key)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_surface(key: str) -> SurfaceType:
    try:
        return SurfaceType.from_key(key)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _fmt_set(s: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def _fmt_mods(g: ModSElement) -> str:
    if g.surface.double_klein:
        return f"swap={g.swap} shift={g.shift}"
    if g.surface.handles == 0:
        return f"fiber={g.fiber_twists}"
    return f"half={g.half_twists} fiber={g.fiber_twists} split={g.split_twists}"


def _class_coords(x: H1Class) -> tuple[int, ...]:
    coords = [x.fiber_bit]
    for b, o in x.pairs:
        coords.extend((b, o))
    coords.append(x.line_coeff)
    return tuple(coords)


# ---------------------------------------------------------------------------
# subcommands


_TABLE_BUILDERS = {
    "tritangents": lambda: (tritangent_table(),),
    "lattices": lambda: (strata_table(),),
    "mw": lambda: (mw_table(),),
    "line-classes": lambda: (line_class_table(),),
    "all": all_tables,
}


def cmd_tables(which: str) -> tuple[Sequence[Report], int]:
    return _TABLE_BUILDERS[which](), 0


def cmd_classify(type_key: str) -> tuple[Sequence[Report], int]:
    sextic = _parse_sextic(type_key)
    order = {t: i for i, t in enumerate(TritangentType)}
    listing = sorted(
        enumerate_tritangents(sextic),
        key=lambda t: (order[t.ttype], t.code.serialize() if t.code else "", t.root_pair[0]),
    )
    rows = tuple(
        (
            str(t.root_pair[0]),
            _fmt_set(t.s_in),
            _fmt_set(t.s_tan),
            str(t.ttype),
            t.code.serialize() if t.code else "",
        )
        for t in listing
    )
    report = Report(
        title=f"positive tritangents of type {sextic.key}",
        columns=("root", "inner", "tangent", "type", "code"),
        rows=rows,
    )
    return (report,), 0


def cmd_verify(seed: int) -> tuple[Sequence[Report], int]:
    results = run_all(seed)
    failed = sum(1 for r in results if not r.passed)
    rows = [
        (r.name, "PASS" if r.passed else "FAIL", r.observed, r.expected)
        for r in results
    ]
    rows.append(
        (
            "summary",
            "PASS" if failed == 0 else "FAIL",
            f"{len(results) - failed}/{len(results)} checks passed",
            "all checks pass",
        )
    )
    report = Report(
        title="acceptance checks",
        columns=("check", "status", "observed", "expected"),
        rows=tuple(rows),
    )
    return (report,), (1 if failed else 0)


def cmd_act(
    surface_key: str, vector_text: str, class_text: str, mod2: bool
) -> tuple[Sequence[Report], int]:
    surface = _parse_surface(surface_key)
    lattice = build_lattice(surface.sextic())
    vector = _parse_ints(vector_text, "the translation vector")
    if len(vector) != lattice.rank:
        raise UsageError(
            f"translation vector has {len(vector)} coordinates, "
            f"but the {surface.key} lattice has rank {lattice.rank}"
        )
    coords = _parse_ints(class_text, "the class")
    g = translation_class(lattice, vector)
    rows: list[tuple[str, str]] = [
        ("surface", surface.key),
        ("vector", str(vector)),
        ("translation", _fmt_mods(g)),
    ]

    if mod2:
        if len(coords) != lattice.rank + 2:
            raise UsageError(
                f"a mod-2 class on {surface.key} takes {lattice.rank + 2} coordinates "
                "(fiber bit, one bit per lattice direction, section bit)"
            )
        try:
            x = H1Mod2Class(coords[0], Mod2Vector(coords[1:-1], lattice), coords[-1])
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        y = mw_act_h1_mod2(lattice, vector, x)
        rows.append(("class in", str((x.mu, *x.v_part.bits, x.nu))))
        rows.append(("class out", str((y.mu, *y.v_part.bits, y.nu))))
    else:
        try:
            delta = section_delta(g)
        except UnsupportedTypeError as exc:
            raise UsageError(str(exc)) from exc
        matrix = action_matrix(surface, delta)
        dim = 2 * surface.handles + 2
        if len(coords) != dim:
            raise UsageError(
                f"a homology class on {surface.key} takes {dim} coordinates "
                "(fiber bit, one bridge/oval pair per handle, section coefficient)"
            )
        try:
            x = H1Class(
                coords[0],
                tuple(zip(coords[1:-1:2], coords[2:-1:2])),
                coords[-1],
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        y = matrix.apply(x)
        for i, matrix_row in enumerate(matrix.entries):
            rows.append((f"matrix[{i}]", str(tuple(matrix_row))))
        rows.append(("class in", str(_class_coords(x))))
        rows.append(("class out", str(_class_coords(y))))

    report = Report(
        title=f"translation action on {surface.key}",
        columns=("field", "value"),
        rows=tuple(rows),
    )
    return (report,), 0


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="md")
    common.add_argument("--seed", type=int, default=0, metavar="U64")
    common.add_argument("--out", default=None, metavar="PATH")
    common.add_argument("--fault", choices=KNOWN_FAULTS, default=None)

    parser = argparse.ArgumentParser(
        prog="conelines",
        description="census of real lines and tritangents, and the translation action",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tables = sub.add_parser("tables", parents=[common], help="render census tables")
    p_tables.add_argument("which", choices=tuple(_TABLE_BUILDERS))

    p_classify = sub.add_parser(
        "classify", parents=[common], help="list the positive tritangents of one type"
    )
    p_classify.add_argument("type", help="curve type such as 4|0, 1|1, 0|2, or |||")

    sub.add_parser("verify", parents=[common], help="run all acceptance checks")

    p_act = sub.add_parser(
        "act", parents=[common], help="apply a translation to a homology class"
    )
    p_act.add_argument("surface", help="surface type such as K#2T2, K+S2, or K+K")
    p_act.add_argument("vector", help="comma-separated lattice coordinates")
    p_act.add_argument("klass", metavar="class", help="comma-separated class coordinates")
    p_act.add_argument("--mod2", action="store_true", help="act on mod-2 classes")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in an unsigned 64-bit integer")

    try:
        set_fault(args.fault)
        if args.command == "tables":
            reports, code = cmd_tables(args.which)
        elif args.command == "classify":
            reports, code = cmd_classify(args.type)
        elif args.command == "verify":
            reports, code = cmd_verify(args.seed)
        else:
            reports, code = cmd_act(args.surface, args.vector, args.klass, args.mod2)

        text = render(reports, args.format, {"version": __version__, "seed": args.seed})
        if args.out is None:
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        return code
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_fault(None)


if __name__ == "__main__":
    sys.exit(main())
