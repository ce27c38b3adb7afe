"""Command line front end: enumerate, verify, show, export.

All output is deterministic, so the rendered tables can be compared
byte-for-byte against golden files.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .catalog import builtin_catalog, construction_models, export, lookup
from .chow import Fe, P1xP1
from .enumeration import (
    enumerate_highdim,
    enumerate_p2_bundles,
    enumerate_point_blowups,
    enumerate_quadric_fibrations,
    enumerate_rho3,
)
from .verify import (
    REPORT_NAMES,
    verify_all,
    verify_constructions,
    verify_enumeration_matches_catalog,
    verify_families,
    verify_flops,
    verify_smoothings,
)

_INT = re.compile(r"^-?\d+$")


def _render_table(headers, rows, indent="  "):
    cells = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    numeric = [
        all(_INT.match(row[i]) for row in cells[1:]) and len(cells) > 1
        for i in range(len(headers))
    ]

    def fmt(row):
        parts = [
            s.rjust(w) if num else s.ljust(w)
            for s, w, num in zip(row, widths, numeric)
        ]
        return (indent + "  ".join(parts)).rstrip()

    lines = [fmt(cells[0]), indent + "  ".join("-" * w for w in widths)]
    lines.extend(fmt(row) for row in cells[1:])
    return lines


def _exclusion_lines(exclusions, indent="  "):
    lines = []
    for e in exclusions:
        data = " ".join(str(x) for x in e.data)
        line = f"{indent}{e.kind} {data}: {e.reason}"
        if e.computed:
            nums = "; ".join(f"{k} = {v}" for k, v in e.computed)
            line += f" [{nums}]"
        lines.append(line)
    return lines


def _partner_label(family_id):
    r = lookup(family_id)
    if r is None or r.flop_partner is None:
        return "-"
    return "self" if r.flop_partner == family_id else r.flop_partner


def _candidate_dict(c):
    return {
        "kind": c.kind,
        "dim": c.dim,
        "degree": c.degree,
        "picard": c.picard,
        "data": list(c.data),
        "family": c.family,
        "notes": list(c.notes),
        "spanned": c.spanned,
    }


def _exclusion_dict(e):
    return {
        "kind": e.kind,
        "data": list(e.data),
        "reason": e.reason,
        "computed": [[k, v] for k, v in e.computed],
    }


def _result_json(result):
    return json.dumps(
        {
            "candidates": [_candidate_dict(c) for c in result.candidates],
            "exclusions": [_exclusion_dict(e) for e in result.exclusions],
        },
        indent=2,
    )


def _quadric_lines():
    table = enumerate_quadric_fibrations()
    lines = [
        "quadric fibrations over P1: X in |O(2) + alpha F| on the split "
        "tower P(O(a1) + O(a2) + O(a3) + O(a4))",
        "",
        "families with small anticanonical map:",
        "",
    ]
    smalls = sorted(
        (v for v in table if v.verdict == "Small"), key=lambda v: v.family
    )
    rows = [
        [v.family, *v.bundle.a, v.alpha, v.degree, _partner_label(v.family)]
        for v in smalls
    ]
    lines.extend(
        _render_table(
            ["family", "a1", "a2", "a3", "a4", "alpha", "d", "partner"], rows
        )
    )
    lines.extend(["", "divisorial anticanonical map:", ""])
    rows = [
        [*v.bundle.a, v.alpha, v.degree, "inferred" if v.inferred else "stated", v.reason]
        for v in table
        if v.verdict == "Divisorial"
    ]
    lines.extend(
        _render_table(
            ["a1", "a2", "a3", "a4", "alpha", "d", "origin", "reason"], rows
        )
    )
    lines.extend(["", "rejected split types:", ""])
    rows = [
        [*v.bundle.a, v.verdict, v.reason]
        for v in table
        if v.verdict.startswith("Rejected")
    ]
    lines.extend(
        _render_table(["a1", "a2", "a3", "a4", "verdict", "reason"], rows)
    )
    return lines


def _quadric_json():
    table = enumerate_quadric_fibrations()
    return json.dumps(
        [
            {
                "a": list(v.bundle.a),
                "alpha": v.alpha,
                "degree": v.degree,
                "verdict": v.verdict,
                "family": v.family,
                "reason": v.reason,
                "inferred": v.inferred,
            }
            for v in table
        ],
        indent=2,
    )


def _p2bundle_lines(result):
    lines = [
        "rank-2 bundles F on P2 with c1 = -1: candidates P(F) with small "
        "anticanonical map",
        "",
    ]
    rows = [
        [c.data[0], c.degree + 2, c.degree, c.family, _partner_label(c.family)]
        for c in result.candidates
    ]
    lines.extend(_render_table(["c2", "chi(F(2))", "d", "family", "partner"], rows))
    if result.exclusions:
        lines.extend(["", "excluded:"])
        lines.extend(_exclusion_lines(result.exclusions))
    return lines


def _blowup_lines(result):
    lines = ["point blow-ups of rank-1 del Pezzo threefolds:", ""]
    rows = [
        [c.degree, c.data[0], c.family, _partner_label(c.family)]
        for c in result.candidates
    ]
    lines.extend(_render_table(["d", "target", "family", "partner"], rows))
    if result.exclusions:
        lines.extend(["", "excluded:"])
        lines.extend(_exclusion_lines(result.exclusions))
    return lines


def _rho3_lines(result, surface_name):
    lines = [
        f"rank-2 bundles F on {surface_name} with c1 = -K: candidates P(F) "
        "at Picard number 3",
        "",
    ]
    rows = [
        [
            c.data[1],
            c.degree,
            c.family,
            "Divisorial" if c.data[1] == 0 else "Small",
            "; ".join(c.notes),
        ]
        for c in result.candidates
    ]
    lines.extend(_render_table(["c2", "d", "family", "psi", "notes"], rows))
    if result.exclusions:
        lines.extend(["", "excluded:"])
        lines.extend(_exclusion_lines(result.exclusions))
    return lines


def _highdim_lines(result, n):
    lines = [f"candidates in dimension {n}:", ""]
    pn = [c for c in result.candidates if c.kind == "pn-bundle"]
    lines.append(f"P^{n - 2}-bundles over a surface (rank-2 model extended "
                 f"by O^{n - 3}):")
    lines.append("")
    rows = [[c.data[3], c.data[1], c.data[2], c.degree, c.picard] for c in pn]
    lines.extend(_render_table(["source", "surface", "c2", "d", "picard"], rows))
    qb = [c for c in result.candidates if c.kind == "quadric-bundle-highdim"]
    if qb:
        lines.extend(["", "quadric bundles over P1:", ""])
        rows = [
            [c.family, c.degree, c.picard, "; ".join(c.notes)] for c in qb
        ]
        lines.extend(_render_table(["family", "d", "picard", "notes"], rows))
    chains = [c for c in result.candidates if c.kind == "point-blowup-chain"]
    longest = max((c.data[2] for c in chains), default=0)
    lines.append("")
    lines.append(
        f"point blow-up chains: {len(chains)} further candidates (up to "
        f"{longest} successive general-point blow-ups)"
    )
    if result.exclusions:
        lines.extend(["", "excluded:"])
        lines.extend(_exclusion_lines(result.exclusions))
    return lines


def _cmd_enumerate(args):
    if args.case == "quadric":
        if args.format == "json":
            _emit(_quadric_json())
        else:
            _emit("\n".join(_quadric_lines()))
        return 0
    if args.case == "p2bundle":
        result = enumerate_p2_bundles()
        text = _result_json(result) if args.format == "json" else "\n".join(
            _p2bundle_lines(result)
        )
        _emit(text)
        return 0
    if args.case == "blowup":
        result = enumerate_point_blowups()
        text = _result_json(result) if args.format == "json" else "\n".join(
            _blowup_lines(result)
        )
        _emit(text)
        return 0
    if args.case == "rho3":
        surface = P1xP1() if args.surface == "p1p1" else Fe(2)
        name = "P1 x P1" if args.surface == "p1p1" else "F2"
        result = enumerate_rho3(surface)
        text = _result_json(result) if args.format == "json" else "\n".join(
            _rho3_lines(result, name)
        )
        _emit(text)
        return 0
    result = enumerate_highdim(args.dim)
    text = _result_json(result) if args.format == "json" else "\n".join(
        _highdim_lines(result, args.dim)
    )
    _emit(text)
    return 0


_REPORT_FUNCS = {
    "families": verify_families,
    "flops": verify_flops,
    "smoothings": verify_smoothings,
    "constructions": verify_constructions,
    "enumeration": verify_enumeration_matches_catalog,
}


def _cmd_verify(args):
    if args.only is None:
        reports = verify_all()
    else:
        reports = [_REPORT_FUNCS[args.only]()]
    lines = []
    failed = 0
    for rep in reports:
        lines.append(
            f"report {rep.title}: pass {rep.passed}  fail {rep.failed}  "
            f"skipped {rep.skipped}"
        )
        for c in rep.checks:
            if c.status == "fail":
                failed += 1
                lines.append(
                    f"  FAIL {c.name} [{c.subject}]: expected {c.expected}, "
                    f"computed {c.computed}"
                )
            elif c.status == "skipped" and args.only is not None:
                lines.append(f"  skip {c.name} [{c.subject}]: {c.reason}")
    lines.append("all checks pass" if failed == 0 else f"{failed} checks FAILED")
    _emit("\n".join(lines))
    return 0 if failed == 0 else 1


def _model_label(m):
    if not m.data:
        return m.kind
    return f"{m.kind}({', '.join(str(x) for x in m.data)})"


def _cmd_show(args):
    r = lookup(args.id)
    if r is None:
        sys.stderr.write(f"no family with id {args.id!r}\n")
        return 2
    models = construction_models(r.id)
    fields = [
        ("id", r.id),
        ("dim", r.dim),
        ("degree", r.degree),
        ("picard", r.picard),
        ("index", r.index),
        ("contraction", r.contraction),
        ("anticanonical map", r.anticanonical_map),
        ("flop partner", r.flop_partner or "-"),
        ("smoothing", r.smoothing or "-"),
        ("citation", r.citation),
        ("notes", r.notes),
        ("models", " + ".join(_model_label(m) for m in models) or "-"),
    ]
    width = max(len(k) for k, _ in fields) + 1
    _emit("\n".join(f"{(k + ':').ljust(width)}  {v}" for k, v in fields))
    return 0


def _cmd_export(args):
    data = export(args.format)
    if args.out is None:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return 0
    with open(args.out, "wb") as fh:
        fh.write(data)
    _emit(f"wrote {args.out} ({len(data)} bytes)")
    return 0


def _emit(text):
    sys.stdout.write(text + "\n")
    sys.stdout.flush()


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="delpezzo",
        description=(
            "enumerate, cross-check, and export the classification of "
            "almost del Pezzo manifolds"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="run one of the classification searches")
    p.add_argument(
        "--case",
        required=True,
        choices=["quadric", "p2bundle", "blowup", "rho3", "highdim"],
    )
    p.add_argument("--dim", type=int, default=4, help="dimension for highdim")
    p.add_argument(
        "--surface", choices=["p1p1", "f2"], default="p1p1", help="base for rho3"
    )
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="recompute invariants and cross-check")
    p.add_argument("--only", choices=list(REPORT_NAMES), default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("show", help="print one catalog record")
    p.add_argument("id")
    p.set_defaults(func=_cmd_show)

    p = sub.add_parser("export", help="dump the catalog")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_export)
    return parser


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
