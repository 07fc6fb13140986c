"""Command-line front end.

Subcommands: enumerate-reps, check-free, classify, verify-spin7,
verify-weyl.  All numeric output is exact; rationals are rendered as
"p/q" strings, never floats.  Exit codes: 0 success, 1 usage error,
2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .classify import TableMatchError, classify_su2, classify_su2xsu2, verify_table1
from .freeness import ActionSpec, FreenessVerdict, Witness, descent_analysis, is_effectively_free
from .groups import build_group_model
from .linalg import TorusPoint
from .reps import (
    enumerate_su2_complex,
    enumerate_su2_orthogonal,
    enumerate_su2xsu2_complex,
    enumerate_su2xsu2_orthogonal,
    named_su2_label,
    parse_rep_spec,
    torus_weights,
)
from .verify import run_suite

USAGE_ERROR = 1
MISMATCH_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(USAGE_ERROR)


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _point_json(p: TorusPoint) -> list:
    return [_frac_str(c) for c in p.coords]


def _witness_json(w: Witness) -> dict:
    return {
        "point": _point_json(w.point),
        "order": w.order,
        "weyl": repr(w.weyl),
        "weyl_perm": list(w.weyl.perm),
        "weyl_signs": list(w.weyl.signs),
        "conjugator_count": len(w.conjugators),
        "left_image": _point_json(w.left_image),
        "right_image": _point_json(w.right_image),
    }


def _verdict_json(v: FreenessVerdict) -> dict:
    out = {"status": v.status}
    if w := v.witness:
        out["witness"] = _witness_json(w)
    return out


def _descent_json(d) -> dict:
    out = {
        "deck_in_image": d.deck_in_image,
        "so7_verdict": d.so7_verdict.status,
    }
    if d.deck_in_image:
        out["deck_side"] = d.deck_side
        out["deck_point"] = _point_json(d.deck_point)
    return out


def _document(command: str, inputs: dict, results) -> dict:
    return {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "exact_arithmetic": True,
        "results": results,
    }


def _emit(doc: dict, args, table_renderer) -> None:
    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = table_renderer(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _weights_json(tm) -> list:
    return [list(row) for row in tm.weights.data]


# ---------------------------------------------------------------------------
# enumerate-reps


def _cmd_enumerate(args) -> int:
    group = args.group.upper()
    orthogonal = args.orthogonal or group in ("SO7", "SPIN7")
    dim = 4 if group == "SU4" else 7
    if args.source == "su2":
        reps = enumerate_su2_orthogonal(dim) if orthogonal else enumerate_su2_complex(dim)
        entries = []
        for rep in reps:
            entry = {
                "label": rep.label(),
                "name": named_su2_label(rep) if group != "SU4" else None,
                "dimension": rep.dim,
                "orthogonal": rep.is_orthogonal(),
                "trivial": rep.is_trivial(),
            }
            if not rep.is_trivial():
                entry["weights"] = _weights_json(torus_weights(rep, group))
            entries.append(entry)
    else:
        enum = enumerate_su2xsu2_orthogonal if orthogonal else enumerate_su2xsu2_complex
        reps = enum(dim, finite_kernel_only=args.finite_kernel)
        entries = []
        for rep in reps:
            entry = {
                "label": rep.label(),
                "dimension": rep.dim,
                "orthogonal": rep.is_orthogonal(),
                "finite_kernel": rep.has_finite_kernel(),
                "trivial": rep.is_trivial(),
            }
            if not rep.is_trivial():
                entry["weights"] = _weights_json(torus_weights(rep, group))
            entries.append(entry)
    results = {"group": group, "source": args.source, "reps": entries}
    doc = _document(
        "enumerate-reps",
        {
            "group": group,
            "source": args.source,
            "orthogonal": orthogonal,
            "finite_kernel": bool(args.finite_kernel),
        },
        results,
    )

    def render(doc) -> str:
        lines = [f"{len(entries)} representations into {group}:"]
        for e in entries:
            name = f" [{e['name']}]" if e.get("name") else ""
            w = f"  weights {e['weights']}" if "weights" in e else "  (trivial)"
            lines.append(f"  {e['label']}{name}{w}")
        return "\n".join(lines) + "\n"

    _emit(doc, args, render)
    return 0


# ---------------------------------------------------------------------------
# check-free


def _build_maps(parser, group: str, left_text: str, right_text: str):
    try:
        lkind, left = parse_rep_spec(left_text)
        rkind, right = parse_rep_spec(right_text)
    except ValueError as ex:
        parser.error(str(ex))
    if lkind != rkind:
        parser.error(
            f"left spec is {lkind} but right spec is {rkind}; both sides must "
            "use the same source group"
        )
    try:
        if lkind == "su2":
            lmap = torus_weights(left, group)
            rmap = torus_weights(right, group)
        else:
            lmap = left.torus_map(group)
            rmap = right.torus_map(group)
    except ValueError as ex:
        parser.error(str(ex))
    return lkind, lmap, rmap


def _cmd_check_free(parser, args) -> int:
    group = args.group.upper()
    model = build_group_model(group)
    source, lmap, rmap = _build_maps(parser, group, args.left, args.right)
    spec = ActionSpec(model, lmap, rmap)
    verdict = is_effectively_free(spec)
    results = {
        "group": group,
        "source": source,
        "left": args.left,
        "right": args.right,
        "verdict": _verdict_json(verdict),
    }
    if group == "SPIN7" and source == "su2xsu2" and verdict.free:
        results["descent"] = _descent_json(descent_analysis(spec))
    doc = _document("check-free", {"group": group, "left": args.left, "right": args.right}, results)

    def render(doc) -> str:
        lines = [f"({args.left}, {args.right}) on {group}: {verdict.status}"]
        if verdict.witness:
            w = verdict.witness
            lines.append(
                f"  witness t = {w.point} of order {w.order}; {w.weyl} maps "
                f"left image {w.left_image} to right image {w.right_image}"
            )
        if "descent" in results:
            d = results["descent"]
            deck = d.get("deck_side", "none")
            lines.append(
                f"  descent: deck point {deck}; SO(7) verdict {d['so7_verdict']}"
            )
        return "\n".join(lines) + "\n"

    _emit(doc, args, render)
    return 0


# ---------------------------------------------------------------------------
# classify


def _cmd_classify(args) -> int:
    group = args.group.upper()
    report = classify_su2(group) if args.source == "su2" else classify_su2xsu2(group)
    pairs_json = []
    for p in report.pairs:
        if not args.audit and p.bucket != "free_inhomogeneous":
            continue
        entry = {
            "left": p.left_label,
            "right": p.right_label,
            "verdict": p.verdict.status,
            "bucket": p.bucket,
        }
        if args.audit and p.verdict.witness:
            entry["witness"] = _witness_json(p.verdict.witness)
        if p.prune and p.prune.pruned:
            entry["pruned_by"] = p.prune.reason
        if p.descent:
            entry["descent"] = _descent_json(p.descent)
        pairs_json.append(entry)
    results = {
        "group": report.group,
        "source": report.source,
        "pairs": pairs_json,
        "counts": report.counts,
    }
    doc = _document(
        "classify",
        {"group": group, "source": args.source, "audit": bool(args.audit)},
        results,
    )

    def render(doc) -> str:
        c = report.counts
        lines = [
            f"{group} actions of {'SU(2)' if args.source == 'su2' else 'SU(2)^2'}:",
            f"  free inhomogeneous: {c['free_inhomogeneous']}   not free: {c['not_free']}"
            f"   homogeneous: {c['homogeneous']}   rank-1 equivalent: {c['rank1_equivalent']}",
        ]
        for e in pairs_json:
            mark = {"free_inhomogeneous": "FREE", "not_free": "not free"}.get(
                e["bucket"], e["bucket"]
            )
            extra = ""
            if "descent" in e:
                d = e["descent"]
                extra = f"  deck={d.get('deck_side', 'none')} so7={d['so7_verdict']}"
            if "witness" in e:
                extra += f"  witness {e['witness']['point']} order {e['witness']['order']}"
            lines.append(f"  ({e['left']}, {e['right']}): {mark}{extra}")
        return "\n".join(lines) + "\n"

    _emit(doc, args, render)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _cmd_verify(args, suite: str) -> int:
    checks = run_suite(suite)
    if suite == "weyl":
        for group in ("SO7", "SU4"):
            try:
                verify_table1(classify_su2xsu2(group))
                checks.append((f"{group} free actions match expected table", True, ""))
            except TableMatchError as ex:
                checks.append((f"{group} free actions match expected table", False, str(ex)))
    results = {
        "suite": suite,
        "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks],
        "passed": all(ok for _, ok, _ in checks),
    }
    doc = _document(f"verify-{suite}", {}, results)

    def render(doc) -> str:
        lines = []
        for n, ok, d in checks:
            lines.append(f"  [{'ok' if ok else 'FAIL'}] {n}" + (f": {d}" if not ok and d else ""))
        lines.append("all checks passed" if results["passed"] else "MISMATCH DETECTED")
        return "\n".join(lines) + "\n"

    _emit(doc, args, render)
    return 0 if results["passed"] else MISMATCH_ERROR


# ---------------------------------------------------------------------------


def _make_parser() -> _Parser:
    parser = _Parser(prog="biquot", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("enumerate-reps", help="list homomorphisms up to equivalence")
    p.add_argument("--group", choices=("su4", "so7", "spin7"), required=True)
    p.add_argument("--source", choices=("su2", "su2xsu2"), required=True)
    p.add_argument("--orthogonal", action="store_true")
    p.add_argument("--finite-kernel", action="store_true", dest="finite_kernel")
    add_common(p)

    p = sub.add_parser("check-free", help="decide effective freeness of one pair")
    p.add_argument("--group", choices=("su4", "so7", "spin7"), required=True)
    p.add_argument("--left", required=True, metavar="SPEC")
    p.add_argument("--right", required=True, metavar="SPEC")
    add_common(p)

    p = sub.add_parser("classify", help="classify all candidate pairs")
    p.add_argument("--group", choices=("su4", "so7", "spin7"), required=True)
    p.add_argument("--source", choices=("su2", "su2xsu2"), required=True)
    p.add_argument("--audit", action="store_true")
    add_common(p)

    p = sub.add_parser("verify-spin7", help="verify the octonion rotation model")
    add_common(p)

    p = sub.add_parser("verify-weyl", help="verify the Weyl-group machinery")
    add_common(p)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate-reps":
        return _cmd_enumerate(args)
    if args.command == "check-free":
        return _cmd_check_free(parser, args)
    if args.command == "classify":
        return _cmd_classify(args)
    if args.command == "verify-spin7":
        return _cmd_verify(args, "spin7")
    if args.command == "verify-weyl":
        return _cmd_verify(args, "weyl")
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
