"""Command-line front end: ``rqkernel <command> ...``.

Exit status is 0 on success (or a true verdict), 1 on a false verdict
(not a member, not confluent, identities failing, matrices differing) and 2
on any error.  ``--json`` switches every command to one JSON document on
stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .catalog import CATALOG, get_identity, run_suite
from .errors import KernelError
from .fockcheck import DEFAULT_B, DEFAULT_Q, FockRep, agree_on_block
from .freealg import NcPoly, format_word, lie_bracket, word_runs
from .liepoly import is_lie_polynomial, lie_basis, lie_basis_normal_form
from .parser import parse_poly
from .rewrite import ReductionSystem, check_confluence, enumerate_irreducible, normalize
from .rqalg import presentation

__all__ = ["main", "build_parser", "term_records"]


def term_records(x: NcPoly) -> list[dict]:
    """JSON-ready terms in ascending order: word, run-length exponents, coefficient."""
    return [
        {"word": w, "exponents": [[ch, k] for ch, k in word_runs(w)], "coeff": str(c)}
        for w, c in x.items()
    ]


def _load_system(source: str) -> ReductionSystem:
    if source in ("S", "R"):
        return presentation(source)
    path = Path(source)
    if not path.is_file():
        raise ValueError(f"{source!r} is neither S, R nor a readable rule file")
    return ReductionSystem.from_text(path.read_text(), name=path.stem)


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, indent=2, ensure_ascii=False))
    else:
        print(text)


def _fmt(x: NcPoly, args) -> str:
    return x.format(unicode=args.unicode)


def cmd_normalize(args) -> int:
    sys_ = _load_system(args.system)
    x = parse_poly(args.expr)
    nf = normalize(x, sys_).value
    record = {
        "command": "normalize",
        "system": sys_.name,
        "input": args.expr,
        "result": nf.format(),
        "terms": term_records(nf),
    }
    _emit(args, record, _fmt(nf, args))
    return 0


def cmd_bracket(args) -> int:
    sys_ = _load_system(args.system)
    x, y = parse_poly(args.left), parse_poly(args.right)
    nf = normalize(lie_bracket(x, y), sys_).value
    record = {
        "command": "bracket",
        "system": sys_.name,
        "left": args.left,
        "right": args.right,
        "result": nf.format(),
        "terms": term_records(nf),
    }
    _emit(args, record, _fmt(nf, args))
    return 0


def cmd_confluence(args) -> int:
    sys_ = _load_system(args.system)
    resolutions = check_confluence(sys_)
    kinds = Counter(r.ambiguity.kind for r in resolutions)
    ok = all(resolutions)
    record = {
        "command": "confluence",
        "system": sys_.name,
        "ambiguities": [
            {
                "kind": r.ambiguity.kind,
                "rules": [r.ambiguity.rule_left, r.ambiguity.rule_right],
                "witness": r.ambiguity.witness,
                "decomposition": list(r.ambiguity.decomposition),
                "resolvable": r.resolvable,
                "left_normal_form": r.left_result.value.format(),
                "right_normal_form": r.right_result.value.format(),
            }
            for r in resolutions
        ],
        "overlaps": kinds.get("overlap", 0),
        "inclusions": kinds.get("inclusion", 0),
        "confluent": ok,
    }
    lines = []
    for r in resolutions:
        a = r.ambiguity
        verdict = "resolvable" if r.resolvable else "NOT resolvable"
        lines.append(
            f"{a.kind} {a.rule_left}/{a.rule_right} on {format_word(a.witness, args.unicode)}: {verdict}"
        )
        if not r.resolvable:
            lines.append(f"  left:  {_fmt(r.left_result.value, args)}")
            lines.append(f"  right: {_fmt(r.right_result.value, args)}")
    lines.append(
        f"{len(resolutions)} ambiguities ({record['overlaps']} overlaps, {record['inclusions']} inclusions), "
        + ("all resolvable" if ok else "not all resolvable")
    )
    _emit(args, record, "\n".join(lines))
    return 0 if ok else 1


def cmd_member(args) -> int:
    verdict = is_lie_polynomial(parse_poly(args.expr))
    record = {
        "command": "member",
        "input": args.expr,
        "member": verdict.member,
        "normal_form": verdict.normal_form.value.format(),
        "decomposition": {v.label: str(c) for v, c in verdict.decomposition.items()},
        "residual": term_records(verdict.residual.value),
    }
    if verdict.member:
        parts = [f"{v.label}: {c}" for v, c in verdict.decomposition.items()]
        text = "member\n" + "\n".join(parts) if parts else "member (zero element)"
    else:
        text = f"not a member\nresidual: {_fmt(verdict.residual.value, args)}"
    _emit(args, record, text)
    return 0 if verdict.member else 1


def cmd_suite(args) -> int:
    if args.list:
        record = {
            "command": "suite",
            "catalog": [
                {"name": i.name, "system": i.system, "summary": i.summary, "bounds": dict(i.bounds)}
                for i in CATALOG
            ],
        }
        _emit(args, record, "\n".join(f"{i.name:28s} {i.summary}" for i in CATALOG))
        return 0
    only = [s for chunk in args.only or [] for s in chunk.split(",") if s]
    for name in only:
        get_identity(name)
    results = run_suite(only or None, params_scale=args.params_scale, jobs=args.jobs)
    summary: dict[str, dict] = {}
    for r in results:
        entry = summary.setdefault(
            r.name, {"name": r.name, "checked": 0, "holds": 0, "corrected": 0, "fails": 0, "failures": [], "readings": {}}
        )
        entry["checked"] += 1
        entry[r.status] += 1
        if r.status == "fails":
            entry["failures"].append(r.params)
        for label, ok in r.readings.items():
            counts = entry["readings"].setdefault(label, {"holds": 0, "fails": 0})
            counts["holds" if ok else "fails"] += 1
    ok = all(e["fails"] == 0 for e in summary.values())
    lines = []
    for e in summary.values():
        line = f"{e['name']:28s} {e['checked']:5d} checked  {e['holds']:5d} hold"
        if e["corrected"]:
            line += f"  {e['corrected']} hold only in corrected form"
        if e["fails"]:
            line += f"  {e['fails']} FAIL (first: {e['failures'][0]})"
        for label, counts in e["readings"].items():
            line += f"  [{label}: {counts['holds']} hold, {counts['fails']} fail]"
        lines.append(line)
    total = sum(e["checked"] for e in summary.values())
    lines.append(f"{total} checks, " + ("no failures" if ok else "FAILURES present"))
    record = {"command": "suite", "params_scale": args.params_scale, "identities": list(summary.values()), "ok": ok}
    _emit(args, record, "\n".join(lines))
    return 0 if ok else 1


def cmd_fock(args) -> int:
    rep = FockRep(args.dim, args.q, args.b)
    x, y = parse_poly(args.left), parse_poly(args.right)
    agree = agree_on_block(x, y, rep)
    d = max(x.max_weight(), y.max_weight())
    record = {
        "command": "fock",
        "dim": rep.dim,
        "q": str(rep.q_val),
        "b": str(rep.b_val),
        "columns": [0, rep.dim - 1 - d],
        "agree": agree,
    }
    _emit(args, record, f"{'agree' if agree else 'differ'} on columns 0..{rep.dim - 1 - d}")
    return 0 if agree else 1


def cmd_basis(args) -> int:
    if args.system == "lie":
        vectors = lie_basis(args.weight)
        record = {
            "command": "basis",
            "system": "lie",
            "weight": args.weight,
            "vectors": [
                {
                    "label": v.label,
                    "kind": v.kind,
                    "h": v.h,
                    "n": v.n,
                    "m": v.m,
                    "normal_form": lie_basis_normal_form(v).value.format(),
                    "terms": term_records(lie_basis_normal_form(v).value),
                }
                for v in vectors
            ],
        }
        text = "\n".join(f"{v.label:20s} {_fmt(lie_basis_normal_form(v).value, args)}" for v in vectors)
    else:
        sys_ = _load_system(args.system)
        words = enumerate_irreducible(sys_, args.weight)
        record = {
            "command": "basis",
            "system": sys_.name,
            "weight": args.weight,
            "words": [{"word": w, "exponents": [[c, k] for c, k in word_runs(w)]} for w in words],
        }
        text = "\n".join(format_word(w, args.unicode) for w in words)
    _emit(args, record, text)
    return 0


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--unicode", action="store_true", default=argparse.SUPPRESS, help="print gamma as γ")

    parser = argparse.ArgumentParser(prog="rqkernel", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal form under S or R")
    p.add_argument("--system", default="R", help="S, R or a rule file")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("bracket", parents=[common], help="normal form of [x, y]")
    p.add_argument("--system", default="R", help="S, R or a rule file")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("confluence", parents=[common], help="list and resolve all ambiguities")
    p.add_argument("--system", required=True, help="S, R or a rule file")
    p.set_defaults(func=cmd_confluence)

    p = sub.add_parser("member", parents=[common], help="membership in the Lie subalgebra generated by A, B")
    p.add_argument("expr")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("suite", parents=[common], help="verify the identity catalog")
    p.add_argument("--only", action="append", metavar="IDS", help="comma-separated identity names")
    p.add_argument("--params-scale", type=float, default=1.0, metavar="K", help="scale all default bounds")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--list", action="store_true", help="list the catalog and exit")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("fock", parents=[common], help="compare two elements in the truncated ladder representation")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--q", type=_rational, default=DEFAULT_Q)
    p.add_argument("--b", type=_rational, default=DEFAULT_B)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_fock)

    p = sub.add_parser("basis", parents=[common], help="basis words (S, R) or Lie basis vectors of one weight")
    p.add_argument("--system", required=True, help="S, R, lie or a rule file")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_basis)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.unicode = getattr(args, "unicode", False)
    try:
        return args.func(args)
    except (KernelError, ValueError, OSError) as exc:
        print(f"rqkernel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
