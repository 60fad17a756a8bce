"""``ringlab`` verbs: classify, decompose, subsets, verify, catalog.

Exit codes: 0 success, 1 a verified check failed, 2 bad input (parse
error, size cap, unknown check id, malformed element).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .. import config
from ..classifiers import DECOMPOSERS, SWC, classify
from ..core.axioms import verify_axioms
from ..core.ring import FiniteRing
from ..errors import InvalidStructureError, RingError, SizeCapError, UnknownCheckError
from ..expressions import Builder, ParseError, element, parse, predicted_size
from ..subsets import center, idempotents, jacobson_radical, nil_set, units

SCHEMA_VERSION = 1
PRINT_CAP = 64

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(doc: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2)


def _builder(args) -> Builder:
    return Builder(args.max_size)


def _axioms(R: FiniteRing, seed: int) -> dict:
    rep = verify_axioms(R, seed=seed)
    out = {"ok": rep.ok, "mode": rep.mode}
    if rep.violation is not None:
        out["violation"] = rep.violation.law
    return out


def cmd_classify(args) -> tuple[int, str]:
    R = _builder(args)(args.expr)
    report = classify(R)
    axioms = _axioms(R, args.seed)
    if args.format == "json":
        return EXIT_OK, _dump({**report.to_dict(R), "axioms": axioms})
    lines = [f"{R.label}  ({R.size} elements, axioms {'ok' if axioms['ok'] else 'VIOLATED'}, {axioms['mode']})"]
    for name, v in report.results.items():
        extra = ""
        if v.counterexample is not None and isinstance(v.counterexample, int):
            extra = f"  counterexample {R.format(v.counterexample)}"
        lines.append(f"  {name:<20} {'true' if v.holds else 'false'}{extra}")
    return EXIT_OK, "\n".join(lines)


def cmd_decompose(args) -> tuple[int, str]:
    R = _builder(args)(args.expr)
    a = element(R, args.element)
    found = {kind: fn(R, a) for kind, fn in DECOMPOSERS.items()}
    if args.format == "json":
        doc = {
            "ring": R.label,
            "element": {"index": a, "coords": R.coords(a)},
            "decompositions": {k: (d.to_dict(R) if d else None) for k, d in found.items()},
        }
        return EXIT_OK, _dump(doc)
    lines = [f"{R.format(a)} in {R.label}"]
    for kind, d in found.items():
        if d is None:
            lines.append(f"  {kind:<26} none")
            continue
        sign = "+" if d.sign > 0 else "-"
        if d.kind == SWC:
            lines.append(f"  {kind:<26} {sign}  u={R.format(d.first_part)}  e={R.format(d.nil_or_idem_part)}")
        else:
            lines.append(
                f"  {kind:<26} {sign}  e={R.format(d.first_part)}  q={R.format(d.nil_or_idem_part)}"
                f"  (q^{d.exponent} = 0)"
            )
    return EXIT_OK, "\n".join(lines)


def cmd_subsets(args) -> tuple[int, str]:
    R = _builder(args)(args.expr)
    sets = {
        "units": units(R),
        "idempotents": idempotents(R),
        "nilpotents": nil_set(R),
        "jacobson_radical": jacobson_radical(R),
        "center": center(R),
    }
    if args.format == "json":
        doc = {"ring": R.label, "size": R.size, "subsets": {}}
        for name, s in sets.items():
            idx = [int(i) for i in s.indices]
            entry = {"count": len(idx), "elided": len(idx) > PRINT_CAP}
            entry["members"] = [{"index": i, "coords": R.coords(i)} for i in idx[:PRINT_CAP]]
            doc["subsets"][name] = entry
        return EXIT_OK, _dump(doc)
    lines = [f"{R.label}  ({R.size} elements)"]
    for name, s in sets.items():
        idx = [int(i) for i in s.indices]
        shown = " ".join(R.format(i) for i in idx[:PRINT_CAP])
        more = f" ... (+{len(idx) - PRINT_CAP} more)" if len(idx) > PRINT_CAP else ""
        lines.append(f"  {name:<17} {len(idx):>6}  {shown}{more}")
    return EXIT_OK, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    from ..harness import render, resolve_ids, run_all

    ids = list(args.ids or [])
    if args.check:
        ids += [t for t in args.check.split(",") if t.strip()]
    selected = resolve_ids(ids or "all")
    results = run_all(ids=selected)
    code = EXIT_FAIL if any(r.status == "FAIL" for r in results) else EXIT_OK
    return code, render(results, args.format)


def cmd_catalog(args) -> tuple[int, str]:
    from ..harness import default_catalog

    cat = default_catalog()
    entries = []
    for lab in cat.labels:
        kind = "group-ring" if lab.startswith("GR(") else "ring"
        entries.append({"label": lab, "kind": kind, "size": predicted_size(parse(lab))})
    if args.format == "json":
        return EXIT_OK, _dump({"entries": entries})
    width = max(len(e["label"]) for e in entries)
    lines = [f"{e['label']:<{width}}  {e['size']:>5}  {e['kind']}" for e in entries]
    return EXIT_OK, "\n".join(lines)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-size", type=_positive, default=argparse.SUPPRESS, help="element-count cap")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled axiom checks")

    parser = argparse.ArgumentParser(prog="ringlab", description="Finite ring classifier and result checker.")
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--max-size", type=_positive, default=None, help="element-count cap")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled axiom checks")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", parents=[common], help="run every ring predicate")
    p.add_argument("expr")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", parents=[common], help="decompositions of one element")
    p.add_argument("expr")
    p.add_argument("element", help="element literal: an index for Z<n> and GF, k*1 for composite rings, or coordinates like [[1,0],[0,0]]")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("subsets", parents=[common], help="units, idempotents, nilpotents, J(R), centre")
    p.add_argument("expr")
    p.set_defaults(func=cmd_subsets)

    p = sub.add_parser("verify", parents=[common], help="run result checks on the catalog")
    p.add_argument("ids", nargs="*", help="check ids or prefixes; default all")
    p.add_argument("--check", default=None, help="comma-separated check ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", parents=[common], help="list catalog entries")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.max_size is not None:
            with config.size_cap(args.max_size):
                code, text = args.func(args)
        else:
            code, text = args.func(args)
    except (ParseError, SizeCapError, InvalidStructureError, UnknownCheckError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownCheckError) and exc.args else str(exc)
        if isinstance(exc, UnknownCheckError):
            msg = f"unknown check id {msg!r}"
        print(f"ringlab: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (RingError, ValueError) as exc:
        print(f"ringlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


__all__ = ["build_parser", "cmd_catalog", "cmd_classify", "cmd_decompose", "cmd_subsets", "cmd_verify", "main"]
