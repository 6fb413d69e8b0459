"""Command-line front end: ``gen``, ``check``, ``analyze``, ``verify``.

Exit codes: 0 pass, 1 assertion failure, 2 precondition (split / C1 / C2)
failure, 3 parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from .exactla import FieldSpec
from .fileformat import ParseError, dumps, load
from .report import NOT_A_THEOREM_INSTANCE, analyze, check_all, verify

EXIT_PASS, EXIT_FAIL, EXIT_PRECONDITION, EXIT_PARSE = 0, 1, 2, 3


def _field(label: str | None) -> FieldSpec | None:
    if label is None:
        return None
    try:
        return FieldSpec.from_label(label)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _emit(obj: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=1, ensure_ascii=False, default=str) + "\n")
    else:
        out.write(_text(obj))


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {_short(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}- {_short(v)}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines) + "\n"


def _flat(v) -> bool:
    items = v.values() if isinstance(v, dict) else v
    return all(not isinstance(x, (dict, list)) for x in items)


def _short(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={x}" for k, x in v.items()) or "{}"
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _load(path: str, field):
    try:
        return load(path, field)[0]
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        raise SystemExit(EXIT_PARSE)


def cmd_gen(args) -> int:
    gen = corpus_mod.GENERATORS.get(args.example)
    if gen is None:
        sys.stderr.write(f"unknown example {args.example!r}; choose from {', '.join(sorted(corpus_mod.GENERATORS))}\n")
        return EXIT_FAIL
    field = _field(args.field) or FieldSpec.from_label("q")
    try:
        item = gen(*args.params, field=field)
    except (TypeError, ValueError, KeyError) as exc:
        sys.stderr.write(f"bad parameters for {args.example}: {exc}\n")
        return EXIT_FAIL
    meta = {"generator": args.example, "params": list(args.params)}
    text = dumps(item.coalgebra, meta)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_check(args) -> int:
    c = _load(args.file, _field(args.field))
    conds = check_all(c)
    rep = {"name": c.name, "checks": {k: v.to_json() for k, v in conds.items()}}
    if not conds["axioms"]:
        code, verdict = EXIT_FAIL, "FAIL"
    elif not all(conds.get(k) for k in ("split", "C1", "C2")):
        code, verdict = EXIT_PRECONDITION, NOT_A_THEOREM_INSTANCE
    else:
        code, verdict = EXIT_PASS, "PASS"
    rep["verdict"] = verdict
    _emit(rep, args.format)
    return code


def cmd_analyze(args) -> int:
    c = _load(args.file, _field(args.field))
    rep = analyze(c, max_layer=args.max_layer)
    _emit(rep, args.format)
    return {"PASS": EXIT_PASS, "FAIL": EXIT_FAIL}.get(rep["verdict"], EXIT_PRECONDITION)


def cmd_verify(args) -> int:
    field = _field(args.field)
    if args.corpus:
        items = corpus_mod.corpus(field or FieldSpec.from_label("q"))
        results = []
        codes = []
        for item in sorted(items, key=lambda it: it.name):
            rep = verify(item.coalgebra, keep_going=args.keep_going, max_layer=args.max_layer)
            row = {"name": item.name, "verdict": rep["verdict"]}
            if not item.theorem_instance and rep["verdict"] == NOT_A_THEOREM_INSTANCE:
                row["notice"] = "skipped: not a theorem instance (expected)"
            else:
                codes.append(rep["exit_code"])
                if rep["witnesses"]:
                    row["witnesses"] = rep["witnesses"]
            results.append(row)
            if EXIT_FAIL in codes and not args.keep_going:
                break
        code = EXIT_FAIL if EXIT_FAIL in codes else max(codes, default=EXIT_PASS)
        _emit({"corpus": results, "verdict": "PASS" if code == EXIT_PASS else "FAIL"}, args.format)
        return code
    if not args.file:
        sys.stderr.write("verify needs a file or --corpus\n")
        return EXIT_FAIL
    c = _load(args.file, field)
    rep = verify(c, keep_going=args.keep_going, max_layer=args.max_layer)
    code = rep.pop("exit_code")
    _emit(rep, args.format)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coradical", description="Exact coradical-filtration engine for graded coalgebras.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q or fp:<p> (reinterprets the file's scalars)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write an example coalgebra")
    g.add_argument("example", help=", ".join(sorted(corpus_mod.GENERATORS)))
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="axioms, split, (C1), (C2)")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    a = sub.add_parser("analyze", parents=[common], help="filtrations, simples, injectives, tables")
    a.add_argument("file")
    a.add_argument("--max-layer", type=int)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="theorem and lemma checks")
    v.add_argument("file", nargs="?")
    v.add_argument("--corpus", action="store_true", help="run every corpus generator")
    v.add_argument("--keep-going", action="store_true")
    v.add_argument("--max-layer", type=int)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        sys.stderr.write(f"{exc.code}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
