"""Command line interface.

Exit codes: 0 clean, 1 validation failure, 2 input/parse error, 3 capacity
bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deffile
from .braiding import (CategoryBraiding, CrossedModuleBraiding, braided_functor_report,
                       induce_braiding, search_braidings, transport_braiding)
from .extraction import (check_weak_equivalence, extract_crossed_module,
                         validate_strict_categorical_group)
from .gaction import CategoricalGroup, check_g_functor
from .report import CapacityError, Report, StructuralError
from .strictify import strictify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _print_report(sid, rep: Report, out):
    status = "ok" if rep.ok else "FAIL"
    print(f"== {sid}: {status}", file=out)
    for fam, (checked, failed) in rep.families().items():
        line = f"   {fam}: {checked - failed}/{checked}"
        if failed:
            line += f"  first witness: {rep.first(fam).witness}"
        print(line, file=out)


def cmd_validate(args, out):
    doc = deffile.parse(args.file, validate=False)
    clean = True
    for sid, path, rep in deffile.iter_validation(doc):
        _print_report(f"{path} ({sid})", rep, out)
        clean = clean and rep.ok
    print("all validators passed" if clean else "validation failures found", file=out)
    return EXIT_OK if clean else EXIT_INVALID


def _get(doc, section, sid, flag):
    registry = doc.registry(section)
    if sid not in registry:
        raise deffile.DanglingReferenceError(flag, f"no {section} stanza with id {sid!r}")
    return registry[sid]


def cmd_strictify(args, out):
    doc = deffile.parse(args.file)
    gc = _get(doc, "g_categories", args.g_category, "--g-category")
    st = strictify(gc, bound=args.enumerate_bound, morphism_bound=args.enumerate_bound ** 2)
    result = st.gcat
    rep = result.validate()
    strict = result.is_strict()
    equiv = check_g_functor(st.equivalence_data())
    emitted = deffile.strictification_document(st, f"{args.g_category}_strict")
    text = emitted.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    print(f"# objects: {len(st.objects)}, morphisms: {len(st.morphisms)}",
          file=sys.stderr)
    _print_report("strictification coherence", rep, sys.stderr)
    print(f"strict action: {'yes' if strict else 'NO'}", file=sys.stderr)
    _print_report("slice equivalence (projection, transitions)", equiv, sys.stderr)
    ok = rep.ok and strict and equiv.ok
    return EXIT_OK if ok else EXIT_INVALID


def cmd_braiding_search(args, out):
    doc = deffile.parse(args.file)
    grading = _get(doc, "gradings", args.grading, "--grading")
    xm = _get(doc, "crossed_modules", args.xmod, "--xmod")
    if grading.weak_action.target is not xm:
        raise deffile.DanglingReferenceError(
            "--grading", "grading does not belong to the requested crossed module")
    rep = grading.validate()
    if not rep.ok:
        _print_report("grading", rep, out)
        return EXIT_INVALID
    solutions = search_braidings(grading, bound=args.bound)
    print(f"{len(solutions)} solutions", file=out)
    for i, sol in enumerate(solutions):
        print(f"bracket[{i}] = {[list(r) for r in sol.bracket]}", file=out)
    return EXIT_OK


def cmd_transport(args, out):
    doc = deffile.parse(args.file)
    braiding = _get(doc, "braidings", args.braiding, "--braiding")
    if isinstance(braiding, CrossedModuleBraiding):
        braiding = induce_braiding(braiding)
    base_rep = braiding.validate()
    if not base_rep.ok:
        _print_report("input braiding", base_rep, out)
        return EXIT_INVALID
    st = strictify(braiding.gcat, bound=args.enumerate_bound,
                   morphism_bound=args.enumerate_bound ** 2)
    transported = transport_braiding(braiding, st)
    rep = transported.validate()
    strict_rep = transported.strict_identities()
    functor_rep = braided_functor_report(st.equivalence_data(), transported, braiding)
    _print_report("transported braiding", rep, out)
    _print_report("strict identities", strict_rep, out)
    _print_report("projection is a braided functor", functor_rep, out)
    ok = rep.ok and strict_rep.ok and functor_rep.ok
    return EXIT_OK if ok else EXIT_INVALID


def cmd_extract(args, out):
    doc = deffile.parse(args.file)
    gc = _get(doc, "g_categories", args.g_category, "--g-category")
    cg_rep = validate_strict_categorical_group(gc.cat)
    if not cg_rep.ok:
        _print_report("strict categorical group", cg_rep, out)
        return EXIT_INVALID
    ext = extract_crossed_module(gc.cat)
    rep = ext.xmod.validate()
    emitted = deffile.crossed_module_document(ext.xmod, f"{args.g_category}_extracted")
    text = emitted.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    _print_report("extracted crossed module", rep, sys.stderr)
    ok = rep.ok
    if isinstance(gc.cat, CategoricalGroup):
        weq = check_weak_equivalence(gc.cat.xmod, ext.xmod)
        print("weak equivalence vs source crossed module:", file=sys.stderr)
        print(weq.summary(), file=sys.stderr)
        ok = ok and weq.ok
    return EXIT_OK if ok else EXIT_INVALID


def cmd_report(args, out):
    doc = deffile.parse(args.file, validate=False)
    results = []
    for sid, path, rep in deffile.iter_validation(doc):
        results.append({
            "id": sid,
            "path": path,
            "ok": rep.ok,
            "families": {fam: {"checked": c, "failed": f}
                         for fam, (c, f) in rep.families().items()},
            "first_witnesses": {v.family: list(v.witness) for v in rep.violations[:50]},
        })
    clean = all(r["ok"] for r in results)
    if args.format == "json":
        print(json.dumps({"ok": clean, "stanzas": results}, indent=1), file=out)
    else:
        for r in results:
            print(f"{r['path']} ({r['id']}): {'ok' if r['ok'] else 'FAIL'}", file=out)
            for fam, c in r["families"].items():
                suffix = "" if not c["failed"] else f"  ({c['failed']} failures)"
                print(f"   {fam}: {c['checked'] - c['failed']}/{c['checked']}{suffix}",
                      file=out)
    return EXIT_OK if clean else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcat",
        description="Exact verification and strictification of group actions "
                    "on finite monoidal categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run every applicable validator")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("strictify", help="emit the strictified G-category")
    p.add_argument("file")
    p.add_argument("--g-category", required=True)
    p.add_argument("--enumerate-bound", type=int, default=256)
    p.add_argument("--output")
    p.set_defaults(func=cmd_strictify)

    p = sub.add_parser("braiding-search", help="enumerate crossed-module braidings")
    p.add_argument("file")
    p.add_argument("--xmod", required=True)
    p.add_argument("--grading", required=True)
    p.add_argument("--bound", type=int, default=1 << 20)
    p.set_defaults(func=cmd_braiding_search)

    p = sub.add_parser("transport", help="transport a braiding across strictification")
    p.add_argument("file")
    p.add_argument("--braiding", required=True)
    p.add_argument("--enumerate-bound", type=int, default=256)
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("extract", help="extract the crossed module of a categorical group")
    p.add_argument("file")
    p.add_argument("--g-category", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("report", help="consolidated validation results")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args, sys.stdout)
    except deffile.InvalidStanzaError as exc:
        print(f"invalid stanza: {exc}", file=sys.stderr)
        if exc.report is not None:
            _print_report(exc.path, exc.report, sys.stderr)
        return EXIT_INVALID
    except deffile.DefinitionError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except StructuralError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code


if __name__ == "__main__":
    sys.exit(main())
