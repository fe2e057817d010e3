"""Command-line entry point.

Exit codes: 0 pass, 1 property violation (or not isomorphic), 2 usage or
parse error, 3 failed precondition or unknown name.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Optional, Sequence

from . import axioms
from .category import Category, IncidenceError, PreconditionError, PresentationError
from .constructions import lower_category, section_category, upper_category
from .expectations import resolve_morphism
from .export import document, to_dot, to_json, write_text
from .fixtures import CATALOG, fixture
from .iso import is_isomorphic
from .nerve import nerve_of, realize
from .report import ValidationReport
from .textformat import dump_category, dump_presentation, load_category

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

CHECKS: dict[str, Callable[[Category, argparse.Namespace], ValidationReport]] = {
    "bounded_acyclic": lambda c, a: axioms.validate_bounded_acyclic(c),
    "category_laws": lambda c, a: axioms.check_category_laws(c),
    "graded": lambda c, a: axioms.check_graded(c),
    "semi_diamond": lambda c, a: axioms.check_semi_diamond(c, a.signs),
    "diamond": lambda c, a: axioms.check_diamond(c, a.scope, a.signs),
    "strongly_decomposable": lambda c, a: axioms.check_strongly_decomposable(c),
    "strongly_unsplittable": lambda c, a: axioms.check_strongly_unsplittable(c),
    "strongly_initial_unsplittable": lambda c, a: axioms.check_strongly_initial_unsplittable(c),
    "cw": lambda c, a: axioms.check_cw(c),
}
DEFAULT_CHECKS = ("bounded_acyclic", "category_laws", "graded", "semi_diamond")


def _emit_reports(reports: list[ValidationReport], args: argparse.Namespace) -> int:
    if args.format == "json":
        text = to_json(document("validation", reports=[r.to_dict() for r in reports]))
    else:
        text = "\n".join(r.render() for r in reports) + "\n"
    write_text(text, args.output)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_validate(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    names = list(DEFAULT_CHECKS)
    for extra in args.check or ():
        if extra not in names:
            names.append(extra)
    return _emit_reports([CHECKS[n](c, args) for n in names], args)


def cmd_check_cw(args: argparse.Namespace) -> int:
    return _emit_reports([axioms.check_cw(load_category(args.file))], args)


def cmd_hasse(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    write_text(to_dot(c, os.path.splitext(os.path.basename(args.file))[0] or "incidence"), args.output)
    return EXIT_OK


def cmd_upper(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    write_text(dump_category(upper_category(c, args.object, not args.no_normalize)[0]), args.output)
    return EXIT_OK


def cmd_lower(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    write_text(dump_category(lower_category(c, args.object)[0]), args.output)
    return EXIT_OK


def cmd_section(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    m = resolve_morphism(c, args.morphism)
    write_text(dump_category(section_category(c, m, not args.no_normalize)), args.output)
    return EXIT_OK


def cmd_nerve(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    write_text(to_json(nerve_of(c, args.max_level).to_dict()), args.output)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    write_text(to_json(realize(nerve_of(c, args.max_level)).to_dict()), args.output)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    c = load_category(args.file)
    clusters = axioms.linked_clusters(c)
    lines = [f"{len(clusters)} linked cluster(s)"]
    for k, cl in enumerate(clusters):
        lines.append(f"  {k}: " + " ".join(c.object_names[x] for x in cl))
    if args.split_dir:
        os.makedirs(args.split_dir, exist_ok=True)
        stem = os.path.splitext(os.path.basename(args.file))[0] or "part"
        for k, part in enumerate(axioms.split(c)):
            path = os.path.join(args.split_dir, f"{stem}.{k}.cat")
            write_text(dump_category(part), path)
            lines.append(f"wrote {path}")
    write_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    a, b = load_category(args.first), load_category(args.second)
    found = is_isomorphic(a, b, ranks=args.ranks)
    if found is None:
        write_text("not isomorphic\n", args.output)
        return EXIT_FAIL
    fwd, _ = found
    lines = ["isomorphic"]
    lines += [f"  {a.object_names[x]} -> {b.object_names[y]}" for x, y in enumerate(fwd.object_map)]
    lines += [f"  {a.names[m]} -> {b.names[n]}" for m, n in enumerate(fwd.morphism_map)
              if not a.is_identity(m)]
    write_text("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _param(text: str) -> tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{key} must be an integer") from None


def cmd_fixture(args: argparse.Namespace) -> int:
    if args.list:
        write_text("\n".join(CATALOG) + "\n", args.output)
        return EXIT_OK
    if not args.name:
        raise PreconditionError("fixture name required (or --list)")
    try:
        spec = fixture(args.name, **dict(args.param or ()))
    except TypeError as e:
        raise PreconditionError(f"bad fixture parameter: {e}") from None
    write_text(f"# fixture {spec.name}\n" + dump_presentation(spec.presentation), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="incidence", description="Finite graded bounded acyclic categories.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name: str, fn, help: str, file: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", help="category text file, or - for stdin")
        sp.add_argument("-o", "--output", help="output path (default stdout)")
        sp.set_defaults(func=fn)
        return sp

    sp = verb("validate", cmd_validate, "axioms and selected property checks")
    sp.add_argument("--signs", action="store_true", help="apply the diamond sign rule")
    sp.add_argument("--scope", choices=axioms.SCOPES, default="proper")
    sp.add_argument("--check", action="append", choices=sorted(CHECKS), help="add a property check")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = verb("check-cw", cmd_check_cw, "diamond + strongly decomposable + strongly initial unsplittable")
    sp.add_argument("--format", choices=("text", "json"), default="text")

    verb("hasse", cmd_hasse, "Hasse multigraph as DOT")

    for name, fn in (("upper", cmd_upper), ("lower", cmd_lower)):
        sp = verb(name, fn, f"{name} category of an object, in the text format")
        sp.add_argument("--object", required=True)
        if name == "upper":
            sp.add_argument("--no-normalize", action="store_true", help="keep host ranks")

    sp = verb("section", cmd_section, "section category of a morphism, in the text format")
    sp.add_argument("--morphism", required=True, help="morphism name, or X->Y when unique")
    sp.add_argument("--no-normalize", action="store_true")

    for name, fn, text in (("nerve", cmd_nerve, "nerve of the top morphism"),
                           ("realize", cmd_realize, "oriented simplicial realization of the nerve")):
        sp = verb(name, fn, f"{text}, as JSON")
        sp.add_argument("--max-level", type=int)

    sp = verb("decompose", cmd_decompose, "linked clusters; optionally write the split parts")
    sp.add_argument("--split-dir")

    sp = verb("iso", cmd_iso, "isomorphism test (exit 0 iff isomorphic)", file=False)
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--ranks", action="store_true", help="also require rank preservation")

    sp = verb("fixture", cmd_fixture, "emit a catalog fixture in the text format", file=False)
    sp.add_argument("name", nargs="?", choices=CATALOG)
    sp.add_argument("--param", action="append", type=_param, help="builder parameter, e.g. k=5")
    sp.add_argument("--list", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PresentationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except IncidenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
