"""Command-line interface.

Exit status: 0 success, 2 bad flags, 3 an input object failed validation,
4 a verification check failed.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import formats, genfunc, render
from .bijection import phi, psi
from .compositions import rev
from .dyck import (DomainError, LabelledDyckPath2, SequencePair, enumerate_paths,
                   to_sequence_pair, validate_path)
from .trees import (InvalidTreeError, TieredRootedTree, canonical, enumerate_trees,
                    label_composition, level_composition, validate_tree)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_VERIFY_FAILED = 4


class InputError(Exception):
    pass


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetatrees", description=(
        "Tiered trees, 2-labelled Dyck paths and the bijection between their "
        "zero-statistic subfamilies."))
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p, formats_):
        p.add_argument("--in", dest="inp", default="-", help="input file (default stdin)")
        p.add_argument("--out", default="-", help="output file (default stdout)")
        p.add_argument("--format", choices=formats_, default=formats_[0])

    p = sub.add_parser("enumerate-trees", help="stream every tiered tree of a given size")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-label", type=_positive)
    p.add_argument("--max-level", type=_positive)
    p.add_argument("--zero-only", action="store_true", help="only trees without inversions")
    io_flags(p, ["json", "text"])

    p = sub.add_parser("enumerate-paths", help="stream every 2-labelled Dyck path of a given size")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--max-label", type=_positive)
    p.add_argument("--zero-only", action="store_true", help="only area-0 paths")
    io_flags(p, ["json", "text"])

    p = sub.add_parser("map", help="send zero-inversion trees to sequence pairs")
    io_flags(p, ["json", "text"])

    p = sub.add_parser("invert", help="send sequence pairs (or area-0 paths) back to trees")
    io_flags(p, ["json", "text"])

    p = sub.add_parser("verify", help="run a verification check and print its report")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=["q0", "full", "symmetry"], default="q0")
    p.add_argument("--out", default="-")

    p = sub.add_parser("poly", help="print a generating polynomial")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--family", choices=["trees", "paths"], default="trees")
    p.add_argument("--max-label", type=_positive)
    p.add_argument("--max-level", type=_positive)
    p.add_argument("--zero-only", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default="-")

    p = sub.add_parser("render", help="draw a tree (dot/svg/text) or a path (svg/text)")
    io_flags(p, ["svg", "dot", "text"])
    return parser


@contextlib.contextmanager
def _open(path, mode):
    if path == "-":
        yield sys.stdin if "r" in mode else sys.stdout
    else:
        with open(path, mode) as fh:
            yield fh


def _emit(out, obj, fmt):
    out.write((formats.dumps(obj) if fmt == "json" else formats.to_text(obj)) + "\n")


def _cmd_enumerate_trees(args, out):
    for tree in enumerate_trees(args.n, args.max_label, args.max_level, zero_only=args.zero_only):
        _emit(out, tree, args.format)


def _cmd_enumerate_paths(args, out):
    for path in enumerate_paths(args.n, args.max_label, area_zero=args.zero_only):
        _emit(out, path, args.format)


def _objects(args):
    with _open(args.inp, "r") as fh:
        for number, line in formats.read_lines(fh):
            try:
                stripped = line.strip()
                obj = formats.loads(stripped) if stripped.startswith("{") else formats.from_text(stripped)
            except (ValueError, KeyError, json.JSONDecodeError) as exc:
                raise InputError(f"line {number}: {exc}") from exc
            yield number, obj


def _cmd_map(args, out):
    for number, tree in _objects(args):
        if not isinstance(tree, TieredRootedTree):
            raise InputError(f"line {number}: expected a tree, got {type(tree).__name__}")
        try:
            pair = phi(tree)
        except (InvalidTreeError, DomainError) as exc:
            raise InputError(f"line {number}: {exc}") from exc
        if args.format == "text":
            out.write(pair.text() + "\n")
            continue
        record = pair.to_dict()
        record["audit"] = {
            "label_composition": list(label_composition(tree)),
            "level_composition": list(level_composition(tree)),
            "x_composition": list(pair.x_composition()),
            "y_composition": list(pair.y_composition()),
            "rev_level_composition": list(rev(level_composition(tree))),
        }
        out.write(formats.dumps(record) + "\n")


def _cmd_invert(args, out):
    for number, obj in _objects(args):
        if isinstance(obj, LabelledDyckPath2):
            try:
                obj = to_sequence_pair(obj)
            except (DomainError, ValueError) as exc:
                raise InputError(f"line {number}: {exc}") from exc
        if not isinstance(obj, SequencePair):
            raise InputError(f"line {number}: expected a sequence pair, got {type(obj).__name__}")
        tree = psi(obj)
        if args.format == "text":
            out.write(tree.text() + "\n")
            continue
        record = tree.to_dict()
        record["audit"] = {
            "x_composition": list(obj.x_composition()),
            "y_composition": list(obj.y_composition()),
            "label_composition": list(label_composition(tree)),
            "level_composition": list(level_composition(tree)),
        }
        out.write(formats.dumps(record) + "\n")


def _cmd_verify(args, out):
    check = {"q0": genfunc.verify_q0_theorem, "full": genfunc.verify_full_conjecture,
             "symmetry": genfunc.verify_symmetry}[args.mode]
    report = check(args.n)
    out.write(report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_poly(args, out):
    if args.family == "trees":
        poly = genfunc.tree_polynomial(args.n, args.max_label, args.max_level, zero_only=args.zero_only)
    else:
        if args.max_level is not None:
            raise InputError("--max-level only applies to --family trees")
        poly = genfunc.path_polynomial(args.n, args.max_label, zero_only=args.zero_only)
    if args.format == "json":
        out.write(formats.dumps(poly) + "\n")
    else:
        out.write(poly.to_text())


def _cmd_render(args, out):
    objs = list(_objects(args))
    if len(objs) != 1:
        raise InputError(f"render takes exactly one object, got {len(objs)}")
    _, obj = objs[0]
    if isinstance(obj, SequencePair):
        obj = psi(obj) if args.format == "dot" else LabelledDyckPath2("NE" * obj.n, obj.a, obj.b)
    if isinstance(obj, TieredRootedTree):
        verdict = validate_tree(obj)
        if not verdict.ok:
            raise InputError("; ".join(verdict.messages()))
        text = {"dot": render.tree_to_dot, "svg": render.tree_to_svg,
                "text": render.tree_to_text}[args.format](canonical(obj))
    elif isinstance(obj, LabelledDyckPath2):
        verdict = validate_path(obj)
        if not verdict.ok:
            raise InputError("; ".join(verdict.messages()))
        if args.format == "dot":
            raise InputError("paths render as svg or text, not dot")
        text = render.path_to_svg(obj) if args.format == "svg" else render.path_to_text(obj)
    else:
        raise InputError(f"cannot render {type(obj).__name__}")
    out.write(text)


COMMANDS = {
    "enumerate-trees": _cmd_enumerate_trees,
    "enumerate-paths": _cmd_enumerate_paths,
    "map": _cmd_map,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "poly": _cmd_poly,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _open(args.out, "w") as out:
            status = COMMANDS[args.command](args, out)
    except InputError as exc:
        print(f"thetatrees {args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:  # pragma: no cover - downstream closed early (head, etc.)
        return EXIT_OK
    return status or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
