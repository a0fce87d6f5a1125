"""Command line front end.

Commands: validate, color, fold, enumerate, render, orient, builtin.
JSON goes to standard output (or ``--out``); diagnostics go to standard
error.  Exit codes: 0 success or positive verdict, 2 usage/input error,
3 negative verdict.  A directory input runs the command over every
``*.surface.json`` file inside and emits an aggregate report;
``FOLDCHECK_THREADS`` caps the batch worker count (0 = sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .circles import bounded_components, build_circle_representation, render_svg
from .colouring import (
    colour_involutions,
    colouring_report,
    find_orientation,
    find_vertex_colourings,
    induced_edge_colouring,
)
from .errors import FoldcheckError, GroundSetError, ImproperColouringError
from .folding import enumerate_foldings, find_folding
from .perms import CyclicOrder, PairPartition, parse_cycles
from .surfaces import (
    BUILTIN_NAMES,
    builtin,
    load_surface,
    serialize_surface,
    validate,
)

_SURFACE_COMMANDS = ("validate", "color", "fold", "enumerate", "orient", "render")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="foldcheck",
        description="Decide combinatorial triangle-foldability of closed "
                    "triangulated surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_surface_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default=None,
                       help="surface file, or directory of *.surface.json files")
        p.add_argument("--builtin", dest="fixture", choices=BUILTIN_NAMES,
                       help="use a built-in fixture instead of a file")
        p.add_argument("--out", help="write output to this path")
        p.add_argument("--pretty", action="store_true",
                       help="human-readable tables instead of JSON")
        return p

    add_surface_command("validate", "check the surface conditions")
    add_surface_command("color", "vertex colouring report")
    add_surface_command("fold", "decide triangle-foldability")
    p = add_surface_command("enumerate", "list folding witness orders")
    p.add_argument("--limit", type=int, default=None,
                   help="stop after this many witnesses")
    add_surface_command("orient", "alternating face orientation")

    p = add_surface_command("render", "SVG circle diagram")
    p.add_argument("--sigma", help="cyclic order in cycle notation, e.g. (1,4,3,8,5,2,7,6)")
    p.add_argument("--chords", help="chord involution in cycle notation, e.g. (1,4)(2,7)(3,6)(5,8)")
    p.add_argument("--components", action="store_true",
                   help="shade the bounded components (crossing-free input only)")
    p.add_argument("--base", help="element placed at angle zero (default: smallest)")
    p.add_argument("--colour", type=int, choices=(1, 2, 3), default=1,
                   help="which colour partition to draw for surface input")

    p = sub.add_parser("builtin", help="print a built-in fixture")
    p.add_argument("name", choices=BUILTIN_NAMES)
    p.add_argument("--out", help="write output to this path")
    return parser


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _diag(message):
    print(f"foldcheck: {message}", file=sys.stderr)


def _write_text(path, text):
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _emit(text, out_path):
    if out_path:
        _write_text(out_path, text)
    else:
        sys.stdout.write(text)


def _cmd_validate(surface, args):
    problems = validate(surface)
    obj = {
        "valid": not problems,
        "violations": [{"condition": v.condition, "element": v.element,
                        "detail": v.detail} for v in problems],
    }
    return (0 if not problems else 3), obj


def _cmd_color(surface, args):
    representatives = find_vertex_colourings(surface)
    if not representatives:
        _diag("verdict: no-vertex-colouring")
        return 3, None
    return 0, colouring_report(surface, representatives[0])


def _cmd_fold(surface, args):
    verdict = find_folding(surface)
    if not verdict.foldable:
        _diag(f"verdict: unfoldable: {verdict.reason}")
    return (0 if verdict.foldable else 3), verdict.report()


def _cmd_enumerate(surface, args):
    try:
        witnesses = enumerate_foldings(surface, limit=args.limit)
    except ImproperColouringError:
        _diag("verdict: no-vertex-colouring")
        return 3, None
    colouring = find_vertex_colourings(surface)[0]
    obj = {
        "colouring": dict(sorted(colouring.colours.items())),
        "count": len(witnesses),
        "witnesses": [list(w) for w in witnesses],
    }
    if not witnesses:
        _diag("verdict: no-folding-order")
    return (0 if witnesses else 3), obj


def _cmd_orient(surface, args):
    orientation = find_orientation(surface)
    if orientation is None:
        _diag("verdict: not-orientable")
        return 3, {"orientable": False}
    return 0, {"orientable": True,
               "orientation": dict(sorted(orientation.signs.items()))}


def _render_from_cycles(args):
    if not (args.sigma and args.chords):
        raise GroundSetError("render needs both --sigma and --chords, or a surface")
    parsed = parse_cycles(args.sigma)
    order = CyclicOrder(parsed.domain, parsed._img)
    partition = PairPartition.from_involution(parse_cycles(args.chords))
    base = _parse_element(args.base, order.domain) if args.base else None
    representation = build_circle_representation(order, partition, base=base)
    components = None
    if args.components:
        components = bounded_components(order, partition.to_involution())
    return render_svg(representation, components)


def _parse_element(text, domain):
    if text.isdigit() and int(text) in domain:
        return int(text)
    if text in domain:
        return text
    raise GroundSetError(f"element {text!r} is not in the ground set")


def _cmd_render(surface, args):
    if args.sigma or args.chords:
        return 0, _render_from_cycles(args)
    verdict = find_folding(surface)
    if not verdict.foldable:
        _diag(f"verdict: unfoldable: {verdict.reason}")
        return 3, None
    edge_colouring = induced_edge_colouring(surface, verdict.colouring)
    involutions = colour_involutions(surface, edge_colouring)
    rho = involutions[args.colour - 1].perm
    partition = PairPartition.from_involution(rho)
    base = _parse_element(args.base, verdict.cyclic_order.domain) if args.base else None
    representation = build_circle_representation(
        verdict.cyclic_order, partition, base=base)
    components = bounded_components(verdict.cyclic_order, rho) \
        if args.components else None
    return 0, render_svg(representation, components)


def _cmd_builtin(args):
    return 0, serialize_surface(builtin(args.name))


_COMMANDS = {
    "validate": _cmd_validate,
    "color": _cmd_color,
    "fold": _cmd_fold,
    "enumerate": _cmd_enumerate,
    "orient": _cmd_orient,
    "render": _cmd_render,
}


def _pretty_text(command, obj):
    lines = []
    if command == "validate":
        if obj["valid"]:
            lines.append("valid surface")
        for v in obj["violations"]:
            lines.append(f"condition {v['condition']}  {v['element']}  {v['detail']}")
    elif command == "color":
        lines.append("vertex colours:")
        for v, c in obj["vertex_colouring"].items():
            lines.append(f"  {v}  {c}")
        lines.append("edge colours:")
        for e, c in obj["edge_colouring"].items():
            lines.append(f"  {e}  {c}")
        if obj.get("involutions"):
            lines.append("involutions:")
            for colour, pairs in obj["involutions"].items():
                text = "".join(f"({a},{b})" for a, b in pairs)
                lines.append(f"  colour {colour}  {text}")
    elif command == "fold":
        lines.append(f"outcome: {obj['outcome']}")
        if obj["outcome"] == "foldable":
            lines.append("witness: " + " < ".join(obj["witness"]))
        else:
            lines.append(f"reason: {obj['reason']}")
    elif command == "enumerate":
        lines.append(f"witness orders: {obj['count']}")
        for w in obj["witnesses"]:
            lines.append("  " + " < ".join(w))
    elif command == "orient":
        if obj["orientable"]:
            plus = [f for f, s in obj["orientation"].items() if s == 1]
            minus = [f for f, s in obj["orientation"].items() if s == -1]
            lines.append("orientable")
            lines.append("  +1: " + " ".join(plus))
            lines.append("  -1: " + " ".join(minus))
        else:
            lines.append("not orientable")
    return "\n".join(lines) + "\n"


def _format_output(command, obj, pretty):
    if isinstance(obj, str):
        return obj
    if pretty:
        return _pretty_text(command, obj)
    return _dump(obj)


def _run_one_file(command_fn, args, path):
    surface = load_surface(path)
    return command_fn(surface, args)


def _batch(command_fn, args, directory):
    files = sorted(name for name in os.listdir(directory)
                   if name.endswith(".surface.json"))
    threads = int(os.environ.get("FOLDCHECK_THREADS", "0") or 0)
    out_dir = args.out
    if args.command == "render" and not out_dir:
        raise GroundSetError("batch render requires --out DIRECTORY")
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)

    def work(name):
        try:
            code, obj = _run_one_file(command_fn, args, os.path.join(directory, name))
        except FoldcheckError as exc:
            return name, {"exit": 2, "error": f"{exc.code}: {exc}"}
        entry = {"exit": code}
        stem = name[:-len(".surface.json")]
        if isinstance(obj, str):  # rendered SVG
            target = f"{stem}.svg"
            _write_text(os.path.join(out_dir, target), obj)
            entry["output"] = {"svg": target}
        else:
            if obj is not None and out_dir:
                target = f"{stem}.{args.command}.json"
                _write_text(os.path.join(out_dir, target), _dump(obj))
            entry["output"] = obj
        return name, entry

    if threads > 0:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(work, files))
    else:
        results = dict(work(name) for name in files)

    aggregate = {"command": args.command,
                 "results": {name: results[name] for name in files}}
    codes = [entry["exit"] for entry in results.values()]
    code = 2 if 2 in codes else (3 if 3 in codes else 0)
    sys.stdout.write(_dump(aggregate))
    return code


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "builtin":
            code, text = _cmd_builtin(args)
            _emit(text, args.out)
            return code

        command_fn = _COMMANDS[args.command]
        fixture = getattr(args, "fixture", None)
        sigma_mode = args.command == "render" and (args.sigma or args.chords)

        if sigma_mode:
            if args.input or fixture:
                raise GroundSetError("--sigma/--chords cannot be combined with a surface")
            code, obj = command_fn(None, args)
        else:
            if (args.input is None) == (fixture is None):
                parser.error("exactly one of INPUT or --builtin is required")
            if fixture is not None:
                surface = builtin(fixture)
            elif os.path.isdir(args.input):
                return _batch(command_fn, args, args.input)
            else:
                surface = load_surface(args.input)
            code, obj = command_fn(surface, args)

        if obj is not None:
            _emit(_format_output(args.command, obj, getattr(args, "pretty", False)),
                  args.out)
        return code
    except FoldcheckError as exc:
        print(f"foldcheck: error: {exc.code}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"foldcheck: error: io: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
