"""Command line entry point: ``lietame <command> [options]``.

Exit codes: 0 success (a wild verdict is a success), 2 unsupported input,
3 input error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .classify import classify, explain
from .document import ParseError, ValidationError, parse_document
from .levi import levi_subalgebra
from .lie import LieAlgebra, bracket_spaces, radical
from .named import BadRecipe, build_named
from .quiver import Rule, build_quiver, detect_wild, emit_dot
from .weights import BadCartanType, CartanDatum, NonDominant, parse_module, parse_weight, tensor_decompose, weyl_dim

EXIT_OK, EXIT_UNSUPPORTED, EXIT_INPUT = 0, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)  # redirected by run()
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _basis_rows(sub) -> list[list[str]]:
    return [[_q(x) for x in row] for row in sub.basis]


def _load_algebra(args) -> tuple[LieAlgebra, dict]:
    if bool(args.input) == bool(args.named):
        raise InputError("give exactly one of --input FILE or --named RECIPE")
    if args.named:
        return build_named(args.named), {"named": args.named}
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc
    alg, name = parse_document(text)
    return alg, {"file": args.input, "name": name}


def _cmd_classify(args):
    alg, source = _load_algebra(args)
    v = classify(alg)
    code = EXIT_UNSUPPORTED if v.kind == "unsupported" else EXIT_OK
    return source, v.to_dict(), v.rule_text, explain(v), code


def _cmd_radical(args):
    alg, source = _load_algebra(args)
    r = radical(alg)
    rr = bracket_spaces(alg, r, r)
    result = {
        "dim": r.dim,
        "basis": _basis_rows(r),
        "abelian": rr.dim == 0,
        "derived_dim": rr.dim,
    }
    text = f"radical: dimension {r.dim} of {alg.dim}" + ("" if not r.dim else ("; abelian" if not rr.dim else f"; [R,R] has dimension {rr.dim}"))
    for row in result["basis"]:
        text += "\n  (" + ", ".join(row) + ")"
    return source, result, "radical = Killing-orthogonal complement of [L, L]", text, EXIT_OK


def _cmd_levi(args):
    alg, source = _load_algebra(args)
    s = levi_subalgebra(alg)
    r = radical(alg)
    result = {"dim": s.dim, "radical_dim": r.dim, "basis": _basis_rows(s)}
    text = f"Levi subalgebra: dimension {s.dim} (radical dimension {r.dim})"
    for row in result["basis"]:
        text += "\n  (" + ", ".join(row) + ")"
    return source, result, "Levi decomposition L = S + R", text, EXIT_OK


def _fmt_weight(w) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def _cmd_tensor(args):
    d = CartanDatum.parse(args.type)
    a, b = parse_weight(args.a), parse_weight(args.b)
    parts = tensor_decompose(d, a, b)
    comps = [{"highest_weight": list(w), "multiplicity": k, "dim": weyl_dim(d, w)} for w, k in parts.sorted_items()]
    result = {"components": comps, "dim": weyl_dim(d, a) * weyl_dim(d, b)}
    text = f"{_fmt_weight(a)} x {_fmt_weight(b)} = " + " + ".join(
        (f"{c['multiplicity']}*" if c["multiplicity"] > 1 else "") + _fmt_weight(c["highest_weight"]) for c in comps
    )
    source = {"type": str(d), "a": list(a), "b": list(b)}
    return source, result, "tensor product decomposition", text, EXIT_OK


def _cmd_quiver(args):
    d = CartanDatum.parse(args.type)
    module = parse_module(args.module)
    seed = parse_weight(args.seed) if args.seed is not None else (0,) * d.rank
    q = build_quiver(d, module, [seed], args.depth)
    dot = emit_dot(q)
    if args.dot:
        Path(args.dot).write_text(dot, encoding="utf-8")
    result = {
        "vertices": [list(w) for w in q.vertices],
        "arrows": [{"source": s, "target": t, "multiplicity": k} for (s, t), k in sorted(q.arrows.items())],
        "relations": [
            {"target": t, "source": s, "count": k} for t, lst in q.relations.items() for s, k in lst
        ],
        "boundary": sorted(q.boundary),
    }
    if args.dot:
        result["dot_file"] = args.dot
    text = dot if not args.dot else f"wrote {len(q.vertices)} vertices, {len(q.arrows)} arrow groups to {args.dot}"
    source = {"type": str(d), "module": args.module, "seed": list(seed), "depth": args.depth}
    return source, result, "arrows M -> N counted by the multiplicity of N in I (x) M", text, EXIT_OK


def _cmd_detect_wild(args):
    d = CartanDatum.parse(args.type)
    module = parse_module(args.module)
    w = detect_wild(d, module, args.window, disabled=args.disable or ())
    source = {"type": str(d), "module": args.module, "window": args.window}
    if w is None:
        return source, {"witness": None}, "no wildness rule fired", f"no rule fired within window {args.window}", EXIT_OK
    return source, {"witness": w.to_dict()}, w.rule.value, f"{w.rule.value} at {_fmt_weight(w.at_vertex)}: {w.detail}", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")

    p = _Parser(prog="lietame", description=__doc__.splitlines()[0], parents=[])
    p.add_argument("--json", action="store_true", default=False, help="emit one JSON object")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def algebra_cmd(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--input", help="algebra JSON document")
        sp.add_argument("--named", help="named recipe, e.g. 'semidirect(sl(2), 1)'")
        sp.set_defaults(func=func)

    algebra_cmd("classify", _cmd_classify, "tame class or wildness rule")
    algebra_cmd("radical", _cmd_radical, "solvable radical")
    algebra_cmd("levi", _cmd_levi, "a Levi subalgebra")

    sp = sub.add_parser("tensor", parents=[common], help="decompose a tensor product of irreducibles")
    sp.add_argument("--type", required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=_cmd_tensor)

    sp = sub.add_parser("quiver", parents=[common], help="window of the quiver K_I")
    sp.add_argument("--type", required=True)
    sp.add_argument("--module", required=True, help="highest weights of I joined by '+'")
    sp.add_argument("--seed", help="highest weight of the starting vertex (default: trivial)")
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--dot", help="write Graphviz output here")
    sp.set_defaults(func=_cmd_quiver)

    sp = sub.add_parser("detect-wild", parents=[common], help="search for a wildness witness")
    sp.add_argument("--type", required=True)
    sp.add_argument("--module", required=True)
    sp.add_argument("--window", type=int, default=8)
    sp.add_argument("--disable", action="append", choices=[r.value for r in Rule])
    sp.set_defaults(func=_cmd_detect_wild)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse writes usage/help to the process streams; route them to ours
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        source, result, rule, text, code = args.func(args)
    except (InputError, ParseError, ValidationError, BadRecipe, NonDominant, BadCartanType, ValueError) as exc:
        print(f"lietame {args.command}: {exc}", file=stderr)
        if args.json:
            print(json.dumps({"command": args.command, "error": str(exc)}), file=stdout)
        return EXIT_INPUT
    if args.json:
        print(json.dumps({"command": args.command, "input": source, "result": result, "paper_rule": rule}), file=stdout)
    else:
        print(text, file=stdout, end="" if text.endswith("\n") else "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
