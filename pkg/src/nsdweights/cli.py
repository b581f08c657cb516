"""Command-line front end.

Exit codes: 0 the graph has the property (or the check passed), 1 it lacks it
(or the check failed), 2 undecided within the oracle budget, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cactus import cactus_pattern_weighting, parse_recipe, random_recipe, build_from_recipe, recognize
from .classify import classify
from .constructions import actual_claim, construct, format_spec, parse_spec
from .crosscheck import FAMILIES as CHECK_FAMILIES
from .crosscheck import run_crosscheck
from .errors import BudgetExceeded, GraphError
from .generators import FAMILIES, generate_family
from .graph import MultiGraph, parse_edge_list, serialize_edge_list, to_dot
from .oracle import DEFAULT_BUDGET
from .parity import f_factor_mod2, local_max_weighting, parity_proper_weighting
from .weighting import WeightPair, conflicts, parse_weighting, serialize_weighting, weighted_degrees

HAS, LACKS, UNKNOWN, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _pair(text: str) -> WeightPair:
    try:
        a, b = (int(x) for x in text.split(","))
        return WeightPair(a, b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two distinct integers 'a,b', got {text!r}") from None


def _increments(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    if not text:
        return out
    try:
        for item in text.split(","):
            v, k = item.split("=")
            out[int(v)] = out.get(int(v), 0) + int(k)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'v=k,...', got {text!r}") from None
    return out


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _graph(path: str | None) -> MultiGraph:
    return parse_edge_list(_read(path))


def _emit(record: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        json.dump(record, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    for key, value in record.items():
        if value is None or (isinstance(value, list) and not value):
            continue
        if isinstance(value, bool):
            value = str(value).lower()
        if isinstance(value, (list, tuple)) and all(isinstance(x, int) for x in value):
            value = ",".join(map(str, value))
        if isinstance(value, str) and "\n" in value.strip():
            out.write(f"{key}:\n")
            for line in value.strip().splitlines():
                out.write(f"  {line}\n")
        elif isinstance(value, list):
            out.write(f"{key}:\n")
            for item in value:
                out.write(f"  {item}\n")
        else:
            out.write(f"{key}: {value}\n")


# subcommands


def cmd_classify(args) -> int:
    g = _graph(args.graph)
    try:
        v = classify(g, args.pair, args.budget, args.seed)
    except BudgetExceeded as exc:
        _emit({"pair": [args.pair.a, args.pair.b], "has_property": "unknown", "notes": [str(exc)]}, args.json)
        return UNKNOWN
    rec = v.record()
    if v.has_property is None:
        rec["has_property"] = "unknown"
    _emit(rec, args.json)
    if v.has_property is None:
        return UNKNOWN
    return HAS if v.has_property else LACKS


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    w = parse_weighting(_read(args.weighting), g, args.inc)
    if args.pair is not None and tuple(args.pair) != tuple(w.pair):
        raise InputError(f"weighting uses pair {w.pair.a},{w.pair.b}, not {args.pair.a},{args.pair.b}")
    rep = conflicts(w)
    deg = weighted_degrees(w)
    rec = {
        "proper": rep.proper,
        "degrees": deg,
        "conflicts": [f"{u} {v} {deg[u]}" for u, v in rep.conflicts],
    }
    _emit(rec, args.json)
    return HAS if rep.proper else LACKS


def _check_expect(g: MultiGraph, expect: str, built=None) -> None:
    if built is not None:
        got = actual_claim(built)
        want = {"bad": ("bad",), "minus": ("minus",)}.get(expect)
        if want is None:
            a, b = (int(x) for x in expect.split(","))
            want = ("pair", a, b)
        if got is None:
            raise InputError("status could not be decided within the oracle budget")
        if got != want:
            raise InputError(f"self-check failed: expected {want}, constructed graph is {got}")
        return
    if expect not in ("bad", "good"):
        raise InputError("for families --expect takes 'bad' or 'good'")
    v = classify(g)
    if v.has_property is None:
        raise InputError("status could not be decided within the oracle budget")
    got = "good" if v.has_property else "bad"
    if got != expect:
        raise InputError(f"self-check failed: expected {expect}, graph is {got}")


def cmd_generate(args) -> int:
    built = None
    if args.spec is not None:
        spec = parse_spec(args.spec)
        built = construct(spec)
        g = built.graph
    elif args.recipe is not None:
        g = build_from_recipe(parse_recipe(_read(args.recipe)))
    elif args.family == "omc":
        g = build_from_recipe(random_recipe(args.seed))
    elif args.family is not None:
        try:
            g = generate_family(args.family, args.n, args.m, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        raise InputError("give --family, --spec or --recipe")
    if args.expect:
        _check_expect(g, args.expect, built)
    if built is not None and not args.json and not args.dot:
        sys.stdout.write(f"# {format_spec(parse_spec(args.spec))}\n# vertex {built.vertex}\n")
    if args.dot:
        sys.stdout.write(to_dot(g))
    elif args.json:
        _emit({"n": g.n, "edges": [[u, v, k] for (u, v), k in g.items()]}, True)
    else:
        sys.stdout.write(serialize_edge_list(g))
    return HAS


def cmd_factor(args) -> int:
    g = _graph(args.graph)
    if args.target is not None:
        try:
            target = [int(x) for x in args.target.split(",")]
        except ValueError:
            raise InputError("--target takes comma-separated parities") from None
        chosen = sorted(f_factor_mod2(g, target))
        _emit({"copies": [f"{u} {v} {c}" for u, v, c in chosen]}, args.json)
        return HAS
    if args.local_max is not None:
        w = local_max_weighting(g, args.local_max)
    elif args.pattern is not None:
        w = cactus_pattern_weighting(g, args.pattern)
    else:
        w = parity_proper_weighting(g, pair=args.pair or WeightPair(0, 1))
    if args.json:
        _emit({"weighting": serialize_weighting(w), "degrees": weighted_degrees(w)}, True)
    else:
        sys.stdout.write(serialize_weighting(w))
    return HAS


def cmd_recognize(args) -> int:
    g = _graph(args.graph)
    cert = recognize(g)
    _emit({"odd_multicactus": cert is not None,
           "certificate": cert.serialize() if cert is not None else None}, args.json)
    return HAS if cert is not None else LACKS


def cmd_crosscheck(args) -> int:
    rep = run_crosscheck(
        args.family, max_n=args.max_n, count=args.count, max_copies=args.max_copies,
        seed=args.seed, pair=tuple(args.pair or (0, 1)), workers=args.workers,
    )
    rec = rep.record()
    if not args.json:
        rec["details"] = [json.dumps(d, sort_keys=True) for d in rep.disagreements]
    _emit(rec, args.json)
    return HAS if rep.ok else LACKS


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pair", type=_pair, default=None, help="weights a,b (default 0,1)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle budget in edge copies")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="emit one JSON document")

    p = _Parser(prog="nsdweights", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="decide the {a,b}-property")
    c.add_argument("graph", nargs="?", help="edge-list file (default stdin)")
    c.set_defaults(run=cmd_classify)

    v = sub.add_parser("verify", parents=[common], help="check a weighting for conflicts")
    v.add_argument("graph")
    v.add_argument("weighting")
    v.add_argument("--inc", type=_increments, default=None, help="degree increments v=k,...")
    v.set_defaults(run=cmd_verify)

    gsub = sub.add_parser("generate", parents=[common], help="emit a graph")
    gsub.add_argument("--family", choices=FAMILIES + ("omc",))
    gsub.add_argument("--n", type=int, default=0)
    gsub.add_argument("--m", type=int, default=0)
    gsub.add_argument("--spec", help="construction in s-expression form")
    gsub.add_argument("--recipe", help="odd multi-cactus recipe file")
    gsub.add_argument("--expect", help="bad, good, minus or s,t; checked before output")
    gsub.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")
    gsub.set_defaults(run=cmd_generate)

    f = sub.add_parser("factor", parents=[common], help="parity constructions")
    f.add_argument("graph", nargs="?")
    mode = f.add_mutually_exclusive_group()
    mode.add_argument("--target", help="f-factor modulo 2 with comma-separated parities")
    mode.add_argument("--local-max", type=int, metavar="W0", help="weighting around a local maximum")
    mode.add_argument("--pattern", type=int, metavar="V", help="degree-pattern weighting of an odd multi-cactus")
    f.set_defaults(run=cmd_factor)

    r = sub.add_parser("recognize", parents=[common], help="odd multi-cactus certificate")
    r.add_argument("graph", nargs="?")
    r.set_defaults(run=cmd_recognize)

    x = sub.add_parser("crosscheck", parents=[common], help="compare procedures with the oracle")
    x.add_argument("--family", choices=CHECK_FAMILIES, required=True)
    x.add_argument("--max-n", type=int, default=10)
    x.add_argument("--count", type=int, default=200)
    x.add_argument("--max-copies", type=int, default=18)
    x.add_argument("--workers", type=int, default=1)
    x.set_defaults(run=cmd_crosscheck)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    if args.command == "classify" and args.pair is None:
        args.pair = WeightPair(0, 1)
    try:
        return args.run(args)
    except BudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return UNKNOWN
    except (GraphError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
