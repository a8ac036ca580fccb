"""Command-line entry point: ``rainbow-turan <subcommand> ...``.

Every subcommand writes one JSON object to standard output (``scaling``
prints a table unless ``--json`` is given).  The object carries a
``manifest`` echoing the subcommand, its flags and the package version.

Exit codes: 0 success, 2 invalid input, 3 budget exhausted, 4 internal
invariant failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from importlib import metadata
from pathlib import Path
from typing import Optional

from . import cge
from .census import SearchBudgetExceeded, count_copies, find_rainbow_copy, run_census
from .constructions import FAMILIES, ConstructionError, ConstructionSpec
from .graph import validate_proper
from .lemma import LemmaInstance, NotFound, check_path, find_rainbow_alternating_path, random_instance
from .oracle import SearchBudget, Status, exact_extremal, fit_exponent, p4_characterize
from .patterns import parse_pattern

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4


def version() -> str:
    try:
        return metadata.version("rainbow-turan")
    except metadata.PackageNotFoundError:  # pragma: no cover - running from a source tree
        return "0+unknown"


@dataclass
class RunManifest:
    subcommand: str
    flags: dict
    inputs: list = field(default_factory=list)
    outputs: list = field(default_factory=list)
    seed: Optional[int] = None
    version: str = field(default_factory=version)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunManifest":
        flags = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "input", "out")}
        inputs = [args.input] if getattr(args, "input", None) else []
        outputs = [args.out] if getattr(args, "out", None) else []
        if getattr(args, "emit_dot", None):
            outputs.append(args.emit_dot)
        return cls(args.command, flags, inputs, outputs, args.seed)


class _InputError(Exception):
    pass


def _emit(obj: dict, manifest: RunManifest) -> None:
    obj = dict(obj, manifest=asdict(manifest))
    print(json.dumps(obj, sort_keys=True))


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _load(path: str):
    try:
        return cge.read(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> ConstructionSpec:
    return ConstructionSpec(args.family, k=args.k, r=args.r, pattern=args.pattern, n_target=args.n, b=args.b)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args, manifest):
    spec = _spec(args)
    g = spec.build()
    header = {"provenance": spec.provenance(), "manifest": asdict(manifest)}
    text = cge.dumps(g, header)
    if args.emit_dot:
        Path(args.emit_dot).write_text(cge.to_dot(g))
    out = {"provenance": spec.provenance(), "n": g.n, "m": g.m, "palette_size": g.palette_size}
    if args.out:
        Path(args.out).write_text(text)
        _emit(out, manifest)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_count(args, manifest):
    g = _load(args.input)
    h = _pattern(args.pattern)
    rep = run_census(g, h, rainbow=not args.no_rainbow, max_nodes=args.max_nodes, threads=args.threads)
    d = rep.to_dict()
    if not args.timing:
        d.pop("millis")
    _emit(d, manifest)
    return EXIT_OK


def cmd_rainbow_check(args, manifest):
    g = _load(args.input)
    h = _pattern(args.pattern)
    w = find_rainbow_copy(g, h, max_nodes=args.max_nodes)
    _emit({
        "pattern": h.name,
        "proper": not validate_proper(g),
        "rainbow_found": w is not None,
        "witness_vertices": list(w.vertices) if w else None,
        "witness_edges": [list(e) for e in w.edges] if w else None,
    }, manifest)
    return EXIT_OK


def cmd_oracle(args, manifest):
    budget = SearchBudget(args.max_graphs, args.max_coloring_nodes, not args.no_dedupe, args.time_limit)
    res = exact_extremal(args.n, _pattern(args.h), _pattern(args.f), budget)
    _emit(res.to_dict(), manifest)
    return EXIT_OK if res.status is Status.EXACT else EXIT_BUDGET


def cmd_characterize(args, manifest):
    g = _load(args.input)
    v = p4_characterize(g.uncolored())
    _emit({
        "colorable": v.colorable,
        "reason": v.reason,
        "component": v.component,
        "witness_cge": cge.dumps(v.coloring) if v.coloring is not None else None,
    }, manifest)
    return EXIT_OK


def cmd_lemma(args, manifest):
    if args.random_k is not None:
        inst = random_instance(args.random_k, random.Random(args.seed))
    else:
        if not args.input or args.anchors is None:
            raise _InputError("lemma needs an input graph and --anchors, or --random-k")
        inst = LemmaInstance(_load(args.input), tuple(args.anchors), frozenset(args.U or ()), frozenset(args.A or ()))
    base = {"k": inst.k, "precondition": inst.precondition_holds, "required_common": inst.required_common,
            "deficits": [list(d) for d in inst.deficits()]}
    try:
        p = find_rainbow_alternating_path(inst, best_effort=args.best_effort, strict_bound=not args.lenient)
    except NotFound as exc:
        _emit(dict(base, found=False, stuck_index=exc.stuck_index, message=str(exc)), manifest)
        return EXIT_OK
    problems = check_path(inst, p)
    if problems:
        raise AssertionError(f"returned path is invalid: {problems}")
    _emit(dict(base, found=True, path=list(p.vertices), colors=list(p.colors),
               forbidden_counts=list(p.forbidden_counts), backtracked=p.backtracked), manifest)
    return EXIT_OK


def cmd_scaling(args, manifest):
    rows = []
    for n in args.n:
        spec = ConstructionSpec(args.family, k=args.k, r=args.r, pattern=args.pattern, n_target=n, b=None)
        g = spec.build()
        h = _pattern(args.count) if args.count else spec.target_pattern()
        rows.append({"n_target": n, "vertices": g.n, "count": count_copies(g, h, threads=args.threads)})
    fit = fit_exponent([(r["n_target"], r["count"]) for r in rows])
    fit_v = fit_exponent([(r["vertices"], r["count"]) for r in rows])
    if args.json:
        _emit({"family": FAMILIES[args.family], "rows": rows, "slope": fit.slope, "residual": fit.residual,
               "slope_vs_vertices": fit_v.slope}, manifest)
    else:
        print(f"{'n':>8} {'vertices':>9} {'count':>12}")
        for r in rows:
            print(f"{r['n_target']:>8} {r['vertices']:>9} {r['count']:>12}")
        print(f"slope {fit.slope:.4f} (residual {fit.residual:.2e}); against vertex count {fit_v.slope:.4f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _family_args(p):
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--pattern", help="pattern literal for the component and tree families")
    p.add_argument("--b", type=int, help="explicit blow-up size")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rainbow-turan", description="Rainbow Turan constructions, census and oracle.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized modes")
    common.add_argument("--threads", type=int, default=1, help="worker processes for counting")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("construct", help="build a colored construction and write it as CGE")
    p.add_argument("family", choices=sorted(FAMILIES))
    _family_args(p)
    p.add_argument("--n", type=int, help="target vertex count")
    p.add_argument("--out", help="CGE output path (default: standard output)")
    p.add_argument("--emit-dot", help="also write a DOT rendering here")
    p.set_defaults(func=cmd_construct)

    for name, func, helptext in (("count", cmd_count, "count copies of a pattern"),
                                 ("rainbow-check", cmd_rainbow_check, "look for a rainbow copy")):
        p = add(name, help=helptext)
        p.add_argument("input")
        p.add_argument("--pattern", required=True)
        p.add_argument("--max-nodes", type=int)
        if name == "count":
            p.add_argument("--no-rainbow", action="store_true", help="skip the rainbow search")
            p.add_argument("--timing", action="store_true", help="include wall-clock time")
        p.set_defaults(func=func)

    p = add("oracle", help="exact extremal value on tiny n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--max-graphs", type=int)
    p.add_argument("--max-coloring-nodes", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--no-dedupe", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = add("characterize", help="decide rainbow-P4-free colorability by components")
    p.add_argument("input")
    p.set_defaults(func=cmd_characterize)

    p = add("lemma", help="greedy rainbow alternating path through anchors")
    p.add_argument("input", nargs="?")
    p.add_argument("--anchors", type=_int_list)
    p.add_argument("--U", type=_int_list, help="forbidden vertices")
    p.add_argument("--A", type=_int_list, help="forbidden colors")
    p.add_argument("--best-effort", action="store_true")
    p.add_argument("--lenient", action="store_true", help="do not enforce the forbidden-count bound")
    p.add_argument("--random-k", type=int, help="run on a random instance with this many anchors (uses --seed)")
    p.set_defaults(func=cmd_lemma)

    p = add("scaling", help="construct and count over several n, then fit an exponent")
    p.add_argument("family", choices=sorted(FAMILIES))
    _family_args(p)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated target sizes")
    p.add_argument("--count", help="pattern to count (default: the family's target)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scaling)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        ap.error("--threads must be at least 1")
    manifest = RunManifest.from_args(args)
    try:
        return args.func(args, manifest)
    except (_InputError, ConstructionError, cge.CGEFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBudgetExceeded as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
