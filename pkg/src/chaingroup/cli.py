"""Command-line front end.

Exit status: 0 on success or PASS/SKIPPED, 1 if any checker reports FAIL,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import inspect
import os
import sys

from . import __version__
from .census import DEFAULT_SEED, FAIL, REGISTRY, run_census, verify_theorem
from .classify import chain_group, identify
from .errors import ChainGroupError
from .forest import format_forest, make_family, maximal_paths, parse_family, parse_forest
from .perm import DEFAULT_CAP
from .report import FORMATS, GroupSummary, render_census, render_group, render_paths, render_results


class UsageError(ChainGroupError):
    pass


def _read_forest(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_forest(text)


def _seed(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="element cap for brute-force enumeration (default %(default)s)")

    parser = argparse.ArgumentParser(prog="chaingroup", description="Chain groups of labeled forests.")
    parser.add_argument("--version", action="version", version=f"chaingroup {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="list maximal paths of a forest file")
    p.add_argument("file")

    p = sub.add_parser("group", parents=[common], help="compute and classify the chain group")
    p.add_argument("file")

    p = sub.add_parser("make", help="emit the forest file of a named family")
    p.add_argument("family", help="path | star | antenna | spider | maxabelian | odd-distance | union")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")

    p = sub.add_parser("census", parents=[common], help="tally chain-group classes over all forests on [n]")
    p.add_argument("n", type=int)
    p.add_argument("--parallelism", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("verify", parents=[common], help="run a theorem checker, or 'all'")
    p.add_argument("theorem", help="checker id such as T-DIHEDRAL, or 'all'")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--samples", type=int)
    p.add_argument("--constructed", action="store_true", help="T-LENGTH2: the 12-vertex instance")
    p.add_argument("--hypothesis", choices=("odd", "even"), help="T-NCYCLE leaf-distance parity")
    p.add_argument("--max-n", type=int, dest="max_n", help="raise the census limit (at most 8)")
    p.add_argument("--timing", action="store_true", help="include elapsed times")
    return parser


def _param_sets(theorem: str, given: dict) -> list[dict]:
    checker = REGISTRY[theorem]
    accepted = inspect.signature(checker.func).parameters
    given = {k: v for k, v in given.items() if k in accepted}
    keys = {k for k in given if any(k in d for d in checker.defaults)}
    matches = [d for d in checker.defaults if all(d.get(k) == given[k] for k in keys)]
    if "constructed" in given:
        matches = [d for d in matches if d.get("constructed")]
    extra = {k: v for k, v in given.items() if k not in keys}
    if matches:
        return [{**d, **extra} for d in matches]
    return [given]


def cmd_verify(args) -> int:
    if args.theorem != "all" and args.theorem not in REGISTRY:
        raise UsageError(f"unknown theorem {args.theorem!r}; known: all, {', '.join(REGISTRY)}")
    given = {"n": args.n, "p": args.p, "r": args.r, "samples": args.samples,
             "hypothesis": args.hypothesis, "max_n": args.max_n}
    given = {k: v for k, v in given.items() if v is not None}
    if args.cap != DEFAULT_CAP:
        given["cap"] = args.cap
    given["seed"] = args.seed
    if args.constructed:
        given["constructed"] = True
    theorems = list(REGISTRY) if args.theorem == "all" else [args.theorem]
    results = []
    for tid in theorems:
        for params in _param_sets(tid, given):
            results.append(verify_theorem(tid, **params))
    sys.stdout.write(render_results(results, args.format, seed=args.seed, timing=args.timing))
    return 1 if any(r.status == FAIL for r in results) else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "paths":
            sys.stdout.write(render_paths(maximal_paths(_read_forest(args.file))))
            return 0
        if args.command == "group":
            f = _read_forest(args.file)
            g = chain_group(f)
            sys.stdout.write(render_group(GroupSummary(f, g, identify(g, args.cap)), args.format))
            return 0
        if args.command == "make":
            text = format_forest(make_family(parse_family([args.family, *args.params])))
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "census":
            report = run_census(args.n, args.parallelism, args.cap)
            sys.stdout.write(render_census(report, args.format))
            return 0
        if args.command == "verify":
            return cmd_verify(args)
    except ChainGroupError as exc:
        print(f"chaingroup: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
