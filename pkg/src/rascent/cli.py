"""Command-line front end.

Five subcommands tie the library together:

    enumerate   stream one family in lexicographic order
    count       count by several methods and cross-check them
    verify      run a named invariant suite
    gf          expand one of the four generating functions
    wilf        group patterns by their avoidance counts

Exit codes: 0 success, 1 verification or resource failure, 2 usage
error.  Output is deterministic: identical arguments give identical
bytes.  Plain lines are meant for people, JSONL for machines; CSV is
offered where the output is a table.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence

from .gentree import Rule, label_counts, level_totals
from .oracle import GF_NAMES, closed_form, expand_gf, fishburn
from .patterns import PATTERN_CAP, avoider_words, check_pattern, count_avoiders, wilf_classes
from .verify import SUITE_NAMES, run_suite
from .words import (
    CapExceededError,
    DEFAULT_CAP,
    Family,
    count_family,
    enumerate_family,
    format_word,
    parse_word,
)

MAX_ORDER = 64
WILF_PATTERN_CAP = 4

_FAMILY_TOKENS = tuple(f.value for f in Family)


def _family(token: str) -> Family:
    return Family(token)


def _pattern(text: str):
    pat = parse_word(text)
    check_pattern(pat)
    return pat


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rascent",
        description="Enumerate, count and cross-check ascent-sequence families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream one family, one word per line")
    p.add_argument("--family", choices=_FAMILY_TOKENS, default=Family.REVISED.value)
    p.add_argument("--n", type=int, required=True, help="word length")
    p.add_argument("--avoid", type=str, default=None, metavar="PATTERN")
    p.add_argument("--format", choices=("plain", "jsonl", "csv"), default="plain")
    p.add_argument("--cap-override", type=int, default=None, metavar="N")

    p = sub.add_parser("count", help="count words by brute force, tree DP, or closed form")
    p.add_argument("--family", choices=_FAMILY_TOKENS, default=Family.REVISED.value)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--avoid", type=str, default=None, metavar="PATTERN")
    p.add_argument("--method", type=str, default="brute",
                   help="comma-separated subset of brute,tree,oracle")
    p.add_argument("--no-check", action="store_true",
                   help="do not fail when methods disagree")
    p.add_argument("--dump-labels", action="store_true",
                   help="after counting with the tree method, dump label multiplicities per level")
    p.add_argument("--format", choices=("plain", "jsonl", "csv"), default="plain")
    p.add_argument("--cap-override", type=int, default=None, metavar="N")

    p = sub.add_parser("verify", help="run one invariant suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--format", choices=("plain", "jsonl"), default="plain")

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("--name", choices=GF_NAMES, required=True)
    p.add_argument("--order", type=int, default=10, help=f"highest power, at most {MAX_ORDER}")
    p.add_argument("--format", choices=("plain", "jsonl", "csv"), default="plain")

    p = sub.add_parser("wilf", help="group same-length patterns by avoidance counts")
    p.add_argument("--pattern-length", type=int, required=True)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--cap-override", type=int, default=None, metavar="N")
    return parser


def _cap(args: argparse.Namespace) -> int:
    value = getattr(args, "cap_override", None)
    return DEFAULT_CAP if value is None else value


def _cmd_enumerate(args: argparse.Namespace, out) -> int:
    family = _family(args.family)
    pattern = _pattern(args.avoid) if args.avoid else None
    if pattern is None:
        words = enumerate_family(args.n, family, cap=_cap(args))
    else:
        words = avoider_words(args.n, pattern, family, cap=_cap(args))
    if args.format == "csv":
        out.write("n,word\n")
    for w in words:
        text = format_word(w)
        if args.format == "jsonl":
            out.write(json.dumps({"n": args.n, "word": text}) + "\n")
        elif args.format == "csv":
            out.write(f"{args.n},{text}\n")
        else:
            out.write(text + "\n")
    return 0


def _tree_count(n: int, rule: Rule, totals: Sequence[int]) -> int:
    # trees start at length 2; the sole length-1 word sits above the root
    return 1 if n == 1 else totals[n - 2]


def _oracle_count(n: int, pattern) -> int | None:
    if pattern is None:
        return 1 if n == 1 else fishburn(n - 1)[n - 2]
    return closed_form(pattern, n)


def _cmd_count(args: argparse.Namespace, out) -> int:
    family = _family(args.family)
    pattern = _pattern(args.avoid) if args.avoid else None
    methods = tuple(m.strip() for m in args.method.split(",") if m.strip())
    if not methods or any(m not in ("brute", "tree", "oracle") for m in methods):
        raise _Usage(f"--method must name brute, tree or oracle, got {args.method!r}")
    if "tree" in methods:
        if family is not Family.REVISED:
            raise _Usage("the tree method only counts the revised family")
        if pattern is not None and pattern != (1, 2, 3):
            raise _Usage("the tree method supports no pattern or --avoid 123")
    if "oracle" in methods and family is not Family.REVISED:
        raise _Usage("closed forms only cover the revised family")
    if args.dump_labels and ("tree" not in methods or args.format != "plain"):
        raise _Usage("--dump-labels needs the tree method and plain format")
    if args.n_max < 1:
        raise _Usage("--n-max must be positive")

    cap = _cap(args)
    if "brute" in methods and args.n_max > cap:
        raise CapExceededError(f"length {args.n_max} exceeds cap {cap}")
    rule = Rule.FULL if pattern is None else Rule.AVOID123
    totals = level_totals(rule, args.n_max - 1) if "tree" in methods and args.n_max >= 2 else ()

    rows: list[tuple[int, str, int]] = []
    for n in range(1, args.n_max + 1):
        if "brute" in methods:
            if pattern is None:
                rows.append((n, "brute", count_family(n, family, cap=cap)))
            else:
                rows.append((n, "brute", count_avoiders(n, pattern, family, cap=cap)))
        if "tree" in methods:
            rows.append((n, "tree", _tree_count(n, rule, totals)))
        if "oracle" in methods:
            value = _oracle_count(n, pattern)
            if value is not None:
                rows.append((n, "oracle", value))

    agree: dict[int, bool] = {}
    for n in range(1, args.n_max + 1):
        agree[n] = len({c for rn, _, c in rows if rn == n}) <= 1

    if args.format == "csv":
        out.write("n,method,count\n")
        for n, method, count in rows:
            out.write(f"{n},{method},{count}\n")
    elif args.format == "jsonl":
        for n, method, count in rows:
            out.write(json.dumps({"n": n, "method": method, "count": str(count)}) + "\n")
        for n in sorted(agree):
            if sum(1 for rn, _, _ in rows if rn == n) > 1:
                out.write(json.dumps({"n": n, "pass": agree[n]}) + "\n")
    else:
        for n in range(1, args.n_max + 1):
            parts = [f"{method}={count}" for rn, method, count in rows if rn == n]
            ran = sum(1 for rn, _, _ in rows if rn == n)
            suffix = "" if ran <= 1 else ("  ok" if agree[n] else "  MISMATCH")
            out.write(f"n={n}  " + "  ".join(parts) + suffix + "\n")

    if args.dump_labels:
        for lc in label_counts(rule, max(args.n_max - 1, 1)):
            terms = " ".join(f"{a},{b}:{c}" for (a, b), c in sorted(lc.counts.items()))
            out.write(f"level {lc.level}: {terms}\n")

    if not args.no_check and not all(agree.values()):
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace, out) -> int:
    if args.n_max < 1:
        raise _Usage("--n-max must be positive")
    checks = run_suite(args.suite, args.n_max)
    failed = False
    for c in checks:
        failed = failed or not c.passed
        if args.format == "jsonl":
            record = {"suite": c.suite, "property": c.name, "pass": c.passed,
                      "counterexample": c.counterexample}
            out.write(json.dumps(record) + "\n")
        else:
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark}  {c.suite}.{c.name}  [{c.scope}]"
            if c.counterexample:
                line += f"  counterexample: {c.counterexample}"
            out.write(line + "\n")
    return 1 if failed else 0


def _cmd_gf(args: argparse.Namespace, out) -> int:
    if not 1 <= args.order <= MAX_ORDER:
        raise _Usage(f"--order must lie in 1..{MAX_ORDER}")
    coeffs = expand_gf(args.name, args.order)
    if args.format == "jsonl":
        for k, c in enumerate(coeffs, start=1):
            out.write(json.dumps({"n": k, "count": str(c)}) + "\n")
    elif args.format == "csv":
        out.write("n,count\n")
        for k, c in enumerate(coeffs, start=1):
            out.write(f"{k},{c}\n")
    else:
        out.write(" ".join(str(c) for c in coeffs) + "\n")
    return 0


def _cmd_wilf(args: argparse.Namespace, out) -> int:
    if not 1 <= args.pattern_length <= WILF_PATTERN_CAP:
        raise _Usage(f"--pattern-length must lie in 1..{WILF_PATTERN_CAP}")
    if args.n_max < 1:
        raise _Usage("--n-max must be positive")
    cap = _cap(args)
    if args.n_max > cap:
        raise CapExceededError(f"length {args.n_max} exceeds cap {cap}")
    report = wilf_classes(args.pattern_length, args.n_max, cap=cap)
    document = {
        "pattern_length": report.pattern_length,
        "n_max": report.n_max,
        "status": "conjectural up to n_max",
        "classes": [
            {
                "patterns": [format_word(p) for p in cls.patterns],
                "counts": [str(c) for c in cls.counts],
            }
            for cls in report.classes
        ],
    }
    out.write(json.dumps(document, indent=2) + "\n")
    return 0


class _Usage(Exception):
    """Bad arguments detected after argparse; maps to exit code 2."""


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "gf": _cmd_gf,
    "wilf": _cmd_wilf,
}


def main(argv: Iterable[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    handler = _HANDLERS[args.command]
    try:
        return handler(args, sys.stdout)
    except _Usage as exc:
        print(f"rascent {args.command}: {exc}", file=sys.stderr)
        return 2
    except (CapExceededError, ValueError) as exc:
        print(f"rascent {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
