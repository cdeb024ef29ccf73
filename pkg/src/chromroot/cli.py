"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import known
from .beraha import beraha_profile, golden_identity_check
from .errors import ChromrootError, ClassificationGap, NotTriangulationCandidate
from .graph import chromatic_polynomial, parse_edge_list
from .poly import IntPoly
from .search import run_search
from .twoterminal import eval_construction, parse_construction
from .verify import verify_paper

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(p: IntPoly, fmt: str) -> str:
    return p.to_machine() if fmt == "machine" else p.pretty()


def _read_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_edge_list(text)


def known_factors(p: IntPoly, max_root: int) -> list[tuple[IntPoly, int]]:
    """Trial division by q - k for 0 <= k <= max_root and by the two Beraha quadratics."""
    found = []
    candidates = [IntPoly((-k, 1)) for k in range(max_root + 1)] + [known.B5_MINPOLY, known.B10_MINPOLY]
    for f in candidates:
        mult, rest = 0, p
        while not rest.is_zero:
            try:
                rest = rest // f
            except ArithmeticError:
                break
            mult += 1
        if mult:
            found.append((f, mult))
    return found


def _factor_text(f: IntPoly, mult: int) -> str:
    body = f.pretty()
    if mult == 1:
        return body
    return f"({body})^{mult}"


def cmd_chromatic(args) -> int:
    g = _read_graph(args.path)
    p = chromatic_polynomial(g)
    print(_emit(p, args.format))
    if args.known_factors:
        if p.is_zero:
            print("known factors: none (zero polynomial)")
        else:
            found = known_factors(p, g.n)
            print("known factors: " + (", ".join(_factor_text(f, m) for f, m in found) or "none"))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = verify_paper(known.G1_EDGES, known.G2_EDGES)
    for r in results:
        print(r.line())
        for d in r.details:
            print(d)
    ok = all(r.ok for r in results)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_beraha(args) -> int:
    if args.scan is not None:
        indices = range(1, args.scan + 1)
        if args.scan < 1:
            raise UsageError("--scan needs N >= 1")
    elif args.n is not None:
        if args.n < 1:
            raise UsageError("Beraha index must be >= 1")
        indices = [args.n]
    else:
        raise UsageError("give an index n or --scan N")
    for n in indices:
        print(beraha_profile(n).to_line())
    return EXIT_OK


def cmd_compose(args) -> int:
    p = eval_construction(parse_construction(args.expr))
    print(f"S={_emit(p.S, args.format)}")
    print(f"D={_emit(p.D, args.format)}")
    print(f"P={_emit(p.total(), args.format)}")
    return EXIT_OK


def cmd_golden(args) -> int:
    g = _read_graph(args.path)
    try:
        r = golden_identity_check(g)
    except NotTriangulationCandidate as exc:
        raise UsageError(str(exc)) from None
    print(f"holds={'yes' if r.holds else 'no'}; lhs={r.lhs.a} {r.lhs.b}; rhs={r.rhs.a} {r.rhs.b}")
    print("note: only the edge count 3n-6 was checked, not planarity")
    return EXIT_OK if r.holds else EXIT_FAILED


def parse_hosts(text: str) -> list[int]:
    """'5..8', '5,6' or '6'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError("no hosts given")
    return out


def cmd_search(args) -> int:
    try:
        hosts = parse_hosts(args.hosts)
        target = IntPoly.parse(args.target)
    except ValueError as exc:
        raise UsageError(f"bad search parameters: {exc}") from None
    if args.max_edges < 1:
        raise UsageError("--max-edges must be >= 1")
    extra = [parse_construction(x) for x in args.extra_leaf]
    try:
        hits = run_search(hosts, args.max_edges, target, workers=args.workers, extra_leaves=extra)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for h in hits:
        print(h.to_line())
    print(f"# {len(hits)} hits", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromroot",
        description="Exact chromatic polynomials, two-terminal composition and Beraha-number checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", help="chromatic polynomial of an edge-list file")
    p.add_argument("path")
    p.add_argument("--format", choices=("machine", "pretty"), default="machine")
    p.add_argument("--known-factors", action="store_true", help="report linear and Beraha-quadratic factors")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify-paper", help="recompute G1, G2, the Beraha scan and the Golden Identity checks")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("beraha", help="Beraha profile line(s)")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--scan", type=int, metavar="N", help="profiles for 1..N")
    p.set_defaults(func=cmd_beraha)

    p = sub.add_parser("compose", help="evaluate a series-parallel construction expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=("machine", "pretty"), default="machine")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("golden", help="check the Golden Identity on a triangulation edge list")
    p.add_argument("path")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("search", help="gadget-replacement search over Kme(n) hosts")
    p.add_argument("--hosts", required=True, help="e.g. 5..6 or 5,6")
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--target", required=True, help='ascending coefficients, e.g. "5 -5 1"')
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--extra-leaf", action="append", default=[], metavar="EXPR", help="also use K(n)/Kme(n) leaves")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ClassificationGap as exc:
        print(f"chromroot: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, ChromrootError) as exc:
        print(f"chromroot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
