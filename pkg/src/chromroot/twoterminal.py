"""Two-terminal graphs: the [same, different] split of the chromatic polynomial.

For a graph with terminals s, t the pair [S, D] counts colourings where s and t
get the same colour (S) or different colours (D).  Series and parallel
connection act on these pairs by the composition rules below, which lets the
chromatic polynomial of a series-parallel construction be read off without
ever building the graph.

Construction expressions use ``*`` for series and ``|`` for parallel, with
``*`` binding tighter:

    >>> total_chromatic(eval_construction(parse_construction("edge*edge | edge*edge"))).coeffs
    (0, -3, 6, -4, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import ArityError, ConstructionSyntaxError
from .graph import Graph, TerminalPair, chromatic_polynomial
from .poly import IntPoly, Q, exact_div, falling_factorial

__all__ = [
    "PartitionedPoly",
    "Edge",
    "K",
    "Kme",
    "Series",
    "Parallel",
    "ConstructionExpr",
    "partitioned_from_graph",
    "parallel_compose",
    "series_compose",
    "total_chromatic",
    "parse_construction",
    "eval_construction",
    "realize_graph",
    "to_text",
    "leaf_count",
]

Q2 = falling_factorial(2)
_Q_MINUS_2 = IntPoly((-2, 1))


@dataclass(frozen=True)
class PartitionedPoly:
    S: IntPoly
    D: IntPoly

    def total(self) -> IntPoly:
        return self.S + self.D

    def satisfies_divisibility(self) -> bool:
        try:
            exact_div(self.S, Q)
            exact_div(self.D, Q2)
        except ArithmeticError:
            return False
        return True

    def __iter__(self):
        return iter((self.S, self.D))


def partitioned_from_graph(g: Graph, tp: TerminalPair) -> PartitionedPoly:
    """S from merging the terminals, D from joining them."""
    tp = TerminalPair(*tp)
    tp.validate(g)
    s, t = tp
    S = chromatic_polynomial(g.contract(s, t))
    D = chromatic_polynomial(g.add_edge(s, t))
    return PartitionedPoly(S, D)


def parallel_compose(a: PartitionedPoly, b: PartitionedPoly) -> PartitionedPoly:
    S = exact_div(a.S * b.S, Q)
    D = exact_div(a.D * b.D, Q2)
    return PartitionedPoly(S, D)


def series_compose(a: PartitionedPoly, b: PartitionedPoly) -> PartitionedPoly:
    ss = exact_div(a.S * b.S, Q)
    dd = exact_div(a.D * b.D, Q2)
    ds = exact_div(a.D * b.S, Q)
    sd = exact_div(a.S * b.D, Q)
    return PartitionedPoly(ss + dd, _Q_MINUS_2 * dd + ds + sd)


def total_chromatic(p: PartitionedPoly) -> IntPoly:
    return p.S + p.D


# ---------------------------------------------------------------------------
# construction expressions


@dataclass(frozen=True)
class Edge:
    pass


@dataclass(frozen=True)
class K:
    """Complete graph with two (adjacent) vertices as terminals."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ArityError(f"K({self.n}) needs n >= 2")


@dataclass(frozen=True)
class Kme:
    """Complete graph minus one edge; the ends of the missing edge are the terminals."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ArityError(f"Kme({self.n}) needs n >= 2")


@dataclass(frozen=True)
class Series:
    left: "ConstructionExpr"
    right: "ConstructionExpr"


@dataclass(frozen=True)
class Parallel:
    left: "ConstructionExpr"
    right: "ConstructionExpr"


ConstructionExpr = Union[Edge, K, Kme, Series, Parallel]


def to_text(e: ConstructionExpr) -> str:
    """Render with the minimum number of parentheses; round-trips through the parser."""
    if isinstance(e, Edge):
        return "edge"
    if isinstance(e, K):
        return f"K({e.n})"
    if isinstance(e, Kme):
        return f"Kme({e.n})"
    if isinstance(e, Series):
        left = to_text(e.left)
        right = to_text(e.right)
        if isinstance(e.left, Parallel):
            left = f"({left})"
        if isinstance(e.right, (Parallel, Series)):
            right = f"({right})"
        return f"{left}*{right}"
    left = to_text(e.left)
    right = to_text(e.right)
    if isinstance(e.right, Parallel):
        right = f"({right})"
    return f"{left}|{right}"


def leaf_count(e: ConstructionExpr) -> int:
    if isinstance(e, (Series, Parallel)):
        return leaf_count(e.left) + leaf_count(e.right)
    return 1


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.raw = text.encode("utf-8")
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.raw) and self.raw[self.pos : self.pos + 1].isspace():
            self.pos += 1

    def peek(self) -> bytes:
        self.skip_ws()
        return self.raw[self.pos : self.pos + 1]

    def fail(self, msg: str):
        raise ConstructionSyntaxError(msg, self.pos)

    def expect(self, tok: bytes):
        self.skip_ws()
        if not self.raw.startswith(tok, self.pos):
            what = self.raw[self.pos : self.pos + 1].decode("utf-8", "replace") or "end of input"
            self.fail(f"expected {tok.decode()!r}, found {what!r}")
        self.pos += len(tok)

    def parse(self) -> ConstructionExpr:
        e = self.par()
        self.skip_ws()
        if self.pos != len(self.raw):
            self.fail("unexpected trailing input")
        return e

    def par(self) -> ConstructionExpr:
        e = self.ser()
        while self.peek() == b"|":
            self.pos += 1
            e = Parallel(e, self.ser())
        return e

    def ser(self) -> ConstructionExpr:
        e = self.atom()
        while self.peek() == b"*":
            self.pos += 1
            e = Series(e, self.atom())
        return e

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.raw) and self.raw[self.pos : self.pos + 1].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.raw[start : self.pos])

    def atom(self) -> ConstructionExpr:
        c = self.peek()
        if c == b"(":
            self.pos += 1
            e = self.par()
            self.expect(b")")
            return e
        for word, ctor in ((b"edge", None), (b"Kme(", Kme), (b"K(", K)):
            if self.raw.startswith(word, self.pos):
                at = self.pos
                self.pos += len(word)
                if ctor is None:
                    return Edge()
                n = self.integer()
                self.expect(b")")
                if n < 2:
                    raise ArityError(f"{word.decode()}{n}) at offset {at} needs n >= 2")
                return ctor(n)
        if not c:
            self.fail("unexpected end of input")
        self.fail(f"unexpected {c.decode('utf-8', 'replace')!r}")


def parse_construction(text: str) -> ConstructionExpr:
    return _Parser(text).parse()


def eval_construction(e: ConstructionExpr, memo: dict | None = None) -> PartitionedPoly:
    if memo is not None:
        hit = memo.get(e)
        if hit is not None:
            return hit
    if isinstance(e, Edge):
        out = PartitionedPoly(IntPoly(), Q2)
    elif isinstance(e, K):
        out = PartitionedPoly(IntPoly(), falling_factorial(e.n))
    elif isinstance(e, Kme):
        out = PartitionedPoly(falling_factorial(e.n - 1), falling_factorial(e.n))
    elif isinstance(e, Series):
        out = series_compose(eval_construction(e.left, memo), eval_construction(e.right, memo))
    elif isinstance(e, Parallel):
        out = parallel_compose(eval_construction(e.left, memo), eval_construction(e.right, memo))
    else:
        raise TypeError(f"not a construction expression: {e!r}")
    if memo is not None:
        memo[e] = out
    return out


def _build(e: ConstructionExpr, edges: set, next_label: list) -> tuple[int, int]:
    # returns the terminal labels; new vertices are numbered in construction order
    if isinstance(e, (Edge, K, Kme)):
        size = 2 if isinstance(e, Edge) else e.n
        base = next_label[0]
        next_label[0] += size
        vs = range(base, base + size)
        for i in vs:
            for j in vs:
                if i < j and not (isinstance(e, Kme) and (i, j) == (base, base + 1)):
                    edges.add((i, j))
        return base, base + 1

    s1, t1 = _build(e.left, edges, next_label)
    sub: set = set()
    s2, t2 = _build(e.right, sub, next_label)
    if isinstance(e, Series):
        glue = {s2: t1}
        terminals = (s1, t2)
    else:
        glue = {s2: s1, t2: t1}
        terminals = (s1, t1)
    for a, b in sub:
        a, b = glue.get(a, a), glue.get(b, b)
        edges.add((min(a, b), max(a, b)))
    # compact away the labels absorbed by gluing, keeping construction order
    dead = sorted(glue)
    if dead:
        def shift(x):
            return x - sum(1 for d in dead if d < x)

        moved = {(shift(a), shift(b)) for a, b in edges}
        edges.clear()
        edges.update(moved)
        terminals = (shift(terminals[0]), shift(terminals[1]))
        next_label[0] -= len(dead)
    return terminals


def realize_graph(e: ConstructionExpr) -> tuple[Graph, TerminalPair]:
    """Build the concrete simple graph for an expression by actually gluing vertices."""
    edges: set = set()
    counter = [0]
    s, t = _build(e, edges, counter)
    return Graph(counter[0], frozenset(edges)), TerminalPair(s, t)
