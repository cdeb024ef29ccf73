"""Finite simple graphs and exact chromatic polynomials.

Graphs are immutable.  Contraction never stores a loop: when two adjacent
vertices are identified the result carries ``zero_flag`` instead, because a
loop forces the chromatic polynomial to vanish identically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import InvalidVertex, LoopError, ParseError
from .poly import Q, IntPoly, exact_div, falling_factorial

__all__ = [
    "Graph",
    "TerminalPair",
    "parse_edge_list",
    "chromatic_polynomial",
    "canonical_key",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    zero_flag: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, frozenset(edges))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(itertools.combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, frozenset((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as one bitmask per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def _check(self, *vs: int) -> None:
        for v in vs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbours(self, v: int) -> list[int]:
        self._check(v)
        return _bits(self.masks[v])

    def degree(self, v: int) -> int:
        self._check(v)
        return _popcount(self.masks[v])

    def add_edge(self, u: int, v: int) -> Graph:
        self._check(u, v)
        if u == v:
            raise InvalidVertex("cannot join a vertex to itself")
        return Graph(self.n, self.edges | {(min(u, v), max(u, v))}, self.zero_flag)

    def delete_edge(self, u: int, v: int) -> Graph:
        self._check(u, v)
        return Graph(self.n, self.edges - {(min(u, v), max(u, v))}, self.zero_flag)

    def contract(self, u: int, v: int) -> Graph:
        """Identify u and v.  Labels are compacted to 0..n-2 keeping relative order;
        the merged vertex takes the smaller label."""
        self._check(u, v)
        if u == v:
            raise InvalidVertex("cannot contract a vertex with itself")
        keep, gone = min(u, v), max(u, v)

        def relabel(x):
            if x == gone:
                x = keep
            return x - 1 if x > gone else x

        edges = set()
        for a, b in self.edges:
            a, b = relabel(a), relabel(b)
            if a != b:
                edges.add((min(a, b), max(a, b)))
        return Graph(self.n - 1, frozenset(edges), self.zero_flag or self.has_edge(u, v))

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"


class TerminalPair(NamedTuple):
    s: int
    t: int

    def validate(self, g: Graph) -> None:
        if self.s == self.t:
            raise InvalidVertex("terminals must be distinct")
        g._check(self.s, self.t)


def parse_edge_list(text: str) -> Graph:
    """Read the plain edge-list format: ``u v`` per line, optional ``n <count>`` header,
    ``#`` comments, blank lines ignored."""
    declared = None
    edges = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if seen_content or declared is not None:
                raise ParseError("header 'n <count>' must be the first line", lineno)
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(f"bad header {line!r}", lineno)
            declared = int(toks[1])
            seen_content = True
            continue
        seen_content = True
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"bad vertex label in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex label in {line!r}", lineno)
        if u == v:
            raise LoopError(f"loop {u} {v}", lineno)
        edges.append((u, v))
    needed = 1 + max((max(e) for e in edges), default=-1)
    if declared is None:
        declared = needed
    elif declared < needed:
        raise ParseError(f"header declares {declared} vertices but label {needed - 1} is used")
    return Graph.from_edges(edges, declared)


# ---------------------------------------------------------------------------
# bitmask helpers used by the recursion


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _induced(adj: tuple[int, ...], keep: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        m = 0
        for w in _bits(adj[v]):
            i = pos.get(w)
            if i is not None:
                m |= 1 << i
        out.append(m)
    return tuple(out)


def _components(adj: tuple[int, ...]) -> list[list[int]]:
    n = len(adj)
    unseen = (1 << n) - 1
    comps = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        unseen &= ~comp
        comps.append(_bits(comp))
    return comps


def _articulation_point(adj: tuple[int, ...]) -> int | None:
    """Some cut vertex of a connected graph, or None (iterative Tarjan)."""
    n = len(adj)
    if n < 3:
        return None
    disc = [-1] * n
    low = [0] * n
    disc[0] = 0
    counter = 1
    root_children = 0
    stack = [(0, -1, iter(_bits(adj[0])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(_bits(adj[w]))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent != 0 and low[v] >= disc[parent]:
                return parent
    return 0 if root_children > 1 else None


def _merge(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Identify v into u and drop v (parallel edges collapse; caller ensures u !~ v
    or accepts losing the loop)."""
    bu, bv = 1 << u, 1 << v
    new = list(adj)
    new[u] = (adj[u] | adj[v]) & ~(bu | bv)
    for w in _bits(adj[v]):
        if w != u:
            new[w] = (new[w] | bu) & ~bv
    return _induced(tuple(new), [x for x in range(len(adj)) if x != v])


CANON_CUTOFF = 12
CANON_BUDGET = 120


def canonical_key(adj: tuple[int, ...]):
    """Memo key for a bitmask graph.

    Colour refinement splits the vertices into ordered cells; the key is the
    lexicographically smallest adjacency over all relabellings that permute
    within cells.  When that is too many relabellings (or n is above the
    cutoff) the labelled adjacency itself is used, which is still a sound key.
    """
    n = len(adj)
    if n > CANON_CUTOFF:
        return ("L", adj)
    colours = [_popcount(a) for a in adj]
    ncls = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in _bits(adj[v])))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [rank[s] for s in sigs]
        if len(rank) == ncls:
            break
        ncls = len(rank)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    if math.prod(math.factorial(len(c)) for c in ordered) > CANON_BUDGET:
        return ("L", adj)
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in ordered)):
        order = [v for p in perms for v in p]
        cand = _induced(adj, order)
        if best is None or cand < best:
            best = cand
    return ("C", best)


class _ChromaticSolver:
    def __init__(self, method: str, memo: bool):
        if method not in ("auto", "deletion", "addition"):
            raise ValueError(f"unknown method {method!r}")
        self.method = method
        self.memo: dict | None = {} if memo else None

    def solve(self, adj: tuple[int, ...]) -> IntPoly:
        n = len(adj)
        if n == 0:
            return IntPoly((1,))
        m = sum(_popcount(a) for a in adj) // 2
        if m == 0:
            return IntPoly.monomial(n)
        full = n * (n - 1) // 2
        if m == full:
            return falling_factorial(n)

        comps = _components(adj)
        if len(comps) > 1:
            result = IntPoly((1,))
            for c in comps:
                result = result * self.solve(_induced(adj, c))
            return result

        cut = _articulation_point(adj)
        if cut is not None:
            rest = [v for v in range(n) if v != cut]
            side = _components(_induced(adj, rest))[0]
            side = sorted(rest[i] for i in side)
            side_set = set(side)
            first = sorted(side + [cut])
            second = [v for v in range(n) if v not in side_set]
            prod = self.solve(_induced(adj, first)) * self.solve(_induced(adj, second))
            return exact_div(prod, Q)

        key = None
        if self.memo is not None:
            key = canonical_key(adj)
            hit = self.memo.get(key)
            if hit is not None:
                return hit

        degs = [_popcount(a) for a in adj]
        method = self.method
        if method == "auto":
            method = "addition" if 2 * m > full else "deletion"
        if method == "addition":
            # drive toward complete graphs: P(G) = P(G + uv) + P(G / uv)
            u = max((v for v in range(n) if degs[v] < n - 1), key=lambda v: degs[v])
            non_nb = [w for w in range(n) if w != u and not (adj[u] >> w) & 1]
            v = max(non_nb, key=lambda w: degs[w])
            added = list(adj)
            added[u] |= 1 << v
            added[v] |= 1 << u
            result = self.solve(tuple(added)) + self.solve(_merge(adj, min(u, v), max(u, v)))
        else:
            # drive toward edgeless graphs: P(G) = P(G - e) - P(G / e)
            u = min((v for v in range(n) if degs[v]), key=lambda v: degs[v])
            v = max(_bits(adj[u]), key=lambda w: degs[w])
            deleted = list(adj)
            deleted[u] &= ~(1 << v)
            deleted[v] &= ~(1 << u)
            result = self.solve(tuple(deleted)) - self.solve(_merge(adj, min(u, v), max(u, v)))

        if key is not None:
            self.memo[key] = result
        return result


def chromatic_polynomial(g: Graph, method: str = "auto", memo: bool = True) -> IntPoly:
    """Exact chromatic polynomial of g.

    ``method`` forces one recursion ("deletion" or "addition"); "auto" picks
    addition-identification when more than half of all vertex pairs are edges.
    """
    if g.zero_flag:
        return IntPoly()
    return _ChromaticSolver(method, memo).solve(g.masks)
