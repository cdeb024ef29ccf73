"""Built-in graphs and polynomials: the two 11-vertex witnesses for B_10 and their
expected factorizations.

G1 is K6 minus the edge {2, 3}, with a gadget between 2 and 3 made of two
4-cycles glued in series at vertex 6.  G2 is K5 minus {3, 4}, with two paths
of 4-cycles and an edge between 3 and 4.
"""

from __future__ import annotations

import itertools

from .graph import Graph
from .poly import IntPoly

_K6_MINUS = [e for e in itertools.combinations(range(6), 2) if e != (2, 3)]
_K5_MINUS = [e for e in itertools.combinations(range(5), 2) if e != (3, 4)]

G1_EDGES: tuple[tuple[int, int], ...] = tuple(
    _K6_MINUS + [(2, 7), (7, 6), (2, 8), (8, 6), (3, 9), (9, 6), (3, 10), (10, 6)]
)
G2_EDGES: tuple[tuple[int, int], ...] = tuple(
    _K5_MINUS
    + [(3, 5), (3, 6), (3, 7), (4, 8), (4, 9), (4, 10)]
    + [(10, 5), (10, 6), (7, 8), (7, 9)]
)

G1_CONSTRUCTION = "Kme(6) | ((edge*edge|edge*edge) * (edge*edge|edge*edge))"
G2_CONSTRUCTION = "Kme(5) | (edge*edge|edge*edge)*edge | edge*(edge*edge|edge*edge)"
W_CONSTRUCTION = "edge*edge | edge*edge"

B10_MINPOLY = IntPoly((5, -5, 1))
B5_MINPOLY = IntPoly((1, -3, 1))

# factored forms, multiplied out on import
G1_FACTORS = (
    IntPoly.from_roots([0, 1, 2, 3, 3, 4]),
    B10_MINPOLY,
    IntPoly((-7, 8, -4, 1)),
)
G2_FACTORS = (
    IntPoly.from_roots([0, 1, 2, 3]),
    B10_MINPOLY,
    IntPoly((-36, 73, -63, 30, -8, 1)),
)


def _product(factors):
    out = IntPoly((1,))
    for f in factors:
        out = out * f
    return out


P_G1 = _product(G1_FACTORS)
P_G2 = _product(G2_FACTORS)


def g1() -> Graph:
    return Graph.from_edges(G1_EDGES)


def g2() -> Graph:
    return Graph.from_edges(G2_EDGES)
