"""Independent reference computations used only by the tests.

Nothing here imports the recursion, the composition algebra or the Sturm code
it is meant to check.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np


def colourings(n, edges, k, same=None, different=None):
    """Count proper k-colourings by exhaustive enumeration of all k^n assignments.

    ``same``/``different`` optionally restrict a vertex pair to equal/unequal colours.
    """
    if n == 0:
        return 1
    if k == 0:
        return 0
    grid = np.indices((k,) * n).reshape(n, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for u, v in edges:
        ok &= grid[u] != grid[v]
    if same is not None:
        ok &= grid[same[0]] == grid[same[1]]
    if different is not None:
        ok &= grid[different[0]] != grid[different[1]]
    return int(ok.sum())


def interpolate(points):
    """Coefficients (ascending, as Fractions) of the unique polynomial through the points."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, b in enumerate(basis):
            coeffs[t] += yi * b / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def random_graph(rng: random.Random, n: int, p: float | None = None):
    if p is None:
        p = rng.random()
    return [e for e in itertools.combinations(range(n), 2) if rng.random() < p]


def beraha_conjugates(n: int) -> list[float]:
    """All conjugates of B_n: 2 + 2cos(2*pi*k/n) for k coprime to n, k < n/2."""
    if n <= 2:
        return [2 + 2 * math.cos(2 * math.pi / n)]
    return [2 + 2 * math.cos(2 * math.pi * k / n) for k in range(1, (n + 1) // 2) if math.gcd(k, n) == 1]


def sp_trees(k):
    """Every binary series/parallel tree over 'e' with exactly k leaves."""
    if k == 1:
        return ["e"]
    out = []
    for i in range(1, k):
        for a in sp_trees(i):
            for b in sp_trees(k - i):
                out.append(("S", a, b))
                out.append(("P", a, b))
    return out


def normalise(t):
    """Flatten associativity, sort parallel children; returns a hashable string."""
    if t == "e":
        return "e"
    op = t[0]
    parts = [normalise(c) for c in _children(t)]
    if op == "P":
        parts.sort()
    return op + "[" + ",".join(parts) + "]"


def _children(t):
    op = t[0]
    out = []
    for c in t[1:]:
        if c != "e" and c[0] == op:
            out.extend(_children(c))
        else:
            out.append(c)
    return out
