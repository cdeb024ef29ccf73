"""Beraha numbers B_n = 2 + 2cos(2*pi/n): minimal polynomials, conjugates in the
root-free intervals, and which B_n can be chromatic roots at all.

An integer polynomial with B_n as a root is divisible by the minimal polynomial
of B_n, so it also vanishes at every conjugate.  No chromatic polynomial has a
root in (-inf, 0), (0, 1) or (1, 32/27], so a single conjugate there rules B_n
out.  B_10 is the one non-integer index with no such conjugate, and the G1
witness shows it really is a chromatic root.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import known
from .errors import ClassificationGap, NotTriangulationCandidate
from .graph import Graph, chromatic_polynomial
from .poly import (
    PHI,
    GoldenInt,
    IntPoly,
    cyclotomic,
    eval_golden,
    half_palindromic_decompose,
    is_divisible,
    shift_poly,
    sturm_count,
)

__all__ = [
    "FORBIDDEN_INTERVALS",
    "INTEGER_BERAHA",
    "Verdict",
    "BerahaProfile",
    "GoldenIdentityReport",
    "beraha_value",
    "beraha_minimal_polynomial",
    "forbidden_conjugate_count",
    "classify_beraha",
    "beraha_profile",
    "is_chromatic_root_of",
    "golden_identity_check",
    "stacked_triangulation",
    "triangulation_family",
    "octahedron",
]

ZERO_FREE_BOUND = Fraction(32, 27)

# (lo, hi, include_lo, include_hi)
FORBIDDEN_INTERVALS = (
    (-math.inf, Fraction(0), False, False),
    (Fraction(0), Fraction(1), False, False),
    (Fraction(1), ZERO_FREE_BOUND, False, True),
)

INTEGER_BERAHA = {1: 4, 2: 0, 3: 1, 4: 2, 6: 3}


def beraha_value(n: int) -> float:
    """Floating-point B_n, for display only."""
    return 2 + 2 * math.cos(2 * math.pi / n)


@lru_cache(maxsize=None)
def beraha_minimal_polynomial(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("Beraha index must be >= 1")
    if n in INTEGER_BERAHA:
        return IntPoly((-INTEGER_BERAHA[n], 1))
    # 2cos(2pi/n) has minimal polynomial psi_n; B_n = that + 2
    return shift_poly(half_palindromic_decompose(cyclotomic(n)), 2)


def forbidden_conjugate_count(n: int) -> tuple[int, int, int]:
    p = beraha_minimal_polynomial(n)
    return tuple(sturm_count(p, lo, hi, inc_lo, inc_hi) for lo, hi, inc_lo, inc_hi in FORBIDDEN_INTERVALS)


@dataclass(frozen=True)
class Verdict:
    kind: str  # "IntegerBeraha" | "ExcludedByConjugate" | "ChromaticRootB10"
    value: int | None = None

    def __str__(self) -> str:
        return f"{self.kind}({self.value})" if self.kind == "IntegerBeraha" else self.kind


def is_chromatic_root_of(g: Graph, n: int) -> bool:
    return is_divisible(chromatic_polynomial(g), beraha_minimal_polynomial(n))


@lru_cache(maxsize=1)
def _b10_witness_holds() -> bool:
    return is_chromatic_root_of(known.g1(), 10)


def classify_beraha(n: int) -> Verdict:
    if n < 1:
        raise ValueError("Beraha index must be >= 1")
    if n in INTEGER_BERAHA:
        return Verdict("IntegerBeraha", INTEGER_BERAHA[n])
    if n == 10:
        if not _b10_witness_holds():
            raise ClassificationGap("embedded G1 does not have B_10 as a chromatic root")
        return Verdict("ChromaticRootB10")
    if any(forbidden_conjugate_count(n)):
        return Verdict("ExcludedByConjugate")
    raise ClassificationGap(f"B_{n} has no conjugate in a forbidden interval")


@dataclass(frozen=True)
class BerahaProfile:
    n: int
    min_poly: IntPoly
    degree: int
    forbidden_counts: tuple[int, int, int]
    verdict: Verdict

    def to_line(self) -> str:
        neg, unit, near_one = self.forbidden_counts
        return f"{self.n}; {self.min_poly.to_machine()}; counts({neg},{unit},{near_one}); {self.verdict}"


def beraha_profile(n: int) -> BerahaProfile:
    p = beraha_minimal_polynomial(n)
    return BerahaProfile(n, p, int(p.degree), forbidden_conjugate_count(n), classify_beraha(n))


# ---------------------------------------------------------------------------
# Golden Identity


@dataclass(frozen=True)
class GoldenIdentityReport:
    holds: bool
    lhs: GoldenInt
    rhs: GoldenInt
    vertices: int
    # only the edge count 3n - 6 is checked; planarity is assumed, not tested
    edge_count_checked: bool = True


def golden_identity_check(g: Graph) -> GoldenIdentityReport:
    """Compare P(phi+2) with (phi+2) * phi^(3n-10) * P(phi+1)^2 exactly."""
    n = g.n
    if n < 4 or g.m != 3 * n - 6:
        raise NotTriangulationCandidate(
            f"{n} vertices and {g.m} edges; a triangulation needs n >= 4 and 3n-6 = {3 * n - 6} edges"
        )
    p = chromatic_polynomial(g)
    b5 = PHI + 1
    b10 = PHI + 2
    lhs = eval_golden(p, b10)
    at_b5 = eval_golden(p, b5)
    rhs = b10 * PHI ** (3 * n - 10) * at_b5 * at_b5
    return GoldenIdentityReport(lhs == rhs, lhs, rhs, n)


def octahedron() -> Graph:
    return Graph.from_edges(
        [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) not in ((0, 1), (2, 3), (4, 5))]
    )


def stacked_triangulation(n: int, seed: int = 0) -> Graph:
    """Apollonian triangulation on n >= 4 vertices: start from K4 and repeatedly
    drop a new vertex into a face chosen by ``random.Random(seed)``."""
    if n < 4:
        raise ValueError("stacked triangulations start at K4")
    rng = random.Random(seed)
    edges = {(a, b) for a in range(4) for b in range(a + 1, 4)}
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges |= {(a, v), (b, v), (c, v)}
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Graph.from_edges(edges, n)


def triangulation_family(max_n: int = 12, seeds: int = 3) -> list[Graph]:
    """K4, the octahedron, and stacked triangulations for 5..max_n vertices."""
    family = [Graph.complete(4), octahedron()]
    for n in range(5, max_n + 1):
        family += [stacked_triangulation(n, s) for s in range(seeds)]
    return family
