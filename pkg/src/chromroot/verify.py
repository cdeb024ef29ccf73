"""One-shot reproduction of the B_10 results.

Each check recomputes its claim from scratch; nothing is read from disk.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import known
from .beraha import (
    beraha_minimal_polynomial,
    classify_beraha,
    forbidden_conjugate_count,
    golden_identity_check,
    triangulation_family,
)
from .errors import ClassificationGap
from .graph import Graph, chromatic_polynomial
from .poly import IntPoly, falling_factorial, is_divisible
from .twoterminal import eval_construction, parse_construction, total_chromatic

BERAHA_SCAN_MAX = 50


@dataclass
class CheckResult:
    name: str
    ok: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}"


def _diff(label: str, got: IntPoly, want: IntPoly) -> list[str]:
    return [f"  {label}: got      {got.to_machine()}", f"  {label}: expected {want.to_machine()}"]


def _check_graph(name: str, edges, construction: str, expected: IntPoly) -> CheckResult:
    direct = chromatic_polynomial(Graph.from_edges(edges))
    composed = total_chromatic(eval_construction(parse_construction(construction)))
    res = CheckResult(f"{name} chromatic polynomial (recursion and composition)", True)
    if direct != expected:
        res.ok = False
        res.details += _diff("recursion", direct, expected)
    if composed != expected:
        res.ok = False
        res.details += _diff("composition", composed, expected)
    return res


def _check_divisibility(g1_edges, g2_edges) -> CheckResult:
    res = CheckResult("divisibility by q^2 - 5*q + 5", True)
    for name, edges in (("G1", g1_edges), ("G2", g2_edges)):
        p = chromatic_polynomial(Graph.from_edges(edges))
        if not is_divisible(p, known.B10_MINPOLY):
            res.ok = False
            res.details.append(f"  {name}: not divisible")
    for n in range(13):
        if is_divisible(falling_factorial(n), known.B10_MINPOLY):
            res.ok = False
            res.details.append(f"  (q)_{n}: unexpectedly divisible")
    return res


def _check_beraha_scan(max_n: int = BERAHA_SCAN_MAX) -> CheckResult:
    res = CheckResult(f"Beraha classification for n <= {max_n}", True)
    for n, want in ((5, known.B5_MINPOLY), (10, known.B10_MINPOLY)):
        got = beraha_minimal_polynomial(n)
        if got != want:
            res.ok = False
            res.details += _diff(f"minpoly B_{n}", got, want)
    if forbidden_conjugate_count(10) != (0, 0, 0):
        res.ok = False
        res.details.append(f"  n=10: counts {forbidden_conjugate_count(10)}")
    chromatic = []
    for n in range(1, max_n + 1):
        try:
            v = classify_beraha(n)
        except ClassificationGap as exc:
            res.ok = False
            res.details.append(f"  n={n}: {exc}")
            continue
        if v.kind != "ExcludedByConjugate":
            chromatic.append(n)
    if chromatic != [1, 2, 3, 4, 6, 10]:
        res.ok = False
        res.details.append(f"  chromatic-root indices {chromatic}, expected [1, 2, 3, 4, 6, 10]")
    return res


def _check_golden() -> CheckResult:
    family = triangulation_family()
    res = CheckResult(f"Golden Identity on {len(family)} triangulations", True)
    for i, g in enumerate(family):
        r = golden_identity_check(g)
        if not r.holds:
            res.ok = False
            res.details.append(f"  instance {i} ({g.n} vertices): lhs {r.lhs} != rhs {r.rhs}")
    return res


def verify_paper(
    g1_edges: Sequence[tuple[int, int]] = known.G1_EDGES,
    g2_edges: Sequence[tuple[int, int]] = known.G2_EDGES,
) -> list[CheckResult]:
    return [
        _check_graph("G1", g1_edges, known.G1_CONSTRUCTION, known.P_G1),
        _check_graph("G2", g2_edges, known.G2_CONSTRUCTION, known.P_G2),
        _check_divisibility(g1_edges, g2_edges),
        _check_beraha_scan(),
        _check_golden(),
    ]
