import math
from fractions import Fraction

import mpmath
import pytest

from chromroot import known
from chromroot.beraha import (
    FORBIDDEN_INTERVALS,
    Verdict,
    beraha_minimal_polynomial,
    beraha_profile,
    classify_beraha,
    forbidden_conjugate_count,
    golden_identity_check,
    is_chromatic_root_of,
    octahedron,
    stacked_triangulation,
    triangulation_family,
)
from chromroot.errors import ClassificationGap, NotTriangulationCandidate
from chromroot.graph import Graph, chromatic_polynomial
from chromroot.poly import GoldenInt, IntPoly, sturm_count

from oracles import beraha_conjugates


def totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_minimal_polynomials_b5_b10():
    assert beraha_minimal_polynomial(5) == IntPoly((1, -3, 1))
    assert beraha_minimal_polynomial(10) == IntPoly((5, -5, 1))


def test_minimal_polynomial_b7():
    p = beraha_minimal_polynomial(7)
    assert p == IntPoly((-1, 6, -5, 1))
    assert abs(p(3.2469796)) < 1e-6


@pytest.mark.parametrize("n, value", [(1, 4), (2, 0), (3, 1), (4, 2), (6, 3)])
def test_integer_table(n, value):
    assert beraha_minimal_polynomial(n) == IntPoly((-value, 1))
    assert classify_beraha(n) == Verdict("IntegerBeraha", value)


@pytest.mark.parametrize("n", range(3, 61))
def test_minimal_polynomial_shape(n):
    p = beraha_minimal_polynomial(n)
    assert p.is_monic()
    expected_degree = 1 if n in (3, 4, 6) else totient(n) // 2
    assert p.degree == expected_degree
    assert sturm_count(p) == p.degree


@pytest.mark.parametrize("n", range(3, 61))
def test_minimal_polynomial_vanishes_near_beraha_number(n):
    """Approximate membership at 50 digits, bounded by |p'| on [0, 5]."""
    p = beraha_minimal_polynomial(n)
    digits = 50
    with mpmath.workdps(digits + 10):
        approx = Fraction(mpmath.nstr(2 + 2 * mpmath.cos(2 * mpmath.pi / n), digits + 5, strip_zeros=False))
    err = Fraction(1, 10**digits)
    lipschitz = sum(abs(i * c) * 5 ** (i - 1) for i, c in enumerate(p.coeffs) if i)
    assert abs(p(approx)) <= err * lipschitz


@pytest.mark.parametrize("n", range(1, 51))
def test_forbidden_counts_match_numeric_conjugates(n):
    """Oracle: locate every conjugate 2+2cos(2*pi*k/n) in floating point."""
    conj = beraha_conjugates(n)
    expected = []
    for lo, hi, inc_lo, inc_hi in FORBIDDEN_INTERVALS:
        lo_f, hi_f = float(lo), float(hi)
        # no conjugate may sit within float noise of an endpoint for this oracle to be valid
        assert all(abs(x - lo_f) > 1e-9 and abs(x - hi_f) > 1e-9 for x in conj if n not in (2, 3))
        expected.append(sum(1 for x in conj if lo_f < x < hi_f or (inc_hi and x == hi_f)))
    if n in (2, 3):
        return  # conjugate equals an endpoint exactly; covered by exact tests below
    assert forbidden_conjugate_count(n) == tuple(expected)


def test_forbidden_count_examples():
    assert forbidden_conjugate_count(5) == (0, 1, 0)
    assert forbidden_conjugate_count(10) == (0, 0, 0)
    assert forbidden_conjugate_count(9) == (0, 1, 0)
    # B_2 = 0 and B_3 = 1 sit on the open endpoints
    assert forbidden_conjugate_count(2) == (0, 0, 0)
    assert forbidden_conjugate_count(3) == (0, 0, 0)


def test_conjugates_of_b5_and_b10():
    # B5* ~ 0.38196601 and B10* ~ 1.381966011
    assert sturm_count(IntPoly((1, -3, 1)), Fraction(38196, 100000), Fraction(38197, 100000)) == 1
    assert sturm_count(IntPoly((5, -5, 1)), Fraction(1381966, 10**6), Fraction(1381967, 10**6)) == 1


def test_third_interval_includes_its_right_endpoint():
    p = IntPoly((-32, 27))  # root exactly 32/27
    lo, hi, inc_lo, inc_hi = FORBIDDEN_INTERVALS[2]
    assert sturm_count(p, lo, hi, inc_lo, inc_hi) == 1


@pytest.mark.parametrize("n", [n for n in range(5, 51) if n not in (6, 10)])
def test_every_other_index_has_a_forbidden_conjugate(n):
    assert any(forbidden_conjugate_count(n))
    assert classify_beraha(n) == Verdict("ExcludedByConjugate")


def test_classification_examples():
    assert classify_beraha(10) == Verdict("ChromaticRootB10")
    assert classify_beraha(6) == Verdict("IntegerBeraha", 3)
    assert classify_beraha(8) == Verdict("ExcludedByConjugate")
    assert str(classify_beraha(4)) == "IntegerBeraha(2)"


def test_classification_gap_is_loud(monkeypatch):
    import chromroot.beraha as b

    monkeypatch.setattr(b, "forbidden_conjugate_count", lambda n: (0, 0, 0))
    with pytest.raises(ClassificationGap):
        b.classify_beraha(7)


def test_profile_lines():
    assert beraha_profile(10).to_line() == "10; 5 -5 1; counts(0,0,0); ChromaticRootB10"
    assert beraha_profile(5).to_line() == "5; 1 -3 1; counts(0,1,0); ExcludedByConjugate"
    assert beraha_profile(4).to_line() == "4; -2 1; counts(0,0,0); IntegerBeraha(2)"


def test_is_chromatic_root_of():
    assert is_chromatic_root_of(known.g1(), 10)
    assert is_chromatic_root_of(known.g2(), 10)
    assert not is_chromatic_root_of(Graph.complete(4), 10)
    assert is_chromatic_root_of(Graph.complete(4), 6)


# --- Golden Identity ---------------------------------------------------------


def test_golden_identity_k4():
    r = golden_identity_check(Graph.complete(4))
    assert r.holds
    assert r.lhs == r.rhs == GoldenInt(3, 4)


def test_golden_identity_octahedron():
    g = octahedron()
    assert g.n == 6 and g.m == 12
    r = golden_identity_check(g)
    assert r.holds
    phi = (1 + math.sqrt(5)) / 2
    p = chromatic_polynomial(g)
    assert math.isclose(float(r.lhs), p(phi + 2), rel_tol=1e-9)
    assert math.isclose(float(r.rhs), (phi + 2) * phi ** 8 * p(phi + 1) ** 2, rel_tol=1e-9)


def test_golden_identity_rejects_non_triangulation():
    with pytest.raises(NotTriangulationCandidate):
        golden_identity_check(Graph.cycle(4))


def test_golden_identity_fails_for_non_planar_graph_with_right_edge_count():
    # K_{3,3} plus three edges has 3n-6 = 12 edges but is not a triangulation of the plane
    edges = [(a, b) for a in range(3) for b in range(3, 6)] + [(0, 1), (1, 2), (3, 4)]
    r = golden_identity_check(Graph.from_edges(edges))
    assert not r.holds
    assert r.lhs == GoldenInt(5, 5) and r.rhs == GoldenInt(63, 99)


def test_stacked_triangulations_are_deterministic_and_well_formed():
    for n in range(4, 13):
        for seed in range(3):
            g = stacked_triangulation(n, seed)
            assert g == stacked_triangulation(n, seed)
            assert g.n == n and g.m == 3 * n - 6
            # stacked triangulations are 3-trees: P = q(q-1)(q-2)(q-3)^(n-3)
            assert chromatic_polynomial(g) == IntPoly.from_roots([0, 1, 2] + [3] * (n - 3))


def test_triangulation_family_holds():
    fam = triangulation_family()
    assert len(fam) >= 20
    assert all(golden_identity_check(g).holds for g in fam)
