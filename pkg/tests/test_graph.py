import itertools
import random

import pytest

from chromroot import known
from chromroot.errors import InvalidVertex, LoopError, ParseError
from chromroot.graph import Graph, chromatic_polynomial, parse_edge_list
from chromroot.poly import IntPoly, falling_factorial

from oracles import colourings, interpolate, random_graph


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n0 2")
    assert g == Graph.complete(3)


def test_parse_header_isolated_vertices():
    g = parse_edge_list("n 3\n")
    assert g.n == 3 and g.m == 0


def test_parse_duplicates_collapse():
    assert parse_edge_list("0 1\n0 1\n1 0") == Graph.complete(2)


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# a path\n\nn 4\n0 1  # first\n\n1 2\n")
    assert g.n == 4 and g.edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text", ["0 x", "0 -1", "0 1 2", "n 2\n0 5", "0 1\nn 3"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_parse_loop():
    with pytest.raises(LoopError):
        parse_edge_list("0 1\n2 2")


def test_contract_adjacent_sets_zero_flag():
    g = Graph.cycle(4).contract(0, 1)
    assert g.zero_flag
    assert chromatic_polynomial(g).is_zero


def test_contract_opposite_pair_of_c4():
    g = Graph.cycle(4).contract(0, 2)
    assert not g.zero_flag
    assert g.n == 3
    assert g.edges == {(0, 1), (0, 2)}


def test_contract_isolated_onto_k2():
    g = Graph(3, frozenset({(0, 1)})).contract(2, 0)
    assert g == Graph.complete(2)


def test_contract_compacts_labels_in_order():
    g = Graph.path(5).contract(1, 3)  # 0-1-2-1-4 -> labels 0,1,2,3
    assert g.n == 4
    assert g.edges == {(0, 1), (1, 2), (1, 3)}


def test_zero_flag_is_absorbing():
    g = Graph.complete(3).contract(0, 1)
    assert g.add_edge(0, 1).zero_flag
    assert g.delete_edge(0, 1).zero_flag


def test_add_edge():
    assert Graph.path(3).add_edge(0, 2) == Graph.complete(3)
    assert Graph.complete(3).add_edge(1, 0) == Graph.complete(3)
    assert Graph(2).add_edge(0, 1) == Graph.complete(2)


def test_invalid_vertex():
    with pytest.raises(InvalidVertex):
        Graph.complete(3).add_edge(0, 3)
    with pytest.raises(InvalidVertex):
        Graph.complete(3).contract(1, 1)


def test_chromatic_small_cases():
    assert chromatic_polynomial(Graph(0)) == IntPoly((1,))
    assert chromatic_polynomial(Graph(4)) == IntPoly.monomial(4)
    assert chromatic_polynomial(Graph.complete(3)).coeffs == (0, 2, -3, 1)
    for n in range(1, 9):
        assert chromatic_polynomial(Graph.complete(n)) == falling_factorial(n)


def test_chromatic_c4_against_colouring_counts():
    edges = sorted(Graph.cycle(4).edges)
    points = [(k, colourings(4, edges, k)) for k in range(5)]
    assert interpolate(points) == [0, -3, 6, -4, 1]
    assert chromatic_polynomial(Graph.cycle(4)).coeffs == (0, -3, 6, -4, 1)


def test_g1_and_g2_match_expected_factorisations():
    assert chromatic_polynomial(known.g1()) == known.P_G1
    assert chromatic_polynomial(known.g2()) == known.P_G2


def test_disconnected_and_cut_vertex_graphs():
    # two triangles sharing a vertex, plus an isolated vertex
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)], n=6)
    k3 = falling_factorial(3)
    assert chromatic_polynomial(g) == (k3 * k3 // IntPoly((0, 1))) * IntPoly((0, 1))


def _exhaustive_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [p for i, p in enumerate(pairs) if mask >> i & 1]


@pytest.mark.parametrize("n", range(0, 5))
def test_oracle_all_labelled_graphs_up_to_four_vertices(n):
    for edges in _exhaustive_graphs(n):
        p = chromatic_polynomial(Graph.from_edges(edges, n))
        for k in range(5):
            assert p(k) == colourings(n, edges, k)


def test_oracle_random_graphs_up_to_six_vertices():
    rng = random.Random(1234)
    for _ in range(300):
        n = rng.randint(1, 6)
        edges = random_graph(rng, n)
        p = chromatic_polynomial(Graph.from_edges(edges, n))
        for k in range(5):
            assert p(k) == colourings(n, edges, k)


def test_structural_properties():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = Graph.from_edges(random_graph(rng, n), n)
        p = chromatic_polynomial(g)
        assert p.degree == n and p.is_monic()
        assert p[0] == 0
        # coefficients alternate in sign (zeros allowed only below the lowest nonzero term)
        for i in range(1, n + 1):
            c = p[i]
            if c:
                assert (c > 0) == ((n - i) % 2 == 0)
        assert (p(1) == 0) == (g.m > 0)


def test_recursions_agree():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(1, 8)
        g = Graph.from_edges(random_graph(rng, n), n)
        a = chromatic_polynomial(g, method="deletion")
        b = chromatic_polynomial(g, method="addition")
        c = chromatic_polynomial(g, memo=False)
        assert a == b == c


def test_contract_then_chromatic_matches_oracle():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(2, 6)
        edges = random_graph(rng, n)
        g = Graph.from_edges(edges, n)
        u, v = rng.sample(range(n), 2)
        p = chromatic_polynomial(g.contract(u, v))
        for k in range(5):
            # colourings of G with u, v forced equal = colourings of G/uv
            assert p(k) == colourings(n, edges, k, same=(u, v))


def test_unknown_method():
    with pytest.raises(ValueError):
        chromatic_polynomial(Graph.complete(3), method="magic")


def test_edge_list_round_trip():
    g = known.g2()
    assert parse_edge_list(g.to_edge_list()) == g
