import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkod.numtheory import factor_factorial, sieve
from gkod.primegraph import (
    CriterionGraph,
    DegreePattern,
    GraphSummary,
    GraphTooLarge,
    PrimeGraph,
    ProductGraph,
    degree_pattern,
    fast_degree_pattern_alt,
    fast_degree_pattern_sym,
    gk_alt,
    gk_product,
    gk_sym,
    graphs_equal,
)


def pairwise_alt(n, sieved):
    """GK(A_n) edge by edge straight from the criterion."""
    vs = [q for q in range(2, n + 1) if q in sieved]
    if n < 4:
        vs = [q for q in vs if q != 2] if n == 3 else []
    edges = set()
    for r, s in combinations(vs, 2):
        if r == 2:
            if s + 4 <= n:
                edges.add((r, s))
        elif r + s <= n:
            edges.add((r, s))
    return vs, edges


def pairwise_sym(n, sieved):
    vs = [q for q in range(2, n + 1) if q in sieved]
    return vs, {(r, s) for r, s in combinations(vs, 2) if r + s <= n}


def test_gk_alt_examples(sieved):
    g5 = gk_alt(5, sieved)
    assert g5.vertices == (2, 3, 5) and not g5.edges
    assert gk_alt(10, sieved).edges == {(2, 3), (2, 5), (3, 5), (3, 7)}
    g3 = gk_alt(3, sieved)
    assert g3.vertices == (3,) and not g3.edges


def test_gk_alt_small_cases(sieved):
    assert gk_alt(1, sieved).vertices == ()
    assert gk_alt(2, sieved).vertices == ()
    g4 = gk_alt(4, sieved)
    assert g4.vertices == (2, 3) and not g4.edges


def test_gk_sym_examples(sieved):
    assert gk_sym(5, sieved).edges == {(2, 3)}
    g2 = gk_sym(2, sieved)
    assert g2.vertices == (2,) and not g2.edges
    assert gk_sym(7, sieved).edges == {(2, 3), (2, 5)}
    assert gk_sym(1, sieved).vertices == ()


def test_sieve_requirement():
    small = sieve(10)
    with pytest.raises(ValueError):
        gk_alt(11, small)
    with pytest.raises(ValueError):
        gk_sym(11, small)
    with pytest.raises(ValueError):
        fast_degree_pattern_alt(11, small)


def test_materialization_limit():
    s = sieve(10**5 + 1)
    with pytest.raises(GraphTooLarge):
        gk_alt(10**5 + 1, s)


@pytest.mark.parametrize("n", list(range(1, 80)) + [97, 200, 331, 625, 1000, 1500])
def test_bitmask_construction_matches_pairwise(sieved, n):
    vs, edges = pairwise_alt(n, sieved)
    g = gk_alt(n, sieved)
    assert list(g.vertices) == vs and g.edges == edges
    vs, edges = pairwise_sym(n, sieved)
    g = gk_sym(n, sieved)
    assert list(g.vertices) == vs and g.edges == edges


def test_alt_vertices_follow_order(sieved):
    for n in range(1, 400):
        keys = set(factor_factorial(n, sieved))
        expected = keys - {2} if n < 4 else keys
        assert set(gk_alt(n, sieved).vertices) == expected


def test_product_examples(sieved):
    five = PrimeGraph([5])
    assert gk_product(gk_alt(5, sieved), five).edges == {(2, 5), (3, 5)}
    g = gk_alt(10, sieved)
    assert gk_product(g, PrimeGraph([])) == g
    assert graphs_equal(gk_product(gk_alt(624, sieved), five), gk_alt(625, sieved))


def test_degree_pattern_examples(sieved):
    d = degree_pattern(gk_alt(10, sieved))
    assert d.primes == (2, 3, 5, 7) and d.degrees == (2, 3, 2, 1)
    assert degree_pattern(PrimeGraph([])) == DegreePattern((), ())
    d625 = degree_pattern(gk_alt(625, sieved))
    assert d625.degree(619) == 3
    assert set(gk_alt(625, sieved).neighbors(619)) == {2, 3, 5}


def test_fast_path_examples(sieved):
    assert fast_degree_pattern_alt(10, sieved).degrees == (2, 3, 2, 1)
    assert fast_degree_pattern_alt(5, sieved).degrees == (0, 0, 0)
    assert fast_degree_pattern_alt(625, sieved).degree(2) == 113


def test_graphs_equal_examples(sieved):
    assert graphs_equal(gk_alt(625, sieved), gk_alt(624, sieved))
    assert not graphs_equal(gk_alt(5, sieved), gk_sym(5, sieved))
    g = gk_sym(30, sieved)
    assert graphs_equal(g, g)


def test_graphs_equal_agrees_with_edge_sets(sieved):
    for n in range(1, 60):
        a, b = gk_alt(n, sieved), gk_alt(n + 1, sieved)
        assert graphs_equal(a, b) == (a.vertices == b.vertices and a.edges == b.edges)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 100, 625, 624, 9999])
def test_fast_equals_slow_boundary(sieved, n):
    assert fast_degree_pattern_alt(n, sieved) == degree_pattern(gk_alt(n, sieved))
    assert fast_degree_pattern_sym(n, sieved) == degree_pattern(gk_sym(n, sieved))


def test_fast_equals_slow_random(sieved):
    rng = random.Random(2024)
    for n in rng.sample(range(1, 10**5 + 1), 15):
        assert fast_degree_pattern_alt(n, sieved) == degree_pattern(gk_alt(n, sieved))
        assert fast_degree_pattern_sym(n, sieved) == degree_pattern(gk_sym(n, sieved))


def test_degree_sum_even(sieved):
    for n in range(1, 300):
        for pat in (fast_degree_pattern_alt(n, sieved), fast_degree_pattern_sym(n, sieved)):
            assert sum(pat.degrees) % 2 == 0
            assert all(d < len(pat) for d in pat.degrees)


def test_criterion_graph_adjacency_matches_explicit(sieved):
    for family, build in (("Alt", gk_alt), ("Sym", gk_sym)):
        for n in (4, 7, 10, 50, 211):
            lazy = CriterionGraph(family, n, sieved)
            g = build(n, sieved)
            assert lazy.vertices == g.vertices
            for p in g.vertices:
                for q in g.vertices:
                    assert lazy.has_edge(p, q) == g.has_edge(p, q)


small_graphs = st.builds(
    lambda vs, picks: PrimeGraph(vs, [e for e, keep in zip(combinations(sorted(vs), 2), picks) if keep]),
    st.sets(st.sampled_from([2, 3, 5, 7, 11, 13, 17]), max_size=5),
    st.lists(st.booleans(), min_size=10, max_size=10),
)


@settings(max_examples=200)
@given(small_graphs, small_graphs, small_graphs)
def test_product_commutative_associative(a, b, c):
    assert graphs_equal(gk_product(a, b), gk_product(b, a))
    assert graphs_equal(gk_product(gk_product(a, b), c), gk_product(a, gk_product(b, c)))


@settings(max_examples=200)
@given(small_graphs, small_graphs)
def test_product_rule(a, b):
    g = gk_product(a, b)
    assert set(g.vertices) == set(a.vertices) | set(b.vertices)
    for p, q in combinations(g.vertices, 2):
        cross = (p in a.vertex_set and q in b.vertex_set) or (q in a.vertex_set and p in b.vertex_set)
        assert g.has_edge(p, q) == (a.has_edge(p, q) or b.has_edge(p, q) or cross)


@settings(max_examples=200)
@given(small_graphs, small_graphs)
def test_product_view_degrees_match_explicit(a, b):
    assert degree_pattern(ProductGraph(a, b)) == degree_pattern(gk_product(a, b))


def test_product_view_with_criterion_factor(sieved):
    rng = random.Random(3)
    for n in [10, 25, 624, 1000] + rng.sample(range(5, 3000), 10):
        for family, build in (("Alt", gk_alt), ("Sym", gk_sym)):
            for other in (PrimeGraph([5]), PrimeGraph([2, 5]), PrimeGraph([2, 5], [(2, 5)]), PrimeGraph([7919])):
                lazy = ProductGraph(CriterionGraph(family, n, sieved), other)
                assert degree_pattern(lazy) == degree_pattern(gk_product(build(n, sieved), other))


def test_json_round_trip(sieved):
    g = gk_alt(100, sieved)
    data = json.loads(json.dumps(g.to_json()))
    assert PrimeGraph.from_json(data) == g
    assert PrimeGraph.from_json(data).to_json() == data
    pat = degree_pattern(g)
    assert DegreePattern.from_json(json.loads(json.dumps(pat.to_json()))) == pat


def test_dot_ordering(sieved):
    dot = gk_alt(10, sieved).to_dot()
    assert dot == (
        'graph "GK" {\n  "2";\n  "3";\n  "5";\n  "7";\n'
        '  "2" -- "3";\n  "2" -- "5";\n  "3" -- "5";\n  "3" -- "7";\n}\n'
    )


def test_summary(sieved):
    assert GraphSummary.of(degree_pattern(gk_alt(10, sieved))) == GraphSummary(4, 4, 1, 3)
    assert GraphSummary.of(DegreePattern((), ())) == GraphSummary(0, 0, 0, 0)


def test_prime_graph_validation():
    with pytest.raises(ValueError):
        PrimeGraph([2, 3], [(2, 2)])
    with pytest.raises(ValueError):
        PrimeGraph([2, 3], [(2, 5)])
    assert PrimeGraph([3, 2], [(3, 2)]).edges == {(2, 3)}
