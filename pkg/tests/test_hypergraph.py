import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from sizeramsey.errors import RamseyError
from sizeramsey.hypergraph import (
    Color,
    Coloring,
    are_isomorphic,
    canonical_code,
    cover,
    format_hypergraph,
    induced_subgraph,
    make_hypergraph,
    parse_hypergraph,
    q_neighborhood,
)
from sizeramsey.ramsey import enumerate_hosts


@st.composite
def hosts(draw, max_k=4, max_n=7, max_m=10):
    k = draw(st.integers(2, max_k))
    n = draw(st.integers(k, max_n))
    pool = list(combinations(range(n), k))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=max_m))
    return make_hypergraph(k, range(n), edges)


def relabel(G, perm):
    return make_hypergraph(G.k, range(G.n), [tuple(perm[v] for v in e) for e in G.edges])


def test_make_hypergraph_orders_edges():
    G = make_hypergraph(3, range(4), [(1, 2, 3), (2, 1, 0)])
    assert G.edges == ((0, 1, 2), (1, 2, 3))
    assert G == make_hypergraph(3, range(4), [(0, 1, 2), (1, 2, 3)])


@pytest.mark.parametrize(
    "k, vertices, edges, code",
    [
        (3, range(4), [(0, 1)], "NON_UNIFORM"),
        (2, range(2), [(0, 1), (1, 0)], "DUPLICATE_EDGE"),
        (2, range(2), [(0, 5)], "UNKNOWN_VERTEX"),
        (2, range(3), [(1, 1)], "NON_UNIFORM"),
        (1, range(3), [(1,)], "BAD_PARAMS"),
    ],
)
def test_make_hypergraph_errors(k, vertices, edges, code):
    with pytest.raises(RamseyError) as err:
        make_hypergraph(k, vertices, edges)
    assert err.value.code == code


def test_cover_examples():
    assert cover([(0, 1, 2), (2, 3, 4)]) == {0, 1, 2, 3, 4}
    assert cover([]) == frozenset()
    assert cover([(5, 6, 7)]) == {5, 6, 7}


def test_induced_subgraph_examples():
    G = make_hypergraph(3, range(5), [(0, 1, 2), (1, 2, 3), (2, 3, 4)])
    assert induced_subgraph(G, {0, 1, 2, 3}).edges == ((0, 1, 2), (1, 2, 3))
    assert induced_subgraph(G, G.vertices) == G
    empty = induced_subgraph(G, set())
    assert empty.n == 0 and empty.m == 0
    with pytest.raises(RamseyError, match="UNKNOWN_VERTEX"):
        induced_subgraph(G, {9})


def test_q_neighborhood_examples():
    G = make_hypergraph(3, range(6), [(0, 1, 2), (1, 2, 3), (3, 4, 5)])
    assert q_neighborhood(G, [0], 1) == {0, 1}
    assert q_neighborhood(G, [0], 0) == {0, 1}
    assert q_neighborhood(G, [0], Fraction(3, 2)) == {0, 1}
    assert q_neighborhood(G, [0], (5, 2)) == {0}
    for bad in (-1, 3, Fraction(7, 2)):
        with pytest.raises(RamseyError, match="Q_OUT_OF_RANGE"):
            q_neighborhood(G, [0], bad)
    with pytest.raises(TypeError):
        q_neighborhood(G, [0], 1.5)


@given(hosts(), st.data())
def test_q_neighborhood_contains_z_and_is_monotone(G, data):
    Z = data.draw(st.sets(st.integers(0, max(G.m - 1, 0)))) if G.m else set()
    qs = sorted(data.draw(st.lists(st.fractions(0, G.k - Fraction(1, 7)), min_size=2, max_size=2)))
    small, large = (q_neighborhood(G, Z, q) for q in qs)
    assert set(Z) <= large <= small


@given(hosts(), st.data())
def test_q_neighborhood_matches_definition(G, data):
    Z = data.draw(st.sets(st.integers(0, G.m - 1))) if G.m else set()
    q = data.draw(st.fractions(0, G.k - Fraction(1, 5)))
    want = {i for i, e in enumerate(G.edges) if any(len(set(e) & set(G.edges[j])) > q for j in Z)}
    assert q_neighborhood(G, Z, q) == want


@given(hosts(), st.data())
def test_cover_of_union(G, data):
    ids = range(G.m) if G.m else []
    Z1 = data.draw(st.sets(st.sampled_from(ids))) if G.m else set()
    Z2 = data.draw(st.sets(st.sampled_from(ids))) if G.m else set()
    assert G.cover(Z1 | Z2) == G.cover(Z1) | G.cover(Z2)
    assert cover(G.edges[i] for i in Z1) == G.cover(Z1)


@given(hosts(), st.data())
def test_induced_subgraph_composes(G, data):
    W = data.draw(st.sets(st.sampled_from(G.vertices)))
    W2 = data.draw(st.sets(st.sampled_from(sorted(W)))) if W else set()
    assert induced_subgraph(induced_subgraph(G, W), W2) == induced_subgraph(G, W2)


def test_canonical_code_examples():
    P = make_hypergraph(3, range(5), [(0, 1, 2), (1, 2, 3), (2, 3, 4)])
    Q = relabel(P, [4, 0, 3, 1, 2])
    assert canonical_code(P) == canonical_code(Q)
    triples = make_hypergraph(3, range(9), [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert canonical_code(P) != canonical_code(triples)
    assert canonical_code(make_hypergraph(2, range(3), [])) == canonical_code(make_hypergraph(2, range(3), []))
    with pytest.raises(RamseyError, match="TOO_LARGE"):
        canonical_code(make_hypergraph(2, range(17), []))


@settings(max_examples=40, deadline=None)
@given(hosts(max_n=6, max_m=8))
def test_canonical_code_invariant_under_all_permutations(G):
    code = canonical_code(G)
    for perm in permutations(range(G.n)):
        assert canonical_code(relabel(G, perm)) == code


def _brute_isomorphic(G, H):
    if (G.k, G.n, G.m) != (H.k, H.n, H.m):
        return False
    target = set(H.edges)
    return any(
        {tuple(sorted(perm[v] for v in e)) for e in G.edges} == target for perm in permutations(range(G.n))
    )


def test_canonical_code_separates_non_isomorphic():
    rng = random.Random(3)
    for _ in range(150):
        k, n = rng.choice([(2, 5), (2, 6), (3, 6)])
        pool = list(combinations(range(n), k))
        m = rng.randint(0, 6)
        G = make_hypergraph(k, range(n), rng.sample(pool, m))
        H = make_hypergraph(k, range(n), rng.sample(pool, m))
        assert are_isomorphic(G, H) == _brute_isomorphic(G, H)


def test_host_enumeration_counts_graphs_without_isolated_vertices():
    # number of graphs with m edges and no isolated vertices
    assert [len(enumerate_hosts(2, m, 2 * m)) for m in range(7)] == [1, 1, 2, 5, 11, 26, 68]


def test_host_enumeration_matches_brute_force_for_triples():
    for m in range(1, 4):
        classes = set()
        for edges in combinations(combinations(range(3 * m), 3), m):
            used = sorted({v for e in edges for v in e})
            remap = {v: i for i, v in enumerate(used)}
            G = make_hypergraph(3, range(len(used)), [tuple(remap[v] for v in e) for e in edges])
            classes.add(canonical_code(G))
        assert len(enumerate_hosts(3, m, 3 * m)) == len(classes)


def test_parse_format_round_trip_and_remap():
    text = "# a path\n3 5 3\n0 1 2\n1 2 3  # middle\n2 3 4\n"
    G = parse_hypergraph(text)
    assert format_hypergraph(G) == "3 5 3\n0 1 2\n1 2 3\n2 3 4\n"
    assert parse_hypergraph(format_hypergraph(G)) == G
    H = parse_hypergraph("2 3 2\n10 20\n20 30\n")
    assert H.edges == ((0, 1), (1, 2))


@given(hosts())
def test_parse_format_round_trip_property(G):
    text = format_hypergraph(G)
    assert parse_hypergraph(text) == G
    assert format_hypergraph(parse_hypergraph(text)) == text


@pytest.mark.parametrize("text", ["", "3 5\n", "2 3 2\n0 1\n", "2 2 1\n0 x\n", "2 2 1\n0 1 2\n", "2 1 1\n5 6\n"])
def test_parse_errors(text):
    with pytest.raises(RamseyError):
        parse_hypergraph(text)


def test_coloring_is_total():
    G = make_hypergraph(2, range(3), [(0, 1), (1, 2)])
    with pytest.raises(RamseyError, match="NOT_TOTAL"):
        Coloring(G, [Color.RED])
    c = Coloring.from_red(G, [1])
    assert c.indices(Color.RED) == {1} and c.indices(Color.BLUE) == {0}
    assert Color.RED.other is Color.BLUE
