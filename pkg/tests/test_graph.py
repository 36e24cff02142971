import itertools

import pytest

from edgecone import (EdgeListParseError, EnumerationGateError, Graph,
                      bipartite_component_count, edge_vectors,
                      independent_sets, is_independent, neighbor_set,
                      parse_graph)
from battery import build, path, random_connected, star

import random

TRIANGLE = "a b\nb c\nc a"


def test_parse_triangle():
    g = parse_graph(TRIANGLE)
    assert g.vertices == ("a", "b", "c")
    assert g.edges == ((0, 1), (1, 2), (0, 2))
    assert len(g.components) == 1
    assert g.bipartitions == (None,)


def test_parse_single_edge():
    g = parse_graph("a b")
    assert g.vertices == ("a", "b")
    assert g.edges == ((0, 1),)
    assert g.bipartitions == (((0,), (1,)),)


def test_parse_first_appearance_order():
    g = parse_graph("c a\na b")
    assert g.vertices == ("c", "a", "b")
    assert g.index_of("b") == 2
    with pytest.raises(KeyError):
        g.index_of("z")


def test_parse_comments_blanks_isolated():
    g = parse_graph("# header\n\na b\n\nlonely\n# trailing\n")
    assert g.vertices == ("a", "b", "lonely")
    assert g.edges == ((0, 1),)
    assert len(g.components) == 2


def test_parse_rejects_loop_with_line_number():
    with pytest.raises(EdgeListParseError, match="line 2"):
        parse_graph("a b\na a")


def test_parse_rejects_duplicate_edge():
    with pytest.raises(EdgeListParseError, match="duplicate"):
        parse_graph("a b\nb a")


def test_parse_rejects_malformed_line():
    with pytest.raises(EdgeListParseError, match="line 1"):
        parse_graph("a b c")


def test_graph_rejects_unnormalized_and_out_of_range():
    with pytest.raises(ValueError):
        Graph(("a", "b"), ((1, 0),))
    with pytest.raises(ValueError):
        Graph(("a", "b"), ((0, 5),))
    with pytest.raises(ValueError):
        Graph(("a", "a"), ())


def test_bipartition_side1_contains_smallest_index():
    # center last: side 1 must be the leaf side
    g = star(3)
    assert g.bipartitions[0] == ((0, 1, 2), (3,))
    # center first: side 1 is the {center} side
    g2 = parse_graph("d a\nd b\nd c")
    assert g2.bipartitions[0] == ((0,), (1, 2, 3))


def test_neighbor_set():
    g = star(3)
    assert neighbor_set(g, [3]) == (0, 1, 2)
    assert neighbor_set(g, []) == ()
    p3 = path(3)
    assert neighbor_set(p3, [0, 2]) == (1,)
    with pytest.raises(ValueError):
        neighbor_set(g, [9])


def test_is_independent():
    tri = parse_graph(TRIANGLE)
    assert not is_independent(tri, [0, 1])
    assert is_independent(star(3), [0, 1, 2])
    assert is_independent(tri, [])


def test_independent_sets_small_graphs():
    single = parse_graph("a b")
    assert list(independent_sets(single)) == [(0,), (1,)]
    tri = parse_graph(TRIANGLE)
    assert list(independent_sets(tri)) == [(0,), (1,), (2,)]
    k13 = star(3)
    got = set(independent_sets(k13))
    leaves = {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}
    assert got == leaves | {(3,)}


def test_independent_sets_order_is_size_then_lex():
    g = path(4)
    sets = list(independent_sets(g))
    assert sets == sorted(sets, key=lambda a: (len(a), a))
    assert sets[0] == (0,)


def test_independent_sets_gate():
    g = build(6, [(0, 1)])
    with pytest.raises(EnumerationGateError, match="exponential enumeration"):
        list(independent_sets(g, max_vertices=5))
    # override allows it
    assert len(list(independent_sets(g, max_vertices=6))) > 0


def test_enumeration_matches_exhaustive_filter():
    rng = random.Random(7)
    graphs = [random_connected(rng.randint(2, 10), rng, 0.35)
              for _ in range(8)]
    graphs.append(random_connected(12, rng, 0.3))
    for g in graphs:
        n = g.vertex_count
        expected = {combo
                    for size in range(1, n + 1)
                    for combo in itertools.combinations(range(n), size)
                    if is_independent(g, combo)}
        assert set(independent_sets(g, max_vertices=12)) == expected


def test_bipartite_component_count():
    assert bipartite_component_count(parse_graph(TRIANGLE)) == 0
    assert bipartite_component_count(parse_graph("a b")) == 1
    assert bipartite_component_count(parse_graph("a b\nb c\nc a\nx y")) == 1
    assert bipartite_component_count(parse_graph("a")) == 1
    # matches the number of stored bipartitions
    g = parse_graph("a b\nb c\nc a\nu v\nw")
    assert bipartite_component_count(g) == sum(
        1 for b in g.bipartitions if b is not None)


def test_edge_vectors():
    tri = parse_graph(TRIANGLE)
    assert edge_vectors(tri) == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    assert edge_vectors(parse_graph("a b")) == ((1, 1),)
    assert edge_vectors(parse_graph("a\nb")) == ()


def test_neighbors_symmetric_across_edges():
    rng = random.Random(11)
    for trial in range(10):
        g = random_connected(rng.randint(2, 9), rng, 0.4)
        for i, j in g.edges:
            assert j in neighbor_set(g, [i])
            assert i in neighbor_set(g, [j])


def test_independence_matches_edge_vector_support():
    rng = random.Random(13)
    for trial in range(6):
        g = random_connected(rng.randint(2, 8), rng, 0.5)
        vectors = edge_vectors(g)
        for size in range(1, g.vertex_count + 1):
            for a in itertools.combinations(range(g.vertex_count), size):
                inside = set(a)
                support_free = all(
                    not set(k for k, c in enumerate(v) if c) <= inside
                    for v in vectors)
                assert is_independent(g, a) == support_free
