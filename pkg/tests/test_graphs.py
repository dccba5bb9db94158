import pytest
from hypothesis import given
from hypothesis import strategies as st

import classgraphs as cg
from classgraphs.graphs import ClassGraph

from oracles import clique_exists_by_subsets, small_group_battery


def make_graph(n, edges):
    adjacency = tuple(
        tuple((i, j) in edges or (j, i) in edges for j in range(n)) for i in range(n)
    )
    return ClassGraph(
        kind="order",
        vertex_keys=tuple(range(n)),
        labels=tuple(f"v{i}" for i in range(n)),
        adjacency=adjacency,
    )


random_graphs = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.frozensets(
        st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))).filter(
            lambda e: e[0] < e[1]
        )
    ).map(lambda edges: make_graph(n, edges))
)


# -- graph construction ---------------------------------------------------------


def test_abelian_group_has_empty_class_graphs():
    dec = cg.decompose(cg.abelian(2, 4))
    assert cg.order_class_graph(dec).vertex_count == 0
    assert cg.size_class_graph(dec).vertex_count == 0


def test_quaternion_order_graph_is_triangle():
    graph = cg.order_class_graph(cg.decompose(cg.dicyclic(2)))
    assert graph.vertex_count == 3
    assert graph.edges() == ((0, 1), (0, 2), (1, 2))
    assert cg.max_clique(graph) == 3


def test_alternating_five_order_graph_single_edge():
    dec = cg.decompose(cg.alternating(5))
    graph = cg.order_class_graph(dec)
    assert graph.vertex_count == 4
    # only the two order-5 classes share a prime
    assert graph.edges() == ((2, 3),)


def test_alternating_five_size_graph_is_complete():
    graph = cg.size_class_graph(cg.decompose(cg.alternating(5)))
    # sizes 15, 20, 12, 12 share factors pairwise
    assert len(graph.edges()) == 6
    assert cg.max_clique(graph) == 4


def test_symmetric_three_size_graph_has_no_edge():
    graph = cg.size_class_graph(cg.decompose(cg.symmetric(3)))
    assert graph.vertex_count == 2
    assert graph.edges() == ()


def test_vertex_labels_carry_class_index_order_and_size():
    dec = cg.decompose(cg.alternating(5))
    graph = cg.order_class_graph(dec)
    assert graph.labels[0] == "C1:o=2,s=15"


def test_order_and_size_graphs_share_vertices():
    for name, group in small_group_battery():
        dec = cg.decompose(group)
        assert cg.order_class_graph(dec).vertex_keys == cg.size_class_graph(dec).vertex_keys


# -- prime graphs ------------------------------------------------------------------


def test_prime_graph_cyclic_six():
    graph = cg.prime_graph(cg.cyclic(6))
    assert graph.vertex_keys == (2, 3)
    assert graph.edges() == ((0, 1),)


def test_prime_graph_alternating_five_has_no_edges():
    graph = cg.prime_graph(cg.alternating(5))
    assert graph.vertex_keys == (2, 3, 5)
    assert graph.edges() == ()


def test_prime_graph_alternating_seven(catalog_groups):
    graph = cg.prime_graph(catalog_groups["A7"])
    assert graph.vertex_keys == (2, 3, 5, 7)
    assert graph.edges() == ((0, 1),)
    assert cg.primes_adjacent_to_two(graph) == {3}


def test_primes_adjacent_to_two_requires_prime_graph():
    graph = cg.order_class_graph(cg.decompose(cg.symmetric(3)))
    with pytest.raises(ValueError):
        cg.primes_adjacent_to_two(graph)


# -- clique detection ---------------------------------------------------------------


def test_single_vertex_clique():
    assert cg.has_clique(make_graph(3, set()), 1)
    assert not cg.has_clique(make_graph(0, set()), 1)


def test_triangle_cliques():
    triangle = make_graph(3, {(0, 1), (0, 2), (1, 2)})
    assert cg.has_clique(triangle, 3)
    assert not cg.has_clique(triangle, 4)


def test_witness_is_lexicographically_least():
    # two 3-cliques: {1, 2, 3} and {0, 4, 5}; least is (0, 4, 5)
    graph = make_graph(6, {(1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)})
    assert cg.find_clique(graph, 3) == (0, 4, 5)


def test_witness_vertices_are_pairwise_adjacent(catalog_decs):
    graph = cg.size_class_graph(catalog_decs["SL2_5"])
    witness = cg.find_clique(graph, 3)
    assert witness is not None
    for i in witness:
        for j in witness:
            if i != j:
                assert graph.adjacency[i][j]


def test_find_clique_rejects_nonpositive_sizes():
    with pytest.raises(ValueError):
        cg.find_clique(make_graph(2, set()), 0)


def test_max_clique_of_empty_graph_is_zero():
    assert cg.max_clique(make_graph(0, set())) == 0


def test_suzuki_order_graph_max_clique_three(suzuki_dec):
    graph = cg.order_class_graph(suzuki_dec)
    assert graph.vertex_count == 10
    assert cg.has_clique(graph, 3)
    assert not cg.has_clique(graph, 4)
    assert cg.max_clique(graph) == 3


def test_sl2_5_order_graph_max_clique_four(catalog_decs):
    graph = cg.order_class_graph(catalog_decs["SL2_5"])
    assert cg.max_clique(graph) == 4


@given(random_graphs)
def test_clique_search_matches_subset_enumeration(graph):
    for n in range(1, graph.vertex_count + 1):
        assert cg.has_clique(graph, n) == clique_exists_by_subsets(graph, n)


@given(random_graphs)
def test_clique_monotonicity(graph):
    for n in range(2, graph.vertex_count + 1):
        if cg.has_clique(graph, n):
            assert cg.has_clique(graph, n - 1)


@given(random_graphs)
def test_max_clique_is_tight(graph):
    best = cg.max_clique(graph)
    if best:
        assert cg.has_clique(graph, best)
    if best < graph.vertex_count:
        assert not cg.has_clique(graph, best + 1)
