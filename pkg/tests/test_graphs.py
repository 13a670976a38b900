"""Graph helpers: contraction, connectivity, minor containment."""

from matroidkit import catalog
from matroidkit.graphs import (Graph, contract_edge, from_matroid,
                               has_graph_minor, is_3connected_graph,
                               simplify_graph)


def k_n(n):
    import itertools

    return Graph(n, tuple((f"e{u}{v}", u, v)
                          for u, v in itertools.combinations(range(n), 2)))


def test_from_matroid_unwraps_graphic():
    g = from_matroid(catalog.resolve("wheel:4"))
    assert g is not None and g.nv == 5 and len(g.edges) == 8
    assert from_matroid(catalog.resolve("u24")) is None


def test_3connectivity_of_graphs():
    assert is_3connected_graph(k_n(4))
    assert is_3connected_graph(from_matroid(catalog.resolve("prismgraph")))
    path = Graph(4, (("a", 0, 1), ("b", 1, 2), ("c", 2, 3)))
    assert not is_3connected_graph(path)
    cycle = Graph(4, (("a", 0, 1), ("b", 1, 2), ("c", 2, 3), ("d", 3, 0)))
    assert not is_3connected_graph(cycle)


def test_contract_edge_merges_and_commutes():
    g = k_n(4)
    g1 = contract_edge(contract_edge(g, "e01"), "e23")
    g2 = contract_edge(contract_edge(g, "e23"), "e01")
    shape = lambda gr: (gr.nv, sorted((min(u, v), max(u, v)) for _, u, v in gr.edges))
    assert shape(g1) == shape(g2)


def test_simplify_drops_loops_and_parallels():
    g = Graph(3, (("a", 0, 1), ("b", 0, 1), ("l", 2, 2), ("c", 1, 2), ("d", 2, 0)))
    s = simplify_graph(g)
    assert {e[0] for e in s.edges} == {"a", "c", "d"}


def test_k4_minor_in_wheel():
    w9 = from_matroid(catalog.resolve("wheel:9"))
    assert has_graph_minor(w9, k_n(4))


def test_k5_not_in_k4():
    assert not has_graph_minor(k_n(4), k_n(5))


def test_minor_reflexive():
    assert has_graph_minor(k_n(4), k_n(4))


def test_triangle_lacks_k4():
    assert not has_graph_minor(k_n(3), k_n(4))


def test_k33_not_in_planar_prism():
    # the prism graph is planar; a bipartite K_{3,3} minor would contradict that
    prism = from_matroid(catalog.resolve("prismgraph"))
    k33 = Graph(6, tuple((f"e{u}{v}", u, v) for u in range(3) for v in range(3, 6)))
    assert not has_graph_minor(prism, k33)


def test_k4_minor_after_contraction():
    prism = from_matroid(catalog.resolve("prismgraph"))
    g = simplify_graph(contract_edge(prism, "x1"))
    assert is_3connected_graph(g)
    assert has_graph_minor(g, k_n(4))
