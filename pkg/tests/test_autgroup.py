import random

import pytest

from conftest import brute_aut_order

from symclass import (
    Graph,
    Permutation,
    automorphism_group,
    canonical_form,
    complement,
    is_isomorphic,
    line_graph,
)
from symclass.errors import SizeCapExceeded
from symclass.families import (
    complete,
    complete_bipartite,
    cycle,
    grid_complement,
    hamming,
    icosahedron,
    octahedron,
    petersen,
    preserves_graph,
)

SMALL_GRAPHS = [
    complete(4).graph,
    cycle(5).graph,
    cycle(6).graph,
    octahedron().graph,
    grid_complement(4).graph,
    complete_bipartite(2, 3).graph,
    Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),   # path
    Graph(4, [(0, 1), (2, 3)]),                   # disconnected matching
    Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4)]),   # triangle + edge + isolate
]


@pytest.mark.parametrize("graph", SMALL_GRAPHS, ids=range(len(SMALL_GRAPHS)))
def test_order_matches_brute_force(graph):
    assert automorphism_group(graph).order() == brute_aut_order(graph)


def test_known_orders():
    assert automorphism_group(hamming(2, 3).graph).order() == 72
    assert automorphism_group(icosahedron().graph).order() == 120
    assert automorphism_group(petersen().graph).order() == 120
    assert automorphism_group(complete_bipartite(5, 5).graph).order() == 28800


def test_generators_preserve_adjacency():
    for graph in SMALL_GRAPHS + [petersen().graph]:
        for gen in automorphism_group(graph).generators:
            assert preserves_graph(gen, graph)


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(7)
    for graph in SMALL_GRAPHS + [petersen().graph, hamming(3, 2).graph]:
        canonical, _ = canonical_form(graph)
        for _ in range(3):
            images = list(range(graph.n))
            rng.shuffle(images)
            shuffled = graph.relabel(Permutation(images)) if graph.n else graph
            assert canonical_form(shuffled)[0] == canonical


def test_canonical_form_is_idempotent():
    for graph in SMALL_GRAPHS:
        canonical, _ = canonical_form(graph)
        assert canonical_form(canonical)[0] == canonical


def test_canonical_labeling_is_a_bijection_onto_the_graph():
    for graph in SMALL_GRAPHS:
        canonical, labeling = canonical_form(graph)
        if graph.n == 0:
            continue
        assert graph.relabel(Permutation(labeling)) == canonical


def test_grid_complement_4_is_the_binary_3_cube():
    assert canonical_form(grid_complement(4).graph)[0] == canonical_form(hamming(3, 2).graph)[0]


def test_octahedron_is_line_graph_of_k4():
    lg, _ = line_graph(complete(4).graph)
    result = is_isomorphic(octahedron().graph, lg)
    assert result
    mapping = result.mapping
    g = octahedron().graph
    assert all(lg.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def test_non_isomorphic_pairs():
    assert not is_isomorphic(cycle(5).graph, cycle(6).graph)
    assert not is_isomorphic(cycle(5).graph, complement(cycle(6).graph))
    assert not is_isomorphic(petersen().graph, cycle(10).graph)


def test_isomorphic_after_relabeling():
    rng = random.Random(3)
    for graph in (petersen().graph, octahedron().graph):
        images = list(range(graph.n))
        rng.shuffle(images)
        shuffled = graph.relabel(Permutation(images))
        result = is_isomorphic(graph, shuffled)
        assert result
        assert all(shuffled.has_edge(result.mapping[u], result.mapping[v])
                   for u, v in graph.edges())


def test_empty_and_singleton():
    assert is_isomorphic(Graph(0), Graph(0))
    assert automorphism_group(Graph(1)).order() == 1


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        automorphism_group(Graph(65))
    with pytest.raises(SizeCapExceeded):
        canonical_form(Graph(65))
