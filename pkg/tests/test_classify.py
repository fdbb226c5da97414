import pytest

from conftest import brute_is_2dt

from symclass import (
    PermutationGroup,
    check_condition_3_1,
    check_kantor_conditions,
    classify_pair,
    edge_action,
    is_2_geodesic_transitive,
    is_s_arc_transitive,
    is_s_distance_transitive,
    line_graph,
)
from symclass.classify import (
    ROW_GRID_COMPLEMENT_4,
    ROW_HAMMING_2_3,
    ROW_ICOSAHEDRON,
    ROW_LINE_GRAPH,
    ROW_OCTAHEDRON,
)
from symclass.errors import (
    CompleteGraphError,
    DegreeMismatch,
    DisconnectedGraph,
    InvariantCellError,
    NotAnAutomorphismGroup,
)
from symclass.families import (
    agl1,
    alt,
    complete,
    complete_bipartite,
    cycle,
    dihedral,
    direct_product,
    grid_complement,
    hamming,
    hamming_full,
    icosahedral,
    icosahedral_rotations,
    icosahedron,
    octahedral,
    octahedron,
    petersen,
    petersen_sym5,
    psl25,
    sym,
    two_homog_frobenius,
    wreath_bipartite,
    wreath_grid,
    wreath_hamming,
)
from symclass.graphs import Graph


def test_octahedron_full_group_is_2dt_not_2at():
    graph = octahedron().graph
    group = octahedral()
    assert is_s_distance_transitive(graph, group, 2)
    assert not is_s_arc_transitive(graph, group, 2)


def test_complete_graph_is_not_2dt():
    check = is_s_distance_transitive(complete(4).graph, sym(4), 2)
    assert not check
    assert "diameter" in check.reason


def test_grid_complement_with_witness_group():
    graph = grid_complement(4).graph
    group = direct_product(sym(2), alt(4))
    assert is_s_distance_transitive(graph, group, 2)
    assert not is_s_arc_transitive(graph, group, 2)


def test_complete_bipartite_wreath_is_2at():
    for m in (3, 4):
        graph = complete_bipartite(m, m).graph
        assert is_s_arc_transitive(graph, wreath_bipartite(m), 2)


def test_petersen_is_3_arc_transitive():
    assert is_s_arc_transitive(petersen().graph, petersen_sym5(), 3)


def test_2dt_matches_brute_force_oracle():
    cases = [
        (octahedron().graph, octahedral()),
        (grid_complement(4).graph, direct_product(sym(2), alt(4))),
        (grid_complement(4).graph, wreath_grid(4)),
        (grid_complement(4).graph, direct_product(PermutationGroup(2, []), alt(4))),
        (complete_bipartite(3, 3).graph, wreath_bipartite(3)),
        (cycle(6).graph, dihedral(6)),
        (hamming(2, 3).graph, hamming_full(2, 3)),
    ]
    for graph, group in cases:
        expected = brute_is_2dt(graph, group.elements())
        assert bool(is_s_distance_transitive(graph, group, 2)) == expected


def test_2_geodesic_transitivity():
    assert is_2_geodesic_transitive(octahedron().graph, octahedral())
    assert is_2_geodesic_transitive(cycle(6).graph, dihedral(6))
    lp, _ = line_graph(petersen().graph)
    assert is_2_geodesic_transitive(lp, edge_action(petersen_sym5(), petersen().graph))
    with pytest.raises(CompleteGraphError):
        is_2_geodesic_transitive(complete(4).graph, sym(4))


def test_condition_3_1_examples():
    assert check_condition_3_1(direct_product(sym(2), alt(4)), 4).satisfied
    full = check_condition_3_1(wreath_grid(4), 4)
    assert not full.satisfied
    assert full.kernel_three_transitive  # S4 column kernel
    no_swap = check_condition_3_1(direct_product(PermutationGroup(2, []), alt(4)), 4)
    assert not no_swap.satisfied
    assert not no_swap.projects_onto_swap


def test_condition_3_1_rejects_non_product_groups():
    with pytest.raises(InvariantCellError):
        check_condition_3_1(sym(8), 4)
    with pytest.raises(InvariantCellError):
        # independent column actions on the two parts
        check_condition_3_1(wreath_bipartite(4), 4)
    with pytest.raises(DegreeMismatch):
        check_condition_3_1(sym(4), 4)


def test_kantor_conditions():
    assert check_kantor_conditions(two_homog_frobenius(7)).status == "verified"
    verdict = check_kantor_conditions(two_homog_frobenius(11))
    assert verdict.status == "verified"
    assert verdict.evidence["order"] == 55
    assert check_kantor_conditions(sym(4)).status == "skipped"


def test_classify_icosahedron_rows():
    graph = icosahedron().graph
    for group in (icosahedral_rotations(), icosahedral()):
        report = classify_pair(graph, group)
        assert report.matched_row == ROW_ICOSAHEDRON
        assert report.distance_transitive == {1: True, 2: True}
        assert report.arc_transitive[2] is False
        assert report.valency == 5 and report.girth == 3


def test_classify_line_graph_row():
    lp, _ = line_graph(petersen().graph)
    report = classify_pair(lp, edge_action(petersen_sym5(), petersen().graph))
    assert report.matched_row == ROW_LINE_GRAPH
    assert report.neighborhood["second_layer_size"] == 8
    assert report.two_geodesic_transitive


def test_classify_octahedron_and_rook():
    assert classify_pair(octahedron().graph, octahedral()).matched_row == ROW_OCTAHEDRON
    assert classify_pair(hamming(2, 3).graph, hamming_full(2, 3)).matched_row == ROW_HAMMING_2_3


def test_classify_grid_rows():
    report = classify_pair(grid_complement(4).graph, direct_product(sym(2), alt(4)))
    assert report.matched_row == ROW_GRID_COMPLEMENT_4
    report5 = classify_pair(grid_complement(5).graph, direct_product(sym(2), agl1(5)))
    assert report5.matched_row == "grid_complement(5)"
    report6 = classify_pair(grid_complement(6).graph, direct_product(sym(2), psl25()))
    assert report6.matched_row == "grid_complement(6)"


def test_classify_octahedron_index2_subgroups():
    from symclass import enumerate_subgroups, induced_action
    graph = octahedron().graph
    blocks = [{0, 3}, {1, 4}, {2, 5}]
    for sub in enumerate_subgroups(octahedral()):
        if sub.order() != 24:
            continue
        report = classify_pair(graph, sub)
        image_order = induced_action(sub, blocks)[0].order()
        if image_order == 6:
            assert report.matched_row == ROW_OCTAHEDRON
        else:
            assert not report.distance_transitive[2]
            assert report.matched_row is None


def test_classify_k44_is_2at_hence_no_row():
    report = classify_pair(complete_bipartite(4, 4).graph, wreath_bipartite(4))
    assert report.distance_transitive[2] and report.arc_transitive[2]
    assert report.matched_row is None


def test_classify_complete_graph():
    report = classify_pair(complete(5).graph, sym(5))
    assert not report.distance_transitive[2]
    assert report.two_geodesic_transitive is None
    assert report.matched_row is None


def test_classify_hamming_frobenius_instance():
    report = classify_pair(hamming(7, 2).graph,
                           wreath_hamming(two_homog_frobenius(7), 7))
    assert report.distance_transitive[2] and not report.arc_transitive[2]
    assert report.matched_row is None  # valency 7 is outside the catalog
    assert report.intersection_triples[2][0] == 2


def test_shortcut_records_agree():
    pairs = [
        (octahedron().graph, octahedral()),
        (cycle(5).graph, dihedral(5)),
        (petersen().graph, petersen_sym5()),
        (icosahedron().graph, icosahedral()),
    ]
    for graph, group in pairs:
        report = classify_pair(graph, group)
        for record in report.shortcuts.values():
            assert record["agrees"]


def test_classify_validation_errors():
    with pytest.raises(DegreeMismatch):
        classify_pair(octahedron().graph, sym(4))
    with pytest.raises(DisconnectedGraph):
        classify_pair(Graph(4, [(0, 1), (2, 3)]), PermutationGroup(4, []))
    with pytest.raises(NotAnAutomorphismGroup):
        classify_pair(octahedron().graph, sym(6))


def test_report_serializes():
    report = classify_pair(octahedron().graph, octahedral())
    data = report.to_dict()
    assert data["graph"]["valency"] == 4
    assert data["matched_row"] == ROW_OCTAHEDRON
    assert data["distance_transitive"]["2"] is True
    import json
    json.dumps(data)  # must be JSON-serializable
