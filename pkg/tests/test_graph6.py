import pytest

from symclass import Graph, decode_graph6, decode_graph6_lines, encode_graph6
from symclass.errors import Graph6Error
from symclass.families import (
    complete,
    cycle,
    grid_complement,
    hamming,
    icosahedron,
    octahedron,
    petersen,
)


def test_k4_is_c_tilde():
    # n=4 -> chr(67)='C'; all six upper-triangle bits set -> 63+63 = '~'
    assert encode_graph6(complete(4).graph) == "C~"
    assert decode_graph6("C~") == complete(4).graph


def test_empty_graph():
    assert decode_graph6("?") == Graph(0)
    assert encode_graph6(Graph(0)) == "?"


def test_round_trip_corpus():
    graphs = [complete(1).graph, complete(7).graph, cycle(9).graph,
              octahedron().graph, icosahedron().graph, petersen().graph,
              grid_complement(6).graph, hamming(5, 2).graph, Graph(5)]
    for g in graphs:
        assert decode_graph6(encode_graph6(g)) == g


def test_size_header_boundary():
    small = Graph(62, [(0, 61)])
    assert not encode_graph6(small).startswith("~")
    assert decode_graph6(encode_graph6(small)) == small
    g = Graph(63, [(0, 1), (10, 62)])
    code = encode_graph6(g)
    assert code.startswith("~")
    assert decode_graph6(code) == g


def test_size_cap():
    with pytest.raises(Graph6Error):
        encode_graph6(Graph(258048))


def test_invalid_byte_reports_position():
    with pytest.raises(Graph6Error, match="position"):
        decode_graph6("C\x07")


def test_truncated_body():
    with pytest.raises(Graph6Error, match="expected"):
        decode_graph6("E~")  # 6 vertices need 3 body bytes


def test_nonzero_padding_rejected():
    # K3 is "Bw": n=3, bits 11 padded with four zeros; force a padding bit on
    assert decode_graph6("Bw").edge_count() == 3
    with pytest.raises(Graph6Error, match="padding"):
        decode_graph6("B" + chr(63 + 0b111111))


def test_decode_lines():
    text = "\n".join([encode_graph6(cycle(5).graph), "", encode_graph6(complete(3).graph)])
    graphs = decode_graph6_lines(text)
    assert [g.n for g in graphs] == [5, 3]
    with pytest.raises(Graph6Error, match="line 2"):
        decode_graph6_lines("C~\nC\x07\n")
