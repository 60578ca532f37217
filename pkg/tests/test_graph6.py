"""graph6 encoding round-trips."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tricirc.graph6 import Graph6Error, decode_graph6, encode_graph6
from tricirc.graphs import SimpleGraph


def test_known_encodings():
    # single edge on two vertices
    assert encode_graph6(SimpleGraph(2, [(0, 1)])) == b"A_"
    assert encode_graph6(SimpleGraph(1, [])) == b"@"
    # complete graph on 4 vertices
    assert encode_graph6(SimpleGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])) == b"C~"
    assert encode_graph6(SimpleGraph(5, [])) == b"D??"


def test_decode_known():
    g = decode_graph6(b"A_")
    assert g.n == 2 and g.has_edge(0, 1)
    g = decode_graph6(b"C~")
    assert g.n == 4 and g.edge_count() == 6


def test_decode_accepts_str_and_strips_newline():
    assert decode_graph6("A_\n").n == 2


def test_long_form_size_header():
    g = SimpleGraph(63, [(0, 1)])
    blob = encode_graph6(g)
    assert blob.startswith(b"~")
    h = decode_graph6(blob)
    assert h.n == 63 and h.has_edge(0, 1) and h.edge_count() == 1


def test_decode_rejects_garbage():
    with pytest.raises(Graph6Error):
        decode_graph6(b"")
    with pytest.raises(Graph6Error):
        decode_graph6(b"A")  # truncated payload
    with pytest.raises(Graph6Error):
        decode_graph6(b"A_ trailing")


@given(st.integers(0, 20), st.data())
@settings(max_examples=60, deadline=None)
def test_round_trip_random(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = SimpleGraph(n, edges)
    h = decode_graph6(encode_graph6(g))
    assert h.n == g.n
    assert set(h.edges()) == set(g.edges())


def test_round_trip_covers():
    from tricirc.families import t1, t2
    for g in (t1(9, 6, 1), t2(9, 2, 1)):
        h = decode_graph6(encode_graph6(g))
        assert set(h.edges()) == set(g.edges())
