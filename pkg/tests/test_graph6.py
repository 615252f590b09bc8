import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dalpha.errors import Graph6Error
from dalpha.graph6 import emit_graph6, parse_graph6, parse_graph6_lines
from dalpha.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph


def test_known_encodings():
    # standard-format reference values
    assert emit_graph6(complete_graph(2)) == "A_"
    assert emit_graph6(Graph(2, [])) == "A?"
    assert emit_graph6(complete_graph(4)) == "C~"
    assert emit_graph6(Graph(5, [])) == "D??"
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("C~") == complete_graph(4)


def test_parse_rejects_garbage():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated edge bits
    with pytest.raises(Graph6Error):
        parse_graph6("C~~~~")  # trailing junk
    with pytest.raises(Graph6Error):
        parse_graph6("C\x19\x19")  # bytes below the printable range


def test_parse_error_carries_offset():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("C~\x05")
    assert err.value.offset is not None


def test_optional_header_is_accepted():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_parse_lines_reports_line_numbers():
    text = "C~\nbogus line\nBw\n"
    out = list(parse_graph6_lines(text.splitlines()))
    assert len(out) == 3
    assert out[0][1] == complete_graph(4)
    assert isinstance(out[1][1], Graph6Error)
    assert isinstance(out[2][1], Graph)


@given(st.integers(min_value=1, max_value=17), st.data())
@settings(max_examples=200, deadline=None)
def test_roundtrip_random_graphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    g = Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
    assert parse_graph6(emit_graph6(g)) == g


def test_roundtrip_named_families():
    for g in (path_graph(10), star_graph(9), cycle_graph(12), complete_graph(8)):
        assert parse_graph6(emit_graph6(g)) == g


def test_roundtrip_crosses_63_vertex_size_boundary():
    g = path_graph(70)  # needs the 4-byte order encoding
    assert parse_graph6(emit_graph6(g)) == g
