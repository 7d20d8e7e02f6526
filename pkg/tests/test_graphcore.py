import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowmatch.graphcore import (
    EdgeColoring,
    FormatError,
    Graph,
    Matching,
    all_edges,
    canonical_edge,
    complete_graph,
    edge_index,
    normalize_colors,
    parse_coloring,
    parse_graph,
    serialize_coloring,
    serialize_graph,
)


def test_canonical_edge_normalizes():
    assert canonical_edge(3, 1) == (1, 3)
    assert canonical_edge(1, 3) == (1, 3)
    with pytest.raises(ValueError):
        canonical_edge(2, 2)


def test_edge_index_matches_canonical_order():
    for n in (2, 3, 5, 8):
        for i, (u, v) in enumerate(all_edges(n)):
            assert edge_index(n, u, v) == i
            assert edge_index(n, v, u) == i


def test_complete_graph_edge_count():
    for n in range(1, 10):
        assert len(complete_graph(n).edges) == n * (n - 1) // 2
    with pytest.raises(ValueError):
        complete_graph(0)


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(0, 3)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(2, 1)}))  # not normalized
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))


def test_graph_complement_partitions_edges():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (1, 4)])
    comp = g.complement()
    assert g.edges & comp.edges == frozenset()
    assert g.edges | comp.edges == complete_graph(5).edges


def test_matching_rejects_shared_vertex():
    with pytest.raises(ValueError):
        Matching.from_edges([(0, 1), (1, 2)])
    m = Matching.from_edges([(0, 1), (2, 3)])
    assert len(m) == 2
    assert m.vertices() == frozenset({0, 1, 2, 3})


def test_normalize_colors_restricted_growth():
    assert normalize_colors([5, 5, 9, 5, 2]) == (1, 1, 2, 1, 3)
    assert normalize_colors([]) == ()


def test_coloring_validation():
    with pytest.raises(ValueError):
        EdgeColoring(3, (1, 2), 2)  # wrong length
    with pytest.raises(ValueError):
        EdgeColoring(3, (1, 1, 3), 3)  # color 2 unused
    col = EdgeColoring.from_sequence(3, [7, 7, 9])
    assert col.colors == (1, 1, 2)
    assert col.c == 2


def test_coloring_from_map_and_accessors():
    col = EdgeColoring.from_map(3, {(0, 1): 1, (0, 2): 2, (1, 2): 1})
    assert col.color_of(2, 1) == 1
    mat = col.color_matrix()
    assert mat[0, 2] == 2 and mat[2, 0] == 2
    assert col.color_classes()[1] == [(0, 1), (1, 2)]
    assert col.class_sizes() == (1, 2)


def test_graph_round_trip():
    g = Graph.from_edges(6, [(4, 0), (1, 2), (3, 5)])
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_coloring_round_trip_preserves_non_rgs_order():
    # valid coloring whose colors are not in first-occurrence order
    col = EdgeColoring(3, (2, 1, 2), 2)
    text = serialize_coloring(col)
    assert parse_coloring(text) == col
    assert serialize_coloring(parse_coloring(text)) == text


def test_parse_coloring_normalizes_sparse_colors():
    text = "3 9\n0 1 7\n0 2 7\n1 2 9\n"
    col = parse_coloring(text)
    assert col.colors == (1, 1, 2)
    assert col.c == 2


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n0 0\n",
        "3\n0 3\n",
        "3\n0 1\n0 1\n",
        "3\n0 1 2\n",
        "x\n",
    ],
)
def test_parse_graph_errors(text):
    with pytest.raises(FormatError):
        parse_graph(text)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n",
        "3 1\n0 1 1\n",  # incomplete
        "3 1\n0 1 1\n0 1 1\n1 2 1\n0 2 1\n",  # repeated edge
        "3 1\n0 1 0\n0 2 1\n1 2 1\n",  # non-positive color
        "3 1\n0 1 1\n0 2 1\n1 3 1\n",  # vertex out of range
    ],
)
def test_parse_coloring_errors(text):
    with pytest.raises(FormatError):
        parse_coloring(text)


def test_format_error_reports_line():
    with pytest.raises(FormatError) as exc:
        parse_graph("4\n0 1\n0 4\n")
    assert exc.value.line == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.data())
def test_graph_round_trip_random(n, data):
    pool = all_edges(n)
    chosen = data.draw(st.sets(st.sampled_from(pool)))
    g = Graph(n, frozenset(chosen))
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.data())
def test_coloring_round_trip_random(n, data):
    m = n * (n - 1) // 2
    seq = data.draw(st.lists(st.integers(1, 5), min_size=m, max_size=m))
    col = EdgeColoring.from_sequence(n, seq)
    assert parse_coloring(serialize_coloring(col)) == col
