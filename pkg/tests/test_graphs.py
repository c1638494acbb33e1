import pytest
from hypothesis import given, settings

from conftest import labeled_trees
from prdom import (
    Forest,
    Graph,
    ParseError,
    Tree,
    diameter,
    emit_edge_list,
    leaves_of,
    longest_path,
    make_double_star,
    make_path,
    make_spider,
    make_star,
    parse_edge_list,
    remove_vertex,
)


def test_parse_edge_list_p3():
    g = parse_edge_list(b"3\n0 1\n1 2")
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.degree(1) == 2


def test_parse_edge_list_k1():
    g = parse_edge_list(b"1")
    assert g.n == 1 and g.m == 0


def test_parse_edge_list_star_matches_constructor():
    g = parse_edge_list(b"4\n0 1\n0 2\n0 3")
    assert g == make_star(3).graph


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\n0 5", 2),          # label out of range
        ("3\n0 1\n0 1", 3),     # duplicate edge
        ("3\n1 0\n0 1", 3),     # duplicate, reversed
        ("3\n2 2", 2),          # self-loop
        ("3\n0 1 2", 2),        # malformed line
        ("3\nx y", 2),          # non-integer
        ("zz", 1),              # bad count
    ],
)
def test_parse_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line


def test_edge_list_round_trip():
    t = make_double_star(2, 3)
    assert parse_edge_list(emit_edge_list(t.graph)) == t.graph


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_tree_rejects_cycles_and_disconnection():
    with pytest.raises(ValueError):
        Tree(Graph(3, [(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(ValueError):
        Tree(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        Tree(Graph(0, []))


def test_constructors():
    ds = make_double_star(2, 2)
    assert ds.n == 6
    assert ds.degree(0) == 3 and ds.degree(1) == 3
    assert make_path(3).graph.edges() == [(0, 1), (1, 2)]
    star = make_star(3)
    assert star.degree(0) == 3
    spider = make_spider([2, 2, 2])
    assert spider.n == 7 and spider.degree(0) == 3
    assert make_spider([]).n == 1
    with pytest.raises(ValueError):
        make_path(0)
    with pytest.raises(ValueError):
        make_star(0)
    with pytest.raises(ValueError):
        make_double_star(0, 1)
    with pytest.raises(ValueError):
        make_spider([0])


def test_leaves_of():
    ds = make_double_star(2, 2)
    assert leaves_of(ds, 0) == {2, 3}
    assert leaves_of(make_path(4), 1) == {0}
    assert leaves_of(make_star(3), 0) == {1, 2, 3}
    with pytest.raises(ValueError):
        leaves_of(ds, 6)


def test_longest_path_and_diameter():
    assert diameter(make_path(6)) == 5
    assert longest_path(make_path(6)) == [0, 1, 2, 3, 4, 5]
    assert diameter(make_path(1)) == 0
    assert longest_path(make_path(1)) == [0]
    assert diameter(make_double_star(2, 2)) == 3
    # lowest start label, then lexicographically smallest continuation
    spider = make_spider([2, 2, 2])
    assert longest_path(spider) == [2, 1, 0, 3, 4]


def test_longest_path_realizes_diameter():
    for t in (make_star(4), make_double_star(3, 1), make_spider([1, 2, 3])):
        path = longest_path(t)
        assert len(path) == diameter(t) + 1
        for u, v in zip(path, path[1:]):
            assert v in t.adjacency[u]
        assert len(set(path)) == len(path)


def test_remove_vertex_middle_of_path():
    f = remove_vertex(make_path(6), 3)
    assert f.n == 5 and f.ncomponents == 2
    assert sorted(t.n for t, _ in f.component_trees()) == [2, 3]


def test_remove_vertex_star_center():
    f = remove_vertex(make_star(3), 0)
    assert f.ncomponents == 3
    assert all(t.n == 1 for t, _ in f.component_trees())


def test_remove_vertex_leaf_of_path():
    f = remove_vertex(make_path(6), 0)
    assert f.ncomponents == 1
    tree, labels = f.component_trees()[0]
    assert tree.graph == make_path(5).graph
    assert labels == (0, 1, 2, 3, 4)


def test_remove_vertex_k1_gives_empty_forest():
    f = remove_vertex(make_path(1), 0)
    assert f.n == 0 and f.ncomponents == 0


def test_forest_rejects_cycles():
    with pytest.raises(ValueError):
        Forest(Graph(3, [(0, 1), (1, 2), (2, 0)]))


@given(labeled_trees(min_n=2, max_n=30))
@settings(max_examples=100)
def test_remove_vertex_components_partition_the_rest(t):
    for v in range(0, t.n, max(1, t.n // 3)):
        f = remove_vertex(t, v)
        assert f.n == t.n - 1
        parts = f.component_trees()
        assert sum(tree.n for tree, _ in parts) == t.n - 1
        internal = t.degree(v) if t.n > 1 else 0
        assert f.ncomponents == internal
