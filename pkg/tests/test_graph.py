import pytest
from hypothesis import given
from hypothesis import strategies as st

from antimagic.errors import EmptyGraph, GraphFormatError, NotBiregular
from antimagic.generate import complete_bipartite, even_cycles
from antimagic.graph import (
    BipartiteGraph,
    GraphProfile,
    LabelWindow,
    Labeling,
    Orientation,
    canonicalize,
    format_graph,
    oriented_vertex_sums,
    parse_graph,
    undirected_vertex_sums,
    validate_and_profile,
)

from conftest import biregular_graphs


def test_profile_k23():
    assert validate_and_profile(complete_bipartite(2, 3)) == GraphProfile(2, 3, 3, 2, False)


def test_profile_c4():
    assert validate_and_profile(even_cycles(2)) == GraphProfile(2, 2, 2, 2, False)


def test_profile_swaps_sides():
    g = complete_bipartite(3, 2)
    assert validate_and_profile(g) == GraphProfile(2, 3, 3, 2, True)
    canon, prof = canonicalize(g)
    assert canon.edges == tuple((y, x) for x, y in g.edges)
    assert validate_and_profile(canon) == GraphProfile(2, 3, 3, 2, False)


def test_mixed_degree_side_rejected():
    # path y0 - x0 - y1 - x1 : Y degrees 1 and 2
    g = BipartiteGraph(2, 2, ((0, 0), (0, 1), (1, 1)))
    with pytest.raises(NotBiregular):
        validate_and_profile(g)


def test_empty_graph():
    with pytest.raises(EmptyGraph):
        validate_and_profile(BipartiteGraph(2, 2, ()))


@pytest.mark.parametrize(
    "edges",
    [((0, 0), (0, 0)), ((2, 0),), ((0, -1),)],
)
def test_structural_errors(edges):
    with pytest.raises(GraphFormatError):
        BipartiteGraph(2, 2, edges)


def test_single_arc_sums():
    g = BipartiteGraph(1, 1, ((0, 0),))
    sums = oriented_vertex_sums(g, Orientation((True,)), Labeling((1,)))
    assert sums.x_sums == (-1,) and sums.y_sums == (1,)


def test_c4_all_forward_sign_split():
    g = even_cycles(2)
    sums = oriented_vertex_sums(g, Orientation.all_x_to_y(4), Labeling((1, 2, 3, 4)))
    assert all(v < 0 for v in sums.x_sums)
    assert all(v > 0 for v in sums.y_sums)
    assert sums.total() == 0


def test_sub_edge_set():
    g = even_cycles(2)
    sums = undirected_vertex_sums(g, {0: 5, 1: 7})
    assert sums.x_sums == (5, 7)
    assert sums.y_sums == (12, 0)


def test_label_window():
    w = LabelWindow(3, 6)
    assert w.size == 4 and list(w.values()) == [3, 4, 5, 6]
    assert LabelWindow(1, 0).size == 0
    with pytest.raises(ValueError):
        LabelWindow(5, 2)


def test_format_roundtrip():
    g = complete_bipartite(2, 3)
    text = "# K23\n" + format_graph(g)
    assert parse_graph(text) == g


@pytest.mark.parametrize(
    "text",
    ["", "graph 1 1 1\n0 0\n", "bipartite 1 1 2\n0 0\n", "bipartite 1 1 1\n0\n", "bipartite 1 1 1\na b\n"],
)
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


@st.composite
def _labelled(draw):
    g = draw(biregular_graphs(max_edges=80))
    dirs = draw(st.lists(st.booleans(), min_size=g.edge_count, max_size=g.edge_count))
    labels = draw(st.permutations(range(1, g.edge_count + 1)))
    return g, Orientation(dirs), Labeling(labels)


@given(_labelled())
def test_sums_total_zero(case):
    g, o, lab = case
    assert oriented_vertex_sums(g, o, lab).total() == 0


@given(_labelled(), st.data())
def test_single_reversal_changes_two_sums(case, data):
    g, o, lab = case
    e = data.draw(st.integers(0, g.edge_count - 1))
    before = oriented_vertex_sums(g, o, lab)
    after = oriented_vertex_sums(g, o.flipped(e), lab)
    x, y = g.edges[e]
    dx = after.x_sums[x] - before.x_sums[x]
    dy = after.y_sums[y] - before.y_sums[y]
    assert {dx, dy} == {2 * lab[e], -2 * lab[e]}
    changed = [i for i in range(g.x_count) if after.x_sums[i] != before.x_sums[i]]
    changed += [g.x_count + j for j in range(g.y_count) if after.y_sums[j] != before.y_sums[j]]
    assert changed == [x, g.x_count + y]


@given(biregular_graphs(max_edges=120))
def test_profile_idempotent(g):
    canon, prof = canonicalize(g)
    again = validate_and_profile(canon)
    assert not again.swapped
    assert (again.m, again.n, again.s, again.t) == (prof.m, prof.n, prof.s, prof.t)
    assert prof.m * prof.s == prof.n * prof.t and prof.s >= prof.t and prof.m <= prof.n


@given(biregular_graphs(max_edges=120))
def test_swapped_input_profiles_identically(g):
    prof = validate_and_profile(g)
    swapped = validate_and_profile(g.swap_sides())
    assert (swapped.m, swapped.n, swapped.s, swapped.t) == (prof.m, prof.n, prof.s, prof.t)
    assert swapped.swapped != prof.swapped or prof.s == prof.t
