import random

import pytest

from cfic.closed_form import color_cycle, cycle_graph
from cfic.errors import GraphError, PartialColoringError, UnknownVertexError
from cfic.graph import Graph, Incidence, IncidenceColoring, conflicting, incidences_at, palette_count, verify

from .graphs import atlas, build, path, star


def test_build_interns_tokens_in_order_of_first_appearance():
    g = build(("b", "a"), ("a", "c"), vertices=["z"])
    assert g.labels == ("z", "b", "a", "c")
    assert g.order == 4
    assert g.size == 2
    assert all(u < v for u, v in g.edges)
    assert g.degree(g.vertex_id("a")) == 2
    assert g.min_degree == 0 and g.max_degree == 2


def test_build_rejects_loops_and_parallel_edges():
    with pytest.raises(GraphError):
        build(("a", "a"))
    with pytest.raises(GraphError) as exc:
        build(("a", "b"), ("b", "a"))
    assert exc.value.code == "INVALID_GRAPH"


def test_unknown_vertex():
    g = path(2)
    with pytest.raises(UnknownVertexError) as exc:
        g.vertex_id("nope")
    assert exc.value.details == {"vertex": "nope"}
    assert not g.has_vertex("nope")


def test_incidences_and_incidence_sets():
    g = star(3)
    assert len(list(g.incidences())) == 2 * g.size
    center = g.vertex_id("c")
    assert len(incidences_at(g, center)) == 6
    assert len(incidences_at(g, g.vertex_id("l1"))) == 2


def test_conflict_rules():
    g = path(3)  # p0-p1-p2-p3
    p0, p1, p2, p3 = (g.vertex_id(f"p{i}") for i in range(4))
    e01, e12, e23 = g.edge_between(p0, p1), g.edge_between(p1, p2), g.edge_between(p2, p3)
    # same vertex
    assert conflicting(g, Incidence(p1, e01), Incidence(p1, e12))
    # the two ends of one edge
    assert conflicting(g, Incidence(p0, e01), Incidence(p1, e01))
    # uv is one of the edges
    assert conflicting(g, Incidence(p0, e01), Incidence(p1, e12))
    # e = uw, f = vw
    assert conflicting(g, Incidence(p0, e01), Incidence(p2, e12))
    assert conflicting(g, Incidence(p2, e12), Incidence(p0, e01))
    # edges at distance two never conflict
    assert not conflicting(g, Incidence(p0, e01), Incidence(p3, e23))
    assert not conflicting(g, Incidence(p1, e01), Incidence(p2, e23))


def test_conflict_relation_matches_shared_incidence_sets():
    for g in atlas(5):
        sets = [incidences_at(g, w) for w in range(g.order)]
        incs = list(g.incidences())
        for i in incs:
            for j in incs:
                if i == j:
                    continue
                assert conflicting(g, i, j) == any(i in s and j in s for s in sets)


def test_conflict_relation_is_symmetric_and_irreflexive():
    for g in atlas(5):
        incs = list(g.incidences())
        for i in incs:
            assert not conflicting(g, i, i)
            for j in incs:
                assert conflicting(g, i, j) == conflicting(g, j, i)


def test_triangle_incidences_all_conflict():
    g = cycle_graph(3)
    incs = list(g.incidences())
    assert all(conflicting(g, i, j) for i in incs for j in incs if i != j)


def test_verify_accepts_cycle_coloring():
    g, c = color_cycle(6)
    assert verify(g, c)
    assert palette_count(c) == 4


def test_verify_reports_witness():
    g = path(2)
    c = IncidenceColoring.from_pairs(g, {("p0", "p1"): (1, 2), ("p1", "p2"): (2, 3)})
    result = verify(g, c)
    assert not result
    assert g.labels[result.witness] in {"p0", "p1", "p2"}
    assert result.color == 2
    assert {result.first, result.second} <= set(g.incidences())


def _clashes(g, c):
    incs = list(g.incidences())
    return [
        (i, j)
        for n, i in enumerate(incs)
        for j in incs[n + 1:]
        if conflicting(g, i, j) and c.color(g, i) == c.color(g, j)
    ]


def test_verify_agrees_with_a_pairwise_conflict_scan():
    rng = random.Random(7)
    for g in atlas(5):
        if g.size == 0:
            continue
        palette = 2 * g.max_degree + 1
        for _ in range(20):
            c = IncidenceColoring(
                tuple((rng.randint(1, palette), rng.randint(1, palette)) for _ in range(g.size))
            )
            result = verify(g, c)
            clashes = _clashes(g, c)
            assert bool(result) == (not clashes)
            if not result:
                assert conflicting(g, result.first, result.second)
                assert c.color(g, result.first) == c.color(g, result.second) == result.color


def test_verify_rejects_partial_coloring():
    g = path(2)
    with pytest.raises(PartialColoringError):
        verify(g, IncidenceColoring(((1, 2), (None, None))))
    with pytest.raises(PartialColoringError):
        verify(g, IncidenceColoring(((1, 2),)))


def test_from_map_requires_every_incidence():
    g = path(1)
    with pytest.raises(PartialColoringError):
        IncidenceColoring.from_map(g, {("p0", "p1"): 1})


def test_as_map_round_trip():
    g, c = color_cycle(5)
    assert IncidenceColoring.from_map(g, c.as_map(g)) == c


def test_components_and_subgraph():
    g = build(("a", "b"), ("c", "d"), ("d", "e"), vertices=["x"])
    parts = g.components()
    assert [p.order for p in parts] == [1, 2, 3]
    assert not g.is_connected()
    assert parts[2].is_connected()
    assert g.subgraph(["c", "d"]).size == 1


def test_cycle_order_walks_the_cycle():
    g = build(("a", "c"), ("c", "b"), ("b", "d"), ("d", "a"))
    walk = g.cycle_order()
    assert len(walk) == 4
    for i, v in enumerate(walk):
        assert g.edge_between(v, walk[(i + 1) % 4]) is not None
    assert not path(3).is_cycle()


def test_graph_is_immutable():
    g = path(1)
    with pytest.raises(AttributeError):
        g.labels = ("x",)
    assert isinstance(g, Graph)
