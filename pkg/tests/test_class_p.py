import random

import pytest

from cfic.class_p import (
    attach_appendage,
    build_p_member,
    classify,
    color_class_p,
    color_class_p_plus,
    find_p_split,
    is_in_p,
    is_in_p_plus,
    parse_steps,
    peel,
    replay,
)
from cfic.closed_form import cycle_graph
from cfic.errors import NotInClassError, ParseError, PreconditionError
from cfic.gadgets import GadgetKind, k4_plus, k4_plus_coloring, paste_g, paste_h
from cfic.graph import Graph, palette_count, verify
from cfic.oracle import chi_exact, feasible

from .graphs import edge_set, k4_plus_with_path, prism, random_p_member


def test_k4_plus_peels_to_an_empty_trace():
    trace = peel(k4_plus())
    assert trace.steps == ()
    assert sorted(trace.base) == ["a", "b", "c", "d", "s"]
    assert trace.base["s"] == "s"
    c = color_class_p(k4_plus())
    assert verify(k4_plus(), c)
    assert palette_count(c) == palette_count(k4_plus_coloring()) == 7


def test_one_paste_round_trip():
    g = paste_g(k4_plus(), "s", 2)
    trace = peel(g)
    assert len(trace.steps) == 1
    assert trace.steps[0].kind is GadgetKind.G2
    assert edge_set(replay(trace)) == edge_set(g)


def test_h_paste_round_trip():
    g = paste_h(k4_plus(), ("c", "d"), 2)
    trace = peel(g)
    assert trace.steps
    assert edge_set(replay(trace)) == edge_set(g)


@pytest.mark.parametrize("g", [cycle_graph(6), cycle_graph(5), prism()])
def test_non_members(g):
    with pytest.raises(NotInClassError) as exc:
        peel(g)
    assert exc.value.code == "NOT_IN_P"
    assert not is_in_p(g)
    assert not is_in_p_plus(g)
    assert classify(g) == "other"


def test_small_members_need_seven_colors():
    for g in (paste_g(k4_plus(), "s", 2), paste_h(k4_plus(), ("a", "c"), 1)):
        c = color_class_p(g)
        assert verify(g, c)
        assert palette_count(c) == 7
        assert feasible(g, 6) is None


@pytest.mark.parametrize("seed", range(50))
def test_random_members(seed):
    g = random_p_member(seed)
    degrees = sorted(g.degree(v) for v in range(g.order))
    assert degrees[0] == 2 and degrees[1:] == [3] * (g.order - 1)

    trace = peel(g)
    assert edge_set(replay(trace)) == edge_set(g)

    c = color_class_p(g)
    assert verify(g, c)
    assert palette_count(c) == 7
    if g.size <= 12:
        assert chi_exact(g).chi == 7


def test_members_built_from_explicit_steps():
    g = build_p_member(parse_steps("g2, g4, g8, h3"))
    assert is_in_p(g)
    assert classify(g) == "P"
    assert edge_set(replay(peel(g))) == edge_set(g)


def test_parse_steps():
    assert parse_steps("g2,h1,H3") == [(GadgetKind.G2, 2), (GadgetKind.H, 1), (GadgetKind.H, 3)]
    assert parse_steps("") == []
    for bad in ("g3", "h0", "h", "x"):
        with pytest.raises(ParseError):
            parse_steps(bad)


def test_build_uses_the_rng_for_h_anchors():
    ops = parse_steps("h1,h1")
    a = build_p_member(ops, rng=random.Random(1))
    b = build_p_member(ops, rng=random.Random(1))
    assert edge_set(a) == edge_set(b)


def test_p_plus_member_with_a_pendant_path():
    g = k4_plus_with_path(2)
    assert not is_in_p(g)
    assert is_in_p_plus(g)
    assert classify(g) == "P+"
    split = find_p_split(g)
    assert split is not None and split.u == "s"
    c = color_class_p_plus(g)
    assert verify(g, c)
    assert palette_count(c) == 7
    assert feasible(g, 6) is None


@pytest.mark.parametrize("seed", range(10))
def test_random_p_plus_members(seed):
    rng = random.Random(1000 + seed)
    member = random_p_member(seed, max_steps=3)
    g = attach_appendage(member, rng.choice(["path1", "path2", "path3", "cycle4"]))
    assert is_in_p_plus(g)
    c = color_class_p_plus(g)
    assert verify(g, c)
    assert palette_count(c) == 7


def test_nested_p_plus_member():
    # two class P members joined by a bridge between their degree-2 vertices
    left = k4_plus()
    right = paste_g(k4_plus(), "s", 2).to_networkx()
    h = left.to_networkx()
    h.add_edges_from((f"r.{a}", f"r.{b}") for a, b in right.edges())
    low = next(v for v in right if right.degree(v) == 2)
    h.add_edge("s", f"r.{low}")
    g = Graph.from_networkx(h)
    assert classify(g) == "P+"
    c = color_class_p_plus(g)
    assert verify(g, c)
    assert palette_count(c) == 7


def test_color_class_p_plus_rejects_non_members():
    with pytest.raises(NotInClassError) as exc:
        color_class_p_plus(cycle_graph(6))
    assert exc.value.code == "NOT_IN_P_PLUS"
    with pytest.raises(NotInClassError):
        color_class_p_plus(prism())


def test_appendages():
    g = attach_appendage(k4_plus(), "cycle4")
    assert (g.order, g.size) == (9, 12)
    assert g.max_degree == 3
    with pytest.raises(ParseError):
        attach_appendage(k4_plus(), "star3")
    with pytest.raises(PreconditionError):
        attach_appendage(g, "path1")
