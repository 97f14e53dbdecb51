# Small graphs shared by the test modules.
import random

import networkx as nx

from cfic.class_p import attach_appendage, build_p_member
from cfic.closed_form import complete_graph, cycle_graph
from cfic.gadgets import GadgetKind, k4_plus, paste_g, paste_h
from cfic.graph import Graph


def build(*edges, vertices=()):
    return Graph.build(edges, vertices=vertices)


def path(n):
    """Path with n edges."""
    return build(*[(f"p{i}", f"p{i + 1}") for i in range(n)])


def star(k):
    return build(*[("c", f"l{i}") for i in range(1, k + 1)])


def prism():
    return build(("a1", "a2"), ("a2", "a3"), ("a1", "a3"), ("b1", "b2"), ("b2", "b3"), ("b1", "b3"),
                 ("a1", "b1"), ("a2", "b2"), ("a3", "b3"))


def petersen():
    return Graph.from_networkx(nx.relabel_nodes(nx.petersen_graph(), str))


def edge_set(g):
    return {frozenset(g.edge_labels(e)) for e in range(g.size)}


def atlas(max_order=5):
    """Every graph on 1..max_order vertices, up to isomorphism."""
    return [Graph.from_networkx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_order]


def bipartite(max_order=7):
    """Bipartite atlas graphs; from order 8 on, the cube and K4,4 as well."""
    graphs = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_order and nx.is_bipartite(h)]
    if max_order >= 8:
        graphs.append(nx.relabel_nodes(nx.hypercube_graph(3), lambda v: "q" + "".join(map(str, v))))
        graphs.append(nx.complete_bipartite_graph(4, 4))
    return [Graph.from_networkx(h) for h in graphs]


STEP_CHOICES = [(GadgetKind.G2, 2), (GadgetKind.G4, 4), (GadgetKind.G8, 8),
                (GadgetKind.H, 1), (GadgetKind.H, 2), (GadgetKind.H, 3)]


def random_steps(rng, max_steps=4):
    return [rng.choice(STEP_CHOICES) for _ in range(rng.randint(0, max_steps))]


def random_p_member(seed, max_steps=4):
    rng = random.Random(seed)
    return build_p_member(random_steps(rng, max_steps), rng=rng)


def k4_plus_with_path(length=2):
    return attach_appendage(k4_plus(), f"path{length}")


# Connected outer-1-planar graphs with their closed-form χ.
O1P_CORPUS = [
    ("C3", cycle_graph(3), 6),
    ("C4", cycle_graph(4), 4),
    ("C5", cycle_graph(5), 5),
    ("C6", cycle_graph(6), 4),
    ("C7", cycle_graph(7), 5),
    ("C8", cycle_graph(8), 4),
    ("P1", path(1), 2),
    ("P4", path(4), 4),
    ("K1,3", star(3), 6),
    ("spider", build(("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("c", "d1")), 6),
    ("bowtie", build(("c", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "c")), 8),
    ("K4-e", build(("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("c", "d")), 6),
    ("K4", complete_graph(4), 6),
    ("theta", build(*[(f"v{i}", f"v{i % 6 + 1}") for i in range(1, 7)], ("v1", "v4")), 6),
    ("prism", prism(), 6),
    ("K4+", k4_plus(), 7),
    ("K4+ pendant", attach_appendage(k4_plus(), "path1"), 7),
    ("K4+ path2", k4_plus_with_path(2), 7),
    ("K4+ G2", paste_g(k4_plus(), "s", 2), 7),
    ("K4+ H1", paste_h(k4_plus(), ("c", "d"), 1), 7),
]
