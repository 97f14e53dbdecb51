# Two-way radio view of an incidence coloring: every link N-M transmits on C(N, M) at N
# and on C(M, N) at M; a node's box collects the channels of all its links.
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph, IncidenceColoring, check_total


@dataclass(frozen=True)
class NodeBox:
    node: str
    channels: tuple[int, ...]

    @property
    def rainbow(self) -> bool:
        return len(set(self.channels)) == len(self.channels)

    @property
    def repeated(self) -> list[int]:
        return sorted(c for c, n in Counter(self.channels).items() if n > 1)


@dataclass(frozen=True)
class ChannelReport:
    boxes: tuple[NodeBox, ...]

    @property
    def rainbow(self) -> bool:
        return all(box.rainbow for box in self.boxes)

    def box(self, node: str) -> NodeBox:
        for b in self.boxes:
            if b.node == node:
                return b
        raise KeyError(node)


def channel_report(g: Graph, c: IncidenceColoring) -> ChannelReport:
    """Per-node channel boxes, in vertex order; every box is rainbow iff c is conflict-free."""
    check_total(g, c)
    boxes = []
    for v in range(g.order):
        channels: list[int] = []
        for _, e in g.adjacency[v]:
            channels.extend(x for x in c.colors[e] if x is not None)
        boxes.append(NodeBox(g.labels[v], tuple(sorted(channels))))
    return ChannelReport(tuple(boxes))
