"""Two-mode network data model.

Nodes carry dense 0-based ids with the first-mode nodes first, so node ``v``
belongs to mode 1 iff ``v < n1``.  Links always join the two modes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class NetworkError(ValueError):
    """Raised for invalid network data (bad input files included)."""


@dataclass(frozen=True)
class Link:
    """A cross-mode link.

    ``u`` is the mode-1 endpoint and ``v`` the mode-2 endpoint.  For directed
    links ``forward`` tells whether the arc runs u -> v (True) or v -> u.
    """

    u: int
    v: int
    weight: float = 1.0
    directed: bool = False
    forward: bool = True

    @property
    def tail(self) -> int:
        return self.u if self.forward or not self.directed else self.v

    @property
    def head(self) -> int:
        return self.v if self.forward or not self.directed else self.u


class BipartiteNetwork:
    """Immutable two-mode network.

    Duplicate links (same endpoints, same kind and direction) are merged by
    summing their weights.  ``adj[v]`` maps each neighbor of ``v`` to the total
    weight of all links between the two nodes.  When the network contains
    arcs, ``inn[v][u]`` / ``out[v][u]`` count the links entering / leaving
    ``v`` from / to ``u``; an undirected edge counts in both directions.
    """

    def __init__(
        self,
        n1: int,
        n2: int,
        links: Iterable[Link | tuple] = (),
        labels: Sequence[str] | None = None,
        t: Sequence[float] | None = None,
    ):
        if n1 < 0 or n2 < 0:
            raise NetworkError("mode sizes must be nonnegative")
        self.n1 = n1
        self.n2 = n2
        n = n1 + n2
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise NetworkError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise NetworkError("node labels must be unique")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

        merged: dict[tuple, float] = {}
        for link in links:
            if not isinstance(link, Link):
                link = Link(*link)
            u, v = link.u, link.v
            if not (0 <= u < n and 0 <= v < n):
                raise NetworkError(f"link ({u}, {v}) out of range for {n} nodes")
            if (u < n1) == (v < n1):
                raise NetworkError(
                    f"link {labels[u]!r}-{labels[v]!r} joins two nodes of the same mode"
                )
            if not link.weight > 0:
                raise NetworkError(f"non-positive weight {link.weight} on {labels[u]!r}-{labels[v]!r}")
            if u >= n1:
                # normalize so that u is the mode-1 endpoint
                u, v = v, u
                forward = not link.forward
            else:
                forward = link.forward
            key = (u, v, link.directed, forward if link.directed else True)
            merged[key] = merged.get(key, 0.0) + float(link.weight)

        self.links = [
            Link(u, v, w, directed, forward)
            for (u, v, directed, forward), w in sorted(merged.items())
        ]
        self.directed = any(link.directed for link in self.links)

        adj: list[dict[int, float]] = [{} for _ in range(n)]
        for link in self.links:
            adj[link.u][link.v] = adj[link.u].get(link.v, 0.0) + link.weight
            adj[link.v][link.u] = adj[link.v].get(link.u, 0.0) + link.weight
        self.adj = adj

        if self.directed:
            inn: list[dict[int, int]] = [{} for _ in range(n)]
            out: list[dict[int, int]] = [{} for _ in range(n)]
            for link in self.links:
                if link.directed:
                    pairs = [(link.tail, link.head)]
                else:
                    pairs = [(link.u, link.v), (link.v, link.u)]
                for a, b in pairs:
                    out[a][b] = out[a].get(b, 0) + 1
                    inn[b][a] = inn[b].get(a, 0) + 1
            self.inn, self.out = inn, out
        else:
            self.inn = self.out = None

        self.deg = [len(a) for a in adj]
        self.wdeg = [sum(a.values()) for a in adj]
        self.max_neighbor_deg = [max((self.deg[u] for u in a), default=0) for a in adj]
        if t is None:
            self.t = [float(d) for d in self.deg]
            self.has_measurement = False
        else:
            if len(t) != n:
                raise NetworkError(f"expected {n} measurement values, got {len(t)}")
            if any(x < 0 for x in t):
                raise NetworkError("node measurement must be nonnegative")
            self.t = [float(x) for x in t]
            self.has_measurement = True

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def m(self) -> int:
        return len(self.links)

    def mode(self, v: int) -> int:
        return 1 if v < self.n1 else 2

    def mode1(self) -> range:
        return range(self.n1)

    def mode2(self) -> range:
        return range(self.n1, self.n)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def neighbors(self, v: int) -> Iterator[int]:
        return iter(self.adj[v])

    def weight(self, u: int, v: int) -> float:
        return self.adj[u].get(v, 0.0)

    def max_degree(self) -> int:
        return max(self.deg, default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteNetwork):
            return NotImplemented
        return (
            self.n1 == other.n1
            and self.n2 == other.n2
            and self.labels == other.labels
            and self.links == other.links
            and self.t == other.t
        )

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"<BipartiteNetwork n1={self.n1} n2={self.n2} m={self.m} {kind}>"


class NodeSubset:
    """A mutable subset of the nodes of one network, split by mode."""

    __slots__ = ("net", "member", "size1", "size2")

    def __init__(self, net: BipartiteNetwork, nodes: Iterable[int] | None = None):
        self.net = net
        if nodes is None:
            self.member = bytearray(b"\x01") * net.n
            self.size1, self.size2 = net.n1, net.n2
        else:
            self.member = bytearray(net.n)
            self.size1 = self.size2 = 0
            for v in nodes:
                self.add(v)

    @classmethod
    def from_labels(cls, net: BipartiteNetwork, labels: Iterable[str]) -> "NodeSubset":
        return cls(net, (net.index(x) for x in labels))

    def add(self, v: int) -> None:
        if not self.member[v]:
            self.member[v] = 1
            if v < self.net.n1:
                self.size1 += 1
            else:
                self.size2 += 1

    def remove(self, v: int) -> None:
        if self.member[v]:
            self.member[v] = 0
            if v < self.net.n1:
                self.size1 -= 1
            else:
                self.size2 -= 1

    def copy(self) -> "NodeSubset":
        c = NodeSubset.__new__(NodeSubset)
        c.net, c.member, c.size1, c.size2 = self.net, bytearray(self.member), self.size1, self.size2
        return c

    def __contains__(self, v: int) -> bool:
        return bool(self.member[v])

    def __iter__(self) -> Iterator[int]:
        return (v for v, b in enumerate(self.member) if b)

    def __len__(self) -> int:
        return self.size1 + self.size2

    def part(self, mode: int) -> list[int]:
        nodes = self.net.mode1() if mode == 1 else self.net.mode2()
        return [v for v in nodes if self.member[v]]

    def labels(self, mode: int | None = None) -> list[str]:
        nodes = list(self) if mode is None else self.part(mode)
        return [self.net.labels[v] for v in nodes]

    def issubset(self, other: "NodeSubset") -> bool:
        return all(other.member[v] for v in self)

    def as_set(self) -> frozenset[int]:
        return frozenset(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NodeSubset):
            return NotImplemented
        return self.member == other.member

    def __repr__(self) -> str:
        return f"NodeSubset({self.labels(1)}, {self.labels(2)})"


def mirror(net: BipartiteNetwork) -> BipartiteNetwork:
    """Swap the two modes; links, weights and measurements are kept."""
    n1 = net.n1
    # old mode-2 node v gets new id v - n1, old mode-1 node u gets u + n2
    def new_id(v: int) -> int:
        return v - n1 if v >= n1 else v + net.n2

    order = list(net.mode2()) + list(net.mode1())
    links = [
        Link(new_id(link.v), new_id(link.u), link.weight, link.directed, not link.forward)
        for link in net.links
    ]
    t = [net.t[v] for v in order] if net.has_measurement else None
    return BipartiteNetwork(net.n2, net.n1, links, [net.labels[v] for v in order], t)


def mirror_id(net: BipartiteNetwork, v: int) -> int:
    """Id of node ``v`` of ``net`` inside ``mirror(net)``."""
    return v - net.n1 if v >= net.n1 else v + net.n2


def induced_degree(net: BipartiteNetwork, v: int, C: NodeSubset) -> int:
    member = C.member
    return sum(1 for u in net.adj[v] if member[u])


def induced_wdegree(net: BipartiteNetwork, v: int, C: NodeSubset) -> float:
    member = C.member
    return sum(w for u, w in net.adj[v].items() if member[u])
