"""Core levels at one fixed threshold.

For a fixed first-mode threshold ``p``, ``core_levels`` returns for every
node the largest ``q`` such that the node lies in Core(p, q):

* ``-1`` means the node is not even in Core(p, 0);
* ``inf`` means the node is in Core(p, q) for every q.  This happens to
  first-mode nodes that still meet ``p`` once the second mode is exhausted
  (with catalogue functions, only when ``p == 0``).

So ``{v : T[v] >= q}`` is Core(p, q) for every ``q >= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .heap import IndexedMinHeap
from .network import BipartiteNetwork, mirror, mirror_id
from .properties import PropertyFunction, get_property

NOT_IN_CORE = -1.0


@dataclass
class LevelVector:
    net: BipartiteNetwork
    T: list[float]
    fixed: float
    fixed_mode: int = 1
    f: str = "deg"
    g: str = "deg"

    @property
    def fixed_p(self) -> float:
        return self.fixed

    def core(self, level: float) -> frozenset[int]:
        """Node ids of the core at ``level`` for the non-fixed threshold."""
        return frozenset(v for v, x in enumerate(self.T) if x >= level)

    def levels(self) -> list[float]:
        """Attained finite levels, ascending."""
        return sorted({x for x in self.T if 0 <= x < math.inf})

    def max_level(self, mode: int) -> float | None:
        nodes = self.net.mode1() if mode == 1 else self.net.mode2()
        best = max((self.T[v] for v in nodes), default=NOT_IN_CORE)
        return None if best < 0 else best

    def size_curve(self) -> list[tuple[float, int, int]]:
        """``(level, size1, size2)`` of the core at each attained level."""
        n1 = self.net.n1
        rows = []
        for level in self.levels():
            s1 = sum(1 for v in range(n1) if self.T[v] >= level)
            s2 = sum(1 for v in range(n1, self.net.n) if self.T[v] >= level)
            rows.append((level, s1, s2))
        return rows

    def to_dict(self) -> dict:
        key = "p" if self.fixed_mode == 1 else "q"
        return {
            key: self.fixed,
            "fixed_mode": self.fixed_mode,
            "f": self.f,
            "g": self.g,
            # JSON has no infinity; null marks "in every core"
            "T": {
                lab: (None if math.isinf(x) else x) for lab, x in zip(self.net.labels, self.T)
            },
        }


def core_levels(net: BipartiteNetwork, p: float, f="deg", g="deg") -> LevelVector:
    f: PropertyFunction = get_property(f)
    g: PropertyFunction = get_property(g)
    f.check(net)
    g.check(net)
    p = float(p)
    if math.isnan(p) or p < 0:
        raise ValueError(f"threshold must be a nonnegative number, got {p}")
    n, n1 = net.n, net.n1
    adj = net.adj
    member = bytearray(b"\x01") * n
    state: list = [None] * n
    for v in range(n1):
        state[v] = f.state(net, v, member)
    for v in range(n1, n):
        state[v] = g.state(net, v, member)
    heap1 = IndexedMinHeap(n, ((v, f.value(net, v, state[v])) for v in range(n1)))
    heap2 = IndexedMinHeap(n, ((v, g.value(net, v, state[v])) for v in range(n1, n)))
    T = [NOT_IN_CORE] * n
    q = NOT_IN_CORE

    def take(heap, level, other_fn, other_heap):
        u, _ = heap.pop()
        T[u] = level
        member[u] = 0
        for v in adj[u]:
            if member[v]:
                s = other_fn.drop(net, v, u, member, state[v])
                state[v] = s
                other_heap.update(v, other_fn.value(net, v, s))

    while heap1 or heap2:
        while heap1 and heap1.vals[0] < p:
            take(heap1, q, g, heap2)
        if heap2:
            # never lower q: mode-2 nodes that dropped below it during the
            # pass above still belonged to Core(p, q)
            q = max(q, heap2.vals[0])
            while heap2 and heap2.vals[0] <= q:
                take(heap2, q, f, heap1)
        else:
            while heap1:
                T[heap1.pop()[0]] = math.inf
    return LevelVector(net, T, p, 1, f.name, g.name)


def core_levels_mirrored(net: BipartiteNetwork, q: float, f="deg", g="deg") -> LevelVector:
    """Levels of the first threshold with the second-mode threshold fixed at ``q``.

    ``{v : T[v] >= p}`` is Core(p, q; f, g) of ``net``.
    """
    f, g = get_property(f), get_property(g)
    mirrored = core_levels(mirror(net), q, g, f)
    T = [mirrored.T[mirror_id(net, v)] for v in range(net.n)]
    return LevelVector(net, T, float(q), 2, f.name, g.name)
