"""Generalized two-mode cores by peeling.

``compute_core`` is the heap-driven peel: two min-heaps, one per mode, and
alternating removal passes until neither pass removes a node.  Removing a
node only touches its neighbors, which all live in the other mode, so each
pass re-values the other heap with the other mode's own property function.

``naive_core`` deletes violators one at a time in a caller-chosen order,
re-evaluating from scratch; the result is the same set for every order and
it serves as the reference for ``compute_core``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .heap import IndexedMinHeap
from .network import BipartiteNetwork, NodeSubset
from .properties import PropertyFunction, get_property


class DriftError(AssertionError):
    pass


@dataclass(frozen=True)
class CoreQuery:
    p: float
    q: float
    f: PropertyFunction | str = "deg"
    g: PropertyFunction | str = "deg"

    def __post_init__(self):
        for name in ("p", "q"):
            x = float(getattr(self, name))
            if math.isnan(x) or x < 0:
                raise ValueError(f"threshold {name} must be a nonnegative number, got {x}")
            object.__setattr__(self, name, x)
        object.__setattr__(self, "f", get_property(self.f))
        object.__setattr__(self, "g", get_property(self.g))

    def swapped(self) -> "CoreQuery":
        return CoreQuery(self.q, self.p, self.g, self.f)


@dataclass
class CoreResult:
    core: NodeSubset
    removal_sequence: list[tuple[int, float]]
    query: CoreQuery
    max_drift: float | None = field(default=None, compare=False)

    @property
    def net(self) -> BipartiteNetwork:
        return self.core.net

    @property
    def core1(self) -> list[str]:
        return self.core.labels(1)

    @property
    def core2(self) -> list[str]:
        return self.core.labels(2)

    @property
    def nodes(self) -> frozenset[int]:
        return self.core.as_set()

    def is_empty(self) -> bool:
        return len(self.core) == 0

    def to_dict(self) -> dict:
        labels = self.net.labels
        return {
            "p": self.query.p,
            "q": self.query.q,
            "f": self.query.f.name,
            "g": self.query.g.name,
            "core1": self.core1,
            "core2": self.core2,
            "removed": [{"node": labels[v], "value": val} for v, val in self.removal_sequence],
        }


def compute_core(
    net: BipartiteNetwork, query: CoreQuery, drift_tol: float | None = None
) -> CoreResult:
    """Core(p, q; f, g) of ``net``.

    With ``drift_tol`` set, every incrementally maintained value is compared
    against a fresh evaluation and :class:`DriftError` is raised when they
    differ by more than the tolerance; the largest difference seen is
    reported as ``max_drift``.
    """
    f, g, p, q = query.f, query.g, query.p, query.q
    f.check(net)
    g.check(net)
    n, n1 = net.n, net.n1
    adj = net.adj
    C = NodeSubset(net)
    member = C.member
    state: list = [None] * n
    for v in range(n1):
        state[v] = f.state(net, v, member)
    for v in range(n1, n):
        state[v] = g.state(net, v, member)
    heap1 = IndexedMinHeap(n, ((v, f.value(net, v, state[v])) for v in range(n1)))
    heap2 = IndexedMinHeap(n, ((v, g.value(net, v, state[v])) for v in range(n1, n)))
    removed: list[tuple[int, float]] = []
    drift = 0.0

    def remove(heap: IndexedMinHeap, threshold: float, other_fn, other_heap) -> int:
        nonlocal drift
        count = 0
        while heap.keys and heap.vals[0] < threshold:
            u, val = heap.pop()
            C.remove(u)
            removed.append((u, val))
            count += 1
            for v in adj[u]:
                if member[v]:
                    s = other_fn.drop(net, v, u, member, state[v])
                    state[v] = s
                    value = other_fn.value(net, v, s)
                    other_heap.update(v, value)
                    if drift_tol is not None:
                        diff = abs(value - other_fn.evaluate(net, v, member))
                        drift = max(drift, diff)
                        if diff > drift_tol:
                            raise DriftError(
                                f"{other_fn.name} at {net.labels[v]!r} drifted by {diff}"
                            )
        return count

    while remove(heap1, p, g, heap2) + remove(heap2, q, f, heap1):
        pass

    return CoreResult(C, removed, query, drift if drift_tol is not None else None)


def _order(net: BipartiteNetwork, order) -> list[int]:
    if order is None or order == "ascending":
        return list(range(net.n))
    if order == "descending":
        return list(range(net.n - 1, -1, -1))
    if isinstance(order, int):
        seq = list(range(net.n))
        random.Random(order).shuffle(seq)
        return seq
    seq = list(order)
    if sorted(seq) != list(range(net.n)):
        raise ValueError("order must be a permutation of the node ids")
    return seq


def naive_core(
    net: BipartiteNetwork, query: CoreQuery, order: Sequence[int] | int | str | None = None
) -> CoreResult:
    """Delete violating nodes one by one, in the sweep order given by ``order``.

    ``order`` is a permutation of node ids, a seed for a random permutation,
    or ``"ascending"`` / ``"descending"``.  Values are always evaluated from
    scratch on the current subset.
    """
    f, g, p, q = query.f, query.g, query.p, query.q
    f.check(net)
    g.check(net)
    seq = _order(net, order)
    C = NodeSubset(net)
    member = C.member
    removed: list[tuple[int, float]] = []
    changed = True
    while changed:
        changed = False
        for v in seq:
            if not member[v]:
                continue
            if v < net.n1:
                value, threshold = f.evaluate(net, v, member), p
            else:
                value, threshold = g.evaluate(net, v, member), q
            if value < threshold:
                C.remove(v)
                removed.append((v, value))
                changed = True
    return CoreResult(C, removed, query)


def core_leq(r1: CoreResult, r2: CoreResult) -> bool:
    """Componentwise inclusion of the two cores' mode slices."""
    if r1.net is not r2.net and r1.net != r2.net:
        raise ValueError("cores belong to different networks")
    return r1.core.issubset(r2.core)
