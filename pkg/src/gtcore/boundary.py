"""The staircase boundary of threshold pairs with nonempty cores.

A core counts as nonempty here when *both* of its mode slices are nonempty;
the minimum property value of an empty slice is undefined, so pairs (p, q)
whose core has lost one mode entirely do not lie inside the region.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .levels import LevelVector, core_levels, core_levels_mirrored
from .network import BipartiteNetwork, NodeSubset
from .properties import get_property


@dataclass(frozen=True)
class BoundaryCorner:
    p: float
    q: float
    size1: int
    size2: int


@dataclass
class Staircase:
    corners: list[BoundaryCorner] = field(default_factory=list)

    def pairs(self) -> list[tuple[float, float]]:
        return [(c.p, c.q) for c in self.corners]

    def __iter__(self):
        return iter(self.corners)

    def __len__(self):
        return len(self.corners)


def min_property(net: BipartiteNetwork, C: NodeSubset, f, mode: int) -> float:
    """Smallest value of ``f`` over the ``mode`` slice of ``C``, induced on ``C``."""
    f = get_property(f)
    nodes = C.part(mode)
    if not nodes:
        raise ValueError(f"mode-{mode} slice of the subset is empty")
    return min(f.evaluate(net, v, C.member) for v in nodes)


def _top(lv: LevelVector) -> float | None:
    a, b = lv.max_level(1), lv.max_level(2)
    if a is None or b is None:
        return None
    return min(a, b)


def _sizes(lv: LevelVector, level: float) -> tuple[int, int]:
    n1 = lv.net.n1
    s1 = sum(1 for v in range(n1) if lv.T[v] >= level)
    return s1, sum(1 for v in range(n1, lv.net.n) if lv.T[v] >= level)


def q_pi(net: BipartiteNetwork, p: float, f="deg", g="deg") -> float | None:
    """Largest q for which Core(p, q) has both slices nonempty, or None."""
    return _top(core_levels(net, p, f, g))


def p_gamma(net: BipartiteNetwork, q: float, f="deg", g="deg") -> float | None:
    """Largest p for which Core(p, q) has both slices nonempty, or None."""
    return _top(core_levels_mirrored(net, q, f, g))


def default_candidates(net: BipartiteNetwork, f="deg") -> list[float]:
    """Descending candidate values for the first threshold.

    The distinct whole-network values of ``f`` on the first mode, plus 0.
    For integer-valued functions every integer up to the largest value is
    used instead, which contains every possible p(C) and makes the sweep
    exact.
    """
    f = get_property(f)
    member = bytearray(b"\x01") * net.n
    values = {f.evaluate(net, v, member) for v in net.mode1()}
    values.add(0.0)
    if f.integer_valued:
        values = {float(k) for k in range(int(max(values)) + 1)}
    return sorted(values, reverse=True)


def _workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("GTCORE_THREADS")
        workers = int(env) if env and env.isdigit() else 1
    return max(1, workers)


def staircase(
    net: BipartiteNetwork,
    f="deg",
    g="deg",
    p_candidates: Iterable[float] | None = None,
    workers: int | None = None,
) -> Staircase:
    """Sweep candidate first thresholds from the top and keep the corners.

    A candidate becomes a corner when its q_pi strictly exceeds every q_pi
    seen at larger candidates.  Corners come back in ascending p.
    """
    f, g = get_property(f), get_property(g)
    if p_candidates is None:
        p_candidates = default_candidates(net, f)
    cands = sorted({float(p) for p in p_candidates}, reverse=True)
    run = lambda p: core_levels(net, p, f, g)  # noqa: E731
    n_workers = _workers(workers)
    if n_workers > 1 and len(cands) > 1:
        with ThreadPoolExecutor(n_workers) as pool:
            vectors = list(pool.map(run, cands))
    else:
        vectors = [run(p) for p in cands]

    corners = []
    q_max = -math.inf
    for p, lv in zip(cands, vectors):
        q = _top(lv)
        if q is not None and q > q_max:
            q_max = q
            corners.append(BoundaryCorner(p, q, *_sizes(lv, q)))
    corners.reverse()
    return Staircase(corners)


def staircase_walk(net: BipartiteNetwork, f="deg", g="deg") -> Staircase:
    """Exact staircase without a candidate grid.

    Walks the corners from the largest p down: p_gamma just above the last
    corner's q gives the next corner's p, q_pi of that p its q.  Two peels
    per corner.
    """
    f, g = get_property(f), get_property(g)
    corners = []
    q_floor = 0.0
    while True:
        p = p_gamma(net, q_floor, f, g)
        if p is None:
            break
        lv = core_levels(net, p, f, g)
        q = _top(lv)
        corners.append(BoundaryCorner(p, q, *_sizes(lv, q)))
        if math.isinf(q):
            break
        q_floor = math.nextafter(q, math.inf)
    corners.reverse()
    return Staircase(corners)
