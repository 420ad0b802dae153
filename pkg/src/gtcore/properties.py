"""Node property functions.

A property function maps a node ``v`` and a node subset ``C`` to a
nonnegative real computed on the subnetwork induced by ``C``.  All functions
here are local (they look only at the neighbors of ``v`` inside ``C``) and
monotonic (they never grow when ``C`` shrinks).

Besides full evaluation every function supports incremental maintenance
while nodes are peeled away.  The peeling code keeps a per-node *state*
(an integer count, a running sum, a ``(max, min)`` pair ...) and turns it
into the heap value with :meth:`PropertyFunction.value`.  Keeping counts and
sums as state, and dividing only when a value is needed, makes the
maintained ratio values bit-identical to fresh evaluation.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from typing import Callable

from .network import BipartiteNetwork, NodeSubset

CONSTANT = "constant"
DEGREE = "degree"


class PropertyError(ValueError):
    pass


def _members(net: BipartiteNetwork, C) -> bytearray:
    if C is None:
        return bytearray(b"\x01") * net.n
    if isinstance(C, NodeSubset):
        return C.member
    return C


class PropertyFunction:
    name = ""
    index: int | None = None
    update_cost = CONSTANT
    is_local = True
    is_monotonic = True
    integer_valued = False

    def evaluate(self, net: BipartiteNetwork, v: int, member) -> float:
        raise NotImplementedError

    # incremental protocol; the default is "state is the value, rescan on change"
    def state(self, net, v, member):
        return self.evaluate(net, v, member)

    def drop(self, net, v, removed, member, state):
        """State of ``v`` after neighbor ``removed`` left the subset."""
        return self.evaluate(net, v, member)

    def value(self, net, v, state) -> float:
        return state

    def state_from_value(self, net, v, value):
        """Recover the incremental state from a bare value (constant-cost only)."""
        return value

    def check(self, net: BipartiteNetwork) -> None:
        """Raise PropertyError if the function cannot be evaluated on ``net``."""

    def __repr__(self) -> str:
        return f"<property {self.name}>"

    def __eq__(self, other):
        return isinstance(other, PropertyFunction) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class Degree(PropertyFunction):
    name, index, integer_valued = "deg", 1, True

    def evaluate(self, net, v, member):
        return float(sum(1 for u in net.adj[v] if member[u]))

    def state(self, net, v, member):
        return sum(1 for u in net.adj[v] if member[u])

    def drop(self, net, v, removed, member, state):
        return state - 1

    def value(self, net, v, state):
        return float(state)

    def state_from_value(self, net, v, value):
        return round(value)


class _DirectedDegree(Degree):
    """Arc counts; an undirected network is read as reciprocal arcs."""

    strict = False

    def __init__(self, strict: bool = False):
        self.strict = strict

    def check(self, net):
        if self.strict and not net.directed:
            raise PropertyError(f"{self.name} needs a directed network (strict mode)")

    def _table(self, net, v):
        raise NotImplementedError

    def evaluate(self, net, v, member):
        return float(self.state(net, v, member))

    def state(self, net, v, member):
        if net.inn is None:
            return sum(1 for u in net.adj[v] if member[u])
        return sum(c for u, c in self._table(net, v).items() if member[u])

    def drop(self, net, v, removed, member, state):
        if net.inn is None:
            return state - 1
        return state - self._table(net, v).get(removed, 0)


class InDegree(_DirectedDegree):
    name, index = "indeg", 2

    def _table(self, net, v):
        return net.inn[v]


class OutDegree(_DirectedDegree):
    name, index = "outdeg", 3

    def _table(self, net, v):
        return net.out[v]


class InOutDegree(_DirectedDegree):
    name, index = "inoutdeg", 4

    def state(self, net, v, member):
        if net.inn is None:
            return 2 * sum(1 for u in net.adj[v] if member[u])
        return sum(c for u, c in net.inn[v].items() if member[u]) + sum(
            c for u, c in net.out[v].items() if member[u]
        )

    def drop(self, net, v, removed, member, state):
        if net.inn is None:
            return state - 2
        return state - net.inn[v].get(removed, 0) - net.out[v].get(removed, 0)


class WeightedDegree(PropertyFunction):
    name, index = "wdeg", 5

    def evaluate(self, net, v, member):
        return float(sum(w for u, w in net.adj[v].items() if member[u]))

    state = evaluate

    def drop(self, net, v, removed, member, state):
        return state - net.adj[v][removed]


class MaxWeight(PropertyFunction):
    name, index, update_cost = "mweight", 6, DEGREE

    def evaluate(self, net, v, member):
        return max((w for u, w in net.adj[v].items() if member[u]), default=0.0)

    def drop(self, net, v, removed, member, state):
        # only the loss of a maximal link can change the maximum
        if net.adj[v][removed] < state:
            return state
        return self.evaluate(net, v, member)


class DegreeProportion(Degree):
    name, index, integer_valued = "pdeg", 7, False

    def evaluate(self, net, v, member):
        return self.value(net, v, self.state(net, v, member))

    def value(self, net, v, state):
        d = net.deg[v]
        return state / d if d else 0.0

    def state_from_value(self, net, v, value):
        return round(value * net.deg[v])


class Density(Degree):
    name, index, integer_valued = "density", 8, False

    def evaluate(self, net, v, member):
        return self.value(net, v, self.state(net, v, member))

    def value(self, net, v, state):
        if not net.deg[v]:
            return 0.0
        return state / net.max_neighbor_deg[v]

    def state_from_value(self, net, v, value):
        return round(value * net.max_neighbor_deg[v])


class DegreeRange(PropertyFunction):
    """Range of the (whole-network) degrees of the neighbors inside C."""

    name, index, update_cost, integer_valued = "degrange", 9, DEGREE, True
    include_self = False

    def state(self, net, v, member):
        degs = [net.deg[u] for u in net.adj[v] if member[u]]
        if self.include_self:
            degs.append(net.deg[v])
        if not degs:
            return None
        return (max(degs), min(degs))

    def evaluate(self, net, v, member):
        return self.value(net, v, self.state(net, v, member))

    def drop(self, net, v, removed, member, state):
        d = net.deg[removed]
        if state is not None and state[1] < d < state[0]:
            return state
        return self.state(net, v, member)

    def value(self, net, v, state):
        return 0.0 if state is None else float(state[0] - state[1])

    def state_from_value(self, net, v, value):
        raise PropertyError(f"{self.name} is updated by rescanning")


class TotalDegreeRange(DegreeRange):
    name, index = "tdegrange", 10
    include_self = True


class WeightProportion(WeightedDegree):
    name, index = "pweight", 11

    def evaluate(self, net, v, member):
        return self.value(net, v, self.state(net, v, member))

    def state(self, net, v, member):
        return float(sum(w for u, w in net.adj[v].items() if member[u]))

    def value(self, net, v, state):
        total = net.wdeg[v]
        return state / total if total > 0 else 0.0

    def state_from_value(self, net, v, value):
        return value * net.wdeg[v]


class Triangles(PropertyFunction):
    name, index, update_cost, integer_valued = "triangles", 12, DEGREE, True

    def evaluate(self, net, v, member):
        inside = [u for u in net.adj[v] if member[u]]
        found = set(inside)
        count = sum(1 for u in inside for x in net.adj[u] if x in found)
        return float(count // 2)


class SumT(PropertyFunction):
    name, index = "sumt", 13

    def evaluate(self, net, v, member):
        t = net.t
        return float(sum(t[u] for u in net.adj[v] if member[u]))

    state = evaluate

    def drop(self, net, v, removed, member, state):
        return state - net.t[removed]


class MaxT(PropertyFunction):
    name, index, update_cost = "maxt", 14, DEGREE

    def evaluate(self, net, v, member):
        t = net.t
        return max((t[u] for u in net.adj[v] if member[u]), default=0.0)

    def drop(self, net, v, removed, member, state):
        if net.t[removed] < state:
            return state
        return self.evaluate(net, v, member)


CATALOGUE: dict[str, type[PropertyFunction]] = {
    cls.name: cls
    for cls in (
        Degree, InDegree, OutDegree, InOutDegree, WeightedDegree, MaxWeight,
        DegreeProportion, Density, DegreeRange, TotalDegreeRange,
        WeightProportion, Triangles, SumT, MaxT,
    )
}
_ALIASES = {f"f{cls.index}": name for name, cls in CATALOGUE.items()}
_ALIASES.update(sum_t="sumt", max_t="maxt", degree="deg")


@dataclass(frozen=True)
class Transform:
    """A strictly increasing map of nonnegative reals onto nonnegative reals."""

    name: str
    fn: Callable[[float], float] = field(compare=False)
    inverse: Callable[[float], float] = field(compare=False)

    def __call__(self, x: float) -> float:
        return self.fn(x)


def affine(a: float, b: float = 0.0) -> Transform:
    if not a > 0 or b < 0:
        raise PropertyError("affine transform needs a > 0 and b >= 0")
    return Transform(f"affine:{a:g},{b:g}", lambda x: a * x + b, lambda y: (y - b) / a)


def square() -> Transform:
    return Transform("square", lambda x: x * x, math.sqrt)


class Transformed(PropertyFunction):
    """``phi(base(v, C))`` for a strictly increasing ``phi``."""

    def __init__(self, base: PropertyFunction, phi: Transform):
        self.base = base
        self.phi = phi
        self.name = f"{phi.name}({base.name})"
        self.update_cost = base.update_cost
        self.is_local = base.is_local
        self.is_monotonic = base.is_monotonic

    def evaluate(self, net, v, member):
        return self.phi(self.base.evaluate(net, v, member))

    def state(self, net, v, member):
        return self.base.state(net, v, member)

    def drop(self, net, v, removed, member, state):
        return self.base.drop(net, v, removed, member, state)

    def value(self, net, v, state):
        return self.phi(self.base.value(net, v, state))

    def state_from_value(self, net, v, value):
        return self.base.state_from_value(net, v, self.phi.inverse(value))

    def check(self, net):
        self.base.check(net)


_AFFINE = re.compile(r"^affine:([^,()]+),([^,()]+)\((.*)\)$")
_SQUARE = re.compile(r"^square\((.*)\)$")


def get_property(spec: str | PropertyFunction, strict: bool = False) -> PropertyFunction:
    """Resolve a catalogue id or transform expression.

    >>> get_property("square(affine:3,1(wdeg))").name
    'square(affine:3,1(wdeg))'
    """
    if isinstance(spec, PropertyFunction):
        return spec
    s = spec.strip()
    if m := _AFFINE.match(s):
        try:
            a, b = float(m.group(1)), float(m.group(2))
        except ValueError:
            raise PropertyError(f"bad affine coefficients in {spec!r}") from None
        return Transformed(get_property(m.group(3), strict), affine(a, b))
    if m := _SQUARE.match(s):
        return Transformed(get_property(m.group(1), strict), square())
    name = _ALIASES.get(s.lower(), s.lower())
    try:
        cls = CATALOGUE[name]
    except KeyError:
        raise PropertyError(
            f"unknown property {spec!r}; choose from {' '.join(CATALOGUE)}"
        ) from None
    if issubclass(cls, _DirectedDegree):
        return cls(strict=strict)
    return cls()


def evaluate(net: BipartiteNetwork, fn, v: int, C: NodeSubset | None = None) -> float:
    fn = get_property(fn)
    fn.check(net)
    return fn.evaluate(net, v, _members(net, C))


def evaluate_all(net: BipartiteNetwork, fn, C: NodeSubset | None = None) -> list[float]:
    fn = get_property(fn)
    fn.check(net)
    member = _members(net, C)
    return [fn.evaluate(net, v, member) for v in range(net.n)]


def update_after_removal(
    net: BipartiteNetwork, fn, v: int, removed: int, C: NodeSubset, old: float
) -> float:
    """Value of ``fn`` at ``v`` once ``removed`` (a neighbor) has left ``C``.

    ``C`` must already exclude ``removed``.  Constant-cost functions adjust
    ``old`` arithmetically; the others rescan the neighborhood.
    """
    fn = get_property(fn)
    member = _members(net, C)
    if fn.update_cost == DEGREE:
        return fn.evaluate(net, v, member)
    state = fn.state_from_value(net, v, old)
    return fn.value(net, v, fn.drop(net, v, removed, member, state))


@dataclass
class MonotonicityReport:
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotonic(
    net: BipartiteNetwork, fn, trials: int = 100, seed: int = 0, exhaustive: bool = False
) -> MonotonicityReport:
    """Look for ``C1 < C2`` with ``fn(v, C1) > fn(v, C2)``.

    Random mode samples ``trials`` nested pairs; exhaustive mode tries every
    subset against each of its one-node-smaller subsets (enough, by
    transitivity) and is meant for networks of at most ~16 nodes.
    """
    fn = get_property(fn)
    n = net.n
    report = MonotonicityReport()

    def compare(small: bytearray, big: bytearray):
        for v in range(n):
            a, b = fn.evaluate(net, v, small), fn.evaluate(net, v, big)
            report.checks += 1
            if a > b:
                report.violations.append(
                    (v, [u for u in range(n) if small[u]], [u for u in range(n) if big[u]], a, b)
                )

    if exhaustive:
        for mask in range(1 << n):
            big = bytearray((mask >> v) & 1 for v in range(n))
            for x in range(n):
                if big[x]:
                    small = bytearray(big)
                    small[x] = 0
                    compare(small, big)
        return report

    rng = random.Random(seed)
    for _ in range(trials):
        big = bytearray(rng.random() < 0.7 for _ in range(n))
        small = bytearray(b and rng.random() < 0.6 for b in big)
        compare(small, big)
    return report
