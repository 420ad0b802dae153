import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from gtcore import (
    BipartiteNetwork, CoreQuery, Link, compute_core, core_leq, get_property, mirror,
    naive_core,
)
from gtcore.network import mirror_id
from gtcore.peel import DriftError

from oracles import CATALOGUE_IDS, brute_force_core, random_network, sample_threshold


def labels(result):
    return set(result.core1) | set(result.core2)


V = {"a", "b", "c", "x", "y"}


@pytest.mark.parametrize(
    "p, q, f, g, expected",
    [
        (1, 2, "deg", "deg", V),
        (2, 1, "deg", "deg", {"a", "x", "y"}),
        (2, 2, "deg", "deg", set()),
        (0, 0, "deg", "deg", V),
        (0, 0, "pweight", "maxt", V),
        (3, 1, "wdeg", "deg", {"a", "c", "x", "y"}),
    ],
)
def test_toy_cores(toy, p, q, f, g, expected):
    # the expected sets come from the subset-enumeration oracle
    brute = {toy.labels[v] for v in brute_force_core(toy, p, q, f, g, union=True)}
    assert brute == expected
    assert labels(compute_core(toy, CoreQuery(p, q, f, g))) == expected


def test_removal_sequence_partitions_nodes(toy):
    r = compute_core(toy, CoreQuery(2, 1))
    removed = [v for v, _ in r.removal_sequence]
    assert set(removed).isdisjoint(r.nodes)
    assert set(removed) | r.nodes == set(range(toy.n))
    assert [toy.labels[v] for v in removed] == ["b", "c"]
    assert r.core1 == ["a"] and r.core2 == ["x", "y"]


def test_query_validation():
    with pytest.raises(ValueError):
        CoreQuery(-1, 0)
    with pytest.raises(ValueError):
        CoreQuery(float("nan"), 0)
    q = CoreQuery(1, 2, "wdeg", "f1")
    assert q.f.name == "wdeg" and q.g.name == "deg"
    assert q.swapped() == CoreQuery(2, 1, "deg", "wdeg")


def test_naive_orders_on_toy(toy):
    query = CoreQuery(2, 1)
    up = naive_core(toy, query, "ascending")
    down = naive_core(toy, query, "descending")
    assert labels(up) == labels(down) == {"a", "x", "y"}
    assert up.removal_sequence != down.removal_sequence
    zero = naive_core(toy, CoreQuery(0, 0), 123)
    assert labels(zero) == V and zero.removal_sequence == []
    with pytest.raises(ValueError):
        naive_core(toy, query, [0, 1, 2])


def test_core_leq(toy):
    c22 = compute_core(toy, CoreQuery(2, 2))
    c21 = compute_core(toy, CoreQuery(2, 1))
    c11 = compute_core(toy, CoreQuery(1, 1))
    assert core_leq(c22, c21)
    assert core_leq(c21, c11)
    assert not core_leq(c21, c22)
    other = compute_core(BipartiteNetwork(1, 1, [Link(0, 1)]), CoreQuery(0, 0))
    with pytest.raises(ValueError):
        core_leq(c21, other)


def test_empty_first_mode():
    net = BipartiteNetwork(0, 3)
    assert len(compute_core(net, CoreQuery(5, 0)).core) == 3
    assert len(compute_core(net, CoreQuery(5, 1)).core) == 0


def _components(net, nodes):
    nodes = set(nodes)
    seen, count = set(), 0
    for s in nodes:
        if s in seen:
            continue
        count += 1
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            for u in net.adj[v]:
                if u in nodes and u not in seen:
                    seen.add(u)
                    queue.append(u)
    return count


def test_bridge_node_peels_into_disconnected_core():
    # two heavy K(2,2) blocks joined by a light bridge node 4 (wdeg 2 < 3)
    links = [(0, 5), (0, 6), (1, 5), (1, 6), (2, 7), (2, 8), (3, 7), (3, 8)]
    net = BipartiteNetwork(
        5, 4, [Link(u, v, 2.0) for u, v in links] + [Link(4, 5), Link(4, 7)]
    )
    core = compute_core(net, CoreQuery(3, 2, "wdeg", "deg")).nodes
    assert core == {0, 1, 2, 3, 5, 6, 7, 8}
    assert _components(net, core) == 2
    assert _components(net, set(range(9))) == 1


def test_disconnected_core_fixture():
    # K(2,2) + K(2,2) with no links between them: Core(2,2) is both blocks
    links = [(0, 4), (0, 5), (1, 4), (1, 5), (2, 6), (2, 7), (3, 6), (3, 7)]
    net = BipartiteNetwork(4, 4, [Link(u, v) for u, v in links])
    core = compute_core(net, CoreQuery(2, 2)).nodes
    assert core == set(range(8))
    assert _components(net, core) == 2


def _random_queries(rng, net, k):
    for _ in range(k):
        f, g = rng.choice(CATALOGUE_IDS), rng.choice(CATALOGUE_IDS)
        yield CoreQuery(sample_threshold(rng, net, f, 1), sample_threshold(rng, net, g, 2), f, g)


def test_heap_peel_matches_naive():
    rng = random.Random(42)
    for _ in range(150):
        net = random_network(rng)
        for query in _random_queries(rng, net, 8):
            order = rng.randrange(1 << 30)
            assert compute_core(net, query).nodes == naive_core(net, query, order).nodes


def test_defining_property_and_maximality():
    rng = random.Random(9)
    for _ in range(80):
        net = random_network(rng, max_side=8, max_m=25)
        for query in _random_queries(rng, net, 4):
            r = compute_core(net, query)
            member = r.core.member
            for v in r.core:
                fn, t = (query.f, query.p) if v < net.n1 else (query.g, query.q)
                assert fn.evaluate(net, v, member) >= t
            # putting any removed node back and re-peeling loses it again
            for u, _ in r.removal_sequence:
                trial = bytearray(member)
                trial[u] = 1
                changed = True
                while changed:
                    changed = False
                    for v in range(net.n):
                        fn, t = (query.f, query.p) if v < net.n1 else (query.g, query.q)
                        if trial[v] and fn.evaluate(net, v, trial) < t:
                            trial[v] = 0
                            changed = True
                assert trial == member


def test_brute_force_agreement_small():
    rng = random.Random(17)
    for _ in range(60):
        net = random_network(rng, max_side=5, max_m=14)
        for query in _random_queries(rng, net, 3):
            expected = brute_force_core(net, query.p, query.q, query.f, query.g, union=True)
            assert compute_core(net, query).nodes == expected


def test_nesting_mirror_rescaling():
    rng = random.Random(5)
    for _ in range(60):
        net = random_network(rng)
        f, g = rng.choice(CATALOGUE_IDS), rng.choice(CATALOGUE_IDS)
        ps = sorted(sample_threshold(rng, net, f, 1) for _ in range(3))
        qs = sorted(sample_threshold(rng, net, g, 2) for _ in range(3))
        cores = {(p, q): compute_core(net, CoreQuery(p, q, f, g)) for p in ps for q in qs}
        for (p1, q1), r1 in cores.items():
            for (p2, q2), r2 in cores.items():
                if p1 <= p2 and q1 <= q2:
                    assert core_leq(r2, r1)
        mir = mirror(net)
        for (p, q), r in cores.items():
            mirrored = compute_core(mir, CoreQuery(q, p, g, f)).nodes
            assert {mirror_id(net, v) for v in r.nodes} == mirrored


def test_rescaling_on_wdeg():
    rng = random.Random(6)
    for phi in ("affine:3,1(wdeg)", "square(wdeg)"):
        fn = get_property(phi)
        for _ in range(40):
            net = random_network(rng)
            g = rng.choice(CATALOGUE_IDS)
            p = sample_threshold(rng, net, "wdeg", 1)
            q = sample_threshold(rng, net, g, 2)
            base = compute_core(net, CoreQuery(p, q, "wdeg", g)).nodes
            assert compute_core(net, CoreQuery(fn.phi(p), q, fn, g)).nodes == base
            # same thing with the transformed function on the second mode
            base = compute_core(net, CoreQuery(q, p, g, "wdeg")).nodes
            assert compute_core(net, CoreQuery(q, fn.phi(p), g, fn)).nodes == base


def test_drift_check():
    net = BipartiteNetwork(1, 3, [Link(0, 1, 0.1), Link(0, 2, 0.2), Link(0, 3, 0.3)])
    r = compute_core(net, CoreQuery(0, 100, "wdeg", "deg"), drift_tol=1e-9)
    assert r.max_drift is not None and r.max_drift <= 1e-9
    with pytest.raises(DriftError):
        compute_core(net, CoreQuery(0, 100, "wdeg", "deg"), drift_tol=0.0)


@st.composite
def small_queries(draw):
    n1, n2 = draw(st.integers(1, 5)), draw(st.integers(1, 5))
    pairs = draw(st.sets(st.tuples(st.integers(0, n1 - 1), st.integers(0, n2 - 1))))
    weights = draw(st.lists(st.integers(1, 8), min_size=len(pairs), max_size=len(pairs)))
    links = [Link(u, n1 + v, w / 4) for (u, v), w in zip(sorted(pairs), weights)]
    net = BipartiteNetwork(n1, n2, links)
    f, g = draw(st.sampled_from(CATALOGUE_IDS)), draw(st.sampled_from(CATALOGUE_IDS))
    p, q = draw(st.integers(0, 12)) / 4, draw(st.integers(0, 12)) / 4
    return net, CoreQuery(p, q, f, g)


@settings(max_examples=150, deadline=None)
@given(small_queries(), st.integers(0, 2**30))
def test_core_properties_hold_for_generated_networks(case, seed):
    net, query = case
    r = compute_core(net, query)
    assert r.nodes == brute_force_core(net, query.p, query.q, query.f, query.g, union=True)
    assert naive_core(net, query, seed).nodes == r.nodes
    # raising either threshold can only shrink the core
    assert core_leq(compute_core(net, CoreQuery(query.p + 0.25, query.q, query.f, query.g)), r)
    assert core_leq(compute_core(net, CoreQuery(query.p, query.q + 0.25, query.f, query.g)), r)
    mirrored = compute_core(mirror(net), CoreQuery(query.q, query.p, query.g, query.f)).nodes
    assert {mirror_id(net, v) for v in r.nodes} == mirrored
