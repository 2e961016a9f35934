"""Shared fixtures: reference networks and brute-force reachability oracles.

The oracles here deliberately avoid the library's bitset closure: they walk
edge dicts with BFS so that projection and reduction results can be checked
against an independent path.
"""

from __future__ import annotations

from collections import deque

import pytest

from infnet import InfluenceNetwork


# -- Brute-force oracles ------------------------------------------------------


def bfs_reaches(edges: dict[int, set[int]], source: int, target: int) -> bool:
    """Reflexive reachability by plain BFS over an adjacency dict."""
    if source == target:
        return True
    seen = set()
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for nxt in edges.get(node, ()):
            if nxt == target:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def adjacency(net: InfluenceNetwork) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {e: set() for e in net.event_ids()}
    for source, target in net.edges():
        adj[source].add(target)
    return adj


def brute_forward(net: InfluenceNetwork, x: int, chain_name: str):
    """Least chain label reachable from x, via the BFS oracle."""
    adj = adjacency(net)
    chain = net.chain(chain_name)
    labels = [
        label
        for label, event in enumerate(chain.events, start=1)
        if bfs_reaches(adj, x, event)
    ]
    return min(labels) if labels else None


def brute_backward(net: InfluenceNetwork, x: int, chain_name: str):
    """Greatest chain label reaching x, via the BFS oracle."""
    adj = adjacency(net)
    chain = net.chain(chain_name)
    labels = [
        label
        for label, event in enumerate(chain.events, start=1)
        if bfs_reaches(adj, event, x)
    ]
    return max(labels) if labels else None


# -- Reference networks -------------------------------------------------------


def build_ladder(length: int = 8, separation: int = 2) -> InfluenceNetwork:
    """Two coordinated chains P and Q at the given separation.

    Cross edges run p_i -> q_(i+separation) and q_i -> p_(i+separation), so
    forward projections shift by the separation in both directions and every
    interval keeps its length under projection.
    """
    net = InfluenceNetwork("general")
    net.add_chain("P")
    net.add_chain("Q")
    p = [net.add_event("P") for _ in range(length)]
    q = [net.add_event("Q") for _ in range(length)]
    for i in range(length - separation):
        net.add_influence(p[i], q[i + separation])
        net.add_influence(q[i], p[i + separation])
    return net


def build_ladder_with_between(length: int = 8) -> tuple[InfluenceNetwork, int, int]:
    """Separation-2 ladder plus two midway events a and c.

    a sits at chain time 3, one unit from each chain: backward projections
    (2, 2), forward projections (4, 4).  c sits likewise at chain time 6.
    The interval from a to the chain event q_6 is quantified by the pair
    (4, 2); the interval from a to c by the symmetric pair (3, 3).
    """
    net = build_ladder(length=length, separation=2)
    p = net.chain("P").events
    q = net.chain("Q").events
    a = net.add_event()
    net.add_influence(p[1], a)
    net.add_influence(q[1], a)
    net.add_influence(a, p[3])
    net.add_influence(a, q[3])
    c = net.add_event()
    net.add_influence(p[4], c)
    net.add_influence(q[4], c)
    net.add_influence(c, p[6])
    net.add_influence(c, q[6])
    return net, a, c


def build_two_particle_net() -> InfluenceNetwork:
    """Two restricted-mode chains trading influences, all invariants intact."""
    net = InfluenceNetwork("restricted")
    net.add_chain("Pi")
    net.add_chain("P")
    a = [net.add_event("Pi") for _ in range(4)]
    b = [net.add_event("P") for _ in range(4)]
    net.add_influence(a[0], b[1])
    net.add_influence(b[0], a[1])
    net.add_influence(a[2], b[3])
    net.add_influence(b[2], a[3])
    return net


def build_single_chain_cloud() -> tuple[InfluenceNetwork, dict[str, int]]:
    """A 10-event net: chain P of 6 plus four loose events around it.

    x: influenced by p_2 and influencing p_5, so quantified (5, 2).
    up: upstream only (influences p_1).
    down: downstream only (influenced by p_6).
    loose: attached to nothing.
    """
    net = InfluenceNetwork("general")
    net.add_chain("P")
    p = [net.add_event("P") for _ in range(6)]
    x = net.add_event()
    net.add_influence(p[1], x)
    net.add_influence(x, p[4])
    up = net.add_event()
    net.add_influence(up, p[0])
    down = net.add_event()
    net.add_influence(p[5], down)
    loose = net.add_event()
    return net, {"x": x, "up": up, "down": down, "loose": loose}


@pytest.fixture
def ladder() -> InfluenceNetwork:
    return build_ladder().finalize()


@pytest.fixture
def ladder_between() -> tuple[InfluenceNetwork, int, int]:
    net, a, c = build_ladder_with_between()
    return net.finalize(), a, c


@pytest.fixture
def two_particles() -> InfluenceNetwork:
    return build_two_particle_net().finalize()


@pytest.fixture
def chain_cloud() -> tuple[InfluenceNetwork, dict[str, int]]:
    net, ids = build_single_chain_cloud()
    return net.finalize(), ids
