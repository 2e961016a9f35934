"""Construction, reachability, reduction, and validation of influence networks.

Covered claims:
    - add_event appends, links chain tails, and rejects unknown chains
    - add_influence rejects cycles, duplicates, and restricted-degree breaches
    - influences() is reflexive-transitive and matches a BFS oracle
    - transitive reduction drops exactly the implied edges
    - validate() reports rule names for broken invariants
    - acyclicity survives random legal edit sequences
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infnet import (
    CycleError,
    DegreeViolationError,
    DuplicateEdgeError,
    FinalizedError,
    InfluenceNetwork,
    NotFinalizedError,
    UnknownChainError,
    UnknownEventError,
)

from conftest import adjacency, bfs_reaches


# == 1. Event and chain construction =========================================


class TestAddEvent:
    def test_first_event_on_chain(self):
        net = InfluenceNetwork()
        net.add_chain("P")
        assert net.add_event("P") == 0
        assert net.chain("P").events == (0,)

    def test_chain_extension_adds_link(self):
        net = InfluenceNetwork()
        net.add_chain("P")
        net.add_event("P")
        net.add_event("P")
        assert net.add_event("P") == 2
        assert (1, 2) in net.edges()

    def test_unknown_chain_rejected(self):
        net = InfluenceNetwork()
        with pytest.raises(UnknownChainError):
            net.add_event("Z")

    def test_chainless_event(self):
        net = InfluenceNetwork()
        event = net.add_event()
        assert net.off_chain_events() == (event,)

    def test_ids_never_reused(self):
        net = InfluenceNetwork()
        ids = [net.add_event() for _ in range(5)]
        assert ids == sorted(set(ids))

    def test_mutation_after_finalize_rejected(self):
        net = InfluenceNetwork()
        net.add_event()
        net.finalize()
        with pytest.raises(FinalizedError):
            net.add_event()


# == 2. Influence edges =======================================================


class TestAddInfluence:
    def test_cross_chain_edge_accepted(self, two_particles):
        # the fixture carries four cross edges already; its shape is legal
        assert two_particles.validate() == []

    def test_two_cycle_rejected(self):
        net = InfluenceNetwork()
        a, b = net.add_event(), net.add_event()
        net.add_influence(a, b)
        with pytest.raises(CycleError):
            net.add_influence(b, a)

    def test_long_cycle_rejected(self):
        net = InfluenceNetwork()
        events = [net.add_event() for _ in range(4)]
        for src, dst in zip(events, events[1:]):
            net.add_influence(src, dst)
        with pytest.raises(CycleError):
            net.add_influence(events[-1], events[0])

    def test_self_influence_rejected(self):
        net = InfluenceNetwork()
        a = net.add_event()
        with pytest.raises(CycleError):
            net.add_influence(a, a)

    def test_duplicate_rejected(self):
        net = InfluenceNetwork()
        a, b = net.add_event(), net.add_event()
        net.add_influence(a, b)
        with pytest.raises(DuplicateEdgeError):
            net.add_influence(a, b)

    def test_restricted_second_cross_edge_rejected(self):
        net = InfluenceNetwork("restricted")
        net.add_chain("A")
        net.add_chain("B")
        a = [net.add_event("A") for _ in range(2)]
        b = [net.add_event("B") for _ in range(2)]
        net.add_influence(a[0], b[0])
        with pytest.raises(DegreeViolationError):
            net.add_influence(a[0], b[1])

    def test_unknown_event_rejected(self):
        net = InfluenceNetwork()
        net.add_event()
        with pytest.raises(UnknownEventError):
            net.add_influence(0, 99)


# == 3. Reachability ==========================================================


class TestInfluences:
    def test_transitive(self):
        net = InfluenceNetwork()
        a, b, c = (net.add_event() for _ in range(3))
        net.add_influence(a, b)
        net.add_influence(b, c)
        assert net.influences(a, c)
        assert not net.influences(c, a)

    def test_reflexive(self):
        net = InfluenceNetwork()
        x = net.add_event()
        assert net.influences(x, x)

    def test_isolated_events_unrelated(self):
        net = InfluenceNetwork()
        a, b = net.add_event(), net.add_event()
        assert not net.influences(a, b)
        assert not net.influences(b, a)

    def test_matches_bfs_oracle(self, ladder):
        adj = adjacency(ladder)
        for a in ladder.event_ids():
            for b in ladder.event_ids():
                assert ladder.influences(a, b) == bfs_reaches(adj, a, b)


# == 4. Transitive reduction ==================================================


class TestTransitiveReduction:
    def test_drops_redundant_edge(self):
        net = InfluenceNetwork()
        a, b, c = (net.add_event() for _ in range(3))
        net.add_influence(a, b)
        net.add_influence(b, c)
        net.add_influence(a, c)
        assert net.transitive_reduction() == {(a, b), (b, c)}

    def test_keeps_covering_edges(self, two_particles):
        assert two_particles.transitive_reduction() == set(two_particles.edges())

    def test_edgeless(self):
        net = InfluenceNetwork()
        net.add_event()
        assert net.transitive_reduction() == set()

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_reduction_preserves_reachability(self, data):
        n = data.draw(st.integers(2, 12), label="events")
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        chosen = data.draw(
            st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n), label="edges"
        )
        net = InfluenceNetwork.from_parts(
            "general", {}, chosen, events=range(n)
        ).finalize()
        reduced = net.transitive_reduction()
        assert reduced <= set(net.edges())
        slim: dict[int, set[int]] = {e: set() for e in range(n)}
        for source, target in reduced:
            slim[source].add(target)
        full = adjacency(net)
        for a in range(n):
            for b in range(n):
                assert bfs_reaches(slim, a, b) == bfs_reaches(full, a, b)


# == 5. Validation ============================================================


class TestValidate:
    def test_legal_fixture_is_clean(self, two_particles):
        assert two_particles.validate() == []

    def test_chain_gap_is_postulate_4(self):
        linked = InfluenceNetwork.from_parts("general", {"P": [0, 1]}, [])
        assert linked.validate() == []
        gapped = InfluenceNetwork.from_parts("general", {"P": [0, 1]}, [], link_chains=False)
        assert {v.rule for v in gapped.validate()} == {"postulate-4"}

    def test_cycle_reported(self):
        net = InfluenceNetwork.from_parts("general", {}, [(0, 1), (1, 0)], events=[0, 1])
        rules = [v.rule for v in net.validate()]
        assert rules == ["cycle-would-form"]

    def test_restricted_off_chain_event_is_postulate_3(self):
        net = InfluenceNetwork("restricted")
        net.add_event()
        assert [v.rule for v in net.validate()] == ["postulate-3"]

    def test_restricted_double_cross_is_postulate_3(self):
        net = InfluenceNetwork.from_parts(
            "restricted",
            {"A": [0, 1], "B": [2, 3], "C": [4, 5]},
            [(0, 2), (0, 4)],
        )
        assert "postulate-3" in {v.rule for v in net.validate()}

    def test_duplicate_chain_member_flagged(self):
        net = InfluenceNetwork.from_parts("general", {"P": [0, 1, 0]}, [])
        assert "postulate-4" in {v.rule for v in net.validate()}


# == 6. Chain labels ==========================================================


class TestChainLabels:
    def test_labels_are_order_isomorphic(self, ladder):
        chain = ladder.chain("P")
        for first in chain.labels():
            for second in chain.labels():
                precedes = ladder.influences(
                    chain.event_at(first), chain.event_at(second)
                )
                assert (first <= second) == precedes

    def test_label_round_trip(self, ladder):
        chain = ladder.chain("Q")
        for label in chain.labels():
            assert chain.label_of(chain.event_at(label)) == label


# == 7. Random edit sequences stay acyclic ===================================


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_random_edits_never_create_cycles(data):
    net = InfluenceNetwork("general")
    net.add_chain("P")
    ops = data.draw(st.lists(st.integers(0, 99), min_size=2, max_size=40), label="ops")
    for op in ops:
        if op % 3 == 0 or not net.event_ids():
            net.add_event("P" if op % 2 else None)
        else:
            ids = net.event_ids()
            src = ids[op % len(ids)]
            dst = ids[(op * 7 + 3) % len(ids)]
            try:
                net.add_influence(src, dst)
            except (CycleError, DuplicateEdgeError):
                pass
    for a in net.event_ids():
        for b in net.event_ids():
            if a != b:
                assert not (net.influences(a, b) and net.influences(b, a))
    assert not [v for v in net.validate() if v.rule == "cycle-would-form"]


def test_queries_require_finalized_network():
    from infnet import forward_project

    net = InfluenceNetwork()
    net.add_chain("P")
    net.add_event("P")
    with pytest.raises(NotFinalizedError):
        forward_project(net, 0, "P")
