"""Append-only influence networks: finite event sets partially ordered by influence.

An influence network is a DAG of events together with named *chains*:
totally ordered event sequences modelling particle or observer world lines.
Consecutive chain members are linked by a direct influence edge, so any two
events on a chain are comparable under reachability.

Two connectivity modes are supported:

  restricted -- every event lies on exactly one chain and takes part in at
      most one cross-chain influence edge.  This is the particle regime:
      each influence consists of one act event and one response event.
  general -- events may lie on any number of chains or on none, and may
      connect freely.  Off-chain events are tracked as isolated.

Reachability is kept as a per-event bitset closure that is updated
incrementally on every edge insertion, so `influences()` is O(1) at all
times, before and after `finalize()`.  Influence is reflexive by
convention: every event influences itself, which lets chain members
project onto themselves without special cases downstream.

Networks are append-only.  `finalize()` freezes the structure; a finalized
network is immutable and safe to share across threads for read-only
queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

RESTRICTED = "restricted"
GENERAL = "general"
_MODES = (RESTRICTED, GENERAL)


class NetworkError(ValueError):
    """Base class for influence-network domain errors."""


class UnknownEventError(NetworkError):
    pass


class UnknownChainError(NetworkError):
    pass


class DuplicateEdgeError(NetworkError):
    pass


class CycleError(NetworkError):
    """Raised when an insertion would create a directed cycle."""


class DegreeViolationError(NetworkError):
    """Raised in restricted mode when an event would gain a second cross-chain edge."""


class FinalizedError(NetworkError):
    """Raised on mutation of a finalized network."""


class NotFinalizedError(NetworkError):
    """Raised by queries that require a finalized network."""


@dataclass(frozen=True)
class ChainRef:
    """Immutable view of one chain: its name, events, and integer labels.

    Labels run 1..n in chain order, so label order is isomorphic to the
    chain order by construction.
    """

    name: str
    events: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.events)

    def labels(self) -> range:
        return range(1, len(self.events) + 1)

    def label_of(self, event: int) -> int:
        """1-based label of an event on this chain."""
        try:
            return self.events.index(event) + 1
        except ValueError:
            raise UnknownEventError(f"event {event} is not on chain {self.name!r}") from None

    def event_at(self, label: int) -> int:
        if not 1 <= label <= len(self.events):
            raise UnknownEventError(f"chain {self.name!r} has no label {label}")
        return self.events[label - 1]


@dataclass(frozen=True)
class Violation:
    """One broken invariant: the rule name plus the offending events."""

    rule: str
    events: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.detail}"


class InfluenceNetwork:
    """Finite poset of influence events with embedded chains."""

    def __init__(self, mode: str = GENERAL):
        if mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")
        self._mode = mode
        self._ids: list[int] = []
        self._index: dict[int, int] = {}
        self._succ: dict[int, set[int]] = {}
        self._pred: dict[int, set[int]] = {}
        self._edges: set[tuple[int, int]] = set()
        self._chains: dict[str, list[int]] = {}
        self._chains_of: dict[int, list[str]] = {}
        # _reach[i] is a bitmask over event indices strictly reachable from
        # event i through one or more edges (non-reflexive closure).
        self._reach: list[int] = []
        self._cross_count: dict[int, int] = {}
        self._finalized = False

    # -------------------------
    # Introspection
    # -------------------------

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def is_finalized(self) -> bool:
        return self._finalized

    def event_ids(self) -> tuple[int, ...]:
        return tuple(self._ids)

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._edges)

    def chain_names(self) -> list[str]:
        return sorted(self._chains)

    def has_event(self, event: int) -> bool:
        return event in self._index

    def has_chain(self, name: str) -> bool:
        return name in self._chains

    def chain(self, name: str) -> ChainRef:
        if name not in self._chains:
            raise UnknownChainError(f"unknown chain {name!r}")
        return ChainRef(name, tuple(self._chains[name]))

    def chains_of(self, event: int) -> tuple[str, ...]:
        self._require_event(event)
        return tuple(self._chains_of.get(event, ()))

    def off_chain_events(self) -> tuple[int, ...]:
        """Events on no chain at all (isolated in general mode)."""
        return tuple(e for e in self._ids if not self._chains_of.get(e))

    def successors(self, event: int) -> frozenset[int]:
        self._require_event(event)
        return frozenset(self._succ[event])

    def predecessors(self, event: int) -> frozenset[int]:
        self._require_event(event)
        return frozenset(self._pred[event])

    # -------------------------
    # Mutation
    # -------------------------

    def add_chain(self, name: str) -> None:
        """Declare an empty chain; events are attached via add_event."""
        self._require_mutable()
        if name in self._chains:
            raise NetworkError(f"chain {name!r} already exists")
        self._chains[name] = []

    def add_event(self, chain: Optional[str] = None) -> int:
        """Append a fresh event; if a chain is named, link it to the chain tail."""
        self._require_mutable()
        if chain is not None and chain not in self._chains:
            raise UnknownChainError(f"unknown chain {chain!r}")
        event = self._ids[-1] + 1 if self._ids else 0
        self._register_event(event)
        if chain is not None:
            # Membership first, so the tail link is classified as a chain
            # edge rather than a cross-chain one.
            members = self._chains[chain]
            self._chains_of.setdefault(event, []).append(chain)
            if members:
                self._insert_edge(members[-1], event)
            members.append(event)
        return event

    def add_influence(self, source: int, target: int) -> None:
        """Insert the edge source -> target, rejecting cycles and duplicates."""
        self._require_mutable()
        self._require_event(source)
        self._require_event(target)
        if source == target:
            raise CycleError(f"cycle-would-form: self influence at event {source}")
        if (source, target) in self._edges:
            raise DuplicateEdgeError(f"duplicate influence {source} -> {target}")
        if self.influences(target, source):
            raise CycleError(f"cycle-would-form: {target} already influences {source}")
        if self._mode == RESTRICTED and self._is_cross(source, target):
            for end in (source, target):
                if self._cross_count.get(end, 0) >= 1:
                    raise DegreeViolationError(
                        f"degree-violation: event {end} already takes part in a cross-chain influence"
                    )
        self._insert_edge(source, target)

    def finalize(self) -> "InfluenceNetwork":
        """Freeze the network; further mutation raises FinalizedError."""
        self._finalized = True
        return self

    # -------------------------
    # Queries
    # -------------------------

    def influences(self, a: int, b: int) -> bool:
        """Reflexive-transitive reachability: a == b or a directed path a -> b."""
        ia = self._require_event(a)
        ib = self._require_event(b)
        if ia == ib:
            return True
        return bool(self._reach[ia] >> ib & 1)

    def transitive_reduction(self) -> set[tuple[int, int]]:
        """Minimal edge set with the same reachability (Hasse covering edges)."""
        reduced = set()
        for source, target in self._edges:
            it = self._index[target]
            redundant = any(
                mid != target and self._reach[self._index[mid]] >> it & 1
                for mid in self._succ[source]
            )
            if not redundant:
                reduced.add((source, target))
        return reduced

    def validate(self) -> list[Violation]:
        """Check every structural invariant; violations are data, not errors."""
        found: list[Violation] = []

        cyclic = tuple(e for e in self._ids if self._reach[self._index[e]] >> self._index[e] & 1)
        if cyclic:
            found.append(
                Violation("cycle-would-form", cyclic, f"events on directed cycles: {list(cyclic)}")
            )

        for name in sorted(self._chains):
            members = self._chains[name]
            if len(set(members)) != len(members):
                found.append(
                    Violation(
                        "postulate-4",
                        tuple(members),
                        f"chain {name!r} lists an event more than once",
                    )
                )
                continue
            for prev, nxt in zip(members, members[1:]):
                if (prev, nxt) not in self._edges:
                    found.append(
                        Violation(
                            "postulate-4",
                            (prev, nxt),
                            f"chain {name!r}: consecutive events {prev}, {nxt} lack a direct "
                            "influence edge (members not mutually comparable)",
                        )
                    )

        if self._mode == RESTRICTED:
            for event in self._ids:
                homes = self._chains_of.get(event, [])
                if len(homes) != 1:
                    found.append(
                        Violation(
                            "postulate-3",
                            (event,),
                            f"event {event} lies on {len(homes)} chains; restricted mode "
                            "requires exactly one",
                        )
                    )
            cross = {e: 0 for e in self._ids}
            for source, target in self._edges:
                if self._is_cross(source, target):
                    cross[source] += 1
                    cross[target] += 1
            for event, count in cross.items():
                if count > 1:
                    found.append(
                        Violation(
                            "postulate-3",
                            (event,),
                            f"event {event} takes part in {count} cross-chain influences; "
                            "restricted mode allows one",
                        )
                    )
        return found

    # -------------------------
    # Bulk construction
    # -------------------------

    @classmethod
    def from_parts(
        cls,
        mode: str,
        chains: dict[str, Iterable[int]],
        influences: Iterable[tuple[int, int]],
        events: Iterable[int] = (),
        link_chains: bool = True,
    ) -> "InfluenceNetwork":
        """Build a network from raw parts without per-edge legality checks.

        Chain-consecutive edges are inserted automatically unless
        link_chains is False.  The result may violate invariants (cycles,
        degree breaches, gapped chains, ...); run validate() to find out.
        Used by the file loader, which must be able to represent a broken
        file in order to report on it.
        """
        net = cls(mode)
        chain_lists = {name: list(members) for name, members in chains.items()}
        everything: list[int] = list(events)
        for members in chain_lists.values():
            everything.extend(members)
        for source, target in (pairs := list(influences)):
            everything.extend((source, target))
        for event in sorted(set(everything)):
            net._register_event(event)
        for name, members in chain_lists.items():
            net._chains[name] = members
            for event in members:
                net._chains_of.setdefault(event, []).append(name)
        if link_chains:
            for members in chain_lists.values():
                for prev, nxt in zip(members, members[1:]):
                    if (prev, nxt) not in net._edges and prev != nxt:
                        net._insert_edge(prev, nxt)
        for source, target in pairs:
            if (source, target) not in net._edges:
                net._insert_edge(source, target)
        return net

    # -------------------------
    # Internals
    # -------------------------

    def _require_event(self, event: int) -> int:
        try:
            return self._index[event]
        except KeyError:
            raise UnknownEventError(f"unknown event {event}") from None

    def _require_mutable(self) -> None:
        if self._finalized:
            raise FinalizedError("network is finalized; mutation is not allowed")

    def require_finalized(self) -> None:
        if not self._finalized:
            raise NotFinalizedError("network must be finalized before this query")

    def _register_event(self, event: int) -> None:
        if event in self._index:
            raise NetworkError(f"event {event} already exists")
        if event < 0:
            raise NetworkError(f"event ids are non-negative, got {event}")
        self._index[event] = len(self._ids)
        self._ids.append(event)
        self._succ[event] = set()
        self._pred[event] = set()
        self._reach.append(0)

    def _is_cross(self, source: int, target: int) -> bool:
        a = set(self._chains_of.get(source, ()))
        b = set(self._chains_of.get(target, ()))
        return not (a & b)

    def _insert_edge(self, source: int, target: int) -> None:
        self._succ[source].add(target)
        self._pred[target].add(source)
        self._edges.add((source, target))
        if self._is_cross(source, target):
            self._cross_count[source] = self._cross_count.get(source, 0) + 1
            self._cross_count[target] = self._cross_count.get(target, 0) + 1
        # Closure update: any event reaching source now also reaches target
        # and everything beyond it.  Correct even if the edge closes a cycle.
        it = self._index[target]
        gained = self._reach[it] | (1 << it)
        isrc = self._index[source]
        source_bit = 1 << isrc
        for i in range(len(self._ids)):
            if i == isrc or self._reach[i] & source_bit:
                self._reach[i] |= gained
