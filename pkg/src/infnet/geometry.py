"""Interval geometry between coordinated chains, in exact rational arithmetic.

Two chains are *coordinated* when each quantifies the other's intervals at
their own length: every interval on P whose endpoints project onto Q (both
forward and backward) lands on an interval of equal length, and vice versa.
Coordinated chains carve a flat 1+1-dimensional subspace out of the order.

A generalized interval [a, b] is quantified three ways:

    quadruple  (p_a, q_a, p_b, q_b)      the four forward projections
    pair       (dp, dq) = (p_b - p_a, q_b - q_a)
    scalar     dp * dq

The pair splits into a symmetric part (dt, dt) ordered along the chains and
an antisymmetric part (dx, -dx) ordered across them:

    (dp, dq) = (dt, dt) + (dx, -dx),   dt = (dp + dq) / 2,  dx = (dp - dq) / 2

and the scalar is additive over the split:

    dp * dq = dt**2 - dx**2

the signature falling out of the opposite signs of the antisymmetric pair.
Everything here is Fraction-exact; floats only enter via the transforms
module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .network import ChainRef, InfluenceNetwork
from .projection import backward_project, forward_project

Number = Union[int, Fraction, float]


class UncoordinatedChainsError(ValueError):
    """Raised when an operation requires coordinated chains but they disagree."""


class MissingProjectionError(ValueError):
    """Raised when a required projection of an event onto a chain is absent."""


class NotBetweenError(ValueError):
    """Raised when an interval endpoint is not between the two chains."""


def _exact(value: Number) -> Union[Fraction, float]:
    """Keep ints exact as Fractions; pass floats through unchanged."""
    if isinstance(value, bool):
        raise TypeError("booleans are not quantities")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, float)):
        return value
    raise TypeError(f"expected a number, got {type(value).__name__}")


@dataclass(frozen=True)
class PairQuantification:
    """An interval's projected lengths (dp, dq) onto a chain pair."""

    dp: Union[Fraction, float]
    dq: Union[Fraction, float]

    def __init__(self, dp: Number, dq: Number):
        object.__setattr__(self, "dp", _exact(dp))
        object.__setattr__(self, "dq", _exact(dq))

    @property
    def scalar(self) -> Union[Fraction, float]:
        return self.dp * self.dq

    def scaled(self, z: Number) -> "PairQuantification":
        z = _exact(z)
        return PairQuantification(z * self.dp, z * self.dq)

    def __add__(self, other: "PairQuantification") -> "PairQuantification":
        return PairQuantification(self.dp + other.dp, self.dq + other.dq)

    def __iter__(self):
        yield self.dp
        yield self.dq


@dataclass(frozen=True)
class Decomposition:
    """Symmetric (along-chain) and antisymmetric (cross-chain) parts of a pair."""

    symmetric: PairQuantification
    antisymmetric: PairQuantification

    @property
    def dt(self) -> Union[Fraction, float]:
        return self.symmetric.dp

    @property
    def dx(self) -> Union[Fraction, float]:
        return self.antisymmetric.dp


@dataclass(frozen=True)
class IntervalQuantification:
    """Quadruple, pair, and scalar views of one generalized interval."""

    quadruple: tuple[int, int, int, int]
    pair: PairQuantification
    scalar: Union[Fraction, float]


def is_coordinated(
    net: InfluenceNetwork, p: Union[str, ChainRef], q: Union[str, ChainRef]
) -> bool:
    """Whether two chains agree on the lengths of each other's intervals.

    Endpoints lacking the relevant projection are skipped, so short chains
    are judged only on the part they can see of each other.
    """
    net.require_finalized()
    ref_p = net.chain(p.name if isinstance(p, ChainRef) else p)
    ref_q = net.chain(q.name if isinstance(q, ChainRef) else q)
    return _projects_consistently(net, ref_p, ref_q) and _projects_consistently(
        net, ref_q, ref_p
    )


def _projects_consistently(net, source: ChainRef, target: ChainRef) -> bool:
    forward = [forward_project(net, e, target) for e in source.events]
    backward = [backward_project(net, e, target) for e in source.events]
    n = len(source.events)
    for i in range(n):
        for j in range(i + 1, n):
            if forward[i] is not None and forward[j] is not None:
                if forward[j] - forward[i] != j - i:
                    return False
            if backward[i] is not None and backward[j] is not None:
                if backward[j] - backward[i] != j - i:
                    return False
    return True


def distance(
    net: InfluenceNetwork,
    p: Union[str, ChainRef],
    q: Union[str, ChainRef],
    p_label: int,
    q_label: int,
) -> Fraction:
    """Separation of two coordinated chains: (dp - dq) / 2 for any event pair.

    dp runs from the P event to the forward projection of the Q event onto
    P; dq runs from the forward projection of the P event onto Q to the Q
    event.  Coordination is checked eagerly because the value is only
    endpoint-independent when it holds.
    """
    ref_p = net.chain(p.name if isinstance(p, ChainRef) else p)
    ref_q = net.chain(q.name if isinstance(q, ChainRef) else q)
    if not is_coordinated(net, ref_p, ref_q):
        raise UncoordinatedChainsError(
            f"chains {ref_p.name!r} and {ref_q.name!r} are not coordinated"
        )
    p_event = ref_p.event_at(p_label)
    q_event = ref_q.event_at(q_label)
    q_on_p = forward_project(net, q_event, ref_p)
    p_on_q = forward_project(net, p_event, ref_q)
    if q_on_p is None:
        raise MissingProjectionError(
            f"event {q_event} has no forward projection onto {ref_p.name!r}"
        )
    if p_on_q is None:
        raise MissingProjectionError(
            f"event {p_event} has no forward projection onto {ref_q.name!r}"
        )
    dp = q_on_p - p_label
    dq = q_label - p_on_q
    return Fraction(dp - dq, 2)


def is_between(
    net: InfluenceNetwork, x: int, p: Union[str, ChainRef], q: Union[str, ChainRef]
) -> bool:
    """Whether x lies between two chains, by projection composition.

    The four relations checked are: projecting x onto P directly agrees
    with going through its backward projection on Q first (and the forward
    dual), plus both relations with the chains swapped.  Any absent
    projection along the way makes the answer False.
    """
    net.require_finalized()
    ref_p = net.chain(p.name if isinstance(p, ChainRef) else p)
    ref_q = net.chain(q.name if isinstance(q, ChainRef) else q)
    for first, second in ((ref_p, ref_q), (ref_q, ref_p)):
        fwd = forward_project(net, x, first)
        bwd_inner = backward_project(net, x, second)
        if fwd is None or bwd_inner is None:
            return False
        if forward_project(net, second.event_at(bwd_inner), first) != fwd:
            return False
        bwd = backward_project(net, x, first)
        fwd_inner = forward_project(net, x, second)
        if bwd is None or fwd_inner is None:
            return False
        if backward_project(net, second.event_at(fwd_inner), first) != bwd:
            return False
    return True


def quantify_interval(
    net: InfluenceNetwork,
    a: int,
    b: int,
    p: Union[str, ChainRef],
    q: Union[str, ChainRef],
    require_between: bool = True,
) -> IntervalQuantification:
    """Quantify the generalized interval [a, b] against a chain pair.

    Both endpoints must forward-project onto both chains.  By default both
    must also lie between the chains; pass require_between=False for
    intervals along an uninfluenced source chain, whose events have no
    backward projections and so can never test as between.
    """
    net.require_finalized()
    ref_p = net.chain(p.name if isinstance(p, ChainRef) else p)
    ref_q = net.chain(q.name if isinstance(q, ChainRef) else q)
    labels = {}
    for event in (a, b):
        for ref in (ref_p, ref_q):
            label = forward_project(net, event, ref)
            if label is None:
                raise MissingProjectionError(
                    f"event {event} has no forward projection onto {ref.name!r}"
                )
            labels[event, ref.name] = label
    if require_between:
        for event in (a, b):
            if not is_between(net, event, ref_p, ref_q):
                raise NotBetweenError(
                    f"event {event} is not between chains {ref_p.name!r} and {ref_q.name!r}"
                )
    quadruple = (
        labels[a, ref_p.name],
        labels[a, ref_q.name],
        labels[b, ref_p.name],
        labels[b, ref_q.name],
    )
    pair = PairQuantification(quadruple[2] - quadruple[0], quadruple[3] - quadruple[1])
    return IntervalQuantification(quadruple=quadruple, pair=pair, scalar=pair.scalar)


def decompose(pair: PairQuantification) -> Decomposition:
    """Split a pair into symmetric + antisymmetric parts; the sum restores it."""
    half_sum = (pair.dp + pair.dq) / 2
    half_diff = (pair.dp - pair.dq) / 2
    return Decomposition(
        symmetric=PairQuantification(half_sum, half_sum),
        antisymmetric=PairQuantification(half_diff, -half_diff),
    )


def minkowski_scalar(pair: PairQuantification):
    """The invariant scalar with its time/space split: (dp*dq, dt, dx).

    dt = (dp + dq)/2, dx = (dp - dq)/2, and dp*dq == dt**2 - dx**2 holds
    exactly for rational input.
    """
    dt = (pair.dp + pair.dq) / 2
    dx = (pair.dp - pair.dq) / 2
    return pair.scalar, dt, dx
