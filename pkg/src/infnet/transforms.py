"""Frame changes between chain pairs: pair rescaling, boosts, interval length.

A chain that projects consistently onto another pair of chains turns a unit
interval into forward length m and backward length n; the unit itself has
k = sqrt(m*n).  Re-quantifying any pair in the new frame multiplies the
components oppositely,

    (dp, dq)  ->  (dp * sqrt(m/n), dq * sqrt(n/m)),

which preserves the scalar dp*dq.  In (dt, dx) variables this is a boost:
the rescaling by (m, n) moves coordinates exactly as the standard

    dt' = g*dt - b*g*dx,   dx' = -b*g*dt + g*dx

with b = (n - m)/(m + n) and g = (1 - b*b)**-0.5.  Note the sign: the
quantity (m - n)/(m + n) is the speed the new frame *attributes to* an
interval at rest in the old one, so the coordinate boost runs with the
opposite sign.  FrameRelation.as_boost() encodes the correspondence.

Arithmetic stays exact (Fraction) whenever m/n is a perfect-square
rational; otherwise floats with 1e-12 relative accuracy take over.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .geometry import Number, PairQuantification


class LightlikeBoostError(ValueError):
    """Raised when a boost at |beta| = 1 is applied to coordinates."""


class SpacelikeIntervalError(ValueError):
    """Raised when a length is requested for a pair with negative scalar."""


def _exact_sqrt(value: Union[int, Fraction]) -> Optional[Fraction]:
    """Square root of a non-negative rational, if it is itself rational."""
    value = Fraction(value)
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


@dataclass(frozen=True)
class FrameRelation:
    """A consistent projection of one frame onto another: unit -> (m, n)."""

    m: Number
    n: Number

    def __post_init__(self):
        if not (self.m > 0 and self.n > 0):
            raise ValueError(f"frame projections must be positive, got m={self.m}, n={self.n}")

    @property
    def k(self) -> float:
        """Length of the unit interval in the original frame: sqrt(m*n)."""
        return math.sqrt(self.m) * math.sqrt(self.n)

    @property
    def multiplier(self) -> Union[Fraction, float]:
        """The factor sqrt(m/n) applied to the forward component."""
        if isinstance(self.m, (int, Fraction)) and isinstance(self.n, (int, Fraction)):
            exact = _exact_sqrt(Fraction(self.m) / Fraction(self.n))
            if exact is not None:
                return exact
        return math.sqrt(self.m / self.n)

    def as_boost(self) -> "Boost":
        """The boost acting on (dt, dx) exactly as this rescaling does."""
        return beta_gamma(self.n, self.m)


@dataclass(frozen=True)
class Boost:
    """A velocity parameter with its dilation factor; gamma is inf at |beta| = 1."""

    beta: float
    gamma: float

    @property
    def is_lightlike(self) -> bool:
        return abs(self.beta) == 1.0


def pair_transform(rel: FrameRelation, pair: PairQuantification) -> PairQuantification:
    """Re-quantify a pair in the frame given by rel; the scalar is preserved."""
    factor = rel.multiplier
    if isinstance(factor, Fraction):
        return PairQuantification(pair.dp * factor, pair.dq / factor)
    return PairQuantification(
        pair.dp * math.sqrt(rel.m / rel.n), pair.dq * math.sqrt(rel.n / rel.m)
    )


def beta_gamma(m: Number, n: Number) -> Boost:
    """The speed (m - n)/(m + n) a frame pair assigns, with its gamma factor.

    Reaches |beta| = 1 exactly when m or n is zero -- the light-like case,
    flagged with infinite gamma.
    """
    if m < 0 or n < 0:
        raise ValueError(f"projections must be non-negative, got m={m}, n={n}")
    if m == 0 and n == 0:
        raise ValueError("m and n cannot both be zero")
    beta = (m - n) / (m + n)
    beta = float(beta)
    if abs(beta) >= 1.0:
        return Boost(beta=math.copysign(1.0, beta), gamma=math.inf)
    return Boost(beta=beta, gamma=1.0 / math.sqrt(1.0 - beta * beta))


def lorentz_boost(boost: Boost, dt: Number, dx: Number) -> tuple[float, float]:
    """Boost (dt, dx); preserves dt**2 - dx**2.  Rejects |beta| = 1."""
    if boost.is_lightlike or not math.isfinite(boost.gamma):
        raise LightlikeBoostError("cannot boost coordinates at |beta| = 1")
    g = boost.gamma
    bg = boost.beta * g
    dt = float(dt)
    dx = float(dx)
    return g * dt - bg * dx, -bg * dt + g * dx


def interval_length(pair: PairQuantification) -> Union[Fraction, float]:
    """Length sqrt(dp*dq) of a time-like or null pair.

    Exact when the scalar is a perfect-square rational.  A negative scalar
    has no length; it is reported as the space-like case it is.
    """
    scalar = pair.scalar
    if scalar < 0:
        raise SpacelikeIntervalError(
            f"pair ({pair.dp}, {pair.dq}) has negative scalar {scalar}; "
            "space-like separations have a distance, not a length"
        )
    if isinstance(scalar, Fraction):
        exact = _exact_sqrt(scalar)
        if exact is not None:
            return exact
    return math.sqrt(scalar)
