"""Two-component spinor propagation on the half-step lattice.

A particle at a site arrived there one of two ways: from the right after a
P step (helicity P) or from the left after a Q step (helicity Q).  The two
arrival amplitudes form a spinor (phi_p, phi_q).  One time step applies the
transfer matrices

    P(theta) = [[cos t, i sin t],   Q(theta) = [[0,       0    ],
                [0,     0       ]]              [i sin t, cos t]]

sitewise and shifts: the new phi_p at x is P(theta) applied to the spinor
at x + 1/2 (the particle stepped left), the new phi_q at x comes from
x - 1/2.  Staying on the same helicity costs cos(theta); reversing costs
i*sin(theta) -- the factor of i per reversal that makes the four
continuation amplitudes of a normalized spinor sum to unit probability,
since P(theta) + Q(theta) is unitary for every theta.

The default theta = pi/4 weights both continuations equally at 1/sqrt(2).
theta is exposed as a knob: smaller theta means fewer reversals per unit
time, i.e. a lighter particle.

Positions are stored as doubled integers (x2 = 2x) so half-steps stay
exact.  Summing amplitudes over all 2**N words with fixed endpoints
(path_sum_kernel) reproduces N applications of step_field; the kernel is
deliberately brute-force so it can serve as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

HELICITIES = ("P", "Q")
KERNEL_CAP = 24


def _check_helicity(value: str) -> str:
    if value not in HELICITIES:
        raise ValueError(f"helicity must be 'P' or 'Q', got {value!r}")
    return value


def _to_x2(x: Union[int, float, Fraction]) -> int:
    """Convert a position in natural units to a doubled-integer lattice site."""
    doubled = Fraction(x) * 2
    if doubled.denominator != 1:
        raise ValueError(f"position {x} is not on the half-step lattice")
    return int(doubled)


@dataclass(frozen=True)
class Spinor:
    """Arrival amplitudes by helicity: phi_p (came from the right), phi_q (left)."""

    phi_p: complex = 0j
    phi_q: complex = 0j

    def norm_sq(self) -> float:
        return abs(self.phi_p) ** 2 + abs(self.phi_q) ** 2


@dataclass(frozen=True)
class TransferMatrices:
    """The one-step propagator pair P(theta), Q(theta)."""

    theta: float = math.pi / 4

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi / 2:
            raise ValueError(f"theta must lie in [0, pi/2], got {self.theta}")

    @property
    def cos(self) -> float:
        # Pin the default angle to sqrt(1/2) exactly; cos/sin disagree by
        # one ulp there.
        if self.theta == math.pi / 4:
            return math.sqrt(0.5)
        return math.cos(self.theta)

    @property
    def sin(self) -> float:
        if self.theta == math.pi / 4:
            return math.sqrt(0.5)
        return math.sin(self.theta)

    @property
    def mat_p(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((complex(self.cos), 1j * self.sin), (0j, 0j))

    @property
    def mat_q(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((0j, 0j), (1j * self.sin, complex(self.cos)))

    def continue_p(self, s: Spinor) -> complex:
        """Amplitude for the next step to be a P step (the P row applied to s)."""
        return self.cos * s.phi_p + 1j * self.sin * s.phi_q

    def continue_q(self, s: Spinor) -> complex:
        """Amplitude for the next step to be a Q step."""
        return 1j * self.sin * s.phi_p + self.cos * s.phi_q


@dataclass
class SpinorField:
    """Spinor amplitudes over lattice sites at one time step.

    Keys of `amplitudes` are doubled positions (x2 = 2x).
    """

    t: int = 0
    amplitudes: dict[int, Spinor] = field(default_factory=dict)

    @classmethod
    def delta(cls, helicity: str = "P", x: Union[int, float, Fraction] = 0) -> "SpinorField":
        """A unit point source with the given arrival helicity."""
        _check_helicity(helicity)
        spinor = Spinor(phi_p=1 + 0j) if helicity == "P" else Spinor(phi_q=1 + 0j)
        return cls(t=0, amplitudes={_to_x2(x): spinor})

    def norm(self) -> float:
        return sum(s.norm_sq() for s in self.amplitudes.values())

    def mean_position(self) -> float:
        """Position expectation <x> (in natural units, not doubled)."""
        return sum(x2 / 2 * s.norm_sq() for x2, s in self.amplitudes.items())

    def sites(self) -> list[tuple[Fraction, Spinor]]:
        return [(Fraction(x2, 2), self.amplitudes[x2]) for x2 in sorted(self.amplitudes)]

    def spinor_at(self, x: Union[int, float, Fraction]) -> Spinor:
        return self.amplitudes.get(_to_x2(x), Spinor())


def path_amplitude(word: str, initial_helicity: str, theta: float = math.pi / 4) -> complex:
    """Amplitude of one word: cos(theta) per continuation, i*sin(theta) per reversal.

    The first symbol is compared against the helicity of the previous
    (pre-word) influence.  The empty word has amplitude 1.
    """
    _check_helicity(initial_helicity)
    tm = TransferMatrices(theta)
    amplitude = 1 + 0j
    previous = initial_helicity
    for symbol in word:
        if symbol not in HELICITIES:
            raise ValueError(f"word must use only P and Q, got {word!r}")
        amplitude *= tm.cos if symbol == previous else 1j * tm.sin
        previous = symbol
    return amplitude


def step_field(f: SpinorField, tm: TransferMatrices) -> SpinorField:
    """Advance one time step: mix helicities sitewise, then shift by arrival."""
    out: dict[int, Spinor] = {}
    for x2, spinor in f.amplitudes.items():
        to_p = tm.continue_p(spinor)  # particle steps left, arrives at x - 1/2
        to_q = tm.continue_q(spinor)  # particle steps right, arrives at x + 1/2
        left = out.get(x2 - 1, Spinor())
        out[x2 - 1] = Spinor(phi_p=left.phi_p + to_p, phi_q=left.phi_q)
        right = out.get(x2 + 1, Spinor())
        out[x2 + 1] = Spinor(phi_p=right.phi_p, phi_q=right.phi_q + to_q)
    return SpinorField(t=f.t + 1, amplitudes=out)


def propagate(initial: SpinorField, steps: int, tm: TransferMatrices) -> SpinorField:
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    current = initial
    for _ in range(steps):
        current = step_field(current, tm)
    return current


def path_sum_kernel(
    initial_helicity: str,
    x0: Union[int, float, Fraction],
    final_helicity: str,
    x1: Union[int, float, Fraction],
    steps: int,
    theta: float = math.pi / 4,
    cap: int = KERNEL_CAP,
) -> complex:
    """Sum of path amplitudes over all words from x0 to x1 ending on final_helicity.

    Brute force over all 2**steps words; this is the independent check for
    propagate() and is capped accordingly.
    """
    _check_helicity(initial_helicity)
    _check_helicity(final_helicity)
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    if steps > cap:
        raise ValueError(f"{steps} steps exceed the kernel cap of {cap}")
    start2 = _to_x2(x0)
    end2 = _to_x2(x1)
    if steps == 0:
        at_rest = start2 == end2 and initial_helicity == final_helicity
        return 1 + 0j if at_rest else 0j
    tm = TransferMatrices(theta)
    stay, flip = complex(tm.cos), 1j * tm.sin
    total = 0j
    for bits in range(1 << steps):
        x2 = start2
        previous = initial_helicity
        amplitude = 1 + 0j
        for k in range(steps):
            symbol = "Q" if bits >> k & 1 else "P"
            x2 += 1 if symbol == "Q" else -1
            amplitude *= stay if symbol == previous else flip
            previous = symbol
        if x2 == end2 and previous == final_helicity:
            total += amplitude
    return total


def one_step_probability_total(s: Spinor, theta: float = math.pi / 4) -> float:
    """Total probability of the two continuations of a normalized spinor.

    |P(theta) s|**2 + |Q(theta) s|**2, which is 1 for every theta: the
    normalization that pins the reversal factor to be imaginary.
    """
    if abs(s.norm_sq() - 1.0) > 1e-12:
        raise ValueError(f"spinor is not normalized: |s|^2 = {s.norm_sq()}")
    tm = TransferMatrices(theta)
    return abs(tm.continue_p(s)) ** 2 + abs(tm.continue_q(s)) ** 2


def zitterbewegung_trace(
    initial: SpinorField, steps: int, tm: TransferMatrices
) -> list[tuple[int, float, float]]:
    """Rows (t, <x>, norm) for each step from the initial field onward."""
    if abs(initial.norm() - 1.0) > 1e-12:
        raise ValueError("initial field must be normalized")
    rows = [(initial.t, initial.mean_position(), initial.norm())]
    current = initial
    for _ in range(steps):
        current = step_field(current, tm)
        rows.append((current.t, current.mean_position(), current.norm()))
    return rows
