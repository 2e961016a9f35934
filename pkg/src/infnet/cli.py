"""Command-line front end.

Commands: validate, quantify, interval, distance, transform, kinematics,
enumerate, simulate, propagate, hasse, paths.  Exit codes: 0 ok, 1 domain
violation, 2 usage or parse error.  All numeric output is produced by the
owning module and printed at full precision; the environment variable
INFNET_SEED overrides --seed wherever sampling is involved.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import checkerboard, freeparticle, geometry, kinematics, netformat, svg, transforms
from .geometry import PairQuantification
from .netformat import NetworkParseError, ViolationsError
from .projection import quantify_event

DEFAULT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RunConfig:
    """Run-wide knobs shared by the sampling and enumeration commands."""

    seed: int = 0
    tolerance: float = DEFAULT_TOLERANCE
    cap: int = freeparticle.DEFAULT_CAP
    out: Optional[str] = None
    trace: Optional[str] = None

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.cap > checkerboard.KERNEL_CAP:
            raise ValueError(f"cap must not exceed {checkerboard.KERNEL_CAP}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed = getattr(args, "seed", 0)
        env_seed = os.environ.get("INFNET_SEED")
        if env_seed is not None:
            seed = int(env_seed)
        return cls(
            seed=seed,
            tolerance=getattr(args, "tolerance", DEFAULT_TOLERANCE),
            cap=getattr(args, "cap", freeparticle.DEFAULT_CAP),
            out=getattr(args, "out", None),
            trace=getattr(args, "trace", None),
        )


def _fmt(value) -> str:
    """Locale-independent full-precision rendering of one number."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real!r}{value.imag:+}j"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _fmt_pair(pair: PairQuantification) -> str:
    return f"({_fmt(pair.dp)}, {_fmt(pair.dq)})"


def _emit(label: str, value) -> None:
    print(f"{label} {_fmt(value)}")


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


# -------------------------
# Commands
# -------------------------


def cmd_validate(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        parsed = netformat.parse(handle.read())
    violations = parsed.net.validate()
    if not violations:
        print("ok")
        return 0
    for violation in violations:
        hint = ""
        lines = sorted(
            parsed.edge_lines[edge]
            for edge in parsed.edge_lines
            if set(edge) & set(violation.events)
        )
        if lines:
            hint = f" (see line {lines[0]})"
        print(f"{violation}{hint}")
    return 1


def cmd_quantify(args: argparse.Namespace) -> int:
    net = netformat.load_path(args.file, force=args.force)
    chain = net.chain(args.chain)
    pair_chain = net.chain(args.pair) if args.pair else None
    coordinated = None
    if pair_chain is not None:
        coordinated = geometry.is_coordinated(net, chain, pair_chain)
        if not coordinated:
            print(
                f"warning: chains {chain.name!r} and {pair_chain.name!r} are not "
                "coordinated; classification skipped"
            )
    for event in net.event_ids():
        coord = quantify_event(net, event, chain)
        row = [
            str(event),
            "-" if coord.forward is None else str(coord.forward),
            "-" if coord.backward is None else str(coord.backward),
        ]
        if pair_chain is not None and coordinated:
            between = geometry.is_between(net, event, chain, pair_chain)
            other = quantify_event(net, event, pair_chain)
            pairable = coord.forward is not None and other.forward is not None
            row.append("between" if between else "outside")
            row.append("pairable" if pairable else "unpairable")
        print(" ".join(row))
    return 0


def _rational(text: str) -> Fraction:
    """argparse type: exact rationals from '4', '0.5', or '1/3'."""
    return Fraction(text)


def _pair_from_args(args: argparse.Namespace) -> PairQuantification:
    dp, dq = args.pair
    return PairQuantification(Fraction(dp), Fraction(dq))


def cmd_interval(args: argparse.Namespace) -> int:
    if args.pair is not None:
        pair = _pair_from_args(args)
    else:
        if args.file is None or args.a is None or args.b is None:
            raise ValueError("interval needs either --pair DP DQ or FILE with --a and --b")
        net = netformat.load_path(args.file, force=args.force)
        quantified = geometry.quantify_interval(
            net, args.a, args.b, args.chain_p, args.chain_q
        )
        _emit("quadruple", " ".join(str(v) for v in quantified.quadruple))
        pair = quantified.pair
    scalar, dt, dx = geometry.minkowski_scalar(pair)
    split = geometry.decompose(pair)
    _emit("pair", _fmt_pair(pair))
    _emit("scalar", scalar)
    _emit("dt", dt)
    _emit("dx", dx)
    _emit("symmetric", _fmt_pair(split.symmetric))
    _emit("antisymmetric", _fmt_pair(split.antisymmetric))
    return 0


def cmd_distance(args: argparse.Namespace) -> int:
    net = netformat.load_path(args.file, force=args.force)
    value = geometry.distance(net, args.chain_p, args.chain_q, args.p_label, args.q_label)
    _emit("distance", value)
    return 0


def cmd_transform(args: argparse.Namespace) -> int:
    rel = transforms.FrameRelation(args.m, args.n)
    pair = PairQuantification(args.pair[0], args.pair[1])
    moved = transforms.pair_transform(rel, pair)
    boost = transforms.beta_gamma(args.m, args.n)
    _emit("pair", _fmt_pair(moved))
    _emit("k", rel.k)
    _emit("beta", boost.beta)
    _emit("gamma", boost.gamma)
    _emit("scalar", moved.scalar)
    return 0


def cmd_kinematics(args: argparse.Namespace) -> int:
    rates = kinematics.rates_from_counts(args.count, args.dp, args.dq)
    state = kinematics.kinematics_from_rates(rates)
    _emit("r_p", rates.r_p)
    _emit("r_q", rates.r_q)
    _emit("m", state.mass)
    _emit("E", state.energy)
    _emit("p", state.momentum)
    _emit("beta", state.beta)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    words = freeparticle.enumerate_sequences(args.p, args.q, cap=config.cap)
    if args.amplitudes is None:
        for word in words:
            print(word)
        return 0
    theta = args.amplitudes
    totals = {"P": 0j, "Q": 0j}
    for word in words:
        amplitude = checkerboard.path_amplitude(word, args.initial, theta)
        final = word[-1] if word else args.initial
        totals[final] += amplitude
        print(f"{word} {_fmt(amplitude)}")
    for final in ("P", "Q"):
        _emit(f"sum_final_{final}", totals[final])
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    words = freeparticle.sample_sequences(args.steps, args.prob_p, config.seed, args.count)
    if args.emit_words:
        for word in words:
            print(word)
    total_p = sum(word.count("P") for word in words)
    total_q = args.steps * args.count - total_p
    dp, dq = total_q, total_p  # crossed light-cone bookkeeping
    _emit("seed", config.seed)
    _emit("words", args.count)
    _emit("steps", args.steps)
    _emit("dp", dp)
    _emit("dq", dq)
    if dp + dq > 0:
        beta = kinematics.beta_consistency(dp, dq)
        _emit("beta", beta)
        _emit("beta_expected", 1.0 - 2.0 * args.prob_p)
    return 0


def cmd_propagate(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    tm = checkerboard.TransferMatrices(args.theta)
    field = checkerboard.SpinorField.delta(args.initial)
    rows = ["t,x,probP,probQ,total"]
    trace_rows = ["t,mean_x,norm"]
    current = field
    for step in range(args.steps + 1):
        if step > 0:
            current = checkerboard.step_field(current, tm)
        norm = current.norm()
        for x, spinor in current.sites():
            rows.append(
                f"{current.t},{float(x)!r},{abs(spinor.phi_p) ** 2!r},"
                f"{abs(spinor.phi_q) ** 2!r},{norm!r}"
            )
        trace_rows.append(f"{current.t},{current.mean_position()!r},{norm!r}")
    _write_text(config.out, "\n".join(rows) + "\n")
    if config.trace is not None:
        _write_text(config.trace, "\n".join(trace_rows) + "\n")
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    net = netformat.load_path(args.file, force=args.force)
    _write_text(args.svg, svg.hasse_svg(net))
    return 0


def cmd_paths(args: argparse.Namespace) -> int:
    path = freeparticle.sequence_to_path(
        args.word, (Fraction(args.start_x), Fraction(args.start_t))
    )
    _write_text(args.svg, svg.path_svg(path))
    return 0


# -------------------------
# Parser
# -------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infnet", description="Influence-network construction, geometry, and propagation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_force(p):
        p.add_argument("--force", action="store_true", help="load files that fail validation")

    p = sub.add_parser("validate", help="check a network file against all invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quantify", help="per-event chain coordinates")
    p.add_argument("file")
    p.add_argument("--chain", required=True)
    p.add_argument("--pair", default=None, help="second chain for betweenness classification")
    add_force(p)
    p.set_defaults(func=cmd_quantify)

    p = sub.add_parser("interval", help="quantify an interval pair")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--pair", nargs=2, type=_rational, default=None, metavar=("DP", "DQ"))
    p.add_argument("--a", type=int, default=None, help="first event id")
    p.add_argument("--b", type=int, default=None, help="second event id")
    p.add_argument("--chain-p", default="P")
    p.add_argument("--chain-q", default="Q")
    add_force(p)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("distance", help="separation of two coordinated chains")
    p.add_argument("file")
    p.add_argument("--chain-p", default="P")
    p.add_argument("--chain-q", default="Q")
    p.add_argument("--p-label", type=int, default=1)
    p.add_argument("--q-label", type=int, default=1)
    add_force(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("transform", help="re-quantify a pair in another frame")
    p.add_argument("--m", type=_rational, required=True)
    p.add_argument("--n", type=_rational, required=True)
    p.add_argument("--pair", nargs=2, type=_rational, required=True, metavar=("DP", "DQ"))
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("kinematics", help="mass/energy/momentum from counts and spans")
    p.add_argument("--count", type=float, required=True)
    p.add_argument("--dp", type=float, required=True)
    p.add_argument("--dq", type=float, required=True)
    p.set_defaults(func=cmd_kinematics)

    p = sub.add_parser("enumerate", help="all influence words with given symbol counts")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument(
        "--amplitudes",
        nargs="?",
        type=float,
        const=math.pi / 4,
        default=None,
        metavar="THETA",
        help="append per-word amplitudes at this angle (default pi/4)",
    )
    p.add_argument("--initial", choices=("P", "Q"), default="P")
    p.add_argument("--cap", type=int, default=freeparticle.DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("simulate", help="sample random influence words and report rates")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--prob-p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--emit-words", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("propagate", help="run the lattice propagator from a point source")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--theta", type=float, default=math.pi / 4)
    p.add_argument("--initial", choices=("P", "Q"), default="P")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.add_argument("--trace", default=None, help="write the <x>/norm trace CSV here")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("hasse", help="render a network file as a Hasse diagram")
    p.add_argument("file")
    p.add_argument("--svg", default=None, help="output path (default stdout)")
    add_force(p)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("paths", help="render a word as a zig-zag spacetime path")
    p.add_argument("--word", required=True)
    p.add_argument("--svg", default=None, help="output path (default stdout)")
    p.add_argument("--start-x", type=int, default=0)
    p.add_argument("--start-t", type=int, default=0)
    p.set_defaults(func=cmd_paths)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except NetworkParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ViolationsError as exc:
        for violation in exc.violations:
            print(str(violation), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
