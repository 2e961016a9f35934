"""Line-oriented text format for influence networks.

    # comment (also allowed at end of line)
    mode restricted
    chain P: 0 1 2 3
    chain Q: 4 5 6
    influence 0 -> 4

Serialization is canonical: one mode line, chains sorted by name, edges
sorted numerically, chain-implied edges omitted.  parse() keeps the source
line of every record so callers can point at offending lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .network import GENERAL, RESTRICTED, InfluenceNetwork, Violation


class NetworkParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ViolationsError(ValueError):
    """A parsed file broke network invariants and --force was not given."""

    def __init__(self, violations: list[Violation]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


@dataclass
class ParsedNetwork:
    net: InfluenceNetwork
    edge_lines: dict[tuple[int, int], int] = field(default_factory=dict)
    chain_lines: dict[str, int] = field(default_factory=dict)


def parse(text: str) -> ParsedNetwork:
    mode = None
    chains: dict[str, list[int]] = {}
    influences: list[tuple[int, int]] = []
    edge_lines: dict[tuple[int, int], int] = {}
    chain_lines: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        if keyword == "mode":
            if len(tokens) != 2 or tokens[1] not in (RESTRICTED, GENERAL):
                raise NetworkParseError(lineno, f"expected 'mode restricted|general', got {raw.strip()!r}")
            if mode is not None:
                raise NetworkParseError(lineno, "duplicate mode line")
            mode = tokens[1]
        elif keyword == "chain":
            rest = line[len("chain") :].strip()
            if ":" not in rest:
                raise NetworkParseError(lineno, "expected 'chain <name>: <id> ...'")
            name, _, members = rest.partition(":")
            name = name.strip()
            if not name:
                raise NetworkParseError(lineno, "chain name is empty")
            if name in chains:
                raise NetworkParseError(lineno, f"duplicate chain {name!r}")
            try:
                chains[name] = [int(tok) for tok in members.split()]
            except ValueError:
                raise NetworkParseError(lineno, f"chain members must be integers: {members.strip()!r}") from None
            chain_lines[name] = lineno
        elif keyword == "influence":
            parts = line[len("influence") :].split("->")
            try:
                source, target = (int(p.strip()) for p in parts)
            except ValueError:
                raise NetworkParseError(lineno, "expected 'influence <src> -> <dst>'") from None
            influences.append((source, target))
            edge_lines.setdefault((source, target), lineno)
        else:
            raise NetworkParseError(lineno, f"unknown record {keyword!r}")

    net = InfluenceNetwork.from_parts(mode or GENERAL, chains, influences)
    net.finalize()
    return ParsedNetwork(net=net, edge_lines=edge_lines, chain_lines=chain_lines)


def loads(text: str) -> InfluenceNetwork:
    return parse(text).net


def dumps(net: InfluenceNetwork) -> str:
    """Canonical text form.  Fully isolated events have no representation."""
    chain_edges = set()
    for name in net.chain_names():
        members = net.chain(name).events
        chain_edges.update(zip(members, members[1:]))
    covered = set()
    lines = [f"mode {net.mode}"]
    for name in net.chain_names():
        members = net.chain(name).events
        covered.update(members)
        lines.append(f"chain {name}: " + " ".join(str(e) for e in members))
    for source, target in sorted(net.edges() - chain_edges):
        covered.update((source, target))
        lines.append(f"influence {source} -> {target}")
    isolated = [e for e in net.event_ids() if e not in covered]
    if isolated:
        raise ValueError(
            f"events {isolated} lie on no chain and touch no edge; "
            "the text format cannot represent them"
        )
    return "\n".join(lines) + "\n"


def load_path(path: str, force: bool = False) -> InfluenceNetwork:
    """Read and validate a network file; violations abort unless forced."""
    with open(path, "r", encoding="utf-8") as handle:
        net = loads(handle.read())
    violations = net.validate()
    if violations and not force:
        raise ViolationsError(violations)
    return net
