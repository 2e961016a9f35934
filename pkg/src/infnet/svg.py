"""SVG emitters: Hasse diagrams of networks and zig-zag spacetime paths.

Pure string generation, no plotting dependency.  Hasse diagrams draw each
chain as a thick vertical polyline with influence running upward; reduced
cross-chain influences become arrows.  Path pictures put time upward and
position across.
"""

from __future__ import annotations

from .freeparticle import SpacetimePath
from .network import InfluenceNetwork

_X_SPACING = 120
_Y_SPACING = 60
_MARGIN = 50

_HEADER = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
    'viewBox="0 0 {w} {h}">'
)
_ARROW_DEFS = (
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
    "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
    "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#d06000\"/></marker></defs>"
)


def _event_depths(net: InfluenceNetwork) -> dict[int, int]:
    """Longest-path depth of every event; sources sit at depth 0."""
    order: list[int] = []
    pending = {e: len(net.predecessors(e)) for e in net.event_ids()}
    ready = sorted(e for e, n in pending.items() if n == 0)
    while ready:
        event = ready.pop(0)
        order.append(event)
        for succ in sorted(net.successors(event)):
            pending[succ] -= 1
            if pending[succ] == 0:
                ready.append(succ)
        ready.sort()
    depth = {e: 0 for e in net.event_ids()}
    for event in order:
        for succ in net.successors(event):
            depth[succ] = max(depth[succ], depth[event] + 1)
    return depth


def hasse_svg(net: InfluenceNetwork) -> str:
    """Hasse diagram of the transitive reduction, influence running upward."""
    events = net.event_ids()
    if not events:
        return _HEADER.format(w=2 * _MARGIN, h=2 * _MARGIN) + "</svg>\n"
    depth = _event_depths(net)
    max_depth = max(depth.values())

    columns: dict[int, int] = {}
    names = net.chain_names()
    for col, name in enumerate(names):
        for event in net.chain(name).events:
            columns.setdefault(event, col)
    next_col = len(names)
    for event in events:
        if event not in columns:
            columns[event] = next_col
            next_col += 1

    def pos(event: int) -> tuple[int, int]:
        x = _MARGIN + columns[event] * _X_SPACING
        y = _MARGIN + (max_depth - depth[event]) * _Y_SPACING
        return x, y

    reduced = net.transitive_reduction()
    chain_edges = set()
    for name in names:
        members = net.chain(name).events
        chain_edges.update(zip(members, members[1:]))

    parts = [_HEADER.format(w=2 * _MARGIN + max(next_col - 1, 0) * _X_SPACING,
                            h=2 * _MARGIN + max_depth * _Y_SPACING)]
    parts.append(_ARROW_DEFS)
    for name in names:
        members = net.chain(name).events
        if not members:
            continue
        points = " ".join("{},{}".format(*pos(e)) for e in members)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="#202020" stroke-width="4"/>'
        )
        x, y = pos(members[0])
        parts.append(f'<text x="{x - 6}" y="{y + 28}" font-size="16">{name}</text>')
    for source, target in sorted(reduced - chain_edges):
        x1, y1 = pos(source)
        x2, y2 = pos(target)
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#d06000" '
            'stroke-width="2" marker-end="url(#arrow)"/>'
        )
    for event in events:
        x, y = pos(event)
        parts.append(f'<circle cx="{x}" cy="{y}" r="6" fill="#ffffff" stroke="#202020"/>')
        parts.append(f'<text x="{x + 9}" y="{y + 4}" font-size="12">{event}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def path_svg(path: SpacetimePath, scale: int = 60) -> str:
    """Zig-zag spacetime picture of a path, time upward."""
    points = path.points()
    xs = [float(x) for x, _ in points]
    ts = [float(t) for _, t in points]
    x_min, x_max = min(xs), max(xs)
    t_min, t_max = min(ts), max(ts)
    width = int((x_max - x_min) * scale) + 2 * _MARGIN
    height = int((t_max - t_min) * scale) + 2 * _MARGIN

    def pos(x: float, t: float) -> tuple[float, float]:
        return (_MARGIN + (x - x_min) * scale, height - _MARGIN - (t - t_min) * scale)

    parts = [_HEADER.format(w=width, h=height)]
    svg_points = " ".join("{:g},{:g}".format(*pos(x, t)) for x, t in zip(xs, ts))
    parts.append(
        f'<polyline points="{svg_points}" fill="none" stroke="#1040c0" stroke-width="3"/>'
    )
    for x, t in zip(xs, ts):
        px, py = pos(x, t)
        parts.append(f'<circle cx="{px:g}" cy="{py:g}" r="4" fill="#1040c0"/>')
    sx, sy = pos(xs[0], ts[0])
    parts.append(f'<text x="{sx + 8:g}" y="{sy + 4:g}" font-size="12">start</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
