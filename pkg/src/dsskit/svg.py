"""Plain-text SVG renderings: Stern-Brocot evolution traces and maximal segments."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .curve import DigitalCurve
from .maximal import MaximalSegment
from .stern_brocot import L, SbPath, mediant

_HEAD = '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2")


def _children(left, node, right):
    return ((left, mediant(left, node), node), (node, mediant(node, right), right))


def sbt_svg(paths: list[SbPath], *, dx: int = 46, dy: int = 64) -> str:
    """Nodes of the visited paths and their children, laid out by (depth, in-order rank).

    Milestone nodes (the ends of the given paths) are drawn filled, the visited
    edges thick; every edge is labelled with its move.
    """
    root = ((0, 1), (1, 1), (1, 0))
    nodes = {(1, 1): 0}
    edges = {}  # (parent, child) -> move
    visited_nodes = {(1, 1)}
    visited_edges = set()
    milestones = set()
    for path in paths:
        left, node, right = root
        for m in path.moves():
            lc, rc = _children(left, node, right)
            for move, (l2, n2, r2) in ((L, lc), ("R", rc)):
                nodes.setdefault(n2, nodes[node] + 1)
                edges[(node, n2)] = move
            left, nxt, right = lc if m == L else rc
            visited_edges.add((node, nxt))
            visited_nodes.add(nxt)
            node = nxt
        milestones.add(node)
    # in-order rank: the tree is a binary search tree on the fraction values
    order = sorted(nodes, key=lambda f: Fraction(f[0], f[1]))
    x = {f: 30 + dx * k for k, f in enumerate(order)}
    y = {f: 30 + dy * d for f, d in nodes.items()}
    w = 60 + dx * (len(order) - 1)
    h = 60 + dy * max(nodes.values())
    out = [_HEAD.format(w=w, h=h)]
    for (p, c), move in sorted(edges.items()):
        on = (p, c) in visited_edges
        out.append(f'<line x1="{x[p]}" y1="{y[p]}" x2="{x[c]}" y2="{y[c]}" '
                   f'stroke="{"#d62728" if on else "#999"}" stroke-width="{3 if on else 1}"/>\n')
        mx, my = (x[p] + x[c]) / 2, (y[p] + y[c]) / 2
        out.append(f'<text x="{mx:g}" y="{my:g}" font-size="10" fill="#555">{move}</text>\n')
    for f in order:
        fill = "#d62728" if f in milestones else ("#fbd" if f in visited_nodes else "#fff")
        out.append(f'<circle cx="{x[f]}" cy="{y[f]}" r="14" fill="{fill}" stroke="#333"/>\n')
        out.append(f'<text x="{x[f]}" y="{y[f] + 4}" font-size="10" text-anchor="middle">'
                   f'{f[0]}/{f[1]}</text>\n')
    out.append("</svg>\n")
    return "".join(out)


def maxseg_svg(curve: DigitalCurve, segments: list[MaximalSegment], *, scale: int = 12) -> str:
    """The curve as a polyline with each maximal segment's end points joined by a chord."""
    pts = curve.points()
    if curve.closed:
        pts = pts + [pts[0]]
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    x0, y1 = min(xs) - 1, max(ys) + 1
    w = (max(xs) - x0 + 1) * scale
    h = (y1 - min(ys) + 1) * scale

    def sx(p):
        return (p.x - x0) * scale, (y1 - p.y) * scale

    out = [_HEAD.format(w=w, h=h)]
    poly = " ".join(f"{a},{b}" for a, b in map(sx, pts))
    out.append(f'<polyline points="{poly}" fill="none" stroke="#333" stroke-width="1"/>\n')
    for k, m in enumerate(segments):
        (ax, ay), (bx, by) = sx(curve.point(m.i)), sx(curve.point(m.j))
        c = _PALETTE[k % len(_PALETTE)]
        title = escape(f"[{m.i},{m.j}] ({m.state.a},{m.state.b},{m.state.mu})")
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{c}" '
                   f'stroke-width="2" opacity="0.7"><title>{title}</title></line>\n')
    out.append("</svg>\n")
    return "".join(out)
