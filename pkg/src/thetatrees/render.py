"""Static drawings: DOT and SVG for trees, SVG and text for labelled paths.

Trees are drawn with the children of each vertex placed right to left in
exploration order, so the first explored vertex is the rightmost one and
vertices are tagged ``v1..vn`` in visit order.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .dyck import LabelledDyckPath2
from .trees import ROOT, TieredRootedTree, exploration_sequence

_UNIT = 60
_MARGIN = 40


def _visit_index(tree):
    return {v: i for i, v in enumerate(exploration_sequence(tree), start=1)}


def _children_in_visit_order(tree, v, index):
    return sorted(tree.children(v), key=index.get)


def tree_to_dot(tree: TieredRootedTree) -> str:
    index = _visit_index(tree)
    lines = ["digraph tiered_tree {", "  ordering=out;", "  node [shape=circle];",
             '  r [label="root", style=filled, fillcolor=black, fontcolor=white];']
    for v in sorted(index, key=index.get):
        w, lv = tree.pair(v)
        lines.append(f'  v{index[v]} [label="({w}, {lv})", xlabel="v{index[v]}"];')
    for v in [ROOT] + sorted(index, key=index.get):
        src = "r" if v == ROOT else f"v{index[v]}"
        # DOT lays out children left to right, the drawing wants visit order right to left
        for c in reversed(_children_in_visit_order(tree, v, index)):
            lines.append(f"  {src} -> v{index[c]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tree_layout(tree):
    index = _visit_index(tree)
    xs, ys = {}, {}
    slot = [0]

    def place(v, depth):
        ys[v] = depth
        kids = _children_in_visit_order(tree, v, index)
        if not kids:
            xs[v] = slot[0]
            slot[0] -= 1
            return
        for c in kids:
            place(c, depth + 1)
        xs[v] = (xs[kids[0]] + xs[kids[-1]]) / 2

    place(ROOT, 0)
    shift = -min(xs.values())
    return index, {v: x + shift for v, x in xs.items()}, ys


def tree_to_svg(tree: TieredRootedTree) -> str:
    index, xs, ys = _tree_layout(tree)
    width = (max(xs.values()) + 1) * _UNIT + 2 * _MARGIN
    height = (max(ys.values()) + 1) * _UNIT + 2 * _MARGIN

    def pos(v):
        # root drawn at the bottom
        return (_MARGIN + xs[v] * _UNIT + _UNIT / 2,
                height - _MARGIN - ys[v] * _UNIT - _UNIT / 2)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
           f'font-family="sans-serif" font-size="12">']
    for v in range(1, tree.n + 1):
        (x1, y1), (x2, y2) = pos(v), pos(tree.p(v))
        out.append(f'<line x1="{x1:g}" y1="{y1:g}" x2="{x2:g}" y2="{y2:g}" stroke="black"/>')
    for v in [ROOT] + list(range(1, tree.n + 1)):
        x, y = pos(v)
        fill = "black" if v == ROOT else "#e0e0e0"
        out.append(f'<circle cx="{x:g}" cy="{y:g}" r="18" fill="{fill}" stroke="black"/>')
        if v != ROOT:
            w, lv = tree.pair(v)
            out.append(f'<text x="{x:g}" y="{y + 4:g}" text-anchor="middle">{w},{lv}</text>')
            out.append(f'<text x="{x:g}" y="{y - 22:g}" text-anchor="middle" '
                       f'font-size="10">v{index[v]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def path_to_svg(path: LabelledDyckPath2) -> str:
    n = path.n
    side = max(n, 1) * _UNIT
    size = side + 2 * _MARGIN

    def pt(x, y):
        return _MARGIN + x * _UNIT, _MARGIN + side - y * _UNIT

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'font-family="sans-serif" font-size="14">']
    for i in range(n + 1):
        (x1, y1), (x2, y2) = pt(i, 0), pt(i, n)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbbbbb"/>')
        (x1, y1), (x2, y2) = pt(0, i), pt(n, i)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbbbbb"/>')
    (x1, y1), (x2, y2) = pt(0, 0), pt(n, n)
    out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#bbbbbb"/>')
    points, x, y = [pt(0, 0)], 0, 0
    for s in path.steps:
        if s == "N":
            y += 1
        else:
            x += 1
        points.append(pt(x, y))
    coords = " ".join(f"{a},{b}" for a, b in points)
    out.append(f'<polyline points="{coords}" fill="none" stroke="#3b6fd6" stroke-width="4"/>')
    for row, col in enumerate(path.north_columns()):
        cx, cy = pt(col + 0.5, row + 0.5)
        label = escape(f"{path.pix[row]}{path.piy[row]}" if max(path.pix + path.piy) < 10
                       else f"{path.pix[row]},{path.piy[row]}")
        out.append(f'<text x="{cx:g}" y="{cy + 5:g}" text-anchor="middle">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def path_to_text(path: LabelledDyckPath2) -> str:
    """Grid picture, top row first; north-step cells show ``pix,piy``."""
    n = path.n
    cols = path.north_columns()
    width = max([len(f"{a},{b}") for a, b in zip(path.pix, path.piy)] + [1])
    rows = []
    for y in range(n - 1, -1, -1):
        cells = []
        for x in range(n):
            if x == cols[y]:
                cells.append(f"{path.pix[y]},{path.piy[y]}".rjust(width))
            elif x == y:
                cells.append("\\".rjust(width))
            else:
                cells.append(".".rjust(width))
        rows.append(" ".join(cells))
    return "\n".join(rows) + "\n"


def tree_to_text(tree: TieredRootedTree) -> str:
    index = _visit_index(tree)
    lines = ["root"]

    def walk(v, depth):
        for c in _children_in_visit_order(tree, v, index):
            w, lv = tree.pair(c)
            lines.append("  " * depth + f"v{index[c]} ({w}, {lv})")
            walk(c, depth + 1)

    walk(ROOT, 1)
    return "\n".join(lines) + "\n"
