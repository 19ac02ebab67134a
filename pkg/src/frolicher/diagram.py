"""Drawings of a decomposition: one dot per component, arrows for isomorphisms."""

from collections import defaultdict


PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "gray")


def _layout(summands):
    """Component slots per cell: list of (summand index, component index)."""
    slots = defaultdict(list)
    for s_idx, shape in enumerate(summands):
        for c_idx, cell in enumerate(shape.cells()):
            slots[tuple(cell)].append((s_idx, c_idx))
    return slots


def to_dot(dec, scale=3.0):
    """Graphviz document with nodes pinned inside their (p, q) cell."""
    summands = dec.summands
    slots = _layout(summands)
    pos = {}
    for (p, q), members in slots.items():
        k = len(members)
        side = max(1, int(k ** 0.5 + 0.999))
        for n, key in enumerate(members):
            dx = (n % side + 0.5) / side
            dy = (n // side + 0.5) / side
            pos[key] = (p * scale + dx * scale * 0.8, q * scale + dy * scale * 0.8)
    lines = ["digraph decomposition {", "  graph [splines=true];", "  node [shape=point, width=0.08];"]
    p0, p1, q0, q1 = dec.bounds or dec.model().bounds
    for p in range(p0, p1 + 1):
        lines.append(f'  "p{p}" [shape=plaintext, label="{p}", pos="{p * scale + scale * 0.4:.3f},{(q0 - 0.4) * scale:.3f}!"];')
    for q in range(q0, q1 + 1):
        lines.append(f'  "q{q}" [shape=plaintext, label="{q}", pos="{(p0 - 0.4) * scale:.3f},{q * scale + scale * 0.4:.3f}!"];')
    for s_idx, shape in enumerate(summands):
        color = PALETTE[(shape.anchor.p + shape.anchor.q) % len(PALETTE)]
        for c_idx, cell in enumerate(shape.cells()):
            x, y = pos[(s_idx, c_idx)]
            lines.append(f'  "s{s_idx}_{c_idx}" [color={color}, pos="{x:.3f},{y:.3f}!", '
                         f'tooltip="{shape} ({cell.p},{cell.q})"];')
        for a, b, direction, _ in shape.arrows():
            lines.append(f'  "s{s_idx}_{a}" -> "s{s_idx}_{b}" [color={color}, label="{direction}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(dec):
    """Grid of cells listing summand numbers, highest q on top, then a legend."""
    summands = dec.summands
    slots = _layout(summands)
    p0, p1, q0, q1 = dec.bounds or dec.model().bounds
    cells = {pq: " ".join(str(s + 1) for s, _ in members) for pq, members in slots.items()}
    width = max([len(v) for v in cells.values()] + [3])
    lines = []
    rule = "    +" + "+".join("-" * (width + 2) for _ in range(p0, p1 + 1)) + "+"
    for q in range(q1, q0 - 1, -1):
        lines.append(rule)
        row = "|".join(f" {cells.get((p, q), '.'):<{width}} " for p in range(p0, p1 + 1))
        lines.append(f"{q:>3} |{row}|")
    lines.append(rule)
    lines.append("     " + " ".join(f"{p:^{width + 2}}" for p in range(p0, p1 + 1)))
    lines.append("")
    for i, shape in enumerate(summands, 1):
        cells_ = [f"({c.p},{c.q})" for c in shape.cells()]
        if shape.kind == "square":
            desc = " ".join(cells_)
        else:
            desc = cells_[0] + "".join(f" {c} {cell}" for c, cell in zip(shape.arrow_word, cells_[1:]))
        lines.append(f"{i:>3}. {shape}: {desc}")
    return "\n".join(lines) + "\n"
