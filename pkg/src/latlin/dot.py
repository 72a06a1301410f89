"""Hasse diagrams as Graphviz DOT text, ranked by height."""

from __future__ import annotations

from collections import defaultdict

from latlin.lattice import FiniteLattice


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(L: FiniteLattice, name: str = "lattice") -> str:
    """One node per element, one ``lower -> upper`` edge per cover, bottom drawn lowest."""
    layers = defaultdict(list)
    for x in range(L.size):
        layers[L.heights[x]].append(x)
    lines = [f"digraph {_quote(name)} {{", "\trankdir=BT;", "\tnode [shape=ellipse];"]
    for h in sorted(layers):
        members = " ".join(f"{x};" for x in layers[h])
        lines.append(f"\t{{ rank=same; {members} }}  // height {h}")
    for x in range(L.size):
        lines.append(f"\t{x} [label={_quote(L.labels[x])}];")
    for lo, hi in L.covers:
        lines.append(f"\t{lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
