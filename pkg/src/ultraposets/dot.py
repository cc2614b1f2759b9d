"""Hasse diagrams as Graphviz DOT text (cover relations only)."""

from __future__ import annotations

from typing import Sequence

from .order import Poset


def to_dot(P: Poset, name: str = "hasse", annotations: Sequence[str] | None = None) -> str:
    """Nodes are ``e0 .. e(n-1)``; edges point from each element to its upper covers."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(P.n):
        if annotations is None:
            lines.append(f"  e{i};")
        else:
            label = annotations[i].replace('"', '\\"')
            lines.append(f'  e{i} [label="e{i}\\n{label}"];')
    for a, b in P.covers():
        lines.append(f"  e{a} -> e{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
