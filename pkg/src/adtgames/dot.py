"""Graphviz DOT export.

Terms: proponent nodes are ellipses, opponent nodes boxes, and the edge to
a countermeasure is dashed.  Games: edges leaving proponent choices are
dashed, opponent choices solid.
"""
from __future__ import annotations

from .adterm import ADTerm, And, BasicAction, Counter, Or, P
from .game import Game, Leaf, NonLeaf


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _term_label(t: ADTerm) -> str:
    if isinstance(t, BasicAction):
        return t.label
    if isinstance(t, Or):
        return f"or_{t.owner.symbol}"
    if isinstance(t, And):
        return f"and_{t.owner.symbol}"
    return f"c_{t.owner.symbol}"


def adterm_to_dot(t: ADTerm, name: str = "adterm") -> str:
    lines = [f"digraph {name} {{", "  node [fontname=Helvetica];"]
    counter = 0

    def go(node: ADTerm) -> str:
        nonlocal counter
        ident = f"n{counter}"
        counter += 1
        shape = "ellipse" if node.owner is P else "box"
        lines.append(f"  {ident} [label={_quote(_term_label(node))}, shape={shape}];")
        for i, child in enumerate(node.children):
            cid = go(child)
            style = " [style=dashed]" if isinstance(node, Counter) and i == 1 else ""
            lines.append(f"  {ident} -> {cid}{style};")
        return ident

    go(t)
    lines.append("}")
    return "\n".join(lines) + "\n"


def game_to_dot(g: Game, name: str = "game") -> str:
    lines = [f"digraph {name} {{", "  node [fontname=Helvetica];"]
    counter = 0

    def go(node: Game) -> str:
        nonlocal counter
        ident = f"n{counter}"
        counter += 1
        if isinstance(node, Leaf):
            lines.append(f"  {ident} [label={_quote(str(node.outcome))}, shape=plaintext];")
            return ident
        lines.append(f"  {ident} [label={_quote(node.mover.symbol)}, shape=circle];")
        for i, child in enumerate(node.children):
            cid = go(child)
            style = "dashed" if node.mover is P else "solid"
            lines.append(f"  {ident} -> {cid} [label={i}, style={style}];")
        return ident

    go(g)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(x) -> str:
    if isinstance(x, (Leaf, NonLeaf)):
        return game_to_dot(x)
    return adterm_to_dot(x)
