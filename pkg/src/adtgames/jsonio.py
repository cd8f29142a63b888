"""JSON encoding that mirrors the data types field for field.

Every encoded object carries a ``kind`` tag, so :func:`from_json` needs no
hint about what it is reading.
"""
from __future__ import annotations

import json
from typing import Any

from .adterm import (
    And, BasicAction, BasicAssignment, BasicAssignmentProfile, Counter, Or, Player,
)
from .dsl import format_path, parse_path
from .game import Leaf, NonLeaf, Outcome, Strategy, StrategyProfile
from .translate import CorrespondenceMap

_OPS = {"or": Or, "and": And}


def to_dict(x: Any) -> dict:
    if isinstance(x, BasicAction):
        return {"kind": "basic", "label": x.label, "owner": x.owner.symbol}
    if isinstance(x, (Or, And)):
        return {"kind": "or" if isinstance(x, Or) else "and", "owner": x.owner.symbol,
                "children": [to_dict(c) for c in x.children]}
    if isinstance(x, Counter):
        return {"kind": "counter", "owner": x.owner.symbol,
                "main": to_dict(x.main), "counter": to_dict(x.counter)}
    if isinstance(x, Leaf):
        return {"kind": "leaf", "mover": x.mover.symbol, "outcome": list(x.outcome.value)}
    if isinstance(x, NonLeaf):
        return {"kind": "nonleaf", "mover": x.mover.symbol,
                "children": [to_dict(c) for c in x.children]}
    if isinstance(x, BasicAssignment):
        return {"kind": "assignment", "owner": x.owner.symbol, "values": dict(x.values)}
    if isinstance(x, BasicAssignmentProfile):
        return {"kind": "assignment_profile", "proponent": to_dict(x.proponent),
                "opponent": to_dict(x.opponent)}
    if isinstance(x, Strategy):
        return {"kind": "strategy", "owner": x.owner.symbol,
                "choices": {format_path(p): k for p, k in sorted(x.choices.items())}}
    if isinstance(x, StrategyProfile):
        return {"kind": "strategy_profile", "proponent": to_dict(x.proponent),
                "opponent": to_dict(x.opponent)}
    if isinstance(x, CorrespondenceMap):
        return {"kind": "correspondence",
                "pairs": [{"source": format_path(s), "target": format_path(t)}
                          for s, t in x.pairs]}
    raise TypeError(f"cannot encode {type(x).__name__}")


def from_dict(d: dict) -> Any:
    kind = d.get("kind")
    if kind == "basic":
        return BasicAction(d["label"], Player.parse(d["owner"]))
    if kind in _OPS:
        return _OPS[kind](Player.parse(d["owner"]), [from_dict(c) for c in d["children"]])
    if kind == "counter":
        return Counter(Player.parse(d["owner"]), from_dict(d["main"]), from_dict(d["counter"]))
    if kind == "leaf":
        return Leaf(Player.parse(d["mover"]), Outcome(tuple(d["outcome"])))
    if kind == "nonleaf":
        return NonLeaf(Player.parse(d["mover"]), [from_dict(c) for c in d["children"]])
    if kind == "assignment":
        return BasicAssignment(Player.parse(d["owner"]),
                               {str(k): bool(v) for k, v in d["values"].items()})
    if kind == "assignment_profile":
        return BasicAssignmentProfile(from_dict(d["proponent"]), from_dict(d["opponent"]))
    if kind == "strategy":
        return Strategy(Player.parse(d["owner"]),
                        {parse_path(p): int(k) for p, k in d["choices"].items()})
    if kind == "strategy_profile":
        return StrategyProfile(from_dict(d["proponent"]), from_dict(d["opponent"]))
    if kind == "correspondence":
        return CorrespondenceMap(tuple((parse_path(e["source"]), parse_path(e["target"]))
                                       for e in d["pairs"]))
    raise ValueError(f"unknown kind {kind!r}")


def to_json(x: Any, indent: int | None = None) -> str:
    return json.dumps(to_dict(x), indent=indent)


def from_json(text: str) -> Any:
    return from_dict(json.loads(text))
