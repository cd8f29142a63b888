"""Translations between games and attack-defense terms.

``game_to_adterm`` / ``strategy_to_assignment`` go from games to terms,
``adterm_to_game`` / ``assignment_to_strategy`` go back.  Each structural
translation also returns a :class:`CorrespondenceMap` from source node
paths to the paths of their images.
"""
from __future__ import annotations

from dataclasses import dataclass

from .adterm import (
    ADTerm, And, BasicAction, BasicAssignment, Counter, MissingLabelError, NodePath,
    Or, labels, successful_under_assignment, validate,
)
from .game import Game, Leaf, NonLeaf, Outcome, Strategy, UnboundStrategyError, validate_game


@dataclass(frozen=True)
class FreshNameScheme:
    """Deterministic fresh labels ``u.<path>.<k>`` and ``v.<path>``.

    ``<path>`` is ``r`` followed by ``_i`` per step, so leaf labels
    (one dot) never collide with choice labels (two dots).  Games carry no
    labels, so the emitted names cannot clash with the source.
    """
    u: str = "u"
    v: str = "v"

    def label(self, path: NodePath, role: str, index: int | None = None) -> str:
        if role not in ("u", "v"):
            raise ValueError(f"unknown role {role!r}")
        head = self.u if role == "u" else self.v
        token = "r" + "".join(f"_{i}" for i in path)
        return f"{head}.{token}" if index is None else f"{head}.{token}.{index}"


@dataclass(frozen=True)
class CorrespondenceMap:
    pairs: tuple[tuple[NodePath, NodePath], ...]

    def __post_init__(self):
        sources = [s for s, _ in self.pairs]
        targets = [t for _, t in self.pairs]
        if len(set(sources)) != len(sources):
            raise ValueError("correspondence map assigns a source twice")
        if len(set(targets)) != len(targets):
            raise ValueError("correspondence map is not injective")

    def as_dict(self) -> dict[NodePath, NodePath]:
        return dict(self.pairs)

    def target(self, source: NodePath) -> NodePath:
        return self.as_dict()[source]

    def __len__(self) -> int:
        return len(self.pairs)


# -- games to terms ----------------------------------------------------------

def _leaf_term(leaf: Leaf, path: NodePath, names: FreshNameScheme) -> ADTerm:
    s = leaf.mover
    v = names.label(path, "v")
    if leaf.outcome is Outcome.won_by(s):
        # winning leaf of its mover: a bare basic action of the mover
        return BasicAction(v, s)
    # losing leaf: the mover's action is countered by the winner's action
    return Counter(s, BasicAction(names.label(path, "u"), s), BasicAction(v, -s))


def game_to_adterm(g: Game, names: FreshNameScheme = FreshNameScheme()
                   ) -> tuple[ADTerm, CorrespondenceMap]:
    validate_game(g).raise_if_invalid()
    pairs: list[tuple[NodePath, NodePath]] = []

    def go(node: Game, gp: NodePath, tp: NodePath) -> ADTerm:
        pairs.append((gp, tp))
        if isinstance(node, Leaf):
            return _leaf_term(node, gp, names)
        s = node.mover
        branches = [
            Counter(s, BasicAction(names.label(gp, "u", k + 1), s),
                    go(child, gp + (k,), tp + (k, 1)))
            for k, child in enumerate(node.children)
        ]
        return Or(s, branches)

    t = go(g, (), ())
    return t, CorrespondenceMap(tuple(pairs))


def strategy_to_assignment(sigma_s: Strategy, g: Game,
                           names: FreshNameScheme = FreshNameScheme()) -> BasicAssignment:
    """Assignment on ``game_to_adterm(g)`` selecting exactly the strategy's branches."""
    s = sigma_s.owner
    values: dict[str, bool] = {}

    def go(node: Game, path: NodePath) -> None:
        if isinstance(node, Leaf):
            if node.outcome is Outcome.won_by(node.mover):
                if node.mover is s:
                    values[names.label(path, "v")] = True
            else:
                # c^m(u^m, v^-m): u belongs to the mover, v to the winner
                owner_u, owner_v = node.mover, -node.mover
                if owner_u is s:
                    values[names.label(path, "u")] = True
                if owner_v is s:
                    values[names.label(path, "v")] = True
            return
        if node.mover is s:
            if path not in sigma_s.choices:
                raise UnboundStrategyError(path, s)
            chosen = sigma_s.choices[path]
            if not 0 <= chosen < len(node.children):
                raise UnboundStrategyError(path, s, f"choice {chosen} out of range")
            for k in range(len(node.children)):
                values[names.label(path, "u", k + 1)] = k == chosen
        for k, child in enumerate(node.children):
            go(child, path + (k,))

    go(g, ())
    return BasicAssignment(s, values)


# -- terms to games ----------------------------------------------------------

def adterm_to_game(t: ADTerm) -> tuple[Game, CorrespondenceMap]:
    validate(t).raise_if_invalid()
    pairs: list[tuple[NodePath, NodePath]] = []

    def go(node: ADTerm, tp: NodePath, gp: NodePath) -> Game:
        pairs.append((tp, gp))
        s = node.owner
        if isinstance(node, BasicAction):
            lose, win = Outcome.won_by(-s), Outcome.won_by(s)
            return NonLeaf(-s, [NonLeaf(s, [Leaf(-s, lose), Leaf(-s, win)])])
        if isinstance(node, Or):
            inner = [go(c, tp + (i,), gp + (0, i)) for i, c in enumerate(node.children)]
            return NonLeaf(-s, [NonLeaf(s, inner)])
        if isinstance(node, And):
            return NonLeaf(-s, [NonLeaf(s, [go(c, tp + (i,), gp + (i, 0))])
                                for i, c in enumerate(node.children)])
        main = go(node.main, tp + (0,), gp + (0, 0))
        counter = go(node.counter, tp + (1,), gp + (1,))
        return NonLeaf(-s, [NonLeaf(s, [main]), counter])

    g = go(t, (), ())
    return g, CorrespondenceMap(tuple(pairs))


def assignment_to_strategy(beta_s: BasicAssignment, t: ADTerm) -> Strategy:
    """Strategy on ``adterm_to_game(t)`` playing out ``beta_s``.

    At a choice the owner picks the first subterm it is successful in under
    ``beta_s`` (first branch if none); at a counter of the other player it
    enters the countermeasure exactly when that wins.  Single-option dummy
    moves are forced.
    """
    s = beta_s.owner
    for lab in labels(t, s):
        if lab not in beta_s.values:
            raise MissingLabelError(lab, s)
    memo: dict[NodePath, bool] = {}

    def wins(node: ADTerm, tp: NodePath) -> bool:
        if tp not in memo:
            memo[tp] = successful_under_assignment(node, beta_s, s)
        return memo[tp]

    def first_winning(kids, tp: NodePath) -> int:
        for i, c in enumerate(kids):
            if wins(c, tp + (i,)):
                return i
        return 0

    choices: dict[NodePath, int] = {}

    def go(node: ADTerm, tp: NodePath, gp: NodePath) -> None:
        mine = node.owner is s
        if isinstance(node, BasicAction):
            if mine:
                choices[gp + (0,)] = 1 if beta_s.values[node.label] else 0
            else:
                choices[gp] = 0
        elif isinstance(node, Or):
            if mine:
                choices[gp + (0,)] = first_winning(node.children, tp)
            else:
                choices[gp] = 0
            for i, c in enumerate(node.children):
                go(c, tp + (i,), gp + (0, i))
        elif isinstance(node, And):
            if mine:
                for i in range(len(node.children)):
                    choices[gp + (i,)] = 0
            else:
                choices[gp] = first_winning(node.children, tp)
            for i, c in enumerate(node.children):
                go(c, tp + (i,), gp + (i, 0))
        else:
            if mine:
                choices[gp + (0,)] = 0
            else:
                # the countermeasure is decided before the countered term
                choices[gp] = 1 if wins(node.counter, tp + (1,)) else 0
            go(node.main, tp + (0,), gp + (0, 0))
            go(node.counter, tp + (1,), gp + (1,))

    go(t, (), ())
    return Strategy(s, choices)
