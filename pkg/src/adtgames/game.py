"""Two-player binary zero-sum extensive-form games as terms.

A game is a tree of ``NonLeaf`` move nodes ending in ``Leaf`` nodes that
carry one of the two outcomes.  Movers alternate strictly between parent
and child.  Strategies map the paths of one player's non-leaves to a
0-based child index and must be total on those nodes.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

from .adterm import Issue, NodePath, O, P, Player, ValidationReport


class Outcome(enum.Enum):
    PROPONENT_WINS = (1, 0)
    OPPONENT_WINS = (0, 1)

    @property
    def winner(self) -> Player:
        return P if self is Outcome.PROPONENT_WINS else O

    @classmethod
    def won_by(cls, s: Player) -> Outcome:
        return cls.PROPONENT_WINS if s is P else cls.OPPONENT_WINS

    def __str__(self) -> str:
        return f"({self.value[0]},{self.value[1]})"


def best_for(s: Player, outcomes: Iterable[Outcome]) -> Outcome:
    """Maximum of a nonempty collection under the order of player ``s``."""
    outcomes = list(outcomes)
    if not outcomes:
        raise ValueError("max over an empty set of outcomes")
    win = Outcome.won_by(s)
    return win if win in outcomes else outcomes[0]


@dataclass(frozen=True, slots=True)
class Leaf:
    mover: Player
    outcome: Outcome

    @property
    def children(self) -> tuple[Game, ...]:
        return ()


@dataclass(frozen=True, slots=True)
class NonLeaf:
    mover: Player
    children: tuple[Game, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


Game = Union[Leaf, NonLeaf]


class UnboundStrategyError(LookupError):
    """A strategy has no (valid) choice at a node the evaluation reached."""

    def __init__(self, path: NodePath, owner: Player, detail: str = "no choice"):
        where = "/" + "/".join(map(str, path))
        super().__init__(f"{owner} strategy: {detail} at {where}")
        self.path = path
        self.owner = owner


class StrategyLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Strategy:
    owner: Player
    choices: Mapping[NodePath, int] = field(default_factory=dict)

    def key(self) -> tuple:
        return (self.owner, tuple(sorted(self.choices.items())))


@dataclass(frozen=True)
class StrategyProfile:
    proponent: Strategy
    opponent: Strategy

    def __post_init__(self):
        if self.proponent.owner is not P or self.opponent.owner is not O:
            raise ValueError("profile owners must be (proponent, opponent)")

    def for_player(self, s: Player) -> Strategy:
        return self.proponent if s is P else self.opponent


# -- structure ---------------------------------------------------------------

def iter_nodes(g: Game, path: NodePath = ()) -> Iterator[tuple[NodePath, Game]]:
    stack = [(path, g)]
    while stack:
        p, node = stack.pop()
        yield p, node
        for i in range(len(node.children) - 1, -1, -1):
            stack.append((p + (i,), node.children[i]))


def node_at(g: Game, path: NodePath) -> Game:
    for i in path:
        g = g.children[i]
    return g


def first_player(g: Game) -> Player:
    return g.mover


def decision_nodes(g: Game, s: Player) -> list[tuple[NodePath, int]]:
    """``(path, arity)`` of every non-leaf of ``s``, sorted by path."""
    found = [(p, len(n.children)) for p, n in iter_nodes(g)
             if isinstance(n, NonLeaf) and n.mover is s]
    return sorted(found)


def validate_game(g: Game) -> ValidationReport:
    issues = []
    for path, node in iter_nodes(g):
        if isinstance(node, Leaf):
            if not isinstance(node.outcome, Outcome):
                issues.append(Issue(path, f"invalid outcome {node.outcome!r}"))
            continue
        if not node.children:
            issues.append(Issue(path, "empty arity"))
        for i, child in enumerate(node.children):
            if child.mover is node.mover:
                issues.append(Issue(
                    path + (i,),
                    f"alternation: child of a {node.mover.symbol}-node is also moved by "
                    f"{child.mover.symbol}"))
    return ValidationReport(tuple(issues))


def validate_strategy(sigma: Strategy, g: Game) -> ValidationReport:
    """Totality and range check of ``sigma`` against ``g``."""
    issues = []
    expected = dict(decision_nodes(g, sigma.owner))
    for path, arity in expected.items():
        if path not in sigma.choices:
            issues.append(Issue(path, "no choice"))
        elif not 0 <= sigma.choices[path] < arity:
            issues.append(Issue(path, f"choice {sigma.choices[path]} outside arity {arity}"))
    for path in sigma.choices:
        if path not in expected:
            issues.append(Issue(path, f"not a non-leaf of {sigma.owner}"))
    return ValidationReport(tuple(issues))


def _choose(sigma: Strategy, path: NodePath, node: NonLeaf) -> int:
    try:
        k = sigma.choices[path]
    except KeyError:
        raise UnboundStrategyError(path, sigma.owner) from None
    if not 0 <= k < len(node.children):
        raise UnboundStrategyError(path, sigma.owner, f"choice {k} out of range")
    return k


# -- outcomes ----------------------------------------------------------------

def out_profile(g: Game, sigma: StrategyProfile) -> Outcome:
    """Outcome when both players follow their strategies."""
    path: NodePath = ()
    node = g
    while isinstance(node, NonLeaf):
        k = _choose(sigma.for_player(node.mover), path, node)
        path += (k,)
        node = node.children[k]
    return node.outcome


def out_strategy(g: Game, sigma_s: Strategy, path: NodePath = ()) -> Outcome:
    """Outcome when ``sigma_s.owner`` follows ``sigma_s`` and the other
    player answers optimally."""
    if isinstance(g, Leaf):
        return g.outcome
    if g.mover is sigma_s.owner:
        k = _choose(sigma_s, path, g)
        return out_strategy(g.children[k], sigma_s, path + (k,))
    return best_for(g.mover, [out_strategy(c, sigma_s, path + (i,))
                              for i, c in enumerate(g.children)])


def out(g: Game) -> Outcome:
    """Backward induction: every mover takes its best child value."""
    if isinstance(g, Leaf):
        return g.outcome
    win = Outcome.won_by(g.mover)
    for c in g.children:
        if out(c) is win:
            return win
    return Outcome.won_by(-g.mover)


def count_strategies(g: Game, s: Player) -> int:
    return math.prod(arity for _, arity in decision_nodes(g, s))


def iter_strategies(g: Game, s: Player) -> Iterator[Strategy]:
    nodes = decision_nodes(g, s)
    paths = [p for p, _ in nodes]
    for combo in itertools.product(*(range(a) for _, a in nodes)):
        yield Strategy(s, dict(zip(paths, combo)))


def enumerate_strategies(g: Game, s: Player, limit: int = 2 ** 20) -> list[Strategy]:
    """All total strategies of ``s``, lexicographic in (sorted path, index)."""
    n = count_strategies(g, s)
    if n > limit:
        raise StrategyLimitError(f"{n} strategies for {s} exceed the limit of {limit}")
    return list(iter_strategies(g, s))


def winning_strategy(g: Game, s: Player) -> Strategy | None:
    """A total strategy forcing a win for ``s``, or ``None`` if there is none.

    Every ``s``-node, reachable or not, picks its smallest-index child with
    the best backward-induction value for ``s``.
    """
    choices: dict[NodePath, int] = {}
    win = Outcome.won_by(s)

    def solve(node: Game, path: NodePath) -> Outcome:
        if isinstance(node, Leaf):
            return node.outcome
        values = [solve(c, path + (i,)) for i, c in enumerate(node.children)]
        best = best_for(node.mover, values)
        if node.mover is s:
            choices[path] = values.index(best)
        return best

    if solve(g, ()) is not win:
        return None
    return Strategy(s, choices)
