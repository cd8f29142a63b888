import itertools
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from adtgames.adterm import (
    And, BasicAction, BasicAssignment, BasicAssignmentProfile, Counter, O, Or, P, labels,
)
from adtgames.game import Leaf, NonLeaf, Outcome

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"

W, L = Outcome.PROPONENT_WINS, Outcome.OPPONENT_WINS


@pytest.fixture
def example1():
    return Counter(P, And(P, (BasicAction("E", P), BasicAction("F", P))),
                   Or(O, (BasicAction("G", O),)))


@pytest.fixture
def fig1():
    return NonLeaf(P, (NonLeaf(O, (Leaf(P, L), Leaf(P, W))), Leaf(O, L)))


def profile(p: dict, o: dict) -> BasicAssignmentProfile:
    return BasicAssignmentProfile(BasicAssignment(P, p), BasicAssignment(O, o))


# -- oracles -----------------------------------------------------------------
# Deliberately independent of the library: the term is compiled to a Python
# boolean expression and evaluated with eval().

def to_expr(t) -> str:
    if isinstance(t, BasicAction):
        return f"env[{(t.owner.value, t.label)!r}]"
    if isinstance(t, Counter):
        return f"({to_expr(t.main)} and not {to_expr(t.counter)})"
    joiner = " or " if isinstance(t, Or) else " and "
    return "(" + joiner.join(to_expr(c) for c in t.children) + ")"


def oracle_sat(t, p: dict, o: dict) -> bool:
    env = {("p", k): v for k, v in p.items()} | {("o", k): v for k, v in o.items()}
    return eval(to_expr(t), {"env": env})


def assignments(names):
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def oracle_success(t, p: dict, o: dict, s) -> bool:
    value = oracle_sat(t, p, o)
    return value if t.owner is s else not value


def oracle_wins_against_all(t, mine: dict, s) -> bool:
    for theirs in assignments(labels(t, -s)):
        p, o = (mine, theirs) if s is P else (theirs, mine)
        if not oracle_success(t, p, o, s):
            return False
    return True


def oracle_satisfiable(t, s) -> bool:
    return any(oracle_wins_against_all(t, a, s) for a in assignments(labels(t, s)))


def oracle_out(g) -> Outcome:
    """Minimax over the tree, written from scratch."""
    if isinstance(g, Leaf):
        return g.outcome
    vals = [oracle_out(c) for c in g.children]
    good = W if g.mover is P else L
    return good if good in vals else vals[0]


# -- hypothesis strategies ---------------------------------------------------

LABELS = {P: ["A", "B", "C", "D"], O: ["X", "Y", "Z"]}


def terms(owner=None, max_leaves=10, labels_pool=LABELS):
    """Well-typed terms; labels may repeat, so nonlinear terms are included."""
    def of(s, depth):
        leaf = st.sampled_from(labels_pool[s]).map(lambda l: BasicAction(l, s))
        if depth == 0:
            return leaf
        sub = of(s, depth - 1)
        return st.one_of(
            leaf,
            st.lists(sub, min_size=1, max_size=3).map(lambda cs: Or(s, tuple(cs))),
            st.lists(sub, min_size=1, max_size=3).map(lambda cs: And(s, tuple(cs))),
            st.tuples(sub, of(-s, depth - 1)).map(lambda mc: Counter(s, mc[0], mc[1])),
        )
    if owner is None:
        return st.sampled_from([P, O]).flatmap(lambda s: of(s, 3))
    return of(owner, 3)


def games(max_depth=4):
    def of(mover, depth):
        leaf = st.sampled_from([W, L]).map(lambda r: Leaf(mover, r))
        if depth <= 1:
            return leaf
        node = st.lists(of(-mover, depth - 1), min_size=1, max_size=3).map(
            lambda cs: NonLeaf(mover, tuple(cs)))
        return st.one_of(leaf, node)
    return st.sampled_from([P, O]).flatmap(lambda s: of(s, max_depth))


def profiles_for(t):
    return st.tuples(
        st.fixed_dictionaries({l: st.booleans() for l in labels(t, P)}),
        st.fixed_dictionaries({l: st.booleans() for l in labels(t, O)}),
    )


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    def record(number: int, text: str, ok: bool, elapsed: float | None = None):
        timing = f" [{elapsed:.2f}s]" if elapsed is not None else ""
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}{timing}"
        _ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
