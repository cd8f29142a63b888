"""Instance generators and exhaustive checks of the game/term equivalences.

Instances are sampled; everything inside an instance (strategies, strategy
profiles, assignments) is enumerated exhaustively.  Instance ``i`` of a run
depends only on ``(seed, i)``, so any counterexample can be replayed.
"""
from __future__ import annotations

import logging
import random
import time
from collections import Counter as Tally
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from . import adterm as adt
from .adterm import (
    ADTerm, And, BasicAction, BasicAssignment, BasicAssignmentProfile, Counter, O, Or, P,
    all_assignments, labels, sat_bits, satisfiable_for, subterm, successful_under_assignment,
    successful_under_profile, validate,
)
from .dsl import format_path, print_adterm, print_game
from .game import (
    Game, Leaf, NonLeaf, Outcome, Strategy, StrategyProfile, best_for, count_strategies,
    decision_nodes, iter_nodes, iter_strategies, node_at, out, out_profile, out_strategy,
    validate_game, validate_strategy, winning_strategy,
)
from .jsonio import to_dict
from .translate import (
    FreshNameScheme, adterm_to_game, assignment_to_strategy, game_to_adterm, strategy_to_assignment,
)

log = logging.getLogger(__name__)

W = Outcome.PROPONENT_WINS
_NAMES = FreshNameScheme()


class BudgetExceededError(RuntimeError):
    def __init__(self, index: int, cost: int, budget: int):
        super().__init__(f"instance {index} needs {cost} evaluations, budget is {budget}")
        self.index = index
        self.cost = cost
        self.budget = budget


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 4
    max_arity: int = 3
    max_basic_actions: int = 8
    instance_count: int = 100
    max_internal_nodes: int | None = 12
    budget: int = 2 ** 20
    leaf_probability: float = 0.3
    label_reuse: float = 0.0

    def __post_init__(self):
        if self.max_depth < 1 or self.max_arity < 1:
            raise ValueError("max_depth and max_arity must be at least 1")
        if self.max_basic_actions < 1 or self.budget < 1 or self.instance_count < 0:
            raise ValueError("max_basic_actions and budget must be positive")
        for p in (self.leaf_probability, self.label_reuse):
            if not 0.0 <= p <= 1.0:
                raise ValueError("probabilities must lie in [0, 1]")


def _rng(kind: str, cfg: GenConfig, index: int) -> random.Random:
    return random.Random(f"{kind}:{cfg.seed}:{index}")


# -- generators --------------------------------------------------------------

_OUTCOMES = (Outcome.PROPONENT_WINS, Outcome.OPPONENT_WINS)


def gen_game(cfg: GenConfig, index: int = 0) -> Game:
    """Random alternating game of depth at most ``cfg.max_depth`` (a leaf has depth 1)."""
    rng = _rng("game", cfg, index)

    def go(depth: int, mover) -> Game:
        if depth >= cfg.max_depth or (depth > 1 and rng.random() < cfg.leaf_probability):
            return Leaf(mover, rng.choice(_OUTCOMES))
        arity = rng.randint(1, cfg.max_arity)
        return NonLeaf(mover, [go(depth + 1, -mover) for _ in range(arity)])

    return go(1, rng.choice((P, O)))


def _term_shape(rng: random.Random, cfg: GenConfig, depth: int, owner) -> ADTerm:
    if depth >= cfg.max_depth or (depth > 1 and rng.random() < cfg.leaf_probability):
        return BasicAction("", owner)
    kind = rng.choice(("or", "and", "counter"))
    if kind == "counter":
        return Counter(owner, _term_shape(rng, cfg, depth + 1, owner),
                       _term_shape(rng, cfg, depth + 1, -owner))
    kids = [_term_shape(rng, cfg, depth + 1, owner) for _ in range(rng.randint(1, cfg.max_arity))]
    return (Or if kind == "or" else And)(owner, kids)


def _name_leaves(t: ADTerm, rng: random.Random, reuse: float) -> ADTerm:
    used = {P: [], O: []}

    def go(node: ADTerm) -> ADTerm:
        if isinstance(node, BasicAction):
            pool = used[node.owner]
            if pool and rng.random() < reuse:
                name = rng.choice(pool)
            else:
                name = f"{node.owner.symbol}{len(pool) + 1}"
                pool.append(name)
            return BasicAction(name, node.owner)
        if isinstance(node, Counter):
            return Counter(node.owner, go(node.main), go(node.counter))
        return type(node)(node.owner, [go(c) for c in node.children])

    return go(t)


def gen_adterm(cfg: GenConfig, index: int = 0, max_tries: int = 10_000) -> ADTerm:
    """Random well-typed term within the depth, size and label bounds.

    Labels are ``p1, p2, ...`` and ``o1, o2, ...``, unique unless
    ``cfg.label_reuse`` is positive.
    """
    rng = _rng("adterm", cfg, index)
    for _ in range(max_tries):
        t = _name_leaves(_term_shape(rng, cfg, 1, rng.choice((P, O))), rng, cfg.label_reuse)
        if cfg.max_internal_nodes is not None and adt.count_internal(t) > cfg.max_internal_nodes:
            continue
        if max(len(labels(t, P)), len(labels(t, O))) > cfg.max_basic_actions:
            continue
        return t
    raise ValueError(f"no term within bounds after {max_tries} tries; loosen the config")


def gen_profile(t: ADTerm, cfg: GenConfig, index: int = 0) -> BasicAssignmentProfile:
    rng = _rng("profile", cfg, index)
    return BasicAssignmentProfile(
        BasicAssignment(P, {lab: rng.random() < 0.5 for lab in labels(t, P)}),
        BasicAssignment(O, {lab: rng.random() < 0.5 for lab in labels(t, O)}),
    )


# -- helpers -----------------------------------------------------------------

def restrict_strategy(sigma: Strategy, root: tuple[int, ...]) -> Strategy:
    """Re-root a strategy at the subgame found at ``root``."""
    n = len(root)
    return Strategy(sigma.owner, {p[n:]: k for p, k in sigma.choices.items() if p[:n] == root})


def _proponent_wins_bits(g: Game, sigma_p: Strategy, choice_bits: dict, full: int,
                         path: tuple[int, ...] = ()) -> int:
    # bit j set iff the proponent wins against the j-th opponent strategy
    if isinstance(g, Leaf):
        return full if g.outcome is W else 0
    if g.mover is P:
        k = sigma_p.choices[path]
        return _proponent_wins_bits(g.children[k], sigma_p, choice_bits, full, path + (k,))
    acc = 0
    for k, child in enumerate(g.children):
        acc |= choice_bits.get((path, k), 0) & _proponent_wins_bits(
            child, sigma_p, choice_bits, full, path + (k,))
    return acc


def non_surjectivity_witness(g: Game) -> BasicAssignment | None:
    """A proponent assignment on ``game_to_adterm(g)`` that no strategy maps to.

    Two sibling choice labels set to true if some proponent node branches,
    otherwise the first label flipped; ``None`` if there are no proponent
    labels at all.
    """
    base = strategy_to_assignment(next(iter_strategies(g, P)), g)
    values = dict(base.values)
    for path, arity in decision_nodes(g, P):
        if arity >= 2:
            values[_NAMES.label(path, "u", 1)] = True
            values[_NAMES.label(path, "u", 2)] = True
            return BasicAssignment(P, values)
    if values:
        first = next(iter(values))
        values[first] = not values[first]
        return BasicAssignment(P, values)
    return None


# -- individual checks -------------------------------------------------------

@dataclass
class _Result:
    failure: dict | None = None
    evaluations: int = 0
    notes: dict = field(default_factory=dict)


def _cost_profiles(g: Game, cfg: GenConfig) -> int:
    return count_strategies(g, P) * count_strategies(g, O)


def _check_partition(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    beta = gen_profile(t, cfg, index)
    wp = successful_under_profile(t, beta, P)
    wo = successful_under_profile(t, beta, O)
    if wp == wo:
        return _Result({"profile": to_dict(beta), "proponent": wp, "opponent": wo}, 2)
    return _Result(None, 2)


def _check_locality(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    beta = gen_profile(t, cfg, index)
    base = adt.sat(t, beta)
    pv, ov = dict(beta.proponent.values), dict(beta.opponent.values)
    # entries the term cannot read: foreign labels and the other player's names
    extra_p = {f"zz.extra.{i}": bool(i % 2) for i in range(3)} | {l: False for l in ov if l not in pv}
    extra_o = {f"zz.extra.{i}": bool(i % 2) for i in range(3)} | {l: False for l in pv if l not in ov}
    for flip in (False, True):
        ep = {k: v ^ flip for k, v in extra_p.items()}
        eo = {k: v ^ flip for k, v in extra_o.items()}
        widened = BasicAssignmentProfile(BasicAssignment(P, pv | ep), BasicAssignment(O, ov | eo))
        if adt.sat(t, widened) != base:
            return _Result({"profile": to_dict(widened), "expected": base}, 3)
    return _Result(None, 3)


def _check_thm2(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, _ = game_to_adterm(g)
    opp = list(iter_strategies(g, O))
    full = (1 << len(opp)) - 1
    o_bits: dict = {(O, lab): 0 for lab in labels(t, O)}
    choice_bits: dict = {}
    for j, so in enumerate(opp):
        bit = 1 << j
        for lab, val in strategy_to_assignment(so, g).values.items():
            if val:
                o_bits[(O, lab)] |= bit
        for path, k in so.choices.items():
            choice_bits[(path, k)] = choice_bits.get((path, k), 0) | bit
    evaluations = 0
    for sp in iter_strategies(g, P):
        bits = dict(o_bits)
        for lab, val in strategy_to_assignment(sp, g).values.items():
            bits[(P, lab)] = full if val else 0
        value = sat_bits(t, bits)
        term_wins = value if t.owner is P else full & ~value
        game_wins = _proponent_wins_bits(g, sp, choice_bits, full)
        evaluations += 2 * len(opp)
        diff = term_wins ^ game_wins
        if diff:
            so = opp[(diff & -diff).bit_length() - 1]
            sigma = StrategyProfile(sp, so)
            return _Result({"profile": to_dict(sigma), "out": str(out_profile(g, sigma)),
                            "term_successful": bool(term_wins & diff)}, evaluations)
    return _Result(None, evaluations)


def _thm3_plan(g: Game, cfg: GenConfig) -> tuple[str, int]:
    """Inner quantifier route for thm3 and its cost.

    Enumerate the opponent's assignments when that fits the budget, else
    decide them with the exact structural rule (translated terms are linear).
    """
    t, _ = game_to_adterm(g)
    n_sp = count_strategies(g, P)
    enumerated = n_sp * (1 << len(labels(t, O)))
    if enumerated <= cfg.budget:
        return "enumerate", enumerated
    return "structural", n_sp * sum(1 for _ in adt.iter_subterms(t))


def _cost_thm3(g: Game, cfg: GenConfig) -> int:
    return _thm3_plan(g, cfg)[1]


def _check_thm3(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, _ = game_to_adterm(g)
    method, cost = _thm3_plan(g, cfg)
    for sp in iter_strategies(g, P):
        beta = strategy_to_assignment(sp, g)
        lhs = out_strategy(g, sp) is W
        rhs = successful_under_assignment(t, beta, P, method=method)
        if lhs != rhs:
            return _Result({"strategy": to_dict(sp), "assignment": to_dict(beta),
                            "out_strategy": str(out_strategy(g, sp)), "successful": rhs,
                            "method": method}, cost)
    return _Result(None, cost, {method: 1})


def _brute_fits(t: ADTerm, cfg: GenConfig) -> bool:
    return 1 << (len(labels(t, P)) + len(labels(t, O))) <= cfg.budget


def _satisfiable_cross_checked(t: ADTerm, cfg: GenConfig) -> tuple[BasicAssignment | None, dict | None, int]:
    """``satisfiable_for(t, P)``, confirmed by brute force when affordable."""
    witness = satisfiable_for(t, P)
    if not _brute_fits(t, cfg):
        return witness, None, 1
    brute = satisfiable_for(t, P, method="enumerate")
    cost = 1 << (len(labels(t, P)) + len(labels(t, O)))
    if brute != witness:
        return witness, {"structural": to_dict(witness) if witness else None,
                         "enumerated": to_dict(brute) if brute else None}, cost
    return witness, None, cost


def _check_cor1(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, _ = game_to_adterm(g)
    witness, mismatch, cost = _satisfiable_cross_checked(t, cfg)
    if mismatch:
        return _Result({"witness_mismatch": mismatch}, cost)
    lhs = out(g) is W
    if lhs != (witness is not None):
        return _Result({"out": str(out(g)),
                        "witness": to_dict(witness) if witness else None}, cost)
    return _Result(None, cost, {"exhaustive": int(_brute_fits(t, cfg))})


def _cost_thm4(t: ADTerm, cfg: GenConfig) -> int:
    return 1 << (len(labels(t, P)) + len(labels(t, O)))


def _thm4_for(t: ADTerm, s, cfg: GenConfig) -> _Result:
    g, _ = adterm_to_game(t)
    win = Outcome.won_by(s)
    width = 1 << len(labels(t, -s))
    evaluations = 0
    for beta in all_assignments(t, s):
        lhs = successful_under_assignment(t, beta, s, method="enumerate")
        sigma = assignment_to_strategy(beta, t)
        report = validate_strategy(sigma, g)
        rhs = out_strategy(g, sigma) is win
        evaluations += width + 1
        if not report.ok or lhs != rhs:
            return _Result({"assignment": to_dict(beta), "strategy": to_dict(sigma),
                            "successful": lhs, "out_strategy": str(out_strategy(g, sigma)),
                            "strategy_issues": [str(i) for i in report.issues]}, evaluations)
    return _Result(None, evaluations)


def _check_thm4(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    return _thm4_for(t, P, cfg)


def _check_thm4_opponent(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    return _thm4_for(t, O, cfg)


def _check_cor2(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    witness, mismatch, cost = _satisfiable_cross_checked(t, cfg)
    if mismatch:
        return _Result({"witness_mismatch": mismatch}, cost)
    g, _ = adterm_to_game(t)
    rhs = out(g) is W
    if (witness is not None) != rhs:
        return _Result({"witness": to_dict(witness) if witness else None,
                        "out": str(out(g))}, cost)
    return _Result(None, cost, {"exhaustive": int(_brute_fits(t, cfg))})


def _check_conjunction_free(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, _ = game_to_adterm(g)
    report = validate(t)
    ands = [format_path(p) for p, n in adt.iter_subterms(t) if isinstance(n, And)]
    if ands or not report.ok:
        return _Result({"and_nodes": ands, "typing": [str(i) for i in report.issues]}, 1)
    return _Result(None, 1)


def _check_round_trip(t: ADTerm, cfg: GenConfig, index: int) -> _Result:
    g, _ = adterm_to_game(t)
    t2, _ = game_to_adterm(g)
    a = satisfiable_for(t, P) is not None
    b = out(g) is W
    c = satisfiable_for(t2, P) is not None
    issues = [str(i) for i in validate_game(g).issues + validate(t2).issues]
    notes = {"syntactic_differences": int(t2 != t)}
    if issues or not a == b == c:
        return _Result({"term": a, "game": b, "round_trip": c, "round_trip_term": print_adterm(t2),
                        "issues": issues}, 3, notes)
    return _Result(None, 3, notes)


def _check_determinacy(g: Game, cfg: GenConfig, index: int) -> _Result:
    wp, wo = winning_strategy(g, P), winning_strategy(g, O)
    value = out(g)
    detail: dict = {}
    if (wp is None) == (wo is None):
        detail["winning_strategies"] = [wp is not None, wo is not None]
    winner = wp if wp is not None else wo
    if winner is not None:
        if winner.owner is not value.winner:
            detail["out"] = str(value)
        if not validate_strategy(winner, g).ok or out_strategy(g, winner) is not value:
            detail["strategy"] = to_dict(winner)
    # out(g) is the proponent's best over all strategies, and dually
    sps, sos = list(iter_strategies(g, P)), list(iter_strategies(g, O))
    if best_for(P, [out_strategy(g, s) for s in sps]) is not value:
        detail["proponent_best"] = True
    if best_for(O, [out_strategy(g, s) for s in sos]) is not value:
        detail["opponent_best"] = True
    return _Result(detail or None, len(sps) + len(sos))


def _check_dominance(g: Game, cfg: GenConfig, index: int) -> _Result:
    opp = list(iter_strategies(g, O))
    evaluations = 0
    for sp in iter_strategies(g, P):
        answers = [out_profile(g, StrategyProfile(sp, so)) for so in opp]
        evaluations += len(opp) + 1
        if out_strategy(g, sp) is not best_for(O, answers):
            return _Result({"strategy": to_dict(sp), "out_strategy": str(out_strategy(g, sp))},
                           evaluations)
    return _Result(None, evaluations)


def _check_non_surjectivity(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, _ = game_to_adterm(g)
    sps = list(iter_strategies(g, P))
    image = {strategy_to_assignment(s, g).key() for s in sps}
    if len(image) != len(sps):
        return _Result({"image_size": len(image), "strategies": len(sps)}, len(sps))
    witness = non_surjectivity_witness(g)
    if witness is None:
        if labels(t, P):
            return _Result({"missing_witness": True}, len(sps))
        return _Result(None, len(sps), {"vacuous": 1})
    if witness.key() in image or set(witness.values) != set(labels(t, P)):
        return _Result({"witness": to_dict(witness)}, len(sps))
    return _Result(None, len(sps), {"witnesses": 1})


def _cost_correspondence(g: Game, cfg: GenConfig) -> int:
    return _cost_profiles(g, cfg) * sum(1 for _ in iter_nodes(g))


def _check_correspondence(g: Game, cfg: GenConfig, index: int) -> _Result:
    t, cmap = game_to_adterm(g)
    pairs = [(src, tgt, node_at(g, src), subterm(t, tgt)) for src, tgt in cmap.pairs]
    opp = [(so, strategy_to_assignment(so, g),
            {src: restrict_strategy(so, src) for src, _ in cmap.pairs})
           for so in iter_strategies(g, O)]
    evaluations = 0
    for sp in iter_strategies(g, P):
        bp = strategy_to_assignment(sp, g)
        sub_p = {src: restrict_strategy(sp, src) for src, _ in cmap.pairs}
        for so, bo, sub_o in opp:
            beta = BasicAssignmentProfile(bp, bo)
            for src, tgt, subgame, subt in pairs:
                lhs = out_profile(subgame, StrategyProfile(sub_p[src], sub_o[src])) is W
                rhs = successful_under_profile(subt, beta, P)
                evaluations += 2
                if lhs != rhs:
                    return _Result({"source": format_path(src), "target": format_path(tgt),
                                    "profile": to_dict(StrategyProfile(sp, so))}, evaluations)
    return _Result(None, evaluations)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    kind: str  # "game" or "adterm"
    run: Callable[..., _Result]
    cost: Callable[..., int] = lambda x, cfg: 1
    description: str = ""


CHECKS: dict[str, CheckSpec] = {c.name: c for c in [
    CheckSpec("partition", "adterm", _check_partition,
              description="exactly one player is successful under any profile"),
    CheckSpec("locality", "adterm", _check_locality,
              description="sat ignores assignment entries for labels outside the term"),
    CheckSpec("thm2", "game", _check_thm2, _cost_profiles,
              description="profile outcome matches success under the translated profile"),
    CheckSpec("thm3", "game", _check_thm3, _cost_thm3,
              description="strategy outcome matches success under the translated assignment"),
    CheckSpec("cor1", "game", _check_cor1,
              description="out(g) = (1,0) iff the translated term is satisfiable for p"),
    CheckSpec("thm4", "adterm", _check_thm4, _cost_thm4,
              description="success under an assignment matches the translated strategy's outcome"),
    CheckSpec("thm4-opponent", "adterm", _check_thm4_opponent, _cost_thm4,
              description="thm4 for the opponent's assignments"),
    CheckSpec("cor2", "adterm", _check_cor2,
              description="term satisfiable for p iff the translated game's outcome is (1,0)"),
    CheckSpec("conjunction-free", "game", _check_conjunction_free,
              description="game translations contain no conjunction and are well typed"),
    CheckSpec("round-trip", "adterm", _check_round_trip,
              description="p-satisfiability survives term -> game -> term"),
    CheckSpec("determinacy", "game", _check_determinacy,
              lambda g, cfg: count_strategies(g, P) + count_strategies(g, O),
              description="exactly one player has a winning strategy, the one out(g) names"),
    CheckSpec("dominance", "game", _check_dominance, _cost_profiles,
              description="strategy outcome is the opponent's best reply over all profiles"),
    CheckSpec("non-surjectivity", "game", _check_non_surjectivity,
              lambda g, cfg: count_strategies(g, P),
              description="strategy translation is injective and misses some assignment"),
    CheckSpec("correspondence", "game", _check_correspondence, _cost_correspondence,
              description="profile equivalence holds at every mapped subgame/subterm pair"),
]}


# -- reports and the driver --------------------------------------------------

@dataclass
class CheckReport:
    check_name: str
    instances_tried: int
    counterexample: dict | None
    elapsed: float
    skipped: list[dict] = field(default_factory=list)
    evaluations: int = 0
    notes: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_dict(self, with_time: bool = True) -> dict:
        d = asdict(self)
        if not with_time:
            d.pop("elapsed")
        return d


def generate(kind: str, cfg: GenConfig, index: int):
    return gen_game(cfg, index) if kind == "game" else gen_adterm(cfg, index)


def _render(kind: str, instance) -> str:
    return print_game(instance) if kind == "game" else print_adterm(instance)


def _evaluate(name: str, cfg: GenConfig, index: int, instance=None) -> dict:
    spec = CHECKS[name]
    if instance is None:
        instance = generate(spec.kind, cfg, index)
    cost = spec.cost(instance, cfg)
    if cost > cfg.budget:
        return {"index": index, "skipped": True, "cost": cost,
                "instance": _render(spec.kind, instance)}
    result = spec.run(instance, cfg, index)
    return {"index": index, "skipped": False, "cost": cost, "failure": result.failure,
            "evaluations": result.evaluations, "notes": result.notes,
            "instance": _render(spec.kind, instance)}


def run_instance(name: str, cfg: GenConfig, index: int) -> _Result:
    """Re-run one generated instance regardless of budget (for replay)."""
    spec = CHECKS[name]
    return spec.run(generate(spec.kind, cfg, index), cfg, index)


# -- shrinking ---------------------------------------------------------------

def _deletions(x):
    """Instances with one child removed from some node of arity > 1."""
    def go(node):
        kids = node.children
        if isinstance(node, (NonLeaf, Or, And)) and len(kids) > 1:
            for i in range(len(kids)):
                yield _rebuild(node, kids[:i] + kids[i + 1:])
        for i, c in enumerate(kids):
            for smaller in go(c):
                yield _rebuild(node, kids[:i] + (smaller,) + kids[i + 1:])
    return go(x)


def _rebuild(node, kids):
    if isinstance(node, NonLeaf):
        return NonLeaf(node.mover, kids)
    if isinstance(node, Counter):
        return Counter(node.owner, kids[0], kids[1])
    return type(node)(node.owner, kids)


def _rename(t: ADTerm, owner, old: str, new: str) -> ADTerm:
    if isinstance(t, BasicAction):
        return BasicAction(new, owner) if t.owner is owner and t.label == old else t
    return _rebuild(t, tuple(_rename(c, owner, old, new) for c in t.children))


def _merges(t: ADTerm):
    for s in (P, O):
        labs = labels(t, s)
        for i, a in enumerate(labs):
            for b in labs[i + 1:]:
                yield _rename(t, s, b, a)


def shrink(instance, still_fails: Callable[[object], bool], max_steps: int = 1000):
    """Greedy child deletion, then label merging for terms."""
    current = instance
    for moves in (_deletions, _merges):
        if moves is _merges and not isinstance(current, (BasicAction, Or, And, Counter)):
            break
        steps = 0
        progress = True
        while progress and steps < max_steps:
            progress = False
            for candidate in moves(current):
                steps += 1
                try:
                    failing = still_fails(candidate)
                except Exception:
                    failing = False
                if failing:
                    current = candidate
                    progress = True
                    break
    return current


def _shrunk(name: str, cfg: GenConfig, instance) -> str:
    spec = CHECKS[name]

    def fails(x) -> bool:
        return spec.run(x, cfg, 0).failure is not None

    return _render(spec.kind, shrink(instance, fails))


def check(name: str, cfg: GenConfig, instances: Sequence | None = None,
          workers: int = 1, max_attempts: int | None = None) -> CheckReport:
    """Run check ``name`` on ``cfg.instance_count`` instances.

    Instances whose enumeration cost exceeds ``cfg.budget`` are skipped,
    listed in the report, and replaced by the next index.  With explicit
    ``instances`` every one of them is tried and nothing is generated.
    """
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    spec = CHECKS[name]
    start = time.perf_counter()
    report = CheckReport(name, 0, None, 0.0, config=asdict(cfg))
    notes: Tally = Tally()
    target = len(instances) if instances is not None else cfg.instance_count
    limit = len(instances) if instances is not None else (
        max_attempts if max_attempts is not None else 10 * cfg.instance_count + 100)

    def results(indices: list[int]):
        if instances is not None:
            return [_evaluate(name, cfg, i, instances[i]) for i in indices]
        if workers > 1 and len(indices) > 1:
            with ProcessPoolExecutor(workers) as pool:
                return list(pool.map(_evaluate, [name] * len(indices), [cfg] * len(indices),
                                     indices, chunksize=max(1, len(indices) // (4 * workers))))
        return [_evaluate(name, cfg, i) for i in indices]

    next_index = 0
    while report.instances_tried < target and next_index < limit and report.ok:
        batch = list(range(next_index, min(limit, next_index + target - report.instances_tried)))
        next_index = batch[-1] + 1
        for r in results(batch):
            if r["skipped"]:
                err = BudgetExceededError(r["index"], r["cost"], cfg.budget)
                log.warning("%s: skipped: %s", name, err)
                report.skipped.append({"index": r["index"], "cost": r["cost"], "reason": str(err)})
                continue
            report.instances_tried += 1
            report.evaluations += r["evaluations"]
            notes.update(r["notes"])
            if r["failure"] is not None:
                inst = instances[r["index"]] if instances is not None else generate(
                    spec.kind, cfg, r["index"])
                report.counterexample = {"index": r["index"], "seed": cfg.seed,
                                         "instance": r["instance"], "detail": r["failure"],
                                         "shrunk": _shrunk(name, cfg, inst)}
                break
            if report.instances_tried == target:
                break
    report.notes = dict(notes)
    report.elapsed = time.perf_counter() - start
    return report


def check_all(cfg: GenConfig, names: Iterable[str] | None = None, **kw) -> list[CheckReport]:
    return [check(n, cfg, **kw) for n in (names or CHECKS)]
