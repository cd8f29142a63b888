"""One test per acceptance criterion, each printing a PASS/FAIL line."""
import dataclasses
import random
import time

from adtgames.adterm import O, P, sat
from adtgames.dsl import (
    parse_adterm, parse_assignment, parse_game, parse_strategy, print_adterm,
    print_assignment, print_game, print_strategy,
)
from adtgames.game import Strategy, StrategyProfile, decision_nodes, out, winning_strategy
from adtgames.jsonio import from_json, to_json
from adtgames.translate import adterm_to_game, strategy_to_assignment
from adtgames.game import iter_strategies
from adtgames.verify import GenConfig, check, gen_adterm, gen_game, gen_profile, \
    non_surjectivity_witness
from conftest import DATA, L, profile

GAMES = GenConfig(seed=1, max_depth=4, max_arity=3, instance_count=500)
TERMS = GenConfig(seed=1, max_depth=5, max_arity=3, max_internal_nodes=12,
                  max_basic_actions=8, instance_count=500)


def run_check(name, cfg):
    report = check(name, cfg)
    exhaustive = not report.skipped
    return report, report.ok and exhaustive and report.instances_tried == cfg.instance_count


def test_01_worked_example(criterion):
    start = time.perf_counter()
    t = parse_adterm((DATA / "example1.adt").read_text())
    value = sat(t, profile({"E": True, "F": True}, {"G": False}))
    elapsed = time.perf_counter() - start
    ok = value is True and elapsed < 1
    criterion(1, "worked term c_p(and_p(E,F), or_o(G)) evaluates to sat = true", ok, elapsed)
    assert ok


def test_02_fig1_game(criterion):
    start = time.perf_counter()
    g = parse_game((DATA / "fig1.game").read_text())
    value = out(g)
    wo, wp = winning_strategy(g, O), winning_strategy(g, P)
    elapsed = time.perf_counter() - start
    ok = value is L and wo is not None and wp is None and elapsed < 1
    criterion(2, "example game: out = (0,1), opponent wins, proponent has no winning strategy",
              ok, elapsed)
    assert ok


def test_03_partition(criterion):
    report, ok = run_check("partition", GenConfig(seed=1, instance_count=1000))
    ok = ok and report.elapsed < 10
    criterion(3, f"partition: {report.instances_tried} term/profile pairs, no counterexample",
              ok, report.elapsed)
    assert ok, report.counterexample


def test_04_profiles(criterion):
    report, ok = run_check("thm2", GAMES)
    ok = ok and report.elapsed < 60
    criterion(4, f"profile equivalence: {report.instances_tried} games, "
                 f"{report.evaluations} profile evaluations", ok, report.elapsed)
    assert ok, report.counterexample


def test_05_strategies(criterion):
    report, ok = run_check("thm3", GAMES)
    ok = ok and report.elapsed < 60
    criterion(5, f"strategy equivalence: {report.instances_tried} games, all proponent "
                 f"strategies ({report.notes})", ok, report.elapsed)
    assert ok, report.counterexample


def test_06_assignments(criterion):
    report, ok = run_check("thm4", TERMS)
    ok = ok and report.elapsed < 120
    criterion(6, f"assignment equivalence: {report.instances_tried} terms, all proponent "
                 f"assignments", ok, report.elapsed)
    assert ok, report.counterexample


def test_07_satisfiability_and_outcome(criterion):
    games, ok1 = run_check("cor1", GAMES)
    terms, ok2 = run_check("cor2", TERMS)
    ok = ok1 and ok2
    criterion(7, f"winner preserved both ways: {games.instances_tried} games, "
                 f"{terms.instances_tried} terms", ok, games.elapsed + terms.elapsed)
    assert ok, (games.counterexample, terms.counterexample)


def test_08_conjunction_free(criterion):
    report, ok = run_check("conjunction-free", GAMES)
    criterion(8, f"no conjunction in {report.instances_tried} game translations", ok,
              report.elapsed)
    assert ok, report.counterexample


def test_09_round_trip(criterion):
    report, ok = run_check("round-trip", dataclasses.replace(TERMS, instance_count=200))
    differences = report.notes.get("syntactic_differences", 0)
    ok = ok and differences >= 1
    criterion(9, f"term -> game -> term keeps p-satisfiability on {report.instances_tried} "
                 f"terms; {differences} differ syntactically", ok, report.elapsed)
    assert ok, report.counterexample


def test_10_non_surjectivity(criterion):
    g = parse_game((DATA / "fig1.game").read_text())
    witness = non_surjectivity_witness(g)
    image = {strategy_to_assignment(s, g).key() for s in iter_strategies(g, P)}
    ok = witness is not None and witness.key() not in image
    criterion(10, "example game translation has an assignment outside the strategy image", ok)
    assert ok


def random_strategy(g, s, rng):
    return Strategy(s, {path: rng.randrange(arity) for path, arity in decision_nodes(g, s)})


def test_11_text_and_json_round_trips(criterion):
    cfg = GenConfig(seed=11, max_depth=5, max_arity=3)
    failures = {}
    start = time.perf_counter()

    def expect(kind, value, text_rt, json_rt):
        if (text_rt is not None and value != text_rt) or not json_rt:
            failures[kind] = failures.get(kind, 0) + 1

    for i in range(1000):
        rng = random.Random(i)
        t, g = gen_adterm(cfg, i), gen_game(cfg, i)
        beta = gen_profile(t, cfg, i)
        sp, so = random_strategy(g, P, rng), random_strategy(g, O, rng)
        _, cmap = adterm_to_game(t)
        expect("adterm", t, parse_adterm(print_adterm(t)), from_json(to_json(t)) == t)
        expect("game", g, parse_game(print_game(g)), from_json(to_json(g)) == g)
        expect("profile", beta, parse_assignment(print_assignment(beta)),
               from_json(to_json(beta)) == beta)
        expect("assignment", beta.proponent, parse_assignment(print_assignment(beta.proponent)),
               from_json(to_json(beta.proponent)) == beta.proponent)
        expect("strategy", sp, parse_strategy(print_strategy(sp), g),
               from_json(to_json(sp)) == sp)
        sigma = StrategyProfile(sp, so)
        expect("strategy_profile", sigma, None, from_json(to_json(sigma)) == sigma)
        expect("correspondence", cmap, None, from_json(to_json(cmap)) == cmap)
    elapsed = time.perf_counter() - start
    ok = not failures
    criterion(11, f"round trips over 1000 values each: text for 5 kinds, JSON for 7, failures: "
                  f"{failures or 0}", ok, elapsed)
    assert ok
