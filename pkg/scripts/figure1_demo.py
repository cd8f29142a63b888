#!/usr/bin/env python3
"""Walk through the two-move example game and the small ADTerm example."""
from pathlib import Path

from adtgames.adterm import O, P, sat, satisfiable_for, successful_under_assignment
from adtgames.dot import to_dot
from adtgames.dsl import (
    parse_adterm, parse_assignment, parse_game, print_adterm, print_assignment, print_game,
)
from adtgames.game import iter_strategies, out, out_strategy, winning_strategy
from adtgames.translate import adterm_to_game, game_to_adterm, strategy_to_assignment
from adtgames.verify import non_surjectivity_witness

DATA = Path(__file__).resolve().parent.parent / "data"

g = parse_game((DATA / "fig1.game").read_text())
print("game:", print_game(g))
print("out:", out(g))
for sigma in iter_strategies(g, P):
    print(f"  proponent picks {sigma.choices[()]} at the root -> {out_strategy(g, sigma)}")
print("opponent wins with:", winning_strategy(g, O).choices)

t, cmap = game_to_adterm(g)
print("\ntranslated term:", print_adterm(t))
for sigma in iter_strategies(g, P):
    beta = strategy_to_assignment(sigma, g)
    ok = successful_under_assignment(t, beta, P)
    print(f"  image of root -> {sigma.choices[()]}: {dict(beta.values)} successful={ok}")
w = non_surjectivity_witness(g)
print("assignment outside the image:", dict(w.values))
print("proponent witness:", satisfiable_for(t, P))

ex = parse_adterm((DATA / "example1.adt").read_text())
beta = parse_assignment((DATA / "beta.ass").read_text())
print("\nterm:", print_adterm(ex))
print(print_assignment(beta), end="")
print("sat:", sat(ex, beta))
print("opponent witness:", dict(satisfiable_for(ex, O).values))
g2, _ = adterm_to_game(ex)
print("translated game:", print_game(g2), "->", out(g2))
print("\n" + to_dot(g), end="")
