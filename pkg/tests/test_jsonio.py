import json

import pytest
from hypothesis import given

from adtgames.adterm import BasicAssignment, O, P
from adtgames.game import Strategy, StrategyProfile
from adtgames.jsonio import from_dict, from_json, to_dict, to_json
from adtgames.translate import adterm_to_game, game_to_adterm
from conftest import games, profile, terms


def test_schema_fields(example1):
    d = to_dict(example1)
    assert d["kind"] == "counter" and d["owner"] == "p"
    assert d["main"]["children"][0] == {"kind": "basic", "label": "E", "owner": "p"}


def test_strategy_paths_are_strings():
    d = to_dict(Strategy(O, {(0,): 1}))
    assert d == {"kind": "strategy", "owner": "o", "choices": {"/0": 1}}


@pytest.mark.parametrize("value", [
    BasicAssignment(P, {"E": True}),
    profile({"E": True}, {"G": False}),
    Strategy(P, {(): 0, (0, 1): 2}),
    StrategyProfile(Strategy(P, {(): 1}), Strategy(O, {(0,): 0})),
])
def test_round_trip_values(value):
    assert from_json(to_json(value)) == value


def test_unknown_kind():
    with pytest.raises(ValueError):
        from_dict({"kind": "nope"})
    with pytest.raises(TypeError):
        to_dict(object())


@given(terms())
def test_terms_round_trip(t):
    assert from_json(to_json(t)) == t
    _, cmap = adterm_to_game(t)
    assert from_json(to_json(cmap)) == cmap


@given(games())
def test_games_round_trip(g):
    assert from_json(to_json(g, indent=2)) == g
    _, cmap = game_to_adterm(g)
    assert from_dict(json.loads(json.dumps(to_dict(cmap)))) == cmap
