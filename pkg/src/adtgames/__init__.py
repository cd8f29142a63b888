"""Attack-defense terms and binary zero-sum extensive-form games, with
outcome-preserving translations between them."""
from .adterm import (
    ADTerm, And, BasicAction, BasicAssignment, BasicAssignmentProfile, Counter, O, Or, P,
    Player, labels, sat, satisfiable_for, successful_under_assignment,
    successful_under_profile, type_of, validate,
)
from .game import (
    Game, Leaf, NonLeaf, Outcome, Strategy, StrategyProfile, enumerate_strategies,
    first_player, out, out_profile, out_strategy, validate_game, winning_strategy,
)
from .translate import (
    CorrespondenceMap, FreshNameScheme, adterm_to_game, assignment_to_strategy,
    game_to_adterm, strategy_to_assignment,
)

__all__ = [
    "ADTerm",
    "And",
    "BasicAction",
    "BasicAssignment",
    "BasicAssignmentProfile",
    "Counter",
    "O",
    "Or",
    "P",
    "Player",
    "labels",
    "sat",
    "satisfiable_for",
    "successful_under_assignment",
    "successful_under_profile",
    "type_of",
    "validate",
    "Game",
    "Leaf",
    "NonLeaf",
    "Outcome",
    "Strategy",
    "StrategyProfile",
    "enumerate_strategies",
    "first_player",
    "out",
    "out_profile",
    "out_strategy",
    "validate_game",
    "winning_strategy",
    "CorrespondenceMap",
    "FreshNameScheme",
    "adterm_to_game",
    "assignment_to_strategy",
    "game_to_adterm",
    "strategy_to_assignment",
]
