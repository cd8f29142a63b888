"""Command line driver.

Exit codes: 0 success, 1 negative analysis result (unsatisfiable, losing,
ill-typed, counterexample found), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .adterm import (
    BasicAssignmentProfile, MissingLabelError, Player, ValidationError, sat, satisfiable_for,
    successful_under_assignment, successful_under_profile, type_of, validate,
)
from .dot import to_dot
from .dsl import (
    DslSyntaxError, format_path, parse_adterm, parse_assignment, parse_game, parse_strategy,
    print_adterm, print_assignment, print_game, print_strategy,
)
from .game import UnboundStrategyError, out, validate_game, validate_strategy, winning_strategy
from .jsonio import to_dict
from .translate import (
    adterm_to_game, assignment_to_strategy, game_to_adterm, strategy_to_assignment,
)
from .verify import CHECKS, GenConfig, check


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load_term(path: str):
    t = parse_adterm(_read(path))
    validate(t).raise_if_invalid()
    return t


def _load_game(path: str):
    g = parse_game(_read(path))
    validate_game(g).raise_if_invalid()
    return g


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _map_lines(cmap) -> list[str]:
    return [f"{format_path(s)} -> {format_path(t)}" for s, t in cmap.pairs]


# -- subcommands -------------------------------------------------------------

def cmd_validate(args) -> int:
    if args.term:
        x = parse_adterm(_read(args.term))
        report = validate(x)
    else:
        x = parse_game(_read(args.game))
        report = validate_game(x)
    lines = ["ok"] if report.ok else [str(i) for i in report.issues]
    _emit(args, {"ok": report.ok, "issues": [{"path": format_path(i.path), "message": i.message}
                                              for i in report.issues]}, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_eval(args) -> int:
    t = _load_term(args.term)
    beta = parse_assignment(_read(args.assignment))
    players = [Player.parse(args.player)] if args.player else [Player.PROPONENT, Player.OPPONENT]
    if isinstance(beta, BasicAssignmentProfile):
        value = sat(t, beta)
        verdicts = {str(s): successful_under_profile(t, beta, s) for s in players}
        lines = [f"sat = {'true' if value else 'false'}"]
        payload = {"sat": value, "type": str(type_of(t)), "successful": verdicts}
    else:
        if args.player and Player.parse(args.player) is not beta.owner:
            raise InputError(f"assignment is for {beta.owner}, not {args.player}")
        verdicts = {str(beta.owner): successful_under_assignment(t, beta, beta.owner)}
        lines = []
        payload = {"type": str(type_of(t)), "successful_against_all": verdicts}
    lines += [f"{s}: {'successful' if ok else 'not successful'}" for s, ok in verdicts.items()]
    _emit(args, payload, "\n".join(lines))
    if args.player:
        return 0 if all(verdicts.values()) else 1
    return 0


def cmd_solve(args) -> int:
    if args.term:
        if not args.player:
            raise InputError("solve -t needs --player")
        t = _load_term(args.term)
        s = Player.parse(args.player)
        witness = satisfiable_for(t, s)
        if witness is None:
            _emit(args, {"player": str(s), "satisfiable": False, "witness": None}, "unsatisfiable")
            return 1
        _emit(args, {"player": str(s), "satisfiable": True, "witness": to_dict(witness)},
              print_assignment(witness))
        return 0
    g = _load_game(args.game)
    value = out(g)
    winner = value.winner
    sigma = winning_strategy(g, winner)
    text = f"{value}\nwinner: {winner}\n" + print_strategy(sigma)
    _emit(args, {"out": str(value), "winner": str(winner), "strategy": to_dict(sigma)}, text)
    if args.player:
        return 0 if Player.parse(args.player) is winner else 1
    return 0


def _write_map(args, cmap) -> list[str]:
    if args.map:
        Path(args.map).write_text("\n".join(_map_lines(cmap)) + "\n", encoding="utf-8")
        return []
    return ["# correspondence (source -> target)"] + [f"# {l}" for l in _map_lines(cmap)]


def cmd_to_game(args) -> int:
    g, cmap = adterm_to_game(_load_term(args.term))
    extra = _write_map(args, cmap)
    _emit(args, {"game": to_dict(g), "correspondence": to_dict(cmap)},
          "\n".join([print_game(g)] + extra))
    return 0


def cmd_to_adterm(args) -> int:
    t, cmap = game_to_adterm(_load_game(args.game))
    extra = _write_map(args, cmap)
    _emit(args, {"adterm": to_dict(t), "correspondence": to_dict(cmap)},
          "\n".join([print_adterm(t)] + extra))
    return 0


def cmd_conv_strategy(args) -> int:
    g = _load_game(args.game)
    sigma = parse_strategy(_read(args.strategy), g)
    report = validate_strategy(sigma, g)
    if not report.ok:
        raise InputError("strategy is not total: " + "; ".join(map(str, report.issues)))
    beta = strategy_to_assignment(sigma, g)
    _emit(args, {"assignment": to_dict(beta)}, print_assignment(beta))
    return 0


def cmd_conv_assignment(args) -> int:
    t = _load_term(args.term)
    beta = parse_assignment(_read(args.assignment))
    if isinstance(beta, BasicAssignmentProfile):
        if not args.player:
            raise InputError("the file holds a profile; choose a side with --player")
        beta = beta.for_player(Player.parse(args.player))
    elif args.player and Player.parse(args.player) is not beta.owner:
        raise InputError(f"assignment is for {beta.owner}, not {args.player}")
    sigma = assignment_to_strategy(beta, t)
    _emit(args, {"strategy": to_dict(sigma)}, print_strategy(sigma))
    return 0


def cmd_check(args) -> int:
    cfg = GenConfig(seed=args.seed, max_depth=args.depth, max_arity=args.arity,
                    max_basic_actions=args.labels, instance_count=args.count,
                    max_internal_nodes=args.internal, budget=args.budget)
    report = check(args.name, cfg, workers=args.workers)
    d = report.to_dict()
    if args.json:
        print(json.dumps(d, indent=2))
    else:
        status = "ok" if report.ok else "COUNTEREXAMPLE"
        print(f"{args.name}: {status} ({report.instances_tried} instances, "
              f"{len(report.skipped)} skipped, {report.evaluations} evaluations, "
              f"{report.elapsed:.2f}s)")
        if report.notes:
            print("notes: " + ", ".join(f"{k}={v}" for k, v in sorted(report.notes.items())))
        if not report.ok:
            print(json.dumps(report.counterexample, indent=2))
    return 0 if report.ok else 1


def cmd_export(args) -> int:
    x = parse_adterm(_read(args.term)) if args.term else parse_game(_read(args.game))
    if args.format == "dot":
        print(to_dot(x), end="")
    else:
        print(json.dumps(to_dict(x), indent=2))
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output and errors")
    parser = argparse.ArgumentParser(prog="adtgames", parents=[common],
                                     description="Attack-defense terms and extensive-form games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def term_or_game(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("-t", "--term", metavar="FILE", help="ADTerm file")
        g.add_argument("-g", "--game", metavar="FILE", help="game file")

    p = add("validate", cmd_validate, "check typing of a term or alternation of a game")
    term_or_game(p)

    p = add("eval", cmd_eval, "evaluate a term under an assignment (profile)")
    p.add_argument("-t", "--term", required=True, metavar="FILE")
    p.add_argument("-a", "--assignment", required=True, metavar="FILE")
    p.add_argument("--player", choices=["p", "o"])

    p = add("solve", cmd_solve, "find a witness assignment or solve a game")
    term_or_game(p)
    p.add_argument("--player", choices=["p", "o"])

    p = add("to-game", cmd_to_game, "translate a term into a game")
    p.add_argument("-t", "--term", required=True, metavar="FILE")
    p.add_argument("--map", metavar="FILE", help="write the correspondence map here")

    p = add("to-adterm", cmd_to_adterm, "translate a game into a term")
    p.add_argument("-g", "--game", required=True, metavar="FILE")
    p.add_argument("--map", metavar="FILE", help="write the correspondence map here")

    p = add("conv-strategy", cmd_conv_strategy, "game strategy -> assignment on the translated term")
    p.add_argument("-g", "--game", required=True, metavar="FILE")
    p.add_argument("-s", "--strategy", required=True, metavar="FILE")

    p = add("conv-assignment", cmd_conv_assignment,
            "term assignment -> strategy on the translated game")
    p.add_argument("-t", "--term", required=True, metavar="FILE")
    p.add_argument("-a", "--assignment", required=True, metavar="FILE")
    p.add_argument("--player", choices=["p", "o"])

    p = add("check", cmd_check, "run an exhaustive equivalence check on generated instances")
    p.add_argument("--name", required=True, choices=sorted(CHECKS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--arity", type=int, default=3)
    p.add_argument("--labels", type=int, default=8, help="max basic actions per player")
    p.add_argument("--internal", type=int, default=12, help="max internal term nodes")
    p.add_argument("--budget", type=int, default=2 ** 20)
    p.add_argument("--workers", type=int, default=1)

    p = add("export", cmd_export, "export a term or game as DOT or JSON")
    term_or_game(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DslSyntaxError, ValidationError, MissingLabelError,
            UnboundStrategyError, ValueError) as e:
        kind = type(e).__name__
        if args.json:
            print(json.dumps({"error": kind, "message": str(e)}))
        else:
            print(f"error ({kind}): {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
