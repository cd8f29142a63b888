"""Text formats: term and game DSLs, assignment and strategy files.

Term syntax::

    term   := basic | opNode
    basic  := IDENT (':' ('p'|'o'))?
    opNode := ('or'|'and') '_' ('p'|'o') '(' term (',' term)* ')'
            | 'c' '_' ('p'|'o') '(' term ',' term ')'

Game syntax::

    game := 'L' ('p'|'o') '(' ('1,0'|'0,1') ')' | 'N' ('p'|'o') '(' game (',' game)* ')'

Whitespace is insignificant and ``#`` starts a comment running to the end
of the line.  Unannotated leaves take the type their parent's typing rule
requires; an explicit annotation is kept as written, so a conflicting one
surfaces as a typing error in :func:`adtgames.adterm.validate`.
"""
from __future__ import annotations

import re

from .adterm import (
    ADTerm, And, BasicAction, BasicAssignment, BasicAssignmentProfile, Counter,
    NodePath, O, Or, P, Player,
)
from .game import Game, Leaf, NonLeaf, Outcome, Strategy, node_at

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_.]*")
_OP_HEAD = re.compile(r"(or|and|c)_([po])\Z")
_GAME_HEAD = re.compile(r"([LN])([po])")
_INT = re.compile(r"\d+")
_WS = re.compile(r"(?:\s+|#[^\n]*)*")


class DslSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} at offset {offset} (line {line}, column {col})")
        self.offset = offset
        self.line = line
        self.column = col


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        self.pos = _WS.match(self.text, self.pos).end()

    def error(self, message: str) -> DslSyntaxError:
        return DslSyntaxError(message, self.pos, self.text)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def match(self, pattern: re.Pattern, what: str) -> re.Match:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m

    def finish(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")


# -- ADTerms -----------------------------------------------------------------

def _parse_term(sc: _Scanner, expected: Player | None) -> ADTerm:
    start = sc.pos
    name = sc.match(_IDENT, "a basic action or operator").group()
    head = _OP_HEAD.match(name)
    if head and sc.peek() == "(":
        kind, owner = head.group(1), Player.parse(head.group(2))
        sc.expect("(")
        if kind == "c":
            main = _parse_term(sc, owner)
            sc.expect(",")
            counter = _parse_term(sc, -owner)
            sc.expect(")")
            return Counter(owner, main, counter)
        children = [_parse_term(sc, owner)]
        while sc.peek() == ",":
            sc.pos += 1
            children.append(_parse_term(sc, owner))
        sc.expect(")")
        return (Or if kind == "or" else And)(owner, children)
    if sc.peek() == ":":
        sc.pos += 1
        owner = Player.parse(sc.match(re.compile(r"[po]\b"), "player 'p' or 'o'").group())
    elif expected is None:
        raise DslSyntaxError(f"cannot infer the type of basic action {name!r}; annotate it",
                             start, sc.text)
    else:
        owner = expected
    return BasicAction(name, owner)


def parse_adterm(text: str) -> ADTerm:
    sc = _Scanner(text)
    t = _parse_term(sc, None)
    sc.finish()
    return t


def _print_term(t: ADTerm, expected: Player | None) -> str:
    if isinstance(t, BasicAction):
        return t.label if t.owner is expected else f"{t.label}:{t.owner.symbol}"
    if isinstance(t, Counter):
        return (f"c_{t.owner.symbol}({_print_term(t.main, t.owner)}, "
                f"{_print_term(t.counter, -t.owner)})")
    op = "or" if isinstance(t, Or) else "and"
    inner = ", ".join(_print_term(c, t.owner) for c in t.children)
    return f"{op}_{t.owner.symbol}({inner})"


def print_adterm(t: ADTerm) -> str:
    """Canonical text; leaves are annotated only where the type is not inferable."""
    return _print_term(t, None)


# -- games -------------------------------------------------------------------

def _parse_game(sc: _Scanner) -> Game:
    m = sc.match(_GAME_HEAD, "'Lp', 'Lo', 'Np' or 'No'")
    kind, mover = m.group(1), Player.parse(m.group(2))
    sc.expect("(")
    if kind == "L":
        at = sc.pos
        a = int(sc.match(_INT, "payoff").group())
        sc.expect(",")
        b = int(sc.match(_INT, "payoff").group())
        if (a, b) not in ((1, 0), (0, 1)):
            raise DslSyntaxError(f"outcome must be (1,0) or (0,1), got ({a},{b})", at, sc.text)
        sc.expect(")")
        return Leaf(mover, Outcome((a, b)))
    children = [_parse_game(sc)]
    while sc.peek() == ",":
        sc.pos += 1
        children.append(_parse_game(sc))
    sc.expect(")")
    return NonLeaf(mover, children)


def parse_game(text: str) -> Game:
    sc = _Scanner(text)
    g = _parse_game(sc)
    sc.finish()
    return g


def print_game(g: Game) -> str:
    if isinstance(g, Leaf):
        return f"L{g.mover.symbol}{g.outcome}"
    return f"N{g.mover.symbol}(" + ", ".join(print_game(c) for c in g.children) + ")"


# -- paths, assignments, strategies -----------------------------------------

def format_path(path: NodePath) -> str:
    return "/" + "/".join(str(i) for i in path)


def parse_path(text: str) -> NodePath:
    text = text.strip()
    if not text.startswith("/"):
        raise ValueError(f"path must start with '/': {text!r}")
    parts = [p for p in text[1:].split("/") if p != ""]
    if any(not p.isdigit() for p in parts):
        raise ValueError(f"bad path {text!r}")
    return tuple(int(p) for p in parts)


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _line_error(text: str, number: int, message: str) -> DslSyntaxError:
    offset = sum(len(l) + 1 for l in text.splitlines()[:number - 1])
    return DslSyntaxError(message, offset, text)


_SECTION = re.compile(r"\[\s*([A-Za-z]+)\s*\]\Z")
_BINDING = re.compile(r"([A-Za-z][A-Za-z0-9_.]*)\s*=\s*(true|false)\Z")


def parse_assignment(text: str) -> BasicAssignment | BasicAssignmentProfile:
    """Parse ``[p]`` / ``[o]`` sections of ``label = true|false`` lines.

    Both sections give a profile; a single section gives one assignment.
    """
    sections: dict[Player, dict[str, bool]] = {}
    current: Player | None = None
    for number, line in _lines(text):
        m = _SECTION.match(line)
        if m:
            try:
                current = Player.parse(m.group(1))
            except ValueError:
                raise _line_error(text, number, f"unknown section {line}") from None
            if current in sections:
                raise _line_error(text, number, f"duplicate section {line}")
            sections[current] = {}
            continue
        m = _BINDING.match(line)
        if not m:
            raise _line_error(text, number, f"expected 'label = true|false', got {line!r}")
        if current is None:
            raise _line_error(text, number, "binding outside a [p] or [o] section")
        label, value = m.group(1), m.group(2) == "true"
        if label in sections[current]:
            raise _line_error(text, number, f"duplicate label {label!r}")
        sections[current][label] = value
    if not sections:
        raise DslSyntaxError("no [p] or [o] section", 0, text)
    if len(sections) == 2:
        return BasicAssignmentProfile(BasicAssignment(P, sections[P]),
                                      BasicAssignment(O, sections[O]))
    (owner, values), = sections.items()
    return BasicAssignment(owner, values)


def print_assignment(beta: BasicAssignment | BasicAssignmentProfile) -> str:
    parts = [beta] if isinstance(beta, BasicAssignment) else [beta.proponent, beta.opponent]
    out = []
    for a in parts:
        out.append(f"[{a.owner.symbol}]")
        out.extend(f"{k} = {'true' if v else 'false'}" for k, v in a.values.items())
    return "\n".join(out) + "\n"


_CHOICE = re.compile(r"(/[0-9/]*)\s*->\s*(\d+)\Z")


def parse_strategy(text: str, g: Game | None = None, owner: Player | None = None) -> Strategy:
    """Parse ``<path> -> <index>`` lines, optionally under a ``[p]``/``[o]`` header.

    With ``g`` given, every path must name a non-leaf of the owner and every
    index must lie within its arity; the owner may then be inferred.
    """
    choices: dict[NodePath, int] = {}
    declared: Player | None = None
    for number, line in _lines(text):
        m = _SECTION.match(line)
        if m:
            if declared is not None or choices:
                raise _line_error(text, number, "owner header must come first and only once")
            try:
                declared = Player.parse(m.group(1))
            except ValueError:
                raise _line_error(text, number, f"unknown section {line}") from None
            continue
        m = _CHOICE.match(line)
        if not m:
            raise _line_error(text, number, f"expected '<path> -> <index>', got {line!r}")
        try:
            path = parse_path(m.group(1))
        except ValueError as e:
            raise _line_error(text, number, str(e)) from None
        if path in choices:
            raise _line_error(text, number, f"duplicate path {format_path(path)}")
        choices[path] = int(m.group(2))
        if g is not None:
            try:
                node = node_at(g, path)
            except (IndexError, AttributeError):
                raise _line_error(text, number, f"no node at {format_path(path)}") from None
            if not isinstance(node, NonLeaf):
                raise _line_error(text, number, f"{format_path(path)} is a leaf")
            if not 0 <= choices[path] < len(node.children):
                raise _line_error(text, number,
                                  f"index {choices[path]} outside arity {len(node.children)}")
            mover = node.mover
            if (declared or owner) not in (None, mover):
                raise _line_error(text, number,
                                  f"{format_path(path)} belongs to {mover}, not {declared or owner}")
            owner = owner or mover
    if declared is not None and owner is not None and declared is not owner:
        raise DslSyntaxError(f"header says {declared}, expected {owner}", 0, text)
    owner = declared or owner
    if owner is None:
        raise DslSyntaxError("cannot determine the strategy owner; add a [p] or [o] header", 0, text)
    return Strategy(owner, choices)


def print_strategy(sigma: Strategy) -> str:
    lines = [f"[{sigma.owner.symbol}]"]
    lines += [f"{format_path(p)} -> {k}" for p, k in sorted(sigma.choices.items())]
    return "\n".join(lines) + "\n"
