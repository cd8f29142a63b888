"""Attack-defense terms, the satisfiability attribute and the winning sets.

Terms are immutable trees.  Positions inside a term are addressed by
``NodePath`` tuples of 0-based child indices; a counter node has the
countered term at index 0 and the countermeasure at index 1.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union

NodePath = tuple[int, ...]


class Player(enum.Enum):
    PROPONENT = "p"
    OPPONENT = "o"

    def __neg__(self) -> Player:
        return Player.OPPONENT if self is Player.PROPONENT else Player.PROPONENT

    @property
    def symbol(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> Player:
        key = text.strip().lower()
        if key in ("p", "proponent"):
            return cls.PROPONENT
        if key in ("o", "opponent"):
            return cls.OPPONENT
        raise ValueError(f"unknown player {text!r}")

    def __str__(self) -> str:
        return self.name.lower()


P = Player.PROPONENT
O = Player.OPPONENT


@dataclass(frozen=True, slots=True)
class BasicAction:
    label: str
    owner: Player

    @property
    def children(self) -> tuple[ADTerm, ...]:
        return ()


@dataclass(frozen=True, slots=True)
class Or:
    owner: Player
    children: tuple[ADTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True, slots=True)
class And:
    owner: Player
    children: tuple[ADTerm, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True, slots=True)
class Counter:
    owner: Player
    main: ADTerm
    counter: ADTerm

    @property
    def children(self) -> tuple[ADTerm, ...]:
        return (self.main, self.counter)


ADTerm = Union[BasicAction, Or, And, Counter]


class MissingLabelError(KeyError):
    """An assignment does not cover a basic action of the evaluated term."""

    def __init__(self, label: str, owner: Player):
        super().__init__(f"no value for {owner} basic action {label!r}")
        self.label = label
        self.owner = owner

    def __str__(self) -> str:
        return self.args[0]


class ValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("; ".join(str(i) for i in report.issues))
        self.report = report


@dataclass(frozen=True, slots=True)
class Issue:
    path: NodePath
    message: str

    def __str__(self) -> str:
        where = "/" + "/".join(map(str, self.path))
        return f"{where}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def raise_if_invalid(self) -> None:
        if self.issues:
            raise ValidationError(self)


@dataclass(frozen=True)
class BasicAssignment:
    owner: Player
    values: Mapping[str, bool] = field(default_factory=dict)

    def __getitem__(self, label: str) -> bool:
        return self.values[label]

    def key(self) -> tuple:
        return (self.owner, tuple(sorted(self.values.items())))


@dataclass(frozen=True)
class BasicAssignmentProfile:
    proponent: BasicAssignment
    opponent: BasicAssignment

    def __post_init__(self):
        if self.proponent.owner is not P or self.opponent.owner is not O:
            raise ValueError("profile owners must be (proponent, opponent)")

    def for_player(self, s: Player) -> BasicAssignment:
        return self.proponent if s is P else self.opponent


# -- structure ---------------------------------------------------------------

def iter_subterms(t: ADTerm, path: NodePath = ()) -> Iterator[tuple[NodePath, ADTerm]]:
    """Yield ``(path, subterm)`` pairs in preorder."""
    stack = [(path, t)]
    while stack:
        p, node = stack.pop()
        yield p, node
        kids = node.children
        for i in range(len(kids) - 1, -1, -1):
            stack.append((p + (i,), kids[i]))


def subterm(t: ADTerm, path: NodePath) -> ADTerm:
    for i in path:
        t = t.children[i]
    return t


def type_of(t: ADTerm) -> Player:
    return t.owner


def labels(t: ADTerm, s: Player) -> list[str]:
    """Labels of ``s``-owned basic actions, in preorder of first occurrence."""
    seen: dict[str, None] = {}
    for _, node in iter_subterms(t):
        if isinstance(node, BasicAction) and node.owner is s:
            seen.setdefault(node.label)
    return list(seen)


def is_linear(t: ADTerm, s: Player | None = None) -> bool:
    """True if no basic action (of ``s``, or of either player) occurs twice."""
    seen = set()
    for _, node in iter_subterms(t):
        if isinstance(node, BasicAction) and (s is None or node.owner is s):
            key = (node.owner, node.label)
            if key in seen:
                return False
            seen.add(key)
    return True


def count_internal(t: ADTerm) -> int:
    return sum(1 for _, n in iter_subterms(t) if not isinstance(n, BasicAction))


def validate(t: ADTerm) -> ValidationReport:
    """Check the typing discipline at every node.

    Each issue is reported at the path of the offending child; arity
    problems are reported at the operator node itself.
    """
    issues = []
    for path, node in iter_subterms(t):
        if isinstance(node, BasicAction):
            continue
        if isinstance(node, (Or, And)):
            if not node.children:
                issues.append(Issue(path, f"{type(node).__name__.lower()}_{node.owner.symbol} has arity 0"))
            for i, child in enumerate(node.children):
                if child.owner is not node.owner:
                    issues.append(Issue(
                        path + (i,),
                        f"child {i + 1} of {type(node).__name__.lower()}_{node.owner.symbol} "
                        f"must have type {node.owner.symbol}, got {child.owner.symbol}"))
        elif isinstance(node, Counter):
            if node.main.owner is not node.owner:
                issues.append(Issue(
                    path + (0,),
                    f"countered argument of c_{node.owner.symbol} must have type "
                    f"{node.owner.symbol}, got {node.main.owner.symbol}"))
            if node.counter.owner is not -node.owner:
                issues.append(Issue(
                    path + (1,),
                    f"countermeasure of c_{node.owner.symbol} must have type "
                    f"{(-node.owner).symbol}, got {node.counter.owner.symbol}"))
        else:
            issues.append(Issue(path, f"not an ADTerm node: {node!r}"))
    return ValidationReport(tuple(issues))


# -- satisfiability ----------------------------------------------------------

def _check_coverage(t: ADTerm, assignments: Mapping[Player, Mapping[str, bool]]) -> None:
    for _, node in iter_subterms(t):
        if isinstance(node, BasicAction):
            values = assignments.get(node.owner)
            if values is not None and node.label not in values:
                raise MissingLabelError(node.label, node.owner)


def _sat(t: ADTerm, beta: BasicAssignmentProfile) -> bool:
    if isinstance(t, BasicAction):
        return beta.for_player(t.owner).values[t.label]
    if isinstance(t, Or):
        return any([_sat(c, beta) for c in t.children])
    if isinstance(t, And):
        return all([_sat(c, beta) for c in t.children])
    return _sat(t.main, beta) and not _sat(t.counter, beta)


def sat(t: ADTerm, beta: BasicAssignmentProfile) -> bool:
    """Satisfiability value of ``t`` under the assignment profile ``beta``."""
    _check_coverage(t, {P: beta.proponent.values, O: beta.opponent.values})
    return _sat(t, beta)


def sat_bits(t: ADTerm, bits: Mapping[tuple[Player, str], int]) -> int:
    """Bit-parallel ``sat``: bit ``j`` of the result is ``sat`` under the
    profile whose basic actions take bit ``j`` of their entry in ``bits``.

    Only counters negate, and ``a & ~b`` stays inside ``a``'s bits, so no
    width mask is needed.
    """
    if isinstance(t, BasicAction):
        return bits[(t.owner, t.label)]
    if isinstance(t, Or):
        acc = 0
        for c in t.children:
            acc |= sat_bits(c, bits)
        return acc
    if isinstance(t, And):
        it = iter(t.children)
        acc = sat_bits(next(it), bits)
        for c in it:
            acc &= sat_bits(c, bits)
        return acc
    return sat_bits(t.main, bits) & ~sat_bits(t.counter, bits)


def successful_under_profile(t: ADTerm, beta: BasicAssignmentProfile, s: Player) -> bool:
    """Membership of ``t`` in the winning set of ``s`` under a full profile."""
    value = sat(t, beta)
    return value if t.owner is s else not value


def _row_mask(i: int, n: int) -> int:
    # bit j <-> j-th assignment in lexicographic order (first variable most significant)
    width = 1 << (n - i)
    half = width >> 1
    out = ((1 << half) - 1) << half
    while width < (1 << n):
        out |= out << width
        width <<= 1
    return out


@functools.lru_cache(maxsize=64)
def variable_masks(n: int) -> tuple[int, ...]:
    """Truth-table columns for ``n`` variables over ``2**n`` rows."""
    return tuple(_row_mask(i, n) for i in range(n))


def _wins(t: ADTerm, s: Player, fixed: Mapping[str, bool]) -> bool:
    """Exact ``win^s`` test on linear terms.

    ``s``-labels missing from ``fixed`` are still free for ``s`` to choose;
    every ``-s`` label is universally quantified.  Valid only when the
    quantified labels occur at most once each.
    """
    if isinstance(t, BasicAction):
        if t.owner is s:
            return fixed.get(t.label, True)
        return False
    mine = t.owner is s
    if isinstance(t, Or):
        results = (_wins(c, s, fixed) for c in t.children)
        return any(results) if mine else all(results)
    if isinstance(t, And):
        results = (_wins(c, s, fixed) for c in t.children)
        return all(results) if mine else any(results)
    if mine:
        return _wins(t.main, s, fixed) and _wins(t.counter, s, fixed)
    return _wins(t.main, s, fixed) or _wins(t.counter, s, fixed)


ENUMERATION_LIMIT = 16  # auto mode enumerates up to 2**16 opposing assignments


def successful_under_assignment(t: ADTerm, beta_s: BasicAssignment, s: Player,
                                method: str = "auto") -> bool:
    """Is ``s`` successful in ``t`` under ``beta_s`` against every opposing assignment?

    The opposing player ranges over all assignments to its labels occurring
    in ``t``.  ``method="enumerate"`` evaluates all of them at once with
    :func:`sat_bits`; ``"structural"`` uses the compositional rule that is
    exact when no opposing label is repeated; ``"auto"`` enumerates small
    cases and otherwise picks structural when it is exact.
    """
    if beta_s.owner is not s:
        raise ValueError(f"assignment belongs to {beta_s.owner}, not {s}")
    _check_coverage(t, {s: beta_s.values})
    opposing = labels(t, -s)
    if method == "auto":
        if len(opposing) > ENUMERATION_LIMIT and is_linear(t, -s):
            method = "structural"
        else:
            method = "enumerate"
    if method == "structural":
        if not is_linear(t, -s):
            raise ValueError("structural evaluation needs each opposing label to occur once")
        return _wins(t, s, beta_s.values)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    n = len(opposing)
    full = (1 << (1 << n)) - 1
    bits = {(-s, lab): m for lab, m in zip(opposing, variable_masks(n))}
    for lab in labels(t, s):
        bits[(s, lab)] = full if beta_s.values[lab] else 0
    value = sat_bits(t, bits)
    return value == full if t.owner is s else value == 0


def _first_witness_structural(t: ADTerm, s: Player, own: list[str]) -> BasicAssignment | None:
    fixed: dict[str, bool] = {}
    if not _wins(t, s, fixed):
        return None
    for lab in own:
        fixed[lab] = False
        if not _wins(t, s, fixed):
            fixed[lab] = True
    return BasicAssignment(s, dict(fixed))


def satisfiable_for(t: ADTerm, s: Player, method: str = "auto") -> BasicAssignment | None:
    """Return the first successful assignment for ``s``, or ``None``.

    Candidates are ordered lexicographically over ``labels(t, s)`` with
    ``False < True``.  ``"structural"`` finds the same witness greedily and
    needs a linear term; ``"auto"`` uses it whenever the term is linear.
    """
    own = labels(t, s)
    if method == "auto":
        method = "structural" if is_linear(t) else "enumerate"
    if method == "structural":
        if not is_linear(t):
            raise ValueError("structural search needs every label to occur once")
        return _first_witness_structural(t, s, own)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    for values in itertools.product((False, True), repeat=len(own)):
        beta = BasicAssignment(s, dict(zip(own, values)))
        if successful_under_assignment(t, beta, s, method="enumerate"):
            return beta
    return None


def all_assignments(t: ADTerm, s: Player) -> Iterator[BasicAssignment]:
    own = labels(t, s)
    for values in itertools.product((False, True), repeat=len(own)):
        yield BasicAssignment(s, dict(zip(own, values)))
