import pytest
from hypothesis import given, settings, strategies as st

from adtgames.adterm import (
    And, BasicAction, BasicAssignment, Counter, MissingLabelError, O, Or, P, Player,
    ValidationError, all_assignments, is_linear, labels, sat, sat_bits,
    satisfiable_for, successful_under_assignment, successful_under_profile, type_of,
    validate, variable_masks,
)
from conftest import (
    oracle_sat, oracle_satisfiable, oracle_wins_against_all, profile,
    profiles_for, terms,
)

E, F, G = BasicAction("E", P), BasicAction("F", P), BasicAction("G", O)


def test_player_negation_and_parse():
    assert -P is O and -O is P
    assert Player.parse("proponent") is P and Player.parse(" o ") is O
    with pytest.raises(ValueError):
        Player.parse("x")


def test_type_of(example1):
    assert type_of(example1) is P
    assert type_of(G) is O


def test_labels(example1):
    assert labels(example1, P) == ["E", "F"]
    assert labels(example1, O) == ["G"]
    assert labels(Or(P, (E, E, F)), P) == ["E", "F"]


class TestValidate:
    def test_well_typed(self, example1):
        assert validate(example1).ok
        assert validate(Counter(P, E, G)).ok

    def test_counter_with_swapped_children(self):
        report = validate(Counter(P, G, E))
        assert not report.ok
        # both complaints hang directly below the root counter
        assert sorted(i.path for i in report.issues) == [(0,), (1,)]

    def test_conjunction_second_child(self):
        report = validate(And(P, (E, G)))
        assert [i.path for i in report.issues] == [(1,)]

    def test_zero_arity_rejected(self):
        report = validate(Or(P, ()))
        assert [i.path for i in report.issues] == [()]

    def test_raise_if_invalid(self):
        with pytest.raises(ValidationError) as info:
            validate(And(P, (E, G))).raise_if_invalid()
        assert not info.value.report.ok

    @given(terms())
    def test_generated_terms_are_well_typed(self, t):
        assert validate(t).ok


class TestSat:
    def test_worked_example(self, example1):
        assert sat(example1, profile({"E": True, "F": True}, {"G": False})) is True

    def test_leaf_lookup(self):
        assert sat(E, profile({"E": True}, {})) is True

    def test_countermeasure_kills(self, example1):
        assert sat(example1, profile({"E": True, "F": True}, {"G": True})) is False

    def test_missing_label_names_first_in_preorder(self, example1):
        with pytest.raises(MissingLabelError) as info:
            sat(example1, profile({"F": True}, {}))
        assert info.value.label == "E" and info.value.owner is P

    def test_extra_entries_ignored(self, example1):
        beta = profile({"E": True, "F": True, "Q": False}, {"G": False, "E": True})
        assert sat(example1, beta) is True

    @given(terms().flatmap(lambda t: st.tuples(st.just(t), profiles_for(t))))
    def test_matches_independent_oracle(self, case):
        t, (p, o) = case
        assert sat(t, profile(p, o)) == oracle_sat(t, p, o)

    @given(terms().flatmap(lambda t: st.tuples(st.just(t), profiles_for(t))))
    def test_exactly_one_player_successful(self, case):
        t, (p, o) = case
        beta = profile(p, o)
        assert successful_under_profile(t, beta, P) != successful_under_profile(t, beta, O)


def test_variable_masks_are_truth_table_columns():
    masks = variable_masks(3)
    for row in range(8):
        bits = [bool(m >> row & 1) for m in masks]
        # row r is the r-th assignment in lexicographic order, first variable slowest
        assert bits == [bool(row >> (2 - i) & 1) for i in range(3)]


@given(terms())
@settings(max_examples=60)
def test_bit_parallel_matches_scalar(t):
    names = [(P, l) for l in labels(t, P)] + [(O, l) for l in labels(t, O)]
    masks = variable_masks(len(names))
    value = sat_bits(t, dict(zip(names, masks)))
    for row in range(1 << len(names)):
        env = {n: bool(m >> row & 1) for n, m in zip(names, masks)}
        p = {l: v for (s, l), v in env.items() if s is P}
        o = {l: v for (s, l), v in env.items() if s is O}
        assert bool(value >> row & 1) == oracle_sat(t, p, o)


class TestSuccessfulUnderAssignment:
    def test_proponent_loses_to_g(self, example1):
        beta = BasicAssignment(P, {"E": True, "F": True})
        assert successful_under_assignment(example1, beta, P) is False

    def test_opponent_with_g_always_wins(self, example1):
        beta = BasicAssignment(O, {"G": True})
        assert successful_under_assignment(example1, beta, O) is True

    def test_wrong_owner_rejected(self, example1):
        with pytest.raises(ValueError):
            successful_under_assignment(example1, BasicAssignment(O, {"G": True}), P)

    @given(terms(), st.sampled_from([P, O]), st.data())
    @settings(max_examples=150)
    def test_all_methods_match_oracle(self, t, s, data):
        mine = data.draw(st.fixed_dictionaries({l: st.booleans() for l in labels(t, s)}))
        expected = oracle_wins_against_all(t, mine, s)
        beta = BasicAssignment(s, mine)
        assert successful_under_assignment(t, beta, s, method="enumerate") == expected
        assert successful_under_assignment(t, beta, s) == expected
        if is_linear(t):
            assert successful_under_assignment(t, beta, s, method="structural") == expected


class TestSatisfiableFor:
    def test_opponent_witness(self, example1):
        assert satisfiable_for(example1, O).values == {"G": True}

    def test_proponent_unsatisfiable(self, example1):
        assert satisfiable_for(example1, P) is None

    @given(terms(), st.sampled_from([P, O]))
    @settings(max_examples=150)
    def test_witness_sound_and_complete(self, t, s):
        w = satisfiable_for(t, s)
        assert (w is not None) == oracle_satisfiable(t, s)
        if w is not None:
            assert set(w.values) == set(labels(t, s))
            assert oracle_wins_against_all(t, dict(w.values), s)

    @given(terms(), st.sampled_from([P, O]))
    @settings(max_examples=150)
    def test_structural_agrees_with_enumeration_on_linear_terms(self, t, s):
        if not is_linear(t):
            return
        a = satisfiable_for(t, s, method="structural")
        b = satisfiable_for(t, s, method="enumerate")
        assert a == b


def test_all_assignments_lexicographic(example1):
    got = [tuple(b.values.values()) for b in all_assignments(example1, P)]
    assert got == [(False, False), (False, True), (True, False), (True, True)]


def test_is_linear():
    assert is_linear(Or(P, (E, F)))
    assert not is_linear(Or(P, (E, E)))
