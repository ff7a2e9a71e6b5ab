from __future__ import annotations

from fractions import Fraction

import pytest

from kteams.semirings import (
    BOOLEAN,
    INF,
    NATURALS,
    NNRATIONALS,
    TROPICAL,
    VITERBI,
    CapabilityError,
)
from kteams.teams import (
    ArityError,
    KTeam,
    SchemaError,
    TeamError,
    WeightBag,
    lift_boolean,
    team_from_tsv,
)
from .conftest import table1


def test_support_all_rows(example_team):
    assert len(example_team.support()) == 3


def test_support_tropical_zero_is_inf():
    team = KTeam(("x", "y"), TROPICAL, ((0, 0), (1, 0)), (Fraction(0), Fraction(1)))
    assert len(team.support()) == 2
    dead = KTeam(("x",), TROPICAL, ((0,), (1,)), (INF, INF))
    assert dead.support() == ()


def test_marginals_match_running_example(example_team):
    assert example_team.marginal(("x",), (0,)) == 2
    assert example_team.marginal(("x",), (1,)) == 3
    assert example_team.marginal(("w",), (0,)) == 5
    assert example_team.marginal(("w",), (1,)) == 0
    assert example_team.marginal(("x", "y"), (0, 1)) == 1
    assert example_team.marginal(("x",), (99,)) == 0


def test_total_weight(example_team):
    assert example_team.total_weight() == 5
    empty = KTeam(("x",), NATURALS, (), ())
    assert empty.total_weight() == 0
    boolean = KTeam(("x",), BOOLEAN, ((0,), (1,)), (1, 1))
    assert boolean.total_weight() == 1


def test_value_sets(example_team):
    assert example_team.value_set(("x",)) == {(0,), (1,)}
    assert example_team.value_set(("w",)) == {(0,)}
    dead = KTeam(("x",), NATURALS, ((0,), (1,)), (0, 0))
    assert dead.value_set(("x",)) == set()


def test_marginal_multisets(example_team):
    assert example_team.marginal_multiset(("x",)) == WeightBag([2, 3])
    assert example_team.marginal_multiset(("w",)) == WeightBag([5])
    single = KTeam(("x",), NATURALS, ((7,),), (1,))
    assert single.marginal_multiset(("x",)) == WeightBag([1])


def test_weight_bag_inclusion():
    big = WeightBag([2, 2, 3])
    assert big.includes(WeightBag([2, 3]))
    assert big.includes(WeightBag([2, 2]))
    assert not big.includes(WeightBag([2, 2, 2]))
    assert not WeightBag([2]).includes(WeightBag([2, 2]))


def test_normalize():
    team = table1(NNRATIONALS, Fraction(1), Fraction(1), Fraction(3))
    normed = team.normalize()
    assert normed.weights == (Fraction(1, 5), Fraction(1, 5), Fraction(3, 5))
    assert normed.total_weight() == 1
    assert normed.normalize().weights == normed.weights
    pair = KTeam(("x",), NNRATIONALS, ((0,), (1,)), (Fraction(2), Fraction(2)))
    assert pair.normalize().weights == (Fraction(1, 2), Fraction(1, 2))


def test_normalize_gating(example_team):
    with pytest.raises(CapabilityError):
        example_team.normalize()
    zero = KTeam(("x",), NNRATIONALS, ((0,),), (Fraction(0),))
    with pytest.raises(TeamError):
        zero.normalize()


def test_lift_boolean():
    b = KTeam(("x", "y"), BOOLEAN, ((0, 0), (0, 1), (1, 1)), (1, 1, 0))
    lifted = lift_boolean(b, Fraction(1), VITERBI)
    assert lifted.rows == ((0, 0), (0, 1))
    assert set(lifted.weights) == {Fraction(1)}
    trop = lift_boolean(b, Fraction(0), TROPICAL)
    assert trop.semiring is TROPICAL and trop.weights == (Fraction(0), Fraction(0))
    assert len(lift_boolean(KTeam(("x",), BOOLEAN, (), ()), 1, BOOLEAN)) == 0
    with pytest.raises(TeamError):
        lift_boolean(b, INF, TROPICAL)
    with pytest.raises(CapabilityError):
        lift_boolean(lifted, Fraction(1), VITERBI)


def test_duplicate_rows_rejected():
    with pytest.raises(TeamError):
        KTeam(("x",), NATURALS, ((0,), (0,)), (1, 2))


def test_schema_errors(example_team):
    with pytest.raises(SchemaError):
        example_team.marginal(("nope",), (0,))
    with pytest.raises(ArityError):
        example_team.marginal(("x", "y"), (0,))
    with pytest.raises(SchemaError):
        KTeam((), NATURALS, (), ())
    with pytest.raises(SchemaError):
        KTeam(("x", "x"), NATURALS, ((0, 0),), (1,))


def test_full_tuple_marginal_recovers_weight(example_team):
    for row, w in zip(example_team.rows, example_team.weights):
        assert example_team.marginal(example_team.schema, row) == w


def test_marginal_sum_identity(example_team):
    # summing the marginals over any tuple of variables gives the total weight
    for vars_ in [("x",), ("y", "z"), ("x", "y", "z", "v", "w")]:
        total = NATURALS.sum(example_team.marginals(vars_).values())
        assert total == example_team.total_weight()


def test_value_set_is_support_projection(example_team):
    pos = example_team.positions(("y", "z"))
    projections = {tuple(r[p] for p in pos) for r in example_team.support()}
    assert example_team.value_set(("y", "z")) == projections


def test_tsv_round_trip(example_team):
    text = example_team.to_tsv()
    back = team_from_tsv(text, NATURALS)
    assert back.schema == example_team.schema
    assert back.rows == example_team.rows
    assert back.weights == example_team.weights


def test_tsv_tropical_literals():
    text = "x\ty\t#weight\n0\t0\tinf\n1\t0\t1/2\n"
    team = team_from_tsv(text, TROPICAL)
    assert team.weights == (INF, Fraction(1, 2))
    assert "inf" in team.to_tsv()


def test_tsv_errors():
    with pytest.raises(TeamError):
        team_from_tsv("x\ty\n0\t1\n", NATURALS)
    with pytest.raises(ArityError):
        team_from_tsv("x\t#weight\n0\t1\t2\n", NATURALS)
