from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from kteams.semirings import (
    BOOLEAN,
    INF,
    NATURALS,
    NNRATIONALS,
    SEMIRINGS,
    TROPICAL,
    VITERBI,
    CapabilityError,
    ValueTypingError,
    check_axioms,
    get_semiring,
)

ALL = [BOOLEAN, NATURALS, NNRATIONALS, TROPICAL, VITERBI]


@pytest.mark.parametrize("K", ALL, ids=lambda k: k.id)
def test_check_axioms_all_consistent(K):
    report = check_axioms(K)
    assert report.ok, report.failures()


def test_tropical_ops():
    assert TROPICAL.add(Fraction(2), Fraction(5)) == 2
    assert TROPICAL.mul(Fraction(2), Fraction(5)) == 7
    assert TROPICAL.add(INF, Fraction(3)) == 3
    assert TROPICAL.mul(INF, Fraction(3)) is INF
    assert TROPICAL.sum([Fraction(3), Fraction(1), Fraction(7)]) == 1
    assert TROPICAL.sum([]) is INF


def test_naturals_and_boolean_add():
    assert NATURALS.add(1, 1) == 2
    assert BOOLEAN.add(1, 1) == 1
    assert NATURALS.sum([1, 1, 3]) == 5


@pytest.mark.parametrize("K", ALL, ids=lambda k: k.id)
def test_identities_and_annihilation(K):
    for a in K.sample_pool:
        assert K.mul(a, K.one) == a
        assert K.mul(K.one, a) == a
        assert K.mul(a, K.zero) == K.zero
        assert K.sum([a]) == a
    assert K.sum([]) == K.zero


@pytest.mark.parametrize("K", ALL, ids=lambda k: k.id)
def test_zero_min_order(K):
    for a in K.sample_pool:
        assert K.leq(K.zero, a)
        if K.leq(a, K.zero):
            assert a == K.zero


def test_tropical_order_is_dual():
    assert TROPICAL.leq(INF, Fraction(5))
    assert TROPICAL.leq(Fraction(5), Fraction(2))
    assert not TROPICAL.leq(Fraction(2), Fraction(5))
    # addition is the least upper bound of the dual order
    for a, b in product(TROPICAL.sample_pool, repeat=2):
        s = TROPICAL.plus(a, b)
        assert TROPICAL.le(a, s) and TROPICAL.le(b, s)
        assert s == a or s == b


def test_boolean_add_cancellation_witness():
    entry = check_axioms(BOOLEAN).entry("additively-cancellative")
    assert entry.holds is False and entry.declared is False
    a, b, c = entry.witness
    assert BOOLEAN.add(a, b) == BOOLEAN.add(a, c) and b != c


def test_absorbing_pair_flags():
    expected = {"boolean": True, "tropical": True, "viterbi": True,
                "natural": False, "nnrational": False}
    for name, want in expected.items():
        K = get_semiring(name)
        assert K.flags.has_absorbing_pair is want
        if want:
            a, b = K.absorbing_pair
            assert a != K.zero and b != K.zero and K.add(a, b) == a


def test_viterbi_absorbing_witness_in_pool():
    entry = check_axioms(VITERBI).entry("has-absorbing-pair")
    assert entry.holds and entry.consistent
    a, b = entry.witness
    assert VITERBI.add(a, b) == a


@pytest.mark.parametrize("K", ALL, ids=lambda k: k.id)
def test_positivity_on_pool(K):
    for a, b in product(K.sample_pool, repeat=2):
        if K.add(a, b) == K.zero:
            assert a == K.zero and b == K.zero
        if K.mul(a, b) == K.zero:
            assert a == K.zero or b == K.zero


@pytest.mark.parametrize("K", [NATURALS, NNRATIONALS], ids=lambda k: k.id)
def test_strict_monotonicity_when_cancellative(K):
    for a, b, c, d in product(K.sample_pool, repeat=4):
        if K.lt(a, b) and K.leq(c, d):
            assert K.lt(K.add(a, c), K.add(b, d))


def test_mixed_operand_typing_errors():
    with pytest.raises(ValueTypingError):
        NATURALS.add(1, Fraction(1, 2))
    with pytest.raises(ValueTypingError):
        VITERBI.add(Fraction(3, 2), Fraction(1, 2))
    with pytest.raises(ValueTypingError):
        BOOLEAN.mul(2, 1)
    with pytest.raises(ValueTypingError):
        NATURALS.check(INF)


def test_literals_round_trip():
    cases = {
        BOOLEAN: ["0", "1"],
        NATURALS: ["0", "7", "12"],
        NNRATIONALS: ["0", "1/2", "3"],
        TROPICAL: ["inf", "0", "5/2", "-3"],
        VITERBI: ["0", "1", "1/4"],
    }
    for K, lits in cases.items():
        for lit in lits:
            v = K.parse_literal(lit)
            assert K.parse_literal(K.format_literal(v)) == v


def test_bad_literals():
    with pytest.raises(ValueTypingError):
        BOOLEAN.parse_literal("2")
    with pytest.raises(ValueTypingError):
        NATURALS.parse_literal("1/2")
    with pytest.raises(ValueTypingError):
        VITERBI.parse_literal("3/2")
    with pytest.raises(ValueTypingError):
        get_semiring("lukasiewicz")


@given(
    st.fractions(min_value=0, max_value=100),
    st.fractions(min_value=0, max_value=100),
    st.fractions(min_value=0, max_value=100),
)
def test_nnrational_laws_random(a, b, c):
    K = NNRATIONALS
    assert K.add(a, b) == K.add(b, a)
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    if K.add(a, b) == K.add(a, c):
        assert b == c


def test_ordered_capability_is_gated():
    class Unordered(type(BOOLEAN)):
        flags = BOOLEAN.flags.__class__(
            **{**BOOLEAN.flags.__dict__, "totally_zero_min_ordered": False}
        )

    with pytest.raises(CapabilityError):
        Unordered().leq(0, 1)


def test_all_five_registered():
    assert sorted(SEMIRINGS) == [
        "boolean", "natural", "nnrational", "tropical", "viterbi",
    ]
