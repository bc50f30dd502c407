"""Order types of letter sequences and the lift/lower maps.

The table in test_order_type_table was worked out by hand from the
splitting rules (split at minimal letters, fold the step-down function
over the head exponents) before running the code.
"""

import pytest
from hypothesis import given, settings

from conftest import worms
from rcworm.errors import NotInFragmentError
from rcworm.ordinal import (
    EPS0,
    OMEGA,
    ONE,
    ZERO,
    add,
    compare,
    from_int,
    omega_power,
    phi,
)
from rcworm.syntax import parse_ordinal, parse_worm
from rcworm.worm import (
    EMPTY,
    Worm,
    compare_at,
    in_fragment,
    lift,
    lower,
    order_type,
    order_type_at,
)


def w(text):
    return parse_worm(text)


def o(text):
    return parse_ordinal(text)


def test_order_type_table():
    cases = [
        ("[]", "0"),
        ("[0]", "1"),
        ("[0,0]", "2"),
        ("[1]", "w"),
        ("[1,0]", "w"),  # trailing smaller letter on the left block changes nothing
        ("[0,1]", "w+1"),
        ("[1,1]", "w^2"),
        ("[1,0,1]", "w*2"),
        ("[2]", "w^w"),
        ("[2,1]", "w^w"),  # [2,1] and [2] are mutually derivable,
        ("[1,2]", "w^(w+1)"),
        ("[2,2]", "w^(w^2)"),
        ("[3]", "w^(w^w)"),
        ("[w]", "eps0"),
        ("[w,0]", "eps0"),
        ("[0,w]", "eps0+1"),
        ("[w,w]", "eps(1)"),
    ]
    for text, want in cases:
        got = order_type(w(text))
        assert compare(got, o(want)) == 0, (text, want)


def test_order_type_epsilon_tower():
    # one transfinite letter already reaches the epsilon numbers
    assert order_type(w("[w+1]")) == phi(ONE, OMEGA)
    assert order_type(w("[w,w]")) == phi(ONE, ONE)
    assert order_type(w("[w*2]")) == phi(ONE, EPS0)
    assert order_type(w("[w^2]")) == phi(from_int(2), ZERO)
    assert order_type(w("[w^2+w]")) == phi(from_int(2), EPS0)
    assert order_type(w("[w^3]")) == phi(from_int(3), ZERO)
    assert order_type(w("[w^(w+1)]")) == phi(add(OMEGA, ONE), ZERO)


def test_in_fragment():
    assert in_fragment(ZERO, EMPTY)
    assert in_fragment(ZERO, w("[2,0,1]"))
    assert not in_fragment(ONE, w("[2,0,1]"))
    assert in_fragment(ONE, w("[2,1]"))
    assert in_fragment(OMEGA, w("[w]"))


def test_lift_prepends_to_every_letter():
    assert lift(OMEGA, w("[1,0]")) == w("[w+1,w]")
    assert lift(ZERO, w("[1]")) == w("[1]")
    assert lift(ONE, EMPTY) == EMPTY


def test_lower_requires_fragment_membership():
    assert lower(ONE, w("[2,1]")) == w("[1,0]")
    assert lower(OMEGA, w("[w]")) == w("[0]")
    with pytest.raises(NotInFragmentError):
        lower(ONE, w("[1,0]"))


def test_lift_lower_round_trip():
    for text in ["[]", "[0]", "[1,0]", "[2,1,2]", "[w]"]:
        v = w(text)
        assert lower(OMEGA, lift(OMEGA, v)) == v
        assert lower(ONE, lift(ONE, v)) == v


def test_order_type_at_levels():
    # at level 0 this is the plain order type
    assert order_type_at(ZERO, w("[2,2]")) == o("w^(w^2)")
    # at level 1 the worm [2,2] lowers to [1,1]
    assert order_type_at(ONE, w("[2,2]")) == o("w^2")
    assert order_type_at(from_int(2), w("[2,2]")) == from_int(2)
    with pytest.raises(NotInFragmentError):
        order_type_at(from_int(3), w("[2,2]"))
    # level 0 never fails
    assert order_type_at(ZERO, EMPTY) == ZERO


def test_compare_at():
    assert compare_at(ZERO, w("[0,1]"), w("[1]")) > 0
    assert compare_at(ONE, w("[2,1]"), w("[2]")) == 0  # both lower to length-one tails
    assert compare_at(ONE, w("[2,2]"), w("[2]")) > 0
    assert compare_at(from_int(2), w("[2]"), w("[2,2]")) < 0


@given(worms(max_length=5))
def test_order_type_zero_prefix_is_successor(v):
    # prepending a minimal letter adds exactly one
    grown = Worm((ZERO,) + v.letters)
    assert order_type(grown) == add(order_type(v), ONE)


@given(worms(max_length=5))
def test_order_type_invariant_under_lift(v):
    # lifting by b multiplies position inside the fragment, but the
    # order type at level b equals the original order type at level 0
    lifted = lift(ONE, v)
    assert order_type_at(ONE, lifted) == order_type(v)


@settings(max_examples=80)
@given(worms(max_length=4), worms(max_length=1))
def test_prepending_any_letter_strictly_increases(v, single):
    for letter in single.letters:
        grown = Worm((letter,) + v.letters)
        assert compare(order_type(grown), order_type(v)) > 0
