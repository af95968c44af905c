import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swdom.law import (
    R_CRIT,
    R_STAR,
    Condition,
    Shape,
    beta_of,
    check_order_properties,
    dominated_set,
    dominates_closed_form,
    dominates_equiv_form,
    f_eval,
    r_star,
    relation_matrix,
    sufficient_mulholland,
)


@pytest.mark.parametrize(
    "lam, mu, text",
    [
        (0, 7, "dominates (i)"),
        (5, "inf", "dominates (ii)"),
        ("inf", "inf", "dominates (ii)"),
        (3, 3, "dominates (iii)"),
        (2, 10, "dominates (iv)"),
        (10, 30, "dominates (iv)"),
        (16, 121, "dominates (v)"),
        (17, 121, "does-not-dominate"),
        (20, 100, "does-not-dominate"),
        (30, 10, "does-not-dominate"),
        ("inf", 5, "does-not-dominate"),
        (5, 0, "does-not-dominate"),
    ],
)
def test_closed_form_cases(lam, mu, text):
    assert str(dominates_closed_form(lam, mu)) == text


def test_first_matching_clause():
    # lam = mu above the critical value is settled by equality, not by f
    assert dominates_closed_form(50, 50).condition is Condition.EQUAL
    assert dominates_closed_form(R_CRIT, R_CRIT).condition is Condition.EQUAL
    assert dominates_closed_form(1, R_CRIT).condition is Condition.BELOW_CRITICAL


def test_constants():
    assert R_CRIT == pytest.approx((3 + 2 * math.sqrt(2)) ** 2, rel=1e-15)
    assert f_eval(16) == 121.0
    assert f_eval(1e6) == pytest.approx((2999 / 997) ** 2, rel=1e-14)
    assert f_eval(math.inf) == 9.0
    assert R_STAR == pytest.approx(6.00914, abs=1e-4)
    assert r_star(tol=1e-14) == pytest.approx(R_STAR, abs=1e-9)
    with pytest.raises(ValueError):
        f_eval(9)
    with pytest.raises(ValueError):
        r_star(7, 10)


@given(st.floats(9.0 + 1e-6, 1e8))
def test_involution(x):
    assert f_eval(f_eval(x)) == pytest.approx(x, rel=1e-8)


@given(st.floats(9.001, 1e6), st.floats(9.001, 1e6))
def test_f_decreasing(a, b):
    if a < b:
        assert f_eval(a) >= f_eval(b)


@given(st.floats(0.0, 1e4), st.floats(0.0, 1e4))
def test_equivalent_form(lam, mu):
    assert bool(dominates_closed_form(lam, mu)) == dominates_equiv_form(lam, mu)


@given(st.floats(0.0, 1e4), st.floats(0.0, 1e4))
def test_sufficient_implies_dominates(lam, mu):
    if sufficient_mulholland(lam, mu):
        assert dominates_closed_form(lam, mu)


def test_sufficiency_is_strictly_weaker():
    assert not sufficient_mulholland(2, 7)
    assert dominates_closed_form(2, 7)


def test_dominated_sets():
    s = dominated_set(5)
    assert s.shape is Shape.FULL_TAIL and 5 in s and 1e9 in s and "inf" in s and 4.9 not in s
    s = dominated_set(16)
    assert s.shape is Shape.INTERVAL_PLUS_INFINITY and s.beta == 121.0
    assert 121 in s and 121.5 not in s and math.inf in s
    assert str(s) == "[16, 121] U {inf}"
    s = dominated_set(50)
    assert s.shape is Shape.SELF_AND_INFINITY and 50 in s and 51 not in s
    assert str(dominated_set(9)) == "[9, inf]"
    with pytest.raises(ValueError):
        beta_of(40)


def test_order_properties_small():
    rep = check_order_properties([0, 1, 5, 16, 50, 121, math.inf])
    assert rep.ok and rep.violating_triple is None
    rel = relation_matrix([0, 16, 121])
    assert rel.tolist() == [[True, True, True], [False, True, True], [False, False, True]]


def test_order_properties_random():
    rng = np.random.default_rng(3)
    assert check_order_properties(np.exp(rng.uniform(-7, 9, 120))).ok
