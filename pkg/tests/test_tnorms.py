import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from swdom.tnorms import (
    DRASTIC,
    LUKASIEWICZ,
    MINIMUM,
    PRODUCT,
    Classification,
    as_param,
    as_unit,
    dominance_gap,
    family_class,
    inner_terms,
    sides_AB,
    sugeno_weber,
    sw_gap,
    tsw_eval,
)

unit = st.floats(0.0, 1.0)
params = st.one_of(st.floats(0.0, 1e3), st.just(math.inf))


def test_family_members():
    assert tsw_eval(0, 0.3, 0.6) == 0.3 * 0.6
    assert tsw_eval(1, 0.7, 0.6) == pytest.approx(0.3, abs=1e-15)
    assert tsw_eval(1, 0.3, 0.6) == 0.0
    assert tsw_eval("inf", 0.3, 0.6) == 0.0
    assert tsw_eval(math.inf, 1.0, 0.6) == 0.6
    assert tsw_eval(math.inf, 0.6, 1.0) == 0.6


def test_basic_tnorms():
    assert MINIMUM(0.2, 0.7) == 0.2
    assert PRODUCT(0.5, 0.5) == 0.25
    assert LUKASIEWICZ(0.4, 0.5) == 0.0
    assert DRASTIC(0.9, 0.9) == 0.0
    assert DRASTIC(1.0, 0.9) == 0.9


def test_params_and_units():
    assert as_param("inf") == math.inf
    assert as_param(" Infinity ") == math.inf
    assert as_param(3) == 3.0
    for bad in (-1, float("nan"), "nan", "-0.5"):
        with pytest.raises(ValueError):
            as_param(bad)
    assert as_unit(1.0 + 1e-13) == 1.0
    assert as_unit(-1e-13) == 0.0
    with pytest.raises(ValueError):
        as_unit(1.01)
    with pytest.raises(ValueError):
        sugeno_weber(-2)
    with pytest.raises(ValueError):
        from swdom.tnorms import Kind, TNorm

        TNorm(Kind.MINIMUM, 2.0)


def test_classification():
    assert family_class(0) is Classification.STRICT
    assert family_class(0.5) is Classification.NILPOTENT
    assert family_class("inf") is Classification.NOT_CONTINUOUS


def test_str():
    assert str(sugeno_weber(2)) == "T_SW^2"
    assert str(DRASTIC) == "drastic"


@given(params, unit, unit, unit)
def test_axioms(lam, a, b, c):
    t = lambda p, q: tsw_eval(lam, p, q)  # noqa: E731
    eps = 1e-15 * (1 + lam if lam < math.inf else 1)  # round-off grows with lam
    assert t(a, b) == pytest.approx(t(b, a), abs=eps)
    assert t(a, 1.0) == pytest.approx(a, abs=eps)
    assert t(a, t(b, c)) == pytest.approx(t(t(a, b), c), abs=10 * eps)
    lo, hi = sorted((b, c))
    assert t(a, lo) <= t(a, hi) + 1e-15


@given(st.floats(0.0, 50.0), unit, unit)
def test_between_drastic_and_minimum(lam, a, b):
    v = tsw_eval(lam, a, b)
    assert DRASTIC(a, b) - 1e-15 <= v <= MINIMUM(a, b) + 1e-15


@given(st.floats(0.0, 50.0), st.floats(0.0, 50.0), unit, unit)
def test_family_is_decreasing(lam, mu, a, b):
    lo, hi = sorted((lam, mu))
    assert tsw_eval(hi, a, b) <= tsw_eval(lo, a, b) + 1e-12


def test_gap_on_faces_is_zero():
    # any coordinate equal to 1 makes both sides agree
    t1, t2 = sugeno_weber(20), sugeno_weber(100)
    for p in [(1, 0.3, 0.6, 0.9), (0.3, 1, 0.6, 0.9), (0.2, 0.3, 1, 0.9), (0.2, 0.3, 0.6, 1)]:
        assert dominance_gap(t1, t2, *p) == pytest.approx(0.0, abs=1e-15)


def test_gap_known_value():
    # frozen from the diagonal witness of falsify(20, 100)
    g = dominance_gap(sugeno_weber(20), sugeno_weber(100), 0.96737076795967603, *[0.96737076795967603] * 3)
    assert g == pytest.approx(-0.00022470600273294394, rel=1e-12)
    assert sw_gap(20.0, 100.0, *[0.96737076795967603] * 4) == g


def test_sides_and_inner_terms():
    x1, x2, x3, x4 = inner_terms(2, 10, 0.9, 0.8, 0.95, 0.85)
    assert x1 == pytest.approx(-1 * 0.95 * 0.9 + 2 * (0.95 + 0.9 - 1))
    a, b = sides_AB(2, 10, 0.9, 0.8, 0.95, 0.85)
    t1, t2 = sugeno_weber(2), sugeno_weber(10)
    assert max(a, 0) - max(b, 0) == pytest.approx(dominance_gap(t1, t2, 0.9, 0.8, 0.95, 0.85), abs=1e-15)
    with pytest.raises(ValueError):
        inner_terms(math.inf, 2, 0.5, 0.5, 0.5, 0.5)
