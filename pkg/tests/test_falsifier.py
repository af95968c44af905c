import math

import numpy as np
import pytest

from swdom.falsifier import (
    ReducedWitness,
    SearchConfig,
    falsify,
    grid_min_gap,
    identity_residual,
    map_reduced_to_raw,
    reduced_search,
    reduced_terms,
    reduced_violation,
    refine_witness,
    to_reduced,
    unclamped_sides,
)
from swdom.tnorms import dominance_gap, sugeno_weber, sw_gap

SMALL = SearchConfig(grid_n=24)


def test_config_validation():
    for kw in ({"grid_n": 1}, {"tol": 0.0}, {"refine_iters": -1}, {"starts": 0}):
        with pytest.raises(ValueError):
            SearchConfig(**kw)


def test_grid_min_gap():
    assert grid_min_gap(2, 10)[0] >= -1e-12
    # lam == mu is zero up to round-off in the kernels
    assert grid_min_gap(2, 2)[0] >= -1e-14
    # the plain grid misses the narrow violation set of (20, 100); refinement finds it
    assert grid_min_gap(20, 100)[0] == 0.0
    with pytest.raises(ValueError):
        grid_min_gap(0, 5)
    with pytest.raises(ValueError):
        grid_min_gap(5, "inf")


def test_refine_never_worse():
    cfg = SearchConfig()
    g, start = grid_min_gap(50, 40, cfg)
    point, value = refine_witness(50, 40, start, cfg)
    assert value <= g
    assert value == sw_gap(50.0, 40.0, *point)
    assert refine_witness(2, 10, (0.3, 0.9, 0.7, 0.95))[1] >= -1e-12
    assert refine_witness(50, 40, start, cfg) == (point, value)


@pytest.mark.parametrize("lam, mu", [(0, 7), (7, "inf"), (3, 3), (2, 10), (16, 121), (0.5, 1000)])
def test_no_violation(lam, mu):
    r = falsify(lam, mu, SMALL)
    assert not r.violation_found and r.min_gap >= -SMALL.tol


def test_short_circuit():
    r = falsify(0, 7)
    assert r.min_gap == 0.0 and r.argmin == (1.0, 1.0, 1.0, 1.0)


@pytest.mark.parametrize("lam, mu", [(17, 121), (20, 100), (50, 40), (1000, 0.01), (40, 35)])
def test_violation(lam, mu):
    r = falsify(lam, mu, SMALL)
    assert r.violation_found
    w = r.witness
    assert w.gap < -1e-9
    assert all(0.0 < c < 1.0 for c in w.point)
    assert abs(dominance_gap(sugeno_weber(lam), sugeno_weber(mu), *w.point) - w.gap) <= 1e-14


def test_frozen_witnesses():
    w = falsify(20, 100).witness
    assert w.point == (0.967370767959676,) * 4
    assert w.gap == -0.00022470600273294394
    assert falsify(17, 121).witness.gap == pytest.approx(-9.49875323144056e-05, rel=1e-12)


def test_drastic_witness_on_face():
    # for lam = inf both sides vanish in the open cube
    r = falsify("inf", 5, SMALL)
    assert r.violation_found
    x, y, u, v = r.witness.point
    assert y == u == 1.0
    assert dominance_gap(sugeno_weber(math.inf), sugeno_weber(5), x, y, u, v) == r.witness.gap


def test_monotone_resolution():
    for lam, mu in [(17, 121), (50, 40), (30, 60)]:
        found = [falsify(lam, mu, SearchConfig(grid_n=n)).violation_found for n in (12, 16, 24, 32)]
        assert found == sorted(found)


def test_reduced_terms_examples():
    assert reduced_violation(0.5, 7, 0.5, 0.5, 0.5, 0.4) is False  # vt <= y
    assert reduced_search(2, 10, SMALL) is None
    assert reduced_search(0.5, 7, SMALL, use_ineq_a=False) is None
    w = reduced_search(17, 121, SMALL)
    assert w is not None and w.ineq_a < 0 and w.ineq_b < 0
    assert reduced_violation(17, 121, w.x, w.y, w.u, w.v_tilde)
    p = map_reduced_to_raw(17, 121, w)
    assert sw_gap(17.0, 121.0, *p) < 0
    with pytest.raises(ValueError):
        reduced_search(5, 5)


def test_lambda_at_most_one_is_false():
    rng = np.random.default_rng(4)
    for _ in range(2000):
        lam = rng.uniform(0, 1)
        mu = rng.uniform(lam, 100)
        x, y, u = rng.uniform(0, 1, 3)
        vt = y + rng.uniform(0, 1) * (1 + (lam - 1) * y)
        assert not reduced_violation(lam, mu, x, y, u, vt, use_ineq_a=False)


def test_substitution_round_trip():
    rng = np.random.default_rng(5)
    for _ in range(200):
        lam, mu = sorted(rng.uniform(0.1, 100, 2))
        raw = tuple(rng.uniform(0.01, 0.99, 4))
        x, y, u, vt = to_reduced(lam, *raw)
        a, b = reduced_terms(lam, mu, x, y, u, vt)
        back = map_reduced_to_raw(lam, mu, ReducedWitness(x, y, u, vt, a, b))
        assert np.allclose(back, raw, atol=1e-12, rtol=0)


def test_reduced_sign_equivalence():
    # ineqA < 0 iff B > 0, and ineqB < 0 iff A < B (A, B from unclamped inner terms)
    rng = np.random.default_rng(6)
    for _ in range(2000):
        lam, mu = sorted(rng.uniform(0.1, 100, 2))
        raw = tuple(rng.uniform(0.01, 0.99, 4))
        x, y, u, vt = to_reduced(lam, *raw)
        ia, ib = reduced_terms(lam, mu, x, y, u, vt)
        a, b = unclamped_sides(lam, mu, *raw)
        if min(abs(ia), abs(b)) > 1e-9:
            assert (ia < 0) == (b > 0)
        if min(abs(ib), abs(a - b)) > 1e-9:
            assert (ib < 0) == (a < b)


def test_map_rejects_outside():
    with pytest.raises(ValueError):
        map_reduced_to_raw(2, 10, ReducedWitness(0.5, 0.5, 0.5, 3.0, 0, 0))


def test_identity_residual():
    assert identity_residual(3, 7, 1, 1, 1, 1) == 0.0
    a, b = unclamped_sides(4.0, 4.0, 0.3, -1.2, 0.5, 1.7)
    assert a - b == pytest.approx(0, abs=1e-13)
    rng = np.random.default_rng(9)
    lam, mu = rng.uniform(0, 50, (2, 1000))
    pts = rng.uniform(-2, 2, (4, 1000))
    a, b = unclamped_sides(lam, mu, *pts)
    assert np.all(np.abs(identity_residual(lam, mu, *pts)) <= 1e-9 * (1 + np.abs(a - b)))
