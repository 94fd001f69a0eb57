"""Smoke checks for the python bindings: frozen values, exception mapping,
and report shapes. The heavy validation lives in the C++ suite."""
import math

import pytest

import normgeo as ng


def test_norms():
    s = ng.Space.lp(3, 2)
    assert ng.norm(s, [3.0, -4.0]) == pytest.approx((27 + 64) ** (1 / 3))
    assert ng.norm(ng.Space.l1(3), [1, -2, 0.5]) == 3.5
    assert ng.norm(ng.Space.linf(3), [1, -2, 0.5]) == 2.0


def test_space_construction_errors():
    with pytest.raises(ValueError):
        ng.Space.lp(0.5, 2)
    with pytest.raises(ValueError):
        ng.Space.regular_polygon(1)


def test_derivative_frozen_values():
    t = ng.derivative(ng.Space.linf(3), [1, 1, 1], [0, 0, 1])
    assert (t.rho_plus, t.rho_minus, t.rho) == (1.0, 0.0, 0.5)
    assert t.method == ng.DerivMethod.Exact
    assert t.bracket_width == 0.0

    t = ng.derivative(ng.Space.l1(3), [1, -2, 0], [3, 1, 5])
    assert t.rho_plus == 21.0 and t.rho_minus == -9.0 and t.rho == 6.0


def test_derivative_numeric_brackets_exact():
    s = ng.Space.lp(2, 2)
    exact = ng.derivative(s, [1, 2], [0.5, -0.25])
    num = ng.derivative_numeric(s, [1, 2], [0.5, -0.25])
    assert num.rho_minus - 1e-12 <= exact.rho <= num.rho_plus + 1e-12
    assert num.bracket_width <= 1e-6


def test_orthogonality_and_cone():
    s = ng.Space.regular_polygon(3)
    cone = ng.ortho_cone(s, [1.0, 0.0])
    for w in (cone.w1, cone.w2):
        assert ng.norm(s, w) == pytest.approx(1.0)
        assert ng.is_birkhoff(s, [1.0, 0.0], w)
    closed = ng.regular_polygon_cone(3, 1)
    assert cone.w1 == pytest.approx(closed.w1)
    assert cone.w2 == pytest.approx(closed.w2)


def test_gamma_values():
    assert ng.gamma_closed_form_2ngon(4) == pytest.approx(0.35355339059327373)
    hexagon = ng.Space.orthant_mixed(ng.MixPiece.l1(), ng.MixPiece.linf())
    r = ng.gamma_polyhedral_2d(hexagon)
    assert r.value == pytest.approx(0.5)
    assert r.method == ng.GammaMethod.ExactPolyhedral2D
    assert ng.GAMMA_L1N == 0.5 and ng.GAMMA_LINFN == 0.5


def test_gamma_estimate_smooth_small():
    r = ng.gamma_estimate(ng.Space.lp(3, 2), coarse=240, refine=40)
    assert r.value <= 1e-3
    assert r.lower_bound_only


def test_unsupported_family_maps_to_value_error():
    with pytest.raises(ng.UnsupportedFamily):
        ng.gamma_polyhedral_2d(ng.Space.lp(3, 2))
    assert issubclass(ng.UnsupportedFamily, ValueError)


def test_classification():
    c = ng.classify_l1_exact(["1/2", "0", "0", "-1/2"])
    assert c.left and not c.right
    c = ng.classify_linf([1.0, 0.5, 0.2, -1.0])
    assert c.right and not c.left
    exact = ng.normalize_l1_exact(["1", "2", "-3"])
    assert exact == ["1/6", "1/3", "-1/2"]
    with pytest.raises(Exception):
        ng.classify_l1([0.3, 0.3])  # not on the unit sphere


def test_oracle_and_probe():
    hexagon = ng.Space.orthant_mixed(ng.MixPiece.l1(), ng.MixPiece.linf())
    rep = ng.probe_space_symmetry(hexagon, trials=40, seed=11)
    assert not rep.symmetric
    assert abs(rep.forward_rho) <= 1e-9
    assert abs(rep.backward_rho) > 1e-3

    res = ng.oracle_left_symmetric(ng.Space.lp(2, 2), [0.6, 0.8], trials=50, seed=5)
    assert res.symmetric and res.counterexample is None


def test_alpha():
    s = ng.Space.lp(2, 2)
    assert ng.alpha_right(s, [1, 0], [2, 3]) == pytest.approx(-2.0)
    root = ng.alpha_left(s, [1, 0], [2, 3])
    assert root == pytest.approx(-2.0, abs=1e-6)


def test_monotone_report():
    rep = ng.verify_monotone(ng.Space.regular_polygon(5), [1.0, 0.2], samples=90)
    assert rep.monotone
    assert rep.samples == 90


def test_acceptance_entry_point():
    res = ng.run_acceptance(seed=3, trials=10)
    assert [r.id for r in res] == list(range(1, 13))
    assert all(r.passed for r in res)
