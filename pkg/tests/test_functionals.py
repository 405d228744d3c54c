import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from harmbohr import (AnalyticSplit, BracketError, ClassParams, ClosedForm, CoAnalyticSplit,
                      ImprovedBohr, Refined, Rogosinski, RogosinskiSquared, SelfPlusCoef,
                      SquaredCoef, coef_bound, distance_lower_bound, endpoint_signs, evaluate,
                      evaluate_closed_form)
from harmbohr.functionals import FUNCTIONAL_KINDS, certified_value

PARAMS = [ClassParams(1, 1, 0.5), ClassParams(1, 1, 0), ClassParams(0.5, 1, 0),
          ClassParams(0.5, 1, 0.25)]

VARIANTS = [ImprovedBohr(2), ImprovedBohr(3.5), SquaredCoef(), SelfPlusCoef(), AnalyticSplit(),
            CoAnalyticSplit(), Rogosinski(1, 2), Rogosinski(2, 5), RogosinskiSquared(2),
            RogosinskiSquared(4), Refined(1, 1, 1, 1), Refined(2, 5, 0.5, 2), Refined(1, 3, 2, 0.5)]

RS = np.linspace(0.0, 0.98, 50)


@pytest.mark.parametrize("f", VARIANTS, ids=lambda f: f.label())
@pytest.mark.parametrize("p", PARAMS, ids=lambda p: str(p.as_tuple()))
def test_strictly_increasing(f, p):
    values = [evaluate(f, p, r).value for r in RS]
    assert np.all(np.diff(values) > 0)


@pytest.mark.parametrize("f", VARIANTS, ids=lambda f: f.label())
@pytest.mark.parametrize("p", PARAMS, ids=lambda p: str(p.as_tuple()))
def test_value_at_origin(f, p):
    k = evaluate(f, p, 0.0)
    d = distance_lower_bound(p)
    assert abs(k.value + d.value) <= k.tail_bound + d.tail_bound


def test_improved_by_hand():
    p = ClassParams(1, 1, 0.5)
    r = 0.4
    m = np.arange(2, 200)
    c = 1.0 / m ** 2
    by_hand = r + np.sum(c * r ** m) + np.sum(c ** 2 * r ** (2 * m)) - 0.822467033424113
    assert evaluate(ImprovedBohr(2), p, r).value == pytest.approx(by_hand, abs=1e-13)


def test_variant_relations():
    p = ClassParams(0.5, 1, 0.25)
    d = distance_lower_bound(p).value
    for r in (0.1, 0.5, 0.9):
        co = CoAnalyticSplit().majorant(p, r, 1e-13).value
        assert SelfPlusCoef().majorant(p, r, 1e-13).value == pytest.approx(2 * co - r, abs=1e-12)
        assert AnalyticSplit().majorant(p, r, 1e-13).value == pytest.approx(2 * co, abs=1e-12)
        # n = 1, N = 2 Rogosinski is the self-plus sum
        assert evaluate(Rogosinski(1, 2), p, r).value == pytest.approx(
            evaluate(SelfPlusCoef(), p, r).value, abs=1e-12)
        # p = 1 improved sum coincides with the analytic split
        assert ImprovedBohr(1.0).majorant(p, r, 1e-13).value == pytest.approx(
            AnalyticSplit().majorant(p, r, 1e-13).value - r, abs=1e-12)
        assert RogosinskiSquared(2).majorant(p, r, 1e-13).value == pytest.approx(
            (co ** 2) + co - r, abs=1e-12)
        assert d > 0


@pytest.mark.parametrize("N", [1, 2])
def test_refined_f_term_vanishes(N):
    p = ClassParams(1, 1, 0)
    for mu in (0.1, 1.0, 50.0):
        f = Refined(1, N, mu, 1.0)
        assert f.t == 0
        assert f.f_term(p, 0.7) == 0.0
        assert evaluate(f, p, 0.3).value == evaluate(Refined(1, N, 1.0, 1.0), p, 0.3).value


def test_refined_f_term_uses_literal_first_bound():
    p = ClassParams(0.5, 1, 0.25)
    f = Refined(1, 3, 1.0, 1.0)
    assert f.t == 1
    c1 = 2 * (0.5 - 0.25) / 0.5
    assert f.f_term(p, 0.5) == pytest.approx(c1 ** 2 * 0.5 ** 3 / 0.5)
    f5 = Refined(1, 5, 1.0, 1.0)
    assert f5.f_term(p, 0.5) == pytest.approx(
        (c1 ** 2 + coef_bound(p, 2) ** 2) * 0.5 ** 5 / 0.5)


def test_refined_small_weights_limit():
    # mu, beta -> 0 with n = 1, N = 2 leaves r + 2 sum c_m r^m - d_low
    p = ClassParams(1, 1, 0.5)
    for r in np.linspace(0.05, 0.9, 12):
        small = evaluate(Refined(1, 2, 1e-12, 1e-12), p, r).value
        assert small == pytest.approx(evaluate(SelfPlusCoef(), p, r).value, abs=1e-8)


@pytest.mark.parametrize("cf", list(ClosedForm), ids=lambda c: c.tag)
def test_closed_forms_against_series(cf):
    worst = max(abs(evaluate(cf.functional, cf.params, r).value - evaluate_closed_form(cf, r))
                for r in np.linspace(0.05, 0.95, 19))
    if cf is ClosedForm.THM_SQUARED:
        # the printed equation is not the squared-coefficient series
        assert worst > 0.1
    else:
        assert worst < 1e-12


@pytest.mark.parametrize("cf", list(ClosedForm), ids=lambda c: c.tag)
def test_closed_form_continuous_at_origin(cf):
    assert evaluate_closed_form(cf, 0.0) == pytest.approx(evaluate_closed_form(cf, 1e-9), abs=1e-8)


def test_closed_form_lookup():
    assert ClosedForm.from_tag("thmsquared") is ClosedForm.THM_SQUARED
    assert ClosedForm.from_tag("COR_SELF") is ClosedForm.COR_SELF
    with pytest.raises(ValueError):
        ClosedForm.from_tag("nope")


@pytest.mark.parametrize("f", VARIANTS, ids=lambda f: f.label())
def test_endpoint_signs(f):
    ends = endpoint_signs(f, ClassParams(0.5, 1, 0.25))
    assert ends.sign_at_0 == -1 and ends.sign_near_1 == 1
    assert ends.upper == 1 - f.upper_eps


def test_certified_value_decides_sign():
    p = ClassParams(1, 1, 0.5)
    k, used = certified_value(ImprovedBohr(2), p, 0.6524422162)
    assert abs(k.value) > k.tail_bound
    assert used >= 1


def test_bracket_error_is_arithmetic():
    assert issubclass(BracketError, ArithmeticError)


@pytest.mark.parametrize("build", [lambda: ImprovedBohr(0.5), lambda: Rogosinski(0, 2),
                                   lambda: Rogosinski(1, 1), lambda: RogosinskiSquared(1),
                                   lambda: Refined(1, 0, 1, 1), lambda: Refined(1, 1, 0, 1),
                                   lambda: Refined(1, 1, 1, -1), lambda: Rogosinski(1.5, 2)])
def test_parameter_validation(build):
    with pytest.raises(ValueError):
        build()


@pytest.mark.parametrize("r", [-0.1, 1.0, 1.5])
def test_radius_domain(r):
    with pytest.raises(ValueError):
        evaluate(SquaredCoef(), PARAMS[0], r)


def test_labels_and_registry():
    assert Refined(2, 5, 0.5, 2).label() == "refined(n=2, N=5, mu=0.5, beta=2)"
    assert SquaredCoef().label() == "squared"
    assert set(FUNCTIONAL_KINDS) == {"improved", "squared", "self", "analytic", "coanalytic",
                                     "rogosinski", "rogosinski-squared", "refined"}


@settings(max_examples=30, deadline=None)
@given(st.floats(1.0, 8.0), st.floats(0.01, 0.95))
def test_improved_decreases_in_p(p, r):
    params = ClassParams(1, 1, 0)
    assert evaluate(ImprovedBohr(p + 0.5), params, r).value <= evaluate(ImprovedBohr(p), params, r).value + 1e-12
