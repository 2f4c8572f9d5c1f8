"""Special-function layer: gamma, digamma, completed zeta, divisor sums,
and the Whittaker solution pair, against frozen high-precision references."""

import cmath
import math

import pytest

import frozen_values as fv
from polymaass import (DEFAULT, DegenerateParameter, DomainError, PoleError,
                       WhittakerQuery, ZeroArgument, completed_zeta, digamma,
                       gamma, sigma_power, whittaker_m_plus, whittaker_w,
                       whittaker_w_mu_deriv, whittaker_w_mu_stack)
from polymaass.special import completed_zeta_laurent_regular


def rel_err(got, want):
    return abs(complex(got) - complex(want)) / max(abs(complex(want)), 1e-300)


# ---------------------------------------------------------------------------
# gamma / digamma

def test_gamma_frozen_values():
    assert rel_err(gamma(0.5 + 14.1j), fv.GAMMA_A) < 5e-14
    assert rel_err(gamma(-3.7 + 0.1j), fv.GAMMA_B) < 5e-14
    assert rel_err(gamma(8.5), fv.GAMMA_C) < 5e-14


def test_gamma_recurrence_and_reflection():
    for z in (0.3 + 0.7j, -2.6 + 1.1j, 4.4, 0.5 - 3.2j):
        assert rel_err(gamma(z + 1), z * gamma(z)) < 1e-13
    z = 0.3 - 0.4j
    lhs = gamma(z) * gamma(1 - z)
    rhs = cmath.pi / cmath.sin(cmath.pi * z)
    assert rel_err(lhs, rhs) < 1e-13


def test_gamma_poles():
    for z in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            gamma(z)


def test_digamma_frozen_and_recurrence():
    assert rel_err(digamma(3.7 - 2.2j), fv.DIGAMMA_A) < 1e-13
    assert rel_err(digamma(-2.3 + 0.4j), fv.DIGAMMA_B) < 1e-13
    for z in (0.4 + 0.9j, 2.1 - 3j):
        assert abs(digamma(z + 1) - digamma(z) - 1.0 / z) < 1e-13
    with pytest.raises(PoleError):
        digamma(-4.0)


# ---------------------------------------------------------------------------
# completed zeta

def test_completed_zeta_frozen_values():
    assert rel_err(completed_zeta(3.3), fv.ZHAT_A) < 1e-13
    assert rel_err(completed_zeta(0.5 + 3j), fv.ZHAT_B) < 1e-12
    assert rel_err(completed_zeta(-6.0), fv.ZHAT_C) < 1e-13
    assert rel_err(completed_zeta(-1.7 + 0.3j), fv.ZHAT_D) < 1e-12
    assert rel_err(completed_zeta(4.0), fv.ZHAT_H) < 1e-13


def test_completed_zeta_near_poles():
    # Laurent-window values straddling the poles at s = 1 and s = 0.
    assert rel_err(completed_zeta(1.05), fv.ZHAT_E) < 1e-12
    assert rel_err(completed_zeta(0.97 + 0.01j), fv.ZHAT_F) < 1e-12
    assert rel_err(completed_zeta(-0.03), fv.ZHAT_G) < 1e-12
    with pytest.raises(PoleError):
        completed_zeta(1.0)
    with pytest.raises(PoleError):
        completed_zeta(0.0)


def test_completed_zeta_functional_equation():
    for s in (0.3 + 2j, -1.2 + 0.4j, 2.6, 0.5 + 14j, -4.4 - 1j):
        v1 = completed_zeta(s)
        v2 = completed_zeta(1.0 - s)
        assert rel_err(v1, v2) < 1e-11


def test_completed_zeta_matches_factor_form():
    # zhat(s) = pi^(-s/2) Gamma(s/2) zeta(s); cross-check through the
    # frozen plain-zeta values on the right half-plane.
    s = 3.3
    assert rel_err(completed_zeta(s),
                   math.pi ** (-s / 2) * gamma(s / 2) * fv.ZETA_A) < 1e-12
    s = 0.5 + 14j
    pref = cmath.exp(-s / 2 * math.log(math.pi)) * gamma(s / 2)
    assert rel_err(completed_zeta(s), pref * fv.ZETA_B) < 1e-11


def test_laurent_regular_part_consistency():
    for eps in (0.05, -0.08, 0.02 + 0.03j, -0.001j):
        direct = completed_zeta(1.0 + eps) - 1.0 / eps
        assert abs(direct - completed_zeta_laurent_regular(eps)) < 1e-11


# ---------------------------------------------------------------------------
# divisor sums

def test_sigma_power():
    assert rel_err(sigma_power(12, 2.5 - 1j), fv.SIGMA_A) < 1e-13
    assert sigma_power(6, 1.0) == pytest.approx(12.0)    # 1+2+3+6
    assert sigma_power(7, 0.0) == pytest.approx(2.0)     # d(7)
    assert sigma_power(-6, 1.0) == pytest.approx(12.0)   # |n| convention
    with pytest.raises(ZeroArgument):
        sigma_power(0, 1.0)


# ---------------------------------------------------------------------------
# Whittaker W

def _w(kappa, mu, y):
    return whittaker_w(WhittakerQuery(kappa, mu, y))


def test_whittaker_w_frozen_values():
    assert rel_err(_w(1.0, 0.3, 5.0).value, fv.WHIT_A) < 5e-13
    assert rel_err(_w(-1.0, 0.8 + 0.3j, 3.0).value, fv.WHIT_B) < 5e-13
    assert rel_err(_w(2.0, 0.25 + 1j, 7.0).value, fv.WHIT_C) < 5e-13
    assert rel_err(_w(0.0, 0.3, 40.0).value, fv.WHIT_D) < 5e-13
    assert rel_err(_w(-2.0, 0.45, 14.0).value, fv.WHIT_E) < 5e-13
    assert rel_err(_w(3.0, 0.2, 9.0).value, fv.WHIT_F) < 5e-13


def test_whittaker_w_exponential_special_case():
    # W_{0,1/2}(y) = e^{-y/2} exactly.
    for y in (0.5, 1.0, 3.7, 12.0, 55.0):
        res = _w(0.0, 0.5, y)
        assert rel_err(res.value, math.exp(-y / 2.0)) < 1e-12


def test_whittaker_w_error_estimates_are_sane():
    for (kappa, mu, y, ref) in ((1.0, 0.3, 5.0, fv.WHIT_A),
                                (0.0, 0.3, 40.0, fv.WHIT_D)):
        res = _w(kappa, mu, y)
        assert res.abs_error_estimate < 1e-8 * abs(res.value)
        assert abs(res.value - ref) < max(10.0 * res.abs_error_estimate,
                                          1e-12 * abs(ref))


def test_whittaker_w_method_vocabulary():
    seen = set()
    for (kappa, mu, y) in ((0.0, 0.5, 3.0), (1.0, 0.3, 5.0),
                           (0.0, 0.3, 40.0), (0.0, 0.3, 2.0)):
        seen.add(_w(kappa, mu, y).method)
    allowed = {"terminating_series", "asymptotic_series", "quadrature",
               "recurrence_quadrature"}
    assert seen <= allowed
    assert _w(0.0, 0.3, 40.0).method == "asymptotic_series"
    assert _w(0.0, 0.5, 3.0).method == "terminating_series"


def test_whittaker_w_domain_checks():
    with pytest.raises(DomainError):
        WhittakerQuery(0.0, 0.3, -1.0)
    with pytest.raises(DomainError):
        WhittakerQuery(0.0, 0.3, 2.0, order=DEFAULT.max_order + 1)


# ---------------------------------------------------------------------------
# mu-derivatives

def test_mu_derivatives_frozen_values():
    d1 = whittaker_w_mu_deriv(WhittakerQuery(1.0, 0.3, 5.0, order=1)).value
    d2 = whittaker_w_mu_deriv(WhittakerQuery(1.0, 0.3, 5.0, order=2)).value
    assert rel_err(d1, fv.WMU1_A) < 1e-11
    assert rel_err(d2, fv.WMU2_A) < 1e-11
    d1 = whittaker_w_mu_deriv(WhittakerQuery(-1.0, 0.4 + 0.2j, 2.5, order=1)).value
    d2 = whittaker_w_mu_deriv(WhittakerQuery(-1.0, 0.4 + 0.2j, 2.5, order=2)).value
    assert rel_err(d1, fv.WMU1_B) < 1e-11
    assert rel_err(d2, fv.WMU2_B) < 1e-11


def test_mu_stack_matches_single_derivatives():
    stack = whittaker_w_mu_stack(1.0, 0.3, 5.0, 3)
    assert len(stack) == 4
    assert rel_err(stack[0], _w(1.0, 0.3, 5.0).value) < 1e-12
    assert rel_err(stack[1], fv.WMU1_A) < 1e-11
    assert rel_err(stack[2], fv.WMU2_A) < 1e-11


def test_mu_derivatives_even_in_mu_at_zero():
    # W is even in mu, so odd derivatives vanish at mu = 0.
    stack = whittaker_w_mu_stack(1.0, 0.0, 6.0, 4)
    scale = max(abs(stack[0]), abs(stack[2]))
    assert abs(stack[1]) < 1e-10 * scale
    assert abs(stack[3]) < 1e-10 * scale
    assert rel_err(stack[2], fv.WMU2_C) < 1e-10
    assert rel_err(stack[4], fv.WMU4_C) < 1e-9


# ---------------------------------------------------------------------------
# growing solution

def test_m_plus_frozen_values():
    assert rel_err(whittaker_m_plus(WhittakerQuery(0.0, 0.3, 2.0)).value,
                   fv.MPLUS_A) < 1e-12
    assert rel_err(whittaker_m_plus(WhittakerQuery(1.0, 0.45, 1.5)).value,
                   fv.MPLUS_B) < 1e-12
    assert rel_err(whittaker_m_plus(WhittakerQuery(-1.0, 0.2 + 0.5j, 3.0)).value,
                   fv.MPLUS_C) < 1e-12


def test_m_plus_degenerate_and_overflow():
    with pytest.raises(DegenerateParameter):
        whittaker_m_plus(WhittakerQuery(0.0, 0.5, 2.0))
    with pytest.raises(DegenerateParameter):
        whittaker_m_plus(WhittakerQuery(1.0, 1.0, 2.0))
    with pytest.raises(OverflowError):
        whittaker_m_plus(WhittakerQuery(0.0, 0.3, 1500.0))
