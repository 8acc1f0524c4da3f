import math

import numpy as np
import pytest
from scipy import integrate

from jackmoments import cauchymoments as cm
from jackmoments.errors import DomainError
from jackmoments.hyperjack import SeriesControl, pfq_classical
from jackmoments.oracles import EnsembleSpec, inverse_fourier_even, quadrature_average


def test_charfn_finite_examples():
    for N in (1, 3):
        for t in (0.0, 0.4, -2.0):
            assert cm.charfn_finite(N, 0, 1.5, t).value == pytest.approx(math.exp(-N * abs(t)), rel=1e-15)
    for t in (0.3, 1.0, 2.5):
        assert cm.charfn_finite(1, 1, 0.8, t).value == pytest.approx(math.exp(-t) * (1 + t), rel=1e-14)
    a = cm.charfn_finite(2, 1, 2, 0.7).value
    assert a == pytest.approx(cm.charfn_dual(2, 1, 2, 0.7).value, rel=1e-12)


@pytest.mark.parametrize("N,s,beta", [(2, 1, 1), (3, 2, 2), (4, 3, 0.5), (2, 2, 4)])
def test_charfn_even_and_one_at_zero(N, s, beta):
    assert cm.charfn_finite(N, s, beta, 0.0).value == 1.0
    for t in (0.2, 1.7):
        assert cm.charfn_finite(N, s, beta, t).value == cm.charfn_finite(N, s, beta, -t).value


@pytest.mark.parametrize("N,s,beta", [(1, 2, 1), (2, 1, 2), (2, 2, 0.7), (3, 2, 4)])
def test_polynomial_part_has_degree_sN(N, s, beta):
    d = s * N
    ts = np.linspace(0.1, 1.1, d + 2)
    poly = np.array([cm.charfn_finite(N, s, beta, t).value * math.exp(N * t) for t in ts])
    assert abs(np.diff(poly, n=d + 1)[0]) < 1e-9 * np.abs(poly).max()
    assert abs(np.diff(poly[:-1], n=d)[0]) > 1e-8
    assert len(cm.charfn_poly_coefficients(N, s, beta)) == d + 1


def test_dual_examples():
    for beta in (1, 2, 4):
        for N in (1, 3):
            t = 0.8
            exact = math.exp(-N * t) * pfq_classical((-N,), (4 / beta,), -4 * t / beta).value
            assert cm.charfn_dual(N, 1, beta, t).value == pytest.approx(exact, rel=1e-13)
    assert cm.charfn_dual(3, 2, 1.0, 0.0).value == 1.0


def test_small_beta_limit():
    N, t = 3, 0.6
    v = cm.charfn_dual(N, 1, 1e-3, t).value
    assert v == pytest.approx(math.exp(-N * t) * (1 + t) ** N, rel=1e-2)


def test_limit_examples():
    assert cm.charfn_limit(0, 2, 1.3).value == pytest.approx(math.exp(-1.3), rel=1e-15)
    assert cm.charfn_limit(2, 1.5, 0.0).value == 1.0


def test_limit_trend():
    lim = cm.charfn_limit(1, 2, 1.0).value
    errs = [abs(cm.charfn_finite(N, 1, 2, 1.0 / N).value - lim) for N in (20, 40, 80)]
    assert errs[0] / errs[1] >= 1.7 and errs[1] / errs[2] >= 1.7


def test_density_examples():
    assert cm.density_limit(0, 1, 0.0).value == pytest.approx(1 / math.pi, rel=1e-15)
    assert cm.density_limit(1, 2, 0.0).value == pytest.approx((math.e**2 - 1) / (2 * math.pi), rel=1e-12)
    for beta in (1, 2, 4):
        for T in (0.0, 0.5, 2.0):
            series = cm.density_limit(1, beta, T).value
            assert series == pytest.approx(cm.density_limit_s1(beta, T).value, rel=1e-10)
            assert series == pytest.approx(cm.density_limit_elementary(beta, T), rel=1e-10)


WIDE = SeriesControl(max_weight=64)


def _density_integral(s, beta, f=lambda T: 1.0):
    g = lambda T: f(T) * cm.density_limit(s, beta, T, WIDE).value  # noqa: E731
    # split so the peak is resolved; the tail decays like T^-2 times the analytic part
    pieces = [(0, 1), (1, 5), (5, 50), (50, np.inf)]
    return 2 * sum(integrate.quad(g, a, b, limit=400, epsabs=1e-12, epsrel=1e-11)[0] for a, b in pieces)


@pytest.mark.parametrize("s,beta", [(1, 2), (2, 1), (1, 4)])
def test_density_integrates_to_one(s, beta):
    assert _density_integral(s, beta) == pytest.approx(1.0, abs=1e-6)


def test_density_moment_matches_moment_limit():
    h = 0.3
    q = _density_integral(1, 2, lambda T: abs(T) ** (2 * h))
    assert q == pytest.approx(cm.moment_limit(1, 2, h).value, abs=1e-6)


@pytest.mark.parametrize("T", [0.0, 1.0, 2.0])
def test_inverse_fourier_matches_density(T):
    v, _ = inverse_fourier_even(lambda t: cm.charfn_limit(1, 2, t).value, T, t_max=60.0)
    assert v == pytest.approx(cm.density_limit(1, 2, T).value, abs=1e-6)


def test_moment_examples():
    assert cm.moment_limit(2, 1.3, 0.0).value == pytest.approx(1.0, rel=1e-15)
    assert cm.moment_limit(0, 1, 0.25).value == pytest.approx(math.sqrt(2), rel=1e-14)
    r = cm.moment_limit(1, 2, 0.5)
    assert r.meta["half_integer_limit"]
    assert r.value == pytest.approx((math.e**2 - 5) / (2 * math.pi), rel=1e-6)


def test_moment_domain():
    for h in (-0.5, 1.5, 2.0, -1.0):
        with pytest.raises(DomainError):
            cm.moment_limit(1, 2, h)
    cm.moment_limit(1, 2, 1.49)


def test_moment_continuous_through_half_integer():
    s, beta = 2, 1.0
    mid = cm.moment_limit(s, beta, 1.5).value
    for d in (1e-3, -1e-3):
        assert cm.moment_limit(s, beta, 1.5 + d).value == pytest.approx(mid, rel=1e-2)


def test_joint_moment_examples():
    for beta in (0.5, 1, 2, 4):
        assert cm.joint_moment_limit(0, beta, 0.25).value == pytest.approx(1.0, rel=1e-14)
    assert cm.joint_moment_limit(1, 2, 0.3).value == pytest.approx(cm.joint_moment_s1(2, 0.3), rel=1e-10)
    exact = {1: (3 * math.e**4 - 103) / (768 * math.pi), 2: (math.e**2 - 5) / (4 * math.pi)}
    for beta, v in exact.items():
        assert cm.joint_moment_limit(1, beta, 0.5).value == pytest.approx(v, rel=1e-6)


def test_beta_four_checkpoint_consistent_with_2f2():
    # the 2F2 expression evaluates to (e - 2)/sqrt(pi) at beta = 4
    v = cm.joint_moment_s1_half(4)
    assert v == pytest.approx((math.e - 2) / math.sqrt(math.pi), rel=1e-12)
    assert cm.joint_moment_limit(1, 4, 0.5).value == pytest.approx(v, rel=1e-6)


def test_one_point_fractional_moment():
    s, beta, h = 1, 2.0, 0.3
    q = quadrature_average(EnsembleSpec.cauchy(1, beta, s), lambda x: abs(x) ** (2 * h)).value
    # the N = 1 density of x is the inverse Fourier transform of e^{-|t|}(1+|t|)
    direct = 2 * integrate.quad(lambda x: abs(x) ** (2 * h) * 2 / (math.pi * (1 + x * x) ** 2), 0, np.inf)[0]
    assert q == pytest.approx(direct, rel=1e-8)


def test_prefactor_examples():
    assert cm.prefactor_finite(7, 0, 2, 0.4).value == pytest.approx(2 ** -0.8, rel=1e-14)
    assert cm.prefactor_finite(3, 1, 2, 0.0).value == pytest.approx(4.0, rel=1e-14)
    r50 = cm.prefactor_asymptotic_ratio(50, 1, 2, 0.0)
    r100 = cm.prefactor_asymptotic_ratio(100, 1, 2, 0.0)
    assert abs(r100 - 1) < abs(r50 - 1) < 0.021


def test_determinant_examples():
    N, t = 3, 0.4
    s1 = math.exp(-N * t) * cm.laguerre_poly(N, 1, -2 * t) / cm.laguerre_poly(N, 1, 0.0)
    assert s1 == pytest.approx(cm.charfn_finite(N, 1, 2, t).value, rel=1e-10)
    assert cm.det_laguerre_beta2(2, 2, 0.0) != 0
    ts = np.linspace(0.0, 1.0, 6)
    vals = np.array([cm.det_laguerre_beta2(2, 2, t) for t in ts])
    assert abs(np.diff(vals, n=5)[0]) < 1e-9 * np.abs(vals).max()
    assert abs(np.diff(vals[:-1], n=4)[0]) > 1e-6


@pytest.mark.parametrize("N,s", [(3, 1), (2, 2), (4, 3)])
@pytest.mark.parametrize("t", [0.4, 1.2])
def test_determinant_matches_series(N, s, t):
    assert cm.charfn_det_beta2(N, s, t) == pytest.approx(cm.charfn_finite(N, s, 2, t).value, rel=1e-10)


@pytest.mark.parametrize("N,s,beta", [(200, 1, 2), (120, 2, 1), (300, 1, 4)])
def test_large_N_terms_do_not_overflow(N, s, beta):
    v = cm.charfn_finite(N, s, beta, 1.0 / N).value
    assert math.isfinite(v)
    assert v == pytest.approx(cm.charfn_limit(s, beta, 1.0).value, abs=2.0 / N)
