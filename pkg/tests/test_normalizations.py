import math

import pytest
from scipy import special

from jackmoments.cauchymoments import prefactor_finite, prefactor_from_normalizations
from jackmoments.errors import ParameterError
from jackmoments.normalizations import (
    GammaRatio,
    cauchy_norm,
    cn_beta,
    gamma_ratio,
    laguerre_W,
    log_gamma,
    morris_M,
    selberg_S,
)
from jackmoments.oracles import EnsembleSpec, quadrature_normalisation


def test_log_gamma_negative_arguments():
    for x in (-0.5, -1.5, -2.3, 0.7, 12.0):
        lv, sg = log_gamma(x)
        assert sg * math.exp(lv) == pytest.approx(math.gamma(x), rel=1e-13)
    with pytest.raises(ParameterError):
        log_gamma(-2.0)


def test_gamma_ratio_survives_large_arguments():
    r = gamma_ratio([400.5], [400.0])
    assert r.value == pytest.approx(math.exp(special.gammaln(400.5) - special.gammaln(400.0)), rel=1e-12)
    assert (GammaRatio.from_float(-3.0) * GammaRatio.from_float(2.0)).value == pytest.approx(-6.0)


@pytest.mark.parametrize("l1,l2,lam", [(0, 0, 0.3), (1.5, 0.2, 2.0), (-0.5, 3.0, 1.0)])
def test_selberg_one_point_is_euler_beta(l1, l2, lam):
    assert selberg_S(1, l1, l2, lam).value == pytest.approx(special.beta(l1 + 1, l2 + 1), rel=1e-13)


def test_selberg_trivial_and_quadrature():
    assert selberg_S(1, 0, 0, 1).value == pytest.approx(1.0, rel=1e-15)
    q = quadrature_normalisation(EnsembleSpec.jacobi(2, 2.0, 0.0, 0.0)).value
    assert selberg_S(2, 0, 0, 1).value == pytest.approx(q, rel=1e-10)


def test_selberg_telescoping():
    l1, l2, lam = 0.7, 1.2, 0.8
    for N in range(2, 7):
        j = N - 1
        factor = (math.gamma(l1 + 1 + j * lam) * math.gamma(l2 + 1 + j * lam) * math.gamma(1 + (j + 1) * lam)
                  / (math.gamma(l1 + l2 + 2 + (N + j - 1) * lam) * math.gamma(1 + lam)))
        # the denominators of the first N-1 factors also shift with N
        shift = math.prod(math.gamma(l1 + l2 + 2 + (N - 1 + i - 1) * lam) / math.gamma(l1 + l2 + 2 + (N + i - 1) * lam)
                          for i in range(N - 1))
        ratio = selberg_S(N, l1, l2, lam) / selberg_S(N - 1, l1, l2, lam)
        assert ratio.value == pytest.approx(factor * shift, rel=1e-12)


def test_morris_and_cauchy_one_point():
    assert morris_M(1, 1, 1, 0.7).value == pytest.approx(2.0, rel=1e-14)
    assert cauchy_norm(1, 0, 1.3).value == pytest.approx(math.pi, rel=1e-14)
    for s in (0.5, 1, 2.5):
        exact = math.sqrt(math.pi) * math.gamma(s + 0.5) / math.gamma(s + 1)
        assert cauchy_norm(1, s, 2.0).value == pytest.approx(exact, rel=1e-13)


def test_cauchy_two_points_quadrature():
    q = quadrature_normalisation(EnsembleSpec.cauchy(2, 2.0, 0.0)).value
    assert cauchy_norm(2, 0, 2.0).value == pytest.approx(q, rel=1e-8)
    q = quadrature_normalisation(EnsembleSpec.cauchy(2, 1.0, 0.5)).value
    assert cauchy_norm(2, 0.5, 1.0).value == pytest.approx(q, rel=1e-8)


def test_laguerre_W():
    for a in (0.0, 1.5, 4.0):
        assert laguerre_W(1, a, 1.7).value == pytest.approx(math.gamma(a + 1), rel=1e-13)
    q = quadrature_normalisation(EnsembleSpec.laguerre(2, 2.0, 1.0)).value
    assert laguerre_W(2, 1.0, 2.0).value == pytest.approx(q, rel=1e-8)
    assert (laguerre_W(3, 0, 2.0) / laguerre_W(3, 0, 2.0)).value == pytest.approx(1.0)


def test_cn_beta():
    assert cn_beta(1, 2.3).value == pytest.approx(2 * math.pi, rel=1e-14)
    assert cn_beta(2, 2.0).value == pytest.approx((2 * math.pi) ** 2 * 2, rel=1e-14)
    assert cn_beta(5, 1e-12).value == pytest.approx((2 * math.pi) ** 5, rel=1e-9)


def test_large_N_stays_finite():
    v = cauchy_norm(100, 2, 2.0)
    assert math.isfinite(v.log_value) and v.value == 0.0 or math.isfinite(v.value)


@pytest.mark.parametrize("N,s,beta,h", [(1, 1, 2, 0.3), (3, 2, 1, 0.5), (6, 1, 4, 1.2), (60, 3, 2, 0.0)])
def test_product_prefactor_equals_normalisation_ratio(N, s, beta, h):
    a = prefactor_finite(N, s, beta, h)
    b = prefactor_from_normalizations(N, s, beta, h)
    assert a.log_value == pytest.approx(b.log_value, rel=1e-10, abs=1e-10)
