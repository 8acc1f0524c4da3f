"""Trace statistic of the Cauchy beta-ensemble and the circular joint moments.

The Cauchy beta-ensemble has density proportional to
``prod_j (1+x_j^2)^(-beta(N-1)/2-1-s) |Delta(x)|^beta``; ``T = sum_j x_j``.
All t-dependent formulas are evaluated at |t| (the characteristic function
is even).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import DomainError, ParameterError
from .hyperjack import (
    DEFAULT_CONTROL,
    HyperSpec,
    SeriesControl,
    block_sum,
    pfq_alpha,
    pfq_classical,
    sum_weight_blocks,
)
from .jackspecial import rising
from .normalizations import (
    GammaRatio,
    alpha0,
    cauchy_norm,
    cn_beta,
    gamma_ratio,
)
from .results import MomentResult

HALF_INTEGER_WINDOW = 1e-6
HALF_INTEGER_EPS = 1e-4


def _check_s(s) -> int:
    if int(s) != s or s < 0:
        raise ParameterError(f"s must be a non-negative integer here, got {s!r}")
    return int(s)


def _check_beta(beta):
    if not beta > 0:
        raise ParameterError(f"beta must be positive, got {beta!r}")


def _check_N(N) -> int:
    if int(N) != N or N < 1:
        raise ParameterError(f"N must be a positive integer, got {N!r}")
    return int(N)


def _scaled(res: MomentResult, factor: float, **meta) -> MomentResult:
    return MomentResult(res.value * factor, res.abs_error_estimate * abs(factor), res.truncation_weight,
                        res.converged, {**res.meta, **meta})


# ---------------------------------------------------------------- finite N


def charfn_poly_coefficients(N: int, s: int, beta: float) -> list[float]:
    """Coefficients c_p of e^{N|t|} * charfn(t) = sum_p c_p |t|^p, p = 0..sN."""
    N, s = _check_N(N), _check_s(s)
    _check_beta(beta)
    alpha = 2.0 / beta
    out = []
    for p in range(s * N + 1):
        out.append(block_sum((-s,), (-2 * s,), alpha, N, p, max_part=s, x=2.0))
    return out


def charfn_finite(N: int, s: int, beta: float, t: float) -> MomentResult:
    """``E exp(i t T)`` for integer s, from the terminating N-variable 1F1 with alpha = 2/beta.

    The series is ``1F1^(2/beta)(-s; -2s; (2|t|)^N)`` restricted to
    kappa_1 <= s, length <= N, which is a polynomial of degree sN.
    """
    N, s = _check_N(N), _check_s(s)
    _check_beta(beta)
    at = abs(t)
    series = pfq_alpha(HyperSpec((-s,), (-2 * s,), 2.0 / beta, 2 * at, N))
    return _scaled(series, math.exp(-N * at), route="finite", degree=s * N)


def charfn_dual(N: int, s: int, beta: float, t: float) -> MomentResult:
    """Same quantity from the s-variable series ``1F1^(beta/2)(-N; 4s/beta; (-4|t|/beta)^s)``."""
    N, s = _check_N(N), _check_s(s)
    _check_beta(beta)
    at = abs(t)
    if s == 0:
        return MomentResult(math.exp(-N * at), 0.0, 0, True, {"route": "dual", "terminating": True})
    series = pfq_alpha(HyperSpec((-N,), (4 * s / beta,), beta / 2.0, -4 * at / beta, s))
    return _scaled(series, math.exp(-N * at), route="dual")


# ---------------------------------------------------------------- N -> infinity


@lru_cache(maxsize=4096)
def _limit_block(s: int, beta: float, p: int) -> float:
    """``sum_{|kappa|=p, l<=s} C_kappa^(beta/2)((1)^s) / [4s/beta]_kappa``."""
    return block_sum((), (4 * s / beta,), beta / 2.0, s, p)


def charfn_limit(s: int, beta: float, t: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """``lim_N charfn(N, s, beta, t/N) = e^{-|t|} 0F1^(beta/2)(; 4s/beta; (4|t|/beta)^s)``."""
    s = _check_s(s)
    _check_beta(beta)
    at = abs(t)
    if s == 0:
        return MomentResult(math.exp(-at), 0.0, 0, True, {"route": "limit"})
    x = 4 * at / beta

    def block(p):
        return _limit_block(s, beta, p) * x**p / math.factorial(p)

    res = sum_weight_blocks(block, ctrl, label="0F1^(beta/2)")
    return _scaled(res, math.exp(-at), route="limit")


def density_limit(s: int, beta: float, T: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """Density of lim T/N, by term-wise Laplace transform of the limiting characteristic function."""
    s = _check_s(s)
    _check_beta(beta)
    z = complex(1.0, T)
    if s == 0:
        return MomentResult(1.0 / (math.pi * (1 + T * T)), 0.0, 0, True, {"route": "series"})
    w = 4.0 / (beta * z)

    def block(p):
        return _limit_block(s, beta, p) * w**p

    res = sum_weight_blocks(block, ctrl, label="density series")
    val = (res.value / z).real / math.pi
    return MomentResult(val, res.abs_error_estimate / (math.pi * abs(z)), res.truncation_weight, res.converged,
                        {**res.meta, "route": "series"})


def density_limit_s1(beta: float, T: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """s = 1 closed form ``(1/pi) Re[(1+iT)^-1 1F1(1; 4/beta; (4/beta)/(1+iT))]``."""
    _check_beta(beta)
    z = complex(1.0, T)
    res = pfq_classical((1.0,), (4.0 / beta,), (4.0 / beta) / z, ctrl)
    val = (res.value / z).real / math.pi
    return MomentResult(val, res.abs_error_estimate / (math.pi * abs(z)), res.truncation_weight, res.converged,
                        {**res.meta, "route": "1F1"})


def density_limit_elementary(beta: int, T: float) -> float:
    """Elementary s = 1 densities for beta in {1, 2, 4}."""
    u = 1.0 + T * T
    if beta == 1:
        arg = 4 * T / u
        return (-39 + 3 * T * T) / (32 * math.pi) + 3 / (32 * math.pi) * math.exp(4 / u) * (
            (1 - T * T) * math.cos(arg) + 2 * T * math.sin(arg))
    if beta == 2:
        return (-1 + math.exp(2 / u) * math.cos(2 * T / u)) / (2 * math.pi)
    if beta == 4:
        arg = T / u
        return math.exp(1 / u) / (math.pi * u) * (math.cos(arg) - T * math.sin(arg))
    raise ParameterError("elementary forms exist only for beta in {1, 2, 4}")


def _nearest_half_odd(h: float) -> float | None:
    k = math.floor(h)
    c = k + 0.5
    if k >= 0 and abs(h - c) <= HALF_INTEGER_WINDOW:
        return c
    return None


def _moment_series(s: int, beta: float, h: float, ctrl: SeriesControl) -> MomentResult:
    x = 4.0 / beta
    two_h = 2 * h
    term_at = None
    if abs(two_h - round(two_h)) <= 1e-14 and round(two_h) >= 0:
        term_at = int(round(two_h))

    def block(p):
        return rising(-two_h, p) / math.factorial(p) * x**p * _limit_block(s, beta, p)

    return sum_weight_blocks(block, ctrl, term_at, label="moment series")


def moment_limit(s: int, beta: float, h: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """``m_inf(h) = int |T|^{2h} P_inf(T) dT`` for -1/2 < h < s + 1/2.

    The 1/cos(pi h) pole at half-odd h is removable; there the value is the
    mean of h +/- 1e-4 (flagged as ``half_integer_limit`` in meta).
    """
    s = _check_s(s)
    _check_beta(beta)
    if not (-0.5 < h < s + 0.5):
        raise DomainError(f"moment_limit requires -1/2 < h < s + 1/2 = {s + 0.5}, got h={h!r}")
    c = _nearest_half_odd(h)
    if c is not None:
        lo = moment_limit(s, beta, c - HALF_INTEGER_EPS, ctrl)
        hi = moment_limit(s, beta, c + HALF_INTEGER_EPS, ctrl)
        val = 0.5 * (lo.value + hi.value)
        return MomentResult(val, max(lo.abs_error_estimate, hi.abs_error_estimate) + abs(hi.value - lo.value) * 1e-4,
                            max(lo.truncation_weight, hi.truncation_weight), lo.converged and hi.converged,
                            {"half_integer_limit": True, "eps": HALF_INTEGER_EPS, "center": c})
    res = _moment_series(s, beta, h, ctrl)
    return _scaled(res, 1.0 / math.cos(math.pi * h), half_integer_limit=False)


def limit_prefactor(s: int, beta: float, h: float) -> float:
    """``2^{-2h} prod_{j=1}^s Gamma(2j/beta) / Gamma(2(s+j)/beta)``."""
    g = gamma_ratio([2 * j / beta for j in range(1, s + 1)], [2 * (s + j) / beta for j in range(1, s + 1)])
    return 2.0 ** (-2 * h) * g.value


def joint_moment_limit(s: int, beta: float, h: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """``lim_N N^{-2s^2/beta - 2h} F_{N,beta}(s, h)``."""
    s = _check_s(s)
    m = moment_limit(s, beta, h, ctrl)
    return _scaled(m, limit_prefactor(s, beta, h), moment=m.value)


def joint_moment_s1(beta: float, h: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """s = 1 closed form via the classical ``1F1(-2h; 4/beta; 4/beta)``."""
    f = pfq_classical((-2 * h,), (4 / beta,), 4 / beta, ctrl).value
    return limit_prefactor(1, beta, h) * f / math.cos(math.pi * h)


def joint_moment_s1_half(beta: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """s = 1, h = 1/2 value through the classical 2F2(1, 1; 3, 4/beta + 2; 4/beta)."""
    f22 = pfq_classical((1.0, 1.0), (3.0, 4 / beta + 2), 4 / beta, ctrl).value
    g = math.gamma(2 / beta) / math.gamma(4 / beta)
    return g * (1 / math.pi - 1 / (2 * math.pi) / (1 + beta / 4) * f22)


# ---------------------------------------------------------------- finite-N prefactor


def prefactor_finite(N: int, s: int, beta: float, h: float) -> GammaRatio:
    """``2^{alpha_0} N_N^(Cy) / C_{N,beta}`` in product form for integer s."""
    N, s = _check_N(N), _check_s(s)
    num, den = [], []
    for j in range(1, s + 1):
        num += [2 * (s + j) / beta + N, 2 * j / beta]
        den += [2 * j / beta + N, 2 * (s + j) / beta]
    return GammaRatio(-2 * h * math.log(2.0)) * gamma_ratio(num, den)


def prefactor_from_normalizations(N: int, s: float, beta: float, h: float) -> GammaRatio:
    """The same constant assembled from the Cauchy and circular normalisations (any real s)."""
    return GammaRatio(alpha0(N, s, h, beta) * math.log(2.0)) * cauchy_norm(N, s, beta) / cn_beta(N, beta)


def prefactor_asymptotic_ratio(N: int, s: int, beta: float, h: float) -> float:
    """prefactor_finite / (its N-free part * N^{2 s^2 / beta}); tends to 1."""
    pf = prefactor_finite(N, s, beta, h)
    base = math.log(limit_prefactor(s, beta, h)) + (2 * s * s / beta) * math.log(N)
    return math.exp(pf.log_value - base)


# ---------------------------------------------------------------- beta = 2 determinant


def laguerre_poly(n: int, a: float, x: float) -> float:
    """Generalised Laguerre ``L_n^(a)(x)`` by the three-term recurrence; 0 for n < 0."""
    if n < 0:
        return 0.0
    prev, cur = 1.0, 1.0 + a - x
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1)
    return cur


def det_laguerre_beta2(N: int, s: int, t: float) -> float:
    """``det[L^{2s-1}_{N+s-1-j-k}(-2|t|)]_{j,k=0..s-1}``, a polynomial of degree sN in |t|."""
    N, s = _check_N(N), _check_s(s)
    if s == 0:
        return 1.0
    x = -2.0 * abs(t)
    mat = np.array([[laguerre_poly(N + s - 1 - j - k, 2 * s - 1, x) for k in range(s)] for j in range(s)])
    return float(np.linalg.det(mat))


def charfn_det_beta2(N: int, s: int, t: float) -> float:
    """beta = 2 characteristic function from the Laguerre determinant, normalised at t = 0."""
    return math.exp(-N * abs(t)) * det_laguerre_beta2(N, s, t) / det_laguerre_beta2(N, s, 0.0)
