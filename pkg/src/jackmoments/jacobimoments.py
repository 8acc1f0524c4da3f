"""Moments of sum_j 1/u_j in the Jacobi beta-ensemble.

Density ``prod u^a (1-u)^b |Delta(u)|^beta`` on (0,1)^N, normalised by
``selberg_S(N, a, b, beta/2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .jackspecial import gen_pochhammer, hook_products, jack_at_ones
from .normalizations import gamma_ratio
from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class JacobiParams:
    N: int
    a: float
    b: float
    beta: float

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ParameterError("N must be a positive integer")
        if not (self.a > -1 and self.b > -1):
            raise ParameterError("Jacobi exponents need a, b > -1")
        if not self.beta > 0:
            raise ParameterError("beta must be positive")

    @property
    def alpha(self) -> float:
        return 2.0 / self.beta


def kadell_kaneko_avg(N: int, lam1: float, lam2: float, alpha: float, kappa: Partition) -> float:
    """Jacobi average of ``C_kappa^(alpha)(u)`` with weight u^lam1 (1-u)^lam2 |Delta|^{2/alpha}."""
    if kappa.length > N:
        return 0.0
    num = gen_pochhammer(lam1 + (N - 1) / alpha + 1, kappa, alpha)
    den = gen_pochhammer(lam1 + lam2 + 2 * (N - 1) / alpha + 2, kappa, alpha)
    if den == 0:
        raise ParameterError(f"pole in the Kadell-Kaneko average at kappa={kappa.parts}")
    return jack_at_ones(kappa, alpha, N) * num / den


def _check_p(a, p):
    if int(p) != p or p < 0:
        raise ParameterError("p must be a non-negative integer")
    if p >= a + 1:
        raise DomainError(f"moment of order p={p} diverges unless p < a + 1 = {a + 1}")


def _row_factor_small(a, beta, kappa: Partition) -> float:
    """``prod_{j>=0} Gamma(a + beta j/2 + 1 - kappa_{j+1}) / Gamma(a + beta j/2 + 1)``."""
    num = [a + beta * j / 2 + 1 - k for j, k in enumerate(kappa.parts)]
    den = [a + beta * j / 2 + 1 for j in range(kappa.length)]
    return gamma_ratio(num, den).value


def inv_moment_finite(params: JacobiParams, p: int) -> float:
    """``< (sum_j 1/u_j)^p >`` as a sum over partitions of p with at most N rows."""
    N, a, b, beta = params.N, params.a, params.b, params.beta
    _check_p(a, p)
    total = []
    for kappa in enumerate_partitions(p, max_length=N):
        big_num = [a + b + beta * (N + j - 1) / 2 + 2 for j in range(kappa.length)]
        big_den = [a + b + beta * (N + j - 1) / 2 + 2 - k for j, k in enumerate(kappa.parts)]
        total.append(jack_at_ones(kappa, params.alpha, N) * _row_factor_small(a, beta, kappa)
                     * gamma_ratio(big_num, big_den).value)
    return math.fsum(total)


def inv_mean_closed_form(params: JacobiParams) -> float:
    """``< sum_j 1/u_j > = N (a + b + 1 + beta(N-1)/2) / a``."""
    N, a, b, beta = params.N, params.a, params.b, params.beta
    if not a > 0:
        raise DomainError("the mean of sum 1/u_j needs a > 0")
    return N * (a + b + 1 + beta * (N - 1) / 2) / a


def inv_moment_limit(a: float, beta: float, p: int) -> float:
    """``lim_N N^{-2p} < (sum_j 1/u_j)^p >``; independent of b."""
    _check_p(a, p)
    alpha = 2.0 / beta
    total = []
    for kappa in enumerate_partitions(p):
        hp = hook_products(kappa, alpha, 0)
        total.append(math.factorial(p) / (hp.d_prime * hp.h) * _row_factor_small(a, beta, kappa))
    return math.fsum(total)


def laguerre_trace_moment_limit(a: float, beta: float, p: int) -> float:
    """Scaled Laguerre moment ``lim_N N^{-p} < (sum_j 1/x_j)^p >`` for weight x^a e^{-beta x/2}.

    Equal to the Jacobi limit; see :func:`jackmoments.oracles.laguerre_inverse_trace_estimate`
    for the Monte Carlo counterpart.
    """
    if p == 0:
        _check_p(a, p)
        return 1.0
    return inv_moment_limit(a, beta, p)


def inv_moment_via_kadell(params: JacobiParams, p: int, q: int | None = None) -> float:
    """Same moment assembled term by term through the reversed-partition identity.

    For each kappa, ``C_kappa(1/u) = prod u^{-q} C_{(q)^N - kappa^R}(u)`` and the
    Kadell-Kaneko average is taken with a shifted to a - q.
    """
    N, a, b, beta = params.N, params.a, params.b, params.beta
    _check_p(a, p)
    alpha = params.alpha
    q = p if q is None else q
    total = []
    for kappa in enumerate_partitions(p, max_length=N):
        padded = kappa.padded(N)
        mu = Partition(tuple(q - padded[N - 1 - i] for i in range(N)))
        # ratio of Selberg normalisations S_N(a-q, b) / S_N(a, b)
        num, den = [], []
        for j in range(N):
            num += [a - q + 1 + j * beta / 2, a + b + 2 + (N + j - 1) * beta / 2]
            den += [a + 1 + j * beta / 2, a - q + b + 2 + (N + j - 1) * beta / 2]
        ratio = gamma_ratio(num, den).value
        lam1 = a - q
        c1 = gen_pochhammer(lam1 + (N - 1) / alpha + 1, mu, alpha)
        c2 = gen_pochhammer(lam1 + b + 2 * (N - 1) / alpha + 2, mu, alpha)
        total.append(ratio * jack_at_ones(kappa, alpha, N) * c1 / c2)
    return math.fsum(total)
