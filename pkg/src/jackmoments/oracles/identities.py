"""Monte Carlo versions of the transformation identities."""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from ..cauchymoments import charfn_finite
from ..normalizations import alpha0, cauchy_norm, circular_jacobi_norm, cn_beta, laguerre_W
from ..results import MomentResult
from .ensembles import EnsembleSpec
from .mcmc import ChainConfig, estimate_statistic, mcmc_sample


def _scale(r: MomentResult, c: float, **meta) -> MomentResult:
    return MomentResult(r.value * c, r.abs_error_estimate * abs(c), r.truncation_weight, r.converged,
                        {**r.meta, **meta})


def circle_cauchy_joint_moment(N: int, s: float, beta: float, h: float, cfg: ChainConfig = ChainConfig()):
    """``F_{N,beta}(s,h) / 2^{alpha_0}`` estimated twice.

    circle: circular Jacobi samples, statistic |sum cot(theta_j/2)|^{2h}, constant
    from the circular normalisation.  cauchy: Cauchy samples, statistic
    |sum x_j|^{2h}, constant from the Cauchy normalisation.
    """
    a0 = alpha0(N, s, h, beta)
    cN = cn_beta(N, beta)
    cj = mcmc_sample(EnsembleSpec.circular_jacobi(N, beta, s), cfg)
    circ = estimate_statistic(cj, lambda th: np.sum(1.0 / np.tan(th / 2), axis=-1), h=h)
    c_circ = (circular_jacobi_norm(N, s, beta) / cN).value * 2.0 ** (-2 * h) / 2.0**a0
    cy = mcmc_sample(EnsembleSpec.cauchy(N, beta, s), replace(cfg, seed=cfg.seed + 1))
    cau = estimate_statistic(cy, lambda x: np.sum(x, axis=-1), h=h)
    c_cau = (cauchy_norm(N, s, beta) / cN).value
    return (_scale(circ, c_circ, acceptance=cj.meta["acceptance_mean"]),
            _scale(cau, c_cau, acceptance=cy.meta["acceptance_mean"]))


def laguerre_cauchy_charfn(N: int, s: int, beta: float, t: float, cfg: ChainConfig = ChainConfig()):
    """MC of ``(W_{N,s}/W_{N,2s}) <prod (2|t| + x_l)^s>`` over Laguerre a = s, and the exact
    ``e^{N|t|} charfn_finite``."""
    at = abs(t)
    ss = mcmc_sample(EnsembleSpec.laguerre(N, beta, s), cfg)
    est = estimate_statistic(ss, lambda x: np.prod((2 * at + x) ** s, axis=-1))
    c = (laguerre_W(N, s, beta) / laguerre_W(N, 2 * s, beta)).value
    exact = math.exp(N * at) * charfn_finite(N, s, beta, at).value
    return _scale(est, c, acceptance=ss.meta["acceptance_mean"]), exact


def laguerre_inverse_trace_estimate(N: int, a: float, beta: float, p: int, cfg: ChainConfig = ChainConfig()):
    """MC of ``N^{-p} <((beta/2) sum 1/x_j)^p>`` with x from weight x^a e^{-x}.

    The factor beta/2 converts to the weight x^a e^{-beta x/2}, the convention
    in which the scaled limit equals the Jacobi one.
    """
    ss = mcmc_sample(EnsembleSpec.laguerre(N, beta, a), cfg)
    return estimate_statistic(ss, lambda x: ((beta / 2) * np.sum(1.0 / x, axis=-1)) ** p / N**p)
