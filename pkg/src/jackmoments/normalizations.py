"""Gamma-product normalisations (Selberg, Morris, Laguerre, circular) kept in log space."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

LOG_2 = math.log(2.0)


@dataclass(frozen=True)
class GammaRatio:
    """``sign * exp(log_value)``; survives N ~ 100 without overflow."""

    log_value: float
    sign: int = 1

    @property
    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_value)

    def __float__(self):
        return self.value

    def __mul__(self, other: "GammaRatio") -> "GammaRatio":
        return GammaRatio(self.log_value + other.log_value, self.sign * other.sign)

    def __truediv__(self, other: "GammaRatio") -> "GammaRatio":
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero GammaRatio")
        return GammaRatio(self.log_value - other.log_value, self.sign * other.sign)

    @classmethod
    def from_float(cls, x: float) -> "GammaRatio":
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)


def log_gamma(x: float) -> tuple[float, int]:
    """``(log|Gamma(x)|, sign Gamma(x))`` including negative non-integer x."""
    if x <= 0 and x == math.floor(x):
        raise ParameterError(f"Gamma has a pole at {x!r}")
    lg = math.lgamma(x)
    if x > 0:
        return lg, 1
    # Gamma(x) < 0 exactly on the intervals (-1, 0), (-3, -2), ...
    return lg, -1 if math.floor(x) % 2 else 1


def gamma_ratio(num: list[float], den: list[float]) -> GammaRatio:
    """``prod Gamma(num) / prod Gamma(den)``."""
    lv, sg = 0.0, 1
    for x in num:
        l, s = log_gamma(x)
        lv += l
        sg *= s
    for x in den:
        l, s = log_gamma(x)
        lv -= l
        sg *= s
    return GammaRatio(lv, sg)


def selberg_S(N: int, lam1: float, lam2: float, lam: float) -> GammaRatio:
    """``S_N(l1, l2, l) = int_[0,1]^N prod u^l1 (1-u)^l2 |Delta|^(2l) du``."""
    num, den = [], []
    for j in range(N):
        num += [lam1 + 1 + j * lam, lam2 + 1 + j * lam, 1 + (j + 1) * lam]
        den += [lam1 + lam2 + 2 + (N + j - 1) * lam, 1 + lam]
    return gamma_ratio(num, den)


def morris_M(N: int, a: float, b: float, lam: float) -> GammaRatio:
    num, den = [], []
    for j in range(N):
        num += [lam * j + a + b + 1, lam * (j + 1) + 1]
        den += [lam * j + a + 1, lam * j + b + 1, 1 + lam]
    return gamma_ratio(num, den)


def cauchy_norm(N: int, s: float, beta: float) -> GammaRatio:
    """Normalisation of the Cauchy beta-ensemble with weight (1+x^2)^(-beta(N-1)/2-1-s)."""
    logv = (-beta * N * (N - 1) / 2 - 2 * N * s) * LOG_2 + N * math.log(math.pi)
    return GammaRatio(logv) * morris_M(N, s, s, beta / 2)


def circular_jacobi_norm(N: int, s: float, beta: float) -> GammaRatio:
    """``int_[0,2pi]^N prod |1-e^{i theta}|^(2s) |Delta(e^{i theta})|^beta dtheta``."""
    return GammaRatio(N * math.log(2 * math.pi)) * morris_M(N, s, s, beta / 2)


def laguerre_W(N: int, a: float, beta: float) -> GammaRatio:
    """``int_[0,inf)^N prod x^a e^{-x} |Delta|^beta dx``."""
    num, den = [], []
    for j in range(1, N + 1):
        num += [1 + j * beta / 2, a + 1 + (j - 1) * beta / 2]
        den += [1 + beta / 2]
    return gamma_ratio(num, den)


def cn_beta(N: int, beta: float) -> GammaRatio:
    """Circular beta-ensemble normalisation ``(2 pi)^N Gamma(beta N/2+1) / Gamma(1+beta/2)^N``."""
    return GammaRatio(N * math.log(2 * math.pi)) * gamma_ratio([beta * N / 2 + 1], [1 + beta / 2] * N)


def alpha0(N: int, s: float, h: float, beta: float) -> float:
    return beta * N * (N - 1) / 2 + N * (1 + 2 * s) - 2 * h


def alpha1(N: int, s: float, beta: float) -> float:
    return beta * (N - 1) / 2 + 1 + s
