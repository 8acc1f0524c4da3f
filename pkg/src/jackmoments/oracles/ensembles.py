"""Log densities of the four beta-ensembles used as oracles."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError

KINDS = ("cauchy", "jacobi", "laguerre", "circular_jacobi")


@dataclass(frozen=True)
class EnsembleSpec:
    """One of: Cauchy(s), Jacobi(a, b), Laguerre(a), CircularJacobi(s), with N points and index beta.

    Weights (all times |Delta|^beta):
      cauchy           (1+x^2)^(-beta(N-1)/2-1-s)   on R
      jacobi           u^a (1-u)^b                   on (0,1)
      laguerre         x^a e^(-x)                    on (0,inf)
      circular_jacobi  |1-e^(i theta)|^(2s)          on [0, 2pi), Delta over e^(i theta)
    """

    kind: str
    N: int
    beta: float
    s: float = 0.0
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"unknown ensemble kind {self.kind!r}")
        if int(self.N) != self.N or self.N < 1:
            raise ParameterError("N must be a positive integer")
        if not self.beta > 0:
            raise ParameterError("beta must be positive")
        if self.kind in ("cauchy", "circular_jacobi") and not self.s > -0.5:
            raise ParameterError("Cauchy / circular Jacobi weights need s > -1/2")
        if self.kind == "jacobi" and not (self.a > -1 and self.b > -1):
            raise ParameterError("Jacobi weight needs a, b > -1")
        if self.kind == "laguerre" and not self.a > -1:
            raise ParameterError("Laguerre weight needs a > -1")

    @classmethod
    def cauchy(cls, N, beta, s):
        return cls("cauchy", N, beta, s=s)

    @classmethod
    def jacobi(cls, N, beta, a, b):
        return cls("jacobi", N, beta, a=a, b=b)

    @classmethod
    def laguerre(cls, N, beta, a):
        return cls("laguerre", N, beta, a=a)

    @classmethod
    def circular_jacobi(cls, N, beta, s):
        return cls("circular_jacobi", N, beta, s=s)

    @property
    def cauchy_exponent(self) -> float:
        return self.beta * (self.N - 1) / 2 + 1 + self.s

    # -- natural coordinates -------------------------------------------------

    def weight(self, x):
        """One-point weight (not logged), for quadrature."""
        x = np.asarray(x, dtype=float)
        if self.kind == "cauchy":
            return (1 + x * x) ** (-self.cauchy_exponent)
        if self.kind == "jacobi":
            return x**self.a * (1 - x) ** self.b
        if self.kind == "laguerre":
            return x**self.a * np.exp(-x)
        return np.abs(2 * np.sin(x / 2)) ** (2 * self.s)

    def pair(self, x, y):
        """|x - y| or the chord length |e^{ix} - e^{iy}| (not raised to beta)."""
        if self.kind == "circular_jacobi":
            return np.abs(2 * np.sin((x - y) / 2))
        return np.abs(x - y)

    # -- unconstrained coordinates used by the sampler ---------------------

    def to_natural(self, y):
        if self.kind == "jacobi":
            return 1.0 / (1.0 + np.exp(-y))
        if self.kind == "laguerre":
            return np.exp(y)
        if self.kind == "circular_jacobi":
            return np.mod(y, 2 * np.pi)
        return y

    def from_natural(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "jacobi":
            return np.log(x) - np.log1p(-x)
        if self.kind == "laguerre":
            return np.log(x)
        return x

    def single_log(self, y):
        """Log of the one-point weight plus the log Jacobian of the coordinate map."""
        if self.kind == "cauchy":
            return -self.cauchy_exponent * np.log1p(y * y)
        if self.kind == "jacobi":
            # u = sigmoid(y): log u = -log(1+e^-y), log(1-u) = -log(1+e^y), du/dy = u(1-u)
            lu = -np.logaddexp(0.0, -y)
            l1u = -np.logaddexp(0.0, y)
            return (self.a + 1) * lu + (self.b + 1) * l1u
        if self.kind == "laguerre":
            return (self.a + 1) * y - np.exp(y)
        return 2 * self.s * np.log(np.abs(2 * np.sin(y / 2)))

    def pair_log(self, y, z):
        return np.log(self.pair(self.to_natural(y), self.to_natural(z)))

    def initial_points(self, rng: np.random.Generator, n_chains: int) -> np.ndarray:
        N = self.N
        grid = (np.arange(N) + 0.5) / N
        jitter = rng.uniform(-0.25, 0.25, size=(n_chains, N)) / N
        u = np.clip(grid + jitter, 1e-3, 1 - 1e-3)
        if self.kind == "cauchy":
            x = np.tan(np.pi * (u - 0.5))
        elif self.kind == "jacobi":
            x = u
        elif self.kind == "laguerre":
            x = (self.a + 1) + 2 * self.beta * N * u
        else:
            x = 2 * np.pi * u
        return self.from_natural(x)
