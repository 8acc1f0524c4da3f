"""Generalised Pochhammer symbols and Jack polynomials at repeated arguments.

Conventions: ``C_kappa^(alpha)`` is normalised so that summing over all
partitions of weight p gives ``(x_1 + ... + x_n)^p``.  Its value at
``x_1 = ... = x_n = 1`` is ``alpha^k k! b / (d' h)`` with the three hook
products below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError
from .partitions import Partition, diagram_cells

ZERO_RTOL = 1e-14


def _check_alpha(alpha):
    if not (alpha > 0) or not math.isfinite(float(alpha)):
        raise ParameterError(f"Jack parameter alpha must be positive and finite, got {alpha!r}")


def is_zero_factor(x, scale=1.0) -> bool:
    """Exact zero, or zero up to rounding of the integer combination it came from."""
    return x == 0 or abs(x) <= ZERO_RTOL * max(1.0, abs(scale))


def rising(a, k: int):
    """Classical rising factorial ``(a)_k``; exact 0 when a factor vanishes."""
    out = 1
    for i in range(k):
        f = a + i
        if is_zero_factor(f, abs(a) + i):
            return 0 * out
        out *= f
    return out


def gen_pochhammer(a, kappa: Partition, alpha) -> float:
    """``[a]_kappa = prod_j (a - (j-1)/alpha)_{kappa_j}``."""
    _check_alpha(alpha)
    out = 1
    for j, kj in enumerate(kappa.parts):
        shift = j / alpha
        for i in range(kj):
            f = a - shift + i
            if is_zero_factor(f, abs(a) + shift + i):
                return 0 * out
            out *= f
    return out


@dataclass(frozen=True)
class HookProducts:
    b: float
    d_prime: float
    h: float


def hook_products(kappa: Partition, alpha, n: int) -> HookProducts:
    """Cell products b (depends on the variable count n), d' (upper hook), h (lower hook)."""
    _check_alpha(alpha)
    b = d = h = 1
    for c in diagram_cells(kappa):
        b *= alpha * c.coarm + n - c.coleg
        d *= alpha * (c.arm + 1) + c.leg
        h *= alpha * c.arm + c.leg + 1
    return HookProducts(b, d, h)


@lru_cache(maxsize=65536)
def _jack_at_ones_cached(parts: tuple[int, ...], alpha, n: int):
    kappa = Partition(parts)
    if kappa.length > n:
        return 0 * alpha
    hp = hook_products(kappa, alpha, n)
    k = kappa.weight
    return alpha**k * math.factorial(k) * hp.b / (hp.d_prime * hp.h)


def jack_at_ones(kappa: Partition, alpha, n: int):
    """``C_kappa^(alpha)((1)^n)``.

    Zero when the partition has exactly one row more than there are
    variables; more rows than that is rejected.
    """
    _check_alpha(alpha)
    if n < 0:
        raise ParameterError("variable count n must be non-negative")
    if kappa.length > n + 1:
        raise ParameterError(f"partition {kappa.parts} has more than n+1={n + 1} rows")
    return _jack_at_ones_cached(kappa.parts, alpha, int(n))


def jack_limit_coefficient(kappa: Partition, alpha):
    """``lim_{n->inf} C_kappa((1)^n) / n^{|kappa|} = alpha^k k! / (d' h)``."""
    hp = hook_products(kappa, alpha, 0)
    k = kappa.weight
    return alpha**k * math.factorial(k) / (hp.d_prime * hp.h)
