"""Hypergeometric series based on Jack polynomials, at repeated arguments.

With the argument ``x`` repeated ``m`` times, homogeneity gives
``C_kappa((x)^m) = x^|kappa| C_kappa((1)^m)``, so a series is a power
series in ``x`` whose coefficients are sums over all partitions of one
weight.  Everything here works block by block in the weight.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath

from .errors import ParameterError, SeriesConvergenceError
from .jackspecial import gen_pochhammer, is_zero_factor, jack_at_ones
from .partitions import MAX_WEIGHT_CAP, Partition, diagram_cells, enumerate_partitions
from .results import MomentResult


@dataclass(frozen=True)
class SeriesControl:
    max_weight: int = 40
    rel_tol: float = 1e-12
    consecutive_small: int = 3
    # "double": float arithmetic with compensated block sums; "mp": mpmath at mp_dps digits
    precision: str = "double"
    mp_dps: int = 40

    def __post_init__(self):
        if not 0 <= self.max_weight <= MAX_WEIGHT_CAP:
            raise ParameterError(f"max_weight must lie in [0, {MAX_WEIGHT_CAP}]")
        if not self.rel_tol > 0:
            raise ParameterError("rel_tol must be positive")
        if self.consecutive_small < 1:
            raise ParameterError("consecutive_small must be >= 1")
        if self.precision not in ("double", "mp"):
            raise ParameterError(f"unknown precision policy {self.precision!r}")

    def workprec(self):
        return mpmath.workdps(self.mp_dps) if self.precision == "mp" else nullcontext()

    def num(self, x):
        if self.precision == "mp":
            return mpmath.mpc(x) if isinstance(x, complex) else mpmath.mpf(x)
        return x


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class HyperSpec:
    numer: tuple = ()
    denom: tuple = ()
    alpha: float = 1.0
    x: complex | float = 0.0
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError("multiplicity m must be >= 1")
        if len(self.numer) > 2 or len(self.denom) > 1:
            raise ParameterError("only pFq with p <= 2, q <= 1 is supported for Jack arguments")


def nonpositive_integer(a) -> int | None:
    """Return n if a == -n for an integer n >= 0, else None."""
    if isinstance(a, complex):
        return None
    r = round(float(a))
    if r <= 0 and abs(float(a) - r) <= 1e-14 * max(1.0, abs(r)):
        return -r
    return None


def terminating_bound(numer: Sequence) -> int | None:
    bounds = [n for n in (nonpositive_integer(a) for a in numer) if n is not None]
    return min(bounds) if bounds else None


def terminating_support(a_neg, m: int) -> list[Partition]:
    """The finite set of partitions with kappa_1 <= |a_neg| and length <= m."""
    n = nonpositive_integer(a_neg)
    if n is None:
        raise ParameterError(f"{a_neg!r} is not a non-positive integer")
    out = []
    for w in range(n * m + 1):
        out.extend(enumerate_partitions(w, max_length=m, max_part=n))
    return out


def fsum_any(values):
    values = list(values)
    if not values:
        return 0.0
    if any(isinstance(v, (mpmath.mpf, mpmath.mpc)) for v in values):
        return mpmath.fsum(values)
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(complex(v).imag for v in values))
    return math.fsum(values)


def _cellwise_term(numer: Sequence, denom: Sequence, alpha, m: int, kappa: Partition, x):
    """``prod[a]_kappa / prod[b]_kappa * x^|kappa| C_kappa((1)^m) / |kappa|!`` as one product over cells.

    Every cell contributes an O(1) factor, so terms stay finite at weights
    where the Pochhammer symbols and Jack values separately overflow.
    """
    cells = diagram_cells(kappa)
    for c in cells:
        for a in numer:
            f = a - c.coleg / alpha + c.coarm
            if is_zero_factor(f, abs(a) + c.coleg / alpha + c.coarm):
                return None
    out = 1
    for c in cells:
        shift = c.coleg / alpha
        for b in denom:
            f = b - shift + c.coarm
            if is_zero_factor(f, abs(b) + shift + c.coarm):
                raise ParameterError(f"denominator generalised Pochhammer vanishes at kappa={kappa.parts}")
            out /= f
        for a in numer:
            out *= a - shift + c.coarm
        out *= alpha * x * (alpha * c.coarm + m - c.coleg) / ((alpha * (c.arm + 1) + c.leg) * (alpha * c.arm + c.leg + 1))
    return out


def block_sum(numer: Sequence, denom: Sequence, alpha, m: int, weight: int, max_part: int | None = None, x=None):
    """``sum_{|kappa|=weight, l(kappa)<=m} prod[a]_kappa / prod[b]_kappa * C_kappa((1)^m)``.

    With ``x`` given, each term also carries ``x^weight / weight!`` and is
    formed cell by cell.  A term whose numerator vanishes is dropped; a
    vanishing denominator under a non-vanishing numerator is an error.
    """
    terms = []
    for kappa in enumerate_partitions(weight, max_length=m, max_part=max_part):
        if x is not None:
            t = _cellwise_term(numer, denom, alpha, m, kappa, x)
            if t is not None:
                terms.append(t)
            continue
        num = 1
        for a in numer:
            num *= gen_pochhammer(a, kappa, alpha)
            if num == 0:
                break
        if num == 0:
            continue
        den = 1
        for b in denom:
            den *= gen_pochhammer(b, kappa, alpha)
        if den == 0:
            raise ParameterError(f"denominator generalised Pochhammer vanishes at kappa={kappa.parts}")
        terms.append(num / den * jack_at_ones(kappa, alpha, m))
    return fsum_any(terms)


def sum_weight_blocks(block: Callable[[int], object], ctrl: SeriesControl, terminate_at: int | None = None,
                      label: str = "series") -> MomentResult:
    """Sum ``block(p)`` for p = 0, 1, ...

    With ``terminate_at`` the sum is exact over p <= terminate_at.  Otherwise
    stop once ``consecutive_small`` successive blocks fall below
    ``rel_tol * |partial sum|``, failing if ``max_weight`` is reached first.
    """
    blocks = []
    if terminate_at is not None:
        for p in range(terminate_at + 1):
            blocks.append(block(p))
        value = fsum_any(blocks)
        return MomentResult(_out(value), 0.0, terminate_at, True, {"terminating": True})

    small = 0
    total = 0
    for p in range(ctrl.max_weight + 1):
        b = block(p)
        blocks.append(b)
        total = fsum_any(blocks)
        if p > 0 and abs(b) <= ctrl.rel_tol * abs(total):
            small += 1
        elif p > 0 and b == 0 and total == 0:
            small += 1
        else:
            small = 0
        if small >= ctrl.consecutive_small:
            err = max(abs(x) for x in blocks[-ctrl.consecutive_small:])
            return MomentResult(_out(total), float(err), p, True,
                                {"terminating": False, "last_block": float(abs(b))})
    raise SeriesConvergenceError(
        f"{label}: weight blocks did not fall below rel_tol={ctrl.rel_tol:g} by max_weight={ctrl.max_weight}"
        f" (last block magnitude {float(abs(blocks[-1])):.3e}, partial sum {complex(total)!r})",
        truncation_weight=ctrl.max_weight, last_block=float(abs(blocks[-1])),
    )


def _out(v):
    if isinstance(v, mpmath.mpc):
        return complex(v)
    if isinstance(v, mpmath.mpf):
        return float(v)
    return v


def pfq_alpha(spec: HyperSpec, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """``pFq^(alpha)(a; b; (x)^m)`` as the partition series grouped by weight."""
    bound = terminating_bound(spec.numer)
    if bound is None and len(spec.numer) == 2 and len(spec.denom) == 0:
        raise ParameterError("2F0 is only evaluated in terminating form")
    with ctrl.workprec():
        numer = [ctrl.num(a) for a in spec.numer]
        denom = [ctrl.num(b) for b in spec.denom]
        alpha = ctrl.num(spec.alpha)
        x = ctrl.num(spec.x)

        def block(p):
            return block_sum(numer, denom, alpha, spec.m, p, max_part=bound, x=x)

        top = None if bound is None else bound * spec.m
        res = sum_weight_blocks(block, ctrl, top, label=f"{len(numer)}F{len(denom)}^(alpha)")
    return res


def pfq_classical(numer: Sequence, denom: Sequence, x, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    """One-variable ``pFq`` by the term ratio recurrence."""
    bound = terminating_bound(numer)
    with ctrl.workprec():
        numer = [ctrl.num(a) for a in numer]
        denom = [ctrl.num(b) for b in denom]
        x = ctrl.num(x)
        terms = [ctrl.num(1.0)]

        def block(p):
            while len(terms) <= p:
                k = len(terms) - 1
                r = x / (k + 1)
                for a in numer:
                    r *= a + k
                for b in denom:
                    if is_zero_factor(b + k, abs(b) + k):
                        raise ParameterError(f"denominator parameter {b} hits zero at k={k}")
                    r *= 1 / (b + k)
                terms.append(terms[-1] * r)
            return terms[p]

        if bound is None and len(numer) > len(denom) + 1:
            raise ParameterError("divergent non-terminating pFq with p > q + 1")
        return sum_weight_blocks(block, ctrl, bound, label=f"{len(numer)}F{len(denom)}")


def hyp1f1(a, b, x, alpha=1.0, m=1, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    return pfq_alpha(HyperSpec((a,), (b,), alpha, x, m), ctrl)


def hyp0f1(b, x, alpha=1.0, m=1, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    return pfq_alpha(HyperSpec((), (b,), alpha, x, m), ctrl)


def hyp2f0(a1, a2, x, alpha=1.0, m=1, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    return pfq_alpha(HyperSpec((a1, a2), (), alpha, x, m), ctrl)


def hyp2f1(a1, a2, b, x, alpha=1.0, m=1, ctrl: SeriesControl = DEFAULT_CONTROL) -> MomentResult:
    return pfq_alpha(HyperSpec((a1, a2), (b,), alpha, x, m), ctrl)
