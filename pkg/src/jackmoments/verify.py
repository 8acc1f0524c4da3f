"""Oracle cross-checks behind ``jackmoments verify``."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import cauchymoments as cm
from . import jacobimoments as jm
from .jackspecial import jack_at_ones
from .normalizations import selberg_S
from .oracles import (
    ChainConfig,
    EnsembleSpec,
    circle_cauchy_joint_moment,
    inverse_fourier_even,
    laguerre_cauchy_charfn,
    quadrature_average,
)
from .partitions import enumerate_partitions

WORKERS_ENV = "JACKMOMENTS_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class CheckResult:
    name: str
    passed: bool
    observed: float
    expected: float
    tolerance: str
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (f"[{flag}] {self.name}: observed={self.observed:.17g} expected={self.expected:.17g} "
                f"tol={self.tolerance} ({self.seconds:.2f}s)")


def _rel(name, obs, exp, tol) -> CheckResult:
    err = abs(obs - exp) / max(abs(exp), 1e-300)
    return CheckResult(name, err <= tol, obs, exp, f"rel<={tol:g} (got {err:.2e})")


def _mc(name, a, b, k=3.0) -> CheckResult:
    se = math.hypot(a.abs_error_estimate, b.abs_error_estimate)
    return CheckResult(name, abs(a.value - b.value) <= k * se, a.value, b.value,
                       f"|diff|<={k:g} SE (SE={se:.2e})")


def _half_integer_checkpoint():
    exact = {1: (3 * math.e**4 - 103) / (768 * math.pi), 2: (math.e**2 - 5) / (4 * math.pi)}
    return [_rel(f"joint moment s=1 h=1/2 beta={b}", cm.joint_moment_limit(1, b, 0.5).value, v, 1e-6)
            for b, v in exact.items()]


def _half_integer_2f2():
    return [_rel(f"joint moment s=1 h=1/2 beta={b} vs 2F2 form", cm.joint_moment_limit(1, b, 0.5).value,
                 cm.joint_moment_s1_half(b), 1e-6) for b in (1, 2, 4)]


def _s1_closed_form():
    out = []
    for b in (1, 2, 4):
        for h in (-0.3, 0.2, 0.7, 1.1, 1.4):
            out.append(_rel(f"s=1 series vs 1F1 beta={b} h={h}", cm.joint_moment_limit(1, b, h).value,
                            cm.joint_moment_s1(b, h), 1e-10))
    return out


def _dual():
    worst, where = 0.0, None
    for N in (1, 2, 3):
        for s in range(4):
            for b in (0.5, 1, 2, 4):
                for t in (0.1, 1, 3):
                    f = cm.charfn_finite(N, s, b, t).value
                    d = cm.charfn_dual(N, s, b, t).value
                    e = abs(f - d) / abs(d)
                    if e > worst:
                        worst, where = e, (N, s, b, t)
    return [CheckResult(f"finite vs dual charfn grid (worst at {where})", worst <= 1e-10, worst, 0.0, "rel<=1e-10")]


def _determinant():
    return [_rel(f"beta=2 Laguerre determinant N={N} s={s} t={t}", cm.charfn_det_beta2(N, s, t),
                 cm.charfn_finite(N, s, 2, t).value, 1e-10)
            for N, s in ((3, 1), (2, 2)) for t in (0.4, 1.2)]


def _jack_sum():
    worst = 0.0
    for p in range(1, 9):
        for N in range(1, 6):
            for a in (0.25, 0.5, 1, 2, 4):
                tot = math.fsum(jack_at_ones(k, a, N) for k in enumerate_partitions(p, max_length=N))
                worst = max(worst, abs(tot - N**p) / N**p)
    return [CheckResult("sum_{|kappa|=p} C_kappa((1)^N) = N^p", worst <= 1e-12, worst, 0.0, "rel<=1e-12")]


def _jacobi_quadrature():
    out = []
    cases = [(1, 3.0, 1.0, 1.0), (2, 3.0, 0.5, 2.0)]
    for N, a, b, beta in cases:
        spec = EnsembleSpec.jacobi(N, beta, a, b)
        for p in (1, 2):
            q = quadrature_average(spec, lambda *u: sum(1 / x for x in u) ** p).value
            out.append(_rel(f"Jacobi inverse moment N={N} p={p} vs quadrature",
                            jm.inv_moment_finite(jm.JacobiParams(N, a, b, beta), p), q, 1e-8))
    out.append(_rel("Jacobi limit p=2 beta=2 a=2", jm.inv_moment_limit(2, 2, 2), 1 / 3, 1e-12))
    return out


def _selberg_quadrature():
    q = quadrature_average(EnsembleSpec.jacobi(2, 2.0, 0.0, 0.0), lambda *u: 1.0).meta["normalisation"] * 2
    return [_rel("Selberg S_2(0,0,1) vs quadrature", selberg_S(2, 0, 0, 1).value, q, 1e-10)]


def _density():
    out = []
    for b in (1, 2, 4):
        for T in (0.0, 0.5, 2.0):
            out.append(_rel(f"s=1 elementary density beta={b} T={T}", cm.density_limit(1, b, T).value,
                            cm.density_limit_elementary(b, T), 1e-10))
    for T in (0.0, 1.0, 2.0):
        v, _ = inverse_fourier_even(lambda t: cm.charfn_limit(1, 2, t).value, T, t_max=60.0)
        out.append(CheckResult(f"inverse Fourier of limit charfn at T={T}",
                               abs(v - cm.density_limit(1, 2, T).value) <= 1e-6, v,
                               cm.density_limit(1, 2, T).value, "abs<=1e-6"))
    return out


def _trend():
    lim = cm.charfn_limit(1, 2, 1.0).value
    errs = [abs(cm.charfn_finite(N, 1, 2, 1.0 / N).value - lim) for N in (20, 40, 80)]
    r = min(errs[0] / errs[1], errs[1] / errs[2])
    out = [CheckResult("charfn finite-N -> limit error ratio", r >= 1.7, r, 2.0, ">=1.7")]
    lim2 = jm.inv_moment_limit(3, 2, 1)
    errs = [abs(jm.inv_moment_finite(jm.JacobiParams(N, 3, 1, 2), 1) / N**2 - lim2) for N in (20, 40, 80)]
    r = min(errs[0] / errs[1], errs[1] / errs[2])
    out.append(CheckResult("Jacobi finite-N -> limit error ratio", r >= 1.7, r, 2.0, ">=1.7"))
    return out


def _mc_checks(seed: int, big: bool):
    cfg = ChainConfig(n_samples=20000 if big else 6000, burn_in=2000 if big else 1000, n_chains=64, seed=seed)
    out = []
    for args in ((2, 1, 2, 0.5), (3, 1, 1, 1)):
        a, b = circle_cauchy_joint_moment(*args, cfg)
        out.append(_mc(f"circle vs Cauchy F/2^alpha0 (N,s,beta,h)={args}", a, b))
    for beta in (1, 2):
        for t in (0.5, 1.5):
            est, exact = laguerre_cauchy_charfn(3, 1, beta, t, cfg)
            out.append(CheckResult(f"Laguerre average vs charfn beta={beta} t={t}",
                                   abs(est.value - exact) <= 3 * est.abs_error_estimate, est.value, exact,
                                   f"|diff|<=3 SE (SE={est.abs_error_estimate:.2e})"))
    return out


QUICK: list[Callable[[], list[CheckResult]]] = [
    _half_integer_checkpoint, _half_integer_2f2, _s1_closed_form, _dual, _determinant, _jack_sum,
    _jacobi_quadrature, _selberg_quadrature, _density, _trend,
]


def run_suite(suite: str = "quick", seed: int = 7, workers: int | None = None) -> list[CheckResult]:
    if suite not in ("quick", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    jobs = list(QUICK)
    jobs.append(lambda: _mc_checks(seed, big=(suite == "full")))

    def timed(job):
        t0 = time.perf_counter()
        res = job()
        dt = (time.perf_counter() - t0) / max(1, len(res))
        for r in res:
            r.seconds = dt
        return res

    with ThreadPoolExecutor(max_workers=workers or default_workers()) as ex:
        chunks = list(ex.map(timed, jobs))
    return [r for chunk in chunks for r in chunk]
