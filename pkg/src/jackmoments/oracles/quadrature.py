"""Adaptive quadrature averages over the ensembles for N in {1, 2}."""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from ..errors import ParameterError
from ..results import MomentResult
from .ensembles import EnsembleSpec

EPSABS = 1e-14
EPSREL = 1e-12
LIMIT = 400


def _interval_map(spec: EnsembleSpec):
    """(lo, hi, phi, dphi): x = phi(y) on a finite interval."""
    if spec.kind == "cauchy":
        return -math.pi / 2, math.pi / 2, math.tan, lambda y: 1.0 / math.cos(y) ** 2
    if spec.kind == "laguerre":
        return 0.0, 1.0, lambda y: y / (1 - y), lambda y: 1.0 / (1 - y) ** 2
    if spec.kind == "jacobi":
        return 0.0, 1.0, lambda y: y, lambda y: 1.0
    return 0.0, 2 * math.pi, lambda y: y, lambda y: 1.0


def _density_1(spec, x):
    return float(spec.weight(x))


def quadrature_average(spec: EnsembleSpec, integrand, epsabs: float = EPSABS, epsrel: float = EPSREL) -> MomentResult:
    """``<integrand>`` for the (unnormalised) ensemble density at N = 1 or 2.

    ``integrand`` takes the N natural coordinates as separate arguments.  The
    normalisation is computed by the same quadrature.  For N = 2 the
    integration runs over the ordered region x1 < x2 with the integrand
    symmetrised, which keeps |x1 - x2|^beta smooth inside the region.
    """
    lo, hi, phi, dphi = _interval_map(spec)
    beta = spec.beta
    opts = dict(epsabs=epsabs, epsrel=epsrel)

    if spec.N == 1:
        def dens(y):
            if y <= lo or y >= hi:
                return 0.0
            x = phi(y)
            return _density_1(spec, x) * dphi(y)

        z, ez = integrate.quad(dens, lo, hi, limit=LIMIT, **opts)
        f, ef = integrate.quad(lambda y: dens(y) * integrand(phi(y)) if lo < y < hi else 0.0, lo, hi,
                               limit=LIMIT, **opts)
    elif spec.N == 2:
        def dens2(y2, y1):
            if not (lo < y1 < hi and lo < y2 < hi):
                return 0.0
            x1, x2 = phi(y1), phi(y2)
            return (_density_1(spec, x1) * _density_1(spec, x2) * float(spec.pair(x1, x2)) ** beta
                    * dphi(y1) * dphi(y2))

        def num2(y2, y1):
            d = dens2(y2, y1)
            if d == 0.0:
                return 0.0
            x1, x2 = phi(y1), phi(y2)
            return d * 0.5 * (integrand(x1, x2) + integrand(x2, x1))

        z, ez = integrate.dblquad(dens2, lo, hi, lambda y1: y1, hi, **opts)
        f, ef = integrate.dblquad(num2, lo, hi, lambda y1: y1, hi, **opts)
    else:
        raise ParameterError("quadrature oracle supports N in {1, 2} only")

    val = f / z
    err = abs(ef / z) + abs(f) * abs(ez) / z**2
    return MomentResult(val, err, -1, err <= max(1e-6, 1e3 * epsrel) * max(1.0, abs(val)),
                        {"normalisation": z, "normalisation_error": ez})


def quadrature_normalisation(spec: EnsembleSpec) -> MomentResult:
    """The bare integral of the density (ordered region doubled for N = 2)."""
    res = quadrature_average(spec, (lambda *x: 1.0))
    z = res.meta["normalisation"] * (2 if spec.N == 2 else 1)
    return MomentResult(z, res.meta["normalisation_error"] * (2 if spec.N == 2 else 1))


def quad_1d(f, lo, hi, **kw) -> tuple[float, float]:
    """Thin wrapper used by the Fourier / density checks."""
    kw.setdefault("limit", LIMIT)
    return integrate.quad(f, lo, hi, **kw)


def inverse_fourier_even(charfn, T: float, t_max: float = np.inf) -> tuple[float, float]:
    """``(1/pi) int_0^t_max charfn(t) cos(tT) dt`` for an even, integrable characteristic function.

    A finite ``t_max`` is for integrands that are negligible beyond it but
    expensive or unstable to evaluate there.
    """
    if T == 0:
        v, e = integrate.quad(charfn, 0, t_max, limit=LIMIT, epsabs=1e-13, epsrel=1e-12)
    elif math.isinf(t_max):
        v, e = integrate.quad(charfn, 0, np.inf, weight="cos", wvar=T, limlst=200, limit=LIMIT, epsabs=1e-13)
    else:
        v, e = integrate.quad(charfn, 0, t_max, weight="cos", wvar=T, limit=LIMIT, epsabs=1e-13)
    return v / math.pi, e / math.pi
