from .ensembles import EnsembleSpec
from .identities import (
    circle_cauchy_joint_moment,
    laguerre_cauchy_charfn,
    laguerre_inverse_trace_estimate,
)
from .mcmc import ChainConfig, SampleSet, estimate_statistic, load_samples, mcmc_sample, save_samples
from .quadrature import inverse_fourier_even, quadrature_average, quadrature_normalisation

__all__ = [
    "EnsembleSpec",
    "ChainConfig",
    "SampleSet",
    "mcmc_sample",
    "estimate_statistic",
    "save_samples",
    "load_samples",
    "quadrature_average",
    "quadrature_normalisation",
    "inverse_fourier_even",
    "circle_cauchy_joint_moment",
    "laguerre_cauchy_charfn",
    "laguerre_inverse_trace_estimate",
]
