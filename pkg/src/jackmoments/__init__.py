"""Moments and distributions of singular linear statistics in beta-ensembles."""

__version__ = "0.1.0"

from .cauchymoments import (  # noqa: E402
    charfn_dual,
    charfn_finite,
    charfn_limit,
    density_limit,
    joint_moment_limit,
    moment_limit,
)
from .hyperjack import SeriesControl, pfq_alpha, pfq_classical  # noqa: E402
from .jacobimoments import JacobiParams, inv_moment_finite, inv_moment_limit  # noqa: E402
from .partitions import Partition, enumerate_partitions  # noqa: E402
from .results import MomentResult  # noqa: E402

__all__ = [
    "charfn_dual",
    "charfn_finite",
    "charfn_limit",
    "density_limit",
    "joint_moment_limit",
    "moment_limit",
    "SeriesControl",
    "pfq_alpha",
    "pfq_classical",
    "JacobiParams",
    "inv_moment_finite",
    "inv_moment_limit",
    "Partition",
    "enumerate_partitions",
    "MomentResult",
]
