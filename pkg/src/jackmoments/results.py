from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class MomentResult:
    """A computed value with its error estimate and convergence metadata.

    ``truncation_weight`` is the largest partition weight included in a
    series (or -1 when the value did not come from a series).
    """

    value: float
    abs_error_estimate: float = 0.0
    truncation_weight: int = -1
    converged: bool = True
    meta: dict[str, Any] = field(default_factory=dict)

    def __float__(self) -> float:
        return float(self.value)

    def as_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "truncation_weight": self.truncation_weight,
            "converged": self.converged,
            **{k: v for k, v in self.meta.items() if _jsonable(v)},
        }


def _jsonable(v) -> bool:
    return isinstance(v, (str, int, float, bool, type(None), list, tuple, dict))
