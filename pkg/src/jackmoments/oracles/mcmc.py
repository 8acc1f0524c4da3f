"""Seeded random-walk Metropolis samplers for the beta-ensembles.

Chains are advanced together (vectorised over the chain axis); each chain
draws from its own generator seeded by (seed, chain index), so a chain's
stream does not depend on how many other chains run alongside it.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ParameterError
from ..results import MomentResult
from .ensembles import EnsembleSpec

log = logging.getLogger(__name__)

ACCEPT_BAND = (0.1, 0.7)
TARGET_ACCEPT = 0.4


@dataclass(frozen=True)
class ChainConfig:
    n_samples: int = 4000
    burn_in: int = 1000
    proposal_scale: float = 0.5
    seed: int = 0
    n_chains: int = 32
    thin: int = 1
    tune: bool = True
    chunk: int = 256

    def __post_init__(self):
        if not self.n_samples > self.burn_in >= 0:
            raise ParameterError("need n_samples > burn_in >= 0")
        if not self.proposal_scale > 0:
            raise ParameterError("proposal_scale must be positive")
        if self.n_chains < 1 or self.thin < 1:
            raise ParameterError("n_chains and thin must be >= 1")


@dataclass
class SampleSet:
    """Post-burn-in draws in natural coordinates, shape (n_chains, n_kept, N)."""

    spec: EnsembleSpec
    config: ChainConfig
    samples: np.ndarray
    acceptance: np.ndarray
    proposal_scale: float
    meta: dict = field(default_factory=dict)

    @property
    def flat(self) -> np.ndarray:
        return self.samples.reshape(-1, self.spec.N)


def _chain_rngs(seed: int, n_chains: int, stream: int) -> list[np.random.Generator]:
    return [np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(c, stream))) for c in range(n_chains)]


class _Sweeper:
    def __init__(self, spec: EnsembleSpec, y: np.ndarray):
        self.spec = spec
        self.y = y
        self.single = spec.single_log(y)

    def sweep(self, scale, normals, uniforms, accepted):
        """One systematic-scan sweep; normals/uniforms have shape (n_chains, N)."""
        spec, y = self.spec, self.y
        beta = spec.beta
        for i in range(spec.N):
            yi_new = y[:, i] + scale * normals[:, i]
            single_new = spec.single_log(yi_new)
            delta = single_new - self.single[:, i]
            if spec.N > 1:
                others = np.delete(y, i, axis=1)
                delta += beta * np.sum(spec.pair_log(yi_new[:, None], others)
                                       - spec.pair_log(y[:, i][:, None], others), axis=1)
            ok = np.log(uniforms[:, i]) < delta
            y[ok, i] = yi_new[ok]
            self.single[ok, i] = single_new[ok]
            accepted += ok


def _run(spec, y, scale, n_sweeps, rngs, keep_from=None, thin=1, chunk=256):
    n_chains, N = y.shape
    sw = _Sweeper(spec, y)
    accepted = np.zeros(n_chains)
    kept = []
    done = 0
    while done < n_sweeps:
        m = min(chunk, n_sweeps - done)
        normals = np.stack([r.standard_normal((m, N)) for r in rngs], axis=1)
        uniforms = np.stack([r.random((m, N)) for r in rngs], axis=1)
        for k in range(m):
            sw.sweep(scale, normals[k], uniforms[k], accepted)
            step = done + k
            if keep_from is not None and step >= keep_from and (step - keep_from) % thin == 0:
                kept.append(spec.to_natural(sw.y.copy()))
        done += m
    rate = accepted / (n_sweeps * N)
    return sw.y, rate, kept


def tune_scale(spec: EnsembleSpec, cfg: ChainConfig, y0: np.ndarray, rounds: int = 8, sweeps: int = 60) -> float:
    """Fixed pre-run search: rescale until the pilot acceptance is near the target."""
    scale = cfg.proposal_scale
    rngs = _chain_rngs(cfg.seed, cfg.n_chains, stream=1)
    y = y0.copy()
    for _ in range(rounds):
        y, rate, _ = _run(spec, y, scale, sweeps, rngs, chunk=cfg.chunk)
        acc = float(np.mean(rate))
        if abs(acc - TARGET_ACCEPT) < 0.08:
            break
        scale *= float(np.exp(2.0 * (acc - TARGET_ACCEPT)))
    return scale


def mcmc_sample(spec: EnsembleSpec, cfg: ChainConfig = ChainConfig()) -> SampleSet:
    init_rngs = _chain_rngs(cfg.seed, cfg.n_chains, stream=0)
    y0 = np.concatenate([spec.initial_points(r, 1) for r in init_rngs], axis=0)
    scale = tune_scale(spec, cfg, y0) if cfg.tune else cfg.proposal_scale
    rngs = _chain_rngs(cfg.seed, cfg.n_chains, stream=2)
    _, rate, kept = _run(spec, y0.copy(), scale, cfg.n_samples, rngs, keep_from=cfg.burn_in,
                         thin=cfg.thin, chunk=cfg.chunk)
    samples = np.stack(kept, axis=1)
    meta = {"acceptance_mean": float(np.mean(rate))}
    lo, hi = ACCEPT_BAND
    if np.any(rate < lo) or np.any(rate > hi):
        meta["warning"] = f"acceptance outside [{lo}, {hi}]: min {rate.min():.3f}, max {rate.max():.3f}"
        log.warning("%s: %s", spec, meta["warning"])
    return SampleSet(spec, cfg, samples, rate, scale, meta)


def estimate_statistic(samples: SampleSet | np.ndarray, statistic, h: float | None = None,
                       n_batches: int | None = None) -> MomentResult:
    """Batch-means estimate of E[statistic] (or E|statistic|^{2h}) with its standard error.

    With 8 or more chains each chain is one batch; otherwise every chain is
    split into contiguous batches.
    """
    arr = samples.samples if isinstance(samples, SampleSet) else np.asarray(samples)
    if arr.ndim == 2:
        arr = arr[None]
    vals = np.asarray(statistic(arr), dtype=float)
    if vals.shape != arr.shape[:2]:
        raise ValueError(f"statistic must map (..., N) to (...), got shape {vals.shape}")
    if h is not None:
        vals = np.abs(vals) ** (2 * h)
    bad = ~np.isfinite(vals)
    if bad.any():
        raise ValueError(f"{int(bad.sum())} non-finite statistic values (first at index {np.argwhere(bad)[0]})")
    n_chains, n_kept = vals.shape
    if n_batches is None:
        n_batches = n_chains if n_chains >= 8 else 8
    if n_batches == n_chains:
        means = vals.mean(axis=1)
    else:
        per = n_batches // n_chains
        size = n_kept // per
        means = vals[:, : per * size].reshape(n_chains, per, size).mean(axis=2).ravel()
    est = float(vals.mean())
    se = float(means.std(ddof=1) / np.sqrt(len(means))) if len(means) > 1 else 0.0
    return MomentResult(est, se, -1, True, {"n_samples": int(vals.size), "n_batches": int(len(means))})


def save_samples(sample_set: SampleSet, path: str | Path) -> tuple[Path, Path]:
    """Write ``<path>.bin`` (little-endian float64, one configuration per row) and a JSON sidecar."""
    path = Path(path)
    data = path.with_suffix(".bin")
    side = path.with_suffix(".json")
    sample_set.flat.astype("<f8").tofile(data)
    n_chains, n_kept, N = sample_set.samples.shape
    side.write_text(json.dumps({
        "format": "float64-le rows",
        "spec": asdict(sample_set.spec),
        "config": asdict(sample_set.config),
        "shape": [n_chains, n_kept, N],
        "seed": sample_set.config.seed,
        "proposal_scale": sample_set.proposal_scale,
        "acceptance": sample_set.acceptance.tolist(),
        **sample_set.meta,
    }, indent=2))
    return data, side


def load_samples(path: str | Path) -> SampleSet:
    path = Path(path)
    side = json.loads(path.with_suffix(".json").read_text())
    arr = np.fromfile(path.with_suffix(".bin"), dtype="<f8").reshape(side["shape"])
    spec = EnsembleSpec(**side["spec"])
    cfg = ChainConfig(**side["config"])
    meta = {k: v for k, v in side.items() if k == "warning" or k == "acceptance_mean"}
    return SampleSet(spec, cfg, arr, np.asarray(side["acceptance"]), side["proposal_scale"], meta)
