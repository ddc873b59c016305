"""Deterministic random streams.

Every random quantity in the package is drawn from a PCG64 generator keyed
by an integer seed (reduced mod 2**64) plus an optional tuple path, via
``stream(seed, *path)``. Batch harnesses derive one child stream per trial
with ``stream(master_seed, trial_index)``, so trials are independent and
reproducible regardless of execution order.

Gaussian variates use Box-Muller on the generator's uniform doubles instead
of ``Generator.normal`` so the sample stream depends only on PCG64's raw
output, which numpy keeps bit-stable across releases.
"""

from __future__ import annotations

import numpy as np

_SEED_MASK = (1 << 64) - 1


def stream(seed: int, *path: int) -> np.random.Generator:
    """PCG64 generator for the stream addressed by (seed, *path)."""
    entropy = (int(seed) & _SEED_MASK,) + tuple(int(p) & _SEED_MASK for p in path)
    return np.random.default_rng(np.random.SeedSequence(entropy))


def child_seeds(seed: int, count: int, width: int = 1) -> np.ndarray:
    """(count, width) array of 63-bit sub-seeds derived from a master seed."""
    return stream(seed).integers(0, 1 << 63, size=(count, width), dtype=np.int64)


def complex_normal(rng: np.random.Generator, size=None) -> np.ndarray:
    """Standard complex Gaussians (E|z|^2 = 1) via Box-Muller.

    Real and imaginary parts are independent N(0, 1/2). The 1 - u shift keeps
    the log argument in (0, 1].
    """
    u1 = 1.0 - rng.random(size)
    u2 = rng.random(size)
    return np.sqrt(-np.log(u1)) * np.exp(2j * np.pi * u2)


def real_normal(rng: np.random.Generator, size=None) -> np.ndarray:
    """Standard real Gaussians N(0, 1) via Box-Muller."""
    u1 = 1.0 - rng.random(size)
    u2 = rng.random(size)
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
