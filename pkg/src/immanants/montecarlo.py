"""Haar sampling of U(N), O(N) and COE(N), numeric immanants, MC moments.

Random streams are Philox generators keyed by ``(seed, block index)``; samples
are drawn in fixed-size blocks, so results do not depend on how blocks are
distributed over worker threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .partitions import Partition
from .symgroup import character_of

BLOCK_SIZE = 4096
THREADS_ENV = "IMMANANTS_THREADS"


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def block_stream(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def _complex_ginibre(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def _fix_phases(Q: np.ndarray, R: np.ndarray) -> np.ndarray:
    # Q D with D = diag(r_kk / |r_kk|) makes the triangular factor positive
    d = np.diagonal(R, axis1=-2, axis2=-1)
    d = np.where(d == 0, 1.0, d / np.abs(d))
    return Q * d[..., None, :]


def haar_unitary(N: int, rng: np.random.Generator, size: int | None = None, correct_phases: bool = True):
    """Haar unitary via QR of a complex Ginibre matrix.

    With ``size`` a stack of shape ``(size, N, N)`` is returned.
    ``correct_phases=False`` gives the raw QR factor, which is not Haar.
    """
    shape = (N, N) if size is None else (size, N, N)
    Q, R = np.linalg.qr(_complex_ginibre(rng, shape))
    return _fix_phases(Q, R) if correct_phases else Q


def haar_orthogonal(N: int, rng: np.random.Generator, size: int | None = None, correct_signs: bool = True):
    shape = (N, N) if size is None else (size, N, N)
    Q, R = np.linalg.qr(rng.standard_normal(shape))
    return _fix_phases(Q, R) if correct_signs else Q


def coe_sample(N: int, rng: np.random.Generator, size: int | None = None, correct_phases: bool = True):
    """``V = U U^T`` with ``U`` Haar unitary; symmetric and unitary."""
    U = haar_unitary(N, rng, size, correct_phases)
    return U @ np.swapaxes(U, -1, -2)


SAMPLERS = {"unitary": haar_unitary, "orthogonal": haar_orthogonal, "coe": coe_sample}


def ryser_permanent(A) -> complex:
    """Permanent by inclusion-exclusion over column subsets in Gray-code order."""
    A = np.asarray(A)
    n = A.shape[0]
    if n == 0:
        return 1.0
    row_sums = np.zeros(n, dtype=np.result_type(A, float))
    total = 0.0
    prev_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        changed = gray ^ prev_gray
        col = changed.bit_length() - 1
        if gray & changed:
            row_sums += A[:, col]
        else:
            row_sums -= A[:, col]
        prev_gray = gray
        term = np.prod(row_sums)
        total += -term if bin(gray).count("1") % 2 else term
    return total if n % 2 == 0 else -total


def _character_weights(gamma: Partition):
    n = sum(gamma)
    out = []
    for p in permutations(range(n)):
        chi = character_of(gamma, p)
        if chi:
            out.append((chi, p))
    return out


def immanant(A, gamma: Partition):
    """``sum_pi chi_gamma(pi) prod_k A[k, pi(k)]`` for a square matrix ``A``."""
    A = np.asarray(A)
    n = sum(gamma)
    if A.ndim != 2 or A.shape != (n, n):
        raise ValueError(f"need an {n}x{n} matrix for gamma={gamma}, got shape {A.shape}")
    if n == 0:
        return 1.0
    if gamma == (1,) * n:
        return np.linalg.det(A)
    if gamma == (n,):
        return ryser_permanent(A)
    return immanant_by_characters(A, gamma)


def immanant_by_characters(A, gamma: Partition):
    """Direct character sum over S_n, also for stacks ``(..., n, n)``."""
    A = np.asarray(A)
    n = sum(gamma)
    if A.shape[-2:] != (n, n):
        raise ValueError(f"need trailing shape ({n}, {n}) for gamma={gamma}, got {A.shape}")
    if n > 10:
        raise ValueError("character-sum immanant is bounded by n <= 10")
    rows = np.arange(n)
    total = np.zeros(A.shape[:-2], dtype=np.result_type(A, float))
    for chi, p in _character_weights(gamma):
        total = total + chi * np.prod(A[..., rows, list(p)], axis=-1)
    return total


def _statistic(values: np.ndarray, ensemble: str, power: int) -> np.ndarray:
    if ensemble == "orthogonal":
        return np.real(values) ** 2
    return np.abs(values) ** power


def validate_mc(ensemble: str, gamma: Partition, N: int, power: int) -> None:
    n = sum(gamma)
    if ensemble not in SAMPLERS:
        raise ValueError(f"unknown ensemble {ensemble!r}")
    if n < 1 or n > N:
        raise ValueError(f"need 1 <= n <= N, got n={n}, N={N}")
    if power not in (2, 4):
        raise ValueError(f"power must be 2 or 4, got {power}")
    if power == 4 and (ensemble != "unitary" or gamma != (n,)):
        raise ValueError("power 4 is only defined for the unitary permanent")


def sample_block(ensemble: str, N: int, seed: int, block: int, count: int) -> np.ndarray:
    return SAMPLERS[ensemble](N, block_stream(seed, block), size=count)


def _blocks(samples: int, block_size: int):
    return [(b, min(block_size, samples - b * block_size)) for b in range(-(-samples // block_size))]


def mc_values(
    ensemble: str,
    gamma: Partition,
    N: int,
    power: int,
    samples: int,
    seed: int,
    workers: int | None = None,
    block_size: int = BLOCK_SIZE,
) -> np.ndarray:
    """Per-sample statistic, in sample order."""
    validate_mc(ensemble, gamma, N, power)
    n = sum(gamma)
    out = np.empty(samples, dtype=float)

    def run(job):
        block, count = job
        mats = sample_block(ensemble, N, seed, block, count)
        imm = immanant_by_characters(mats[:, :n, :n], gamma)
        start = block * block_size
        out[start : start + count] = _statistic(imm, ensemble, power)

    jobs = _blocks(samples, block_size)
    workers = workers or default_workers()
    if workers == 1:
        for job in jobs:
            run(job)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, jobs))
    return out


def estimate(values: np.ndarray, seed: int) -> MCEstimate:
    if values.size < 2:
        raise ValueError("need at least two samples for a standard error")
    return MCEstimate(
        mean=float(np.mean(values)),
        stderr=float(np.std(values, ddof=1) / np.sqrt(values.size)),
        samples=int(values.size),
        seed=seed,
    )


def mc_moment(
    ensemble: str,
    gamma: Partition,
    N: int,
    power: int = 2,
    samples: int = 100_000,
    seed: int = 0,
    workers: int | None = None,
) -> MCEstimate:
    """Estimate ``<|Imm_gamma(block)|^power>`` (``<Imm^2>`` for O(N))."""
    return estimate(mc_values(ensemble, tuple(gamma), N, power, samples, seed, workers), seed)


def z_score(est: MCEstimate, exact) -> float:
    return (est.mean - float(exact)) / est.stderr
