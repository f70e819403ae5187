"""Permutations, cycle types and irreducible characters of S_n.

Permutations are tuples in 0-based one-line notation: ``p[i]`` is the image
of ``i``.  Composition applies right to left, ``compose(p, q)[i] == p[q[i]]``.
The text form is 1-based, e.g. ``"3,1,2"``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .partitions import Partition, partitions_of

Permutation = tuple[int, ...]

MAX_ENUM_DEGREE = 10


def identity(m: int) -> Permutation:
    return tuple(range(m))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``: first apply ``q``, then ``p``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def from_cycles(cycles, m: int) -> Permutation:
    """Build a permutation of degree ``m`` from 1-based cycles.

    >>> from_cycles([(1, 2, 3)], 3)
    (1, 2, 0)
    """
    images = list(range(m))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    if not is_permutation(images):
        raise ValueError(f"cycles {cycles} do not define a permutation")
    return tuple(images)


def cycles_of(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles (0-based), fixed points included."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            k += 1
        lengths.append(k)
    lengths.sort(reverse=True)
    return tuple(lengths)


def sign(p: Permutation) -> int:
    return -1 if (len(p) - len(cycle_type(p))) % 2 else 1


def all_permutations(m: int) -> list[Permutation]:
    if m > MAX_ENUM_DEGREE:
        raise ValueError(f"refusing to enumerate S_{m} (bound is {MAX_ENUM_DEGREE})")
    return list(itertools.permutations(range(m)))


def class_representative(mu: Partition) -> Permutation:
    """A permutation of cycle type ``mu`` made of consecutive cycles."""
    images = []
    start = 0
    for part in mu:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    return tuple(images)


def format_permutation(p: Permutation) -> str:
    return ",".join(str(i + 1) for i in p)


def parse_permutation(text: str) -> Permutation:
    p = tuple(int(t) - 1 for t in text.split(","))
    if not is_permutation(p):
        raise ValueError(f"not a permutation: {text!r}")
    return p


# Characters via the Murnaghan-Nakayama rule on beta-sets: removing a border
# strip of length r moves one bead from b to b - r; the sign counts beads jumped.


def _beta(shape: Partition) -> tuple[int, ...]:
    ell = len(shape)
    return tuple(shape[i] + ell - 1 - i for i in range(ell))


def _shape_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(p for p in (beta[i] - (ell - 1 - i) for i in range(ell)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    beta = _beta(shape)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for x in beta if target < x < b)
        new_beta = [x for x in beta if x != b] + [target]
        term = _mn(_shape_from_beta(new_beta), rest)
        total += -term if jumped % 2 else term
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi_lam`` evaluated on the class ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def character_of(lam: Partition, p: Permutation) -> int:
    return character(lam, cycle_type(p))


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}

