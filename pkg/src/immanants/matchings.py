"""Perfect matchings, coset types and zonal spherical functions.

Points are 0-based: the trivial matching pairs ``{2k, 2k+1}``.  A matching is
stored as a sorted tuple of sorted pairs, e.g. ``((0, 2), (1, 3))``; its text
form is 1-based, ``"1-3,2-4"``.

"Odd" and "even" points follow the 1-based naming, so the odd copy of S_n
acts on 0-based indices ``0, 2, 4, ...``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .partitions import (
    Partition,
    class_size,
    dim_sn,
    double_coset_size,
    double_partition,
    partitions_of,
)
from .symgroup import (
    Permutation,
    character,
    class_representative,
    compose,
    cycle_type,
)

Matching = tuple[tuple[int, int], ...]

MAX_HYPEROCTAHEDRAL = 6


def make_matching(pairs) -> Matching:
    m = tuple(sorted(tuple(sorted(p)) for p in pairs))
    flat = sorted(x for p in m for x in p)
    if flat != list(range(len(flat))) or any(a == b for a, b in m):
        raise ValueError(f"not a perfect matching on 0..{len(flat) - 1}: {pairs}")
    return m


def trivial_matching(n: int) -> Matching:
    if n < 1:
        raise ValueError("n must be positive")
    return tuple((2 * k, 2 * k + 1) for k in range(n))


def apply_perm(sigma: Permutation, m: Matching) -> Matching:
    if len(sigma) != 2 * len(m):
        raise ValueError(f"degree mismatch: permutation of {len(sigma)} vs matching on {2 * len(m)}")
    return tuple(sorted(tuple(sorted((sigma[a], sigma[b]))) for a, b in m))


def matching_of(sigma: Permutation) -> Matching:
    """The matching ``sigma(t)`` where ``t`` is the trivial matching."""
    return apply_perm(sigma, trivial_matching(len(sigma) // 2))


def canonical_rep(m: Matching) -> Permutation:
    """The unique sigma with ``sigma(t) == m``, increasing inside and across pairs."""
    return tuple(x for pair in sorted(m) for x in pair)


def all_matchings(n: int) -> list[Permutation]:
    """Canonical representatives of all ``(2n-1)!!`` matchings on ``2n`` points."""
    out: list[Permutation] = []

    def rec(remaining: tuple[int, ...], acc: tuple[int, ...]) -> None:
        if not remaining:
            out.append(acc)
            return
        first = remaining[0]
        for k in range(1, len(remaining)):
            rest = remaining[1:k] + remaining[k + 1 :]
            rec(rest, acc + (first, remaining[k]))

    rec(tuple(range(2 * n)), ())
    return out


def _half_cycle_lengths(partner: list[int]) -> Partition:
    # components alternate trivial edges (v, v^1) and edges of the other matching
    seen = [False] * len(partner)
    parts = []
    for start in range(len(partner)):
        if seen[start]:
            continue
        count = 0
        v = start
        while not seen[v]:
            seen[v] = True
            w = v ^ 1
            seen[w] = True
            count += 1
            v = partner[w]
        parts.append(count)
    parts.sort(reverse=True)
    return tuple(parts)


def coset_type_of_matching(m: Matching) -> Partition:
    partner = [0] * (2 * len(m))
    for a, b in m:
        partner[a] = b
        partner[b] = a
    return _half_cycle_lengths(partner)


def coset_type(sigma: Permutation) -> Partition:
    """Half the cycle lengths of the graph ``t`` union ``sigma(t)``."""
    if len(sigma) % 2:
        raise ValueError("coset type needs a permutation of even degree")
    partner = [0] * len(sigma)
    for k in range(len(sigma) // 2):
        a, b = sigma[2 * k], sigma[2 * k + 1]
        partner[a] = b
        partner[b] = a
    return _half_cycle_lengths(partner)


def lift_odd(pi: Permutation) -> Permutation:
    """Copy of ``pi`` acting on the odd points (0-based ``2k``) only."""
    out = list(range(2 * len(pi)))
    for k, image in enumerate(pi):
        out[2 * k] = 2 * image
    return tuple(out)


def lift_even(pi: Permutation) -> Permutation:
    """Copy of ``pi`` acting on the even points (0-based ``2k+1``) only."""
    out = list(range(2 * len(pi)))
    for k, image in enumerate(pi):
        out[2 * k + 1] = 2 * image + 1
    return tuple(out)


def pair_swap(n: int) -> Permutation:
    """The involution ``(1 2)(3 4)...(2n-1 2n)``."""
    return tuple(i ^ 1 for i in range(2 * n))


def flips(bits) -> Permutation:
    """Element of the pair-swap subgroup flipping pair ``k`` when ``bits[k]`` is set."""
    return tuple(2 * k + (s ^ b) for k, b in enumerate(bits) for s in (0, 1))


def iter_hyperoctahedral(n: int):
    """Yield the ``2^n n!`` elements of the stabilizer of the trivial matching."""
    for pi in itertools.permutations(range(n)):
        for bits in itertools.product((0, 1), repeat=n):
            yield tuple(2 * pi[k] + (s ^ bits[k]) for k in range(n) for s in (0, 1))


@lru_cache(maxsize=None)
def hyperoctahedral(n: int) -> tuple[Permutation, ...]:
    if n > MAX_HYPEROCTAHEDRAL:
        raise ValueError(f"hyperoctahedral enumeration bounded by n <= {MAX_HYPEROCTAHEDRAL}")
    return tuple(iter_hyperoctahedral(n))


def _elements(n: int):
    # cached tuple within the bound, a stream beyond it (only reachable when the bound is lifted)
    return hyperoctahedral(n) if n <= 6 else iter_hyperoctahedral(n)


def hyperoctahedral_factors(h: Permutation) -> tuple[Permutation, tuple[int, ...]]:
    """Split ``h = lift_even(pi) o lift_odd(pi) o flips(bits)`` and return ``(pi, bits)``."""
    n = len(h) // 2
    pi = tuple(h[2 * k] // 2 for k in range(n))
    bits = tuple(h[2 * k] % 2 for k in range(n))
    if any(h[2 * k + 1] != 2 * pi[k] + 1 - bits[k] for k in range(n)):
        raise ValueError("not an element of the hyperoctahedral group")
    return pi, bits


@lru_cache(maxsize=None)
def _coset_profile(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # cycle-type histogram of tau*xi over xi in H_n, tau a fixed lift of class mu
    n = sum(mu)
    tau = lift_odd(class_representative(mu))
    hist = Counter(cycle_type(compose(tau, xi)) for xi in _elements(n))
    return tuple(sorted(hist.items()))


@lru_cache(maxsize=None)
def zonal_spherical(lam: Partition, mu: Partition) -> Fraction:
    """``omega_lam(mu)``: the H_n-average of ``chi_{2 lam}`` over a coset of type ``mu``."""
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if n > MAX_HYPEROCTAHEDRAL:
        raise ValueError(f"zonal spherical functions bounded by n <= {MAX_HYPEROCTAHEDRAL}")
    shape = double_partition(lam)
    total = sum(count * character(shape, ct) for ct, count in _coset_profile(tuple(mu)))
    return Fraction(total, 2**n * factorial(n))


def zonal_spherical_at(lam: Partition, sigma: Permutation) -> Fraction:
    """Direct average over H_n at an arbitrary representative ``sigma``."""
    n = sum(lam)
    shape = double_partition(lam)
    total = sum(character(shape, cycle_type(compose(sigma, xi))) for xi in _elements(n))
    return Fraction(total, 2**n * factorial(n))


def g_value(lam: Partition) -> Fraction:
    """Closed form of ``sum_mu |C_mu| omega_lam(mu)``; zero beyond two rows."""
    if len(lam) > 2:
        return Fraction(0)
    l1 = lam[0] if lam else 0
    l2 = lam[1] if len(lam) > 1 else 0
    return Fraction(factorial(2 * l2) * factorial(l1), 4**l2 * factorial(l2))


def g_sum(lam: Partition) -> Fraction:
    n = sum(lam)
    return sum((class_size(mu) * zonal_spherical(lam, mu) for mu in partitions_of(n)), Fraction(0))


@lru_cache(maxsize=None)
def G_value(lam: Partition, gamma: Partition) -> Fraction:
    """``sum_mu |C_mu| omega_lam(mu) chi_gamma(mu)``."""
    n = sum(lam)
    if sum(gamma) != n:
        raise ValueError(f"size mismatch: |{lam}| != |{gamma}|")
    return sum(
        (class_size(mu) * zonal_spherical(lam, mu) * character(gamma, mu) for mu in partitions_of(n)),
        Fraction(0),
    )


def count_factorizations(alphas, mode: str = "character") -> Fraction:
    """Number of solutions of ``pi_1 ... pi_r = 1`` with prescribed class labels.

    ``mode="character"`` constrains cycle types in S_n; ``mode="zonal"``
    constrains coset types in S_2n.
    """
    alphas = [tuple(a) for a in alphas]
    sizes = {sum(a) for a in alphas}
    if len(sizes) != 1:
        raise ValueError(f"all labels must partition the same n, got sizes {sorted(sizes)}")
    (n,) = sizes
    r = len(alphas)
    if mode == "character":
        pref = Fraction(prod(class_size(a) for a in alphas), factorial(n))
        total = sum(
            (
                Fraction(prod(character(beta, a) for a in alphas)) / Fraction(dim_sn(beta)) ** (r - 2)
                for beta in partitions_of(n)
            ),
            Fraction(0),
        )
        return pref * total
    if mode == "zonal":
        pref = Fraction(prod(double_coset_size(a) for a in alphas), factorial(2 * n))
        total = sum(
            (
                dim_sn(double_partition(beta)) * prod((zonal_spherical(beta, a) for a in alphas), start=Fraction(1))
                for beta in partitions_of(n)
            ),
            Fraction(0),
        )
        return pref * total
    raise ValueError(f"unknown mode {mode!r}")


def format_matching(m: Matching) -> str:
    return ",".join(f"{a + 1}-{b + 1}" for a, b in sorted(m))


def parse_matching(text: str) -> Matching:
    pairs = []
    for tok in text.split(","):
        a, b = tok.split("-")
        pairs.append((int(a) - 1, int(b) - 1))
    return make_matching(pairs)
