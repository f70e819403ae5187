"""Weingarten functions of U(N), O(N) and COE(N), and raw entry moments.

Weingarten values are keyed by class label: cycle type for the unitary group,
coset type for the orthogonal group and COE.  The ``*_moment`` helpers expand
a Haar moment of matrix entries as a delta-constrained sum over permutations
or matchings; they are the independent route that the closed forms are
checked against.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .matchings import coset_type, zonal_spherical
from .partitions import Partition, dim_sn, double_partition, partitions_of, poly_alpha
from .symgroup import Permutation, character, compose, cycle_type, inverse


class PoleError(ZeroDivisionError):
    """A polynomial denominator vanishes at the requested ``N``."""

    def __init__(self, label: Partition, N, family: str):
        self.label = label
        self.N = N
        self.family = family
        super().__init__(f"{family} vanishes for lambda={label} at N={N}")


def delta_match(tau: Permutation, j, m) -> int:
    """1 iff ``j[k] == m[tau[k]]`` for every ``k``."""
    if not (len(tau) == len(j) == len(m)):
        raise ValueError(f"length mismatch: {len(tau)}, {len(j)}, {len(m)}")
    return int(all(j[k] == m[tau[k]] for k in range(len(tau))))


def pair_match(sigma: Permutation, i) -> int:
    """1 iff ``i`` is constant on every block of the matching ``sigma(t)``."""
    if len(sigma) != len(i):
        raise ValueError(f"length mismatch: {len(sigma)} vs {len(i)}")
    return int(all(i[sigma[2 * k]] == i[sigma[2 * k + 1]] for k in range(len(sigma) // 2)))


def interleave(i, j) -> tuple:
    if len(i) != len(j):
        raise ValueError(f"length mismatch: {len(i)} vs {len(j)}")
    return tuple(x for pair in zip(i, j) for x in pair)


@lru_cache(maxsize=4096)
def wg_unitary(mu: Partition, N):
    n = sum(mu)
    total = Fraction(0)
    for lam in partitions_of(n):
        chi = character(lam, mu)
        if chi == 0:
            continue
        den = poly_alpha(lam, N, 1)
        if den == 0:
            raise PoleError(lam, N, "[N]^(1)")
        total = total + dim_sn(lam) * chi / den
    return total / factorial(n)


@lru_cache(maxsize=4096)
def wg_orthogonal(mu: Partition, N):
    n = sum(mu)
    total = Fraction(0)
    for lam in partitions_of(n):
        omega = zonal_spherical(lam, mu)
        if omega == 0:
            continue
        den = poly_alpha(lam, N, 2)
        if den == 0:
            raise PoleError(lam, N, "[N]^(2)")
        total = total + dim_sn(double_partition(lam)) * omega / den
    return total * Fraction(2**n * factorial(n), factorial(2 * n))


def wg_coe(mu: Partition, N):
    return wg_orthogonal(mu, N + 1)


def wg_unitary_perm(sigma: Permutation, N):
    return wg_unitary(cycle_type(sigma), N)


def wg_orthogonal_perm(sigma: Permutation, N):
    return wg_orthogonal(coset_type(sigma), N)


def matching_perms(j, m) -> list[Permutation]:
    """All ``tau`` with ``j[k] == m[tau[k]]`` for every ``k``."""
    if len(j) != len(m):
        return []
    choices = [[q for q in range(len(m)) if m[q] == jk] for jk in j]
    out = []
    for combo in itertools.product(*choices):
        if len(set(combo)) == len(combo):
            out.append(combo)
    return out


def pair_matchings(i) -> list[Permutation]:
    """Canonical representatives of the matchings along which ``i`` is pairwise equal."""
    out: list[Permutation] = []
    if len(i) % 2:
        return out

    def rec(remaining: tuple[int, ...], acc: tuple[int, ...]) -> None:
        if not remaining:
            out.append(acc)
            return
        first = remaining[0]
        for k in range(1, len(remaining)):
            if i[remaining[k]] == i[first]:
                rec(remaining[1:k] + remaining[k + 1 :], acc + (first, remaining[k]))

    rec(tuple(range(len(i))), ())
    return out


def unitary_moment(a, b, c, d, N):
    """``< U_{a1 b1} ... U_{an bn} conj(U_{c1 d1}) ... conj(U_{cn dn}) >`` over U(N)."""
    if len(a) != len(c):
        return Fraction(0)
    sigmas = matching_perms(a, c)
    if not sigmas:
        return Fraction(0)
    taus = matching_perms(b, d)
    total = Fraction(0)
    for sigma in sigmas:
        sigma_inv = inverse(sigma)
        for tau in taus:
            total = total + wg_unitary_perm(compose(sigma_inv, tau), N)
    return total


def orthogonal_moment(i, j, N):
    """``< O_{i1 j1} ... O_{im jm} >`` over O(N); zero for odd ``m``."""
    if len(i) % 2:
        return Fraction(0)
    sigmas = pair_matchings(i)
    if not sigmas:
        return Fraction(0)
    taus = pair_matchings(j)
    total = Fraction(0)
    for sigma in sigmas:
        sigma_inv = inverse(sigma)
        for tau in taus:
            total = total + wg_orthogonal_perm(compose(sigma_inv, tau), N)
    return total


def coe_moment(i, j, N):
    """``< V_{i1 i2} ... V_{i(2n-1) i(2n)} conj(V_{j1 j2}) ... >`` over COE(N)."""
    if len(i) != len(j) or len(i) % 2:
        return Fraction(0)
    total = Fraction(0)
    for tau in matching_perms(i, j):
        total = total + wg_orthogonal_perm(tau, N + 1)
    return total
