"""Exact checker for the zonal/orthogonal-character identity.

For ``gamma |- n`` both sides are rational functions of ``N``:

    lhs(N) = sum_lam d_{2 lam} G_{lam,gamma} / [N]^(2)_lam
    rhs(N) = (2n)!/(2^n n!) * d_gamma / {N}_gamma

Clearing denominators turns ``lhs - rhs`` into a polynomial of degree at most
``n * p(n) + n``, so exact agreement at more integer points than that proves
the identity for this ``gamma``.  The checker tests twice that many.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .matchings import G_value
from .moments import alpha_zeros
from .partitions import (
    Partition,
    _content_e,
    conjugate,
    dim_sn,
    double_partition,
    partitions_of,
    poly_alpha,
    poly_brace,
)
from .weingarten import PoleError


@dataclass
class ConjectureReport:
    n: int
    gamma: Partition
    tested_N: list[int]
    verified: bool
    first_failure: tuple[int, Fraction, Fraction] | None = None
    skipped_poles: list[int] = field(default_factory=list)
    degree_bound: int = 0

    @property
    def certified(self) -> bool:
        """True when agreement at the tested points proves the identity."""
        return self.verified and len(self.tested_N) > self.degree_bound


def degree_bound(n: int) -> int:
    return n * len(partitions_of(n)) + n


def required_points(n: int) -> int:
    return 2 * degree_bound(n)


def conjecture_lhs(gamma: Partition, N):
    n = sum(gamma)
    total = Fraction(0)
    for lam in partitions_of(n):
        G = G_value(lam, gamma)
        if G == 0:
            continue
        den = poly_alpha(lam, N, 2)
        if den == 0:
            raise PoleError(lam, N, "[N]^(2)")
        total = total + dim_sn(double_partition(lam)) * G / den
    return total


def conjecture_rhs(gamma: Partition, N):
    n = sum(gamma)
    den = poly_brace(gamma, N)
    if den == 0:
        raise PoleError(gamma, N, "{N}")
    return Fraction(factorial(2 * n), 2**n * factorial(n)) * dim_sn(gamma) / den


def brace_zeros(gamma: Partition) -> set[int]:
    lamc = conjugate(gamma)
    return {
        1 - _content_e(gamma, lamc, i, j)
        for i, row in enumerate(gamma, start=1)
        for j in range(1, row + 1)
    }


def conjecture_poles(gamma: Partition) -> set[int]:
    n = sum(gamma)
    lhs = set().union(*(alpha_zeros(lam, 2) for lam in partitions_of(n) if G_value(lam, gamma)))
    return lhs | brace_zeros(gamma)


def check_gamma(gamma: Partition, N_values) -> ConjectureReport:
    n = sum(gamma)
    poles = conjecture_poles(gamma)
    report = ConjectureReport(n, tuple(gamma), [], True, degree_bound=degree_bound(n))
    for N in N_values:
        if N in poles:
            report.skipped_poles.append(N)
            continue
        lhs, rhs = conjecture_lhs(gamma, N), conjecture_rhs(gamma, N)
        report.tested_N.append(N)
        if lhs != rhs and report.first_failure is None:
            report.first_failure = (N, lhs, rhs)
            report.verified = False
    return report


def default_range(n: int) -> tuple[int, int]:
    """``2 * degree_bound`` consecutive integers starting above every pole."""
    lo = 2 * n + 1
    return lo, lo + required_points(n) - 1


def check_conjecture(n: int, N_range: tuple[int, int] | None = None) -> list[ConjectureReport]:
    """One report per ``gamma |- n`` over the inclusive range ``N_range``."""
    lo, hi = N_range if N_range is not None else default_range(n)
    return [check_gamma(gamma, range(lo, hi + 1)) for gamma in partitions_of(n)]
