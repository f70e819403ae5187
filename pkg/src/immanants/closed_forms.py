"""Explicit closed forms for special cases, written out by hand.

These are kept separate from the general sum formulas in :mod:`moments` so
that each can serve as a check on the other.  Every function accepts an
integer ``N`` (or anything with ring arithmetic) and returns an exact value.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod


def _f(x):
    return Fraction(x) if isinstance(x, int) else x


def _rising(N, start: int, stop: int):
    """``prod_{k=start}^{stop} (N + k)``."""
    return prod((N + k for k in range(start, stop + 1)), start=1)


def perm_quartic(n: int, N):
    """``<|Per_n(U)|^4>`` over U(N) for n = 1..4."""
    if n == 1:
        return _f(2) / (N * (N + 1))
    if n == 2:
        return _f(4) * (3 * N * N - N + 2) / (N * N * (N - 1) * (N + 1) * (N + 2) * (N + 3))
    if n == 3:
        return _f(144) * (N * N + N + 4) / (N * N * (N - 1) * _rising(N, 1, 5))
    if n == 4:
        num = 576 * (5 * N**4 + 30 * N**3 + 127 * N**2 + 294 * N + 264)
        den = N * N * (N - 1) * (N + 1) ** 2 * (N + 2) ** 2 * _rising(N, 3, 7)
        return _f(num) / den
    raise ValueError("closed form available for n = 1..4 only")


def coe_perm_sq(n: int, N):
    """``<|Per_n(V)|^2>`` over COE(N), top-left block, n = 1..4."""
    if n == 1:
        return _f(2) / (N + 1)
    if n == 2:
        return _f(2) * (3 * N + 1) / (N * (N + 1) * (N + 3))
    if n == 3:
        return _f(24) / (N * (N + 3) * (N + 5))
    if n == 4:
        num = 24 * (5 * N * N + 20 * N + 23)
        den = N * (N + 1) * (N + 2) * (N + 3) * (N + 5) * (N + 7)
        return _f(num) / den
    raise ValueError("closed form available for n = 1..4 only")


def orth_perm_sq(n: int, N):
    """``<Per_n(O)^2>`` over O(N), n = 1..4."""
    if n == 1:
        return _f(1) / N
    if n == 2:
        return _f(2) / ((N - 1) * (N + 2))
    if n == 3:
        return _f(6) / (N * (N - 1) * (N + 4))
    if n == 4:
        return _f(24) / (N * (N - 1) * (N + 1) * (N + 6))
    raise ValueError("closed form available for n = 1..4 only")


def unitary_perm_sq(n: int, N: int) -> Fraction:
    return Fraction(factorial(n) * factorial(N - 1), factorial(N + n - 1))


def unitary_det_sq(n: int, N: int) -> Fraction:
    return Fraction(factorial(n) * factorial(N - n), factorial(N))


def coe_det_sq(n: int, N: int) -> Fraction:
    return Fraction(factorial(n + 1) * factorial(N - n + 1), factorial(N + 1))


def orth_det_sq(n: int, N: int) -> Fraction:
    return unitary_det_sq(n, N)


def unitary_perm_poly(n: int, N: int) -> list[Fraction]:
    """Coefficients of ``(z1 z2)^(n-m)``, m = 0..n, in the averaged product of permanent polynomials."""
    return [
        Fraction(factorial(n) * factorial(N - 1), factorial(n - m) * factorial(N + m - 1))
        for m in range(n + 1)
    ]


def quartic_leading(n: int) -> int:
    return factorial(n) * factorial(n + 1)
