"""Integer partitions and the polynomial families indexed by them.

A partition is a plain tuple of positive integers in weakly decreasing order,
e.g. ``(3, 1, 1)``.  The empty tuple is the unique partition of 0.

The evaluation point ``N`` of the polynomial families may be an ``int`` or any
object supporting ring arithmetic with integers (see :mod:`immanants.ratfunc`).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

Partition = tuple[int, ...]

MAX_N = 24


def is_partition(parts) -> bool:
    return (
        isinstance(parts, tuple)
        and all(isinstance(p, int) and p >= 1 for p in parts)
        and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
    )


def as_partition(parts) -> Partition:
    """Normalize any iterable of positive integers into a partition."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_N:
        raise ValueError(f"partition enumeration is bounded by n <= {MAX_N}")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def z_of(lam: Partition) -> int:
    """Centralizer order of a permutation with cycle type ``lam``."""
    return prod(j**v * factorial(v) for j, v in Counter(lam).items())


def class_size(lam: Partition) -> int:
    return factorial(sum(lam)) // z_of(lam)


@lru_cache(maxsize=None)
def dim_sn(lam: Partition) -> int:
    """Dimension of the irreducible S_n representation labelled by ``lam``.

    Uses the shifted-parts product formula
    ``n! prod_{i<j} (l_i - l_j) / prod_i l_i!`` with ``l_i = lam_i + len - i``.
    """
    n = sum(lam)
    ell = len(lam)
    shifted = [lam[i] + ell - 1 - i for i in range(ell)]
    num = factorial(n)
    for i in range(ell):
        for j in range(i + 1, ell):
            num *= shifted[i] - shifted[j]
    den = prod(factorial(s) for s in shifted)
    d, rem = divmod(num, den)
    assert rem == 0
    return d


def boxes(lam: Partition):
    """Yield 1-based ``(row, column)`` coordinates of the Young diagram."""
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            yield i, j


def poly_alpha(lam: Partition, N, alpha=1):
    """``prod over boxes (N + alpha*(j-1) - i + 1)``, evaluated exactly.

    For ``alpha=1`` this is ``n!/d_lam`` times the Schur function at the
    identity of U(N); for ``alpha=2`` it is the zonal polynomial there.
    """
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        alpha = alpha.numerator
    out = 1
    for i, j in boxes(lam):
        out = out * (N + (alpha * (j - 1) - i + 1))
    return out if not isinstance(out, int) else Fraction(out)


def _content_e(lam: Partition, lamc: Partition, i: int, j: int) -> int:
    def part(p: Partition, k: int) -> int:
        return p[k - 1] if k <= len(p) else 0

    if i <= j:
        return part(lam, i) + part(lam, j) - i - j + 1
    return -part(lamc, i) - part(lamc, j) + i + j - 1


def poly_brace(lam: Partition, N):
    """``prod over boxes (N - 1 + e(i, j))``; proportional to dim of the O(N) irrep."""
    lamc = conjugate(lam)
    out = 1
    for i, j in boxes(lam):
        out = out * (N + (_content_e(lam, lamc, i, j) - 1))
    return out if not isinstance(out, int) else Fraction(out)


def double_partition(lam: Partition) -> Partition:
    return tuple(2 * p for p in lam)


def double_coset_size(lam: Partition) -> int:
    """Size of the H_n double coset in S_2n labelled by coset type ``lam``."""
    n = sum(lam)
    num = 4**n * factorial(n) * class_size(lam)
    return num // 2 ** len(lam)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(t) for t in text.split(","))


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
