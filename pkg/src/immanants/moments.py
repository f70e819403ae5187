"""Second and fourth moments of immanants of the top-left n x n block.

Closed forms are sums over partitions of ``n`` with denominators from the
``[N]^(alpha)`` families.  The ``oracle_*`` functions instead expand the same
moment as a raw Weingarten sum over matrix-entry products, and are meant to be
compared with the closed forms by exact equality.

``N`` may be an ``int`` or a :class:`~immanants.ratfunc.RatFunc` indeterminate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .matchings import G_value, g_value
from .partitions import (
    Partition,
    dim_sn,
    double_partition,
    partitions_of,
    poly_alpha,
)
from .ratfunc import RatFunc
from .symgroup import all_permutations, character_of
from .weingarten import (
    PoleError,
    coe_moment,
    interleave,
    orthogonal_moment,
    unitary_moment,
)

ENSEMBLES = ("unitary", "orthogonal", "coe")

ORACLE_BOUNDS = {"prop1": 4, "prop2": 2, "coe": 3, "orth": 4, "prop5": 3}


@dataclass(frozen=True)
class MomentResult:
    ensemble: str
    gamma: Partition
    n: int
    N: int
    value: Fraction
    power: int = 2


def _check_block(n: int, N) -> None:
    if isinstance(N, int) and N < n:
        raise ValueError(f"an {n}x{n} block does not fit in an {N}x{N} matrix")


def _check_oracle(name: str, n: int) -> None:
    if n > ORACLE_BOUNDS[name]:
        raise ValueError(f"oracle {name} is bounded by n <= {ORACLE_BOUNDS[name]}, got n={n}")


def _divide(coef, den, label, N, family):
    if den == 0:
        raise PoleError(label, N, family)
    return coef / den


def unitary_imm_sq(gamma: Partition, N):
    """``<|Imm_gamma(U)|^2>`` over U(N)."""
    n = sum(gamma)
    _check_block(n, N)
    return _divide(Fraction(factorial(n)), poly_alpha(gamma, N, 1), gamma, N, "[N]^(1)")


def unitary_per_4(n: int, N):
    """``<|Per_n(U)|^4>`` over U(N)."""
    _check_block(n, N)
    total = Fraction(0)
    for lam in partitions_of(n):
        g = g_value(lam)
        if g == 0:
            continue
        shape = double_partition(lam)
        total = total + _divide(dim_sn(shape) * g * g, poly_alpha(shape, N, 1), shape, N, "[N]^(1)")
    return total * Fraction((2**n * factorial(n)) ** 2, factorial(2 * n))


def coe_imm_sq(gamma: Partition, N):
    """``<|Imm_gamma(V)|^2>`` over COE(N)."""
    n = sum(gamma)
    _check_block(n, N)
    total = Fraction(0)
    for lam in partitions_of(n):
        G = G_value(lam, gamma)
        if G == 0:
            continue
        coef = dim_sn(double_partition(lam)) * G * G
        total = total + _divide(coef, poly_alpha(lam, N + 1, 2), lam, N, "[N+1]^(2)")
    return total * Fraction(4**n * factorial(n), factorial(2 * n))


def orth_imm_sq(gamma: Partition, N):
    """``<Imm_gamma(O)^2>`` over O(N)."""
    n = sum(gamma)
    _check_block(n, N)
    total = Fraction(0)
    for lam in partitions_of(n):
        G = G_value(lam, gamma)
        if G == 0:
            continue
        coef = dim_sn(double_partition(lam)) * G
        total = total + _divide(coef, poly_alpha(lam, N, 2), lam, N, "[N]^(2)")
    pref = Fraction(factorial(n), dim_sn(gamma)) * Fraction(2**n * factorial(n), factorial(2 * n))
    return total * pref


def perm_poly_quad(n: int, N, ensemble: str = "unitary") -> list:
    """Coefficients of ``(z1 z2)^(n-m)``, indexed by m = 0..n.

    The average of ``Per_n(U - z1) Per_n(U^dagger - z2)`` only sees the
    diagonal subset terms, each contributing the second moment of a smaller
    permanent.
    """
    if ensemble == "unitary":
        second = unitary_imm_sq
    elif ensemble == "orthogonal":
        second = orth_imm_sq
    else:
        raise ValueError(f"permanent polynomials are defined for unitary/orthogonal, not {ensemble!r}")
    _check_block(n, N)
    coeffs = [Fraction(1)]
    for m in range(1, n + 1):
        coeffs.append(comb(n, m) * second((m,), N))
    return coeffs


def moment(ensemble: str, gamma: Partition, N: int, power: int = 2) -> MomentResult:
    n = sum(gamma)
    if power == 4:
        if ensemble != "unitary" or gamma != (n,):
            raise ValueError("the fourth moment is only available for the unitary permanent")
        value = unitary_per_4(n, N)
    elif power == 2:
        formula = {"unitary": unitary_imm_sq, "orthogonal": orth_imm_sq, "coe": coe_imm_sq}.get(ensemble)
        if formula is None:
            raise ValueError(f"unknown ensemble {ensemble!r}")
        value = formula(gamma, N)
    else:
        raise ValueError(f"unsupported power {power}")
    return MomentResult(ensemble, tuple(gamma), n, N, value, power)


# Pole locations, from the explicit linear factors of each denominator.


def alpha_zeros(lam: Partition, alpha: int, shift: int = 0) -> set[int]:
    """Integers N at which ``[N + shift]^(alpha)_lam`` vanishes."""
    out = set()
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out.add(i - 1 - alpha * (j - 1) - shift)
    return out


def pole_points(which: str, arg) -> set[int]:
    """Integer N where the closed form for ``which`` has a vanishing denominator.

    ``arg`` is ``gamma`` for prop1/coe/orth and ``n`` for prop2.
    """
    if which == "prop1":
        return alpha_zeros(arg, 1)
    if which == "prop2":
        return set().union(*(alpha_zeros(double_partition(l), 1) for l in partitions_of(arg) if g_value(l)))
    if which == "coe":
        n = sum(arg)
        return set().union(*(alpha_zeros(l, 2, 1) for l in partitions_of(n) if G_value(l, arg)))
    if which == "orth":
        n = sum(arg)
        return set().union(*(alpha_zeros(l, 2) for l in partitions_of(n) if G_value(l, arg)))
    raise ValueError(f"unknown formula {which!r}")


# Oracles: raw Weingarten expansions of the entry products.


def oracle_prop1(gamma: Partition, N: int) -> Fraction:
    """``sum_{p1,p2} chi(p1) chi(p2) <prod_i U_{i,p1(i)} conj(U_{i,p2(i)})>``."""
    n = sum(gamma)
    _check_oracle("prop1", n)
    _check_block(n, N)
    rows = tuple(range(n))
    perms = all_permutations(n)
    total = Fraction(0)
    for p1 in perms:
        c1 = character_of(gamma, p1)
        if c1 == 0:
            continue
        for p2 in perms:
            c2 = character_of(gamma, p2)
            if c2 == 0:
                continue
            total += c1 * c2 * unitary_moment(rows, p1, rows, p2, N)
    return total


def oracle_prop2(n: int, N: int) -> Fraction:
    """Fourth moment of the permanent from the raw unitary Weingarten expansion."""
    _check_oracle("prop2", n)
    _check_block(n, N)
    cols = interleave(range(n), range(n))
    perms = all_permutations(n)
    total = Fraction(0)
    for a, b, c, d in itertools.product(perms, repeat=4):
        total += unitary_moment(interleave(a, b), cols, cols, interleave(c, d), N)
    return total


@lru_cache(maxsize=256)
def _coe_pair_table(n: int, N: int) -> dict:
    idx = tuple(range(n))
    return {
        (a, b): coe_moment(interleave(a, idx), interleave(idx, b), N)
        for a in all_permutations(n)
        for b in all_permutations(n)
    }


def oracle_coe(gamma: Partition, N: int) -> Fraction:
    """``sum_{a,b} chi(a) chi(b) sum_tau delta_tau[a(n)<>n, n<>b(n)] W_O^{N+1}(tau)``."""
    n = sum(gamma)
    _check_oracle("coe", n)
    _check_block(n, N)
    table = _coe_pair_table(n, N)
    return sum(
        (character_of(gamma, a) * character_of(gamma, b) * v for (a, b), v in table.items()),
        Fraction(0),
    )


@lru_cache(maxsize=256)
def _orth_pair_table(n: int, N: int) -> dict:
    rows = interleave(range(n), range(n))
    return {
        (a, b): orthogonal_moment(rows, interleave(a, b), N)
        for a in all_permutations(n)
        for b in all_permutations(n)
    }


def oracle_orth(gamma: Partition, N: int) -> Fraction:
    """``sum_{a,b} chi(a) chi(b) <prod_i O_{i,a(i)} O_{i,b(i)}>`` via the matching expansion."""
    n = sum(gamma)
    _check_oracle("orth", n)
    _check_block(n, N)
    table = _orth_pair_table(n, N)
    return sum(
        (character_of(gamma, a) * character_of(gamma, b) * v for (a, b), v in table.items()),
        Fraction(0),
    )


def _subsets(n: int):
    for size in range(n + 1):
        yield from itertools.combinations(range(n), size)


def oracle_perm_poly(n: int, N: int, ensemble: str = "unitary") -> list[list[Fraction]]:
    """Full coefficient grid ``c[k1][k2]`` of ``z1^k1 z2^k2``.

    Expands both permanent polynomials over all subsets and bijections and
    averages each entry product with the raw Weingarten expansion; no
    assumption that only equal subsets contribute.
    """
    _check_oracle("prop5", n)
    _check_block(n, N)
    if ensemble not in ("unitary", "orthogonal"):
        raise ValueError(f"unsupported ensemble {ensemble!r}")
    grid = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for P1 in _subsets(n):
        for P2 in _subsets(n):
            k1, k2 = n - len(P1), n - len(P2)
            acc = Fraction(0)
            for img1 in itertools.permutations(P1):
                for img2 in itertools.permutations(P2):
                    if ensemble == "unitary":
                        acc += unitary_moment(P1, img1, P2, img2, N)
                    else:
                        acc += orthogonal_moment(P1 + P2, img1 + img2, N)
            grid[k1][k2] += (-1) ** (k1 + k2) * acc
    return grid


# Large-N behaviour, read off the exact rational function.


def _leading(R: RatFunc, order: int) -> Fraction:
    # coefficient c in R(N) = c / N^order + O(1/N^(order+1))
    if R == 0:
        return Fraction(0)
    shifted = R.degree() + order
    if shifted < 0:
        return Fraction(0)
    if shifted > 0:
        raise ValueError(f"decays slower than N^-{order}: degree {R.degree()}")
    return R.leading_coefficient()


def rational_function(which: str, arg) -> RatFunc:
    X = RatFunc.variable()
    if which == "prop2":
        return unitary_per_4(arg, X)
    if which == "prop1":
        return unitary_imm_sq(arg, X)
    if which == "coe":
        return coe_imm_sq(arg, X)
    if which == "orth":
        return orth_imm_sq(arg, X)
    raise ValueError(f"unknown formula {which!r}")


def asymptotic_check(which: str, n: int, gamma: Partition | None = None) -> Fraction:
    """Exact leading coefficient at large N.

    ``prop2``: of ``N^(2n) <|Per_n|^4>``; ``coe``: of ``N^n <|Per_n|^2>``;
    ``orth``: of ``N^n <Imm_gamma^2>`` (gamma defaults to the permanent).
    """
    if which == "prop2":
        return _leading(rational_function("prop2", n), 2 * n)
    if which == "coe":
        return _leading(rational_function("coe", gamma or (n,)), n)
    if which == "orth":
        return _leading(rational_function("orth", gamma or (n,)), n)
    raise ValueError(f"unknown asymptotic family {which!r}")
