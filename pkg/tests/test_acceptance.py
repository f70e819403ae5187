"""Acceptance criteria, one check per criterion at its stated tolerance.

Each check prints ``PASS``/``FAIL`` with its criterion number.  The lines are
repeated in the pytest terminal summary; ``python tests/test_acceptance.py``
runs them without pytest.
"""

import sys
import time
from collections import Counter
from fractions import Fraction
from math import factorial

from immanants import closed_forms
from immanants.conjecture import check_conjecture, degree_bound
from immanants.matchings import coset_type, count_factorizations, g_sum, g_value, zonal_spherical
from immanants.moments import (
    asymptotic_check,
    coe_imm_sq,
    oracle_coe,
    oracle_orth,
    oracle_perm_poly,
    oracle_prop1,
    oracle_prop2,
    orth_imm_sq,
    perm_poly_quad,
    pole_points,
    unitary_imm_sq,
    unitary_per_4,
)
from immanants.montecarlo import mc_moment, z_score
from immanants.partitions import (
    class_size,
    dim_sn,
    double_coset_size,
    double_partition,
    partitions_of,
    poly_alpha,
    z_of,
)
from immanants.symgroup import all_permutations, character, compose, cycle_type, identity, inverse

RESULTS = {}

MC_SAMPLES = 100_000
MC_SEED = 42


def record(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[number] = line
    print(line)
    return ok


def pole_free(points, poles, count):
    return [N for N in points if N not in poles][:count]


# 1


def criterion_1():
    checked = 0
    for n in range(1, 5):
        for gamma in partitions_of(n):
            for N in range(2 * n, 2 * n + 6):
                expected = Fraction(factorial(n)) / poly_alpha(gamma, N, 1)
                if oracle_prop1(gamma, N) != expected or unitary_imm_sq(gamma, N) != expected:
                    return False, f"gamma={gamma} N={N}"
                checked += 1
    return True, f"{checked} exact equalities"


# 2


def criterion_2():
    checked = 0
    for n in range(1, 5):
        points = pole_free(range(2 * n + 1, 2 * n + 60), pole_points("prop2", n), 25)
        if len(points) < 25:
            return False, f"only {len(points)} pole-free points for n={n}"
        for N in points:
            if unitary_per_4(n, N) != closed_forms.perm_quartic(n, N):
                return False, f"n={n} N={N}"
            checked += 1
    return True, f"{checked} points"


# 3


def criterion_3():
    for n in (1, 2):
        for N in range(5, 10):
            if oracle_prop2(n, N) != unitary_per_4(n, N):
                return False, f"n={n} N={N}"
    return True, "10 exact equalities"


# 4


def criterion_4():
    for n in range(1, 4):
        for gamma in partitions_of(n):
            for N in range(2 * n + 1, 2 * n + 6):
                if oracle_coe(gamma, N) != coe_imm_sq(gamma, N):
                    return False, f"oracle gamma={gamma} N={N}"
    for n in range(1, 5):
        points = pole_free(range(n, n + 60), pole_points("coe", (n,)), 20)
        for N in points:
            if coe_imm_sq((n,), N) != closed_forms.coe_perm_sq(n, N):
                return False, f"displayed form n={n} N={N}"
    for n in range(1, 6):
        for N in range(n, n + 10):
            if coe_imm_sq((1,) * n, N) != Fraction(factorial(n + 1) * factorial(N - n + 1), factorial(N + 1)):
                return False, f"determinant n={n} N={N}"
        if coe_imm_sq((1,) * n, n) != 1:
            return False, f"determinant at n=N={n}"
    return True, "oracle, displayed forms and determinant"


# 5


def criterion_5():
    for n in range(1, 5):
        for gamma in partitions_of(n):
            for N in range(2 * n, 2 * n + 5):
                if oracle_orth(gamma, N) != orth_imm_sq(gamma, N):
                    return False, f"oracle gamma={gamma} N={N}"
    for n in range(1, 5):
        points = pole_free(range(n, n + 60), pole_points("orth", (n,)), 20)
        for N in points:
            if orth_imm_sq((n,), N) != closed_forms.orth_perm_sq(n, N):
                return False, f"displayed form n={n} N={N}"
    return True, "oracle and displayed forms"


# 6


def criterion_6():
    total = 0
    for n in range(1, 7):
        need = 2 * degree_bound(n)
        for report in check_conjecture(n):
            if not report.verified:
                N, lhs, rhs = report.first_failure
                return False, f"gamma={report.gamma} N={N} lhs={lhs} rhs={rhs}"
            if len(report.tested_N) < need or not report.certified:
                return False, f"gamma={report.gamma} only {len(report.tested_N)} points"
            if report.tested_N != list(range(report.tested_N[0], report.tested_N[0] + len(report.tested_N))):
                return False, f"gamma={report.gamma} points not consecutive"
            total += 1
    return True, f"{total} shapes certified"


# 7


def criterion_7():
    for ensemble in ("unitary", "orthogonal"):
        for n in range(1, 4):
            for N in range(2 * n, 2 * n + 4):
                coeffs = perm_poly_quad(n, N, ensemble)
                grid = oracle_perm_poly(n, N, ensemble)
                for k1 in range(n + 1):
                    for k2 in range(n + 1):
                        expected = coeffs[n - k1] if k1 == k2 else 0
                        if grid[k1][k2] != expected:
                            return False, f"{ensemble} n={n} N={N} k=({k1},{k2})"
                if ensemble == "unitary":
                    for m in range(n + 1):
                        closed = Fraction(factorial(n) * factorial(N - 1), factorial(n - m) * factorial(N + m - 1))
                        if coeffs[m] != closed:
                            return False, f"unitary coefficient n={n} N={N} m={m}"
    return True, "both ensembles"


# 8


def criterion_8():
    for n in range(1, 5):
        if asymptotic_check("prop2", n) != factorial(n) * factorial(n + 1):
            return False, f"quartic n={n}"
        if asymptotic_check("coe", n) != factorial(n + 1):
            return False, f"coe n={n}"
        if asymptotic_check("orth", n) != factorial(n):
            return False, f"orthogonal n={n}"
    return True, "n = 1..4"


# 9


def _character_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        for om in parts:
            if sum(character(mu, lam) * character(mu, om) for mu in parts) != (z_of(lam) if lam == om else 0):
                return False
    for mu in parts:
        for om in parts:
            s = sum(Fraction(character(mu, lam) * character(om, lam), z_of(lam)) for lam in parts)
            if s != (1 if mu == om else 0):
                return False
    return True


def _brute_count(n, alphas, label):
    group = all_permutations(2 * n if label is coset_type else n)
    classes = {}
    for p in group:
        classes.setdefault(label(p), []).append(p)
    count = 0

    def rec(k, acc):
        nonlocal count
        if k == len(alphas) - 1:
            count += label(inverse(acc)) == alphas[-1]
            return
        for p in classes.get(alphas[k], []):
            rec(k + 1, compose(acc, p))

    rec(0, identity(len(group[0])))
    return count


def criterion_9():
    for n in range(1, 8):
        if not _character_orthogonality(n):
            return False, f"character orthogonality n={n}"
    doubled = [double_partition(lam) for lam in partitions_of(6)]
    for a in doubled:
        for b in doubled:
            s = sum(class_size(mu) * character(a, mu) * character(b, mu) for mu in partitions_of(12))
            if s != (factorial(12) if a == b else 0):
                return False, f"doubled shapes {a} {b}"
    for n in range(1, 7):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                s = sum(dim_sn(double_partition(l)) * zonal_spherical(l, a) * zonal_spherical(l, b) for l in parts)
                if s != (Fraction(factorial(2 * n), double_coset_size(a)) if a == b else 0):
                    return False, f"zonal orthogonality (first) n={n}"
        for lam in parts:
            for beta in parts:
                s = sum(double_coset_size(a) * zonal_spherical(beta, a) * zonal_spherical(lam, a) for a in parts)
                if s != (Fraction(factorial(2 * n), dim_sn(double_partition(lam))) if lam == beta else 0):
                    return False, f"zonal orthogonality (second) n={n}"
        for lam in parts:
            if g_value(lam) != g_sum(lam):
                return False, f"g sum n={n} lam={lam}"
    for n in range(1, 5):
        counts = Counter(coset_type(p) for p in all_permutations(2 * n))
        if counts != {lam: double_coset_size(lam) for lam in partitions_of(n)}:
            return False, f"coset sizes n={n}"
    for n in range(1, 4):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                if count_factorizations([a, b]) != _brute_count(n, [a, b], cycle_type):
                    return False, f"character factorizations {a} {b}"
                if count_factorizations([a, b], mode="zonal") != _brute_count(n, [a, b], coset_type):
                    return False, f"zonal factorizations {a} {b}"
                for c in parts:
                    if count_factorizations([a, b, c]) != _brute_count(n, [a, b, c], cycle_type):
                        return False, f"character factorizations {a} {b} {c}"
    for labels in ([(2,)] * 3, [(2,), (2,), (1, 1)], [(1, 1)] * 3):
        if count_factorizations(labels, mode="zonal") != _brute_count(2, labels, coset_type):
            return False, f"zonal triple {labels}"
    return True, "characters, zonal functions, g, coset sizes, factorizations"


# 10


def mc_grid():
    grid = []
    for n in range(1, 4):
        for gamma in partitions_of(n):
            grid.append(("unitary", gamma, 2 * n + 2, 2))
    for n in (1, 2):
        grid.append(("unitary", (n,), 2 * n + 2, 4))
    for n in (1, 2):
        for gamma in partitions_of(n):
            grid.append(("coe", gamma, 6, 2))
    for n in range(1, 4):
        for gamma in partitions_of(n):
            grid.append(("orthogonal", gamma, 7, 2))
    return grid


def exact_value(ensemble, gamma, N, power):
    if power == 4:
        return unitary_per_4(sum(gamma), N)
    return {"unitary": unitary_imm_sq, "coe": coe_imm_sq, "orthogonal": orth_imm_sq}[ensemble](gamma, N)


def criterion_10():
    worst = 0.0
    for ensemble, gamma, N, power in mc_grid():
        est = mc_moment(ensemble, gamma, N, power, MC_SAMPLES, MC_SEED)
        z = z_score(est, exact_value(ensemble, gamma, N, power))
        worst = max(worst, abs(z))
        if abs(z) > 4:
            return False, f"{ensemble} gamma={gamma} N={N} power={power} z={z:.2f}"
    first = mc_moment("coe", (2,), 6, 2, MC_SAMPLES, MC_SEED, workers=1)
    again = mc_moment("coe", (2,), 6, 2, MC_SAMPLES, MC_SEED, workers=1)
    threaded = mc_moment("coe", (2,), 6, 2, MC_SAMPLES, MC_SEED, workers=4)
    if not (repr(first) == repr(again) == repr(threaded)):
        return False, "reproducibility"
    return True, f"{len(mc_grid())} runs, max |z| = {worst:.2f}, reproducible"


CRITERIA = {
    1: ("unitary immanant second moment vs raw oracle", criterion_1, 60),
    2: ("permanent fourth moment vs displayed rational functions", criterion_2, 10),
    3: ("permanent fourth moment vs raw oracle", criterion_3, 120),
    4: ("COE immanant second moment: oracle, displayed forms, determinant", criterion_4, 300),
    5: ("orthogonal immanant second moment: oracle and displayed forms", criterion_5, 300),
    6: ("zonal/orthogonal-character identity certified for n <= 6", criterion_6, 900),
    7: ("permanent polynomial correlation vs subset oracle", criterion_7, 60),
    8: ("exact large-N leading coefficients", criterion_8, 60),
    9: ("structure suites", criterion_9, 600),
    10: ("Monte Carlo grid within 4 standard errors, reproducible", criterion_10, 600),
}


def run_criterion(number):
    title, fn, budget = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    detail = f"{detail}; {elapsed:.1f}s of {budget}s budget"
    record(number, title, ok and elapsed < budget, detail)
    return ok, elapsed, budget, detail


def _check(number):
    ok, elapsed, budget, detail = run_criterion(number)
    assert ok, detail
    assert elapsed < budget, detail


def test_criterion_01():
    _check(1)


def test_criterion_02():
    _check(2)


def test_criterion_03():
    _check(3)


def test_criterion_04():
    _check(4)


def test_criterion_05():
    _check(5)


def test_criterion_06():
    _check(6)


def test_criterion_07():
    _check(7)


def test_criterion_08():
    _check(8)


def test_criterion_09():
    _check(9)


def test_criterion_10():
    _check(10)


if __name__ == "__main__":
    results = [run_criterion(k)[0] for k in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
