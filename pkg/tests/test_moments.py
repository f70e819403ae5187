from fractions import Fraction
from math import comb, factorial

import pytest

from immanants import closed_forms
from immanants.moments import (
    MomentResult,
    alpha_zeros,
    asymptotic_check,
    coe_imm_sq,
    moment,
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
from immanants.partitions import partitions_of, poly_alpha
from immanants.weingarten import PoleError


def test_unitary_imm_sq_examples():
    for n in range(1, 6):
        for N in range(n, n + 5):
            assert unitary_imm_sq((n,), N) == closed_forms.unitary_perm_sq(n, N)
            assert unitary_imm_sq((1,) * n, N) == closed_forms.unitary_det_sq(n, N)
    assert unitary_imm_sq((2, 1), 3) == Fraction(1, 4)


def test_block_must_fit():
    with pytest.raises(ValueError):
        unitary_imm_sq((2, 1), 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_prop1(n):
    for gamma in partitions_of(n):
        for N in range(2 * n, 2 * n + 6):
            assert oracle_prop1(gamma, N) == unitary_imm_sq(gamma, N)
    assert oracle_prop1((1,), 5) == Fraction(1, 5)
    assert oracle_prop1((2,), 4) == Fraction(1, 10)


def test_oracle_bounds():
    with pytest.raises(ValueError):
        oracle_prop1((5,), 10)
    with pytest.raises(ValueError):
        oracle_prop2(3, 10)
    with pytest.raises(ValueError):
        oracle_coe((4,), 10)
    with pytest.raises(ValueError):
        oracle_orth((5,), 10)
    with pytest.raises(ValueError):
        oracle_perm_poly(4, 10)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_perm_quartic_matches_displayed_forms(n):
    poles = pole_points("prop2", n)
    points = [N for N in range(2 * n + 1, 2 * n + 40) if N not in poles][:25]
    for N in points:
        assert unitary_per_4(n, N) == closed_forms.perm_quartic(n, N)


def test_perm_quartic_examples():
    assert unitary_per_4(1, 3) == Fraction(1, 6)
    assert unitary_per_4(2, 5) == closed_forms.perm_quartic(2, 5)


@pytest.mark.parametrize("n", [1, 2])
def test_oracle_prop2(n):
    for N in range(5, 10):
        assert oracle_prop2(n, N) == unitary_per_4(n, N)
    assert oracle_prop2(2, 4) == unitary_per_4(2, 4)


def test_coe_examples():
    for N in range(2, 20):
        assert coe_imm_sq((1,), N) == Fraction(2, N + 1)
        assert coe_imm_sq((2,), N) == Fraction(2 * (3 * N + 1), N * (N + 1) * (N + 3))
    assert coe_imm_sq((2,), 5) == Fraction(2, 15)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_coe_displayed_forms(n):
    poles = pole_points("coe", (n,))
    points = [N for N in range(n, n + 40) if N not in poles][:20]
    for N in points:
        assert coe_imm_sq((n,), N) == closed_forms.coe_perm_sq(n, N)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_coe_determinant(n):
    for N in range(n, n + 8):
        assert coe_imm_sq((1,) * n, N) == closed_forms.coe_det_sq(n, N)
    assert coe_imm_sq((1,) * n, n) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_coe(n):
    for gamma in partitions_of(n):
        for N in range(2 * n + 1, 2 * n + 6):
            assert oracle_coe(gamma, N) == coe_imm_sq(gamma, N)
    assert oracle_coe((1,), 4) == Fraction(2, 5)


def test_orth_examples():
    for N in range(2, 20):
        assert orth_imm_sq((1,), N) == Fraction(1, N)
        assert orth_imm_sq((2,), N) == Fraction(2, (N - 1) * (N + 2))
    assert oracle_orth((1,), 3) == Fraction(1, 3)
    assert oracle_orth((2,), 4) == Fraction(1, 9)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orth_displayed_forms(n):
    poles = pole_points("orth", (n,))
    points = [N for N in range(n, n + 40) if N not in poles][:20]
    for N in points:
        assert orth_imm_sq((n,), N) == closed_forms.orth_perm_sq(n, N)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_orth_determinant_equals_unitary(n):
    for N in range(n, n + 8):
        assert orth_imm_sq((1,) * n, N) == closed_forms.orth_det_sq(n, N)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_orth(n):
    for gamma in partitions_of(n):
        for N in range(2 * n, 2 * n + 5):
            assert oracle_orth(gamma, N) == orth_imm_sq(gamma, N)


@pytest.mark.parametrize("ensemble", ["unitary", "orthogonal"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_perm_poly_matches_subset_oracle(n, ensemble):
    for N in range(2 * n, 2 * n + 4):
        coeffs = perm_poly_quad(n, N, ensemble)
        grid = oracle_perm_poly(n, N, ensemble)
        for k1 in range(n + 1):
            for k2 in range(n + 1):
                expected = coeffs[n - k1] if k1 == k2 else 0
                assert grid[k1][k2] == expected


def test_perm_poly_unitary_closed_form():
    for n in range(1, 6):
        for N in range(n, n + 5):
            assert perm_poly_quad(n, N) == closed_forms.unitary_perm_poly(n, N)
    assert perm_poly_quad(1, 7) == [1, Fraction(1, 7)]
    with pytest.raises(ValueError):
        perm_poly_quad(2, 5, "coe")


def test_perm_poly_coefficients_are_binomial_weighted():
    n, N = 4, 9
    coeffs = perm_poly_quad(n, N, "orthogonal")
    assert coeffs[0] == 1
    for m in range(1, n + 1):
        assert coeffs[m] == comb(n, m) * orth_imm_sq((m,), N)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_asymptotics(n):
    assert asymptotic_check("prop2", n) == factorial(n) * factorial(n + 1)
    assert asymptotic_check("coe", n) == factorial(n + 1)
    assert asymptotic_check("orth", n) == factorial(n)


def test_asymptotics_examples_and_other_shapes():
    assert asymptotic_check("prop2", 2) == 12
    assert asymptotic_check("coe", 3) == 24
    assert asymptotic_check("orth", 3) == 6
    for gamma in partitions_of(4):
        assert asymptotic_check("orth", 4, gamma) == 24
    with pytest.raises(ValueError):
        asymptotic_check("nope", 2)


def test_pole_points_are_exact_zeros():
    for n in range(1, 5):
        for lam in partitions_of(n):
            for alpha in (1, 2):
                for N in alpha_zeros(lam, alpha):
                    assert poly_alpha(lam, N, alpha) == 0
                for N in range(-10, 12):
                    if N not in alpha_zeros(lam, alpha):
                        assert poly_alpha(lam, N, alpha) != 0


@pytest.mark.parametrize("n", range(1, 6))
def test_all_poles_lie_below_block_size(n):
    for gamma in partitions_of(n):
        for which in ("prop1", "coe", "orth"):
            assert all(N < n for N in pole_points(which, gamma))
    assert all(N < n for N in pole_points("prop2", n))


def test_pole_error_below_block_guard():
    from immanants.moments import _divide

    with pytest.raises(PoleError) as info:
        _divide(Fraction(1), poly_alpha((1, 1), 1, 1), (1, 1), 1, "[N]^(1)")
    assert info.value.label == (1, 1)


def test_moment_dispatch():
    res = moment("unitary", (2,), 4)
    assert isinstance(res, MomentResult)
    assert res.value == Fraction(1, 10)
    assert moment("coe", (1, 1), 5).value == Fraction(1, 5)
    assert moment("orthogonal", (2,), 5).value == Fraction(1, 14)
    assert moment("unitary", (2,), 4, power=4).value == unitary_per_4(2, 4)
    with pytest.raises(ValueError):
        moment("orthogonal", (2,), 4, power=4)
    with pytest.raises(ValueError):
        moment("symplectic", (2,), 4)
