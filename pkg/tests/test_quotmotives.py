import pytest

from quotstab import _hooks
from quotstab.exactring import ONE, LPolynomial
from quotstab.motives import gaussian_binomial
from quotstab.quotmotives import (
    HilbertSamuelFunction as HS,
    LengthTooLarge,
    LengthTooSmall,
    enumerate_linear_hs,
    lquot_motive,
    nonlinear_divisibility_exponent,
    prelim_lhs,
    quot_infinity_motive,
    stratum_motive,
    theorem_a_lhs,
    verify_prelim,
    verify_stabilisation,
    verify_theorem_A,
    verify_theorem_A_sweep,
)
from quotstab.report import IdentityViolation


def P(*c):
    return LPolynomial(c)


def test_hs_function_normalisation():
    assert HS((1, 0)) == HS((1,))
    assert HS((1, 1, 1)).length == 2
    assert HS(()).length == 0 and HS(()).size == 0
    assert str(HS((2, 1))) == "(2,1)"
    with pytest.raises(ValueError):
        HS((0, 1))
    assert HS((2, 3)).is_admissible(2, 1) is False
    assert HS((1, 2)).is_admissible(2, 1)


def test_enumerate_linear_hs():
    assert enumerate_linear_hs(2, 1, 2) == [HS((1, 1))]
    assert enumerate_linear_hs(3, 2, 2) == [HS((1, 2)), HS((2, 1))]
    assert enumerate_linear_hs(1, 5, 9) == [HS((1,))]


def test_lquot_examples():
    assert lquot_motive(2, 1, 2) == P(1, 1)
    assert lquot_motive(3, 2, 2) == P(1, 1, 2, 2)
    assert lquot_motive(3, 2, 2).eval(2) == 27
    for r in range(1, 5):
        assert lquot_motive(1, r, 3) == gaussian_binomial(1, r)


def test_stratum_motive_examples():
    assert stratum_motive(HS((3,)), 4, 2) == gaussian_binomial(3, 4)
    assert stratum_motive(HS((1, 1)), 1, 2) == P(1, 1)
    assert stratum_motive(HS((2, 1)), 2, 2) == P(1, 1, 1, 1)
    with pytest.raises(LengthTooLarge):
        stratum_motive(HS((1, 1, 1)), 1, 2)


def test_lquot_is_sum_of_linear_strata():
    for d, r, n in [(3, 2, 2), (4, 3, 2), (5, 2, 3)]:
        total = sum((stratum_motive(h, r, n) for h in enumerate_linear_hs(d, r, n)), LPolynomial())
        assert total == lquot_motive(d, r, n)


def test_prelim_examples():
    assert prelim_lhs(1, 1) == ONE
    assert prelim_lhs(2, 2) == P(1, 0, 1)
    for d in range(1, 8):
        assert prelim_lhs(1, d) == ONE


def test_verify_prelim_sweep_and_control():
    assert verify_prelim(10, 10).ok
    with _hooks.perturb("prelim"), pytest.raises(IdentityViolation):
        verify_prelim(2, 2)


def test_quot_infinity_examples():
    assert quot_infinity_motive(1, 3, 5) == P(1, 1, 1)
    assert quot_infinity_motive(2, 1, 4) == P(1, 1, 1, 1)


def test_theorem_a():
    assert verify_theorem_A(1, 1, 4).ok
    assert verify_theorem_A(2, 2, 6).ok
    assert theorem_a_lhs(2, 2, 6) == quot_infinity_motive(2, 2, 6)
    assert verify_theorem_A_sweep(6, 6, 16).checked == 36
    with _hooks.perturb("thm-a"), pytest.raises(IdentityViolation):
        verify_theorem_A(2, 2, 6)


def test_stabilisation():
    assert verify_stabilisation(3, 3, 8).ok
    with _hooks.perturb("lquot"), pytest.raises(IdentityViolation):
        verify_stabilisation(1, 1, 4)


def test_nonlinear_divisibility_exponent():
    assert nonlinear_divisibility_exponent(HS((1, 1, 1)), 1, 2) == 1
    for n in range(2, 6):
        assert nonlinear_divisibility_exponent(HS((1,) * 4), 1, n) == n - 1
    assert nonlinear_divisibility_exponent(HS((2, 2, 1)), 2, 4) == 6
    with pytest.raises(LengthTooSmall):
        nonlinear_divisibility_exponent(HS((1, 1)), 1, 2)
