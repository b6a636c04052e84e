import pytest

from quotstab import _hooks
from quotstab.exactring import LPolynomial, MultiTruncatedSeries
from quotstab.motives import FlagDimensions, grassmannian_infinite
from quotstab.nestedmotives import (
    monotone_exponents,
    nested_congruence_modulus,
    nested_generating_function,
    verify_nested_congruence,
    verify_nested_gf,
)
from quotstab.report import CongruenceViolation, IdentityViolation


def test_congruence_modulus():
    assert nested_congruence_modulus(FlagDimensions((1,)), 2) == 2
    assert nested_congruence_modulus(FlagDimensions((2,)), 2) == 1
    assert nested_congruence_modulus(FlagDimensions((4,), 4)) == 1
    with pytest.raises(ValueError):
        nested_congruence_modulus(FlagDimensions((3,)), 2)


def test_generating_function_small():
    gf = nested_generating_function(1, 2, 4)
    assert gf == MultiTruncatedSeries(1, 2, 4, {(0,): 1, (1,): LPolynomial((1, 1, 1, 1))})
    assert gf.coefficient((0,)) == 1


def test_l1_coefficients_are_stable_grassmannians():
    gf = nested_generating_function(1, 7, 12)
    for d in range(7):
        assert gf.coefficient((d,)) == grassmannian_infinite(d, 12)


def test_monotone_exponents():
    assert list(monotone_exponents(2, 3)) == [(0, 0), (0, 1), (0, 2), (1, 1)]


@pytest.mark.parametrize("length,tdeg,order", [(1, 6, 12), (2, 5, 10), (3, 5, 10)])
def test_verify_nested_gf(length, tdeg, order):
    assert verify_nested_gf(length, tdeg, order).ok


def test_verify_nested_gf_negative_control():
    with _hooks.perturb("nested-gf"), pytest.raises(IdentityViolation):
        verify_nested_gf(2, 3, 4)


def test_verify_nested_congruence():
    for dims in [(0,), (1,), (2,), (1, 2)]:
        assert verify_nested_congruence(FlagDimensions(dims), 2, 2).ok
    with _hooks.perturb("nested-congruence"), pytest.raises(CongruenceViolation):
        verify_nested_congruence(FlagDimensions((1,)), 2, 2)
