import math

import pytest

from quotstab import _hooks
from quotstab.exactring import ONE, LPolynomial, TruncatedLSeries
from quotstab.motives import (
    FlagDimensions,
    flag_motive,
    flag_motive_infinite,
    gaussian_binomial,
    gaussian_binomial_by_division,
    grassmannian_infinite,
    verify_lbinomial,
)
from quotstab.report import IdentityViolation


def P(*c):
    return LPolynomial(c)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(0, 5) == ONE
    assert gaussian_binomial(1, 2) == P(1, 1)
    assert gaussian_binomial(2, 4) == P(1, 1, 2, 1, 1)
    assert gaussian_binomial(2, 4).eval(2) == 35
    assert gaussian_binomial(5, 3).is_zero()


@pytest.mark.parametrize("n", range(0, 11))
def test_two_routes_and_palindromic(n):
    for d in range(n + 1):
        g = gaussian_binomial(d, n)
        assert g == gaussian_binomial_by_division(d, n)
        assert g.coeffs == g.coeffs[::-1]
        assert g.degree == d * (n - d)
        assert g.eval(1) == math.comb(n, d)


def test_grassmannian_infinite():
    assert grassmannian_infinite(0, 6) == TruncatedLSeries.one(6)
    assert grassmannian_infinite(1, 4) == P(1, 1, 1, 1)
    # stable limit of the finite Grassmannians
    for d in range(4):
        assert grassmannian_infinite(d, 8).congruent(gaussian_binomial(d, d + 10))


def test_flag_motive_examples():
    assert flag_motive(FlagDimensions((1,), 2)) == P(1, 1)
    assert flag_motive(FlagDimensions((1, 2), 3)) == P(1, 2, 2, 1)
    assert flag_motive(FlagDimensions((1, 2), 3)).eval(2) == 21
    for d, n in [(2, 5), (3, 6), (0, 4)]:
        assert flag_motive(FlagDimensions((d,), n)) == gaussian_binomial(d, n)


def test_flag_motive_degree_is_dimension():
    f = FlagDimensions((1, 3, 4), 6)
    assert flag_motive(f).degree == f.dimension


def test_flag_motive_infinite_examples():
    assert flag_motive_infinite((1, 2), 3) == P(1, 2, 3)
    assert flag_motive_infinite((0, 0, 0), 5) == TruncatedLSeries.one(5)
    assert flag_motive_infinite(FlagDimensions((3,)), 9) == grassmannian_infinite(3, 9)


def test_flag_dimensions_validation():
    with pytest.raises(ValueError):
        FlagDimensions((2, 1), 3)
    with pytest.raises(ValueError):
        FlagDimensions((1, 4), 3)
    with pytest.raises(ValueError):
        FlagDimensions(())
    assert FlagDimensions((1, 2), 4).gaps == (1, 1, 2)
    assert FlagDimensions((1, 2)).gaps == (1, 1)


def test_verify_lbinomial_sweep():
    rep = verify_lbinomial(12, 12)
    assert rep.ok and rep.checked > 0


def test_verify_lbinomial_negative_control():
    with _hooks.perturb("lbinomial"), pytest.raises(IdentityViolation) as info:
        verify_lbinomial(3, 3)
    assert info.value.report.failures
