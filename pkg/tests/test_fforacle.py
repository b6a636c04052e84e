import pytest

from quotstab import _hooks
from quotstab.fforacle import (
    InfeasibleSize,
    build_ambient,
    count_flag_points,
    count_grassmannian_points,
    count_punctual_nested,
    count_punctual_quot,
    count_stratum,
    enumerate_submodules,
    hs_function_of,
    iter_subspaces,
    rref,
    stratum_counts,
    verify_global_congruence,
    verify_stratum_motives,
)
from quotstab.motives import FlagDimensions, flag_motive, gaussian_binomial
from quotstab.quotmotives import HilbertSamuelFunction as HS
from quotstab.quotmotives import lquot_motive
from quotstab.report import CongruenceViolation, OracleMismatch


def matmul(a, b, p):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))


def test_rref_canonical():
    assert rref([(1, 1), (2, 2)], 3) == ((1, 1),)
    assert rref([(0, 1), (1, 0)], 2) == rref([(1, 1), (1, 0)], 2)


@pytest.mark.parametrize("q", [2, 3])
def test_grassmannian_counts(q):
    for n in range(6):
        for d in range(n + 1):
            assert count_grassmannian_points(d, n, q) == gaussian_binomial(d, n).eval(q)


def test_counts_examples():
    assert count_grassmannian_points(1, 2, 2) == 3
    assert count_grassmannian_points(2, 4, 2) == 35
    assert count_grassmannian_points(0, 4, 5) == 1
    assert count_flag_points((1, 2), 3, 2) == 21
    assert count_flag_points((0,), 3, 2) == 1
    assert count_flag_points((2,), 4, 3) == count_grassmannian_points(2, 4, 3)
    assert count_flag_points((1, 3), 4, 2) == flag_motive(FlagDimensions((1, 3), 4)).eval(2)


def test_subspaces_distinct():
    spaces = list(iter_subspaces(2, 4, 2))
    assert len(spaces) == len(set(spaces)) == 35


def test_infeasible():
    with pytest.raises(InfeasibleSize):
        count_grassmannian_points(4, 9, 5)
    with pytest.raises(InfeasibleSize):
        build_ambient(3, 2, 4, 2)
    with pytest.raises(ValueError):
        build_ambient(2, 1, 2, 4)


@pytest.mark.parametrize("n,r,k,dim", [(2, 1, 2, 3), (2, 1, 3, 6), (2, 2, 2, 6), (3, 1, 3, 10)])
def test_ambient_shape(n, r, k, dim):
    M = build_ambient(n, r, k, 2)
    assert M.dimension == dim
    mats = [M.matrix(a) for a in range(n)]
    for a in range(n):
        for b in range(n):
            assert matmul(mats[a], mats[b], 2) == matmul(mats[b], mats[a], 2)
        power = mats[a]
        for _ in range(k - 1):
            power = matmul(power, mats[a], 2)
        assert not any(any(row) for row in power)


def test_ambient_small_basis():
    M = build_ambient(2, 1, 2, 2)
    assert [e for _, e in M.basis] == [(0, 0), (1, 0), (0, 1)]
    assert all(sum(1 for t in M.targets[a] if t >= 0) <= 1 for a in range(2))


def test_enumerated_submodules_are_stable():
    for n, r, k, c in [(2, 1, 3, 3), (2, 2, 2, 2), (3, 1, 2, 2)]:
        M = build_ambient(n, r, k, 2)
        for w in enumerate_submodules(M, c):
            assert len(w.basis) == M.dimension - c
            assert M.is_stable(w.basis)


def test_submodule_examples():
    M = build_ambient(2, 1, 2, 2)
    assert len(enumerate_submodules(M, 2)) == 3
    assert len(enumerate_submodules(M, 0)) == 1
    assert len(enumerate_submodules(build_ambient(2, 1, 3, 2), 3)) == 7


@pytest.mark.parametrize("d,r,n,q", [(2, 1, 2, 2), (3, 1, 2, 2), (2, 2, 2, 2), (2, 1, 2, 3), (2, 1, 3, 2)])
def test_descent_matches_echelon(d, r, n, q):
    M = build_ambient(n, r, d, q)
    a = [w.basis for w in enumerate_submodules(M, d, "descent")]
    b = [w.basis for w in enumerate_submodules(M, d, "echelon")]
    assert a == b


def test_enumeration_is_deterministic():
    M = build_ambient(2, 2, 2, 3)
    assert enumerate_submodules(M, 2) == enumerate_submodules(M, 2)
    assert stratum_counts(3, 2, 2, 2) == stratum_counts(3, 2, 2, 2)


def test_hs_function_examples():
    M = build_ambient(2, 1, 3, 2)
    whole = enumerate_submodules(M, 0)[0]
    assert hs_function_of(whole, M) == HS(())
    for w in enumerate_submodules(M, 3):
        h = hs_function_of(w, M)
        assert h.size == 3
    M = build_ambient(2, 2, 2, 2)
    assert {hs_function_of(w, M) for w in enumerate_submodules(M, 2)} == {HS((1, 1)), HS((2,))}


def test_punctual_quot_counts():
    assert count_punctual_quot(2, 1, 2, 2) == 3 == lquot_motive(2, 1, 2).eval(2)
    assert count_punctual_quot(3, 1, 2, 2) == 7
    assert count_punctual_quot(0, 3, 2, 2) == 1
    for r in range(1, 4):
        assert count_punctual_quot(1, r, 2, 3) == count_grassmannian_points(1, r, 3)


def test_stratum_counts():
    assert count_stratum((1, 1), 1, 2, 2) == 3
    assert count_stratum((1, 1, 1), 1, 2, 2) == 6
    assert count_stratum((1, 2), 1, 2, 2) == 1
    assert count_stratum(HS(()), 2, 2, 2) == 1


@pytest.mark.parametrize("d,r,n,q", [(2, 1, 2, 2), (3, 1, 2, 2), (2, 2, 2, 2), (3, 1, 2, 3), (2, 1, 3, 2), (4, 1, 2, 2)])
def test_verify_stratum_motives(d, r, n, q):
    assert verify_stratum_motives(d, r, n, q).ok
    assert verify_global_congruence(d, r, n, q).ok


def test_oracle_negative_controls():
    with _hooks.perturb("strata"), pytest.raises(OracleMismatch):
        verify_stratum_motives(2, 1, 2, 2)
    with _hooks.perturb("congruence"), pytest.raises(CongruenceViolation):
        verify_global_congruence(3, 1, 2, 2)


def test_nested_counts():
    assert count_punctual_nested((0,), 2, 2) == 1
    assert count_punctual_nested((1,), 2, 2) == 3
    assert count_punctual_nested((2,), 2, 2) == 7
    c = count_punctual_nested((1, 2), 2, 2)
    assert (c - 21) % 2 == 0
