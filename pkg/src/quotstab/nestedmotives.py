"""Punctual nested Hilbert schemes: congruence moduli and the flag generating function."""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import _hooks
from .exactring import MultiTruncatedSeries, geometric_factor
from .motives import FlagDimensions, flag_motive, flag_motive_infinite
from .report import CongruenceViolation, Report


def nested_congruence_modulus(f: FlagDimensions, n: int | None = None) -> int:
    n = f.ambient if n is None else n
    if n is None or f.dims[-1] > n:
        raise ValueError(f"need d_l <= n, got dims {f.dims} and n = {n}")
    return n - f.dims[-1] + 1


def nested_generating_function(length: int, tdeg: int, order: int) -> MultiTruncatedSeries:
    """prod_{j<l} prod_{i>=0} 1/(1 - L^i t_{j+1}...t_l), cut at total t-degree < tdeg and L^order.

    Factors with i >= order are 1 at this precision and are skipped.
    """
    out = MultiTruncatedSeries.one(length, tdeg, order)
    for j in range(length):
        q = (0,) * j + (1,) * (length - j)
        for i in range(order):
            out = out * geometric_factor(length, q, i, tdeg, order)
    return out


def monotone_exponents(length: int, tdeg: int):
    """All 0 <= d_1 <= ... <= d_l with d_1 + ... + d_l < tdeg, in lex order."""
    top = tdeg - 1
    for dims in combinations_with_replacement(range(top + 1), length):
        if sum(dims) < tdeg:
            yield dims


def verify_nested_gf(length: int, tdeg: int, order: int, strict: bool = True) -> Report:
    """Compare the product formula with the direct sum of stable flag motives, coefficientwise."""
    rep = Report(
        "sum_d [Fl(d_1..d_l, inf)] t^d = prod_j prod_i 1/(1 - L^i t_(j+1)...t_l)",
        {"l": length, "tdeg": tdeg, "order": order},
    )
    gf = _hooks.point("nested-gf", nested_generating_function(length, tdeg, order))
    seen = set()
    for dims in monotone_exponents(length, tdeg):
        seen.add(dims)
        expected = flag_motive_infinite(FlagDimensions(dims), order)
        got = gf.coefficient(dims)
        rep.record(got == expected, exponent=list(dims), got=str(got), expected=str(expected))
    for e, c in gf.terms.items():
        if e not in seen:
            rep.record(False, exponent=list(e), got=str(c), expected="0")
    if strict:
        rep.raise_if_failed()
    return rep


def verify_nested_congruence(f: FlagDimensions, n: int, q: int, strict: bool = True) -> Report:
    """#Hilb^{d_1+1..d_l+1}(A^n)_0(F_q) = #Fl(d_1..d_l, n)(F_q) mod q^{n - d_l + 1}."""
    from .fforacle import count_punctual_nested

    flag = FlagDimensions(f.dims, n)
    k = nested_congruence_modulus(flag)
    rep = Report("#Hilb_0(F_q) = #Fl(F_q) mod q^(n-d_l+1)",
                 {"dims": list(f.dims), "n": n, "q": q, "modulus": f"{q}^{k}"})
    count = _hooks.point("nested-congruence", count_punctual_nested(f.dims, n, q))
    expected = flag_motive(flag).eval(q)
    rep.record((count - expected) % q**k == 0, dims=list(f.dims), n=n, q=q,
               count=count, flag_count=expected, modulus=q**k)
    if strict:
        rep.raise_if_failed(CongruenceViolation)
    return rep
