"""Motives of Grassmannians and partial flag varieties, finite and stable."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import mul

from . import _hooks
from .exactring import (
    ONE,
    ZERO,
    LPolynomial,
    TruncatedLSeries,
    geometric_inverse,
)
from .report import Report


@dataclass(frozen=True)
class FlagDimensions:
    """Dimension vector 0 <= d_1 <= ... <= d_l, ambient n (``None`` = stable)."""

    dims: tuple[int, ...]
    ambient: int | None = None

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        if not dims:
            raise ValueError("a flag needs at least one step")
        if dims[0] < 0 or any(a > b for a, b in zip(dims, dims[1:])):
            raise ValueError(f"dimensions {dims} are not weakly increasing and nonnegative")
        if self.ambient is not None and dims[-1] > self.ambient:
            raise ValueError(f"d_l = {dims[-1]} exceeds ambient dimension {self.ambient}")
        object.__setattr__(self, "dims", dims)

    @property
    def length(self) -> int:
        return len(self.dims)

    @property
    def gaps(self) -> tuple[int, ...]:
        """m_j = d_{j+1} - d_j with d_0 = 0; includes n - d_l at finite level."""
        ext = (0,) + self.dims
        g = tuple(b - a for a, b in zip(ext, ext[1:]))
        if self.ambient is not None:
            g += (self.ambient - self.dims[-1],)
        return g

    @property
    def dimension(self) -> int:
        """Dimension of the finite flag variety: sum over j < j' of m_j m_j'."""
        if self.ambient is None:
            raise ValueError("stable flag varieties are infinite dimensional")
        g = self.gaps
        return sum(g[i] * g[j] for i in range(len(g)) for j in range(i + 1, len(g)))


@lru_cache(maxsize=None)
def gaussian_binomial(d: int, n: int) -> LPolynomial:
    """[Gr(d, n)] via [Gr(d,n)] = [Gr(d-1,n-1)] + L^d [Gr(d,n-1)]."""
    if d < 0 or d > n:
        return ZERO
    if d == 0 or d == n:
        return ONE
    return gaussian_binomial(d - 1, n - 1) + gaussian_binomial(d, n - 1).shift(d)


def _lk_minus_one(k: int) -> LPolynomial:
    return LPolynomial.monomial(k) - 1


def _falling(ks) -> LPolynomial:
    return reduce(mul, (_lk_minus_one(k) for k in ks), ONE)


def gaussian_binomial_by_division(d: int, n: int) -> LPolynomial:
    """[Gr(d, n)] as prod (L^k - 1) ratios; an independent route to ``gaussian_binomial``."""
    if d < 0 or d > n:
        return ZERO
    num = _falling(range(n - d + 1, n + 1))
    return num.divide_exact(_falling(range(1, d + 1)))


def grassmannian_infinite(d: int, order: int) -> TruncatedLSeries:
    out = TruncatedLSeries.one(order)
    for k in range(1, d + 1):
        out = out * geometric_inverse(ONE - LPolynomial.monomial(k), order)
    return out


def flag_motive(f: FlagDimensions) -> LPolynomial:
    if f.ambient is None:
        raise ValueError("flag_motive needs a finite ambient dimension")
    num = _falling(range(1, f.ambient + 1))
    den = reduce(mul, (_falling(range(1, m + 1)) for m in f.gaps), ONE)
    return num.divide_exact(den)


def flag_motive_infinite(f: FlagDimensions | tuple[int, ...], order: int) -> TruncatedLSeries:
    if not isinstance(f, FlagDimensions):
        f = FlagDimensions(tuple(f))
    gaps = f.gaps if f.ambient is None else f.gaps[:-1]
    out = TruncatedLSeries.one(order)
    for m in gaps:
        out = out * grassmannian_infinite(m, order)
    return out


def verify_lbinomial(d_max: int, n_max: int, strict: bool = True) -> Report:
    """Check [Gr(d+1,n+1)] = [Gr(d,n)] + L^{d+1}[Gr(d+1,n)] on 0 <= d <= d_max, 0 <= n <= n_max.

    The left side comes from the product/division formula, the right side
    from the memoised recursion.
    """
    rep = Report("Gr(d+1,n+1) = Gr(d,n) + L^(d+1)*Gr(d+1,n)", {"d_max": d_max, "n_max": n_max})
    for d in range(d_max + 1):
        for n in range(n_max + 1):
            lhs = _hooks.point("lbinomial", gaussian_binomial_by_division(d + 1, n + 1))
            rhs = gaussian_binomial(d, n) + gaussian_binomial(d + 1, n).shift(d + 1)
            rep.record(lhs == rhs, d=d, n=n, lhs=str(lhs), rhs=str(rhs))
    if strict:
        rep.raise_if_failed()
    return rep
