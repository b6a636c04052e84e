"""Hilbert-Samuel strata and motives of linear and stabilised punctual Quot schemes."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import _hooks
from .exactring import ONE, ZERO, LPolynomial, TruncatedLSeries
from .motives import gaussian_binomial, grassmannian_infinite
from .report import Report


class LengthTooLarge(ValueError):
    pass


class LengthTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class HilbertSamuelFunction:
    """The string (h(0), ..., h(t)); trailing zeros are dropped, so (d) == (d, 0).

    The empty string stands for the zero module.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        v = [int(x) for x in self.values]
        while v and v[-1] == 0:
            v.pop()
        if any(x < 0 for x in v):
            raise ValueError(f"negative entry in {tuple(v)}")
        if v and v[0] < 1:
            raise ValueError(f"h(0) must be positive in {tuple(v)}")
        object.__setattr__(self, "values", tuple(v))

    def __getitem__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    @property
    def length(self) -> int:
        """l(h): the largest index with h(i) != 0 (0 for the empty string)."""
        return max(len(self.values) - 1, 0)

    @property
    def size(self) -> int:
        return sum(self.values)

    @property
    def is_linear(self) -> bool:
        return self.length < 2

    def is_admissible(self, n: int, r: int) -> bool:
        """h(i) <= r * dim R_i, with R = k[x_1..x_n]; non-strict at every i."""
        return all(x <= r * comb(n - 1 + i, i) for i, x in enumerate(self.values))

    def __str__(self):
        return "(" + ",".join(map(str, self.values or (0,))) + ")"


def enumerate_linear_hs(d: int, r: int, n: int) -> list[HilbertSamuelFunction]:
    """Linear HS functions (i, d-i) of size d whose stratum is nonempty, by h(0)."""
    return [
        HilbertSamuelFunction((i, d - i))
        for i in range(1, min(d, r) + 1)
        if d - i <= i * n
    ]


def stratum_motive(h: HilbertSamuelFunction, r: int, n: int) -> LPolynomial:
    if not h.is_linear:
        raise LengthTooLarge(f"no closed formula for the stratum of {h} (length {h.length})")
    h0, h1 = h[0], h[1]
    if h0 > r:
        return ZERO
    return gaussian_binomial(h0, r) * gaussian_binomial(h1, h0 * n).shift(h1 * (r - h0))


def lquot_motive(d: int, r: int, n: int) -> LPolynomial:
    """Motive of the linear locus: sum_i [Gr(i,r)][Gr(d-i,in)] L^{(d-i)(r-i)}."""
    out = ZERO
    for i in range(1, min(d, r) + 1):
        out += gaussian_binomial(i, r) * gaussian_binomial(d - i, i * n).shift((d - i) * (r - i))
    return _hooks.point("lquot", out)


def _p_factor(i: int, d: int) -> LPolynomial:
    # prod_{k=d-i+1}^{d-1} (1 - L^k); empty product for i = 1
    out = ONE
    for k in range(d - i + 1, d):
        out = out * (ONE - LPolynomial.monomial(k))
    return out


def prelim_lhs(r: int, d: int) -> LPolynomial:
    out = ZERO
    for i in range(1, min(d, r) + 1):
        out += _p_factor(i, d) * gaussian_binomial(i, r).shift((d - i) * (r - i))
    return out


def powers_sum(step: int, count: int) -> LPolynomial:
    # 1 + L^step + ... + L^{step(count-1)}
    out = [0] * (step * (count - 1) + 1) if count else []
    for k in range(count):
        out[k * step] += 1
    return LPolynomial(out)


def verify_prelim(r_max: int, d_max: int, strict: bool = True) -> Report:
    rep = Report(
        "sum_i P_i(d)[Gr(i,r)]L^((d-i)(r-i)) = sum_k L^(dk); R(r+1,d) - R(r,d) = L^(dr)",
        {"r_max": r_max, "d_max": d_max},
    )
    for r in range(1, r_max + 1):
        for d in range(1, d_max + 1):
            lhs = _hooks.point("prelim", prelim_lhs(r, d))
            rhs = powers_sum(d, r)
            rep.record(lhs == rhs, r=r, d=d, kind="closed form", lhs=str(lhs), rhs=str(rhs))
            step = prelim_lhs(r + 1, d) - lhs
            rep.record(step == LPolynomial.monomial(d * r), r=r, d=d, kind="step", step=str(step))
    if strict:
        rep.raise_if_failed()
    return rep


def quot_infinity_motive(d: int, r: int, order: int) -> TruncatedLSeries:
    return grassmannian_infinite(d - 1, order) * powers_sum(d, r)


def theorem_a_lhs(d: int, r: int, order: int) -> TruncatedLSeries:
    """sum_i [Gr(i,r)] [Gr(d-i,inf)] L^{(d-i)(r-i)}, the limit of ``lquot_motive``."""
    out = TruncatedLSeries(order)
    for i in range(1, min(d, r) + 1):
        out = out + grassmannian_infinite(d - i, order) * gaussian_binomial(i, r).shift((d - i) * (r - i))
    return out


def verify_theorem_A(d: int, r: int, order: int, strict: bool = True) -> Report:
    return verify_theorem_A_sweep(d, r, order, strict=strict, only=(d, r))


def verify_theorem_A_sweep(d_max: int, r_max: int, order: int, strict: bool = True,
                           only: tuple[int, int] | None = None) -> Report:
    rng = {"d": only[0], "r": only[1]} if only else {"d_max": d_max, "r_max": r_max}
    rng["order"] = order
    rep = Report("sum_i [Gr(i,r)][Gr(d-i,inf)]L^((d-i)(r-i)) = [Gr(d-1,inf)] * sum_i L^(di)", rng)
    pairs = [only] if only else [(d, r) for d in range(1, d_max + 1) for r in range(1, r_max + 1)]
    for d, r in pairs:
        lhs = _hooks.point("thm-a", theorem_a_lhs(d, r, order))
        rhs = quot_infinity_motive(d, r, order)
        rep.record(lhs == rhs, d=d, r=r, lhs=str(lhs), rhs=str(rhs))
    if strict:
        rep.raise_if_failed()
    return rep


def verify_stabilisation(d_max: int, r_max: int, order: int, extra: int = 3, strict: bool = True) -> Report:
    """lquot_motive(d,r,n) agrees with the stable motive mod L^order for n in [order+d, order+d+extra]."""
    rep = Report("LQuot^d(O^r, A^n) = Quot^d(O^r, A^inf)_0 mod L^N for n >= N + d",
                 {"d_max": d_max, "r_max": r_max, "order": order, "n_extra": extra})
    for d in range(1, d_max + 1):
        for r in range(1, r_max + 1):
            stable = quot_infinity_motive(d, r, order)
            for n in range(order + d, order + d + extra + 1):
                finite = lquot_motive(d, r, n)
                rep.record(stable.congruent(finite), d=d, r=r, n=n)
    if strict:
        rep.raise_if_failed()
    return rep


def nonlinear_divisibility_exponent(h: HilbertSamuelFunction, r: int, n: int) -> int:
    """(r - h(0) + h(0) n - h(1)) * h(t): the power of L dividing the stratum's motive."""
    if h.is_linear:
        raise LengthTooSmall(f"{h} has length {h.length} < 2")
    return (r - h[0] + h[0] * n - h[1]) * h[h.length]
