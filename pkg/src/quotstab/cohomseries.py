"""Poincare series of linear Quot schemes, their stable limits, and flag varieties.

Everything in range is pure of Tate type with even cohomology, so a Poincare
series is the motive with L sent to z^2. Polynomials and series here are the
exactring types read in the variable z.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _hooks
from .exactring import ONE, LPolynomial, TruncatedLSeries, geometric_inverse
from .motives import FlagDimensions, flag_motive_infinite, gaussian_binomial
from .quotmotives import lquot_motive, powers_sum, quot_infinity_motive
from .report import RangeViolation, Report


class InternalMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class GradedPolynomialQuotientPresentation:
    """Z[generators] / (regular sequence of relations), degrees positive and even."""

    generator_degrees: tuple[int, ...]
    relation_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        for deg in self.generator_degrees + self.relation_degrees:
            if deg <= 0 or deg % 2:
                raise ValueError(f"degree {deg} is not positive and even")


def question_presentation(d: int, r: int) -> GradedPolynomialQuotientPresentation:
    """Z[c_1..c_d]/(c_d^r) with deg c_i = 2i."""
    return GradedPolynomialQuotientPresentation(tuple(2 * i for i in range(1, d + 1)), (2 * d * r,))


def poincare_grassmannian(d: int, n: int) -> LPolynomial:
    return gaussian_binomial(d, n).substitute(2)


def poincare_lquot(d: int, r: int, n: int) -> LPolynomial:
    """P(LQuot^d(O^r, A^n), z), summed stratum by stratum and checked against the motive."""
    by_strata = LPolynomial()
    for i in range(1, min(d, r) + 1):
        term = poincare_grassmannian(i, r) * poincare_grassmannian(d - i, i * n)
        by_strata += term.shift(2 * (d - i) * (r - i))
    by_motive = _hooks.point("poincare-lquot", lquot_motive(d, r, n).substitute(2))
    if by_strata != by_motive:
        raise InternalMismatch(f"P(LQuot^{d}(O^{r}, A^{n})): {by_strata} != {by_motive}")
    return by_strata


def _l_order(z_order: int) -> int:
    return (z_order + 1) // 2


def poincare_quot_infinity(d: int, r: int, order: int) -> TruncatedLSeries:
    """prod_{k<d} 1/(1 - z^2k) * sum_{i<r} z^{2di}, known modulo z^order."""
    out = TruncatedLSeries.one(order)
    for k in range(1, d):
        out = out * geometric_inverse(ONE - LPolynomial.monomial(2 * k), order)
    out = out * powers_sum(2 * d, r)
    motive = quot_infinity_motive(d, r, _l_order(order)).substitute(2).truncate(order)
    if out != motive:
        raise InternalMismatch(f"stable Poincare series of Quot^{d}(O^{r}): {out} != {motive}")
    return out


def hilbert_series(p: GradedPolynomialQuotientPresentation, order: int) -> TruncatedLSeries:
    out = TruncatedLSeries.one(order)
    for deg in p.relation_degrees:
        out = out * (ONE - LPolynomial.monomial(deg))
    for deg in p.generator_degrees:
        out = out * geometric_inverse(ONE - LPolynomial.monomial(deg), order)
    return out


def verify_question_poincare(d_max: int, r_max: int, order: int, strict: bool = True,
                             relation_shift: int = 0) -> Report:
    """Hilbert series of Z[c_1..c_d]/(c_d^r) against the stable Poincare series of the Quot scheme.

    ``relation_shift`` moves the relation degree, for negative controls.
    """
    rep = Report(
        "HS(Z[c_1..c_d]/(c_d^r)) = P(Quot^d(O^r, A^inf), z)",
        {"d_max": d_max, "r_max": r_max, "order": order},
        note="Poincare series equality only; the ring isomorphism itself remains open",
    )
    for d in range(1, d_max + 1):
        for r in range(1, r_max + 1):
            pres = question_presentation(d, r)
            if relation_shift:
                pres = GradedPolynomialQuotientPresentation(
                    pres.generator_degrees, tuple(x + relation_shift for x in pres.relation_degrees))
            hs = _hooks.point("question-1-1", hilbert_series(pres, order))
            ps = poincare_quot_infinity(d, r, order)
            rep.record(hs == ps, d=d, r=r, hilbert=str(hs.polynomial().render("z")),
                       poincare=str(ps.polynomial().render("z")))
    if strict:
        rep.raise_if_failed()
    return rep


def restriction_iso_range(d: int, r: int, n: int, strict: bool = True) -> int:
    """Return 2(n+r-d) after checking P(LQuot) and the stable series agree through that degree.

    A negative value means the range is empty and nothing is compared.
    """
    return check_restriction_range(d, r, n, strict=strict)[0]


def check_restriction_range(d: int, r: int, n: int, strict: bool = True) -> tuple[int, Report]:
    top = 2 * (n + r - d)
    rep = Report("P(LQuot^d(O^r, A^n)) = P(Quot^d(O^r, A^inf)) in degrees <= 2(n+r-d)",
                 {"d": d, "r": r, "n": n, "top_degree": top})
    if top >= 0:
        finite = poincare_lquot(d, r, n)
        stable = _hooks.point("restriction-range", poincare_quot_infinity(d, r, top + 1))
        bad = [k for k in range(top + 1) if finite[k] != stable[k]]
        rep.record(not bad, d=d, r=r, n=n, first_mismatch=bad[0] if bad else None)
    if strict:
        rep.raise_if_failed(RangeViolation)
    return top, rep


def verify_restriction_range(d_max: int, r_max: int, n_max: int, strict: bool = True) -> Report:
    rep = Report("P(LQuot^d(O^r, A^n)) = P(Quot^d(O^r, A^inf)) in degrees <= 2(n+r-d)",
                 {"d_max": d_max, "r_max": r_max, "n_max": n_max})
    for d in range(1, d_max + 1):
        for r in range(1, r_max + 1):
            for n in range(1, n_max + 1):
                _, sub = check_restriction_range(d, r, n, strict=False)
                rep.checked += sub.checked
                rep.failures.extend(sub.failures)
    if strict:
        rep.raise_if_failed(RangeViolation)
    return rep


def poincare_flag_infinity(f: FlagDimensions | tuple[int, ...], order: int) -> TruncatedLSeries:
    """Hilbert series of the free algebra on c^(j)_k, deg 2k, k <= m_j, checked against the motive."""
    if not isinstance(f, FlagDimensions):
        f = FlagDimensions(tuple(f))
    gaps = f.gaps if f.ambient is None else f.gaps[:-1]
    gens = tuple(2 * k for m in gaps for k in range(1, m + 1))
    out = hilbert_series(GradedPolynomialQuotientPresentation(gens), order)
    motive = flag_motive_infinite(FlagDimensions(f.dims), _l_order(order)).substitute(2).truncate(order)
    if out != motive:
        raise InternalMismatch(f"stable flag Poincare series {f.dims}: {out} != {motive}")
    return out

