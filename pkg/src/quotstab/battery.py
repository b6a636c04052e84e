"""The full verification battery behind ``quotstab verify all``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .cohomseries import poincare_lquot, verify_question_poincare, verify_restriction_range
from .fforacle import (
    count_flag_points,
    count_grassmannian_points,
    count_punctual_nested,
    count_punctual_quot,
    count_stratum,
    verify_global_congruence,
    verify_stratum_motives,
)
from .motives import FlagDimensions, flag_motive, gaussian_binomial, grassmannian_infinite, verify_lbinomial
from .nestedmotives import nested_generating_function, verify_nested_congruence, verify_nested_gf
from .quotmotives import lquot_motive, verify_prelim, verify_stabilisation, verify_theorem_A_sweep
from .report import Report

STRATA_TUPLES = ((2, 1, 2, 2), (3, 1, 2, 2), (2, 2, 2, 2), (3, 1, 2, 3), (2, 1, 3, 2), (3, 2, 2, 2))
QUICK_MAX_AMBIENT = 6
PROFILES = ("quick", "full")


def ambient_dim(d: int, r: int, n: int) -> int:
    return r * math.comb(n + d - 1, n)


def strata_tuples(profile: str):
    if profile == "quick":
        return [t for t in STRATA_TUPLES if ambient_dim(*t[:3]) <= QUICK_MAX_AMBIENT]
    return list(STRATA_TUPLES)


def check_oracle_agreement() -> Report:
    rep = Report("point counts over F_q = motives evaluated at q", {"d<=n<=": 5, "q": [2, 3]})
    for q in (2, 3):
        for n in range(6):
            for d in range(n + 1):
                got, want = count_grassmannian_points(d, n, q), gaussian_binomial(d, n).eval(q)
                rep.record(got == want, check="Gr", d=d, n=n, q=q, count=got, motive=want)
    f = FlagDimensions((1, 2), 3)
    rep.record(flag_motive(f).eval(2) == 21 == count_flag_points((1, 2), 3, 2), check="Fl(1,2;3)(F_2) = 21")
    rep.record(lquot_motive(2, 1, 2).eval(2) == 3 == count_punctual_quot(2, 1, 2, 2), check="LQuot^2(O, A^2)(F_2) = 3")
    return rep


def check_strata(profile: str) -> Report:
    rep = Report("stratum battery", {"tuples": [list(t) for t in strata_tuples(profile)]})
    for t in strata_tuples(profile):
        sub = verify_stratum_motives(*t, strict=False)
        rep.checked += sub.checked
        rep.failures.extend(dict(f, tuple=list(t)) for f in sub.failures)
    c = count_stratum((1, 1, 1), 1, 2, 2)
    rep.record(c == 6 and c % 2 == 0 and c % 4 != 0, check="sharpness of H_(1,1,1) at q=2", count=c)
    return rep


def check_congruence(profile: str) -> Report:
    rep = Report("#Quot_0(F_q) = #LQuot(F_q) mod q^(n+r-d+1)",
                 {"tuples": [list(t) for t in strata_tuples(profile)]})
    for t in strata_tuples(profile):
        sub = verify_global_congruence(*t, strict=False)
        rep.checked += sub.checked
        rep.failures.extend(dict(f, tuple=list(t)) for f in sub.failures)
    return rep


def check_poincare_routes() -> Report:
    rep = Report("P(LQuot) by strata = P(LQuot) by motive", {"d,r,n<=": 6})
    for d in range(1, 7):
        for r in range(1, 7):
            for n in range(1, 7):
                try:
                    poincare_lquot(d, r, n)
                    rep.record(True)
                except AssertionError as exc:
                    rep.record(False, d=d, r=r, n=n, error=str(exc))
    return rep


def check_nested_gf() -> Report:
    rep = Report("nested generating function", {"l": [1, 2, 3], "tdeg": 5, "order": 10})
    for length in (1, 2, 3):
        sub = verify_nested_gf(length, 5, 10, strict=False)
        rep.checked += sub.checked
        rep.failures.extend(dict(f, l=length) for f in sub.failures)
    gf = nested_generating_function(1, 5, 10)
    for d in range(5):
        rep.record(gf.coefficient((d,)) == grassmannian_infinite(d, 10), check="l=1 coefficient", d=d)
    return rep


def check_nested_congruence() -> Report:
    rep = Report("#Hilb_0(F_2) = #Fl(F_2) mod 2^(n-d_l+1)", {"n": 2, "q": 2})
    c = count_punctual_nested((1,), 2, 2)
    rep.record(c == 3 == count_flag_points((1,), 2, 2), check="dims (1) exact", count=c)
    c = count_punctual_nested((2,), 2, 2)
    rep.record(c == 7 and (c - 1) % 2 == 0, check="dims (2)", count=c)
    for dims in ((1,), (2,), (1, 2)):
        sub = verify_nested_congruence(FlagDimensions(dims), 2, 2, strict=False)
        rep.checked += sub.checked
        rep.failures.extend(sub.failures)
    return rep


@dataclass
class BatteryResult:
    profile: str
    checks: list[tuple[str, Report]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if any(not r.ok for _, r in self.checks) else "pass"

    def to_json(self) -> dict:
        return {
            "command": "verify all",
            "profile": self.profile,
            "status": self.status,
            "checks": [dict(name=name, **rep.to_json()) for name, rep in self.checks],
        }


def battery(profile: str) -> list[tuple[str, Callable[[], Report]]]:
    return [
        ("lbinomial", lambda: verify_lbinomial(12, 12, strict=False)),
        ("prelim", lambda: verify_prelim(10, 10, strict=False)),
        ("thm-a", lambda: verify_theorem_A_sweep(6, 6, 16, strict=False)),
        ("stabilisation", lambda: verify_stabilisation(5, 5, 12, strict=False)),
        ("oracle-agreement", check_oracle_agreement),
        ("strata", lambda: check_strata(profile)),
        ("congruence", lambda: check_congruence(profile)),
        ("question-1-1", lambda: verify_question_poincare(8, 8, 49, strict=False)),
        ("poincare-lquot", check_poincare_routes),
        ("restriction-range", lambda: verify_restriction_range(6, 6, 6, strict=False)),
        ("nested-gf", check_nested_gf),
        ("nested-congruence", check_nested_congruence),
    ]


def verify_all(profile: str = "quick") -> BatteryResult:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    result = BatteryResult(profile)
    for name, run in battery(profile):
        try:
            rep = run()
        except AssertionError as exc:
            rep = Report(name, {})
            rep.record(False, error=f"{type(exc).__name__}: {exc}")
        result.checks.append((name, rep))
    return result
