"""Command line entry point: ``quotstab <family> <verb> [options]``.

Exit codes: 0 pass, 1 a check failed, 2 usage error or infeasible size.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import battery
from .cohomseries import (
    InternalMismatch,
    check_restriction_range,
    poincare_flag_infinity,
    poincare_lquot,
    poincare_quot_infinity,
    verify_question_poincare,
    verify_restriction_range,
)
from .exactring import DEFAULT_ORDER, DEFAULT_TDEG, InexactDivision
from .fforacle import (
    InfeasibleSize,
    count_flag_points,
    count_grassmannian_points,
    count_punctual_nested,
    count_punctual_quot,
    count_stratum,
    verify_stratum_motives,
)
from .motives import (
    FlagDimensions,
    flag_motive,
    flag_motive_infinite,
    gaussian_binomial,
    grassmannian_infinite,
    verify_lbinomial,
)
from .nestedmotives import nested_generating_function, verify_nested_congruence, verify_nested_gf
from .quotmotives import (
    lquot_motive,
    quot_infinity_motive,
    verify_prelim,
    verify_stabilisation,
    verify_theorem_A_sweep,
)
from .report import IdentityViolation

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--order", "-N", type=int, default=DEFAULT_ORDER,
                   help=f"truncation order in L (z for poincare verbs), default {DEFAULT_ORDER}")
    p.add_argument("--tdeg", "-D", type=int, default=DEFAULT_TDEG,
                   help=f"bound on total t-degree, default {DEFAULT_TDEG}")
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-identical output)")
    return p


# handlers return (exit code, json payload, text)


def _value(value, var="L"):
    return EXIT_PASS, value.to_json(), value.render(var)


def _report(rep):
    lines = [f"identity: {rep.identity}", f"range:    {json.dumps(rep.range)}"]
    if rep.note:
        lines.append(f"note:     {rep.note}")
    lines.append(f"status:   {rep.status.upper()} ({rep.checked} checks, {len(rep.failures)} failed)")
    for f in rep.failures[:20]:
        lines.append("  FAIL " + " ".join(f"{k}={v}" for k, v in f.items()))
    payload = rep.to_json()
    return (EXIT_PASS if rep.ok else EXIT_FAIL), payload, "\n".join(lines)


def _count(params, count):
    return EXIT_PASS, {"params": params, "count": count}, str(count)


def h_motive_gr(a):
    return _value(gaussian_binomial(a.d, a.n))


def h_motive_gr_inf(a):
    return _value(grassmannian_infinite(a.d, a.order))


def h_motive_flag(a):
    return _value(flag_motive(FlagDimensions(a.dims, a.n)))


def h_motive_flag_inf(a):
    return _value(flag_motive_infinite(FlagDimensions(a.dims), a.order))


def h_motive_lquot(a):
    return _value(lquot_motive(a.d, a.r, a.n))


def h_limit_quot(a):
    return _value(quot_infinity_motive(a.d, a.r, a.order))


def h_series_nested(a):
    return _value(nested_generating_function(a.l, a.tdeg, a.order))


def h_poincare_lquot(a):
    return _value(poincare_lquot(a.d, a.r, a.n), "z")


def h_poincare_quot_inf(a):
    return _value(poincare_quot_infinity(a.d, a.r, a.order), "z")


def h_poincare_flag_inf(a):
    return _value(poincare_flag_infinity(FlagDimensions(a.dims), a.order), "z")


def h_verify_lbinomial(a):
    return _report(verify_lbinomial(a.dmax, a.nmax, strict=False))


def h_verify_prelim(a):
    return _report(verify_prelim(a.rmax, a.dmax, strict=False))


def h_verify_thm_a(a):
    return _report(verify_theorem_A_sweep(a.dmax, a.rmax, a.order, strict=False))


def h_verify_stabilisation(a):
    return _report(verify_stabilisation(a.dmax, a.rmax, a.order, strict=False))


def h_verify_nested_gf(a):
    return _report(verify_nested_gf(a.l, a.tdeg, a.order, strict=False))


def h_verify_nested_congruence(a):
    return _report(verify_nested_congruence(FlagDimensions(a.dims), a.n, a.q, strict=False))


def h_verify_question(a):
    return _report(verify_question_poincare(a.dmax, a.rmax, a.order, strict=False))


def h_verify_restriction(a):
    if a.d is not None:
        if a.r is None or a.n is None:
            raise ValueError("--d needs --r and --n")
        return _report(check_restriction_range(a.d, a.r, a.n, strict=False)[1])
    return _report(verify_restriction_range(a.dmax, a.rmax, a.nmax, strict=False))


def h_verify_strata(a):
    return _report(verify_stratum_motives(a.d, a.r, a.n, a.q, strict=False))


def h_verify_all(a):
    res = battery.verify_all(a.profile)
    width = max(len(name) for name, _ in res.checks)
    lines = [f"{'check':<{width}}  status  checks  failed"]
    for name, rep in res.checks:
        lines.append(f"{name:<{width}}  {rep.status:<6}  {rep.checked:>6}  {len(rep.failures):>6}")
        for f in rep.failures[:5]:
            lines.append("    FAIL " + " ".join(f"{k}={v}" for k, v in f.items()))
    lines.append(f"overall: {res.status.upper()} (profile {res.profile})")
    return (EXIT_PASS if res.status == "pass" else EXIT_FAIL), res.to_json(), "\n".join(lines)


def h_count_gr(a):
    return _count({"d": a.d, "n": a.n, "q": a.q}, count_grassmannian_points(a.d, a.n, a.q))


def h_count_flag(a):
    return _count({"dims": list(a.dims), "n": a.n, "q": a.q}, count_flag_points(a.dims, a.n, a.q))


def h_count_quot(a):
    return _count({"d": a.d, "r": a.r, "n": a.n, "q": a.q}, count_punctual_quot(a.d, a.r, a.n, a.q))


def h_count_stratum(a):
    return _count({"h": list(a.h), "r": a.r, "n": a.n, "q": a.q}, count_stratum(a.h, a.r, a.n, a.q))


def h_count_nested(a):
    return _count({"dims": list(a.dims), "n": a.n, "q": a.q}, count_punctual_nested(a.dims, a.n, a.q))


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="quotstab",
        description="Motives and Poincare series of Quot schemes of points, with a finite-field oracle.",
    )
    families = parser.add_subparsers(dest="family", required=True)

    def family(name, help):
        return families.add_parser(name, help=help).add_subparsers(dest="verb", required=True)

    def verb(group, name, handler, help, *args):
        p = group.add_parser(name, help=help, parents=[common])
        for arg in args:
            flags, kw = arg
            p.add_argument(*flags, **kw)
        p.set_defaults(handler=handler)
        return p

    pos = lambda name, help: ((name,), {"type": int, "help": help})
    opt = lambda name, default=None, help=None, required=False: (
        (f"--{name}",), {"type": int, "default": default, "help": help, "required": required})
    dims = (("--dims",), {"type": _int_list, "required": True, "help": "comma separated d_1,...,d_l"})
    q = opt("q", 2, "prime field size (2, 3 or 5)")

    g = family("motive", "finite and stable motives")
    verb(g, "gr", h_motive_gr, "[Gr(d,n)]", pos("d", "subspace dimension"), pos("n", "ambient dimension"))
    verb(g, "gr-inf", h_motive_gr_inf, "[Gr(d,inf)] mod L^N", pos("d", "subspace dimension"))
    verb(g, "flag", h_motive_flag, "[Fl(d_1..d_l, n)]", dims, opt("n", required=True))
    verb(g, "flag-inf", h_motive_flag_inf, "[Fl(d_1..d_l, inf)] mod L^N", dims)
    verb(g, "lquot", h_motive_lquot, "[LQuot^d(O^r, A^n)]", pos("d", "length"), pos("r", "rank"), pos("n", "dimension"))

    g = family("limit", "stabilised motives")
    verb(g, "quot", h_limit_quot, "[Quot^d(O^r, A^inf)_0] mod L^N", pos("d", "length"), pos("r", "rank"))

    g = family("series", "generating functions")
    verb(g, "nested", h_series_nested, "nested punctual Hilbert generating function",
         (("--l",), {"type": int, "required": True, "help": "number of t variables"}))

    g = family("poincare", "Poincare polynomials and series, in z")
    verb(g, "lquot", h_poincare_lquot, "P(LQuot^d(O^r, A^n), z)", pos("d", "length"), pos("r", "rank"), pos("n", "dimension"))
    verb(g, "quot-inf", h_poincare_quot_inf, "P(Quot^d(O^r, A^inf), z) mod z^N", pos("d", "length"), pos("r", "rank"))
    verb(g, "flag-inf", h_poincare_flag_inf, "P(Fl(d_1..d_l, inf), z) mod z^N", dims)

    g = family("verify", "identity checks; exit 1 on any violation")
    verb(g, "lbinomial", h_verify_lbinomial, "L-binomial recursion", opt("dmax", 12), opt("nmax", 12))
    verb(g, "prelim", h_verify_prelim, "closed form of R(r,d)", opt("rmax", 10), opt("dmax", 10))
    verb(g, "thm-a", h_verify_thm_a, "stable motive of the punctual Quot scheme", opt("dmax", 6), opt("rmax", 6))
    verb(g, "stabilisation", h_verify_stabilisation, "LQuot motive against its limit for n >= N + d",
         opt("dmax", 5), opt("rmax", 5))
    verb(g, "nested-gf", h_verify_nested_gf, "nested generating function against stable flag motives",
         (("--l",), {"type": int, "required": True, "help": "number of t variables"}))
    verb(g, "nested-congruence", h_verify_nested_congruence, "oracle congruence for nested Hilbert schemes",
         dims, opt("n", required=True), q)
    verb(g, "question-1-1", h_verify_question, "Hilbert series of Z[c_1..c_d]/(c_d^r) vs stable Poincare series",
         opt("dmax", 8), opt("rmax", 8))
    verb(g, "restriction-range", h_verify_restriction, "agreement of P(LQuot) with the stable series",
         opt("d"), opt("r"), opt("n"), opt("dmax", 6), opt("rmax", 6), opt("nmax", 6))
    verb(g, "strata", h_verify_strata, "oracle stratum battery",
         opt("d", required=True), opt("r", required=True), opt("n", required=True), q)
    verb(g, "all", h_verify_all, "run the whole battery",
         (("--profile",), {"choices": battery.PROFILES, "default": "quick"}))

    g = family("oracle", "finite-field point counts")
    verb(g, "count-gr", h_count_gr, "#Gr(d,n)(F_q)", opt("d", required=True), opt("n", required=True), q)
    verb(g, "count-flag", h_count_flag, "#Fl(d_1..d_l, n)(F_q)", dims, opt("n", required=True), q)
    verb(g, "count-quot", h_count_quot, "#Quot^d(O^r, A^n)_0(F_q)",
         opt("d", required=True), opt("r", required=True), opt("n", required=True), q)
    verb(g, "count-stratum", h_count_stratum, "#H_h(F_q)",
         (("--h",), {"type": _int_list, "required": True, "help": "comma separated h(0),...,h(t)"}),
         opt("r", required=True), opt("n", required=True), q)
    verb(g, "count-nested", h_count_nested, "#Hilb^{d_1+1..d_l+1}(A^n)_0(F_q)", dims, opt("n", required=True), q)
    verb(g, "verify-strata", h_verify_strata, "same as verify strata",
         opt("d", required=True), opt("r", required=True), opt("n", required=True), q)
    return parser


def dispatch(argv: list[str] | None = None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, payload, text = args.handler(args)
    except InfeasibleSize as exc:
        code, payload, text = EXIT_USAGE, {"status": "infeasible", "error": str(exc)}, f"infeasible: {exc}"
    except (IdentityViolation, InternalMismatch, InexactDivision) as exc:
        code, payload, text = EXIT_FAIL, {"status": "fail", "error": str(exc)}, f"error: {exc}"
    except ValueError as exc:
        code, payload, text = EXIT_USAGE, {"status": "usage", "error": str(exc)}, f"error: {exc}"
    if not args.json:
        return code, text
    # value verbs emit the bare exactring JSON; oracle and verify verbs carry timing
    out = dict(payload)
    if args.family == "verify":
        out.setdefault("command", f"{args.family} {args.verb}")
    if args.family in ("oracle", "verify"):
        out["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    return code, json.dumps(out, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    code, text = dispatch(argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
