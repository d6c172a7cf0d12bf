"""The verification suite behind ``eulerzeta verify``.

Each check recomputes one quantity two independent ways and compares them
at a tolerance derived from the requested digits D:

* exact rational checks must agree exactly;
* formula-vs-formula and formula-vs-summation checks within 10^-(D-5);
* closed form vs quadrature of the Euler integral within 10^-(D-10);
* the reference integrals vs their closed forms within 10^-(D-5).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, List, Tuple

from mpmath import mp

from eulerzeta import closed_form, exact_zeta, quadrature, series_engine
from eulerzeta.numeric_core import BigReal, PrecisionContext, const_log2, const_log_pi, const_pi
from eulerzeta.report import FAIL, PASS, Report, ReportEntry

__all__ = ["run_suite", "build_checks", "summary_lines", "GOLDEN_CLOSED_FORMS", "reference_closed_forms"]

GOLDEN_CLOSED_FORMS = {
    1: "-1/8*pi^2*log2 + 7/16*zeta(3)",
    2: "-1/64*pi^4*log2 + 9/64*pi^2*zeta(3) - 93/128*zeta(5)",
}

Check = Callable[[], ReportEntry]


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _tol(exponent: int) -> Fraction:
    return Fraction(1, 10**exponent)


def _compare(
    quantity: str,
    method: str,
    ref_method: str,
    a: BigReal,
    b: BigReal,
    tol: Fraction,
    digits: int,
    terms_or_level: int,
    start: float,
) -> ReportEntry:
    diff = a.distance(b)
    ok = diff <= mp.mpf(tol.numerator) / tol.denominator
    return ReportEntry(
        quantity=quantity,
        method=method,
        digits=digits,
        value=a.to_decimal(digits),
        error_bound=a.err_str(),
        terms_or_level=terms_or_level,
        elapsed_ms=_ms(start),
        status=PASS if ok else FAIL,
        reference=b.to_decimal(digits),
        reference_method=ref_method,
        difference=mp.nstr(diff, 3),
        tolerance=f"1e-{len(str(tol.denominator)) - 1}",
    )


def reference_closed_forms(ctx: PrecisionContext) -> List[BigReal]:
    """-(pi/2) log 2,  log 2 - 1,  (pi^2/8) log(pi/2) - pi^2/16."""
    pi, log2 = const_pi(ctx), const_log2(ctx)
    pi2 = pi * pi
    return [
        -(pi / 2) * log2,
        log2 - 1,
        pi2 / 8 * (const_log_pi(ctx) - log2) - pi2 / 16,
    ]


def build_checks(digits: int, lmax: int, max_quad_level: int = quadrature.MAX_LEVEL) -> List[Check]:
    ctx = PrecisionContext(digits)
    tol_formula = _tol(digits - 5)
    tol_quad = _tol(digits - 10)
    checks: List[Check] = []

    def even(l: int) -> ReportEntry:
        start = time.perf_counter()
        r = exact_zeta.even_coeff(l)
        ref = exact_zeta.zeta_even_oracle(l)
        return ReportEntry(
            quantity=f"zeta({2 * l})/pi^{2 * l}",
            method="recurrence",
            digits=digits,
            value=str(r),
            error_bound="0",
            terms_or_level=l,
            elapsed_ms=_ms(start),
            status=PASS if r == ref else FAIL,
            reference=str(ref),
            reference_method="bernoulli",
            difference=str(r - ref),
            tolerance="0",
        )

    def golden(l: int) -> ReportEntry:
        start = time.perf_counter()
        got = str(closed_form.euler_integral_closed_form(l))
        want = GOLDEN_CLOSED_FORMS[l]
        return ReportEntry(
            quantity=f"euler_integral(l={l})",
            method="closed-form",
            digits=digits,
            value=got,
            error_bound="0",
            terms_or_level=l,
            elapsed_ms=_ms(start),
            status=PASS if got == want else FAIL,
            reference=want,
            reference_method="golden",
            tolerance="0",
        )

    def closed_value(l: int) -> BigReal:
        odd = {2 * k + 1: series_engine.zeta_odd_main(k, ctx) for k in range(1, l + 1)}
        return closed_form.eval_symbolic(closed_form.euler_integral_closed_form(l), odd, ctx)

    def integral_series(l: int) -> ReportEntry:
        start = time.perf_counter()
        return _compare(
            f"euler_integral(l={l})", "closed-form", "series",
            closed_value(l), series_engine.euler_integral_series(l, ctx),
            tol_formula, digits, series_engine.default_terms(ctx), start,
        )

    def integral_quad(l: int) -> ReportEntry:
        start = time.perf_counter()
        q = quadrature.euler_integral_quad(l, ctx, max_quad_level)
        return _compare(
            f"euler_integral(l={l})", "closed-form", "quadrature",
            closed_value(l), q.value, tol_quad, digits, q.level, start,
        )

    def odd(l: int, method: str) -> ReportEntry:
        start = time.perf_counter()
        fn = series_engine.zeta_odd_main if method == "main" else series_engine.zeta_odd_ck
        return _compare(
            f"zeta({2 * l + 1})", method, "oracle",
            fn(l, ctx), series_engine.zeta_odd_oracle(l, ctx),
            tol_formula, digits, series_engine.default_terms(ctx), start,
        )

    def zeta3_pair(a: str, b: str) -> ReportEntry:
        start = time.perf_counter()
        methods = {
            "ours": series_engine.zeta3_ours,
            "euler": series_engine.zeta3_euler,
            "ck": lambda c: series_engine.zeta_odd_ck(1, c),
        }
        return _compare(
            "zeta(3)", a, b, methods[a](ctx), methods[b](ctx),
            tol_formula, digits, series_engine.default_terms(ctx), start,
        )

    def zeta5_forms() -> ReportEntry:
        start = time.perf_counter()
        return _compare(
            "zeta(5)", "collapsed", "main",
            series_engine.zeta5_collapsed(ctx), series_engine.zeta_odd_main(2, ctx),
            tol_formula, digits, series_engine.default_terms(ctx), start,
        )

    def log_pi() -> ReportEntry:
        start = time.perf_counter()
        series = series_engine.log_pi_series(ctx)
        lhs = const_log_pi(ctx) - 1
        rhs = series.enclosure()
        return ReportEntry(
            quantity="log(pi/e)",
            method="series",
            digits=digits,
            value=series.value.to_decimal(digits),
            error_bound=rhs.err_str(),
            terms_or_level=series.terms_used,
            elapsed_ms=_ms(start),
            status=PASS if lhs.overlaps(rhs) else FAIL,
            reference=lhs.to_decimal(digits),
            reference_method="log(pi) - 1",
            difference=mp.nstr(lhs.distance(rhs), 3),
            tolerance=mp.nstr(lhs.err + rhs.err, 3),
        )

    def reference(i: int) -> ReportEntry:
        start = time.perf_counter()
        results = quadrature.reference_integrals(ctx, max_quad_level)
        names = ["int log(sin x)", "int sin(x) log(sin x)", "int x log(x)"]
        return _compare(
            names[i], "quadrature", "closed-form",
            results[i].value, reference_closed_forms(ctx)[i],
            tol_formula, digits, results[i].level, start,
        )

    for l in range(1, max(lmax, 2) + 1):
        checks.append(lambda l=l: even(l))
    for l in sorted(GOLDEN_CLOSED_FORMS):
        checks.append(lambda l=l: golden(l))
    for l in range(1, lmax + 1):
        checks.append(lambda l=l: integral_series(l))
        checks.append(lambda l=l: integral_quad(l))
    for l in range(1, lmax + 1):
        checks.append(lambda l=l: odd(l, "main"))
        checks.append(lambda l=l: odd(l, "ck"))
    for a, b in (("ours", "euler"), ("ours", "ck"), ("euler", "ck")):
        checks.append(lambda a=a, b=b: zeta3_pair(a, b))
    checks.append(zeta5_forms)
    checks.append(log_pi)
    for i in range(3):
        checks.append(lambda i=i: reference(i))
    return checks


def run_suite(
    digits: int,
    lmax: int,
    max_quad_level: int = quadrature.MAX_LEVEL,
    jobs: int = 1,
) -> Report:
    """Run every check; entries come back in a fixed order whatever ``jobs`` is."""
    checks = build_checks(digits, lmax, max_quad_level)
    if jobs <= 1:
        return Report([check() for check in checks])
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(check) for check in checks]
        return Report([f.result() for f in futures])


def summary_lines(report: Report) -> Tuple[str, ...]:
    lines = []
    for e in report.entries:
        against = f" vs {e.reference_method}" if e.reference_method else ""
        diff = f" |diff|={e.difference}" if e.difference is not None else ""
        tol = f" tol={e.tolerance}" if e.tolerance is not None else ""
        lines.append(f"{e.status} {e.quantity} [{e.method}{against}] = {e.value}{diff}{tol}")
    return tuple(lines)
