"""Acceptance criteria, one test each.

Each test records a PASS/FAIL line; ``conftest.py`` prints them at the end of
the run. ``python tests/test_acceptance.py`` runs them without pytest.
"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from mpmath import mpf

from eulerzeta.closed_form import (
    LOG2,
    LOGPI,
    Atom,
    SymbolicConstant,
    eval_symbolic,
    euler_integral_closed_form,
    sym_combine,
    zeta_atom,
)
from eulerzeta.exact_zeta import EvenZetaTable, zeta_even_coeff, zeta_even_oracle
from eulerzeta.numeric_core import PrecisionContext, const_log2, const_log_pi, const_pi, pow_int
from eulerzeta.quadrature import euler_integral_quad, reference_integrals
from eulerzeta.series_engine import (
    euler_integral_series,
    log_pi_identity,
    log_pi_series,
    tail_series_S,
    zeta3_euler,
    zeta3_ours,
    zeta_odd_ck,
    zeta_odd_main,
    zeta_odd_oracle,
)
from eulerzeta.verify import reference_closed_forms

RESULTS = []


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def tol(exponent: int) -> mpf:
    return mpf(10) ** -exponent


def test_criterion_1_exact_even_table():
    start = time.perf_counter()
    table = EvenZetaTable()
    coeffs = [zeta_even_coeff(l, table) for l in range(1, 51)]
    elapsed = time.perf_counter() - start
    golden = coeffs[0] == Fraction(1, 6) and coeffs[1] == Fraction(1, 90)
    mismatches = [l for l in range(1, 51) if coeffs[l - 1] != zeta_even_oracle(l)]
    ok = golden and not mismatches and elapsed < 5
    record(1, "zeta(2l) exact for l=1..50", ok, f"mismatches={mismatches}, {elapsed:.2f}s < 5s")


def test_criterion_2_golden_closed_forms():
    c1 = euler_integral_closed_form(1)
    c2 = euler_integral_closed_form(2)
    want1 = {Atom(2, LOG2): Fraction(-1, 8), zeta_atom(3): Fraction(7, 16)}
    want2 = {
        Atom(4, LOG2): Fraction(-1, 64),
        zeta_atom(3, 2): Fraction(9, 64),
        zeta_atom(5): Fraction(-93, 128),
    }
    ok = c1.as_dict() == want1 and c2.as_dict() == want2
    record(2, "closed forms l=1,2 coefficient-exact", ok, f"{c1} | {c2}")


def test_criterion_3_triple_agreement():
    start = time.perf_counter()
    ctx = PrecisionContext(40)
    worst_series = worst_quad = mpf(0)
    for l in range(1, 6):
        odd = {2 * k + 1: zeta_odd_oracle(k, ctx) for k in range(1, l + 1)}
        closed = eval_symbolic(euler_integral_closed_form(l), odd, ctx)
        worst_series = max(worst_series, closed.distance(euler_integral_series(l, ctx)))
        worst_quad = max(worst_quad, closed.distance(euler_integral_quad(l, ctx).value))
    elapsed = time.perf_counter() - start
    ok = worst_series <= tol(35) and worst_quad <= tol(30) and elapsed < 60
    record(
        3,
        "Euler integral closed/series/quadrature, l=1..5 at 40 digits",
        ok,
        f"max|closed-series|={float(worst_series):.2e} <= 1e-35, "
        f"max|closed-quad|={float(worst_quad):.2e} <= 1e-30, {elapsed:.2f}s < 60s",
    )


def test_criterion_4_odd_zeta_vs_direct_summation():
    ctx = PrecisionContext(40)
    diffs = {}
    for l in (1, 2, 3):
        diffs[2 * l + 1] = zeta_odd_main(l, ctx).distance(zeta_odd_oracle(l, ctx))
    zeta3 = zeta_odd_oracle(1, ctx).to_decimal(20)
    ok = all(d <= tol(30) for d in diffs.values()) and zeta3 == "1.2020569031595942854"
    detail = ", ".join(f"zeta({s}): {float(d):.2e}" for s, d in diffs.items())
    record(4, "zeta(3), zeta(5), zeta(7) by recursion vs direct summation to 30 digits", ok, detail)


def test_criterion_5_zeta3_three_ways():
    ctx = PrecisionContext(40)
    forms = {"ours": zeta3_ours(ctx), "euler": zeta3_euler(ctx), "ck": zeta_odd_ck(1, ctx)}
    names = list(forms)
    diffs = {
        f"{a}-{b}": forms[a].distance(forms[b])
        for i, a in enumerate(names)
        for b in names[i + 1 :]
    }
    ok = all(d <= tol(30) for d in diffs.values())
    record(5, "zeta(3) three expressions agree to 30 digits", ok,
           ", ".join(f"{k}: {float(v):.2e}" for k, v in diffs.items()))


def test_criterion_6_log_pi_identity():
    ctx = PrecisionContext(30)
    lhs, rhs = log_pi_identity(ctx)
    overlap = lhs.overlaps(rhs)
    wide = PrecisionContext(60)
    tails_ok = True
    for K in (10, 20, 40):
        short, long = log_pi_series(wide, K), log_pi_series(wide, 4 * K)
        tails_ok &= short.value.distance(long.value) <= short.tail_bound
        for l in range(1, 6):
            s, s4 = tail_series_S(l, wide, K), tail_series_S(l, wide, 4 * K)
            tails_ok &= s.value.distance(s4.value) <= s.tail_bound
    record(6, "log(pi/e) series identity and tail bounds", overlap and tails_ok,
           f"|lhs-rhs|={float(lhs.distance(rhs)):.2e}, K-vs-4K tail checks {'ok' if tails_ok else 'violated'}")


def test_criterion_7_reference_integrals():
    ctx = PrecisionContext(30)
    quads = reference_integrals(ctx)
    exact = reference_closed_forms(ctx)
    diffs = [q.value.distance(e) for q, e in zip(quads, exact)]
    ok = all(d <= tol(25) for d in diffs)
    record(7, "three reference integrals to 25 digits", ok, ", ".join(f"{float(d):.2e}" for d in diffs))


def _random_constant(rng: random.Random) -> SymbolicConstant:
    pairs = []
    for _ in range(rng.randint(0, 5)):
        kind = rng.choice(["unit", "log2", "logpi", "zeta"])
        power = 2 * rng.randint(0, 3)
        if kind == "unit":
            atom = Atom(power)
        elif kind == "zeta":
            atom = zeta_atom(rng.choice([3, 5, 7]), power)
        else:
            atom = Atom(power, LOG2 if kind == "log2" else LOGPI)
        pairs.append((atom, Fraction(rng.randint(-99, 99), rng.randint(1, 99))))
    return SymbolicConstant.from_terms(pairs)


def _det_task(item):
    kind, l, digits = item
    ctx = PrecisionContext(digits)
    if kind == 0:
        return tail_series_S(l, ctx).value
    if kind == 1:
        return euler_integral_series(l, ctx)
    return pow_int(const_pi(ctx), 2 * l) * const_log2(ctx) - const_log_pi(ctx)


def test_criterion_8_property_suite():
    rng = random.Random(20261016)
    n = 100
    failures = {}

    wide = PrecisionContext(60)
    bad = 0
    for _ in range(n):
        l, K = rng.randint(1, 5), rng.randint(1, 45)
        s, s4 = tail_series_S(l, wide, K), tail_series_S(l, wide, 4 * K)
        bad += not s.value.distance(s4.value) <= s.tail_bound
    failures["tail-bound soundness"] = bad

    ctx = PrecisionContext(30)
    odd = {2 * k + 1: zeta_odd_oracle(k, ctx) for k in range(1, 4)}
    bad = 0
    for _ in range(n):
        a, b = _random_constant(rng), _random_constant(rng)
        s = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        t = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        lhs = eval_symbolic(sym_combine(a, b, s, t), odd, ctx)
        rhs = eval_symbolic(a, odd, ctx) * s + eval_symbolic(b, odd, ctx) * t
        bad += not lhs.overlaps(rhs)
    failures["homomorphism"] = bad

    items = [(rng.randint(0, 2), rng.randint(1, 5), rng.randint(5, 45)) for _ in range(n)]
    serial = [_det_task(i) for i in items]
    bad = 0
    for workers in (2, 8):
        with ThreadPoolExecutor(workers) as pool:
            bad += sum(a != b for a, b in zip(pool.map(_det_task, items), serial))
    failures["thread determinism"] = bad

    bad = 0
    for _ in range(n):
        digits = rng.randint(1, 60)
        lo, hi = PrecisionContext(digits), PrecisionContext(2 * digits)
        for const in (const_pi, const_log2, const_log_pi):
            a, b = const(lo), const(hi)
            bad += not (b.err < a.err and a.overlaps(b))
    failures["precision refinement"] = bad

    ok = not any(failures.values())
    record(8, f"property suite, {n} random cases each", ok,
           ", ".join(f"{k}: {v} failures" for k, v in failures.items()))


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
