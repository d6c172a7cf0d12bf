import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from eulerzeta.numeric_core import (
    BigReal,
    PrecisionContext,
    const_log2,
    const_log_pi,
    const_pi,
    pow_int,
)

from oracles import atanh_log2, atanh_log_pi, machin_pi


def frac_close(x: BigReal, ref: Fraction, slack=0) -> bool:
    return x.contains(ref) or x.overlaps(BigReal.exact(ref, x.prec + 64), slack)


def test_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(0)
    with pytest.raises(ValueError):
        PrecisionContext(10, guard=-1)
    ctx = PrecisionContext(20)
    assert ctx.guard == 15 and ctx.working_digits == 35
    assert ctx.prec >= 35 * 3.32


def test_pi_20_digits_matches_machin():
    x = const_pi(PrecisionContext(20))
    assert x.to_decimal(20) == "3.1415926535897932385"
    assert x.contains(machin_pi(60))
    assert x.err <= mp.mpf(10) ** -35


def test_pi_one_digit():
    x = const_pi(PrecisionContext(1))
    assert abs(x.value - mp.mpf("3.1")) <= mp.mpf("0.05")


def test_pi_over_pi_is_one():
    pi = const_pi(PrecisionContext(30))
    assert (pi / pi).contains(1)


def test_log2_15_digits():
    x = const_log2(PrecisionContext(15))
    assert x.to_decimal(15) == "0.693147180559945"
    assert x.contains(atanh_log2(60))


def test_log_pi_matches_atanh_oracle():
    for digits in (15, 40, 80):
        assert const_log_pi(PrecisionContext(digits)).contains(atanh_log_pi(digits + 40))


def test_log_additivity():
    ctx = PrecisionContext(30)
    d = const_log_pi(ctx) - const_log2(ctx)
    half_pi = const_pi(ctx) / 2
    # exp(d) vs pi/2, the exponential taken at much higher precision
    with mp.workdps(80):
        assert abs(mp.exp(d.value) - half_pi.value) <= 2 * (d.err + half_pi.err) + mp.mpf(10) ** -70


def test_log2_precision_consistency():
    a = const_log2(PrecisionContext(40))
    b = const_log2(PrecisionContext(20))
    assert a.to_decimal(20) == b.to_decimal(20)


def test_pow_int_examples():
    ctx = PrecisionContext(15)
    x = const_pi(ctx)
    one = pow_int(x, 0)
    assert one.value == 1 and one.err == 0
    sq = pow_int(x, 2)
    assert sq.to_decimal(15) == "9.86960440108936"
    assert sq.contains(machin_pi(60) ** 2)
    assert pow_int(x, 4).overlaps(pow_int(pow_int(x, 2), 2))
    with pytest.raises(ValueError):
        pow_int(x, -1)


def test_divide_by_interval_containing_zero():
    ctx = PrecisionContext(10)
    tiny = BigReal.from_mpf(mp.mpf("1e-30"), mp.mpf("1e-29"), ctx.prec)
    with pytest.raises(ZeroDivisionError):
        const_pi(ctx) / tiny


def test_exact_conversion():
    prec = PrecisionContext(10).prec
    assert BigReal.exact(Fraction(3, 4), prec).err == 0
    assert BigReal.exact(7, prec).err == 0
    third = BigReal.exact(Fraction(1, 3), prec)
    assert third.err > 0 and third.contains(Fraction(1, 3))


fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=10**6)


@settings(max_examples=150, deadline=None)
@given(fractions, fractions.filter(lambda q: q != 0), st.integers(5, 60))
def test_arithmetic_encloses_exact_result(a, b, digits):
    prec = PrecisionContext(digits).prec
    x, y = BigReal.exact(a, prec), BigReal.exact(b, prec)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    assert (x / y).contains(a / b)
    assert (x * 3 + Fraction(1, 7)).contains(a * 3 + Fraction(1, 7))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 60), st.sampled_from(["pi", "log2", "logpi", "mix"]))
def test_two_precisions_overlap_and_refine(digits, which):
    def expr(ctx):
        if which == "pi":
            return const_pi(ctx)
        if which == "log2":
            return const_log2(ctx)
        if which == "logpi":
            return const_log_pi(ctx)
        return pow_int(const_pi(ctx), 6) * const_log2(ctx) / 7 - const_log_pi(ctx)

    lo = expr(PrecisionContext(digits))
    hi = expr(PrecisionContext(2 * digits))
    assert lo.overlaps(hi)
    assert hi.err < lo.err


def test_deterministic_across_threads():
    def compute(digits):
        ctx = PrecisionContext(digits)
        return pow_int(const_pi(ctx), 7) / const_log2(ctx) + const_log_pi(ctx)

    serial = [compute(d) for d in range(5, 60, 5)]
    results = [None] * len(serial)

    def worker(i, d):
        results[i] = compute(d)

    threads = [threading.Thread(target=worker, args=(i, d)) for i, d in enumerate(range(5, 60, 5))]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == serial
