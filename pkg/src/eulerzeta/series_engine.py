"""Series in the even zeta values and the odd zeta values built from them.

Every infinite series here has the shape

    sum_{k>=1} w(k) zeta(2k) / 4^k

with a positive weight ``w`` that is non-increasing for large k. Since
``zeta(2k) <= zeta(2) < 1.645``, the tail past K terms is bounded by

    w(K+1) * 1.645 * sum_{k>K} 4^-k = w(K+1) * 1.645 * 4^-K / 3,

which for ``w(k) = 1/(k(k+l))`` is ``zeta(2) 4^-K / (3 (K+1)(K+1+l))``.
The even values come from the exact table as ``r_k pi^(2k)``, so a term is
``w(k) r_k (pi^2/4)^k``.

Odd values are cached per (l, precision context) and computed bottom-up,
since each level of the recursion uses all the lower ones.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

from mpmath import mp, mpf
from mpmath.libmp import from_rational, round_up

from eulerzeta.exact_zeta import bernoulli, even_coeff, factorial, zeta_even, zeta_zero
from eulerzeta.numeric_core import (
    BigReal,
    PrecisionContext,
    const_log2,
    const_log_pi,
    const_pi,
    pow_int,
)

__all__ = [
    "SeriesResult",
    "default_terms",
    "tail_bound",
    "zeta_weighted_series",
    "tail_series_S",
    "euler_integral_series",
    "zeta_odd_main",
    "zeta3_ours",
    "zeta5_collapsed",
    "zeta3_euler",
    "zeta3_euler_series",
    "log_pi_series",
    "log_pi_identity",
    "ck_series",
    "zeta_odd_ck",
    "alternating_zeta",
    "odd_reciprocal_sum",
    "zeta_value",
    "zeta_direct",
    "zeta_odd_oracle",
]

# upper bound for zeta(2) = 1.6449...
ZETA2_BOUND = Fraction(1645, 1000)

Weight = Callable[[int], Fraction]


@dataclass(frozen=True)
class SeriesResult:
    value: BigReal
    terms_used: int
    tail_bound: mpf

    def enclosure(self) -> BigReal:
        """The partial sum widened by the tail bound; contains the full series."""
        return self.value.widen(self.tail_bound)


def default_terms(ctx: PrecisionContext) -> int:
    """K with 4^-K <= 10^-digits, plus ten terms of margin."""
    return math.ceil(1.661 * ctx.digits) + 10


def tail_bound(weight: Weight, terms: int) -> Fraction:
    """Bound on the omitted terms k > terms of sum w(k) zeta(2k)/4^k."""
    return abs(weight(terms + 1)) * ZETA2_BOUND / (3 * Fraction(4) ** terms)


def _as_err(x: Fraction) -> mpf:
    return mp.make_mpf(from_rational(x.numerator, x.denominator, 64, round_up))


def zeta_weighted_series(
    weight: Weight, ctx: PrecisionContext, terms: Optional[int] = None
) -> SeriesResult:
    """Partial sum of sum_{k>=1} w(k) zeta(2k)/4^k in ascending k, with tail bound."""
    K = default_terms(ctx) if terms is None else terms
    if K < 0:
        raise ValueError("terms must be >= 0")
    pi = const_pi(ctx)
    y = pi * pi / 4
    power = BigReal.exact(1, ctx.prec)
    total = BigReal.exact(0, ctx.prec)
    for k in range(1, K + 1):
        power = power * y
        total = total + power * (weight(k) * even_coeff(k))
    return SeriesResult(total, K, _as_err(tail_bound(weight, K)))


def tail_series_S(l: int, ctx: PrecisionContext, terms: Optional[int] = None) -> SeriesResult:
    """sum_{k>=1} zeta(2k) / (k (k+l) 2^(2k))."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return zeta_weighted_series(lambda k: Fraction(1, k * (k + l)), ctx, terms)


def euler_integral_series(l: int, ctx: PrecisionContext) -> BigReal:
    """int_0^{pi/2} x^(2l-1) log(sin x) dx from the series in the even zeta values:

    (pi/2)^(2l) { (log pi - log 2)/(2l) - 1/(2l)^2 - S(l)/2 }
    """
    S = tail_series_S(l, ctx).enclosure()
    half_pi = const_pi(ctx) / 2
    inner = (const_log_pi(ctx) - const_log2(ctx)) / (2 * l) - Fraction(1, 4 * l * l) - S / 2
    return pow_int(half_pi, 2 * l) * inner


_ODD_CACHE: Dict[Tuple[str, int, PrecisionContext], BigReal] = {}
_ODD_LOCK = threading.RLock()


def _cached(kind: str, l: int, ctx: PrecisionContext, compute: Callable[[], BigReal]) -> BigReal:
    key = (kind, l, ctx)
    hit = _ODD_CACHE.get(key)
    if hit is not None:
        return hit
    # held across the computation so each key is computed exactly once
    with _ODD_LOCK:
        hit = _ODD_CACHE.get(key)
        if hit is None:
            hit = _ODD_CACHE[key] = compute()
    return hit


def zeta_odd_main(l: int, ctx: PrecisionContext) -> BigReal:
    """zeta(2l+1) from the lower odd values and the series S(l).

    zeta(2l+1) = (-1)^l 2^(2l) / (2^(2l+1) - 1) * {
        sum_{k=1}^{l-1} (-1)^(k-1) pi^(2(l-k)) / (2(l-k))! (1 - 2^(-2k)) zeta(2k+1)
        - pi^(2l)/(2l)! (log pi - 1/(2l) - l S(l)) }
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")

    def compute() -> BigReal:
        pi2 = pow_int(const_pi(ctx), 2)
        acc = BigReal.exact(0, ctx.prec)
        for k in range(1, l):
            sign = 1 if k % 2 else -1
            c = Fraction(sign, factorial(2 * (l - k))) * (1 - Fraction(1, 4**k))
            acc = acc + pow_int(pi2, l - k) * zeta_odd_main(k, ctx) * c
        S = tail_series_S(l, ctx).enclosure()
        bracket = const_log_pi(ctx) - Fraction(1, 2 * l) - S * l
        acc = acc - pow_int(pi2, l) * bracket / factorial(2 * l)
        sign = 1 if l % 2 == 0 else -1
        return acc * Fraction(sign * 4**l, 2 ** (2 * l + 1) - 1)

    for lower in range(1, l):
        _cached("main", lower, ctx, lambda lower=lower: zeta_odd_main(lower, ctx))
    return _cached("main", l, ctx, compute)


def zeta3_ours(ctx: PrecisionContext) -> BigReal:
    """zeta(3) = (2 pi^2 / 7) { log pi - 1/2 - S(1) }."""
    S = tail_series_S(1, ctx).enclosure()
    pi2 = pow_int(const_pi(ctx), 2)
    return pi2 * (const_log_pi(ctx) - Fraction(1, 2) - S) * Fraction(2, 7)


def zeta5_collapsed(ctx: PrecisionContext, terms: Optional[int] = None) -> BigReal:
    """zeta(5) = (4 pi^4 / 651) { (11/2) log pi - 29/8 - sum (2k+11) zeta(2k) / (k(k+1)(k+2) 2^(2k)) }."""
    T = zeta_weighted_series(lambda k: Fraction(2 * k + 11, k * (k + 1) * (k + 2)), ctx, terms)
    pi4 = pow_int(const_pi(ctx), 4)
    inner = const_log_pi(ctx) * Fraction(11, 2) - Fraction(29, 8) - T.enclosure()
    return pi4 * inner * Fraction(4, 651)


def zeta3_euler_series(ctx: PrecisionContext, terms: Optional[int] = None) -> SeriesResult:
    """sum_{n>=1} zeta(2n) / ((2n+1)(2n+2) 2^(2n))."""
    return zeta_weighted_series(lambda n: Fraction(1, (2 * n + 1) * (2 * n + 2)), ctx, terms)


def zeta3_euler(ctx: PrecisionContext, terms: Optional[int] = None) -> BigReal:
    """zeta(3) = (pi^2/7) { 1 - 4 sum zeta(2n) / ((2n+1)(2n+2) 2^(2n)) }."""
    T = zeta3_euler_series(ctx, terms).enclosure()
    pi2 = pow_int(const_pi(ctx), 2)
    return pi2 * (1 - T * 4) / 7


def log_pi_series(ctx: PrecisionContext, terms: Optional[int] = None) -> SeriesResult:
    """sum_{n>=1} zeta(2n) / (n (2n+1) 2^(2n)), which equals log(pi/e)."""
    return zeta_weighted_series(lambda n: Fraction(1, n * (2 * n + 1)), ctx, terms)


def log_pi_identity(ctx: PrecisionContext) -> Tuple[BigReal, BigReal]:
    """(log pi - 1, the series enclosure). The two should overlap."""
    lhs = const_log_pi(ctx) - 1
    rhs = log_pi_series(ctx).enclosure()
    return lhs, rhs


def ck_series(l: int, ctx: PrecisionContext, terms: Optional[int] = None) -> SeriesResult:
    """sum_{k>=1} zeta(2k) (2k)! / (2^(2k) (2k+2l)!)."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return zeta_weighted_series(
        lambda k: Fraction(factorial(2 * k), factorial(2 * k + 2 * l)), ctx, terms
    )


def zeta_odd_ck(l: int, ctx: PrecisionContext, include_zero_term: bool = True) -> BigReal:
    """zeta(2l+1) by the Cvijovic-Klinowski formula

    (-1)^l (2 pi)^(2l) / (l (2^(2l+1) - 1)) * [
        sum_{k=1}^{l-1} (-1)^(k-1) k zeta(2k+1) / (pi^(2k) (2l-2k)!)
        + sum_{k>=0} zeta(2k) (2k)! / (2^(2k) (2k+2l)!) ]

    The infinite sum starts at k = 0, where zeta(0) = -1/2 contributes
    -1/(2 (2l)!). Without that term the formula is wrong (for l = 1 it
    even has the wrong sign); ``include_zero_term=False`` reproduces the
    k >= 1 version for comparison.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")

    def compute() -> BigReal:
        pi = const_pi(ctx)
        pi2 = pow_int(pi, 2)
        acc = ck_series(l, ctx).enclosure()
        if include_zero_term:
            acc = acc + zeta_zero() / factorial(2 * l)
        for k in range(1, l):
            sign = 1 if k % 2 else -1
            c = Fraction(sign * k, factorial(2 * l - 2 * k))
            acc = acc + zeta_odd_ck(k, ctx, include_zero_term) * c / pow_int(pi2, k)
        sign = 1 if l % 2 == 0 else -1
        return pow_int(pi * 2, 2 * l) * acc * Fraction(sign, l * (2 ** (2 * l + 1) - 1))

    kind = "ck" if include_zero_term else "ck-no-k0"
    for lower in range(1, l):
        _cached(kind, lower, ctx, lambda lower=lower: zeta_odd_ck(lower, ctx, include_zero_term))
    return _cached(kind, l, ctx, compute)


def zeta_value(s: int, ctx: PrecisionContext) -> BigReal:
    """zeta(s) for integer s >= 2: exact table for even s, the main recursion for odd s."""
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    if s % 2 == 0:
        return zeta_even(s // 2, ctx)
    return zeta_odd_main((s - 1) // 2, ctx)


def alternating_zeta(k: int, ctx: PrecisionContext) -> BigReal:
    """sum_{n>=1} (-1)^(n-1)/n^k = (1 - 2^(1-k)) zeta(k)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return zeta_value(k, ctx) * (1 - Fraction(2) ** (1 - k))


def odd_reciprocal_sum(k: int, ctx: PrecisionContext) -> BigReal:
    """sum_{n>=1} 1/(2n-1)^k = (1 - 2^-k) zeta(k), half of sum (1 - (-1)^n)/n^k."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return zeta_value(k, ctx) * (1 - Fraction(2) ** (-k))


def zeta_direct(s: int, ctx: PrecisionContext, cutoff: Optional[int] = None) -> BigReal:
    """zeta(s) by direct summation with an Euler-Maclaurin tail.

    sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
        + sum_{j=1}^{p} B_2j/(2j)! s(s+1)...(s+2j-2) N^(1-s-2j)

    Every piece is rational, so the sum is formed exactly. For real s the
    remainder is at most the first omitted correction term in absolute value,
    which becomes the error bound.
    """
    if s < 2:
        raise ValueError(f"s must be >= 2, got {s}")
    N = cutoff if cutoff is not None else max(10, ctx.working_digits)
    target = Fraction(1, 10 ** (ctx.working_digits + 5))
    total = sum(Fraction(1, n**s) for n in range(1, N))
    total += Fraction(1, (s - 1) * N ** (s - 1)) + Fraction(1, 2 * N**s)

    def correction(j: int) -> Fraction:
        rising = 1
        for i in range(2 * j - 1):
            rising *= s + i
        return bernoulli(2 * j) / factorial(2 * j) * Fraction(rising, N ** (s + 2 * j - 1))

    j = 1
    term = correction(j)
    while True:
        nxt = correction(j + 1)
        total += term
        if abs(nxt) <= target:
            remainder = abs(nxt)
            break
        if abs(nxt) >= abs(term):
            raise ArithmeticError(
                f"Euler-Maclaurin terms stopped shrinking at j={j} with cutoff N={N}; "
                "increase the cutoff"
            )
        j += 1
        term = nxt
    return BigReal.exact(total, ctx.prec).widen(_as_err(remainder))


def zeta_odd_oracle(l: int, ctx: PrecisionContext, cutoff: Optional[int] = None) -> BigReal:
    """zeta(2l+1) by direct summation; shares nothing with the series formulas."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    return zeta_direct(2 * l + 1, ctx, cutoff)
