"""Tanh-sinh quadrature on [0, pi/2] for log-sine moment integrals.

This is the independent check on the series and closed forms: it uses only
pi from ``numeric_core`` and elementary functions from ``mpmath.libmp`` at
an explicit precision.

Nodes come from x = a + (b - a) (1 + tanh(pi/2 sinh t)) / 2. Both distances
x - a and b - x are computed directly from exp(pi sinh t), without the
cancellation in 1 - tanh, so integrands can use whichever distance is
small. No node ever lands on an endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Tuple

from mpmath import mp, mpf
from mpmath.libmp import (
    fone,
    from_int,
    fzero,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_cos,
    mpf_cosh_sinh,
    mpf_div,
    mpf_exp,
    mpf_log,
    mpf_mul,
    mpf_pi,
    mpf_pow_int,
    mpf_shift,
    mpf_sin,
    mpf_sub,
    round_nearest,
)

from eulerzeta.numeric_core import BigReal, PrecisionContext

__all__ = [
    "QuadratureResult",
    "QuadratureError",
    "tanh_sinh",
    "euler_integral_quad",
    "reference_integrals",
    "MAX_LEVEL",
]

MAX_LEVEL = 12

RND = round_nearest

# integrand(x, b - x, prec) -> f(x), all raw libmp values
Integrand = Callable[[tuple, tuple, int], tuple]


class QuadratureError(ArithmeticError):
    """Refinement reached the maximum level without meeting the tolerance."""

    def __init__(self, level: int, previous: mpf, last: mpf) -> None:
        super().__init__(
            f"tanh-sinh did not converge by level {level}: "
            f"last two estimates {mp.nstr(previous, 25)} and {mp.nstr(last, 25)}"
        )
        self.level = level
        self.previous = previous
        self.last = last


@dataclass(frozen=True)
class QuadratureResult:
    value: BigReal
    est_error: mpf
    level: int


@lru_cache(maxsize=None)
def _level_nodes(level: int, prec: int) -> Tuple[Tuple[tuple, tuple, tuple], ...]:
    """Nodes (p, q, w) for t = k h, k >= 0, that are new at this level.

    p = (x - a)/(b - a) and q = (b - x)/(b - a) at +t (they swap at -t);
    w = (pi/2) cosh t / cosh^2(pi/2 sinh t). Level 0 has h = 1 and all k;
    level m > 0 has h = 2^-m and odd k only. Nodes stop once w drops below
    2^-(prec + 20).
    """
    wp = prec + 20
    half_pi = mpf_shift(mpf_pi(wp, RND), -1)
    cutoff = mpf_shift(fone, -(prec + 20))
    h = mpf_shift(fone, -level)
    k, step = (0, 1) if level == 0 else (1, 2)
    nodes = []
    while True:
        t = mpf_mul(from_int(k), h)
        cosh_t, sinh_t = mpf_cosh_sinh(t, wp, RND)
        s = mpf_mul(half_pi, sinh_t, wp, RND)
        e = mpf_exp(mpf_shift(s, 1), wp, RND)  # exp(2s) = exp(pi sinh t)
        one_e = mpf_add(fone, e, wp, RND)
        p = mpf_div(e, one_e, prec, RND)
        q = mpf_div(fone, one_e, prec, RND)
        # 1/cosh^2 s = 4 e / (1 + e)^2
        w = mpf_div(
            mpf_shift(mpf_mul(e, mpf_mul(half_pi, cosh_t, wp, RND), wp, RND), 2),
            mpf_mul(one_e, one_e, wp, RND),
            prec,
            RND,
        )
        if k > 0 and mpf_cmp(w, cutoff) < 0:
            break
        nodes.append((p, q, w))
        k += step
    return tuple(nodes)


def tanh_sinh(
    f: Integrand,
    ctx: PrecisionContext,
    max_level: int = MAX_LEVEL,
    tol: Fraction | None = None,
) -> QuadratureResult:
    """Integrate ``f`` over [0, pi/2] by tanh-sinh with level doubling.

    ``f`` receives raw libmp values ``x`` and ``pi/2 - x`` plus the working
    precision. Refinement stops at the first level >= 2 where successive
    estimates differ by at most ``tol`` (default 10^-(digits+3)).
    """
    prec = ctx.prec
    wp = prec + 10
    span = mpf_shift(mpf_pi(wp, RND), -1)
    tol = tol if tol is not None else Fraction(1, 10 ** (ctx.digits + 3))
    tol_raw = mpf_div(from_int(tol.numerator), from_int(tol.denominator), 64, RND)

    running = fzero
    n_evals = 0
    previous = before = None
    estimate = fzero
    for level in range(max_level + 1):
        for idx, (p, q, w) in enumerate(_level_nodes(level, prec)):
            x = mpf_mul(span, p, wp, RND)
            xc = mpf_mul(span, q, wp, RND)
            fx = f(x, xc, wp)
            n_evals += 1
            if level == 0 and idx == 0:
                # t = 0 is its own mirror image
                running = mpf_add(running, mpf_mul(w, fx, wp, RND), wp, RND)
                continue
            fm = f(xc, x, wp)
            n_evals += 1
            running = mpf_add(running, mpf_mul(w, mpf_add(fx, fm, wp, RND), wp, RND), wp, RND)
        # I = h * (b - a)/2 * sum
        estimate = mpf_shift(mpf_mul(running, span, wp, RND), -level - 1)
        if previous is not None:
            diff = mpf_abs(mpf_sub(estimate, previous, wp, RND))
            if level >= 2 and mpf_cmp(diff, tol_raw) <= 0:
                # rounding: each evaluation contributes at most a few ulps of the scale
                rounding = mpf_shift(from_int(n_evals), -(prec - 8))
                value = BigReal.from_mpf(mpf_add(estimate, fzero, prec, RND), fzero, prec)
                value = value.widen(mp.make_mpf(diff)).widen(mp.make_mpf(rounding))
                return QuadratureResult(value, mp.make_mpf(diff), level)
        before, previous = previous if previous is not None else estimate, estimate
    raise QuadratureError(max_level, mp.make_mpf(before), mp.make_mpf(estimate))


def _log_sin(x: tuple, xc: tuple, prec: int) -> tuple:
    # near pi/2 use cos of the complementary distance
    if mpf_cmp(x, xc) <= 0:
        return mpf_log(mpf_sin(x, prec, RND), prec, RND)
    return mpf_log(mpf_cos(xc, prec, RND), prec, RND)


def euler_integrand(l: int) -> Integrand:
    """x^(2l-1) log(sin x)."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")

    def f(x: tuple, xc: tuple, prec: int) -> tuple:
        return mpf_mul(mpf_pow_int(x, 2 * l - 1, prec, RND), _log_sin(x, xc, prec), prec, RND)

    return f


def _log_sin_only(x: tuple, xc: tuple, prec: int) -> tuple:
    return _log_sin(x, xc, prec)


def _sin_log_sin(x: tuple, xc: tuple, prec: int) -> tuple:
    sin_x = mpf_sin(x, prec, RND) if mpf_cmp(x, xc) <= 0 else mpf_cos(xc, prec, RND)
    return mpf_mul(sin_x, mpf_log(sin_x, prec, RND), prec, RND)


def _x_log_x(x: tuple, xc: tuple, prec: int) -> tuple:
    return mpf_mul(x, mpf_log(x, prec, RND), prec, RND)


def euler_integral_quad(l: int, ctx: PrecisionContext, max_level: int = MAX_LEVEL) -> QuadratureResult:
    """int_0^{pi/2} x^(2l-1) log(sin x) dx by quadrature."""
    return tanh_sinh(euler_integrand(l), ctx, max_level)


def reference_integrals(
    ctx: PrecisionContext, max_level: int = MAX_LEVEL
) -> List[QuadratureResult]:
    """int log sin x, int sin x log sin x and int x log x, each over [0, pi/2]."""
    return [tanh_sinh(g, ctx, max_level) for g in (_log_sin_only, _sin_log_sin, _x_log_x)]
