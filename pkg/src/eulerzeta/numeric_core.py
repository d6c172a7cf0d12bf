"""Arbitrary-precision reals with tracked absolute error bounds.

Values are mpmath ``mpf`` numbers, but every operation goes through the
``mpmath.libmp`` primitives with an explicit precision, so nothing here
touches the global ``mp.prec`` and the functions are safe to call from
several threads at once.

Error bounds are conservative absolute bounds carried at a low fixed
precision and always rounded upward. This is not directed-rounding interval
arithmetic; the bounds are meant to be cross-checked by recomputing at a
second precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from mpmath import mp, mpf
from mpmath.libmp import (
    from_int,
    from_rational,
    fzero,
    mpf_abs,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_ln2,
    mpf_log,
    mpf_mul,
    mpf_neg,
    mpf_pi,
    mpf_pos,
    mpf_shift,
    mpf_sub,
    round_nearest,
    round_up,
)

__all__ = [
    "PrecisionContext",
    "BigReal",
    "const_pi",
    "const_log2",
    "const_log_pi",
    "pow_int",
    "as_bigreal",
]

# precision for error bounds; they are only ever rounded up
ERR_PREC = 64

_LOG2_10 = math.log2(10)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PrecisionContext:
    """Target decimal digits plus guard digits used for intermediate work."""

    digits: int
    guard: int = 15

    def __post_init__(self) -> None:
        if not isinstance(self.digits, int) or self.digits < 1:
            raise ValueError(f"digits must be a positive integer, got {self.digits!r}")
        if not isinstance(self.guard, int) or self.guard < 0:
            raise ValueError(f"guard must be a non-negative integer, got {self.guard!r}")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    @property
    def prec(self) -> int:
        """Working precision in bits."""
        return math.ceil(self.working_digits * _LOG2_10) + 4

    @property
    def tolerance(self) -> Fraction:
        """10^-digits, the accuracy the caller asked for."""
        return Fraction(1, 10**self.digits)


def _err_add(a: tuple, b: tuple) -> tuple:
    return mpf_add(a, b, ERR_PREC, round_up)


def _err_mul(a: tuple, b: tuple) -> tuple:
    return mpf_mul(a, b, ERR_PREC, round_up)


def _rounding_bound(x: tuple, prec: int) -> tuple:
    # half an ulp is |x| 2^-prec; one full ulp keeps us clear of edge cases
    if x == fzero:
        return fzero
    return mpf_shift(mpf_abs(x, ERR_PREC, round_up), 1 - prec)


def _rounded(exact: tuple, prec: int) -> tuple[tuple, tuple]:
    """Round an exactly computed result; the bound is zero if nothing was lost."""
    raw = mpf_pos(exact, prec, round_nearest)
    return raw, (fzero if raw == exact else _rounding_bound(raw, prec))


def _magnitude(x: tuple) -> int:
    return x[2] + x[3]


def _raw_err(value) -> tuple:
    if isinstance(value, tuple):
        return value
    if isinstance(value, Fraction):
        return from_rational(value.numerator, value.denominator, ERR_PREC, round_up)
    if isinstance(value, int):
        return from_int(value, ERR_PREC, round_up)
    if isinstance(value, float):
        return mpf(value)._mpf_
    return value._mpf_


@dataclass(frozen=True, eq=False)
class BigReal:
    """A value at a given binary precision together with an absolute error bound.

    The represented quantity lies in ``[value - err, value + err]``. Arithmetic
    between BigReals (and with ``int``/``Fraction`` operands, which are exact)
    propagates the bound and adds the rounding error of the operation itself.
    """

    value: mpf
    err: mpf
    prec: int

    # raw libmp constructors ------------------------------------------------
    @classmethod
    def _make(cls, raw: tuple, err: tuple, prec: int) -> "BigReal":
        return cls(mp.make_mpf(raw), mp.make_mpf(err), prec)

    @classmethod
    def exact(cls, x: Scalar, prec: int) -> "BigReal":
        """Round an exact integer or fraction to ``prec`` bits."""
        if isinstance(x, Fraction):
            num, den = x.numerator, x.denominator
            raw = from_rational(num, den, prec, round_nearest)
            exact = den & (den - 1) == 0 and mpf_mul(raw, from_int(den)) == from_int(num)
        elif isinstance(x, int):
            raw = from_int(x, prec, round_nearest)
            exact = raw == from_int(x)
        else:
            raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
        return cls._make(raw, fzero if exact else _rounding_bound(raw, prec), prec)

    @classmethod
    def from_mpf(cls, value, err, prec: int) -> "BigReal":
        """Wrap a value that was computed elsewhere with a known error bound."""
        raw = mpf(value)._mpf_ if not isinstance(value, tuple) else value
        return cls._make(raw, _raw_err(err), prec)

    @property
    def lo(self) -> mpf:
        return mp.make_mpf(mpf_sub(self.value._mpf_, self.err._mpf_, self.prec + 8, round_nearest))

    @property
    def hi(self) -> mpf:
        return mp.make_mpf(mpf_add(self.value._mpf_, self.err._mpf_, self.prec + 8, round_nearest))

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "BigReal":
        if isinstance(other, BigReal):
            return other
        if isinstance(other, (int, Fraction)):
            return BigReal.exact(other, self.prec)
        return NotImplemented

    def __neg__(self) -> "BigReal":
        return BigReal._make(mpf_neg(self.value._mpf_), self.err._mpf_, self.prec)

    def __abs__(self) -> "BigReal":
        return -self if self.sign() < 0 else self

    def __add__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prec = max(self.prec, o.prec)
        a, b = self.value._mpf_, o.value._mpf_
        if a == fzero or b == fzero or abs(_magnitude(a) - _magnitude(b)) < 4 * prec:
            raw, rnd_err = _rounded(mpf_add(a, b), prec)
        else:
            # widely separated exponents: an exact sum would be huge and is lossy anyway
            raw = mpf_add(a, b, prec, round_nearest)
            rnd_err = _rounding_bound(raw, prec)
        err = _err_add(_err_add(self.err._mpf_, o.err._mpf_), rnd_err)
        return BigReal._make(raw, err, prec)

    __radd__ = __add__

    def __sub__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prec = max(self.prec, o.prec)
        a, b = self.value._mpf_, o.value._mpf_
        raw, rnd_err = _rounded(mpf_mul(a, b), prec)
        ea, eb = self.err._mpf_, o.err._mpf_
        # |ab - a'b'| <= |a| eb + |b| ea + ea eb
        err = _err_add(
            _err_add(_err_mul(mpf_abs(a), eb), _err_mul(mpf_abs(b), ea)),
            _err_add(_err_mul(ea, eb), rnd_err),
        )
        return BigReal._make(raw, err, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prec = max(self.prec, o.prec)
        a, b = self.value._mpf_, o.value._mpf_
        ea, eb = self.err._mpf_, o.err._mpf_
        # denominator interval must exclude zero
        babs_lo = mpf_sub(mpf_abs(b), eb, ERR_PREC, round_nearest)
        if mpf_cmp(babs_lo, fzero) <= 0:
            raise ZeroDivisionError("divisor interval contains zero")
        raw = mpf_div(a, b, prec, round_nearest)
        # |a/b - a'/b'| <= (ea + |a/b| eb) / (|b| - eb)
        num = _err_add(ea, _err_mul(mpf_abs(raw), eb))
        denom = mpf_sub(mpf_abs(b), eb, ERR_PREC, "d")
        err = _err_add(mpf_div(num, denom, ERR_PREC, round_up), _rounding_bound(raw, prec))
        return BigReal._make(raw, err, prec)

    def __rtruediv__(self, other) -> "BigReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "BigReal":
        return pow_int(self, n)

    # inspection -------------------------------------------------------------
    def sign(self) -> int:
        return mpf_cmp(self.value._mpf_, fzero)

    def contains(self, x) -> bool:
        """True if the exact number ``x`` lies in the enclosure."""
        if isinstance(x, BigReal):
            x = x.value
        if isinstance(x, Fraction):
            xr = from_rational(x.numerator, x.denominator, self.prec + 64, round_nearest)
        else:
            xr = mpf(x)._mpf_
        d = mpf_abs(mpf_sub(self.value._mpf_, xr, self.prec + 64, round_nearest))
        return mpf_cmp(d, self.err._mpf_) <= 0

    def overlaps(self, other: "BigReal", slack=0) -> bool:
        """True if the two enclosures intersect (optionally widened by ``slack``)."""
        d = mpf_abs(mpf_sub(self.value._mpf_, other.value._mpf_, max(self.prec, other.prec) + 8, round_nearest))
        room = _err_add(_err_add(self.err._mpf_, other.err._mpf_), _raw_err(slack))
        return mpf_cmp(d, room) <= 0

    def widen(self, extra) -> "BigReal":
        """Same value, error bound increased by ``extra``."""
        return BigReal._make(self.value._mpf_, _err_add(self.err._mpf_, _raw_err(extra)), self.prec)

    def distance(self, other: "BigReal") -> mpf:
        """|self.value - other.value| at the larger of the two precisions."""
        prec = max(self.prec, other.prec)
        return mp.make_mpf(mpf_abs(mpf_sub(self.value._mpf_, other.value._mpf_, prec, round_nearest)))

    def to_decimal(self, digits: int) -> str:
        """Render the value with ``digits`` significant decimal digits."""
        return mp.nstr(self.value, digits, strip_zeros=False)

    def err_str(self) -> str:
        return mp.nstr(self.err, 3)

    def __float__(self) -> float:
        return float(self.value)

    def __eq__(self, other) -> bool:
        # bit-identical comparison, used for determinism checks
        if not isinstance(other, BigReal):
            return NotImplemented
        return (
            self.value._mpf_ == other.value._mpf_
            and self.err._mpf_ == other.err._mpf_
            and self.prec == other.prec
        )

    def __hash__(self) -> int:
        return hash((self.value._mpf_, self.err._mpf_, self.prec))

    def __repr__(self) -> str:
        return f"BigReal({mp.nstr(self.value, 20)} ± {self.err_str()}, prec={self.prec})"


def as_bigreal(x: Union[BigReal, Scalar], ctx: PrecisionContext) -> BigReal:
    if isinstance(x, BigReal):
        return x
    return BigReal.exact(x, ctx.prec)


def pow_int(x: BigReal, n: int, ctx: PrecisionContext | None = None) -> BigReal:
    """``x**n`` by binary powering; the bound comes from the multiplications."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"exponent must be a non-negative integer, got {n!r}")
    prec = ctx.prec if ctx is not None else x.prec
    result = BigReal.exact(1, prec)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


@lru_cache(maxsize=None)
def _pi(prec: int) -> BigReal:
    raw = mpf_pi(prec, round_nearest)
    return BigReal._make(raw, _rounding_bound(raw, prec), prec)


@lru_cache(maxsize=None)
def _log2(prec: int) -> BigReal:
    raw = mpf_ln2(prec, round_nearest)
    return BigReal._make(raw, _rounding_bound(raw, prec), prec)


@lru_cache(maxsize=None)
def _log_pi(prec: int) -> BigReal:
    # pi at extra bits so the log's input error is far below one ulp
    raw = mpf_log(mpf_pi(prec + 32, round_nearest), prec, round_nearest)
    return BigReal._make(raw, _rounding_bound(raw, prec), prec)


def const_pi(ctx: PrecisionContext) -> BigReal:
    return _pi(ctx.prec)


def const_log2(ctx: PrecisionContext) -> BigReal:
    return _log2(ctx.prec)


def const_log_pi(ctx: PrecisionContext) -> BigReal:
    return _log_pi(ctx.prec)
