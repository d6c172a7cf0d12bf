"""Exact even zeta values.

Every even value is a rational multiple of a power of pi,
``zeta(2l) = r_l * pi^(2l)``. The recurrence below runs entirely on the
rational coefficients ``r_l``: the pi powers in each term combine to exactly
``pi^(2l)`` and cancel, so no floating point enters. It is seeded with the
convention ``zeta(0) = -1/2``.

``zeta_even_oracle`` reaches the same coefficients through Bernoulli numbers
and shares no code with the recurrence.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Sequence

from eulerzeta.numeric_core import BigReal, PrecisionContext, const_pi, pow_int

__all__ = [
    "EvenZetaTable",
    "zeta_zero",
    "zeta_even_coeff",
    "zeta_even_oracle",
    "bernoulli",
    "even_table",
    "even_coeff",
    "zeta_even",
    "factorial",
    "L_MAX_DEFAULT",
    "set_table_limit",
]

Rational = Fraction

L_MAX_DEFAULT = 200


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return 1 if n < 2 else n * factorial(n - 1)


def zeta_zero() -> Rational:
    """The seed value zeta(0) = -1/2."""
    return Fraction(-1, 2)


class EvenZetaTable:
    """Append-only table of the coefficients ``r_0, r_1, ...``.

    ``r_0 = zeta(0) = -1/2`` is always present. Growth is serialized by a lock;
    entries already in the table never change, so reads need no locking.
    """

    def __init__(self, l_max: int = L_MAX_DEFAULT) -> None:
        self.l_max = l_max
        self._coeffs: List[Rational] = [zeta_zero()]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, l: int) -> Rational:
        return self._coeffs[l]

    @property
    def coeffs(self) -> Sequence[Rational]:
        return tuple(self._coeffs)

    def extend_to(self, l: int) -> "EvenZetaTable":
        """Fill the table up to and including ``r_l``."""
        if l > self.l_max:
            raise ValueError(
                f"l={l} exceeds the table limit l_max={self.l_max}; see set_table_limit"
            )
        if l < len(self._coeffs):
            return self
        with self._lock:
            while len(self._coeffs) <= l:
                self._coeffs.append(_recurrence_step(len(self._coeffs), self._coeffs))
        return self


def _recurrence_step(l: int, r: Sequence[Rational]) -> Rational:
    # zeta(2l) = 2^(2l-1)/(2^(2l-1)-1) * sum_{k<l} (-1)^(l+k-1) pi^(2(l-k)) / (2(l-k)+1)!
    #            * (1 - 2^(1-2k)) * zeta(2k), divided through by pi^(2l)
    total = Fraction(0)
    for k in range(l):
        sign = -1 if (l + k - 1) % 2 else 1
        damp = 1 - Fraction(2) ** (1 - 2 * k)
        total += sign * damp * r[k] / factorial(2 * (l - k) + 1)
    p = 2 ** (2 * l - 1)
    return Fraction(p, p - 1) * total


def zeta_even_coeff(l: int, table: EvenZetaTable) -> Rational:
    """Return ``r_l`` from ``r_0..r_{l-1}`` already in ``table``, appending it.

    Raises ``ValueError`` if ``l < 1`` or a prerequisite coefficient is missing.
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    if len(table) < l:
        raise ValueError(
            f"table holds r_0..r_{len(table) - 1}; r_{l} needs r_0..r_{l - 1}"
        )
    if len(table) > l:
        return table[l]
    table.extend_to(l)
    return table[l]


_BERNOULLI: List[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (convention B_1 = -1/2).

    From sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            if m > 1 and m % 2:
                _BERNOULLI.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * _BERNOULLI[j] for j in range(m))
            _BERNOULLI.append(-s / (m + 1))
    return _BERNOULLI[n]


def zeta_even_oracle(l: int) -> Rational:
    """``r_l`` from zeta(2l) = (-1)^(l+1) B_2l (2 pi)^(2l) / (2 (2l)!)."""
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    sign = 1 if l % 2 else -1
    return sign * bernoulli(2 * l) * Fraction(2 ** (2 * l - 1), factorial(2 * l))


_DEFAULT_TABLE = EvenZetaTable()


def set_table_limit(l_max: int) -> None:
    """Raise (or lower) the size cap of the shared table.

    Series need about 1.661 * digits + 10 coefficients, so the default cap of
    200 covers requests up to 114 digits.
    """
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    _DEFAULT_TABLE.l_max = l_max


def even_table(l: int) -> EvenZetaTable:
    """The shared table, grown to hold ``r_l``."""
    return _DEFAULT_TABLE.extend_to(l)


def even_coeff(l: int) -> Rational:
    """``r_l`` with zeta(2l) = r_l pi^(2l), from the shared table."""
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    return even_table(l)[l]


def zeta_even(l: int, ctx: PrecisionContext) -> BigReal:
    """Numeric zeta(2l) as ``r_l * pi^(2l)``."""
    return pow_int(const_pi(ctx), 2 * l) * even_coeff(l)
