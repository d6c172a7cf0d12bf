"""Exact closed forms of the log-sine moments over a fixed atom basis.

A :class:`SymbolicConstant` is a rational linear combination of atoms
``pi^j * marker`` with marker one of 1, log 2, log pi or zeta(m) for odd
m >= 3. Constants are kept canonical after every operation, so structural
equality is value equality on this basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from eulerzeta.exact_zeta import factorial
from eulerzeta.numeric_core import (
    BigReal,
    PrecisionContext,
    const_log2,
    const_log_pi,
    const_pi,
    pow_int,
)

__all__ = [
    "UNIT",
    "LOG2",
    "LOGPI",
    "Atom",
    "SymbolicConstant",
    "zeta_atom",
    "sym_combine",
    "euler_integral_closed_form",
    "eval_symbolic",
    "parse_symbolic",
    "MissingAtomValue",
]

UNIT = "unit"
LOG2 = "log2"
LOGPI = "logpi"
ZETA = "zeta"

_MARKER_RANK = {UNIT: 0, LOG2: 1, LOGPI: 2, ZETA: 3}


class MissingAtomValue(KeyError):
    """eval_symbolic was not given a numeric value for a zeta(m) atom."""

    def __init__(self, m: int) -> None:
        super().__init__(m)
        self.m = m

    def __str__(self) -> str:
        return f"no value supplied for atom zeta({self.m})"


@dataclass(frozen=True, order=False)
class Atom:
    pi_power: int
    marker: str = UNIT
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.pi_power < 0 or self.pi_power % 2:
            raise ValueError(f"pi power must be even and >= 0, got {self.pi_power}")
        if self.marker not in _MARKER_RANK:
            raise ValueError(f"unknown marker {self.marker!r}")
        if self.marker == ZETA:
            if self.m is None or self.m < 3 or self.m % 2 == 0:
                raise ValueError(f"zeta atom needs an odd argument >= 3, got {self.m}")
        elif self.m is not None:
            raise ValueError("only zeta atoms carry an argument")

    def sort_key(self) -> Tuple[int, int, int]:
        return (-self.pi_power, _MARKER_RANK[self.marker], self.m or 0)

    def __str__(self) -> str:
        parts = []
        if self.pi_power:
            parts.append(f"pi^{self.pi_power}")
        if self.marker == ZETA:
            parts.append(f"zeta({self.m})")
        elif self.marker != UNIT:
            parts.append(self.marker)
        return "*".join(parts)


def zeta_atom(m: int, pi_power: int = 0) -> Atom:
    return Atom(pi_power, ZETA, m)


Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class SymbolicConstant:
    """Canonical map Atom -> nonzero Fraction, ordered by (pi power desc, marker)."""

    terms: Tuple[Tuple[Atom, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, items: Union[Mapping[Atom, Coeff], Iterable[Tuple[Atom, Coeff]]]) -> "SymbolicConstant":
        acc: Dict[Atom, Fraction] = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for atom, c in pairs:
            acc[atom] = acc.get(atom, Fraction(0)) + Fraction(c)
        ordered = sorted(((a, c) for a, c in acc.items() if c), key=lambda p: p[0].sort_key())
        return cls(tuple(ordered))

    @classmethod
    def zero(cls) -> "SymbolicConstant":
        return cls()

    def as_dict(self) -> Dict[Atom, Fraction]:
        return dict(self.terms)

    def coeff(self, atom: Atom) -> Fraction:
        return self.as_dict().get(atom, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        return sym_combine(self, other, 1, 1)

    def __sub__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        return sym_combine(self, other, 1, -1)

    def __neg__(self) -> "SymbolicConstant":
        return sym_combine(self, SymbolicConstant(), -1, 0)

    def scale(self, s: Coeff) -> "SymbolicConstant":
        return sym_combine(self, SymbolicConstant(), s, 0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (atom, c) in enumerate(self.terms):
            mag = abs(c)
            body = str(atom)
            text = f"{mag}*{body}" if body else f"{mag}"
            if i == 0:
                out.append(f"-{text}" if c < 0 else text)
            else:
                out.append(f" - {text}" if c < 0 else f" + {text}")
        return "".join(out)


def sym_combine(
    a: SymbolicConstant, b: SymbolicConstant, s: Coeff, t: Coeff
) -> SymbolicConstant:
    """Canonical ``s*a + t*b``."""
    s, t = Fraction(s), Fraction(t)
    pairs = [(atom, s * c) for atom, c in a.terms] + [(atom, t * c) for atom, c in b.terms]
    return SymbolicConstant.from_terms(pairs)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)
        (?:\*pi\^(?P<pow>\d+))?
        (?:\*(?P<marker>log2|logpi|zeta\((?P<m>\d+)\)))?$""",
    re.X,
)


def parse_symbolic(text: str) -> SymbolicConstant:
    """Inverse of ``str(SymbolicConstant)``."""
    text = text.strip()
    if text == "0":
        return SymbolicConstant()
    tokens = re.split(r"\s+([+-])\s+", text)
    first = tokens[0]
    sign = 1
    if first.startswith("-"):
        sign, first = -1, first[1:]
    chunks = [(sign, first)] + [
        (1 if op == "+" else -1, body) for op, body in zip(tokens[1::2], tokens[2::2])
    ]
    pairs = []
    for sgn, body in chunks:
        mt = _TERM_RE.match(body)
        if not mt:
            raise ValueError(f"cannot parse term {body!r}")
        power = int(mt["pow"] or 0)
        marker = mt["marker"]
        if marker is None:
            atom = Atom(power)
        elif marker.startswith("zeta"):
            atom = Atom(power, ZETA, int(mt["m"]))
        else:
            atom = Atom(power, marker)
        pairs.append((atom, sgn * Fraction(mt["coef"])))
    return SymbolicConstant.from_terms(pairs)


def euler_integral_closed_form(l: int) -> SymbolicConstant:
    """Exact value of int_0^{pi/2} x^(2l-1) log(sin x) dx over the atom basis.

    The result is

        -(pi/2)^(2l)/(2l) log 2
        + (2l-1)!/2^(2l) sum_{k=1}^{l-1} (-1)^(k-1) pi^(2(l-k))/(2(l-k))! (1 - 2^(-2k)) zeta(2k+1)
        + (-1)^(l-1) (2l-1)! (2^(2l+1) - 1)/2^(4l) zeta(2l+1)
    """
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    f = factorial(2 * l - 1)
    pairs = [(Atom(2 * l, LOG2), Fraction(-1, 2 ** (2 * l) * 2 * l))]
    for k in range(1, l):
        sign = 1 if k % 2 else -1
        c = Fraction(f, 2 ** (2 * l)) * Fraction(sign, factorial(2 * (l - k))) * (1 - Fraction(1, 4**k))
        pairs.append((zeta_atom(2 * k + 1, 2 * (l - k)), c))
    top = (1 if l % 2 else -1) * Fraction(f * (2 ** (2 * l + 1) - 1), 2 ** (4 * l))
    pairs.append((zeta_atom(2 * l + 1), top))
    return SymbolicConstant.from_terms(pairs)


def eval_symbolic(
    c: SymbolicConstant,
    odd_values: Mapping[int, BigReal],
    ctx: PrecisionContext,
) -> BigReal:
    """Numeric value of ``c``; ``odd_values[m]`` supplies zeta(m)."""
    pi = const_pi(ctx)
    total = BigReal.exact(0, ctx.prec)
    for atom, coeff in c.terms:
        if atom.marker == UNIT:
            base = BigReal.exact(1, ctx.prec)
        elif atom.marker == LOG2:
            base = const_log2(ctx)
        elif atom.marker == LOGPI:
            base = const_log_pi(ctx)
        else:
            if atom.m not in odd_values:
                raise MissingAtomValue(atom.m)
            base = odd_values[atom.m]
        if atom.pi_power:
            base = base * pow_int(pi, atom.pi_power)
        total = total + base * coeff
    return total
