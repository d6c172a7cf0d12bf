"""Even and odd zeta values through log-sine moment integrals."""

from eulerzeta.numeric_core import (
    BigReal,
    PrecisionContext,
    const_log2,
    const_log_pi,
    const_pi,
    pow_int,
)

__version__ = "0.1.0"

__all__ = [
    "BigReal",
    "PrecisionContext",
    "const_log2",
    "const_log_pi",
    "const_pi",
    "pow_int",
]
