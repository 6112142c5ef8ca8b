"""Exact construction and cross-checking of generating-function
polynomial families.

Everything is computed over the rationals with zero tolerance: series
coefficients come from truncated power-series algebra, closed forms
from explicit sums and recurrences, and the identities module compares
the two routes term by term.
"""

from .errors import (DomainError, PolygenError, RangeError,
                     SingularityError, UsageError)
from .exact import (VARS, CPoly, MultiPoly, Rational, S, U, W, W_BAR, X, Y,
                    binom, falling)
from .series import (TruncSeries, cos_sin, default_order, exp, invert,
                     pow_int)
from . import closedform, genfun, identities

__version__ = "0.1.0"

__all__ = [
    "PolygenError", "UsageError", "DomainError", "RangeError",
    "SingularityError",
    "MultiPoly", "CPoly", "Rational", "VARS", "X", "Y", "S", "U", "W",
    "W_BAR", "binom", "falling",
    "TruncSeries", "exp", "cos_sin", "invert", "pow_int", "default_order",
    "genfun", "closedform", "identities",
    "__version__",
]
