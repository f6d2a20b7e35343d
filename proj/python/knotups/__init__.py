"""Upsilon and secondary Upsilon of torus knots, their connected sums and mirrors.

Rational results are fractions.Fraction; a trivial secondary Upsilon is math.inf.
"""

from ._knotups import (
    DEFAULT_GENERATOR_LIMIT,
    ParseError,
    alexander,
    generator_count,
    jumps,
    normalize,
    upsilon,
    upsilon2,
    verify,
)

__all__ = [
    "DEFAULT_GENERATOR_LIMIT",
    "ParseError",
    "alexander",
    "generator_count",
    "jumps",
    "normalize",
    "upsilon",
    "upsilon2",
    "verify",
]
