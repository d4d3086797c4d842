"""Tropical matroid toolkit.

Max-plus convexity over exact rationals: covector graphs and hull membership
with certificates, greedy colorful-basis search under matroid constraints,
exact Euclidean coverage checks, tropical colorful linear programming with the
3-dimensional-matching encoding, and a linear-time solver for max-plus
{-inf, 0} integer programs.

All functions exchange plain dicts/lists in the same JSON schemas as the
``tropmat`` command line tool; rationals are ints or "p/q" strings and -inf is
the string "-inf".
"""

from tropmat._core import (
    InputError,
    clp_from_3dm,
    clp_solve,
    clutter_check,
    colorful_basis,
    gen_instance,
    horn_solve,
    km_basis,
    km_verify,
    matroid_info,
    membership,
    rado_check,
    realize_complex,
    support_complex,
    two_cocircuit_basis,
    verify_condition,
)

__all__ = [
    "InputError",
    "clp_from_3dm",
    "clp_solve",
    "clutter_check",
    "colorful_basis",
    "gen_instance",
    "horn_solve",
    "km_basis",
    "km_verify",
    "matroid_info",
    "membership",
    "rado_check",
    "realize_complex",
    "support_complex",
    "two_cocircuit_basis",
    "verify_condition",
]

__version__ = "0.1.0"
