"""Exact checks of the generalized twistor construction over the flat hyperkahler model."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    __version__,
    check_dpsi_prime_zero,
    check_dpsi_zero,
    fmap,
    symbolic_spinor_text,
    type_map_csv,
)


def literal(value):
    """Complex literal text for str, int, Fraction, or a (re, im) pair of those."""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, tuple) and len(value) == 2:
        re, im = (Fraction(v) for v in value)
        sign = "-" if im < 0 else "+"
        return f"{re}{sign}{abs(im)}*i"
    raise TypeError(f"no exact literal for {value!r}")


def spinor(n, alpha, beta):
    """Mapping mask -> coefficient text of the spinor at (alpha, beta)."""
    return dict(_core.spinor_terms(n, literal(alpha), literal(beta)))


def spinor_text(n, alpha, beta):
    return _core.spinor_text(n, literal(alpha), literal(beta))


def is_pure(n, alpha, beta):
    return _core.is_pure(n, literal(alpha), literal(beta))


def structure_type(n, alpha, beta):
    return _core.structure_type(n, literal(alpha), literal(beta))


def pseudo_kahler_signature(n, alpha, beta):
    return _core.pseudo_kahler_signature(n, literal(alpha), literal(beta))


def verify(n=1, seed=42, samples=50, tol=1e-9, mutate=""):
    """Runs the verification suite and returns the report as a dict."""
    return json.loads(_core.verify_json(n, seed, samples, tol, mutate or ""))


__all__ = [
    "__version__",
    "check_dpsi_prime_zero",
    "check_dpsi_zero",
    "fmap",
    "is_pure",
    "literal",
    "pseudo_kahler_signature",
    "spinor",
    "spinor_text",
    "structure_type",
    "symbolic_spinor_text",
    "type_map_csv",
    "verify",
]
