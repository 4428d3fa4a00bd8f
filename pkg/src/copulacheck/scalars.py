"""Exact scalar carriers: arbitrary-precision rationals extended with two infinities.

Every numeric quantity in this package is a ``fractions.Fraction``.  The only
floats allowed anywhere are the two IEEE infinities, used as endpoints of the
extended real line; ``Fraction`` compares exactly against them, so ordering and
equality on extended scalars are decidable with tolerance zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import ValidationError

Scalar = Fraction
ExtScalar = Union[Fraction, float]

NEG_INF: float = float("-inf")
POS_INF: float = float("inf")


def is_finite(x: ExtScalar) -> bool:
    return isinstance(x, Fraction)


def as_scalar(value) -> Fraction:
    """Coerce an int or Fraction to Fraction.  Floats are rejected: they are inexact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise ValidationError(f"expected an exact rational, got {value!r}")


def as_ext(value) -> ExtScalar:
    """Coerce to an extended scalar; the only floats admitted are +-inf."""
    if isinstance(value, float):
        if value == NEG_INF or value == POS_INF:
            return value
        raise ValidationError(f"finite floats are not exact; got {value!r}")
    return as_scalar(value)


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or an exact decimal string (``"0.3"`` -> 3/10)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"cannot parse exact rational from {text!r}") from exc


def parse_ext(text: str) -> ExtScalar:
    """Like :func:`parse_scalar` but also accepts ``-inf`` / ``+inf`` / ``inf``."""
    lowered = text.strip().lower()
    if lowered in ("-inf", "-infinity"):
        return NEG_INF
    if lowered in ("inf", "+inf", "infinity", "+infinity"):
        return POS_INF
    return parse_scalar(text)


def fmt(x: ExtScalar) -> str:
    """Canonical emission: ``p/q`` (integers as plain ``n``), ``-inf`` or ``+inf``."""
    if isinstance(x, Fraction):
        return str(x)
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    raise ValidationError(f"not an extended scalar: {x!r}")
