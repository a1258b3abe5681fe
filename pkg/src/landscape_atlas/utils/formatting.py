# -*- coding: utf-8 -*-
"""
src.landscape_atlas.utils.formatting.py - Landscape-Atlas
Created by NCagle
2025-02-06
      _
   __(.)<
~~~⋱___)~~~

Decimal rendering of exact values. Rounding is half-even so printed
output lines up with published three-decimal tables.
"""

from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from typing import Optional, Union

from landscape_atlas.utils.constants import PERF_DECIMALS, PERCENT_DECIMALS

Number = Union[int, Fraction]


def to_decimal(value: Number, places: int = PERF_DECIMALS) -> Decimal:
    """
    Round an exact value to a fixed number of decimal places.

    Arguments:
        value (int | Fraction): Exact value
        places (int): Digits after the decimal point

    Returns:
        Decimal: Rounded value
    """
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 50
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return quotient.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)


def format_decimal(value: Optional[Number], places: int = PERF_DECIMALS) -> str:
    if value is None:
        return "-"
    return str(to_decimal(value, places))


def format_exact(value: Optional[Number]) -> str:
    """Render a rational as "p/q", or "p" when it is an integer."""
    if value is None:
        return "-"
    return str(Fraction(value))


def format_percent(count: int, total: int, places: int = PERCENT_DECIMALS) -> str:
    if total == 0:
        return "0." + "0" * places
    return format_decimal(Fraction(100 * count, total), places)


def parse_fraction(text: Optional[str]) -> Optional[Fraction]:
    """Inverse of format_exact; "-" and None map to None."""
    if text is None or text == "-":
        return None
    return Fraction(text)
