# ============================================================================
# EXTENDED-PRECISION BOUND EVALUATION
# ============================================================================
"""
Real-valued regularity and connectivity bounds are evaluated with Decimal at
TOOLKIT_DECIMAL_PRECISION digits, and compared with integers through an
epsilon guard of 2^-TOOLKIT_EPSILON_EXPONENT.
"""

import math
from decimal import Decimal, localcontext
from fractions import Fraction

from core.conf import toolkit_setting


def to_decimal(value):
    """Exact conversion of ints, Fractions and Decimals"""
    if isinstance(value, Fraction):
        return Decimal(value.numerator) / Decimal(value.denominator)
    return Decimal(value)


def decimal_log(argument, base, precision=None):
    """
    log_base(argument) evaluated at extended precision

    Both arguments may be int, Fraction or Decimal; `argument` must be > 0.
    """
    precision = toolkit_setting('TOOLKIT_DECIMAL_PRECISION', precision)
    with localcontext() as ctx:
        ctx.prec = precision
        return to_decimal(argument).ln() / to_decimal(base).ln()


def decimal_ln(argument, precision=None):
    precision = toolkit_setting('TOOLKIT_DECIMAL_PRECISION', precision)
    with localcontext() as ctx:
        ctx.prec = precision
        return to_decimal(argument).ln()


def epsilon(exponent=None):
    """The comparison guard 2^-exponent as an exact Decimal"""
    exponent = toolkit_setting('TOOLKIT_EPSILON_EXPONENT', exponent)
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(1) / (Decimal(2) ** exponent)


def guarded_floor(value, exponent=None):
    """floor(value + eps): an integer quantity bounded above by `value`"""
    if isinstance(value, (int, Fraction)):
        return math.floor(value)
    with localcontext() as ctx:
        ctx.prec = 60
        return math.floor(value + epsilon(exponent))


def guarded_ceil(value, exponent=None):
    """ceil(value - eps): snaps values within eps above an integer down to it"""
    if isinstance(value, (int, Fraction)):
        return math.ceil(value)
    with localcontext() as ctx:
        ctx.prec = 60
        return math.ceil(value - epsilon(exponent))
