# regularity/bounds.py
"""
Upper bounds for reg(k[Δ]) in terms of the number of vertices.

    taylor_bound(n, s) = n(s-1)/s          exact Fraction
    dhs_bound(n, k)    = min of two logs   Decimal at extended precision

Both are suitable: they stay valid for every restriction Δ|_T with n
replaced by |T|.
"""

import logging
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from core.conf import toolkit_setting
from core.exceptions import BadParameters, DegenerateS, DomainError, HypothesisUnmet
from core.utils.precision import decimal_ln, to_decimal
from complexes.graphs import largest_induced_cycle_free_parameter, one_skeleton
from complexes.simplicial import predicates

logger = logging.getLogger(__name__)


def taylor_bound(n, s):
    """n(s-1)/s, from the Taylor resolution support j <= s*i"""
    if s < 2:
        raise DegenerateS(f"the Taylor bound needs s >= 2, got s={s}")
    if n < 1:
        raise BadParameters(f"vertex count must be positive, got {n}")
    return Fraction(n * (s - 1), s)


@dataclass(frozen=True)
class DhsBound:
    n: int
    k: int
    first: Decimal
    second: Decimal

    @property
    def value(self):
        return min(self.first, self.second)

    @property
    def branch(self):
        """1 when the first logarithm is the smaller one"""
        return 1 if self.first <= self.second else 2

    def as_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "first": str(self.first),
            "second": str(self.second),
            "value": str(self.value),
            "branch": self.branch,
        }


def dhs_bound(n, k, precision=None):
    """
    min{ log_b((n-1)/(k+1)) + 2,  log_b((n-1) ln(b)/(k+1) + 2/(k+4)) + 2 },
    b = (k+4)/2, for flag complexes without induced m-cycles, 4 <= m <= k+3.
    """
    if k < 1:
        raise BadParameters(f"the DHS bound needs k >= 1, got k={k}")
    precision = toolkit_setting('TOOLKIT_DECIMAL_PRECISION', precision)
    base = Fraction(k + 4, 2)
    first_argument = Fraction(n - 1, k + 1)
    if first_argument <= 0:
        raise DomainError(f"log argument (n-1)/(k+1) = {first_argument} is not positive (n={n})")

    with localcontext() as ctx:
        ctx.prec = precision
        ln_base = decimal_ln(base, precision)
        first = decimal_ln(first_argument, precision) / ln_base + 2
        second_argument = to_decimal(Fraction(n - 1, k + 1)) * ln_base + to_decimal(Fraction(2, k + 4))
        if second_argument <= 0:
            raise DomainError(f"second log argument {second_argument} is not positive")
        second = second_argument.ln() / ln_base + 2
    return DhsBound(n=n, k=k, first=first, second=second)


def dhs_parameter(complex_, k=None):
    """
    The k used for the DHS bound: the given one, checked, or the largest
    k <= max(1, n-3) such that Δ is flag with no induced m-cycle for
    4 <= m <= k+3. Raises HypothesisUnmet when no k >= 1 works.
    """
    if not predicates(complex_).is_flag:
        raise HypothesisUnmet(f"{complex_} is not flag")
    graph = one_skeleton(complex_)
    cap = max(1, complex_.vertex_count - 3)
    largest = largest_induced_cycle_free_parameter(graph, max(cap, k or 0))
    if k is None:
        k = min(largest, cap)
    if k < 1 or largest < k:
        raise HypothesisUnmet(f"{complex_} has an induced m-cycle with 4 <= m <= {max(k, 1) + 3}")
    return k


def restriction_dhs_parameter(k, size):
    """k for a restriction on `size` vertices: no cycle is longer than size"""
    return min(k, max(1, size - 3))
