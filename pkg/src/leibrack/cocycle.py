"""Rack cocycles obtained by integrating the center-valued 2-cocycle.

For the left-center extension of a nilpotent Leibniz algebra, the defect

    f(x, y) = exp(ad_{s(x)})(s(y)) - s(exp(ad_x)(y))

measures how far the section s is from intertwining the rack products of
the algebra and its Lie quotient; it lands in the left center.  The same
defect has a closed series form in the linear 2-cocycle omega,

    f(x, y) = sign * sum_{p,q >= 0} ad_{s(x)}^p omega(x, ad_x^q y) / (p+q+1)!

with sign = -1 against the section-defect convention omega(x, y) =
s([x, y]) - [s(x), s(y)] used by ExtensionData (equivalently, sign = +1
against its negative ``extension_omega``).  The sign and the 1/(p+q+1)!
coefficient law are pinned by comparing against the exact defect on the
nilpotent bundled algebras; see ``tests/test_cocycle.py``.
"""

from fractions import Fraction
from math import factorial

from .racks import exp_endo

SERIES_SIGN = -1


def rack_cocycle_exact(ext, x, y, float_exp_order=12):
    """The exact section defect of the rack products, as an element of h.

    ``x`` and ``y`` are quotient elements.  Exact mode needs both the
    algebra and its quotient nilpotent (the exponentials must terminate).
    """
    alg, quot = ext.algebra, ext.quotient
    lifted = exp_endo(alg.ad(ext.section(x)), float_exp_order)(ext.section(y))
    pushed = ext.section(exp_endo(quot.ad(x), float_exp_order)(y))
    return lifted - pushed


def rack_cocycle_series(ext, x, y, order, sign=SERIES_SIGN):
    """Truncated series form of the rack cocycle.

    Sums sign/(p+q+1)! * ad_{s(x)}^p omega(x, ad_x^q y) over p+q+1 <= order.
    On nilpotent algebras the series terminates and equals the exact defect
    once the order reaches the nilpotency class.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    alg, quot = ext.algebra, ext.quotient
    ad_q = quot.ad(x)
    ad_h = alg.ad(ext.section(x))
    total = alg.zero(x.mode)
    inner = y
    for q in range(order):
        if q:
            inner = ad_q(inner)
        vec = ext.omega(x, inner)
        for p in range(order - q):
            k = p + q + 1
            total = total + (Fraction(sign, factorial(k)) * vec)
            vec = ad_h(vec)
    return total
