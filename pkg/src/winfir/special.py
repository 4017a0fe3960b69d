"""Scalar special functions used by the window generators."""

import math

_I0_RTOL = 1e-12


def bessel_i0(x: float) -> float:
    """Zeroth-order modified Bessel function of the first kind.

    Sums the power series ``sum_k ((x/2)**k / k!)**2`` until a term drops
    below ``1e-12`` times the running sum.  ``I0`` is even, so ``|x|`` is used.
    """
    half = abs(float(x)) / 2.0
    total = 1.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= (half / k) ** 2
        total += term
        if term < _I0_RTOL * total:
            return total


def chebyshev_t(order: int, x: float) -> float:
    """Chebyshev polynomial of the first kind, ``T_order(x)``.

    Uses ``cos(order*acos(x))`` inside [-1, 1] and the hyperbolic form outside,
    which stays accurate for large orders where the monomial expansion overflows.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    x = float(x)
    if order == 0:
        return 1.0
    if abs(x) <= 1.0:
        return math.cos(order * math.acos(x))
    value = math.cosh(order * math.acosh(abs(x)))
    if x < 0 and order % 2:
        return -value
    return value


def sinc_normalized(x: float) -> float:
    """``sin(pi*x) / (pi*x)`` with the removable singularity at 0 set to 1."""
    x = float(x)
    if x == 0.0:
        return 1.0
    px = math.pi * x
    return math.sin(px) / px
