"""Exact partial sums of 3F2 at unit argument and the (2,1)-box closed form."""
from __future__ import annotations

from fractions import Fraction

from ..arith import Gaussian, as_exact
from ..errors import PoleError


def _collapse(x):
    if isinstance(x, Gaussian) and x.is_real():
        return x.re
    return x


def hyp3f2_partial_sum(upper, lower, n_terms: int):
    """Sum_{m=0}^{N} (a1)_m (a2)_m (a3)_m / ((b1)_m (b2)_m m!), exactly.

    ``upper`` holds three parameters and ``lower`` two; each may be an int,
    Fraction or Gaussian. A real result is returned as a Fraction.
    """
    a = [as_exact(x) for x in upper]
    b = [as_exact(x) for x in lower]
    if len(a) != 3 or len(b) != 2:
        raise ValueError("need three upper and two lower parameters")
    if n_terms < 0:
        raise ValueError("n_terms must be >= 0")
    for m in range(n_terms):
        for bi in b:
            if bi + m == 0:
                raise PoleError(f"lower parameter {bi} hits a pole at m = {m}")
    total = Fraction(1)
    term = Fraction(1)
    for m in range(n_terms):
        term = term * (a[0] + m) * (a[1] + m) * (a[2] + m) / ((b[0] + m) * (b[1] + m) * (m + 1))
        if term == 0:
            break
        total = total + term
    return _collapse(total)


def hook_series_parameters(theta, z):
    """Parameters of the 3F2 that the (2,1)-box z-measure identity sums."""
    theta = Fraction(theta)
    z = z if isinstance(z, Gaussian) else Gaussian(z)
    zbar = z.conjugate()
    return (z + 1, zbar + 1, 2), (theta + 2, z.norm_sq() / theta + 2)


def hook_series_partial_sum(theta, z, n_terms: int):
    upper, lower = hook_series_parameters(theta, z)
    return hyp3f2_partial_sum(upper, lower, n_terms)


def hook_series_closed_form(theta, z) -> Fraction:
    """(theta + 1)(z zbar + theta) / ((z - theta)(zbar - theta))."""
    theta = Fraction(theta)
    z = z if isinstance(z, Gaussian) else Gaussian(z)
    den = (z - theta).norm_sq()
    if den == 0:
        raise PoleError("z equals theta")
    return (theta + 1) * (z.norm_sq() + theta) / den
