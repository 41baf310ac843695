"""Beta-type integral form of the Kingman identity, checked by quadrature.

    a_k = int_0^1 (1-v)^(t-1) v^l exp(t*y(v)) [-ln(1-v) - y(v)]^k dv = k!/t^(k+1)

with y(v) = v + v^2/2 + ... + v^l/l.
"""
from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import NamedTuple

from scipy import integrate

from ..errors import QuadratureError


class IntegralResult(NamedTuple):
    value: float
    target: float
    error_estimate: float


def _partial_log(v: float, l: int) -> float:
    return sum(v ** m / m for m in range(1, l + 1))


def _log_tail(v: float, l: int) -> float:
    """-ln(1-v) minus its first l Taylor terms, without cancellation for small v."""
    if v < 0.5:
        total = 0.0
        m = l + 1
        term = v ** m / m
        while term > 1e-18 * max(total, 1e-300):
            total += term
            m += 1
            term = v ** m / m
        return total
    return -math.log1p(-v) - _partial_log(v, l)


def integrand(v: float, k: int, l: int, t: float) -> float:
    if v >= 1.0:
        return 0.0 if (t > 1 or k > 0) else (math.exp(t * _partial_log(1.0, l)) if t == 1 else math.inf)
    return (1 - v) ** (t - 1) * v ** l * math.exp(t * _partial_log(v, l)) * _log_tail(v, l) ** k


def _substituted(u: float, k: int, l: int, t: float) -> float:
    # u = (1-v)^t absorbs the (1-v)^(t-1) endpoint singularity
    if u <= 0.0:
        return 0.0 if k > 0 else math.exp(t * _partial_log(1.0, l)) / t
    v = -math.expm1(math.log(u) / t)
    if v < 0.5:
        tail = _log_tail(v, l)
    else:
        tail = -math.log(u) / t - _partial_log(v, l)
    return v ** l * math.exp(t * _partial_log(v, l)) * tail ** k / t


def integral_value(k: int, l: int, t, tol: float = 1e-13) -> tuple[float, float]:
    if k < 0 or l < 1:
        raise ValueError("need k >= 0 and l >= 1")
    t = float(t)
    if t <= 0:
        raise ValueError("t must be positive")
    fn = _substituted if t < 1 else integrand
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, info, *rest = integrate.quad(
            fn, 0.0, 1.0, args=(k, l, t), epsabs=tol, epsrel=tol, limit=500, full_output=1
        )
    ier = rest[0] if rest and isinstance(rest[0], int) else 0
    if ier not in (0,) and err > max(1e3 * tol, 1e-9):
        raise QuadratureError(f"quadrature did not converge (ier={ier}, error estimate {err:.2e})")
    return value, err


def integral_target(k: int, t) -> float:
    t = Fraction(t) if not isinstance(t, float) else t
    return float(Fraction(math.factorial(k)) / Fraction(t) ** (k + 1))


def integral_check(k: int, l: int, t, tol: float = 1e-13) -> IntegralResult:
    """Quadrature value of a_k next to the closed form k!/t^(k+1)."""
    value, err = integral_value(k, l, t, tol)
    return IntegralResult(value, integral_target(k, t), err)


def recurrence_ratio(k: int, l: int, t, tol: float = 1e-13) -> float:
    """a_k / a_{k-1} from two independent quadratures; should equal k/t."""
    if k < 1:
        raise ValueError("need k >= 1")
    return integral_value(k, l, t, tol)[0] / integral_value(k - 1, l, t, tol)[0]
