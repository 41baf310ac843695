"""Closed-form summands of the box-entry identities.

Each function takes the index tuple of one summand and returns its exact
value. None of them touch dimensions or harmonic functions; the generic
route in :mod:`youngsum.identities.boxprob` is the independent check.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod

from ..arith import Gaussian, factorial, pochhammer
from ..errors import DegenerateParameterError, InvalidIndexError
from ..measures import is_degenerate_z


def _require_strict(seq, name):
    if any(x < 1 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
        raise InvalidIndexError(f"{name} must be strictly decreasing positive integers: {tuple(seq)}")


def _require_weak(seq, name, floor=1):
    if any(x < floor for x in seq) or any(a < b for a, b in zip(seq, seq[1:])):
        raise InvalidIndexError(f"{name} must be weakly decreasing integers >= {floor}: {tuple(seq)}")


def _sq_vandermonde(seq):
    return prod((a - b) ** 2 for i, a in enumerate(seq) for b in seq[i + 1:])


# -- Plancherel measure on the Young lattice, box (k+1, l+1) ---------------


def plancherel_young_shift(k: int, l: int) -> int:
    """Offset between |p| + |q| and the size of the diagram before the box lands."""
    return (k + l - (k - l) ** 2) // 2


def plancherel_young_term(p, q) -> Fraction:
    """Summand indexed by strictly decreasing p (length k) and q (length l)."""
    p, q = tuple(p), tuple(q)
    _require_strict(p, "p")
    _require_strict(q, "q")
    k, l = len(p), len(q)
    if k + l < 1:
        raise InvalidIndexError("need k + l >= 1")
    size = sum(p) + sum(q) + plancherel_young_shift(k, l)
    num = factorial(size) * _sq_vandermonde(p) * _sq_vandermonde(q) * prod(p) * prod(q)
    den = (
        prod(factorial(x) ** 2 * (x + 1) for x in p)
        * prod(factorial(x) ** 2 * (x + 1) for x in q)
        * prod((a + b + 1) ** 2 for a in p for b in q)
    )
    return Fraction(num, den)


def strict_rows_term(p) -> Fraction:
    """Young-lattice Plancherel summand for box (k+1, 1) in strict coordinates."""
    p = tuple(p)
    _require_strict(p, "p")
    k = len(p)
    if k < 1:
        raise InvalidIndexError("need k >= 1")
    num = factorial(sum(p) - k * (k - 1) // 2) * _sq_vandermonde(p)
    den = prod(factorial(x - 1) * factorial(x + 1) for x in p)
    return Fraction(num, den)


def _row_frame(a, theta):
    """Pieces shared by the column-box summands.

    Returns (vandermonde-like product, product of row-gap factorials,
    product of rising factorials) for rows a_1 >= ... >= a_k with the
    conventions a_{k+1} = 1 and a_r = 0 beyond.
    """
    k = len(a)
    ext = list(a) + [1, 0]

    def at(r):  # 1-based
        return ext[r - 1] if r <= k + 2 else 0

    vdm = prod(((j - i) * theta + at(i) - at(j) for i in range(1, k + 1) for j in range(i + 1, k + 1)), start=Fraction(1))
    gaps = prod(factorial(at(i) - at(i + 1)) for i in range(1, k + 1))
    rising = Fraction(1)
    for i in range(1, k + 2):
        for j in range(i + 1, k + 2):
            rising *= pochhammer((j - i) * theta + at(i) - at(j - 1), at(j - 1) - at(j + 1) + 1)
    return vdm, gaps, rising


def hook_rows_term(mu) -> Fraction:
    """Young-lattice Plancherel summand for box (k+1, 1) in row coordinates."""
    mu = tuple(mu)
    _require_weak(mu, "mu")
    if not mu:
        raise InvalidIndexError("need k >= 1")
    vdm, gaps, rising = _row_frame(mu, 1)
    return factorial(sum(mu)) * vdm / (gaps * rising)


# -- deformed Plancherel and z-measures, box (k+1, 1) ----------------------


def plancherel_hook_term(a, theta) -> Fraction:
    """Deformed-Plancherel summand for rows a_1 >= ... >= a_k >= 1."""
    a = tuple(a)
    theta = Fraction(theta)
    _require_weak(a, "a")
    if not a:
        raise InvalidIndexError("need k >= 1")
    vdm, gaps, rising = _row_frame(a, theta)
    n = sum(a)
    return factorial(n) * theta ** n * vdm / (gaps * rising)


def z_measure_hook_term(mu, theta, z) -> Fraction:
    """z-measure summand for rows mu_1 >= ... >= mu_k >= 1.

    The z-dependent factor is built from separate z and conj(z) products;
    their product must come out real.
    """
    mu = tuple(mu)
    theta = Fraction(theta)
    z = z if isinstance(z, Gaussian) else Gaussian(z)
    _require_weak(mu, "mu")
    if not mu:
        raise InvalidIndexError("need k >= 1")
    if is_degenerate_z(z, theta):
        raise DegenerateParameterError(f"z = {z} lies in Z + Z*theta")
    k = len(mu)
    vdm, gaps, rising = _row_frame(mu, theta)
    n = sum(mu)
    combinatorial = factorial(n) * vdm / (theta * gaps * rising)

    zbar = z.conjugate()
    up = z - k * theta
    down = zbar - k * theta
    for i, m in enumerate(mu, start=1):
        up *= pochhammer(z - (i - 1) * theta, m)
        down *= pochhammer(zbar - (i - 1) * theta, m)
    weight = up * down / pochhammer((z * zbar) / theta, n + 1)
    if not weight.is_real():
        raise ArithmeticError(f"z-dependent factor has imaginary part {weight.im}")
    return combinatorial * weight.re


# -- Kingman graph t-measures, box (k+1, l+1) ------------------------------


def kingman_t_size(r, s) -> int:
    """Diagram size before the box lands: sum(s) + sum(j*r_j) + kl + k + l."""
    k, l = len(s), len(r)
    return sum(s) + sum(j * rj for j, rj in enumerate(r, start=1)) + k * l + k + l


def kingman_t_term(r, s, t) -> Fraction:
    """Summand for short-row counts r (length l >= 1) and long-row excesses s (length k).

    Includes the overall 1/k! so that ordered s tuples can be summed directly.
    """
    r, s = tuple(r), tuple(s)
    t = Fraction(t)
    if len(r) < 1:
        raise InvalidIndexError("need l >= 1")
    if any(x < 0 for x in r + s):
        raise InvalidIndexError(f"indices must be nonnegative: r={r}, s={s}")
    k, l = len(s), len(r)
    n = kingman_t_size(r, s)
    den = (
        factorial(k)
        * prod(sj + l + 1 for sj in s)
        * prod(j ** rj * factorial(rj) for j, rj in enumerate(r, start=1))
    )
    return Fraction(factorial(n), den) * t ** (k + sum(r) + 1) / pochhammer(t, n + 1)


# -- special cases in the deformed Plancherel family -----------------------


def box22_term(r: int, s: int, theta) -> Fraction:
    """Summand for box (2,2), indexed by r, s >= 0."""
    if r < 0 or s < 0:
        raise InvalidIndexError(f"need r, s >= 0: {(r, s)}")
    th = Fraction(theta)
    num = factorial(r + s + 3) * th ** (r - s + 2)
    den = (
        (r + 2 + (s + 1) * th)
        * factorial(r + 1)
        * pochhammer(1 / th, s + 1)
        * (r + 1 + (s + 2) * th)
        * (r + 2 * th)
        * (1 + (s + 1) * th)
        * pochhammer(th, r)
        * factorial(s)
    )
    tail = (r + 2 * th) * (r + 1) / ((r + 1 + th) * (r + th))
    return num / den * tail


def column2_term(r: int, theta) -> Fraction:
    """Summand for box (2,1), r >= 0."""
    if r < 0:
        raise InvalidIndexError(f"need r >= 0: {r}")
    th = Fraction(theta)
    return (r + 1) * th ** (r + 1) / pochhammer(th, r + 2)


def column3_term(r: int, s: int, theta) -> Fraction:
    """Summand for box (3,1), s >= r >= 0."""
    if not 0 <= r <= s:
        raise InvalidIndexError(f"need s >= r >= 0: {(r, s)}")
    th = Fraction(theta)
    num = factorial(s + r + 2) * th ** (s + r + 2) * (th + s - r)
    den = (
        factorial(r)
        * factorial(s - r)
        * pochhammer(th, r + 2)
        * pochhammer(th, s + 1)
        * pochhammer(2 * th + s - r, r + 2)
    )
    return num / den


def column4_term(r: int, s: int, u: int, theta) -> Fraction:
    """Summand for box (4,1), u >= s >= r >= 0."""
    if not 0 <= r <= s <= u:
        raise InvalidIndexError(f"need u >= s >= r >= 0: {(r, s, u)}")
    th = Fraction(theta)
    num = factorial(r + s + u + 3) * th ** (r + s + u + 3) * (th + s - r) * (th + u - s) * (2 * th + u - r)
    den = (
        factorial(r)
        * factorial(s - r)
        * factorial(u - s)
        * pochhammer(th, r + 2)
        * pochhammer(th, s + 1)
        * pochhammer(th, u - r + 1)
        * pochhammer(2 * th + s - r, r + 2)
        * pochhammer(2 * th + u - s, s + 1)
        * pochhammer(3 * th + u - r, r + 2)
    )
    return num / den


def column5_term(r: int, s: int, u: int, v: int, theta) -> Fraction:
    """Summand for box (5,1), v >= u >= s >= r >= 0."""
    if not 0 <= r <= s <= u <= v:
        raise InvalidIndexError(f"need v >= u >= s >= r >= 0: {(r, s, u, v)}")
    th = Fraction(theta)
    first = factorial(r + s + u + v + 4) * th ** (r + s + u + v + 4) * (th + s - r) * (th + u - s) * (2 * th + u - r)
    first /= (
        factorial(r)
        * factorial(s - r)
        * factorial(u - s)
        * pochhammer(th, r + 2)
        * pochhammer(th, s + 1)
        * pochhammer(th, u - r + 1)
    )
    second = 1 / (
        pochhammer(2 * th + s - r, r + 2)
        * pochhammer(2 * th + u - s, s + 1)
        * pochhammer(3 * th + u - r, r + 2)
    )
    third = (th + v - u) * (2 * th + v - s) * (3 * th + v - r)
    third /= (
        factorial(v - u)
        * pochhammer(th, v - s + 1)
        * pochhammer(2 * th + v - u, u - r + 1)
        * pochhammer(3 * th + v - s, s + 1)
        * pochhammer(4 * th + v - r, r + 2)
    )
    return first * second * third
