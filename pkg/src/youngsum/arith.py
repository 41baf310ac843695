"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Floating point never enters the exact pipeline; :func:`to_float` is the only
exit and is meant for reports and quadrature.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

import mpmath

from .errors import ParseError

__all__ = [
    "Gaussian",
    "as_exact",
    "factorial",
    "format_rational",
    "format_scalar",
    "norm_sq",
    "parse_rational",
    "parse_scalar",
    "pochhammer",
    "to_float",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, numbers.Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Gaussian:
    """Complex number with rational real and imaginary parts.

    Immutable. Mixes freely with ``int`` and ``Fraction``; compares equal to
    a rational when the imaginary part is zero.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = _frac(re)
        self._im = _frac(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def real(self) -> Fraction:
        return self._re

    @property
    def imag(self) -> Fraction:
        return self._im

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> Gaussian:
        return Gaussian(self._re, -self._im)

    def norm_sq(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Fraction, numbers.Rational)):
            return Gaussian(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Gaussian(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return Gaussian(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm_sq()
        if n == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        num = self * o.conjugate()
        return Gaussian(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Gaussian(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Gaussian(1) / (self ** -n)
        result = Gaussian(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        return f"Gaussian({format_rational(self._re)}, {format_rational(self._im)})"

    def __str__(self):
        return format_scalar(self)


def as_exact(x):
    """Coerce ``int``/``Fraction``/``Gaussian`` input to ``Fraction`` or ``Gaussian``."""
    if isinstance(x, Gaussian):
        return x
    return _frac(x)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def pochhammer(x, n: int):
    """Rising factorial x(x+1)...(x+n-1); the empty product is 1 of x's kind."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    result = Gaussian(1) if isinstance(x, Gaussian) else Fraction(1)
    for i in range(n):
        result *= x + i
    return result


def norm_sq(z) -> Fraction:
    if isinstance(z, Gaussian):
        return z.norm_sq()
    z = _frac(z)
    return z * z


def to_float(x, precision_bits: int = 53):
    """Round an exact value for display or numerics.

    53 bits gives a correctly rounded Python float; more bits gives an
    ``mpmath.mpf`` (or ``mpc``) at that working precision.
    """
    if precision_bits < 53:
        raise ValueError("precision_bits must be at least 53")
    if isinstance(x, Gaussian):
        if precision_bits == 53:
            return complex(float(x.re), float(x.im))
        with mpmath.workprec(precision_bits):
            return mpmath.mpc(
                mpmath.mpf(x.re.numerator) / x.re.denominator,
                mpmath.mpf(x.im.numerator) / x.im.denominator,
            )
    x = _frac(x)
    if precision_bits == 53:
        return float(x)
    with mpmath.workprec(precision_bits):
        return mpmath.mpf(x.numerator) / x.denominator


# -- text formats ----------------------------------------------------------
#
# rational: "p/q" or "p" (optional leading sign)
# complex:  "a/b+c/di", "c/di", "a-i", ... (real part optional)


def format_rational(x) -> str:
    x = _frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    if isinstance(x, Gaussian):
        if x.im == 0:
            return format_rational(x.re)
        im = format_rational(abs(x.im)) + "i"
        if x.re == 0:
            return ("-" if x.im < 0 else "") + im
        return format_rational(x.re) + ("-" if x.im < 0 else "+") + im
    return format_rational(x)


def _scan_unsigned(text, pos):
    """Read ``digits[/digits]`` starting at pos; return (Fraction, new_pos)."""
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError(text, pos, "expected a digit")
    num = int(text[start:pos])
    den = 1
    if pos < len(text) and text[pos] == "/":
        pos += 1
        dstart = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise ParseError(text, pos, "expected a denominator")
        den = int(text[dstart:pos])
        if den == 0:
            raise ParseError(text, dstart, "zero denominator")
    return Fraction(num, den), pos


def _scan_sign(text, pos):
    if pos < len(text) and text[pos] in "+-":
        return (-1 if text[pos] == "-" else 1), pos + 1, True
    return 1, pos, False


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    sign, pos, _ = _scan_sign(s, 0)
    value, pos = _scan_unsigned(s, pos)
    if pos != len(s):
        raise ParseError(s, pos, f"unexpected character {s[pos]!r}")
    return sign * value


def _scan_term(text, pos, require_sign):
    """One signed term: returns (value, is_imaginary, new_pos)."""
    sign, pos, had_sign = _scan_sign(text, pos)
    if require_sign and not had_sign:
        raise ParseError(text, pos, "expected '+' or '-'")
    if pos < len(text) and text[pos] == "i":
        return Fraction(sign), True, pos + 1
    value, pos = _scan_unsigned(text, pos)
    if pos < len(text) and text[pos] == "i":
        return sign * value, True, pos + 1
    return sign * value, False, pos


def parse_scalar(text: str):
    """Parse a rational (-> Fraction) or a Gaussian rational (-> Gaussian).

    A value containing ``i`` is always returned as ``Gaussian`` even when the
    imaginary part is written as zero.
    """
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty value")
    value, imaginary, pos = _scan_term(s, 0, require_sign=False)
    if pos == len(s):
        return Gaussian(0, value) if imaginary else value
    if imaginary:
        raise ParseError(s, pos, "imaginary part must come last")
    im, imaginary, pos2 = _scan_term(s, pos, require_sign=True)
    if not imaginary:
        raise ParseError(s, pos2, "second term must be imaginary (end with 'i')")
    if pos2 != len(s):
        raise ParseError(s, pos2, f"unexpected character {s[pos2]!r}")
    return Gaussian(value, im)
