"""Central measures: their harmonic functions, transitions and level laws."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .arith import Gaussian, factorial, pochhammer
from .errors import CapExceededError, DegenerateParameterError
from .graph import Jack, Kingman, dim_kappa, kappa
from .partitions import Partition, addable_boxes, big_h_prime_theta, content_theta, partitions

DEFAULT_LEVEL_CAP = 40


@dataclass(frozen=True)
class PlancherelJack:
    theta: Fraction

    def __post_init__(self):
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        object.__setattr__(self, "theta", theta)

    @property
    def multiplicity(self):
        return Jack(self.theta)


def is_degenerate_z(z, theta) -> bool:
    """True iff z lies in Z + Z*theta.

    For theta = p/q in lowest terms that lattice is (1/q)Z, so only real z
    with q*z integral are excluded.
    """
    theta = Fraction(theta)
    z = z if isinstance(z, Gaussian) else Gaussian(z)
    if not z.is_real():
        return False
    return (z.re * theta.denominator).denominator == 1


@dataclass(frozen=True)
class ZMeasure:
    theta: Fraction
    z: Gaussian

    def __post_init__(self):
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        z = self.z if isinstance(self.z, Gaussian) else Gaussian(self.z)
        if is_degenerate_z(z, theta):
            raise DegenerateParameterError(f"z = {z} lies in Z + Z*theta for theta = {theta}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "z", z)

    @property
    def multiplicity(self):
        return Jack(self.theta)


@dataclass(frozen=True)
class KingmanT:
    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        if t <= 0:
            raise ValueError("t must be positive")
        object.__setattr__(self, "t", t)

    @property
    def multiplicity(self):
        return Kingman()


MeasureSpec = PlancherelJack | ZMeasure | KingmanT


def phi_plancherel(lam, theta) -> Fraction:
    theta = Fraction(theta)
    return theta ** sum(lam) / big_h_prime_theta(lam, theta)


def phi_z(lam, theta, z) -> Fraction:
    theta = Fraction(theta)
    z = z if isinstance(z, Gaussian) else Gaussian(z)
    if is_degenerate_z(z, theta):
        raise DegenerateParameterError(f"z = {z} lies in Z + Z*theta")
    lam = Partition(lam)
    zbar = z.conjugate()
    # the two conjugate products are kept apart so a sign slip shows up as a nonzero imaginary part
    upper = prod((z + content_theta(b, theta) for b in lam.boxes()), start=Gaussian(1))
    lower = prod((zbar + content_theta(b, theta) for b in lam.boxes()), start=Gaussian(1))
    numer = upper * lower
    if not numer.is_real():
        raise ArithmeticError(f"content product has imaginary part {numer.im}")
    assert numer.re >= 0
    return numer.re / pochhammer(z.norm_sq() / theta, lam.size) / big_h_prime_theta(lam, theta)


def psi_t(lam, t) -> Fraction:
    t = Fraction(t)
    lam = Partition(lam)
    mult = Counter(lam)
    num = prod(factorial(r - 1) for r in lam)
    den = prod(factorial(m) for m in mult.values())
    return Fraction(num, den) * t ** len(lam) / pochhammer(t, lam.size)


@lru_cache(maxsize=None)
def _phi(measure, lam: Partition) -> Fraction:
    if isinstance(measure, PlancherelJack):
        return phi_plancherel(lam, measure.theta)
    if isinstance(measure, ZMeasure):
        return phi_z(lam, measure.theta, measure.z)
    if isinstance(measure, KingmanT):
        return psi_t(lam, measure.t)
    raise TypeError(f"unknown measure {measure!r}")


def phi(measure: MeasureSpec, lam) -> Fraction:
    return _phi(measure, Partition(lam))


def successors(mu) -> list[Partition]:
    mu = Partition(mu)
    return [mu.add_box(b) for b in addable_boxes(mu)]


def transition(measure: MeasureSpec, mu, lam) -> Fraction:
    """P(path passes through lam | it passes through mu)."""
    mu, lam = Partition(mu), Partition(lam)
    k = kappa(measure.multiplicity, mu, lam)
    denom = phi(measure, mu)
    if denom == 0:
        raise ZeroDivisionError(f"phi vanishes at {tuple(mu)}")
    return k * phi(measure, lam) / denom


def transition_row(measure: MeasureSpec, mu) -> list[tuple[Partition, Fraction]]:
    """All (lam, p(mu, lam)) for lam covering mu; probabilities sum to exactly 1."""
    row = [(lam, transition(measure, mu, lam)) for lam in successors(mu)]
    total = sum((p for _, p in row), Fraction(0))
    if total != 1:
        raise ArithmeticError(f"transition probabilities out of {tuple(mu)} sum to {total}")
    return row


def level_distribution(measure: MeasureSpec, n: int, cap: int = DEFAULT_LEVEL_CAP) -> dict[Partition, Fraction]:
    """Law of the n-th shape along the random path: lam -> dim(lam) * phi(lam)."""
    if n > cap:
        raise CapExceededError(f"level {n} exceeds cap {cap}")
    spec = measure.multiplicity
    return {lam: dim_kappa(spec, lam) * phi(measure, lam) for lam in partitions(n)}


def harmonicity_defect(measure: MeasureSpec, mu) -> Fraction:
    mu = Partition(mu)
    spec = measure.multiplicity
    rhs = sum((kappa(spec, mu, lam) * phi(measure, lam) for lam in successors(mu)), Fraction(0))
    return phi(measure, mu) - rhs


def check_harmonicity(measure: MeasureSpec, mu) -> bool:
    return harmonicity_defect(measure, mu) == 0


def clear_caches():
    _phi.cache_clear()


__all__ = [
    "KingmanT",
    "MeasureSpec",
    "PlancherelJack",
    "ZMeasure",
    "check_harmonicity",
    "clear_caches",
    "harmonicity_defect",
    "is_degenerate_z",
    "level_distribution",
    "phi",
    "phi_plancherel",
    "phi_z",
    "psi_t",
    "successors",
    "transition",
    "transition_row",
]
