"""Edge multiplicities on the Young lattice and the dimensions they induce."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CapExceededError, NotAnEdgeError
from .partitions import (
    DEFAULT_TABLEAU_CAP,
    EMPTY,
    Box,
    Partition,
    conjugate,
    format_partition,
    removable_boxes,
)


@dataclass(frozen=True)
class Jack:
    """Jack multiplicities with parameter theta > 0 (Pieri rule for P_(1))."""

    theta: Fraction

    def __post_init__(self):
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("Jack parameter theta must be positive")
        object.__setattr__(self, "theta", theta)


@dataclass(frozen=True)
class Kingman:
    """Monomial Pieri multiplicities: the theta -> 0 degeneration of Jack."""


@dataclass(frozen=True)
class Young:
    """All multiplicities 1; identical to Jack(1)."""


MultiplicitySpec = Jack | Kingman | Young


def added_box(mu, lam) -> Box:
    """The box lam \\ mu, or NotAnEdgeError if mu -> lam is not an edge."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(lam) != sum(mu) + 1 or len(lam) < len(mu):
        raise NotAnEdgeError(f"{format_partition(mu)} -> {format_partition(lam)} is not an edge")
    diff = None
    for i in range(len(lam)):
        m = mu[i] if i < len(mu) else 0
        if lam[i] == m + 1 and diff is None:
            diff = Box(i + 1, lam[i])
        elif lam[i] != m:
            diff = None
            break
    if diff is None:
        raise NotAnEdgeError(f"{format_partition(mu)} -> {format_partition(lam)} is not an edge")
    return diff


def kappa_jack(mu, lam, theta) -> Fraction:
    theta = Fraction(theta)
    if theta <= 0:
        raise ValueError("theta must be positive")
    i, j = added_box(mu, lam)
    conj = conjugate(mu)
    result = Fraction(1)
    for k in range(1, i):
        a = mu[k - 1] - j
        l = conj[j - 1] - k
        result *= (a + (l + 2) * theta) * (a + 1 + l * theta)
        result /= (a + (l + 1) * theta) * (a + 1 + (l + 1) * theta)
    return result


def kappa_kingman(mu, lam) -> int:
    """Multiplicity, in lam, of the length of the row that received the new box."""
    i, _ = added_box(mu, lam)
    row = lam[i - 1]
    return sum(1 for r in lam if r == row)


def kappa(spec: MultiplicitySpec, mu, lam) -> Fraction:
    if isinstance(spec, Jack):
        return kappa_jack(mu, lam, spec.theta)
    if isinstance(spec, Kingman):
        return Fraction(kappa_kingman(mu, lam))
    if isinstance(spec, Young):
        added_box(mu, lam)
        return Fraction(1)
    raise TypeError(f"unknown multiplicity spec {spec!r}")


def predecessors(lam) -> list[Partition]:
    lam = Partition(lam)
    return [lam.remove_box(b) for b in removable_boxes(lam)]


@lru_cache(maxsize=None)
def _dim(spec, lam: Partition) -> Fraction:
    if not lam:
        return Fraction(1)
    return sum((_dim(spec, mu) * kappa(spec, mu, lam) for mu in predecessors(lam)), Fraction(0))


def dim_kappa(spec: MultiplicitySpec, lam) -> Fraction:
    """Dimension via dim(lam) = sum over mu -> lam of dim(mu) * kappa(mu, lam)."""
    return _dim(spec, Partition(lam))


def dim_kappa_by_paths(spec: MultiplicitySpec, lam, cap: int = DEFAULT_TABLEAU_CAP) -> Fraction:
    """Sum over every path from the empty diagram of the product of edge weights.

    Deliberately unmemoized: this is the brute-force check on :func:`dim_kappa`.
    """
    lam = Partition(lam)
    if lam.size > cap:
        raise CapExceededError(f"|lambda| = {lam.size} exceeds path cap {cap}")

    def rec(shape, weight):
        if not shape:
            return weight
        total = Fraction(0)
        for b in removable_boxes(shape):
            below = shape.remove_box(b)
            total += rec(below, weight * kappa(spec, below, shape))
        return total

    return rec(lam, Fraction(1))


def cotransition(spec: MultiplicitySpec, mu, lam) -> Fraction:
    """Probability of passing through mu given the path passes through lam."""
    k = kappa(spec, mu, lam)
    return dim_kappa(spec, mu) * k / dim_kappa(spec, lam)


def clear_caches():
    _dim.cache_clear()


__all__ = [
    "EMPTY",
    "Jack",
    "Kingman",
    "MultiplicitySpec",
    "Young",
    "added_box",
    "clear_caches",
    "cotransition",
    "dim_kappa",
    "dim_kappa_by_paths",
    "kappa",
    "kappa_jack",
    "kappa_kingman",
    "predecessors",
]
