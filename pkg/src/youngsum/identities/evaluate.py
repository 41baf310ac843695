"""Identity specifications and level-wise evaluation.

Every identity is summed by the size n of the diagram right after the box
is filled, so the partial sum through level N is exactly the probability
that the box has been reached by step N.
"""
from __future__ import annotations

import itertools
import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..arith import Gaussian, format_scalar
from ..errors import DegenerateParameterError, InvalidIndexError, UnsupportedParameterError
from ..measures import KingmanT, PlancherelJack, ZMeasure, is_degenerate_z
from ..partitions import Box, partitions_with_length, strict_partitions_with_length
from . import terms
from .boxprob import box_probability_term
from .report import ConvergenceReport


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` nonnegative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def _weighted(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Tuples (r_1..r_length) >= 0 with sum j*r_j == total."""
    def rec(j, rem):
        if j > length:
            if rem == 0:
                yield ()
            return
        for rj in range(rem // j + 1):
            for tail in rec(j + 1, rem - j * rj):
                yield (rj,) + tail

    yield from rec(1, total)


def _nondecreasing(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Tuples 0 <= x_1 <= ... <= x_length summing to total."""
    for p in partitions_with_length(total + length, length):
        yield tuple(x - 1 for x in reversed(p))


def _fmt(x):
    return format_scalar(x)


@dataclass(frozen=True)
class PlancherelYoungBox:
    """Plancherel measure on the Young lattice, arbitrary box (k+1, l+1)."""

    k: int
    l: int
    name = "plancherel-young-box"

    def __post_init__(self):
        if self.k < 0 or self.l < 0 or self.k + self.l < 1:
            raise InvalidIndexError("need k, l >= 0 and k + l >= 1")

    @property
    def box(self):
        return Box(self.k + 1, self.l + 1)

    def measure(self):
        return PlancherelJack(1)

    def terms(self, max_level):
        shift = terms.plancherel_young_shift(self.k, self.l)
        for n in range(1, max_level + 1):
            total = n - 1 - shift
            if total < 0:
                continue
            for a in range(total + 1):
                for p in strict_partitions_with_length(a, self.k):
                    for q in strict_partitions_with_length(total - a, self.l):
                        yield n, terms.plancherel_young_term(p, q)

    def describe(self):
        return {"identity": self.name, "k": self.k, "l": self.l}


@dataclass(frozen=True)
class ThetaPlancherelHook:
    """Deformed Plancherel measure, box (k+1, 1)."""

    k: int
    theta: Fraction
    name = "theta-plancherel-hook"

    def __post_init__(self):
        if self.k < 1:
            raise InvalidIndexError("need k >= 1")
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        object.__setattr__(self, "theta", theta)

    @property
    def box(self):
        return Box(self.k + 1, 1)

    def measure(self):
        return PlancherelJack(self.theta)

    def terms(self, max_level):
        for n in range(1, max_level + 1):
            for a in partitions_with_length(n - 1, self.k):
                yield n, terms.plancherel_hook_term(a, self.theta)

    def describe(self):
        return {"identity": self.name, "k": self.k, "theta": _fmt(self.theta)}


@dataclass(frozen=True)
class ZMeasureHook:
    """z-measure, box (k+1, 1)."""

    k: int
    theta: Fraction
    z: Gaussian
    name = "z-measure-hook"

    def __post_init__(self):
        if self.k < 1:
            raise InvalidIndexError("need k >= 1")
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        z = self.z if isinstance(self.z, Gaussian) else Gaussian(self.z)
        if is_degenerate_z(z, theta):
            raise DegenerateParameterError(f"z = {z} lies in Z + Z*theta")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "z", z)

    @property
    def box(self):
        return Box(self.k + 1, 1)

    def measure(self):
        return ZMeasure(self.theta, self.z)

    def terms(self, max_level):
        for n in range(1, max_level + 1):
            for mu in partitions_with_length(n - 1, self.k):
                yield n, terms.z_measure_hook_term(mu, self.theta, self.z)

    def describe(self):
        return {"identity": self.name, "k": self.k, "theta": _fmt(self.theta), "z": _fmt(self.z)}


@dataclass(frozen=True)
class KingmanTBox:
    """Kingman-graph t-measure, box (k+1, l+1) with l >= 1."""

    k: int
    l: int
    t: Fraction
    name = "kingman-t"

    def __post_init__(self):
        if self.k < 0:
            raise InvalidIndexError("need k >= 0")
        if self.l < 1:
            # the summation formula is stated for l >= 1 only
            raise UnsupportedParameterError("l = 0 is not supported for the Kingman t-measure identity")
        t = Fraction(self.t)
        if t <= 0:
            raise ValueError("t must be positive")
        object.__setattr__(self, "t", t)

    @property
    def box(self):
        return Box(self.k + 1, self.l + 1)

    def measure(self):
        return KingmanT(self.t)

    def terms(self, max_level):
        k, l = self.k, self.l
        base = k * l + k + l
        for n in range(1, max_level + 1):
            free = n - 1 - base
            if free < 0:
                continue
            for w in range(free + 1):
                for r in _weighted(w, l):
                    for s in _compositions(free - w, k):
                        yield n, terms.kingman_t_term(r, s, self.t)

    def describe(self):
        return {"identity": self.name, "k": self.k, "l": self.l, "t": _fmt(self.t)}


SPECIAL_CASE_BOXES = (Box(2, 1), Box(2, 2), Box(3, 1), Box(4, 1), Box(5, 1))


@dataclass(frozen=True)
class SpecialCase:
    """Hand-simplified deformed-Plancherel identities for a few small boxes."""

    box: Box
    theta: Fraction
    name = "special-case"

    def __post_init__(self):
        box = Box(*self.box)
        if box not in SPECIAL_CASE_BOXES:
            raise InvalidIndexError(f"no special case for box {tuple(box)}; choose from {[tuple(b) for b in SPECIAL_CASE_BOXES]}")
        theta = Fraction(self.theta)
        if theta <= 0:
            raise ValueError("theta must be positive")
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "theta", theta)

    def measure(self):
        return PlancherelJack(self.theta)

    def terms(self, max_level):
        th = self.theta
        box = self.box
        for n in range(1, max_level + 1):
            if box == (2, 2):
                for r in range(0, n - 3):
                    yield n, terms.box22_term(r, n - 4 - r, th)
            elif box == (2, 1):
                if n >= 2:
                    yield n, terms.column2_term(n - 2, th)
            else:
                depth = box.row - 1
                total = n - 1 - depth
                if total < 0:
                    continue
                fn = {3: terms.column3_term, 4: terms.column4_term, 5: terms.column5_term}[box.row]
                for idx in _nondecreasing(total, depth):
                    yield n, fn(*idx, th)

    def describe(self):
        return {"identity": self.name, "box": f"{self.box.row},{self.box.col}", "theta": _fmt(self.theta)}


@dataclass(frozen=True)
class StrictRowsForm:
    """Young-lattice Plancherel, box (k+1, 1), in strictly decreasing coordinates."""

    k: int
    name = "strict-rows"

    def __post_init__(self):
        if self.k < 1:
            raise InvalidIndexError("need k >= 1")

    @property
    def box(self):
        return Box(self.k + 1, 1)

    def measure(self):
        return PlancherelJack(1)

    def terms(self, max_level):
        k = self.k
        for n in range(1, max_level + 1):
            for p in strict_partitions_with_length(n - 1 + k * (k - 1) // 2, k):
                yield n, terms.strict_rows_term(p)

    def describe(self):
        return {"identity": self.name, "k": self.k}


@dataclass(frozen=True)
class HookRowsForm:
    """Young-lattice Plancherel, box (k+1, 1), in row coordinates."""

    k: int
    name = "hook-rows"

    def __post_init__(self):
        if self.k < 1:
            raise InvalidIndexError("need k >= 1")

    @property
    def box(self):
        return Box(self.k + 1, 1)

    def measure(self):
        return PlancherelJack(1)

    def terms(self, max_level):
        for n in range(1, max_level + 1):
            for mu in partitions_with_length(n - 1, self.k):
                yield n, terms.hook_rows_term(mu)

    def describe(self):
        return {"identity": self.name, "k": self.k}


@dataclass(frozen=True)
class GenericBox:
    """Any measure and box, summed straight from dimensions and harmonic functions."""

    measure_spec: object
    box: Box
    name = "generic-box"

    def __post_init__(self):
        object.__setattr__(self, "box", Box(*self.box))

    def measure(self):
        return self.measure_spec

    def terms(self, max_level):
        for n in range(1, max_level + 1):
            yield n, box_probability_term(self.measure_spec, self.box, n)

    def describe(self):
        m = self.measure_spec
        params = {k: _fmt(v) for k, v in vars(m).items()}
        return {"identity": self.name, "measure": type(m).__name__, **params, "box": f"{self.box.row},{self.box.col}"}


IDENTITIES = {
    cls.name: cls
    for cls in (PlancherelYoungBox, ThetaPlancherelHook, ZMeasureHook, KingmanTBox, SpecialCase, StrictRowsForm, HookRowsForm, GenericBox)
}


def level_masses(spec, max_level: int) -> dict[int, Fraction]:
    masses: dict[int, Fraction] = defaultdict(Fraction)
    for n, value in spec.terms(max_level):
        masses[n] += value
    return dict(masses)


def evaluate_identity(spec, max_level: int) -> ConvergenceReport:
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    start = time.perf_counter()
    masses = level_masses(spec, max_level)
    return ConvergenceReport.from_masses(spec, masses, max_level, wall_time=time.perf_counter() - start)
