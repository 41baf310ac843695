"""Seeded Monte Carlo growth of random infinite tableaux.

Streams: a single path uses PCG64(SeedSequence(seed)); trial i of an entry
histogram uses PCG64(SeedSequence([seed, i])), so trials are independent of
how they are scheduled.
"""
from __future__ import annotations

import bisect
import csv
import io
import json
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .arith import format_rational
from .identities.boxprob import box_probability_term
from .measures import MeasureSpec, transition_row
from .partitions import EMPTY, Box, Partition, format_partition


def _generator(seed, trial: int | None = None) -> np.random.Generator:
    entropy = seed if trial is None else [seed, trial]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


@lru_cache(maxsize=None)
def _draw_table(measure, mu: Partition) -> tuple[tuple[Partition, ...], tuple[float, ...]]:
    # transition_row checks the exact row sum before anything becomes a float
    row = transition_row(measure, mu)
    shapes = tuple(lam for lam, _ in row)
    cumulative = []
    running = Fraction(0)
    for _, p in row:
        running += p
        cumulative.append(float(running))
    cumulative[-1] = 1.0
    return shapes, tuple(cumulative)


def _step(measure, mu: Partition, u: float) -> Partition:
    shapes, cumulative = _draw_table(measure, mu)
    idx = bisect.bisect_right(cumulative, u)
    return shapes[min(idx, len(shapes) - 1)]


@dataclass(frozen=True)
class PathSample:
    diagrams: tuple[Partition, ...]
    seed: int
    measure: object

    def __post_init__(self):
        for n, lam in enumerate(self.diagrams):
            if lam.size != n:
                raise ValueError(f"diagram {n} has size {lam.size}")

    @property
    def steps(self) -> int:
        return len(self.diagrams) - 1

    def entry_step(self, box) -> int | None:
        """First n with the box inside the n-th diagram, or None."""
        for n, lam in enumerate(self.diagrams):
            if tuple(box) in lam:
                return n
        return None


def grow_path(measure: MeasureSpec, steps: int, seed: int = 0) -> PathSample:
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = _generator(seed)
    draws = rng.random(steps)
    lam = EMPTY
    path = [lam]
    for u in draws:
        lam = _step(measure, lam, float(u))
        path.append(lam)
    return PathSample(tuple(path), seed, measure)


def _entry_time(measure, box: Box, steps: int, rng) -> int | None:
    draws = rng.random(steps)
    lam = EMPTY
    for n in range(1, steps + 1):
        lam = _step(measure, lam, float(draws[n - 1]))
        if box in lam:
            return n
    return None


@dataclass
class EntryHistogram:
    box: Box
    steps: int
    trials: int = 0
    counts: dict[int, int] = field(default_factory=dict)
    not_reached: int = 0

    def __post_init__(self):
        self.box = Box(*self.box)

    def check(self):
        if sum(self.counts.values()) + self.not_reached != self.trials:
            raise ArithmeticError("histogram counts do not add up to the number of trials")

    def merge(self, other: EntryHistogram) -> EntryHistogram:
        if self.box != other.box or self.steps != other.steps:
            raise ValueError("can only merge histograms for the same box and step count")
        counts = Counter(self.counts)
        counts.update(other.counts)
        return EntryHistogram(self.box, self.steps, self.trials + other.trials, dict(sorted(counts.items())), self.not_reached + other.not_reached)

    def reached(self) -> int:
        return self.trials - self.not_reached

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("level", "count", "frequency_exact", "frequency_float"))
        for n, c in sorted(self.counts.items()):
            f = Fraction(c, self.trials)
            writer.writerow((n, c, format_rational(f), repr(float(f))))
        writer.writerow(("not_reached", self.not_reached, format_rational(Fraction(self.not_reached, max(self.trials, 1))), ""))
        return buf.getvalue()

    def to_structured(self) -> dict:
        return {
            "box": f"{self.box.row},{self.box.col}",
            "steps": self.steps,
            "trials": self.trials,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "not_reached": self.not_reached,
        }

    def to_table(self) -> str:
        lines = [f"box {self.box.row},{self.box.col}: {self.trials} trials of {self.steps} steps", f"{'n':>5}  {'count':>8}  {'freq':>10}"]
        for n, c in sorted(self.counts.items()):
            lines.append(f"{n:>5}  {c:>8}  {c / self.trials:>10.6f}")
        lines.append(f"not reached: {self.not_reached}")
        return "\n".join(lines) + "\n"


def entry_distribution(measure: MeasureSpec, box, steps: int, trials: int, seed: int = 0) -> EntryHistogram:
    """Histogram of the step at which ``box`` enters, over independently seeded paths."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    box = Box(*box)
    counts: Counter[int] = Counter()
    missed = 0
    for trial in range(trials):
        n = _entry_time(measure, box, steps, _generator(seed, trial))
        if n is None:
            missed += 1
        else:
            counts[n] += 1
    hist = EntryHistogram(box, steps, trials, dict(sorted(counts.items())), missed)
    hist.check()
    return hist


class Comparison(NamedTuple):
    level: int
    count: int
    empirical: float
    analytic: Fraction
    z_score: float


def compare_empirical_analytic(hist: EntryHistogram, measure: MeasureSpec, levels=None) -> list[Comparison]:
    """Binomial z-score of each observed (or requested) level against the exact entry law."""
    if hist.trials == 0:
        return []
    wanted = sorted(hist.counts) if levels is None else sorted(levels)
    out = []
    for n in wanted:
        c = hist.counts.get(n, 0)
        p = box_probability_term(measure, hist.box, n)
        freq = c / hist.trials
        var = float(p * (1 - p)) * hist.trials
        if var == 0:
            z = 0.0 if c == p * hist.trials else math.inf
        else:
            z = (c - float(p) * hist.trials) / math.sqrt(var)
        out.append(Comparison(n, c, freq, p, z))
    return out


def format_path(path: PathSample) -> str:
    return " -> ".join(format_partition(lam) for lam in path.diagrams)


def path_to_structured(path: PathSample) -> str:
    return json.dumps({"seed": path.seed, "diagrams": [format_partition(lam) for lam in path.diagrams]}, indent=2) + "\n"


def clear_caches():
    _draw_table.cache_clear()
