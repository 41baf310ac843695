"""Generic box-entry probabilities for any central measure.

P(entry n lands at box b) is the sum, over diagrams mu of size n-1 to
which b can be added, of dim(mu) * kappa(mu, mu + b) * phi(mu + b).
"""
from __future__ import annotations

from fractions import Fraction

from ..graph import dim_kappa, kappa
from ..measures import MeasureSpec, phi
from ..partitions import Box, Partition, partitions, partitions_with_length


def upper_hook_set(box, m: int) -> list[Partition]:
    """Diagrams of size m that miss ``box`` but become diagrams when it is added.

    Rows 1..i-1 have length >= j, row i has length exactly j-1, and the
    rows below are therefore at most j-1.
    """
    i, j = box
    if i < 1 or j < 1:
        raise ValueError(f"invalid box {box}")
    top_min = (i - 1) * j
    out = []
    for top_size in range(top_min, m - (j - 1) + 1):
        rest = m - top_size - (j - 1)
        if j == 1 and rest:
            continue
        tops = list(partitions_with_length(top_size, i - 1, min_part=j))
        if not tops:
            continue
        bottoms = [()] if rest == 0 else [tuple(p) for p in partitions(rest, max_part=j - 1)]
        row_i = (j - 1,) if j > 1 else ()
        for top in tops:
            for bottom in bottoms:
                out.append(Partition(top + row_i + bottom))
    out.sort(reverse=True)
    return out


def box_probability_term(measure: MeasureSpec, box, n: int) -> Fraction:
    """Exact probability that the box receives entry n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    box = Box(*box)
    spec = measure.multiplicity
    total = Fraction(0)
    for mu in upper_hook_set(box, n - 1):
        lam = mu.add_box(box)
        total += dim_kappa(spec, mu) * kappa(spec, mu, lam) * phi(measure, lam)
    return total


def box_probability_cumulative(measure: MeasureSpec, box, max_level: int):
    """Convergence report for P(entry at box <= N), N = 1..max_level."""
    from .evaluate import GenericBox, evaluate_identity

    return evaluate_identity(GenericBox(measure, Box(*box)), max_level)
