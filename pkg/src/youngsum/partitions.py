"""Young diagrams, boxes, hook products and standard tableaux.

Rows and columns are 1-based throughout, matching the usual (i, j) box
notation; ``Partition`` itself is a tuple so ``lam[0]`` is row 1.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterator, NamedTuple

from .arith import factorial, pochhammer
from .errors import BoxOutsideDiagramError, CapExceededError, ParseError

DEFAULT_TABLEAU_CAP = 10


class Box(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are stripped."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, i: int) -> int:
        """Length of row i (1-based); zero past the last row."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __contains__(self, box) -> bool:
        if isinstance(box, tuple) and len(box) == 2 and not isinstance(box, Partition):
            i, j = box
            return i >= 1 and j >= 1 and self.row(i) >= j
        return super().__contains__(box)

    def boxes(self) -> Iterator[Box]:
        for i, r in enumerate(self, start=1):
            for j in range(1, r + 1):
                yield Box(i, j)

    def add_box(self, box) -> Partition:
        i, j = box
        if self.row(i) != j - 1 or (i > 1 and self.row(i - 1) < j):
            raise BoxOutsideDiagramError(f"box {tuple(box)} is not addable to {format_partition(self)}")
        parts = list(self) + [0] * (i - len(self))
        parts[i - 1] += 1
        return Partition(parts)

    def remove_box(self, box) -> Partition:
        i, j = box
        if self.row(i) != j or self.row(i + 1) >= j:
            raise BoxOutsideDiagramError(f"box {tuple(box)} is not removable from {format_partition(self)}")
        parts = list(self)
        parts[i - 1] -= 1
        return Partition(parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


EMPTY = Partition()


def conjugate(lam) -> Partition:
    lam = tuple(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for r in lam if r > j) for j in range(lam[0]))


def _check_inside(mu, box):
    i, j = box
    if not (i >= 1 and j >= 1 and i <= len(mu) and mu[i - 1] >= j):
        raise BoxOutsideDiagramError(f"box {tuple(box)} is not in {format_partition(mu)}")


def arm(mu, box) -> int:
    _check_inside(mu, box)
    return mu[box[0] - 1] - box[1]


def leg(mu, box) -> int:
    _check_inside(mu, box)
    return conjugate(mu)[box[1] - 1] - box[0]


def content_theta(box, theta) -> Fraction:
    """Deformed content (j-1) - (i-1)*theta."""
    i, j = box
    return (j - 1) - (i - 1) * Fraction(theta)


def addable_boxes(mu) -> list[Box]:
    mu = tuple(mu)
    out = []
    for i in range(1, len(mu) + 2):
        j = (mu[i - 1] if i <= len(mu) else 0) + 1
        if i == 1 or mu[i - 2] >= j:
            out.append(Box(i, j))
    return out


def removable_boxes(lam) -> list[Box]:
    lam = tuple(lam)
    out = []
    for i, r in enumerate(lam, start=1):
        below = lam[i] if i < len(lam) else 0
        if r > below:
            out.append(Box(i, r))
    return out


def _arm_leg_pairs(mu):
    conj = conjugate(mu)
    for i, r in enumerate(mu, start=1):
        for j in range(1, r + 1):
            yield r - j, conj[j - 1] - i


def hook_theta(mu, box, theta) -> Fraction:
    """a + theta*l + 1."""
    return arm(mu, box) + Fraction(theta) * leg(mu, box) + 1


def hook_prime_theta(mu, box, theta) -> Fraction:
    """a + theta*l + theta."""
    theta = Fraction(theta)
    return arm(mu, box) + theta * leg(mu, box) + theta


def big_h_theta(mu, theta) -> Fraction:
    theta = Fraction(theta)
    return prod((a + theta * l + 1 for a, l in _arm_leg_pairs(mu)), start=Fraction(1))


def big_h_prime_theta(mu, theta) -> Fraction:
    theta = Fraction(theta)
    return prod((a + theta * l + theta for a, l in _arm_leg_pairs(mu)), start=Fraction(1))


def big_h_theta_alt(mu, theta) -> Fraction:
    """Row-pair product of rising factorials; never looks at individual hooks."""
    theta = Fraction(theta)
    mu = tuple(mu)
    n = len(mu)
    result = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = mu[i - 1] - mu[j - 1]
            result *= pochhammer(1 + (j - i - 1) * theta, d) / pochhammer(1 + (j - i) * theta, d)
        result *= pochhammer(1 + (n - i) * theta, mu[i - 1])
    return result


def big_h_prime_theta_alt(mu, theta) -> Fraction:
    theta = Fraction(theta)
    mu = tuple(mu)
    n = len(mu)
    result = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = mu[i - 1] - mu[j - 1]
            result *= pochhammer((j - i) * theta, d) / pochhammer((j - i + 1) * theta, d)
        result *= pochhammer((n + 1 - i) * theta, mu[i - 1])
    return result


def dim_theta_hook(mu, theta) -> Fraction:
    """Jack dimension |mu|! / H_theta(mu)."""
    return Fraction(factorial(sum(mu))) / big_h_theta(mu, theta)


def dim_kingman(mu) -> int:
    """Multinomial |mu|! / (mu_1! mu_2! ...)."""
    return factorial(sum(mu)) // prod(factorial(r) for r in mu)


# -- enumeration -----------------------------------------------------------


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rem, cap, room):
        if rem == 0:
            yield ()
            return
        if room == 0:
            return
        for p in range(min(rem, cap), 0, -1):
            if p * room < rem:
                break
            for tail in rec(rem - p, p, room - 1):
                yield (p,) + tail

    for parts in rec(n, max_part, max_length):
        yield Partition(parts)


def partitions_with_length(n: int, length: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of exactly ``length`` parts >= min_part summing to n."""
    base = length * min_part
    if n < base:
        return
    for p in partitions(n - base, max_length=length):
        padded = tuple(p) + (0,) * (length - len(p))
        yield tuple(x + min_part for x in padded)


def strict_partitions_with_length(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of positive integers with ``length`` parts summing to n."""
    shift = length * (length - 1) // 2
    for mu in partitions_with_length(n - shift, length) if n >= shift else ():
        yield tuple(m + length - 1 - r for r, m in enumerate(mu))


class StandardTableau(NamedTuple):
    shape: Partition
    entries: dict  # Box -> label

    def path(self) -> list[Partition]:
        """The chain of shapes filled by labels <= 0, 1, ..., n."""
        order = sorted(self.entries, key=self.entries.get)
        chain = [EMPTY]
        for b in order:
            chain.append(chain[-1].add_box(b))
        return chain


def enumerate_standard_tableaux(lam, cap: int = DEFAULT_TABLEAU_CAP) -> list[StandardTableau]:
    """All standard tableaux of shape lam, by recursive removal of corners.

    Intended only as a small brute-force oracle, hence the size cap.
    """
    lam = Partition(lam)
    if lam.size > cap:
        raise CapExceededError(f"|lambda| = {lam.size} exceeds tableau cap {cap}")
    out = []

    def rec(shape, n, filled):
        if n == 0:
            out.append(StandardTableau(lam, dict(filled)))
            return
        for b in removable_boxes(shape):
            filled[b] = n
            rec(shape.remove_box(b), n - 1, filled)
            del filled[b]

    rec(lam, lam.size, {})
    return out


# -- text format -----------------------------------------------------------


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    """Parse "4,3,1"; "-" or "" is the empty diagram."""
    s = text.strip()
    if s in ("", "-"):
        return EMPTY
    parts = []
    pos = 0
    for chunk in s.split(","):
        stripped = chunk.strip()
        offset = pos + (len(chunk) - len(chunk.lstrip()))
        if not stripped.isdigit():
            bad = next((k for k, ch in enumerate(stripped) if not ch.isdigit()), 0)
            raise ParseError(s, offset + bad, "expected a positive integer part")
        value = int(stripped)
        if value == 0:
            raise ParseError(s, offset, "parts must be positive")
        if parts and value > parts[-1]:
            raise ParseError(s, offset, "parts must be weakly decreasing")
        parts.append(value)
        pos += len(chunk) + 1
    return Partition(parts)


def parse_box(text: str) -> Box:
    s = text.strip()
    pieces = s.split(",")
    if len(pieces) != 2:
        raise ParseError(s, 0, "box must be 'i,j'")
    pos = 0
    vals = []
    for piece in pieces:
        p = piece.strip()
        if not p.isdigit() or int(p) < 1:
            raise ParseError(s, pos, "box coordinates must be positive integers")
        vals.append(int(p))
        pos += len(piece) + 1
    return Box(*vals)
