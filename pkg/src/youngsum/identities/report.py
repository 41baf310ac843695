"""Convergence reports and their serialized forms."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from ..arith import format_rational


class LevelRow(NamedTuple):
    level: int
    mass: Fraction
    cumulative: Fraction
    residual: Fraction


CSV_COLUMNS = ("level", "level_mass_exact", "level_mass_float", "cumulative_float", "residual_float")


@dataclass(frozen=True)
class ConvergenceReport:
    identity: object
    rows: tuple[LevelRow, ...]
    max_level: int
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self):
        prev = Fraction(0)
        for row in self.rows:
            if row.mass < 0:
                raise ArithmeticError(f"negative mass at level {row.level}")
            if row.cumulative < prev or row.cumulative > 1:
                raise ArithmeticError(f"partial sum left [prev, 1] at level {row.level}")
            if row.residual != 1 - row.cumulative:
                raise ArithmeticError("residual bookkeeping broke")
            prev = row.cumulative

    @classmethod
    def from_masses(cls, identity, masses, max_level, wall_time=0.0):
        rows = []
        running = Fraction(0)
        for n in range(1, max_level + 1):
            m = masses.get(n, Fraction(0))
            running += m
            rows.append(LevelRow(n, m, running, 1 - running))
        return cls(identity, tuple(rows), max_level, wall_time)

    @property
    def partial_sum(self) -> Fraction:
        return self.rows[-1].cumulative if self.rows else Fraction(0)

    @property
    def residual(self) -> Fraction:
        return 1 - self.partial_sum

    def masses(self) -> dict[int, Fraction]:
        return {row.level: row.mass for row in self.rows}

    def is_monotone(self) -> bool:
        sums = [row.cumulative for row in self.rows]
        return all(a <= b for a, b in zip(sums, sums[1:])) and all(s <= 1 for s in sums)

    # Wall time is deliberately left out of the file formats so identical
    # runs produce identical bytes.

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(
                [row.level, format_rational(row.mass), repr(float(row.mass)), repr(float(row.cumulative)), repr(float(row.residual))]
            )
        return buf.getvalue()

    def to_structured(self) -> str:
        payload = {
            "identity": describe(self.identity),
            "max_level": self.max_level,
            "partial_sum": format_rational(self.partial_sum),
            "residual": format_rational(self.residual),
            "rows": [
                {
                    "level": row.level,
                    "level_mass": format_rational(row.mass),
                    "cumulative": format_rational(row.cumulative),
                    "residual": format_rational(row.residual),
                }
                for row in self.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_table(self) -> str:
        lines = [f"{describe(self.identity)}", f"{'n':>5}  {'mass':>14}  {'S_n':>18}  {'1 - S_n':>12}"]
        for row in self.rows:
            lines.append(
                f"{row.level:>5}  {float(row.mass):>14.6e}  {float(row.cumulative):>18.15f}  {float(row.residual):>12.4e}"
            )
        lines.append(f"residual after level {self.max_level}: {float(self.residual):.6e}")
        return "\n".join(lines) + "\n"


def describe(identity) -> dict:
    if hasattr(identity, "describe"):
        return identity.describe()
    return {"identity": repr(identity)}


def parse_structured(text: str) -> dict:
    """Read back a structured report, turning the rational strings into Fractions."""
    data = json.loads(text)
    for key in ("partial_sum", "residual"):
        data[key] = Fraction(data[key])
    for row in data["rows"]:
        for key in ("level_mass", "cumulative", "residual"):
            row[key] = Fraction(row[key])
    return data
