"""Grey (interval) numbers and interval-linear arithmetic.

A grey number is a closed interval [lower, upper] standing for a quantity
whose value is known only up to bounds.  All operations here are pure and
the types immutable; bounds may be ints, floats or ``fractions.Fraction``
and arithmetic preserves the input number types, so exact rational
pipelines stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import (
    DegenerateColumn,
    InvariantViolation,
    LengthMismatch,
    PositionOutOfRange,
)

Real = int | float  # plus anything Real-like (fractions.Fraction works throughout)

Orientation = Literal["benefit", "cost"]


@dataclass(frozen=True)
class GreyNumber:
    """Closed interval [lower, upper] with unknown internal distribution."""

    lower: Real
    upper: Real

    def __post_init__(self) -> None:
        try:
            ordered = self.lower <= self.upper
        except TypeError as exc:
            raise InvariantViolation(f"grey bounds must be real numbers: {self!r}") from exc
        if not ordered:
            raise InvariantViolation(f"grey lower bound exceeds upper: [{self.lower}, {self.upper}]")
        if not (math.isfinite(float(self.lower)) and math.isfinite(float(self.upper))):
            raise InvariantViolation(f"grey bounds must be finite: [{self.lower}, {self.upper}]")

    @classmethod
    def of(cls, value: Real) -> "GreyNumber":
        """Degenerate (white) grey number."""
        return cls(value, value)

    @classmethod
    def parse(cls, pair: Sequence[Real]) -> "GreyNumber":
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvariantViolation(f"grey number must be a [lower, upper] pair, got {pair!r}")
        return cls(pair[0], pair[1])

    @property
    def width(self) -> Real:
        return self.upper - self.lower

    @property
    def is_white(self) -> bool:
        return self.lower == self.upper

    def scaled(self, w: Real) -> "GreyNumber":
        """Interval scaling: a negative factor swaps the bounds."""
        if w < 0:
            return GreyNumber(w * self.upper, w * self.lower)
        return GreyNumber(w * self.lower, w * self.upper)

    def __add__(self, other: "GreyNumber") -> "GreyNumber":
        return GreyNumber(self.lower + other.lower, self.upper + other.upper)

    def __neg__(self) -> "GreyNumber":
        return GreyNumber(-self.upper, -self.lower)

    def as_pair(self) -> list[float]:
        return [float(self.lower), float(self.upper)]

    def __repr__(self) -> str:
        return f"[{self.lower}, {self.upper}]"


@dataclass(frozen=True)
class GreyIntervalMatrix:
    """Rectangular matrix of grey numbers (objectives x sample points)."""

    entries: tuple[tuple[GreyNumber, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise InvariantViolation("ragged grey matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[GreyNumber]]) -> "GreyIntervalMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[GreyNumber, ...]:
        return self.entries[i]


def whiten(g: GreyNumber, t: Real) -> Real:
    """Positioned white value t*upper + (1-t)*lower, t in [0, 1]."""
    if not (0 <= t <= 1):
        raise PositionOutOfRange(f"whitening position {t} outside [0, 1]")
    return t * g.upper + (1 - t) * g.lower


def lin_comb(weights: Sequence[Real], greys: Sequence[GreyNumber]) -> GreyNumber:
    """Exact interval linear combination sum_i w_i * g_i.

    Positive weights scale both bounds, negative weights swap them, and the
    partial intervals accumulate bound-wise.
    """
    if len(weights) != len(greys):
        raise LengthMismatch(f"{len(weights)} weights vs {len(greys)} grey numbers")
    lower = 0
    upper = 0
    for w, g in zip(weights, greys):
        scaled = g.scaled(w)
        lower = lower + scaled.lower
        upper = upper + scaled.upper
    return GreyNumber(lower, upper)


def grey_distance(r: GreyNumber, s: GreyNumber) -> Real:
    """L1 distance on bound pairs: |r.lower - s.lower| + |r.upper - s.upper|."""
    return abs(r.lower - s.lower) + abs(r.upper - s.upper)


def normalize_intervals(
    intervals: Sequence[GreyNumber], kind: Orientation
) -> list[GreyNumber]:
    """Extreme-difference normalization of an interval family into [0, 1].

    With U = max of uppers, L = min of lowers and R = U - L:
    benefit orientation maps g to [(g.lower-L)/R, (g.upper-L)/R] and cost
    orientation to [(U-g.upper)/R, (U-g.lower)/R].
    """
    if kind not in ("benefit", "cost"):
        raise InvariantViolation(f"unknown orientation {kind!r}")
    if len(intervals) < 2:
        raise DegenerateColumn("normalization needs at least two intervals")
    top = max(g.upper for g in intervals)
    bottom = min(g.lower for g in intervals)
    spread = top - bottom
    if spread == 0:
        raise DegenerateColumn("all intervals are the same point; zero spread")
    out = []
    for g in intervals:
        if kind == "benefit":
            out.append(GreyNumber((g.lower - bottom) / spread, (g.upper - bottom) / spread))
        else:
            out.append(GreyNumber((top - g.upper) / spread, (top - g.lower) / spread))
    return out
