"""Periodic lattice geometry: dimension count and per-axis periods.

The lattice spacing is normalized to 1, so coordinates are integers
modulo the period of their axis.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_DIMENSION = 6


@dataclass(frozen=True)
class LatticeSpec:
    """A periodic cubical lattice with one period per axis.

    Periods must be at least 3 so that a unit stick and its two endpoints
    stay distinct under wraparound.
    """

    periods: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.periods, tuple):
            object.__setattr__(self, "periods", tuple(self.periods))
        if not (1 <= len(self.periods) <= MAX_DIMENSION):
            raise ValueError(
                f"dimension must be between 1 and {MAX_DIMENSION}, got {len(self.periods)}"
            )
        for n in self.periods:
            if not isinstance(n, int):
                raise TypeError(f"period {n!r} is not an integer")
            if n < 3:
                raise ValueError(f"every period must be >= 3, got {n}")

    @property
    def d(self) -> int:
        return len(self.periods)

    def reduce(self, axis: int, coord: int) -> int:
        """Reduce a coordinate modulo the period of the given axis."""
        if not isinstance(coord, int):
            raise TypeError(f"coordinate {coord!r} is not an integer")
        return coord % self.periods[axis]

    def refined(self, k: int) -> "LatticeSpec":
        """The lattice with every axis subdivided k times (spacing 1/k, rescaled)."""
        return LatticeSpec(tuple(k * n for n in self.periods))

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.periods)
