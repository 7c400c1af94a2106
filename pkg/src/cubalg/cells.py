"""Basis cells of the enlarged cubical complex.

A cell is a tuple of one factor per axis.  A factor is a point, a unit
stick, or an infinitesimal stick sitting at a single lattice coordinate.
The grading used throughout is the codimension: a point factor has
codimension 1, stick and infinitesimal factors have codimension 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable

from .lattice import LatticeSpec


class FactorKind(IntEnum):
    POINT = 0
    STICK = 1
    INF_STICK = 2


KIND_CHARS = {FactorKind.POINT: "p", FactorKind.STICK: "s", FactorKind.INF_STICK: "i"}
CHAR_KINDS = {c: k for k, c in KIND_CHARS.items()}


@dataclass(frozen=True)
class Factor:
    """One axis of a basis cell: a point, unit stick, or infinitesimal stick."""

    kind: FactorKind
    coord: int

    @property
    def degree(self) -> int:
        """Grading dimension: 0 for points, 1 for sticks and infinitesimals."""
        return 0 if self.kind is FactorKind.POINT else 1

    @property
    def codim(self) -> int:
        return 1 if self.kind is FactorKind.POINT else 0

    def support(self, period: int) -> tuple[int, ...]:
        """Closed support as lattice coordinates modulo the period."""
        if self.kind is FactorKind.STICK:
            return (self.coord, (self.coord + 1) % period)
        return (self.coord,)

    def __str__(self) -> str:
        return f"{KIND_CHARS[self.kind]}@{self.coord}"


def point(coord: int) -> Factor:
    return Factor(FactorKind.POINT, coord)


def stick(coord: int) -> Factor:
    return Factor(FactorKind.STICK, coord)


def inf_stick(coord: int) -> Factor:
    return Factor(FactorKind.INF_STICK, coord)


@dataclass(frozen=True)
class Cell:
    """A basis cell: one factor per axis, coordinates already reduced."""

    factors: tuple[Factor, ...]

    @property
    def dimension(self) -> int:
        return sum(f.degree for f in self.factors)

    @property
    def codimension(self) -> int:
        return sum(f.codim for f in self.factors)

    @property
    def is_ideal(self) -> bool:
        """True when at least one factor is an infinitesimal stick."""
        return any(f.kind is FactorKind.INF_STICK for f in self.factors)

    @property
    def kinds(self) -> tuple[FactorKind, ...]:
        return tuple(f.kind for f in self.factors)

    def support(self, lattice: LatticeSpec) -> tuple[tuple[int, ...], ...]:
        """Per-axis closed supports."""
        return tuple(f.support(n) for f, n in zip(self.factors, lattice.periods))

    def sort_key(self):
        return tuple((f.coord, int(f.kind)) for f in self.factors)

    def __str__(self) -> str:
        return "[" + ",".join(str(f) for f in self.factors) + "]"


def make_cell(factors: Iterable[Factor], lattice: LatticeSpec) -> Cell:
    """Build a canonical cell: checks arity, reduces coordinates mod periods."""
    fs = tuple(factors)
    if len(fs) != lattice.d:
        raise ValueError(f"expected {lattice.d} factors, got {len(fs)}")
    reduced = tuple(
        Factor(f.kind, lattice.reduce(i, f.coord)) for i, f in enumerate(fs)
    )
    return Cell(reduced)


# ---------------------------------------------------------------------------
# Integer encoding shared with the computational kernels.
#
# Per axis, a factor is encoded as coord*3 + kind; a cell is the mixed-radix
# combination of its factor codes, axis 0 least significant.


def factor_code(f: Factor) -> int:
    return f.coord * 3 + int(f.kind)


def encode_cell(cell: Cell, lattice: LatticeSpec) -> int:
    code = 0
    place = 1
    for f, n in zip(cell.factors, lattice.periods):
        code += (f.coord * 3 + int(f.kind)) * place
        place *= 3 * n
    return code


def decode_cell(code: int, lattice: LatticeSpec) -> Cell:
    factors = []
    for n in lattice.periods:
        code, fc = divmod(code, 3 * n)
        coord, kind = divmod(fc, 3)
        factors.append(Factor(FactorKind(kind), coord))
    return Cell(tuple(factors))
