"""Cuboids: axis-aligned products of lattice intervals and points.

These are the geometric inputs for the general-position test and the
independent intersection oracle.  An axis entry is either an integer
coordinate (a point) or a pair (a, b) with a < b <= a + period (an
interval of b - a lattice units; the closure embeds in the circle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iterproduct

from .cells import Cell, Factor, FactorKind, make_cell
from .chain import Chain
from .lattice import LatticeSpec

AxisEntry = int | tuple[int, int]


@dataclass(frozen=True)
class Cuboid:
    axes: tuple[AxisEntry, ...]

    @property
    def dimension(self) -> int:
        return sum(1 for e in self.axes if isinstance(e, tuple))

    def __str__(self) -> str:
        parts = [f"[{e[0]},{e[1]}]" if isinstance(e, tuple) else str(e) for e in self.axes]
        return "{" + ",".join(parts) + "}"


def _check(q: Cuboid, lattice: LatticeSpec):
    if len(q.axes) != lattice.d:
        raise ValueError(f"cuboid has {len(q.axes)} axes, lattice has {lattice.d}")
    for entry, n in zip(q.axes, lattice.periods):
        if isinstance(entry, tuple):
            a, b = entry
            if b <= a:
                raise ValueError(f"interval {entry} must have positive length")
            if b - a > n:
                raise ValueError(f"interval {entry} is longer than the period {n}")


def _axis_support(entry: AxisEntry, n: int) -> frozenset[int]:
    if isinstance(entry, tuple):
        a, b = entry
        return frozenset((a + j) % n for j in range(b - a + 1))
    return frozenset((entry % n,))


def supports_intersect(q1: Cuboid, q2: Cuboid, lattice: LatticeSpec) -> bool:
    _check(q1, lattice)
    _check(q2, lattice)
    return all(
        _axis_support(e1, n) & _axis_support(e2, n)
        for e1, e2, n in zip(q1.axes, q2.axes, lattice.periods)
    )


def is_transverse(q1: Cuboid, q2: Cuboid, lattice: LatticeSpec) -> bool:
    """Closed supports meet and the tangent directions span every axis."""
    if not supports_intersect(q1, q2, lattice):
        return False
    if q1.dimension + q2.dimension < lattice.d:
        return False
    return all(
        isinstance(e1, tuple) or isinstance(e2, tuple)
        for e1, e2 in zip(q1.axes, q2.axes)
    )


def generalised_faces(q: Cuboid) -> list[Cuboid]:
    """All cuboids obtained by replacing one or more intervals by an endpoint."""
    options: list[list[AxisEntry]] = []
    for entry in q.axes:
        if isinstance(entry, tuple):
            options.append([entry, entry[0], entry[1]])
        else:
            options.append([entry])
    faces = []
    for combo in _iterproduct(*options):
        cand = Cuboid(tuple(combo))
        if cand != q:
            faces.append(cand)
    return faces


def in_general_position(q1: Cuboid, q2: Cuboid, lattice: LatticeSpec) -> bool:
    """Transverse, and every pair of generalised faces is disjoint or transverse."""
    if not is_transverse(q1, q2, lattice):
        return False
    fam1 = [q1] + generalised_faces(q1)
    fam2 = [q2] + generalised_faces(q2)
    for f1 in fam1:
        for f2 in fam2:
            if not supports_intersect(f1, f2, lattice):
                continue
            if not is_transverse(f1, f2, lattice):
                return False
    return True


def cuboid_to_chain(q: Cuboid, lattice: LatticeSpec) -> Chain:
    """Decompose into unit basis cells, all with matching orientation."""
    _check(q, lattice)
    options: list[list[Factor]] = []
    for entry, n in zip(q.axes, lattice.periods):
        if isinstance(entry, tuple):
            a, b = entry
            options.append([Factor(FactorKind.STICK, (a + j) % n) for j in range(b - a)])
        else:
            options.append([Factor(FactorKind.POINT, entry % n)])
    terms: dict[Cell, Fraction] = {}
    for combo in _iterproduct(*options):
        cell = make_cell(combo, lattice)
        terms[cell] = terms.get(cell, Fraction(0)) + 1
    return Chain(lattice, terms)


def _axis_intersection(e1: AxisEntry, e2: AxisEntry, n: int) -> AxisEntry | None:
    """Set intersection of two axis entries, reassembled as a single entry.

    Returns None when empty.  Raises if the intersection is disconnected
    (possible only for torus-wrapping arcs, which general position rules
    out at the sizes the oracle is used for).
    """
    s = _axis_support(e1, n) & _axis_support(e2, n)
    if not s:
        return None
    if len(s) == 1:
        return next(iter(s))
    if len(s) > n:
        raise ValueError("unreachable")
    if len(s) == n:
        raise ValueError("intersection covers a whole axis; not a cuboid entry")
    starts = [x for x in s if (x - 1) % n not in s]
    if len(starts) != 1:
        raise ValueError("axis intersection is disconnected")
    start = starts[0]
    return (start, start + len(s) - 1)


def geometric_intersection(q1: Cuboid, q2: Cuboid, lattice: LatticeSpec) -> Chain:
    """Signed geometric intersection of closed cuboids in general position.

    Independent of the algebraic product: intersects supports axis by
    axis and decomposes the result, with the Koszul sign read off the
    point patterns of the two cuboids.
    """
    if not in_general_position(q1, q2, lattice):
        raise ValueError("cuboids are not in general position")
    entries: list[AxisEntry] = []
    for e1, e2, n in zip(q1.axes, q2.axes, lattice.periods):
        e = _axis_intersection(e1, e2, n)
        if e is None:
            return Chain.zero(lattice)
        entries.append(e)
    sign = 1
    pts2 = 0
    for e1, e2 in zip(q1.axes, q2.axes):
        if not isinstance(e1, tuple):
            sign = -sign if pts2 % 2 else sign
        if not isinstance(e2, tuple):
            pts2 += 1
    return sign * cuboid_to_chain(Cuboid(tuple(entries)), lattice)
