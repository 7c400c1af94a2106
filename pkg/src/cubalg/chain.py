"""Exact sparse chains over the enlarged cubical complex.

Coefficients are arbitrary-precision rationals (fractions.Fraction); no
floating point is used anywhere.  Chains are immutable: every operation
returns a new chain, so all values are safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from ._backend import kernel_for
from .cells import Cell, FactorKind, decode_cell, encode_cell, make_cell
from .lattice import LatticeSpec

Rational = Fraction | int


class Chain:
    """Finite formal sum of basis cells with exact rational coefficients."""

    __slots__ = ("lattice", "_terms")

    def __init__(self, lattice: LatticeSpec, terms: Mapping[Cell, Rational] | None = None):
        self.lattice = lattice
        clean: dict[Cell, Fraction] = {}
        if terms:
            for cell, coef in terms.items():
                if isinstance(coef, float):
                    raise TypeError("coefficients must be exact rationals, not floats")
                c = Fraction(coef)
                if c:
                    clean[cell] = c
        self._terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, lattice: LatticeSpec) -> "Chain":
        return cls(lattice)

    @classmethod
    def from_cell(cls, cell: Cell, lattice: LatticeSpec, coef: Rational = 1) -> "Chain":
        return cls(lattice, {make_cell(cell.factors, lattice): coef})

    # -- mapping access -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Cell, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, cell: Cell) -> Fraction:
        return self._terms.get(cell, Fraction(0))

    def cells(self) -> Iterable[Cell]:
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- grading ---------------------------------------------------------------

    def codimension(self) -> int | None:
        """Common codimension of all cells, or None if mixed or zero."""
        codims = {cell.codimension for cell in self._terms}
        return codims.pop() if len(codims) == 1 else None

    def dimension(self) -> int | None:
        dims = {cell.dimension for cell in self._terms}
        return dims.pop() if len(dims) == 1 else None

    def is_ideal_free(self) -> bool:
        return not any(cell.is_ideal for cell in self._terms)

    # -- arithmetic -------------------------------------------------------------

    def _check_same_lattice(self, other: "Chain"):
        if self.lattice != other.lattice:
            raise ValueError(
                f"mismatched lattices: {self.lattice} vs {other.lattice}"
            )

    def __add__(self, other: "Chain") -> "Chain":
        self._check_same_lattice(other)
        out = dict(self._terms)
        for cell, coef in other._terms.items():
            out[cell] = out.get(cell, Fraction(0)) + coef
        return Chain(self.lattice, out)

    def __sub__(self, other: "Chain") -> "Chain":
        self._check_same_lattice(other)
        out = dict(self._terms)
        for cell, coef in other._terms.items():
            out[cell] = out.get(cell, Fraction(0)) - coef
        return Chain(self.lattice, out)

    def __neg__(self) -> "Chain":
        return Chain(self.lattice, {c: -v for c, v in self._terms.items()})

    def __mul__(self, scalar: Rational) -> "Chain":
        if isinstance(scalar, float):
            raise TypeError("coefficients must be exact rationals, not floats")
        s = Fraction(scalar)
        return Chain(self.lattice, {c: v * s for c, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.lattice == other.lattice and self._terms == other._terms

    def __hash__(self):
        raise TypeError("chains are not hashable")

    def __repr__(self) -> str:
        from .grammar import format_chain

        return f"Chain({self.lattice}, {format_chain(self)!r})"


def boundary(chain: Chain) -> Chain:
    """Boundary operator: stick factors split into endpoint differences.

    On a basis cell each stick axis i contributes with sign
    (-1)**(number of point factors before axis i); points and
    infinitesimal sticks have zero boundary.  Output codimension is the
    input codimension plus one.
    """
    kernel = kernel_for(chain.lattice.periods)
    lattice = chain.lattice
    out: dict[Cell, Fraction] = {}
    for cell, coef in chain.terms.items():
        for code, sign in kernel.boundary(encode_cell(cell, lattice)):
            dcell = decode_cell(code, lattice)
            out[dcell] = out.get(dcell, Fraction(0)) + sign * coef
    return Chain(lattice, out)


def augment(chain: Chain) -> Fraction:
    """Sum of coefficients over cells whose factors are all points."""
    total = Fraction(0)
    for cell, coef in chain.terms.items():
        if all(f.kind is FactorKind.POINT for f in cell.factors):
            total += coef
    return total
