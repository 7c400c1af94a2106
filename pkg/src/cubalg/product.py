"""The d-dimensional transverse intersection product and crumbling.

The product of basis cells is the tensor of per-axis one-dimensional
products, weighted by the Koszul sign for the codimension grading with
the fixed axis order: sigma = (-1)**(number of pairs i>j where factor i
of the first cell and factor j of the second are both points).  Output
codimension is the sum of the input codimensions.
"""

from __future__ import annotations

from fractions import Fraction

from ._backend import kernel_for
from .cells import Cell, Factor, FactorKind, decode_cell, encode_cell, make_cell
from .chain import Chain
from .lattice import LatticeSpec


def product(a: Chain, b: Chain, backend: str | None = None) -> Chain:
    """Bilinear extension of the basis-cell product."""
    if a.lattice != b.lattice:
        raise ValueError(f"mismatched lattices: {a.lattice} vs {b.lattice}")
    lattice = a.lattice
    kernel = kernel_for(lattice.periods, backend)
    scale = 4 ** lattice.d
    out: dict[Cell, Fraction] = {}
    for ca, va in a.terms.items():
        code_a = encode_cell(ca, lattice)
        for cb, vb in b.terms.items():
            w = va * vb
            for code, num in kernel.mult(code_a, encode_cell(cb, lattice)):
                cell = decode_cell(code, lattice)
                out[cell] = out.get(cell, Fraction(0)) + w * Fraction(num, scale)
    return Chain(lattice, out)


def koszul_sign(a: Cell, b: Cell) -> int:
    """Sign for the tensor product of the per-axis factors of a and b."""
    inversions = 0
    pts_b = 0
    for fa, fb in zip(a.factors, b.factors):
        if fa.kind is FactorKind.POINT:
            inversions += pts_b
        if fb.kind is FactorKind.POINT:
            pts_b += 1
    return -1 if inversions % 2 else 1


def cells_transverse(a: Cell, b: Cell, lattice: LatticeSpec) -> bool:
    """Closed supports intersect and the direction sets span every axis.

    Stick and infinitesimal factors each contribute their axis as a
    direction; two point factors on the same axis never span it.
    """
    kernel = kernel_for(lattice.periods)
    return kernel.transverse(encode_cell(a, lattice), encode_cell(b, lattice))


def crumble(chain: Chain, k: int) -> Chain:
    """Refinement chain map onto the k-fold finer lattice (k odd).

    Per axis: points and infinitesimal sticks map to coordinate k*a, unit
    sticks to the sum of their k fine sticks.  All factor images have the
    codimension of their source, so no signs arise; the map commutes with
    both the boundary and the product.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"refinement factor must be odd, got {k}")
    lattice = chain.lattice
    fine = lattice.refined(k)
    out: dict[Cell, Fraction] = {}
    for cell, coef in chain.terms.items():
        images: list[Cell] = [Cell(())]
        for f in cell.factors:
            base = f.coord * k
            if f.kind is FactorKind.STICK:
                choices = [Factor(FactorKind.STICK, base + j) for j in range(k)]
            else:
                choices = [Factor(f.kind, base)]
            images = [Cell(c.factors + (nf,)) for c in images for nf in choices]
        for img in images:
            cell_f = make_cell(img.factors, fine)
            out[cell_f] = out.get(cell_f, Fraction(0)) + coef
    return Chain(fine, out)
