"""Rational Betti numbers of the h-complex and the 2h subcomplex.

Ranks are computed over exact rationals; no torsion is attempted.  The
2h subcomplex is taken literally as the span of the expanded 2h cells
inside the h-chain spaces ("span" variant).  For even periods those
expansions become linearly dependent, so the span can differ from the
free module on 2h cells; the "free" variant computes the latter as a
diagnostic.
"""

from __future__ import annotations

from . import linalg
from .chain import Chain, boundary
from .lattice import LatticeSpec
from .pairing import c_basis
from .twoh import TwoHCell, abstract_boundary, expand, two_h_basis


def _boundary_matrix(p: int, lattice: LatticeSpec) -> list[list[int]]:
    """Matrix of the h-complex boundary C_p -> C_{p-1} (integer entries)."""
    domain = c_basis(p, lattice)
    codomain = c_basis(p - 1, lattice)
    index = {cell: i for i, cell in enumerate(codomain)}
    cols = []
    for cell in domain:
        col = [0] * len(codomain)
        for bcell, coef in boundary(Chain.from_cell(cell, lattice)).terms.items():
            col[index[bcell]] = int(coef)
        cols.append(col)
    # rows: codomain cells; cols: domain cells
    return [[cols[j][i] for j in range(len(domain))] for i in range(len(codomain))]


def betti_full(lattice: LatticeSpec) -> tuple[int, ...]:
    """Betti numbers of the full h-complex (the d-torus)."""
    d = lattice.d
    dims = [len(c_basis(p, lattice)) for p in range(d + 1)]
    ranks = [0] * (d + 2)
    for p in range(1, d + 1):
        ranks[p] = linalg.rank(_boundary_matrix(p, lattice))
    return tuple(dims[p] - ranks[p] - ranks[p + 1] for p in range(d + 1))


def _expansion_matrix(p: int, lattice: LatticeSpec) -> tuple[list[list[int]], list[TwoHCell]]:
    """Columns: expanded 2h p-cells written in the h-cell basis."""
    basis = two_h_basis(p, lattice)
    h_cells = c_basis(p, lattice)
    index = {cell: i for i, cell in enumerate(h_cells)}
    mat = [[0] * len(basis) for _ in h_cells]
    for j, cell in enumerate(basis):
        for hcell, coef in expand(cell, lattice).terms.items():
            mat[index[hcell]][j] = int(coef)
    return mat, basis


def betti_two_h_span(lattice: LatticeSpec) -> tuple[int, ...]:
    """Betti numbers of the span of expanded 2h cells inside the h-complex.

    b_p = dim(span_p) - rank(boundary on span_p) - rank(boundary on span_{p+1});
    the boundary of a 2h cell is again a sum of 2h cells, so this is a
    genuine subcomplex.
    """
    if lattice.d != 3:
        raise ValueError("the 2h subcomplex is defined for three dimensions")
    span_dim = []
    bdry_rank = [0] * 5
    for p in range(4):
        m, _ = _expansion_matrix(p, lattice)
        span_dim.append(linalg.rank(m))
        if p >= 1:
            d_p = _boundary_matrix(p, lattice)
            bdry_rank[p] = linalg.rank(linalg.mat_mul(d_p, m))
    return tuple(span_dim[p] - bdry_rank[p] - bdry_rank[p + 1] for p in range(4))


def betti_two_h_free(lattice: LatticeSpec) -> tuple[int, ...]:
    """Betti numbers of the free module on 2h cells with the facet boundary.

    Diagnostic variant: for odd periods it agrees with the span variant;
    for even periods the two can differ because expansions of distinct 2h
    cells become linearly dependent in the h-complex.
    """
    if lattice.d != 3:
        raise ValueError("the 2h subcomplex is defined for three dimensions")
    dims = []
    ranks = [0] * 5
    for p in range(4):
        basis = two_h_basis(p, lattice)
        dims.append(len(basis))
        if p >= 1:
            codomain = two_h_basis(p - 1, lattice)
            index = {c: i for i, c in enumerate(codomain)}
            mat = [[0] * len(basis) for _ in codomain]
            for j, cell in enumerate(basis):
                for fc, coef in abstract_boundary(cell, lattice):
                    mat[index[fc]][j] += coef
            ranks[p] = linalg.rank(mat)
    return tuple(dims[p] - ranks[p] - ranks[p + 1] for p in range(4))


def betti(complex_kind: str, lattice: LatticeSpec) -> tuple[int, ...]:
    """Betti numbers for 'h' (full complex) or '2h' (span subcomplex)."""
    if complex_kind == "h":
        return betti_full(lattice)
    if complex_kind == "2h":
        return betti_two_h_span(lattice)
    raise ValueError(f"unknown complex kind {complex_kind!r} (expected 'h' or '2h')")
