"""2h cells, star duality, and the augmentation pairing in three dimensions."""

from fractions import Fraction
from itertools import product as iterproduct

import pytest

from cubalg import (
    Chain,
    LatticeSpec,
    TwoHCell,
    augment,
    boundary,
    expand,
    pairing,
    parse_chain,
    product,
    star,
    two_h_basis,
)
from cubalg.pairing import c_basis, pairing_matrix
from cubalg.twoh import abstract_boundary


@pytest.fixture
def L333():
    return LatticeSpec((3, 3, 3))


def test_basis_counts(L333):
    assert len(two_h_basis(0, L333)) == 27
    assert len(two_h_basis(1, L333)) == 81
    assert len(two_h_basis(2, L333)) == 81
    assert len(two_h_basis(3, L333)) == 27


def test_expand_edge(L333):
    cell = TwoHCell((1, 1, 1), frozenset({0}))
    assert expand(cell, L333) == parse_chain("[s@0,p@1,p@1] + [s@1,p@1,p@1]", L333)


def test_expand_square_and_cube_sizes(L333):
    assert len(expand(TwoHCell((1, 1, 1), frozenset({0, 1})), L333)) == 4
    assert len(expand(TwoHCell((1, 1, 1), frozenset({0, 1, 2})), L333)) == 8


def test_star_examples(L333):
    edge = TwoHCell((1, 2, 0), frozenset({0}))
    assert star(edge, L333) == TwoHCell((1, 2, 0), frozenset({1, 2}))
    vertex = TwoHCell((0, 0, 0), frozenset())
    assert star(vertex, L333) == TwoHCell((0, 0, 0), frozenset({0, 1, 2}))


def test_star_involution_and_bijection(L333):
    for p in range(4):
        basis = two_h_basis(p, L333)
        images = [star(c, L333) for c in basis]
        assert all(star(i, L333) == c for c, i in zip(basis, images))
        assert sorted(images, key=TwoHCell.sort_key) == two_h_basis(3 - p, L333)


def test_expand_intertwines_boundaries(L333):
    # the facet boundary of a 2h cell expands to the h-complex boundary
    for p in range(4):
        for cell in two_h_basis(p, L333)[:12]:
            via_h = boundary(expand(cell, L333))
            via_2h = Chain.zero(L333)
            for facet, sign in abstract_boundary(cell, L333):
                via_2h = via_2h + sign * expand(facet, L333)
            assert via_h == via_2h


def test_pairing_matrix_graded_symmetry(L333):
    # <a,b> = (-1)**(codim a * codim b) <b,a>; in three dimensions the
    # codimension product (3-p)*p is always even, so transposes agree
    m1 = pairing_matrix(1, L333)
    m2 = pairing_matrix(2, L333)
    rows1 = {cell: i for i, cell in enumerate(m1.rows)}
    cols1 = {cell: i for i, cell in enumerate(m1.cols)}
    for r, cell_r in list(enumerate(m2.rows))[::17]:
        for c, cell_c in list(enumerate(m2.cols))[::13]:
            sign = (-1) ** (cell_r.codimension * cell_c.codimension)
            assert m2.entries[r][c] == sign * m1.entries[rows1[cell_c]][cols1[cell_r]]
            assert sign == 1


def test_frobenius_associativity_window(L3):
    from cubalg.cells import decode_cell
    from cubalg.verify import _window_codes

    codes = _window_codes(L3, 2)
    chains = {c: Chain.from_cell(decode_cell(c, L3), L3) for c in codes}
    picked = codes[::23]
    for a in picked:
        for b in codes[::17]:
            ab = product(chains[a], chains[b])
            for c in codes[::29]:
                bc = product(chains[b], chains[c])
                assert augment(product(ab, chains[c])) == augment(product(chains[a], bc))


def test_nondegenerate_iff_all_periods_odd():
    for periods in iterproduct((3, 4), (3, 4), (3, 4)):
        lattice = LatticeSpec(periods)
        expect = all(n % 2 for n in periods)
        for p in (0, 1):
            mat = pairing_matrix(p, lattice)
            assert mat.nondegenerate == expect, (periods, p)
            # the rank factors through the one-dimensional ranks per axis
            from math import comb

            rank_1d = 1
            for n in periods:
                rank_1d *= n if n % 2 else n - 1
            assert mat.rank == comb(3, p) * rank_1d


def test_pairing_values_3d(L333):
    # vertex against the cube having it as a corner: (1/2)**3
    a = Chain.from_cell(c_basis(0, L333)[0], L333)
    cube = parse_chain("[s@0,s@0,s@0]", L333)
    assert pairing(a, cube) == Fraction(1, 8)
