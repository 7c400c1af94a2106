import pytest

from cubalg import Factor, FactorKind, LatticeSpec, make_cell, point, stick, inf_stick
from cubalg.cells import decode_cell, encode_cell


def test_lattice_validation():
    LatticeSpec((3,))
    LatticeSpec((5, 5, 5))
    with pytest.raises(ValueError):
        LatticeSpec((2, 5))
    with pytest.raises(ValueError):
        LatticeSpec(())
    with pytest.raises(ValueError):
        LatticeSpec((5,) * 7)
    with pytest.raises(TypeError):
        LatticeSpec((5.0, 5))


def test_factor_grading():
    assert point(0).degree == 0 and point(0).codim == 1
    assert stick(0).degree == 1 and stick(0).codim == 0
    assert inf_stick(0).degree == 1 and inf_stick(0).codim == 0
    assert stick(2).support(5) == (2, 3)
    assert stick(4).support(5) == (4, 0)  # wraps
    assert inf_stick(3).support(5) == (3,)


def test_make_cell_1d():
    lat = LatticeSpec((5,))
    cell = make_cell([stick(0)], lat)
    assert cell.dimension == 1 and cell.codimension == 0
    assert not cell.is_ideal


def test_make_cell_3d_square():
    lat = LatticeSpec((5, 5, 5))
    cell = make_cell([stick(0), point(2), stick(3)], lat)
    assert cell.dimension == 2
    assert cell.codimension == 1  # one point factor


def test_make_cell_ideal_stick():
    lat = LatticeSpec((5, 5, 5))
    cell = make_cell([inf_stick(1), point(0), point(0)], lat)
    assert cell.dimension == 1
    assert cell.codimension == 2
    assert cell.is_ideal


def test_grading_relation():
    # dimension + codimension = d for cells without infinitesimals;
    # grading-dimension + codimension = d always
    lat = LatticeSpec((5, 5, 5))
    kinds = [FactorKind.POINT, FactorKind.STICK, FactorKind.INF_STICK]
    for k1 in kinds:
        for k2 in kinds:
            for k3 in kinds:
                cell = make_cell([Factor(k1, 0), Factor(k2, 1), Factor(k3, 2)], lat)
                assert cell.dimension + cell.codimension == 3
                if not cell.is_ideal:
                    assert sum(1 for f in cell.factors if f.kind is FactorKind.STICK) == cell.dimension


def test_exactly_six_ideal_kinds_in_3d():
    # classifying by the multiset of factor kinds, an infinitesimal factor
    # can combine with the rest in exactly six ways in three dimensions
    from itertools import product

    multisets = set()
    for kinds in product(list(FactorKind), repeat=3):
        if FactorKind.INF_STICK in kinds:
            multisets.add(tuple(sorted(k.value for k in kinds)))
    assert len(multisets) == 6


def test_coordinate_reduction_and_arity():
    lat = LatticeSpec((5, 5, 5))
    cell = make_cell([stick(-1), point(7), point(5)], lat)
    assert [f.coord for f in cell.factors] == [4, 2, 0]
    with pytest.raises(ValueError):
        make_cell([stick(0)], lat)
    with pytest.raises(TypeError):
        make_cell([Factor(FactorKind.POINT, "x")], LatticeSpec((5,)))


def test_encode_decode_roundtrip():
    lat = LatticeSpec((5, 3, 4))
    from itertools import product

    for kinds in product(list(FactorKind), repeat=3):
        for coords in product(range(5), range(3), range(4)):
            cell = make_cell([Factor(k, c) for k, c in zip(kinds, coords)], lat)
            assert decode_cell(encode_cell(cell, lat), lat) == cell
