from fractions import Fraction

import pytest

from cubalg import Chain, LatticeSpec, parse_chain


@pytest.fixture
def L1():
    return LatticeSpec((7,))


@pytest.fixture
def L5():
    return LatticeSpec((5,))


@pytest.fixture
def L3():
    return LatticeSpec((5, 5, 5))


@pytest.fixture
def ch():
    """Shorthand: ch(text, lattice) parses a chain."""

    def build(text: str, lattice: LatticeSpec) -> Chain:
        return parse_chain(text, lattice)

    return build


def frac(num, den=1):
    return Fraction(num, den)
