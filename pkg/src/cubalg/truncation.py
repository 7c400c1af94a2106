"""Truncation subalgebras generated by low-dimensional non-ideal cells.

For dimension n and truncation level m, the generators are all non-ideal
basis cells of dimension <= m.  Closing them under the product yields
ideal elements only in dimensions <= 2m-n, and the boundary product rule
survives on the generated subalgebra exactly when 3m <= 2n, making
m = floor(2n/3) the maximal safe truncation.

Membership is tracked by the per-axis kind pattern of a cell: the product
of basis cells factors axis by axis, and lattice translations act freely,
so the kind tuple is a complete translation-invariant classification.
"""

from __future__ import annotations

from itertools import combinations, product as _iterproduct

from .cells import Cell, Factor, FactorKind

P, S, I = FactorKind.POINT, FactorKind.STICK, FactorKind.INF_STICK

# Per-axis output kinds of the one-dimensional product; None marks the
# always-zero point*point case.
_AXIS_OUTPUTS: dict[tuple[FactorKind, FactorKind], frozenset[FactorKind] | None] = {
    (P, P): None,
    (P, S): frozenset({P}),
    (P, I): frozenset({P}),
    (S, S): frozenset({S, I}),
    (S, I): frozenset({I}),
    (I, I): frozenset({I}),
}


def _axis_outputs(ka: FactorKind, kb: FactorKind):
    return _AXIS_OUTPUTS[(ka, kb) if ka <= kb else (kb, ka)]


KindTuple = tuple[FactorKind, ...]


def generator_kinds(n: int, m: int) -> frozenset[KindTuple]:
    """Kind patterns of the non-ideal generators of dimension <= m."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    out = set()
    for dim in range(m + 1):
        for stick_axes in combinations(range(n), dim):
            out.add(tuple(S if i in stick_axes else P for i in range(n)))
    return frozenset(out)


def kind_closure(n: int, m: int) -> frozenset[KindTuple]:
    """Kind patterns spanned by the subalgebra generated by C_{<=m}.

    Computed by closing the generator patterns under the per-axis output
    table until a fixed point; equivalent to closing actual window cells
    under the product and extending by translation invariance.
    """
    closed: set[KindTuple] = set(generator_kinds(n, m))
    frontier = set(closed)
    while frontier:
        new: set[KindTuple] = set()
        pairs = [(a, b) for a in frontier for b in closed] + [
            (a, b) for a in closed - frontier for b in frontier
        ]
        for ta, tb in pairs:
            per_axis = [_axis_outputs(ka, kb) for ka, kb in zip(ta, tb)]
            if any(o is None for o in per_axis):
                continue  # a point*point axis kills the product
            for combo in _iterproduct(*per_axis):
                if combo not in closed:
                    new.add(combo)
        closed |= new
        frontier = new
    return frozenset(closed)


def max_ideal_dimension(kinds: frozenset[KindTuple]) -> int | None:
    """Largest dimension among ideal kind patterns, or None if none are ideal."""
    dims = [
        sum(1 for k in t if k is not P)
        for t in kinds
        if any(k is I for k in t)
    ]
    return max(dims) if dims else None


def fc_membership(n: int, m: int):
    """Predicate: does a basis cell lie in the truncation subalgebra's span?"""
    closed = kind_closure(n, m)

    def member(cell: Cell) -> bool:
        return cell.kinds in closed

    return member


def window_cells_of_kinds(
    kinds: frozenset[KindTuple], periods: tuple[int, ...], window: int
) -> list[Cell]:
    """All cells with admissible kind patterns anchored in the window."""
    n = len(periods)
    out = []
    for t in sorted(kinds):
        for pos in _iterproduct(*(range(window) for _ in range(n))):
            out.append(Cell(tuple(Factor(t[i], pos[i]) for i in range(n))))
    return out


def fc_truncation_generators(n: int, m: int, periods: tuple[int, ...], window: int = 2):
    """Generator cells of the truncation subalgebra plus a membership test.

    Returns (generators, member) where generators are the non-ideal basis
    cells of dimension <= m anchored in the window and member(cell) says
    whether a basis cell lies in the span of the subalgebra they generate.
    """
    if len(periods) != n:
        raise ValueError(f"expected {n} periods, got {len(periods)}")
    generators = window_cells_of_kinds(generator_kinds(n, m), periods, window)
    return generators, fc_membership(n, m)
