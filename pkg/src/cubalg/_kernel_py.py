"""Pure-Python computational kernel.

Operates on integer-encoded basis cells (see cells.encode_cell).  Product
coefficients are returned as integer numerators at the fixed scale 4**d:
a returned pair (code, num) stands for the term (num / 4**d) * cell.
Boundary coefficients are plain signs.

The compiled kernel in _speedups.pyx implements the same interface; the
two must agree exactly (covered by the backend parity tests).
"""

from __future__ import annotations

from itertools import product as _iterproduct

POINT, STICK, INF = 0, 1, 2


def _axis_table(n: int) -> list[tuple[tuple[int, int], ...] | None]:
    """Scaled 1-D multiplication table over factor codes modulo n.

    Entry at fa*(3n)+fb is a tuple of (factor_code, numerator-at-scale-4)
    pairs, or None when the product is zero.  The nonzero cases:

      p@a * s@a     = 1/2 p@a        p@a * s@{a-1} = 1/2 p@a
      p@a * i@a     = 1/4 p@a
      s@{a-1} * s@a = i@a            (glancing endpoint contact)
      s@a * s@a     = -i@a + s@a - i@{a+1}
      i@a * s@a     = 1/2 i@a        i@a * s@{a-1} = 1/2 i@a
      i@a * i@a     = 1/4 i@a

    symmetric in the two arguments; points never multiply points.
    """
    size = 3 * n
    table: list[tuple[tuple[int, int], ...] | None] = [None] * (size * size)
    for a in range(n):
        for b in range(n):
            for ka in (POINT, STICK, INF):
                for kb in (POINT, STICK, INF):
                    terms = _mult1(ka, a, kb, b, n)
                    if terms:
                        table[(a * 3 + ka) * size + (b * 3 + kb)] = terms
    return table


def _mult1(ka: int, a: int, kb: int, b: int, n: int):
    if ka > kb:
        ka, a, kb, b = kb, b, ka, a
    succ_ab = (a + 1) % n == b
    succ_ba = (b + 1) % n == a
    if ka == POINT:
        if kb == POINT:
            return None
        if kb == STICK:
            # point at either endpoint of the stick
            if a == b or succ_ba:
                return ((a * 3 + POINT, 2),)
            return None
        # kb == INF
        if a == b:
            return ((a * 3 + POINT, 1),)
        return None
    if ka == STICK:
        if kb == STICK:
            if a == b:
                return (
                    (a * 3 + INF, -4),
                    (a * 3 + STICK, 4),
                    (((a + 1) % n) * 3 + INF, -4),
                )
            if succ_ab:
                return ((b * 3 + INF, 4),)
            if succ_ba:
                return ((a * 3 + INF, 4),)
            return None
        # kb == INF: nonzero when the infinitesimal sits on an endpoint
        if b == a or b == (a + 1) % n:
            return ((b * 3 + INF, 2),)
        return None
    # ka == kb == INF
    if a == b:
        return ((a * 3 + INF, 1),)
    return None


class PyKernel:
    """Basis-cell product, boundary and the associativity scan, in Python."""

    name = "pure"

    def __init__(self, periods: tuple[int, ...]):
        self.periods = tuple(periods)
        self.d = len(periods)
        self.radices = tuple(3 * n for n in periods)
        self.places = []
        p = 1
        for r in self.radices:
            self.places.append(p)
            p *= r
        self.code_bound = p
        self._tables = [_axis_table(n) for n in periods]
        self._mult_cache: dict[int, tuple[tuple[int, int], ...]] = {}

    # -- helpers -----------------------------------------------------------

    def _factors(self, code: int) -> list[int]:
        out = []
        for r in self.radices:
            code, fc = divmod(code, r)
            out.append(fc)
        return out

    def supports_intersect(self, a: int, b: int) -> bool:
        """Closed supports meet on every axis."""
        for i, n in enumerate(self.periods):
            r = self.radices[i]
            a, fa = divmod(a, r)
            b, fb = divmod(b, r)
            ca, ka = divmod(fa, 3)
            cb, kb = divmod(fb, 3)
            if ca == cb:
                continue
            if ka == STICK and (ca + 1) % n == cb:
                continue
            if kb == STICK and (cb + 1) % n == ca:
                continue
            return False
        return True

    def transverse(self, a: int, b: int) -> bool:
        """Supports intersect and the two direction sets span every axis."""
        if not self.supports_intersect(a, b):
            return False
        for i in range(self.d):
            r = self.radices[i]
            a, fa = divmod(a, r)
            b, fb = divmod(b, r)
            if fa % 3 == POINT and fb % 3 == POINT:
                return False
        return True

    # -- products ----------------------------------------------------------

    def mult(self, a: int, b: int) -> tuple[tuple[int, int], ...]:
        """Product of two basis cells; numerators at scale 4**d."""
        key = a * self.code_bound + b
        cached = self._mult_cache.get(key)
        if cached is not None:
            return cached
        fa = self._factors(a)
        fb = self._factors(b)
        # Koszul sign: product of (-1) for every pair i>j with a_i and b_j
        # both points (codimension-1 factors moving past each other).
        pts_b_before = 0
        inversions = 0
        for i in range(self.d):
            if fa[i] % 3 == POINT:
                inversions += pts_b_before
            if fb[i] % 3 == POINT:
                pts_b_before += 1
        sign = -1 if inversions & 1 else 1
        per_axis = []
        for i in range(self.d):
            terms = self._tables[i][fa[i] * self.radices[i] + fb[i]]
            if terms is None:
                self._mult_cache[key] = ()
                return ()
            per_axis.append(terms)
        out: dict[int, int] = {}
        places = self.places
        for combo in _iterproduct(*per_axis):
            code = 0
            num = sign
            for i, (fc, w) in enumerate(combo):
                code += fc * places[i]
                num *= w
            out[code] = out.get(code, 0) + num
        result = tuple((c, v) for c, v in out.items() if v)
        self._mult_cache[key] = result
        return result

    def boundary(self, code: int) -> tuple[tuple[int, int], ...]:
        """Boundary of a basis cell as (code, sign) pairs.

        Per stick axis i, emits point cells at both stick ends with sign
        (-1)**(number of point factors on axes < i); infinitesimal sticks
        and points have zero boundary.
        """
        fs = self._factors(code)
        out = []
        prefix_pts = 0
        for i, fc in enumerate(fs):
            coord, kind = divmod(fc, 3)
            if kind == STICK:
                sigma = -1 if prefix_pts & 1 else 1
                place = self.places[i]
                base = code - fc * place
                upper = ((coord + 1) % self.periods[i]) * 3 + POINT
                lower = coord * 3 + POINT
                out.append((base + upper * place, sigma))
                out.append((base + lower * place, -sigma))
            elif kind == POINT:
                prefix_pts += 1
        return tuple(out)

    # -- exhaustive associativity scan --------------------------------------

    def scan_assoc(self, cells: list[int]) -> tuple[int, list[tuple[int, int, int]]]:
        """Check (a*b)*c == a*(b*c) over all ordered triples from `cells`
        whose closed supports pairwise intersect.

        Returns (number of triples checked, violating triples).
        """
        n = len(cells)
        masks = [0] * n
        for i in range(n):
            for j in range(i, n):
                if self.supports_intersect(cells[i], cells[j]):
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        mult = self.mult
        checked = 0
        violations: list[tuple[int, int, int]] = []
        for i in range(n):
            a = cells[i]
            mi = masks[i]
            mj = mi
            while mj:
                jbit = mj & -mj
                mj ^= jbit
                j = jbit.bit_length() - 1
                b = cells[j]
                p_ab = mult(a, b)
                mk = mi & masks[j]
                while mk:
                    kbit = mk & -mk
                    mk ^= kbit
                    c = cells[kbit.bit_length() - 1]
                    lhs: dict[int, int] = {}
                    for u, w1 in p_ab:
                        for v, w2 in mult(u, c):
                            lhs[v] = lhs.get(v, 0) + w1 * w2
                    rhs: dict[int, int] = {}
                    for u, w1 in mult(b, c):
                        for v, w2 in mult(a, u):
                            rhs[v] = rhs.get(v, 0) + w1 * w2
                    checked += 1
                    if {k: v for k, v in lhs.items() if v} != {
                        k: v for k, v in rhs.items() if v
                    }:
                        violations.append((a, b, c))
        return checked, violations
