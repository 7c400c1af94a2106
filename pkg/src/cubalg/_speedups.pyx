# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled computational kernel (mirror of _kernel_py.PyKernel).

Same integer-encoded cells, same scaled-integer coefficients, same
iteration orders; only faster.  Pair memo keys are a*code_bound + b in a
signed 64-bit integer, so construction raises OverflowError for lattices
whose code space exceeds 2**31 (the backend then falls back to the pure
kernel, which uses Python integers).
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport int64_t, uint64_t, int32_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

DEF MAXD = 6
DEF ACCCAP = 2048

cdef int POINT = 0
cdef int STICK = 1
cdef int INF = 2


cdef class CKernel:
    cdef readonly tuple periods
    cdef readonly str name
    cdef int d
    cdef int64_t periods_c[MAXD]
    cdef int64_t radices[MAXD]
    cdef int64_t places[MAXD]
    cdef int64_t code_bound
    # flattened per-axis 1-d tables
    cdef int64_t tab_base[MAXD]
    cdef vector[int32_t] tab_start   # -1 for zero products
    cdef vector[int32_t] tab_len
    cdef vector[int32_t] tab_fcode
    cdef vector[int32_t] tab_num
    # memoized pair products
    cdef unordered_map[int64_t, int64_t] memo
    cdef vector[int64_t] res_start
    cdef vector[int64_t] res_len
    cdef vector[int64_t] pool_code
    cdef vector[int64_t] pool_num

    def __init__(self, periods):
        cdef int i
        self.periods = tuple(periods)
        self.name = "compiled"
        self.d = len(self.periods)
        if self.d > MAXD:
            raise ValueError("at most six axes supported")
        cdef int64_t bound = 1
        for i in range(self.d):
            self.periods_c[i] = self.periods[i]
            self.radices[i] = 3 * self.periods_c[i]
            self.places[i] = bound
            bound *= self.radices[i]
            if bound > (<int64_t>1) << 31:
                raise OverflowError("cell-code space too large for the compiled kernel")
        self.code_bound = bound
        self._build_tables()

    # -- 1-d tables ----------------------------------------------------------

    cdef void _build_tables(self):
        cdef int i
        cdef int64_t n, fa, fb, base
        base = 0
        for i in range(self.d):
            self.tab_base[i] = base
            base += self.radices[i] * self.radices[i]
        self.tab_start.assign(base, -1)
        self.tab_len.assign(base, 0)
        for i in range(self.d):
            n = self.periods_c[i]
            for fa in range(self.radices[i]):
                for fb in range(self.radices[i]):
                    self._fill_entry(i, fa, fb, n)

    cdef void _fill_entry(self, int axis, int64_t fa, int64_t fb, int64_t n):
        cdef int64_t a = fa / 3, b = fb / 3
        cdef int ka = fa % 3, kb = fb % 3
        cdef int64_t tmp
        cdef int ktmp
        if ka > kb:
            tmp = a; a = b; b = tmp
            ktmp = ka; ka = kb; kb = ktmp
        cdef list terms = []
        cdef bint succ_ab = (a + 1) % n == b
        cdef bint succ_ba = (b + 1) % n == a
        if ka == POINT:
            if kb == STICK:
                if a == b or succ_ba:
                    terms = [(a * 3 + POINT, 2)]
            elif kb == INF:
                if a == b:
                    terms = [(a * 3 + POINT, 1)]
        elif ka == STICK:
            if kb == STICK:
                if a == b:
                    terms = [(a * 3 + INF, -4), (a * 3 + STICK, 4),
                             (((a + 1) % n) * 3 + INF, -4)]
                elif succ_ab:
                    terms = [(b * 3 + INF, 4)]
                elif succ_ba:
                    terms = [(a * 3 + INF, 4)]
            else:  # stick * inf
                if b == a or b == (a + 1) % n:
                    terms = [(b * 3 + INF, 2)]
        else:  # inf * inf
            if a == b:
                terms = [(a * 3 + INF, 1)]
        if not terms:
            return
        cdef int64_t idx = self.tab_base[axis] + fa * self.radices[axis] + fb
        self.tab_start[idx] = <int32_t>self.tab_fcode.size()
        self.tab_len[idx] = <int32_t>len(terms)
        for fc, num in terms:
            self.tab_fcode.push_back(<int32_t>fc)
            self.tab_num.push_back(<int32_t>num)

    # -- geometry -------------------------------------------------------------

    cdef bint _supports_intersect(self, int64_t a, int64_t b):
        cdef int i
        cdef int64_t fa, fb, ca, cb, n
        cdef int ka, kb
        for i in range(self.d):
            n = self.periods_c[i]
            fa = a % self.radices[i]; a = a / self.radices[i]
            fb = b % self.radices[i]; b = b / self.radices[i]
            ca = fa / 3; ka = fa % 3
            cb = fb / 3; kb = fb % 3
            if ca == cb:
                continue
            if ka == STICK and (ca + 1) % n == cb:
                continue
            if kb == STICK and (cb + 1) % n == ca:
                continue
            return False
        return True

    def supports_intersect(self, int64_t a, int64_t b):
        return self._supports_intersect(a, b)

    def transverse(self, int64_t a, int64_t b):
        if not self._supports_intersect(a, b):
            return False
        cdef int i
        cdef int64_t fa = a, fb = b
        for i in range(self.d):
            if fa % self.radices[i] % 3 == POINT and fb % self.radices[i] % 3 == POINT:
                return False
            fa = fa / self.radices[i]
            fb = fb / self.radices[i]
        return True

    # -- products ---------------------------------------------------------------

    cdef int64_t _mult_idx(self, int64_t a, int64_t b):
        """Memoized product; returns -1 for zero, else an index into
        res_start/res_len addressing pool_code/pool_num."""
        cdef int64_t key = a * self.code_bound + b
        cdef unordered_map[int64_t, int64_t].iterator it = self.memo.find(key)
        if it != self.memo.end():
            return deref(it).second
        cdef int64_t fa[MAXD]
        cdef int64_t fb[MAXD]
        cdef int64_t starts[MAXD]
        cdef int32_t lens[MAXD]
        cdef int i, j
        cdef int64_t aa = a, bb = b
        cdef int pts_b = 0, inversions = 0
        for i in range(self.d):
            fa[i] = aa % self.radices[i]; aa = aa / self.radices[i]
            fb[i] = bb % self.radices[i]; bb = bb / self.radices[i]
            if fa[i] % 3 == POINT:
                inversions += pts_b
            if fb[i] % 3 == POINT:
                pts_b += 1
        cdef int64_t sign = -1 if inversions & 1 else 1
        cdef int64_t idx
        for i in range(self.d):
            idx = self.tab_base[i] + fa[i] * self.radices[i] + fb[i]
            if self.tab_start[idx] < 0:
                self.memo[key] = -1
                return -1
            starts[i] = self.tab_start[idx]
            lens[i] = self.tab_len[idx]
        # cartesian expansion with odometer counters
        cdef int counters[MAXD]
        cdef int64_t acc_code[ACCCAP]
        cdef int64_t acc_num[ACCCAP]
        cdef int acc_n = 0, found
        cdef int64_t code, num
        for i in range(self.d):
            counters[i] = 0
        while True:
            code = 0
            num = sign
            for i in range(self.d):
                code += <int64_t>self.tab_fcode[starts[i] + counters[i]] * self.places[i]
                num *= self.tab_num[starts[i] + counters[i]]
            found = 0
            for j in range(acc_n):
                if acc_code[j] == code:
                    acc_num[j] += num
                    found = 1
                    break
            if not found:
                if acc_n == ACCCAP:
                    raise RuntimeError("product accumulator overflow")
                acc_code[acc_n] = code
                acc_num[acc_n] = num
                acc_n += 1
            # advance odometer
            i = 0
            while i < self.d:
                counters[i] += 1
                if counters[i] < lens[i]:
                    break
                counters[i] = 0
                i += 1
            if i == self.d:
                break
        cdef int64_t res_idx = <int64_t>self.res_start.size()
        cdef int64_t start = <int64_t>self.pool_code.size()
        cdef int64_t cnt = 0
        for j in range(acc_n):
            if acc_num[j] != 0:
                self.pool_code.push_back(acc_code[j])
                self.pool_num.push_back(acc_num[j])
                cnt += 1
        if cnt == 0:
            self.memo[key] = -1
            return -1
        self.res_start.push_back(start)
        self.res_len.push_back(cnt)
        self.memo[key] = res_idx
        return res_idx

    def mult(self, int64_t a, int64_t b):
        """Product of two basis cells; numerators at scale 4**d."""
        cdef int64_t idx = self._mult_idx(a, b)
        if idx < 0:
            return ()
        cdef int64_t start = self.res_start[idx]
        cdef int64_t n = self.res_len[idx]
        cdef int64_t j
        out = []
        for j in range(n):
            out.append((self.pool_code[start + j], self.pool_num[start + j]))
        return tuple(out)

    def boundary(self, int64_t code):
        """Boundary of a basis cell as (code, sign) pairs."""
        cdef int i
        cdef int64_t c = code, fc, coord
        cdef int kind, prefix_pts = 0
        cdef int64_t sigma, base, place
        out = []
        for i in range(self.d):
            fc = c % self.radices[i]
            c = c / self.radices[i]
            coord = fc / 3
            kind = fc % 3
            if kind == STICK:
                sigma = -1 if prefix_pts & 1 else 1
                place = self.places[i]
                base = code - fc * place
                out.append((base + (((coord + 1) % self.periods_c[i]) * 3 + POINT) * place, sigma))
                out.append((base + (coord * 3 + POINT) * place, -sigma))
            elif kind == POINT:
                prefix_pts += 1
        return tuple(out)

    # -- exhaustive associativity scan -------------------------------------------

    def scan_assoc(self, cells):
        """Check (a*b)*c == a*(b*c) over ordered triples with pairwise
        intersecting supports; returns (checked, violations)."""
        cdef int n = len(cells)
        cdef vector[int64_t] codes
        cdef int i, j, k, w
        for i in range(n):
            codes.push_back(cells[i])
        cdef int words = (n + 63) >> 6
        cdef vector[uint64_t] masks
        masks.assign(n * words, 0)
        for i in range(n):
            for j in range(i, n):
                if self._supports_intersect(codes[i], codes[j]):
                    masks[i * words + (j >> 6)] |= (<uint64_t>1) << (j & 63)
                    masks[j * words + (i >> 6)] |= (<uint64_t>1) << (i & 63)
        cdef int64_t checked = 0
        violations = []
        cdef int64_t a, b, c
        cdef int64_t p_ab, p_bc, p_uc, p_au
        cdef int64_t u, su, lu, t1, t2
        cdef uint64_t mj, mk
        cdef int64_t lhs_code[ACCCAP]
        cdef int64_t lhs_num[ACCCAP]
        cdef int64_t rhs_code[ACCCAP]
        cdef int64_t rhs_num[ACCCAP]
        cdef int lhs_n, rhs_n, found
        cdef int64_t codev, numv, w1
        cdef int jj, kk, b_idx, c_idx
        for i in range(n):
            a = codes[i]
            for jj in range(words):
                mj = masks[i * words + jj]
                while mj:
                    b_idx = (jj << 6) + _ctz(mj)
                    mj &= mj - 1
                    b = codes[b_idx]
                    p_ab = self._mult_idx(a, b)
                    for kk in range(words):
                        mk = masks[i * words + kk] & masks[b_idx * words + kk]
                        while mk:
                            c_idx = (kk << 6) + _ctz(mk)
                            mk &= mk - 1
                            c = codes[c_idx]
                            checked += 1
                            # lhs = (a*b)*c
                            lhs_n = 0
                            if p_ab >= 0:
                                su = self.res_start[p_ab]
                                lu = self.res_len[p_ab]
                                for t1 in range(lu):
                                    u = self.pool_code[su + t1]
                                    w1 = self.pool_num[su + t1]
                                    p_uc = self._mult_idx(u, c)
                                    if p_uc < 0:
                                        continue
                                    for t2 in range(self.res_len[p_uc]):
                                        codev = self.pool_code[self.res_start[p_uc] + t2]
                                        numv = w1 * self.pool_num[self.res_start[p_uc] + t2]
                                        found = 0
                                        for w in range(lhs_n):
                                            if lhs_code[w] == codev:
                                                lhs_num[w] += numv
                                                found = 1
                                                break
                                        if not found:
                                            if lhs_n == ACCCAP:
                                                raise RuntimeError("scan accumulator overflow")
                                            lhs_code[lhs_n] = codev
                                            lhs_num[lhs_n] = numv
                                            lhs_n += 1
                            # rhs = a*(b*c)
                            rhs_n = 0
                            p_bc = self._mult_idx(b, c)
                            if p_bc >= 0:
                                su = self.res_start[p_bc]
                                lu = self.res_len[p_bc]
                                for t1 in range(lu):
                                    u = self.pool_code[su + t1]
                                    w1 = self.pool_num[su + t1]
                                    p_au = self._mult_idx(a, u)
                                    if p_au < 0:
                                        continue
                                    for t2 in range(self.res_len[p_au]):
                                        codev = self.pool_code[self.res_start[p_au] + t2]
                                        numv = w1 * self.pool_num[self.res_start[p_au] + t2]
                                        found = 0
                                        for w in range(rhs_n):
                                            if rhs_code[w] == codev:
                                                rhs_num[w] += numv
                                                found = 1
                                                break
                                        if not found:
                                            if rhs_n == ACCCAP:
                                                raise RuntimeError("scan accumulator overflow")
                                            rhs_code[rhs_n] = codev
                                            rhs_num[rhs_n] = numv
                                            rhs_n += 1
                            if not _acc_equal(lhs_code, lhs_num, lhs_n, rhs_code, rhs_num, rhs_n):
                                violations.append((a, b, c))
        return checked, violations


cdef inline int _ctz(uint64_t x):
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


cdef bint _acc_equal(int64_t* ac, int64_t* an, int na, int64_t* bc, int64_t* bn, int nb):
    cdef int i, j
    cdef bint found
    for i in range(na):
        if an[i] == 0:
            continue
        found = False
        for j in range(nb):
            if bc[j] == ac[i]:
                if bn[j] != an[i]:
                    return False
                found = True
                break
        if not found:
            return False
    # symmetric: every nonzero entry of b must appear in a
    for j in range(nb):
        if bn[j] == 0:
            continue
        found = False
        for i in range(na):
            if ac[i] == bc[j]:
                found = True
                break
        if not found:
            return False
    return True
