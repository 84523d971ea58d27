# cython: language_level=3
"""Compiled twin of _minl1_py: exact minimal-L1 integer representations.

Same contract, same algorithm (Bezout family + convex-kink scan for two
generators, seeded branch and bound with an admissible ceil bound for
more).  Coefficients and residuals stay Python integers so values of any
size are exact; Cython removes the interpreter dispatch around the hot
recursion.  Any behavioural change here must be mirrored in _minl1_py.
"""

from math import gcd

BACKEND = "cython"


cdef tuple _ext_gcd(object a, object b):
    cdef object old_r = a, r = b
    cdef object old_s = 1, s = 0
    cdef object old_t = 0, t = 1
    cdef object q
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


cdef tuple _two_minimizers(object n1, object n2, object m):
    cdef object g, x0, y0, s, x, y, p, q, f, num, den, best, c, t, lo, hi
    g, x0, y0 = _ext_gcd(n1, n2)
    s = m // g
    x = x0 * s
    y = y0 * s
    p = n2 // g
    q = n1 // g
    cands = set()
    for num, den in ((-x, p), (y, q)):
        f = num // den
        cands.add(f)
        cands.add(f + 1)
    best = None
    cdef object bt = 0
    for t in sorted(cands):
        c = abs(x + t * p) + abs(y - t * q)
        if best is None or c < best:
            best = c
            bt = t
    lo = hi = bt
    while abs(x + (lo - 1) * p) + abs(y - (lo - 1) * q) == best:
        lo -= 1
    while abs(x + (hi + 1) * p) + abs(y - (hi + 1) * q) == best:
        hi += 1
    return best, (x + lo * p, y - lo * q), (x + hi * p, y - hi * q)


def solve_two(n1, n2, m):
    """Exact minimum of |x| + |y| with n1*x + n2*y = m; m >= 1.

    Preconditions (validated by callers): 1 <= n1 < n2, gcd(n1,n2) | m.
    Returns (cost, x, y) with (x, y) lex-smallest among minimizers.
    """
    cost, lo, _hi = _two_minimizers(n1, n2, m)
    return cost, lo[0], lo[1]


cdef tuple _two_lex_for(object n1, object n2, object r):
    cdef object cost
    if r > 0:
        cost, lo, _hi = _two_minimizers(n1, n2, r)
        return cost, lo
    cost, _lo, hi = _two_minimizers(n1, n2, -r)
    return cost, (-hi[0], -hi[1])


cdef object _seed_cost(tuple gens, object m):
    cdef Py_ssize_t ell = len(gens)
    cdef Py_ssize_t i, j
    cdef object g0 = gens[0], g1 = gens[1]
    cdef object d01 = gcd(g0, g1)
    cdef object best = None, r = m, total = 0, c, d, d2, a, b, s, di, step, t, cost

    for i in range(ell - 1, 1, -1):
        c = r // gens[i]
        total += c
        r -= c * gens[i]
    if r == 0:
        best = total
    elif r % d01 == 0:
        best = total + _two_minimizers(g0, g1, r)[0]

    coeff = [1] + [0] * (ell - 1)
    d = gens[0]
    for i in range(1, ell):
        d2, a, b = _ext_gcd(d, gens[i])
        for j in range(i):
            coeff[j] *= a
        coeff[i] = b
        d = d2
    s = m // d
    vec = [c * s for c in coeff]
    for i in range(ell - 1, 0, -1):
        di = gcd(g0, gens[i])
        step = g0 // di
        t = vec[i] // step
        vec[i] -= t * step
        vec[0] += t * (gens[i] // di)
    cost = sum(abs(v) for v in vec)
    if best is None or cost < best:
        best = cost
    return best


cdef class _MinSearch:
    cdef tuple gens
    cdef object g0, g1, d01, best

    def __cinit__(self, tuple gens, object ub):
        self.gens = gens
        self.g0 = gens[0]
        self.g1 = gens[1]
        self.d01 = gcd(gens[0], gens[1])
        self.best = ub

    cdef object run(self, Py_ssize_t pos, object r, object used):
        cdef object big, nxt, base, c, rr, bound, tot
        if pos == 1:
            if r == 0:
                if used < self.best:
                    self.best = used
            elif r % self.d01 == 0:
                tot = used + _two_minimizers(self.g0, self.g1, abs(r))[0]
                if tot < self.best:
                    self.best = tot
            return None
        big = self.gens[pos]
        nxt = self.gens[pos - 1]
        base = r // big
        c = base
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound >= self.best:
                break
            self.run(pos - 1, rr, used + abs(c))
            c -= 1
        c = base + 1
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound >= self.best:
                break
            self.run(pos - 1, rr, used + abs(c))
            c += 1
        return None


cdef class _LexSearch:
    cdef tuple gens
    cdef object g0, g1, d01, opt, best_vec
    cdef list prefix

    def __cinit__(self, tuple gens, object opt):
        self.gens = gens
        self.g0 = gens[0]
        self.g1 = gens[1]
        self.d01 = gcd(gens[0], gens[1])
        self.opt = opt
        self.best_vec = None
        self.prefix = [0] * len(gens)

    cdef object run(self, Py_ssize_t pos, object r, object used):
        cdef object big, nxt, base, c, rr, bound, cost
        cdef tuple vec, pair
        if pos == 1:
            if r == 0:
                if used == self.opt:
                    vec = (0, 0) + tuple(self.prefix[2:])
                    if self.best_vec is None or vec < self.best_vec:
                        self.best_vec = vec
                return None
            if r % self.d01:
                return None
            cost, pair = _two_lex_for(self.g0, self.g1, r)
            if used + cost == self.opt:
                vec = pair + tuple(self.prefix[2:])
                if self.best_vec is None or vec < self.best_vec:
                    self.best_vec = vec
            return None
        big = self.gens[pos]
        nxt = self.gens[pos - 1]
        base = r // big
        c = base
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound > self.opt:
                break
            self.prefix[pos] = c
            self.run(pos - 1, rr, used + abs(c))
            c -= 1
        c = base + 1
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound > self.opt:
                break
            self.prefix[pos] = c
            self.run(pos - 1, rr, used + abs(c))
            c += 1
        return None


def solve_general(gens, m):
    """Exact minimal L1 representation of m over strictly increasing
    positive generators; gcd(gens) must divide m (validated by callers).

    Returns (cost, coefficient vector), the vector lex-smallest among
    all minimizers.
    """
    cdef tuple gtup = tuple(gens)
    cdef Py_ssize_t ell = len(gtup)
    cdef object c, cost, x, y, ub, opt
    if ell == 1:
        c = m // gtup[0]
        return c, (c,)
    if ell == 2:
        cost, x, y = solve_two(gtup[0], gtup[1], m)
        return cost, (x, y)
    ub = _seed_cost(gtup, m)
    cdef _MinSearch mins = _MinSearch(gtup, ub)
    mins.run(ell - 1, m, 0)
    opt = mins.best
    cdef _LexSearch lex = _LexSearch(gtup, opt)
    lex.run(ell - 1, m, 0)
    assert lex.best_vec is not None, "optimal witness vanished between phases"
    return opt, lex.best_vec
