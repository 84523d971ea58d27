"""Pure-Python kernel for exact minimal-L1 integer representations.

Given generators 0 < g_1 < ... < g_ell and a target m with gcd(g_i) | m,
find min sum(|x_i|) subject to sum(x_i * g_i) = m, together with the
lexicographically smallest optimal coefficient vector (positions in
ascending generator order, numeric order on integers).

Two generators: one Bezout solution scaled by the target gives the
one-parameter family x = X + t*g2', y = Y - t*g1' (primes: divided by
the gcd).  The cost |x| + |y| is convex piecewise linear in t with kinks
where x or y vanishes, so the integer minimum sits at a floor/ceil
neighbour of a kink; the minimising t form a short contiguous plateau.

Three or more: depth-first branch and bound over generators in
descending order.  At each node the coefficient window is scanned
outward from residual/g; a node is cut when

    used + |c| + ceil(|residual - c*g| / next_generator)

reaches the incumbent (that sum never exceeds the true cost of any
completion, and it is nondecreasing along each scan direction, so the
scan may stop at the first violation).  The bottom two generators are
closed in one step with the two-generator solver.  The incumbent is
seeded by a greedy largest-first descent when its tail is closable, and
by a coefficient-reduced folded-Bezout representation, which always
exists.  A second sweep at the optimum collects the lex-smallest
witness.

This module has a compiled twin (_minl1_cy); both must implement the
same contract bit for bit.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Raw iterative extended Euclid: returns (g, x, y) with a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _two_minimizers(n1, n2, m):
    """Minimal cost for n1*x + n2*y = m (m >= 1, gcd | m) plus the two
    endpoints of the minimising plateau: ((cost, (x,y) at smallest t,
    (x,y) at largest t)).  x increases with t, so the first endpoint is
    the lex-smallest optimal pair."""
    g, x0, y0 = _ext_gcd(n1, n2)
    s = m // g
    x = x0 * s
    y = y0 * s
    p = n2 // g
    q = n1 // g
    # kinks of |x + t p| + |y - t q|; integer minimum is adjacent to one
    cands = set()
    for num, den in ((-x, p), (y, q)):
        f = num // den
        cands.add(f)
        cands.add(f + 1)
    best = None
    bt = 0
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


def solve_two(n1: int, n2: int, m: int) -> tuple[int, int, int]:
    """Exact minimum of |x| + |y| with n1*x + n2*y = m; m >= 1.

    Preconditions (validated by callers): 1 <= n1 < n2, gcd(n1,n2) | m.
    Returns (cost, x, y) with (x, y) lex-smallest among minimizers.
    """
    cost, lo, _hi = _two_minimizers(n1, n2, m)
    return cost, lo[0], lo[1]


def _two_lex_for(n1, n2, r):
    """(cost, lex-min pair) for signed nonzero target r over (n1, n2)."""
    if r > 0:
        cost, lo, _hi = _two_minimizers(n1, n2, r)
        return cost, lo
    cost, _lo, hi = _two_minimizers(n1, n2, -r)
    return cost, (-hi[0], -hi[1])


def _seed_cost(gens, m):
    """Cost of some valid representation, to cap the search.

    Greedy largest-first descent (close the tail with the bottom two
    generators when divisibility allows), plus a folded-Bezout
    representation with coefficients reduced modulo g1-steps, which is
    always available.
    """
    ell = len(gens)
    g0, g1 = gens[0], gens[1]
    d01 = gcd(g0, g1)

    best = None
    r = m
    total = 0
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


def _minimize(gens, m, ub):
    """Phase 1: exact minimum cost, never above the achievable seed ub."""
    g0, g1 = gens[0], gens[1]
    d01 = gcd(g0, g1)
    best = ub

    def rec(pos, r, used):
        nonlocal best
        if pos == 1:
            if r == 0:
                if used < best:
                    best = used
            elif r % d01 == 0:
                tot = used + _two_minimizers(g0, g1, abs(r))[0]
                if tot < best:
                    best = tot
            return
        big = gens[pos]
        nxt = gens[pos - 1]
        base = r // big
        c = base
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound >= best:
                break
            rec(pos - 1, rr, used + abs(c))
            c -= 1
        c = base + 1
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound >= best:
                break
            rec(pos - 1, rr, used + abs(c))
            c += 1

    rec(len(gens) - 1, m, 0)
    return best


def _lex_witness(gens, m, opt):
    """Phase 2: lex-smallest coefficient vector of cost exactly opt."""
    ell = len(gens)
    g0, g1 = gens[0], gens[1]
    d01 = gcd(g0, g1)
    prefix = [0] * ell
    best_vec = None

    def rec(pos, r, used):
        nonlocal best_vec
        if pos == 1:
            # any completion costs >= opt - used, with equality exactly
            # on the two-generator minimising plateau
            if r == 0:
                if used == opt:
                    vec = (0, 0) + tuple(prefix[2:])
                    if best_vec is None or vec < best_vec:
                        best_vec = vec
                return
            if r % d01:
                return
            cost, pair = _two_lex_for(g0, g1, r)
            if used + cost == opt:
                vec = pair + tuple(prefix[2:])
                if best_vec is None or vec < best_vec:
                    best_vec = vec
            return
        big = gens[pos]
        nxt = gens[pos - 1]
        base = r // big
        c = base
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound > opt:
                break
            prefix[pos] = c
            rec(pos - 1, rr, used + abs(c))
            c -= 1
        c = base + 1
        while True:
            rr = r - c * big
            bound = used + abs(c) + (abs(rr) + nxt - 1) // nxt
            if bound > opt:
                break
            prefix[pos] = c
            rec(pos - 1, rr, used + abs(c))
            c += 1

    rec(ell - 1, m, 0)
    assert best_vec is not None, "optimal witness vanished between phases"
    return best_vec


def solve_general(gens: tuple[int, ...], m: int) -> tuple[int, tuple[int, ...]]:
    """Exact minimal L1 representation of m over strictly increasing
    positive generators; gcd(gens) must divide m (validated by callers).

    Returns (cost, coefficient vector), the vector lex-smallest among
    all minimizers.
    """
    ell = len(gens)
    if ell == 1:
        c = m // gens[0]
        return c, (c,)
    if ell == 2:
        cost, x, y = solve_two(gens[0], gens[1], m)
        return cost, (x, y)
    ub = _seed_cost(gens, m)
    opt = _minimize(gens, m, ub)
    return opt, tuple(_lex_witness(gens, m, opt))
