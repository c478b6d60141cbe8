"""Exact multivariate polynomial engine.

Polynomials are plain dicts mapping exponent tuples to nonzero Fractions.
All functions here are ring-agnostic: they take the number of variables
implicitly from the exponent tuples and an order key explicitly.  The
higher-level modules wrap these in ring-aware classes.
"""

import heapq
from fractions import Fraction
from itertools import combinations

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# monomial orders

def grevlex_key(e):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(e), tuple(-x for x in reversed(e)))


def elim_key(k):
    """Block order eliminating the first k variables (grevlex within each block)."""

    def key(e):
        return (grevlex_key(e[:k]), grevlex_key(e[k:]))

    return key


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector a - b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# arithmetic on term dicts

def p_add(p, q):
    r = dict(p)
    for m, c in q.items():
        s = r.get(m, ZERO) + c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def p_neg(p):
    return {m: -c for m, c in p.items()}


def p_sub(p, q):
    r = dict(p)
    for m, c in q.items():
        s = r.get(m, ZERO) - c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def p_scale(p, c):
    if not c:
        return {}
    return {m: k * c for m, k in p.items()}


def p_mul_term(p, mono, coeff):
    return {mono_mul(m, mono): c * coeff for m, c in p.items()}


def p_mul(p, q):
    r = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = r.get(m, ZERO) + c1 * c2
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return r


def p_pow(p, n):
    r = None
    base = dict(p)
    while n:
        if n & 1:
            r = p_mul(r, base) if r is not None else base
        n >>= 1
        if n:
            base = p_mul(base, base)
    if r is None:
        nvars = len(next(iter(p))) if p else 0
        return {(0,) * nvars: ONE}
    return r


def leading(p, key):
    """Leading (monomial, coefficient) of a nonzero polynomial."""
    m = max(p, key=key)
    return m, p[m]


def monic(p, key):
    if not p:
        return p
    _, c = leading(p, key)
    if c == 1:
        return p
    return {m: k / c for m, k in p.items()}


def canonical(p, key):
    """Hashable canonical form: terms sorted by descending order key."""
    return tuple(
        (m, (p[m].numerator, p[m].denominator))
        for m in sorted(p, key=key, reverse=True)
    )


def total_degree(p):
    return max((sum(m) for m in p), default=-1)


def differentiate(p, i):
    """Partial derivative with respect to variable i."""
    r = {}
    for m, c in p.items():
        if m[i]:
            dm = list(m)
            dm[i] -= 1
            r[tuple(dm)] = c * m[i]
    return r


# ---------------------------------------------------------------------------
# division and Buchberger

def _neg_key(k):
    """Elementwise negation of an integer key tuple; reverses the order."""
    if isinstance(k, tuple):
        return tuple(_neg_key(x) for x in k)
    return -k


def normal_form(p, basis, key):
    """Fully reduced remainder of p modulo a list of nonzero polynomials."""
    if not basis:
        return dict(p)
    heads = [(max(g, key=key), g) for g in basis]
    heads = [(lm, g[lm], g) for lm, g in heads]
    work = dict(p)
    # max-heap of candidate monomials with lazy deletion
    heap = [(_neg_key(key(m)), m) for m in work]
    heapq.heapify(heap)
    out = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if c is None:
            continue
        for lm, lc, g in heads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = c / lc
                for gm, gc in g.items():
                    t = mono_mul(gm, q)
                    old = work.get(t)
                    s = (old if old is not None else ZERO) - gc * factor
                    if s:
                        if old is None:
                            heapq.heappush(heap, (_neg_key(key(t)), t))
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            out[m] = c
            del work[m]
    return out


def s_poly(f, g, key):
    mf, cf = leading(f, key)
    mg, cg = leading(g, key)
    lcm = mono_lcm(mf, mg)
    return p_sub(
        p_mul_term(f, mono_div(lcm, mf), ONE / cf),
        p_mul_term(g, mono_div(lcm, mg), ONE / cg),
    )


def buchberger(gens, key):
    """Reduced Groebner basis, deterministic.

    Normal selection strategy; pairs are discarded by the product (coprime
    leading monomials) and chain criteria.  The output is monic, pairwise
    autoreduced and sorted by ascending leading monomial.
    """
    G = []
    for g in gens:
        if g:
            G.append(monic(g, key))
    G.sort(key=lambda g: key(max(g, key=key)))
    if not G:
        return []
    lms = [max(g, key=key) for g in G]
    # normal selection via a heap keyed by the pair's lcm
    pairs = [
        (key(mono_lcm(lms[i], lms[j])), i, j)
        for i in range(len(G))
        for j in range(i + 1, len(G))
    ]
    heapq.heapify(pairs)
    done = set()
    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add((i, j))
        lcm = mono_lcm(lms[i], lms[j])
        if lcm == mono_mul(lms[i], lms[j]):
            continue  # product criterion
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(lms[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                chain = True
                break
        if chain:
            continue
        h = normal_form(s_poly(G[i], G[j], key), G, key)
        if h:
            h = monic(h, key)
            G.append(h)
            lms.append(max(h, key=key))
            n = len(G) - 1
            for i2 in range(n):
                heapq.heappush(
                    pairs, (key(mono_lcm(lms[i2], lms[n])), i2, n))
    # minimalize
    order_idx = sorted(range(len(G)), key=lambda i: key(lms[i]))
    minimal = []
    for i in order_idx:
        if not any(mono_divides(max(g, key=key), lms[i]) for g in minimal):
            minimal.append(G[i])
    # interreduce
    reduced = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, rest, key)
        if r:
            reduced.append(monic(r, key))
    reduced.sort(key=lambda g: key(max(g, key=key)))
    return reduced


def is_unit_ideal(gb):
    return len(gb) == 1 and list(gb[0]) == [tuple([0] * len(next(iter(gb[0]))))]


# ---------------------------------------------------------------------------
# dimension via independent variable sets

def lt_dimension(gb, nvars, key):
    """Krull dimension of k[x]/LT(I) from a reduced GB (unit ideal gives -1)."""
    if any(not g for g in gb):
        raise ValueError("zero polynomial in basis")
    if gb and is_unit_ideal(gb):
        return -1
    lts = [max(g, key=key) for g in gb]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = set(subset)
            if all(any(m[i] for i in range(nvars) if i not in s) for m in lts):
                return size
    return 0
