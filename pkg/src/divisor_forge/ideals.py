"""Ideal arithmetic, height-one minimal primes and symbolic powers.

Every ideal of a quotient ring is handled through its full ambient preimage
(generators plus defining relations); the reduced Groebner basis of that
preimage is the ideal's canonical key, so ideal equality is key equality.
"""

import random
from fractions import Fraction

from . import engine, factorization
from .engine import elim_key
from .errors import (
    DecompositionIncomplete,
    DivisorForgeError,
    HeightNotOne,
    RingMismatch,
)
from .ring import Polynomial, QuotientRing


class Ideal:
    """Finitely generated ideal in a QuotientRing."""

    def __init__(self, ring, gens):
        self.ring = ring
        fixed = []
        for g in gens:
            if isinstance(g, str):
                from .ring import polynomial

                g = polynomial(ring, g)
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
            if g.terms:
                fixed.append(g)
        self.gens = tuple(fixed)
        self._gb = None
        self._key = None
        self._qgens = None
        self._symbolic_cache = {}

    # -- canonical data ------------------------------------------------------

    @property
    def groebner(self):
        """Reduced GB of the ambient preimage (generators + defining ideal)."""
        if self._gb is None:
            if not hasattr(self.ring, "_gb_cache"):
                self.ring._gb_cache = {}
            probe = tuple(
                sorted(engine.canonical(g.terms, self.ring.key)
                       for g in self.gens))
            cached = self.ring._gb_cache.get(probe)
            if cached is None:
                raw = [dict(g.terms) for g in self.gens]
                raw += [dict(g) for g in self.ring.quotient_gb]
                cached = engine.buchberger(raw, self.ring.key)
                self.ring._gb_cache[probe] = cached
            self._gb = cached
        return self._gb

    @property
    def key(self):
        if self._key is None:
            self._key = tuple(
                engine.canonical(g, self.ring.key) for g in self.groebner)
        return self._key

    def quotient_gens(self):
        """Generators presented in the quotient: GB elements surviving modulo
        the defining ideal, reduced to normal form."""
        if self._qgens is None:
            out = []
            for g in self.groebner:
                nf = self.ring.normal_form_raw(g)
                if nf:
                    out.append(Polynomial(self.ring, nf))
            self._qgens = tuple(out)
        return self._qgens

    # -- predicates ----------------------------------------------------------

    def contains(self, f):
        if isinstance(f, Polynomial):
            f = f.terms
        return not engine.normal_form(f, self.groebner, self.ring.key)

    def contains_ideal(self, other):
        return all(self.contains(g.terms) for g in other.gens) and all(
            self.contains(g) for g in other.groebner)

    def is_unit(self):
        return engine.is_unit_ideal(self.groebner) if self.groebner else False

    def is_zero(self):
        return not self.quotient_gens()

    def dimension(self):
        """Krull dimension of R/I (unit ideal gives -1)."""
        return engine.lt_dimension(self.groebner, self.ring.nvars, self.ring.key)

    def height(self):
        return self.ring.dimension() - self.dimension()

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.key == other.key

    def __hash__(self):
        return hash((self.ring, self.key))

    def __lt__(self, other):
        return self.key < other.key

    def minimal_gens(self):
        """Irredundant generating set drawn from the quotient presentation."""
        gens = list(self.quotient_gens())
        if not gens:
            return (self.ring.zero(),)
        gens.sort(key=lambda g: (g.total_degree(),
                                 engine.canonical(g.nf_terms(), self.ring.key)))
        kept = list(gens)
        i = 0
        while i < len(kept):
            rest = kept[:i] + kept[i + 1 :]
            if rest and Ideal(self.ring, rest).contains(kept[i].terms):
                kept.pop(i)
            else:
                i += 1
        return tuple(kept)

    def compress(self):
        """The same ideal presented on an irredundant generating set.

        Products and powers produce wildly redundant generator lists; the
        colon and intersection routines scale with the presentation, so
        shrinking it first is often the difference between instant and
        intractable."""
        if not self.gens:
            return self
        return Ideal(self.ring, list(self.minimal_gens()))

    def __repr__(self):
        return "ideal(%s)" % ", ".join(repr(g) for g in self.minimal_gens())

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("ideals from different rings")

    def __add__(self, other):
        self._check_ring(other)
        return Ideal(self.ring, list(self.gens) + list(other.gens))

    def __mul__(self, other):
        self._check_ring(other)
        if not self.gens or not other.gens:
            return Ideal(self.ring, [])
        return Ideal(
            self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise DivisorForgeError("negative ideal power")
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(n):
            out = out * self
        return out

    def bracket_power(self, n):
        """Ideal generated by the n-th powers of the stored generators."""
        n = int(n)
        if n < 1:
            raise DivisorForgeError("bracket power needs n >= 1")
        return Ideal(self.ring, [g**n for g in self.gens])

    def intersection(self, other):
        self._check_ring(other)
        mine = [_prepend_var(g) for g in self.groebner]
        theirs = [_prepend_var(g) for g in other.groebner]
        t = {(1,) + (0,) * self.ring.nvars: Fraction(1)}
        one_minus_t = engine.p_sub(
            {(0,) * (self.ring.nvars + 1): Fraction(1)}, t)
        gens = [engine.p_mul(t, g) for g in mine]
        gens += [engine.p_mul(one_minus_t, g) for g in theirs]
        gb = engine.buchberger(gens, elim_key(1))
        kept = [_strip_var(g) for g in gb if all(m[0] == 0 for m in g)]
        return Ideal(self.ring, [Polynomial(self.ring, g) for g in kept])

    def quotient(self, other):
        """Colon ideal (self : other)."""
        self._check_ring(other)
        # the stored generators suffice: defining relations lie in every
        # preimage, so their colons are the unit ideal
        gens = [g for g in other.gens if not g.is_zero()]
        if len(gens) > 8:
            gens = [g for g in other.minimal_gens() if not g.is_zero()]
        if not gens:
            raise DivisorForgeError("colon by the zero ideal")
        out = None
        for f in gens:
            part = self._quotient_by_element(f)
            out = part if out is None else out.intersection(part)
        return out

    def _quotient_by_element(self, f):
        fast = self._quotient_by_variable_power(f)
        if fast is not None:
            return fast
        # (I : f) = (1/f)(I \cap (f)), computed in the ambient ring where the
        # division by f is exact polynomial division.
        n = self.ring.nvars
        mine = [_prepend_var(g) for g in self.groebner]
        t = {(1,) + (0,) * n: Fraction(1)}
        one_minus_t = engine.p_sub({(0,) * (n + 1): Fraction(1)}, t)
        fraw = _prepend_var(f.terms)
        gens = [engine.p_mul(t, g) for g in mine]
        gens.append(engine.p_mul(one_minus_t, fraw))
        gb = engine.buchberger(gens, elim_key(1))
        kept = [_strip_var(g) for g in gb if all(m[0] == 0 for m in g)]
        out = [_exact_div(g, f.terms, self.ring.key) for g in kept]
        return Ideal(self.ring, [Polynomial(self.ring, g) for g in out])

    def _quotient_by_variable_power(self, f):
        """Fast colon by c*x_i^k for homogeneous ideals, or None.

        With x_i moved last, a grevlex basis of a homogeneous ideal yields a
        basis of (I : x_i) by dividing x_i out of the elements whose lead it
        divides (homogeneity makes every term divisible); the result is again
        a basis for the same order, so powers iterate without recomputation.
        """
        fterms = f.terms
        if len(fterms) != 1:
            return None
        ((mono, _),) = fterms.items()
        gb = self.groebner
        if not any(mono):
            # colon by a unit changes nothing
            return Ideal(self.ring, [Polynomial(self.ring, dict(g))
                                     for g in gb])
        used = [i for i, e in enumerate(mono) if e]
        if len(used) != 1:
            return None
        i, k = used[0], mono[used[0]]
        for g in gb:
            if len({sum(m) for m in g}) != 1:
                return None
        n = self.ring.nvars
        perm = [j for j in range(n) if j != i] + [i]
        permuted = [
            {tuple(m[j] for j in perm): c for m, c in g.items()} for g in gb
        ]
        pgb = engine.buchberger(permuted, self.ring.key)
        for _ in range(k):
            nxt = []
            for g in pgb:
                lm = max(g, key=self.ring.key)
                if lm[-1] > 0:
                    nxt.append({m[:-1] + (m[-1] - 1,): c
                                for m, c in g.items()})
                else:
                    nxt.append(g)
            pgb = nxt
        pos = [0] * n
        for p, j in enumerate(perm):
            pos[j] = p
        out = [
            {tuple(m[pos[j]] for j in range(n)): c for m, c in g.items()}
            for g in pgb
        ]
        return Ideal(self.ring, [Polynomial(self.ring, g) for g in out])

    def saturation(self, other):
        """Stable limit of iterated colon ideals (I : J^infinity)."""
        cur = self
        while True:
            nxt = cur.quotient(other)
            if nxt.key == cur.key:
                return cur
            cur = nxt

    def eliminate(self, var_indices):
        """Generators of the contraction to the subring without the given variables."""
        drop = sorted(set(var_indices))
        if not drop:
            return self
        n = self.ring.nvars
        keep = [i for i in range(n) if i not in drop]
        perm = drop + keep  # eliminated block first
        permuted = [
            {tuple(m[i] for i in perm): c for m, c in g.items()}
            for g in self.groebner
        ]
        gb = engine.buchberger(permuted, elim_key(len(drop)))
        inv = [0] * n
        for newpos, old in enumerate(perm):
            inv[old] = newpos
        out = []
        for g in gb:
            if all(all(m[j] == 0 for j in range(len(drop))) for m in g):
                out.append({tuple(m[inv[i]] for i in range(n)): c
                            for m, c in g.items()})
        return Ideal(self.ring, [Polynomial(self.ring, g) for g in out])


def _prepend_var(terms):
    return {(0,) + m: c for m, c in terms.items()}


def _strip_var(terms):
    return {m[1:]: c for m, c in terms.items()}


def _exact_div(p, f, key):
    """Exact division of ambient polynomials; raises if not divisible."""
    work = dict(p)
    out = {}
    lmf, lcf = engine.leading(f, key)
    while work:
        m, c = engine.leading(work, key)
        if not engine.mono_divides(lmf, m):
            raise DivisorForgeError("inexact polynomial division")
        q = engine.mono_div(m, lmf)
        coeff = c / lcf
        out[q] = coeff
        for gm, gc in f.items():
            t = engine.mono_mul(gm, q)
            s = work.get(t, Fraction(0)) - gc * coeff
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return out


# ---------------------------------------------------------------------------
# convenience constructors

def ideal(ring, *gens):
    return Ideal(ring, list(gens))


def unit_ideal(ring):
    return Ideal(ring, [ring.one()])


def irrelevant_ideal(ring):
    """Ideal of all variables (the positive-degree elements for positive gradings)."""
    return Ideal(ring, ring.variables())


# ---------------------------------------------------------------------------
# factorization of ring elements

def factor_polynomial(f):
    """Irreducible factorization of an ambient representative over QQ.

    Returns (unit, [(Polynomial, multiplicity), ...]); constants give an
    empty list.
    """
    if not f.terms:
        raise DivisorForgeError("cannot factor zero")
    unit, factors = factorization.factor_terms(
        f.terms, f.ring.nvars, f.ring.key)
    return unit, [(Polynomial(f.ring, d), m) for d, m in factors]


# ---------------------------------------------------------------------------
# primality certificate and minimal prime decomposition

def _subst(p, i, num, den_coeff):
    """Substitute variable i := num / den_coeff into term dict p.

    num is a term dict, den_coeff a nonzero Fraction; clearing denominators
    is unnecessary because coefficients are exact rationals.
    """
    n = len(next(iter(p))) if p else 0
    by_power = {}
    for m, c in p.items():
        e = m[i]
        rest = m[:i] + (0,) + m[i + 1 :]
        by_power.setdefault(e, {})[rest] = by_power.setdefault(e, {}).get(
            rest, Fraction(0)) + c
    out = {}
    ratio = {m: c / den_coeff for m, c in num.items()}
    for e, part in sorted(by_power.items()):
        piece = {m: c for m, c in part.items() if c}
        if e:
            piece = engine.p_mul(piece, engine.p_pow(ratio, e)) if piece else {}
        out = engine.p_add(out, piece)
    return out


def _solvable_variable(p, nvars):
    """Return (i, coeff, rest) if p = coeff*x_i + rest with x_i absent from rest."""
    for i in range(nvars):
        lin = None
        ok = True
        for m, c in p.items():
            if m[i] == 0:
                continue
            if m[i] == 1 and not any(m[j] for j in range(nvars) if j != i):
                lin = c
            else:
                ok = False
                break
        if ok and lin is not None:
            rest = {m: c for m, c in p.items() if m[i] == 0}
            return i, lin, rest
    return None


def _certify_prime(ring, gb):
    """Triangular-substitution primality certificate on an ambient GB.

    Returns ('prime', None), ('split', [factor dicts]) when a substitution
    exposes a factorization usable for splitting, or ('fail', None).
    """
    n = ring.nvars
    polys = [dict(g) for g in gb]
    while True:
        polys = [p for p in polys if p]
        if any(all(not any(m) for m in p) for p in polys):
            return ("unit", None)
        if not polys:
            return ("prime", None)
        if len(polys) == 1:
            _, factors = factorization.factor_terms(polys[0], n, ring.key)
            if len(factors) == 1 and factors[0][1] == 1:
                return ("prime", None)
            return ("split", [f for f, _ in factors])
        solved = None
        for idx, p in enumerate(polys):
            hit = _solvable_variable(p, n)
            if hit is not None:
                solved = (idx, hit)
                break
        if solved is None:
            return ("fail", None)
        idx, (i, coeff, rest) = solved
        num = engine.p_neg(rest)
        nxt = []
        for j, q in enumerate(polys):
            if j == idx:
                continue
            nxt.append(_subst(q, i, num, coeff))
        # a substitution may expose reducibility of a survivor
        polys = nxt
        split = []
        for q in polys:
            if q and any(any(m) for m in q):
                _, factors = factorization.factor_terms(q, n, ring.key)
                if len(factors) > 1 or (factors and factors[0][1] > 1):
                    split = [f for f, _ in factors]
                    break
        if split:
            return ("split", split)


def _decompose(I, seen=None):
    """All primes obtainable by recursive splitting of I; raises when stuck."""
    seen = seen if seen is not None else set()
    if I.key in seen:
        return []
    seen.add(I.key)
    if I.is_unit():
        return []
    gb = I.groebner
    # splitting on reducible GB elements
    for g in gb:
        _, factors = factorization.factor_terms(g, I.ring.nvars, I.ring.key)
        distinct = [f for f, _ in factors]
        if len(distinct) >= 2:
            return _branch(I, distinct, seen)
        if len(distinct) == 1 and factors[0][1] >= 2:
            p = Polynomial(I.ring, distinct[0])
            if not I.contains(p.terms):
                return _decompose(Ideal(I.ring, list(I.gens) + [p]), seen)
    verdict, data = _certify_prime(I.ring, gb)
    if verdict == "unit":
        return []
    if verdict == "prime":
        return [I]
    if verdict == "split":
        usable = [f for f in data if not I.contains(f)]
        if len(usable) == len(data) and len(data) >= 2:
            return _branch(I, data, seen)
    # bounded random combinations of the quotient generators
    rng = random.Random(0xD1F0)
    qgens = I.quotient_gens()
    for _ in range(25):
        combo = I.ring.zero()
        for q in qgens:
            combo = combo + q * rng.randint(-3, 3)
        if combo.is_zero() or not combo.terms:
            continue
        _, factors = factorization.factor_terms(
            combo.terms, I.ring.nvars, I.ring.key)
        distinct = [f for f, _ in factors]
        if len(distinct) >= 2 and all(not I.contains(f) for f in distinct):
            return _branch(I, distinct, seen)
    raise DecompositionIncomplete(
        "cannot split or certify component %r" % (I,))


def _branch(I, factor_dicts, seen):
    out = {}
    for f in factor_dicts:
        p = Polynomial(I.ring, f)
        branch = Ideal(I.ring, list(I.gens) + [p])
        for P in _decompose(branch, seen):
            out[P.key] = P
    return list(out.values())


def minimal_height_one_primes(I):
    """Minimal height-one primes of a nonzero ideal, canonically sorted.

    In a normal domain every height-one prime containing I is minimal over
    it, so the recursive splitting may safely over-cover; components of
    height >= 2 are discarded.  Raises DecompositionIncomplete rather than
    ever returning a wrong answer.
    """
    if I.is_zero():
        raise DivisorForgeError("decomposition of the zero ideal")
    comps = _decompose(I)
    out = {}
    for P in comps:
        if P.height() == 1:
            canon = Ideal(I.ring, list(P.quotient_gens()))
            out[canon.key] = canon
    return sorted(out.values(), key=lambda P: P.key)


def certify_prime(I):
    """True if the scoped certificate shows I is prime; False means unknown."""
    verdict, _ = _certify_prime(I.ring, I.groebner)
    if verdict != "prime":
        return False
    for g in I.groebner:
        _, factors = factorization.factor_terms(g, I.ring.nvars, I.ring.key)
        if len(factors) != 1 or factors[0][1] != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# symbolic powers

def symbolic_power(P, n):
    """n-th symbolic power of a height-one prime: reflexive hull of the
    bracket power, which agrees with the true power in codimension one."""
    n = int(n)
    if n < 1:
        raise DivisorForgeError("symbolic power needs n >= 1")
    if P.height() != 1:
        raise HeightNotOne("symbolic powers here require a height-one prime")
    cached = P._symbolic_cache.get(n)
    if cached is None:
        from .fractional import reflexify

        if n == 1:
            cached = P
        else:
            cached = reflexify(P.bracket_power(n))
        P._symbolic_cache[n] = cached
    return cached


def max_symbolic_containment(I, P):
    """Largest n with I contained in the n-th symbolic power of P (0 if I not in P)."""

    def fits(n):
        S = symbolic_power(P, n)
        return all(S.contains(g.terms) for g in I.quotient_gens())

    if not fits(1):
        return 0
    lo, hi = 1, 2
    while fits(hi):
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# graded pieces

def monomials_of_multidegree(ring, target):
    """All exponent tuples e with grading*e == target, in deterministic order."""
    w = ring.grading.require_positive()
    A = ring.grading.rows
    k = len(A)
    target = tuple(int(t) for t in target)
    budget = sum(wi * ti for wi, ti in zip(w, target))
    if budget < 0:
        return []
    weights = [
        sum(w[i] * A[i][j] for i in range(k)) for j in range(ring.nvars)
    ]
    out = []
    e = [0] * ring.nvars

    def rec(j, remaining):
        if j == ring.nvars:
            if remaining == 0 and ring.grading.degree(tuple(e)) == target:
                out.append(tuple(e))
            return
        top = remaining // weights[j]
        for v in range(top + 1):
            e[j] = v
            rec(j + 1, remaining - v * weights[j])
        e[j] = 0

    rec(0, budget)
    return out


def graded_piece_basis(I, degree):
    """Vector-space basis of the degree component of I inside R.

    Spans monomial multiples of the quotient-presented generators, reduces
    to normal forms, and Gauss-eliminates over the standard monomials of the
    ambient degree piece.  Deterministic ordering by leading monomial.
    """
    ring = I.ring
    if isinstance(degree, int):
        degree = (degree,) * ring.grading.ncomponents
    degree = tuple(int(d) for d in degree)
    if len(degree) != ring.grading.ncomponents:
        raise DivisorForgeError("multidegree has wrong length")
    lts = [engine.leading(g, ring.key)[0] for g in ring.quotient_gb]
    std = [
        m for m in monomials_of_multidegree(ring, degree)
        if not any(engine.mono_divides(lt, m) for lt in lts)
    ]
    std.sort(key=ring.key, reverse=True)
    col = {m: i for i, m in enumerate(std)}
    rows = []
    for g in I.quotient_gens():
        gdeg = g.multidegree()
        if gdeg is None:
            raise DivisorForgeError(
                "graded piece of an ideal with inhomogeneous generators")
        shift = tuple(d - gd for d, gd in zip(degree, gdeg))
        for m in monomials_of_multidegree(ring, shift):
            prod = ring.normal_form_raw(
                engine.p_mul({m: Fraction(1)}, g.nf_terms()))
            if prod:
                vec = [Fraction(0)] * len(std)
                for mm, c in prod.items():
                    vec[col[mm]] = c
                rows.append(vec)
    basis_rows = _rref(rows)
    out = []
    for vec in basis_rows:
        terms = {std[i]: c for i, c in enumerate(vec) if c}
        out.append(Polynomial(ring, terms))
    return out


def _rref(rows):
    """Reduced row echelon form over the rationals; returns nonzero rows."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [row for row in rows[:r]]
