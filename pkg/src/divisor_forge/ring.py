"""Quotient rings of multigraded polynomial rings over the rationals.

A ring is fixed once at construction: variable names, a grading matrix and
a defining ideal whose reduced Groebner basis (graded reverse lexicographic
order, declared variable order) is computed eagerly.  Elements are stored
as ambient representatives; `normal_form` gives the unique canonical
representative modulo the defining ideal.
"""

from fractions import Fraction
from itertools import product

from . import engine, parsing
from .engine import grevlex_key
from .errors import DivisorForgeError, GradingNotPositive, RingMismatch


class Grading:
    """Integer degree matrix: one row per grading component, one column per variable."""

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise DivisorForgeError("grading needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DivisorForgeError("ragged grading matrix")
        self.rows = rows
        self.ncomponents = len(rows)
        self.nvars = n

    @classmethod
    def standard(cls, nvars):
        return cls([(1,) * nvars])

    def degree(self, exps):
        return tuple(sum(a * e for a, e in zip(row, exps)) for row in self.rows)

    def positivity_witness(self):
        """Integer row vector w with w*A positive in every column, or None.

        Searched over small non-negative combinations of the rows; enough for
        desk-scale gradings.
        """
        for w in product(range(5), repeat=self.ncomponents):
            if not any(w):
                continue
            cols = [
                sum(w[i] * self.rows[i][j] for i in range(self.ncomponents))
                for j in range(self.nvars)
            ]
            if all(c > 0 for c in cols):
                return w
        return None

    def require_positive(self):
        w = self.positivity_witness()
        if w is None:
            raise GradingNotPositive(
                "no positive combination of grading rows found")
        return w

    def __eq__(self, other):
        return isinstance(other, Grading) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Grading(%r)" % (self.rows,)


class QuotientRing:
    """QQ[x_1..x_n]/I with a fixed grevlex order and cached defining GB."""

    def __init__(self, names, relations=(), grading=None):
        names = tuple(names)
        if not names:
            raise DivisorForgeError("need at least one variable")
        if len(set(names)) != len(names):
            raise DivisorForgeError("duplicate variable names: %r" % (names,))
        self.names = names
        self.nvars = len(names)
        self.grading = grading or Grading.standard(self.nvars)
        if self.grading.nvars != self.nvars:
            raise DivisorForgeError("grading has wrong number of columns")
        self.key = grevlex_key
        self.defining = ()
        self.quotient_gb = []
        raw = []
        for rel in relations:
            if isinstance(rel, str):
                raw.append(polynomial(self, rel).terms)
            elif isinstance(rel, Polynomial):
                raw.append(rel.terms)
            else:
                raw.append(dict(rel))
        self.defining = tuple(
            engine.canonical(g, self.key) for g in raw if g)
        self.quotient_gb = engine.buchberger(raw, self.key)
        self._dim = None

    # -- basics ------------------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: Fraction(1)})

    def variable(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    def normal_form_raw(self, terms):
        return engine.normal_form(terms, self.quotient_gb, self.key)

    def dimension(self):
        """Krull dimension of the ring itself."""
        if self._dim is None:
            self._dim = engine.lt_dimension(
                self.quotient_gb, self.nvars, self.key)
        return self._dim

    def is_free(self):
        return not self.quotient_gb

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, QuotientRing)
            and self.names == other.names
            and self.grading == other.grading
            and self.defining == other.defining
        )

    def __hash__(self):
        return hash((self.names, self.grading, self.defining))

    def __repr__(self):
        base = "QQ[%s]" % ",".join(self.names)
        if self.quotient_gb:
            rels = ", ".join(
                format_terms(g, self.names, self.key) for g in self.quotient_gb)
            return "%s/(%s)" % (base, rels)
        return base


class Polynomial:
    """Element of a quotient ring, stored as an ambient representative."""

    __slots__ = ("ring", "terms", "_nf")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._nf = None

    # -- canonical form ----------------------------------------------------

    def normal_form(self):
        """Unique representative modulo the defining ideal (idempotent)."""
        if self._nf is None:
            nf = self.ring.normal_form_raw(self.terms)
            self._nf = nf
        return Polynomial(self.ring, self._nf)

    def nf_terms(self):
        if self._nf is None:
            self.normal_form()
        return self._nf

    def is_zero(self):
        return not self.nf_terms()

    def is_constant(self):
        nf = self.nf_terms()
        return all(not any(m) for m in nf)

    def is_unit(self):
        return self.is_constant() and bool(self.nf_terms())

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(
                self.ring, {(0,) * self.ring.nvars: c} if c else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, engine.p_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, engine.p_sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, engine.p_sub(other.terms, self.terms))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(self.ring, engine.p_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(self.ring, engine.p_neg(self.terms))

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise DivisorForgeError("negative polynomial power")
        if n == 0:
            return self.ring.one()
        return Polynomial(self.ring, engine.p_pow(self.terms, n))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            return NotImplemented
        return self.nf_terms() == other.nf_terms()

    def __hash__(self):
        return hash((self.ring, engine.canonical(self.nf_terms(), self.ring.key)))

    # -- degrees -------------------------------------------------------------

    def multidegree(self):
        """Common multidegree of all terms of the normal form; None if mixed or zero."""
        nf = self.nf_terms()
        degs = {self.ring.grading.degree(m) for m in nf}
        if len(degs) != 1:
            return None
        return degs.pop()

    def total_degree(self):
        return engine.total_degree(self.nf_terms())

    def __repr__(self):
        return format_terms(self.terms, self.ring.names, self.ring.key)


class RingMap:
    """Ring homomorphism given by images of the source variables.

    Well-definedness (defining relations map to zero) is verified at
    construction.
    """

    def __init__(self, source, target, images):
        images = list(images)
        if len(images) != source.nvars:
            raise DivisorForgeError(
                "need %d images, got %d" % (source.nvars, len(images)))
        fixed = []
        for f in images:
            if isinstance(f, str):
                f = polynomial(target, f)
            if f.ring != target:
                raise RingMismatch("image not in target ring")
            fixed.append(f)
        self.source = source
        self.target = target
        self.images = fixed
        for g in source.quotient_gb:
            if not self._apply_raw(g).is_zero():
                raise DivisorForgeError(
                    "map is not well defined: defining relation %s "
                    "does not map to zero"
                    % format_terms(g, source.names, source.key))

    def _apply_raw(self, terms):
        out = self.target.zero()
        for m, c in terms.items():
            val = Polynomial(
                self.target, {(0,) * self.target.nvars: Fraction(c)})
            for i, e in enumerate(m):
                if e:
                    val = val * (self.images[i] ** e)
            out = out + val
        return out

    def __call__(self, f):
        if f.ring != self.source:
            raise RingMismatch("argument not in source ring")
        return self._apply_raw(f.terms).normal_form()

    @classmethod
    def identity(cls, ring):
        return cls(ring, ring, ring.variables())

    def __repr__(self):
        imgs = ", ".join(repr(f) for f in self.images)
        return "map(%r -> %r, {%s})" % (self.source, self.target, imgs)


# ---------------------------------------------------------------------------
# parsing and printing

def polynomial(ring, text):
    """Parse polynomial syntax (`+ - * / ^`, integer literals) in a ring."""
    node = parsing.parse_expression(text)
    return _eval_poly(node, ring)


def _eval_poly(node, ring):
    kind = node[0]
    if kind == "int":
        return ring.one() * node[1]
    if kind == "name":
        try:
            i = ring.names.index(node[1])
        except ValueError:
            raise DivisorForgeError(
                "unknown variable %r in %r" % (node[1], ring)) from None
        return ring.variable(i)
    if kind == "neg":
        return -_eval_poly(node[1], ring)
    if kind == "binop":
        op, a, b = node[1], node[2], node[3]
        x = _eval_poly(a, ring)
        y = _eval_poly(b, ring)
        if op == "+":
            return x + y
        if op == "-":
            return x - y
        if op == "*":
            return x * y
        if op == "^":
            if not y.is_constant():
                raise DivisorForgeError("exponent must be an integer")
            c = y.nf_terms().get((0,) * ring.nvars, Fraction(0))
            if c.denominator != 1:
                raise DivisorForgeError("exponent must be an integer")
            return x ** int(c)
        if op == "/":
            if not y.is_constant():
                raise DivisorForgeError(
                    "division only by nonzero rational constants")
            c = y.nf_terms().get((0,) * ring.nvars, Fraction(0))
            if not c:
                raise DivisorForgeError("division by zero")
            return x * (Fraction(1) / c)
    raise DivisorForgeError("unsupported syntax in polynomial")


def _format_mono(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_terms(terms, names, key):
    """Print a term dict in decreasing monomial order."""
    if not terms:
        return "0"
    chunks = []
    for m in sorted(terms, key=key, reverse=True):
        c = terms[m]
        mono = _format_mono(m, names)
        if mono:
            if c == 1:
                body = mono
            elif c == -1:
                body = "-" + mono
            else:
                body = "%s*%s" % (c, mono)
        else:
            body = str(c)
        chunks.append(body)
    out = chunks[0]
    for body in chunks[1:]:
        if body.startswith("-"):
            out += " - " + body[1:]
        else:
            out += " + " + body
    return out
