"""Weil divisors: formal sums of height-one primes keyed by reduced GBs.

A divisor stores a map from canonical prime keys to (coefficient, display
ideal).  The coefficient tier is 'Z' or 'Q'; scaling by a non-integer (or
any Fraction) widens to 'Q', and coercion back checks integrality.
"""

import math
from fractions import Fraction

from .errors import (
    DivisorForgeError,
    HeightNotOne,
    NonIntegralCoercion,
    PrimalityUncertain,
    RingMismatch,
)
from .ideals import (
    Ideal,
    certify_prime,
    max_symbolic_containment,
    minimal_height_one_primes,
)
from .ring import Polynomial


class WeilDivisor:
    """Formal sum of height-one prime divisors with Z or Q coefficients."""

    def __init__(self, ring, terms=None, tier="Z", _assumed=frozenset()):
        self.ring = ring
        self.terms = dict(terms or {})  # canonical Ideal -> (Fraction, display Ideal)
        for P, (c, _) in list(self.terms.items()):
            if not c:
                del self.terms[P]
        self.tier = tier
        self.assumed_primes = frozenset(_assumed)
        self.cache = {}

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring, tier="Z"):
        return cls(ring, {}, tier)

    @classmethod
    def from_primes(cls, coeffs, primes, rational=False, assume_prime=False):
        """Divisor from parallel lists of coefficients and prime ideals."""
        if len(coeffs) != len(primes):
            raise DivisorForgeError("coefficient and prime lists differ in length")
        if not primes:
            raise DivisorForgeError("empty prime list")
        ring = primes[0].ring
        terms = {}
        assumed = set()
        tier = "Z"
        for c, P in zip(coeffs, primes):
            c = Fraction(c)
            if c.denominator != 1:
                tier = "Q"
            if P.ring != ring:
                raise RingMismatch("primes from different rings")
            if P.is_zero() or P.is_unit():
                raise DivisorForgeError("prime must be nonzero and proper")
            canon = Ideal(ring, list(P.quotient_gens()))
            if canon.height() != 1:
                raise HeightNotOne("component %r has height %d"
                                   % (P, canon.height()))
            if not certify_prime(canon):
                if not assume_prime:
                    raise PrimalityUncertain(
                        "cannot certify %r prime; pass assume_prime=True "
                        "to assert it" % (P,))
                assumed.add(canon)
            old = terms.get(canon, (Fraction(0), P))
            terms[canon] = (old[0] + c, old[1])
        if rational:
            tier = "Q"
        return cls(ring, terms, tier, assumed)

    @classmethod
    def of_element(cls, f):
        """Divisor of a ring element: sum of ord_P(f) over the height-one
        primes of (f); units give the zero divisor."""
        if isinstance(f, Polynomial) and f.is_zero():
            raise DivisorForgeError("divisor of zero")
        if f.is_unit():
            return cls.zero(f.ring)
        return cls.of_ideal(Ideal(f.ring, [f]))

    @classmethod
    def of_ideal(cls, I):
        """Effective divisor of an ideal in codimension one."""
        if I.is_zero():
            raise DivisorForgeError("divisor of the zero ideal")
        terms = {}
        for P in minimal_height_one_primes(I):
            n = max_symbolic_containment(I, P)
            if n:
                terms[P] = (Fraction(n), P)
        return cls(I.ring, terms)

    @classmethod
    def of_fraction(cls, num, den):
        """Divisor of num/den in the fraction field."""
        return cls.of_element(num) - cls.of_element(den)

    # -- accessors -----------------------------------------------------------

    def support(self):
        return sorted(self.terms, key=lambda P: P.key)

    def coefficient_of(self, P):
        canon = Ideal(self.ring, list(P.quotient_gens()))
        entry = self.terms.get(canon)
        return entry[0] if entry else Fraction(0)

    def is_zero(self):
        return not self.terms

    def is_effective(self):
        return all(c >= 0 for c, _ in self.terms.values())

    def is_integral(self):
        return all(c.denominator == 1 for c, _ in self.terms.values())

    def multiset(self):
        """Canonical comparison form: frozenset of (coefficient, prime key)."""
        return frozenset((c, P.key) for P, (c, _) in self.terms.items())

    def sorted_terms(self):
        """Display order: coefficient descending, then key lexicographic."""
        return sorted(
            self.terms.items(), key=lambda kv: (-kv[1][0], kv[0].key))

    # -- group operations -----------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("divisors on different rings")

    def __add__(self, other):
        if not isinstance(other, WeilDivisor):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for P, (c, disp) in other.terms.items():
            old = terms.get(P)
            s = (old[0] + c) if old else c
            if s:
                terms[P] = (s, old[1] if old else disp)
            else:
                terms.pop(P, None)
        tier = "Q" if "Q" in (self.tier, other.tier) else "Z"
        return WeilDivisor(self.ring, terms, tier,
                           self.assumed_primes | other.assumed_primes)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, WeilDivisor):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Scale coefficients; Fraction scalars widen the tier to Q."""
        widen = isinstance(c, Fraction)
        c = Fraction(c)
        terms = {
            P: (c * k, disp) for P, (k, disp) in self.terms.items() if c * k
        }
        tier = "Q" if (widen or self.tier == "Q") else "Z"
        return WeilDivisor(self.ring, terms, tier, self.assumed_primes)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    # -- tier handling ---------------------------------------------------------

    def to_rational_tier(self):
        return WeilDivisor(self.ring, self.terms, "Q", self.assumed_primes)

    def to_integer_tier(self):
        if not self.is_integral():
            raise NonIntegralCoercion(
                "divisor has non-integer coefficients: %r" % self)
        return WeilDivisor(self.ring, self.terms, "Z", self.assumed_primes)

    def apply_to_coefficients(self, fn, tier=None):
        terms = {}
        for P, (c, disp) in self.terms.items():
            v = Fraction(fn(c))
            if v:
                terms[P] = (v, disp)
        if tier is None:
            tier = "Q" if any(
                c.denominator != 1 for c, _ in terms.values()) else self.tier
        return WeilDivisor(self.ring, terms, tier, self.assumed_primes)

    def floor(self):
        return self.apply_to_coefficients(math.floor, tier="Z")

    def ceiling(self):
        return self.apply_to_coefficients(math.ceil, tier="Z")

    def positive_part(self):
        return self.apply_to_coefficients(lambda c: max(c, 0), tier=self.tier)

    def negative_part(self):
        """Effective divisor of the negated negative coefficients."""
        return self.apply_to_coefficients(lambda c: max(-c, 0), tier=self.tier)

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, WeilDivisor):
            return NotImplemented
        return (
            self.ring == other.ring
            and {P: c for P, (c, _) in self.terms.items()}
            == {P: c for P, (c, _) in other.terms.items()}
        )

    def __hash__(self):
        return hash((self.ring, self.multiset()))

    def __repr__(self):
        if not self.terms:
            return "0"
        chunks = []
        for P, (c, disp) in self.sorted_terms():
            gens = ", ".join(repr(g) for g in disp.minimal_gens())
            body = "Div(%s)" % gens
            if c == 1:
                chunks.append(body)
            else:
                chunks.append("%s*%s" % (c, body))
        return " + ".join(chunks)

    def to_json(self):
        return {
            "ring": repr(self.ring),
            "tier": self.tier,
            "terms": [
                {
                    "coeff": str(c),
                    "prime": [repr(g) for g in P.minimal_gens()],
                }
                for P, (c, _) in self.sorted_terms()
            ],
        }
