"""Divisor <-> fractional ideal correspondence, canonical divisors,
multidegree element search."""

import random
from fractions import Fraction

import pytest

from divisor_forge import (
    FractionalIdeal,
    NotCompleteIntersection,
    WeilDivisor,
    canonical_divisor,
    divisor_of_fractional_ideal,
    divisor_with_section,
    effective_ideal,
    find_element_of_degree,
    ideal,
    polynomial,
    sheaf_of,
)
from divisor_forge.correspondence import laurent_monomial


def test_effective_ideal_examples(cone3):
    P = ideal(cone3, "x", "z")
    D = WeilDivisor.from_primes([1], [P])
    assert effective_ideal(D) == P
    assert effective_ideal(2 * D) == ideal(cone3, "x")
    assert effective_ideal(WeilDivisor.zero(cone3)).is_unit()


def test_sheaf_of_ruling(cone3):
    D = WeilDivisor.from_primes([1], [ideal(cone3, "x", "z")])
    F = sheaf_of(D)
    # O(D) = (1/x)(x, z)
    assert F.denominator == polynomial(cone3, "x")
    assert F.numerator == ideal(cone3, "x", "z")


def test_sheaf_of_effective_and_antieffective(cone3):
    P = ideal(cone3, "x", "z")
    D = WeilDivisor.from_primes([1], [P])
    # O(-D) is the ideal itself
    F = sheaf_of(-D)
    assert F.denominator.is_unit()
    assert F.numerator == P
    # O(D) * O(-D) reflexifies to R exactly when D is Cartier; here it is not
    prod = sheaf_of(D).product(F)
    assert prod.equals_as_reflexive(FractionalIdeal.unit(cone3))


def test_round_trip_is_negation_ungraded(cone3):
    D = WeilDivisor.from_primes([1], [ideal(cone3, "x", "z")])
    E = divisor_of_fractional_ideal(sheaf_of(D))
    assert E.multiset() == (-D).multiset()


def test_round_trip_graded_is_identity(cone3, cone4):
    for ring, gens in ((cone3, ("x", "z")), (cone4, ("x", "u"))):
        D = WeilDivisor.from_primes([1], [ideal(ring, *gens)])
        E = divisor_of_fractional_ideal(sheaf_of(D), graded=True)
        assert E.multiset() == D.multiset()


def test_round_trip_mixed_divisor(cone4):
    D = WeilDivisor.from_primes(
        [2, -1], [ideal(cone4, "x", "u"), ideal(cone4, "x", "v")])
    E = divisor_of_fractional_ideal(sheaf_of(D), graded=True)
    assert E.multiset() == D.multiset()


def test_sheaf_monoid_law_randomized(cone3, cone4):
    """O(D+E) = (O(D) * O(E))** as reflexive fractional ideals on >= 50
    random pairs."""
    rng = random.Random(808)
    pools = {
        cone3: [ideal(cone3, "x", "z"), ideal(cone3, "y", "z")],
        cone4: [ideal(cone4, "x", "u"), ideal(cone4, "x", "v"),
                ideal(cone4, "y", "u")],
    }
    done = 0
    while done < 50:
        ring = cone3 if done % 2 == 0 else cone4
        pool = pools[ring]
        coeffs_d = [rng.randint(-2, 2) for _ in pool]
        coeffs_e = [rng.randint(-2, 2) for _ in pool]
        if not any(coeffs_d) or not any(coeffs_e):
            continue
        D = WeilDivisor.from_primes(coeffs_d, pool)
        E = WeilDivisor.from_primes(coeffs_e, pool)
        lhs = sheaf_of(D + E)
        rhs = sheaf_of(D).product(sheaf_of(E))
        assert lhs.equals_as_reflexive(rhs)
        done += 1


def test_divisor_with_section(cone3):
    # sections of O(D), D = Div(x,z): the section z/x cuts out Div(y,z)
    D = WeilDivisor.from_primes([1], [ideal(cone3, "x", "z")])
    F = sheaf_of(D)
    S = divisor_with_section(F, polynomial(cone3, "z"), polynomial(cone3, "x"))
    assert S.divisor.is_effective()
    assert S.divisor.multiset() == frozenset(
        [(Fraction(1), ideal(cone3, "y", "z").key)])
    # the section 1 recovers D itself
    S2 = divisor_with_section(F, cone3.one())
    assert S2.divisor.multiset() == D.multiset()


def test_find_element_of_degree(cone4, weighted):
    e = find_element_of_degree(cone4, (3,))
    assert sum(e) == 3
    ew = find_element_of_degree(weighted, (2, 1))
    assert ew == (0, 1)
    num, den = laurent_monomial(weighted, ew)
    assert num == polynomial(weighted, "y") and den.is_unit()
    # negative degrees force genuine fractions
    eneg = find_element_of_degree(cone4, (-2,))
    assert sum(eneg) == -2


def test_canonical_divisor_cones(cone3, cone3b):
    # quadric cone: K = -2 * (ruling) in both presentations
    K = canonical_divisor(cone3)
    assert len(K.terms) == 1
    ((P, (c, _)),) = list(K.terms.items())
    assert c == -2 and P.height() == 1
    K2 = canonical_divisor(cone3b)
    total = sum(coeff for coeff, _ in K2.terms.values())
    assert total == -2


def test_canonical_divisor_plane(plane):
    K = canonical_divisor(plane)
    # A^2: K = -div of a degree-2 monomial (a choice of coordinate lines)
    assert sum(c for c, _ in K.terms.values()) == -2
    assert all(c < 0 for c, _ in K.terms.values())


def test_canonical_divisor_needs_complete_intersection():
    from divisor_forge import QuotientRing

    # the cone over the twisted quartic-like presentation: 3 relations,
    # codimension 2 -- not a complete intersection
    ring = QuotientRing(("x", "y", "z", "w"),
                        ("x*z - y^2", "y*w - z^2", "x*w - y*z"))
    with pytest.raises(NotCompleteIntersection):
        canonical_divisor(ring)
