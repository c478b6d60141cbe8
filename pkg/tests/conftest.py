"""Shared rings and helpers for the test suite.

Rings are session-scoped so Groebner caches are shared across tests.
"""

import pytest

from divisor_forge import Grading, Ideal, QuotientRing


@pytest.fixture(scope="session")
def plane():
    """QQ[x,y], a regular two-dimensional base case."""
    return QuotientRing(("x", "y"))


@pytest.fixture(scope="session")
def space():
    """QQ[x,y,z,w], ambient for the harder decomposition cases."""
    return QuotientRing(("x", "y", "z", "w"))


@pytest.fixture(scope="session")
def cone4():
    """QQ[x,y,u,v]/(xy-uv): affine cone over P^1 x P^1."""
    return QuotientRing(("x", "y", "u", "v"), ("x*y - u*v",))


@pytest.fixture(scope="session")
def cone3():
    """QQ[x,y,z]/(xy-z^2): the quadric cone, A_1 singularity."""
    return QuotientRing(("x", "y", "z"), ("x*y - z^2",))


@pytest.fixture(scope="session")
def cone3b():
    """QQ[x,y,z]/(x^2-yz): the quadric cone in its other presentation."""
    return QuotientRing(("x", "y", "z"), ("x^2 - y*z",))


@pytest.fixture(scope="session")
def elliptic():
    """QQ[x,y,z]/(y^2 z - x(x+z)(x-z)): a smooth plane cubic."""
    return QuotientRing(("x", "y", "z"), ("y^2*z - x*(x+z)*(x-z)",))


@pytest.fixture(scope="session")
def weighted():
    """QQ[x,y] with a nonstandard positive multigrading."""
    return QuotientRing(("x", "y"), (), Grading([(1, 2), (0, 1)]))


def mk_ideal(ring, *gens):
    return Ideal(ring, list(gens))
