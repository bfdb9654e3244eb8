"""2-bridge knots b(u, v): Alexander polynomial, signature, classification."""
from math import gcd

from .arith import mod_inverse
from .errors import InvalidParameters
from .polynomials import LaurentPoly1


def _check(u, v):
    if u < 1 or u % 2 == 0:
        raise InvalidParameters(f"u must be odd and positive, got {u}")
    if gcd(u, v) != 1:
        raise InvalidParameters(f"gcd({u}, {v}) != 1")


def odd_representative(u, v):
    """The odd b with |b| < u and b = v mod u (b = 0 when u = 1)."""
    _check(u, v)
    if u == 1:
        return 0
    b = v % u
    return b if b % 2 else b - u


def epsilon(i, u, v):
    return -1 if (i * v // u) % 2 else 1


def epsilon_sequence(u, v, n):
    """(eps_1, ..., eps_n) with eps_i = (-1)^floor(i v / u)."""
    return tuple(epsilon(i, u, v) for i in range(1, n + 1))


def signature(u, v):
    if u == 1:
        return 0
    b = odd_representative(u, v)
    return sum(epsilon(i, u, b) for i in range(1, u))


def alexander_two_bridge(u, v):
    """Symmetric Alexander polynomial of b(u, v) normalised by Delta(1) = 1."""
    _check(u, v)
    if u == 1:
        return LaurentPoly1.monomial()
    b = odd_representative(u, v)
    terms = {}
    e = 0
    for i in range(u):
        if i:
            e += epsilon(i, u, b)
        terms[e] = terms.get(e, 0) + (-1) ** i
    sigma = sum(epsilon(i, u, b) for i in range(1, u))
    poly = LaurentPoly1(terms).shift(-sigma // 2)
    # sigma is even because u - 1 terms of +-1 with u odd
    return poly


def two_bridge_equivalent(u1, v1, u2, v2):
    """Oriented S^3 classification: u equal and v = v'^{+-1} mod u."""
    _check(u1, v1)
    _check(u2, v2)
    if u1 != u2:
        return False
    if u1 == 1:
        return True
    a, b = v1 % u1, v2 % u1
    return a == b or a == mod_inverse(b, u1)


def shrink(u, v):
    """(u - 2v, v mod (u - 2v)), the second family of 2-bridge pieces."""
    u2 = u - 2 * v
    return u2, (v % u2 if u2 > 1 else 0)
