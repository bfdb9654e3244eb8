"""Integer and rational helpers: continued fractions, Farey sequences, inverses."""
from fractions import Fraction
from math import gcd, floor, ceil

from .errors import NotCoprime


def mod_inverse(q, p):
    """Inverse of q modulo p in [0, p); p = 1 gives 0."""
    if p < 1:
        raise ValueError("modulus must be positive")
    if p == 1:
        return 0
    if gcd(q, p) != 1:
        raise NotCoprime(f"{q} is not invertible mod {p}")
    return pow(q, -1, p)


def ext_gcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def continued_fraction(x):
    """[a0; a1, ..., am] with a_i > 0 for i >= 1 and a_m > 1 when m >= 1."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    terms = []
    while d:
        a = n // d
        terms.append(a)
        n, d = d, n - a * d
    return terms


def evaluate_cf(terms):
    if not terms:
        raise ValueError("empty continued fraction")
    val = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        val = a + 1 / val
    return val


def farey_sequence(n):
    """Reduced fractions in [0, 1] with denominator <= n, increasing."""
    if n < 1:
        raise ValueError("order must be >= 1")
    a, b, c, d = 0, 1, 1, n
    out = [Fraction(0)]
    while c <= n:
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        out.append(Fraction(a, b))
    return out


def farey_neighbours(x, n):
    """Successive terms f- < x < f+ of the order-n Farey sequence around x in (0, 1).

    Raises ValueError when x itself is a term.
    """
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError("slope must lie in (0, 1)")
    if x.denominator <= n:
        raise ValueError(f"{x} is a term of F_{n}")
    lo, hi = Fraction(0), Fraction(1)
    # Stern-Brocot descent, stopping before denominators exceed n
    while True:
        med = Fraction(lo.numerator + hi.numerator, lo.denominator + hi.denominator)
        if med.denominator > n:
            return lo, hi
        if x < med:
            hi = med
        else:
            lo = med


def ceil_div(a, b):
    return -(-a // b)


__all__ = ["Fraction", "gcd", "floor", "ceil", "mod_inverse", "ext_gcd",
           "continued_fraction", "evaluate_cf", "farey_sequence",
           "farey_neighbours", "ceil_div"]
