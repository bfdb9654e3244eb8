"""Sparse exact Laurent polynomials and group-ring elements over Z + Z/d."""
from collections import defaultdict

from .errors import NonExactDivision, TorsionMismatch


def _clean(terms):
    return {k: c for k, c in terms.items() if c}


class LaurentPoly1:
    """Laurent polynomial in one variable t, stored as {exponent: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms = _clean(terms)

    @classmethod
    def monomial(cls, e=0, c=1):
        return cls({e: c})

    @classmethod
    def from_coeffs(cls, coeffs, low=0):
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1.monomial(0, other)
        return isinstance(other, LaurentPoly1) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for e, c in _as1(other).terms.items():
            out[e] += c
        return LaurentPoly1(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as1(other))

    def __rsub__(self, other):
        return _as1(other) - self

    def __mul__(self, other):
        other = _as1(other)
        out = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] += c1 * c2
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = LaurentPoly1.monomial()
        for _ in range(n):
            out = out * self
        return out

    def min_exp(self):
        return min(self.terms)

    def max_exp(self):
        return max(self.terms)

    def span(self):
        return self.max_exp() - self.min_exp() if self.terms else 0

    def shift(self, k):
        return LaurentPoly1({e + k: c for e, c in self.terms.items()})

    def substitute_power(self, n):
        """t -> t^n."""
        out = defaultdict(int)
        for e, c in self.terms.items():
            out[e * n] += c
        return LaurentPoly1(out)

    def reverse(self):
        return self.substitute_power(-1)

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self.terms.items())

    def evaluate_at_one(self):
        return sum(self.terms.values())

    def evaluate_at_minus_one(self):
        return sum(c if e % 2 == 0 else -c for e, c in self.terms.items())

    def is_monomial(self):
        return len(self.terms) == 1

    def is_symmetric(self):
        """Symmetric up to a unit shift: t^k f(t^-1) = f(t) for some k."""
        if not self.terms:
            return True
        s = self.min_exp() + self.max_exp()
        return all(self.terms.get(s - e) == c for e, c in self.terms.items())

    def is_alternating(self):
        """Nonzero coefficients alternate in sign along consecutive exponents."""
        if not self.terms:
            return True
        lo, hi = self.min_exp(), self.max_exp()
        lead = self.terms[lo] > 0
        for e in range(lo, hi + 1):
            c = self.terms.get(e, 0)
            if c == 0:
                return False
            if (c > 0) != (lead == ((e - lo) % 2 == 0)):
                return False
        return True

    def canonical(self):
        """Symmetric representative when one exists, else lowest exponent 0;
        leading coefficient made positive in both cases."""
        if not self.terms:
            return self
        lo, hi = self.min_exp(), self.max_exp()
        if self.is_symmetric() and (lo + hi) % 2 == 0:
            f = self.shift(-(lo + hi) // 2)
        else:
            f = self.shift(-lo)
        if f.terms[f.max_exp()] < 0:
            f = -f
        return f

    def equivalent_up_to_unit(self, other):
        other = _as1(other)
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        k = other.min_exp() - self.min_exp()
        f = self.shift(k)
        return f == other or -f == other

    def divmod_exact(self, other):
        """Exact quotient self / other; raises NonExactDivision otherwise."""
        other = _as1(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return LaurentPoly1()
        olo, ohi = other.min_exp(), other.max_exp()
        lead = other.terms[ohi]
        rem = dict(self.terms)
        quot = {}
        while rem:
            hi = max(rem)
            if hi - ohi < min(rem) - olo:
                raise NonExactDivision("nonzero remainder")
            c, r = divmod(rem[hi], lead)
            if r:
                raise NonExactDivision("non-integral quotient")
            sh = hi - ohi
            quot[sh] = c
            for e, oc in other.terms.items():
                v = rem.get(e + sh, 0) - c * oc
                if v:
                    rem[e + sh] = v
                else:
                    rem.pop(e + sh, None)
        return LaurentPoly1(quot)

    def divides(self, other):
        try:
            _as1(other).divmod_exact(self)
        except NonExactDivision:
            return False
        return True

    def to_json(self):
        return [[e, c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        out = defaultdict(int)
        for e, c in data:
            if not isinstance(e, int) or not isinstance(c, int):
                raise ValueError("exponents and coefficients must be integers")
            out[e] += c
        return cls(out)

    def __repr__(self):
        return f"LaurentPoly1({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            coeff = str(abs(c)) if not mono or abs(c) != 1 else ""
            if mono and coeff:
                coeff += "*"
            if not out:
                out = ("-" if c < 0 else "") + coeff + mono
            else:
                out += (" - " if c < 0 else " + ") + coeff + mono
        return out


def _as1(x):
    if isinstance(x, LaurentPoly1):
        return x
    if isinstance(x, int):
        return LaurentPoly1.monomial(0, x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly1")


class LaurentPoly2:
    """Laurent polynomial in s, t stored as {(i, j): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(dict(terms or {}))

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        return cls({(i, j): c})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for k, c in other.terms.items():
            out[k] += c
        return LaurentPoly2(out)

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self.terms.items()})
        out = defaultdict(int)
        for (a, b), c1 in self.terms.items():
            for (x, y), c2 in other.terms.items():
                out[a + x, b + y] += c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def divide_by_var_minus_one(self, var):
        """Exact quotient by (s - 1) when var == 0, by (t - 1) when var == 1."""
        # group by the other variable, then synthetic division along var
        rows = defaultdict(dict)
        for k, c in self.terms.items():
            rows[k[1 - var]][k[var]] = c
        out = {}
        for other, row in rows.items():
            q = LaurentPoly1(row).divmod_exact(LaurentPoly1({1: 1, 0: -1}))
            for e, c in q.terms.items():
                out[(e, other) if var == 0 else (other, e)] = c
        return LaurentPoly2(out)

    def equivalent_up_to_unit(self, other):
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        a = min(self.terms)
        b = min(other.terms)
        di, dj = b[0] - a[0], b[1] - a[1]
        f = LaurentPoly2({(i + di, j + dj): c for (i, j), c in self.terms.items()})
        return f == other or -f == other

    def to_json(self):
        return [[i, j, c] for (i, j), c in sorted(self.terms.items())]

    def __repr__(self):
        return f"LaurentPoly2({self.to_json()})"


class HalfGrading:
    """Element of (1/2)(Z + Z/d) stored in doubled coordinates (two_a, two_b mod 2d)."""

    __slots__ = ("two_a", "two_b", "d")

    def __init__(self, two_a, two_b, d):
        if d < 1:
            raise ValueError("torsion order must be >= 1")
        self.two_a = two_a
        self.two_b = two_b % (2 * d)
        self.d = d

    def key(self):
        return (self.two_a, self.two_b)

    def is_integral(self):
        return self.two_a % 2 == 0 and self.two_b % 2 == 0

    def __add__(self, other):
        if self.d != other.d:
            raise TorsionMismatch(f"torsion orders {self.d} and {other.d}")
        return HalfGrading(self.two_a + other.two_a, self.two_b + other.two_b, self.d)

    def __neg__(self):
        return HalfGrading(-self.two_a, -self.two_b, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, HalfGrading) and (self.d, self.key()) == (other.d, other.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash((self.d, self.two_a, self.two_b))

    def __repr__(self):
        return f"HalfGrading({self.two_a}/2, {self.two_b}/2 mod {self.d})"


class GroupRingElt:
    """Element of Z[(1/2)(Z + Z/d)]: {(two_a, two_b): coeff} with two_b mod 2d."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        self.d = d
        out = defaultdict(int)
        for (a, b), c in (terms or {}).items():
            out[a, b % (2 * d)] += c
        self.terms = _clean(out)

    def __eq__(self, other):
        return isinstance(other, GroupRingElt) and self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def _check(self, other):
        if self.d != other.d:
            raise TorsionMismatch(f"torsion orders {self.d} and {other.d}")

    def __add__(self, other):
        self._check(other)
        out = defaultdict(int, self.terms)
        for k, c in other.terms.items():
            out[k] += c
        return GroupRingElt(self.d, out)

    def __neg__(self):
        return GroupRingElt(self.d, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElt(self.d, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = defaultdict(int)
        for (a, b), c1 in self.terms.items():
            for (x, y), c2 in other.terms.items():
                out[a + x, b + y] += c1 * c2
        return GroupRingElt(self.d, out)

    __rmul__ = __mul__

    def shift(self, g):
        return GroupRingElt(self.d, {(a + g.two_a, b + g.two_b): c for (a, b), c in self.terms.items()})

    def map_keys(self, fn):
        return GroupRingElt(self.d, {fn(a, b): c for (a, b), c in self.terms.items()})

    def negate_gradings(self):
        return self.map_keys(lambda a, b: (-a, -b))

    def free_projection(self):
        """Image in Z[(1/2)Z] (torsion killed), as a LaurentPoly1 in doubled exponent."""
        out = defaultdict(int)
        for (a, _), c in self.terms.items():
            out[a] += c
        return LaurentPoly1(out)

    def equivalent_up_to_unit(self, other):
        if self.d != other.d:
            return False
        if not self.terms or not other.terms:
            return not self.terms and not other.terms
        a = min(self.terms)
        for b in other.terms:
            da, db = b[0] - a[0], b[1] - a[1]
            f = self.map_keys(lambda x, y: (x + da, y + db))
            if f == other or -f == other:
                return True
        return False

    def to_json(self):
        return [[a, b, c] for (a, b), c in sorted(self.terms.items())]

    def __repr__(self):
        return f"GroupRingElt(d={self.d}, {self.to_json()})"


def group_ring_mul(x, y):
    return x * y
