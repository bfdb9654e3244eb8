"""Dehn surgery on the magic link and 1-bridge braids in solid tori."""
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .arith import ceil_div, ext_gcd, farey_neighbours, mod_inverse
from .errors import (InvalidParameters, NotLensSpace, NotOneBridgeEligible,
                     NotSimple, UnknownCase)
from .knots import (ConstrainedParams, SimpleParams, mirror_constrained,
                    validate_constrained)


def slope(p, q):
    """Reduced surgery slope p/q as a pair with p >= 0 (1/0 allowed)."""
    if p == 0 and q == 0:
        raise InvalidParameters("0/0 is not a slope")
    g = gcd(p, q)
    p, q = p // g, q // g
    if p < 0 or (p == 0 and q < 0):
        p, q = -p, -q
    return (p, q)


def lens_from_magic(s1, s2):
    """(p, q) of the lens space from p1/q1, p2/q2 surgery on the Hopf link components."""
    (p1, q1), (p2, q2) = slope(*s1), slope(*s2)
    # p2 q2' - q2 p2' = -1
    g, x, y = ext_gcd(p2, -q2)
    q2p, p2p = -x, -y
    assert p2 * q2p - q2 * p2p == -1
    p = p1 * p2 - q1 * q2
    q = p1 * p2p - q1 * q2p
    if p == 0:
        raise NotLensSpace("surgery gives S^1 x S^2")
    if p < 0:
        p, q = -p, -q
    return p, q % p


def _mod1(n):
    """Residue modulo 1 as a chirality bit: n >= 0 odd -> 1, even -> 0; the
    parity flips for negative n."""
    return n % 2 if n >= 0 else (n + 1) % 2


def uv_shift(u, v, i):
    """(U, V) of the 2-bridge piece after the twist labelled i in {1,0,-1,-2,'*','#'}."""
    if i == 1:
        return u + 2 * v, v
    if i == 0:
        return u, v
    if i == -1:
        U = u - 2 * v
        if U < 1:
            raise InvalidParameters("needs u > 2v")
        # the stripe-only piece carries no rainbows, so V = 0 when U = 1
        return U, (v % U if U > 1 else 0)
    if i == -2:
        if (u, v) == (3, 1):
            return 1, 1
        U = abs(u - 4 * v)
        sgn = 1 if u - 4 * v > 0 else -1
        V = v * sgn
        return U, (V % U if U > 1 else _mod1(V))
    if i == "*":
        return 3 * u - 4 * v, u - v
    if i == "#":
        return 3 * u - 2 * v, 2 * u - v
    raise InvalidParameters(f"unknown shift label {i!r}")


@dataclass
class MagicCandidates:
    """Rows where the table fixes p and l - 1 only up to sign."""
    row: str
    p: int
    q_candidates: list
    l_minus_1: list

    def to_json(self):
        return {"row": self.row, "p": self.p, "q_candidates": self.q_candidates,
                "l_minus_1": self.l_minus_1, "u": None, "v": None}


def _rows(u, v, s1, s2):
    """Yield (row, l-1, U, V, (p, q)) for each row of the surgery table that applies."""
    (p1, q1), (p2, q2) = s1, s2
    P = p1 * p2 - q1 * q2
    pq_a = (P, q1)
    pq_b = (P, q1 * p2)
    if p2 == 1 and q1 * q2 < 0:
        yield "i", -q1 * q2, uv_shift(u, v, 0), pq_a
    if p2 == 1 and q2 > 1 and q1 > p1 > 0:
        if u > 2 * v:
            a, b = uv_shift(u, v, -1), uv_shift(u, v, -2)
            if a[0] >= b[0]:
                yield "ii", p1, a, pq_a
            else:
                yield "ii'", q1 * q2 - 2 * p1, b, pq_a
    if p2 == 1 and q2 < -1 and -q1 > p1 > 0:
        yield "iii", q1 * q2 - 2 * p1, uv_shift(u, v, "*"), pq_a
    if (p2, q2) == (1, 0):
        yield "iv", 0, uv_shift(u, v, 0), pq_a
    if p1 > 1 and abs(q1) == 1 and q1 * q2 < 0:
        yield "v", -q1 * q2, uv_shift(u, v, 0), pq_b
    if p1 > 1 and q1 == 1 and p2 > q2 > 0:
        yield "vi", p1 * p2 - 2 * q2, uv_shift(u, v, 1), pq_b
    if p1 > 1 and q1 == -1 and p2 > -q2 > 0:
        yield "vii", p1 * p2 + 2 * q2, uv_shift(u, v, "#"), pq_b
    if (p1, q1) == (0, 1):
        yield "viii", 0, uv_shift(u, v, -1), pq_b
    if (p2, q2) == (1, 1) and q1 > 0 and (p1, q1) != (1, 1):
        yield "ix", None, None, pq_a
    if (p2, q2) == (1, -1) and q1 < 0:
        yield "x", None, None, pq_a


@dataclass
class MagicResult:
    knot: ConstrainedParams
    row: str

    def to_json(self):
        return {"row": self.row, "knot": list(self.knot.astuple())}


ROW_ORDER = ("i", "ii", "ii'", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x")


def magic_classify(u, v, s1, s2):
    """Constrained knot from p1/q1, p2/q2 surgery on the magic link L(u, v).

    Both slope orders are tried (given order first) and the first row of
    the table that applies wins.
    """
    if u < 1 or u % 2 == 0 or gcd(u, v) != 1:
        raise InvalidParameters(f"bad 2-bridge parameters ({u}, {v})")
    s1, s2 = slope(*s1), slope(*s2)
    if u > 1:
        v %= u
    elif v not in (0, 1):
        raise InvalidParameters("v must be 0 or 1 when u = 1")
    if (u == 1 and v == 1) or (u > 1 and 2 * v > u):
        res = magic_classify(u, u - v if u > 1 else 0, (s1[0], -s1[1]), (s2[0], -s2[1]))
        if isinstance(res, MagicCandidates):
            p = res.p
            return MagicCandidates(res.row, p, sorted({(-q) % p for q in res.q_candidates}),
                                   res.l_minus_1)
        return MagicResult(mirror_constrained(res.knot), res.row)
    found = {}
    for order in dict.fromkeys([(s1, s2), (s2, s1)]):
        for row, lm1, uv, pq in _rows(u, v, *order):
            found.setdefault(row, (lm1, uv, pq, order))
    for row in ROW_ORDER:
        if row not in found:
            continue
        lm1, uv, (P, Q), order = found[row]
        if P == 0:
            raise NotLensSpace("surgery gives S^1 x S^2")
        if lm1 is None:
            p = abs(P)
            q0 = Q % p
            cands = {q0, -q0 % p}
            if gcd(q0, p) == 1:
                qi = mod_inverse(q0, p)
                cands |= {qi, -qi % p}
            q1 = order[0][1]
            return MagicCandidates(row, p, sorted(cands), sorted({q1, -q1}))
        U, V = uv
        return MagicResult(validate_constrained(P, Q, lm1 + 1, U, V), row)
    raise UnknownCase(f"slopes {s1}, {s2} match no row of the surgery table")


def magic_l_choices(p, q):
    """Values of l - 1 (mod p) reachable by each row family of the surgery table."""
    if p < 2 or gcd(p, q) != 1:
        raise InvalidParameters("needs p >= 2 and gcd(p, q) = 1")
    q %= p
    r = p - q
    mult = lambda a: sorted({x % p for n in range(p) if n * a < p for x in (n * a, -n * a)})
    return {
        "i,iv": mult(q),
        "v,viii": mult(r),
        "ii": [(ceil_div(p, q) * q - p) % p],
        "ii',vi": [(2 * p - ceil_div(p, q) * q) % p],
        "iii,vii": [(2 * p - ceil_div(p, r) * r) % p],
    }


# 1-bridge braids ------------------------------------------------------------

@dataclass(frozen=True)
class Braid:
    """1-bridge braid B(w, b, t): winding w, bridge width b, twist t."""
    w: int
    b: int
    t: int
    slope: Fraction = None
    left_limit: bool = False

    def to_json(self):
        out = {"w": self.w, "b": self.b, "t": self.t}
        if self.slope is not None:
            out["slope"] = [self.slope.numerator, self.slope.denominator]
            out["left_limit"] = self.left_limit
        return out


def _residues(w, s):
    n, d = s.numerator, s.denominator
    return [(n * i) % d for i in range(w + 1)]


def braid_thetas(w, s):
    """theta_i for i = 1..w-1: 1 when n i mod d < n w mod d."""
    r = _residues(w, Fraction(s))
    return [1 if r[i] < r[w] else 0 for i in range(1, w)]


def braid_normalize(w, s):
    s = Fraction(s)
    if w < 2:
        raise InvalidParameters("winding number must be >= 2")
    if not 0 < s < 1:
        raise InvalidParameters("slope must lie in (0, 1)")
    b = sum(braid_thetas(w, s))
    t = floor(w * s)
    if b == w - 1:
        b, t = 0, t + 1
    return Braid(w, b, t, s)


def braid_word(w, s):
    """s t^theta_1 s ... t^theta_{w-1} s as a list of letters (s = 1, t = 2)."""
    out = [1]
    for th in braid_thetas(w, s):
        out += [2] * th + [1]
    return out


def braid_alexander(w, s):
    """sum_{i=0}^{w-1} s^i t^{theta_1 + ... + theta_i} as a LaurentPoly2."""
    from .polynomials import LaurentPoly2
    th = [0] + braid_thetas(w, s)
    terms, acc = {}, 0
    for i in range(w):
        acc += th[i]
        terms[i, acc] = terms.get((i, acc), 0) + 1
    return LaurentPoly2(terms)


@dataclass(frozen=True)
class SimpleInterval:
    lo: Fraction
    hi: Fraction
    kind: str          # Torus | Cable | Strict
    cable_d: int = None

    def contains(self, x):
        return self.lo <= Fraction(x) <= self.hi

    def to_json(self):
        return {"lo": str(self.lo), "hi": str(self.hi), "kind": self.kind, "cable_d": self.cable_d}


def simple_interval(w, s, left_limit=False):
    """Farey interval of F_{w-1} containing s (or ending at s from the left)."""
    s = Fraction(s)
    if left_limit and s.denominator <= w - 1:
        from .arith import farey_sequence
        seq = farey_sequence(w - 1)
        i = seq.index(s)
        if i == 0:
            raise InvalidParameters("no slope to the left of 0")
        lo, hi = seq[i - 1], s
    else:
        lo, hi = farey_neighbours(s, w - 1)
    dm, dp = lo.denominator, hi.denominator
    if dm + dp == w:
        return SimpleInterval(lo, hi, "Torus")
    for d in (dm, dp):
        if w % d == 0:
            return SimpleInterval(lo, hi, "Cable", d)
    return SimpleInterval(lo, hi, "Strict")


def braid_fill(w, s, p, q, left_limit=False):
    """Simple knot S(p, q, wq) from p/q filling of the braid, when q/p lies in its interval."""
    iv = simple_interval(w, s, left_limit)
    if p < 1 or gcd(p, q) != 1:
        raise InvalidParameters("needs p >= 1 and gcd(p, q) = 1")
    if not iv.contains(Fraction(q, p)):
        raise NotSimple(f"{q}/{p} is outside [{iv.lo}, {iv.hi}]")
    return SimpleParams(p, q % p, (w * q) % p)


def constrained_to_braid(k, i=0):
    """1-bridge braid whose filling is C(p,q,l,u,+-1), for u >= 3."""
    p, q, l, u, v = k.astuple()
    if u < 3 or v % u not in (1, u - 1):
        raise NotOneBridgeEligible(f"{k} needs u >= 3 and v = +-1 mod u")
    mirrored = v % u == u - 1
    if mirrored:
        k = mirror_constrained(k)
        p, q, l, u, v = k.astuple()
    qi = mod_inverse(q, p)
    eps = 1 if l + q > p else 0
    lam = (q * qi - 1) // p
    n0 = (u - 1) // 2 - eps + i
    if n0 < 0:
        raise InvalidParameters("i too small")
    w = p * (u - 1 - eps + i) + q - l + 1
    s = Fraction(lam + n0 * qi, q + n0 * p)
    return {"w": w, "slope": s, "left_limit": True, "mirrored": mirrored, "eps": eps, "n0": n0}
