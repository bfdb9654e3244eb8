"""Constrained knots C(p,q,l,u,v), (1,1) knots W(p,q,r,s), simple knots S(p,q,k)."""
from dataclasses import dataclass, field
from math import gcd

from .arith import mod_inverse
from .errors import AmbientMismatch, InvalidParameters
from .twobridge import shrink, two_bridge_equivalent


@dataclass(frozen=True)
class ConstrainedParams:
    p: int
    q: int
    l: int
    u: int
    v: int
    mirrored: bool = field(default=False, compare=False)

    def astuple(self):
        return (self.p, self.q, self.l, self.u, self.v)

    @property
    def q_inv(self):
        return mod_inverse(self.q, self.p)

    def is_normal(self):
        return self.u == 1 and self.v == 0 or 0 < 2 * self.v < self.u

    def normal_form(self):
        """Same knot with v = 0 (u = 1), or its mirror with 0 < 2v < u."""
        p, q, l, u, v = self.astuple()
        if u == 1 and v == 1:
            return validate_constrained(p, q, l - 2 * q, 1, 0)
        if u > 1 and 2 * v > u:
            m = mirror_constrained(self)
            return ConstrainedParams(*m.astuple(), mirrored=not self.mirrored)
        return self

    def __str__(self):
        return "C(%d,%d,%d,%d,%d)" % self.astuple()


@dataclass(frozen=True)
class OneOneParams:
    p: int
    q: int
    r: int
    s: int
    chirality: int = 1

    def astuple(self):
        return (self.p, self.q, self.r, self.s)

    def __str__(self):
        return "W(%d,%d,%d,%d)%s" % (*self.astuple(), "+" if self.chirality > 0 else "-")


@dataclass(frozen=True)
class SimpleParams:
    p: int
    q: int
    k: int

    def __str__(self):
        return f"S({self.p},{self.q},{self.k})"


def validate_constrained(p, q, l, u, v, mirror_normalize=False):
    """Reduce parameters to p > 0, q in [0,p), l in [1,p], v in [0,u)."""
    if not all(isinstance(x, int) for x in (p, q, l, u, v)):
        raise InvalidParameters("parameters must be integers")
    if p == 0:
        raise InvalidParameters("p must be nonzero")
    if p < 0:
        p, q = -p, -q
    if u < 1 or u % 2 == 0:
        raise InvalidParameters(f"u must be odd and positive, got {u}")
    if gcd(p, q) != 1:
        raise InvalidParameters(f"gcd(p, q) = gcd({p}, {q}) != 1")
    q %= p
    l = (l - 1) % p + 1
    if u == 1:
        if v not in (0, 1):
            raise InvalidParameters("v must be 0 or 1 when u = 1")
    else:
        v %= u
        if gcd(u, v) != 1:
            raise InvalidParameters(f"gcd(u, v) = gcd({u}, {v}) != 1")
    k = ConstrainedParams(p, q, l, u, v)
    return k.normal_form() if mirror_normalize else k


def mirror_constrained(k):
    p, q, l, u, v = k.astuple()
    if u == 1:
        return validate_constrained(p, -q, l, 1, 1 - v)
    return validate_constrained(p, -q, l, u, -v)


def homology_k(k):
    """k in [1, p] with k - 1 = (l - 1) q' mod p."""
    p = k.p
    return ((k.l - 1) * k.q_inv) % p + 1


def constrained_to_11(k):
    k = k.normal_form()
    p, q, l, u, v = k.astuple()
    qi = k.q_inv
    kk = homology_k(k)
    qs = [(i * qi) % p for i in range(l)]
    n1 = sum(1 for x in qs if 0 <= x <= kk - 1)
    n2 = sum(1 for x in qs if 1 <= x <= qi - 1)
    return OneOneParams(p * u - 2 * v * (l - 1), v, u * kk - 2 * v * n1, u * qi - 2 * v * n2)


def w_relations(w):
    """Mirror and alternative descriptions of W(p,q,r,s); indices taken mod p."""
    p, q, r, s = w.astuple()
    mirror = OneOneParams(p, q, (p - 2 * q - r) % p, (p - s + 2 * q) % p, w.chirality)
    alt = OneOneParams(p, q, (p - 2 * q - r) % p, (s - 2 * q) % p, -w.chirality)
    return {"mirror": mirror, "alt": alt}


def simple_knot_of(k):
    k = k.normal_form() if k.u > 1 else k
    p, q, l, u, v = k.astuple()
    if u != 1:
        raise InvalidParameters("simple knots need u = 1")
    qi = k.q_inv
    kk = (l - 1) * qi + (1 if v == 0 else -1)
    return SimpleParams(p, qi, kk % p)


def simple_to_constrained(s):
    """S(p,q,k) as C(p,q,k-q+1,1,0)."""
    return validate_constrained(s.p, s.q, s.k - s.q + 1, 1, 0)


def simple_orbit(s):
    p, q, k = s.p, s.q % s.p, s.k % s.p
    qi = mod_inverse(q, p)
    return {(q, k), (q, -k % p), (qi, k * qi % p), (qi, -k * qi % p)}


def simple_equivalent(s1, s2):
    if s1.p != s2.p:
        return False
    return (s2.q % s2.p, s2.k % s2.p) in simple_orbit(s1)


def classify_special(k):
    k = k.normal_form()
    p, q, l, u, v = k.astuple()
    if u == 1:
        s = simple_knot_of(k)
        if s.k % p == 0:
            return {"kind": "Unknot", "simple": s}
        if s.k % p in {1 % p, -1 % p, s.q % p, -s.q % p}:
            return {"kind": "Core", "simple": s}
    if l == 1 and p > 1:
        return {"kind": "Composite", "two_bridge": (u, v),
                "core": simple_knot_of(ConstrainedParams(p, q, 1, 1, 0))}
    if p == 1:
        return {"kind": "TwoBridgeInS3", "two_bridge": (u, v)}
    return {"kind": "Generic"}


def spinc_blocks(k):
    k = k.normal_form()
    p, q, l, u, v = k.astuple()
    out = []
    for i in range(p):
        j = (1 + i * q - 1) % p + 1
        out.append(u - 2 * v if 1 <= j <= l - 1 else u)
    return tuple(out)


def is_lspace_knot(k):
    u, v = k.u, k.v
    if u == 1:
        return True
    return v % u in (1, u - 1)


def lens_equivalent_oriented(p, a, b):
    """L(p, a) and L(p, b) orientation-preservingly diffeomorphic."""
    if p == 1:
        return True
    a, b = a % p, b % p
    return a == b or a * b % p == 1


def lens_equivalent(p, a, b):
    return lens_equivalent_oriented(p, a, b) or lens_equivalent_oriented(p, a, -b)


@dataclass
class Verdict:
    kind: str  # Equivalent | NotEquivalent | Indeterminate
    reason: str
    certificate: dict = field(default_factory=dict)

    def to_json(self):
        return {"verdict": self.kind, "reason": self.reason, "certificate": self.certificate}


def _in_main_range(k):
    return k.p > 1 and 2 <= k.l <= k.p and k.u > 2 * k.v > 0


def decide_equivalence(k1, k2):
    """Unoriented knots, oriented ambient lens spaces."""
    k1, k2 = k1.normal_form(), k2.normal_form()
    if k1.p != k2.p or not lens_equivalent(k1.p, k1.q, k2.q):
        raise AmbientMismatch(f"lens spaces of {k1} and {k2} differ")
    if k1.astuple() == k2.astuple():
        return Verdict("Equivalent", "identical parameters")
    p = k1.p
    same_oriented = lens_equivalent_oriented(p, k1.q, k2.q)
    if k1.u == 1 and k2.u == 1:
        s1, s2 = simple_knot_of(k1), simple_knot_of(k2)
        ok = same_oriented and simple_equivalent(s1, s2)
        return Verdict("Equivalent" if ok else "NotEquivalent", "simple knot orbit",
                       {"simple": [str(s1), str(s2)]})
    if p == 1:
        ok = two_bridge_equivalent(k1.u, k1.v, k2.u, k2.v)
        return Verdict("Equivalent" if ok else "NotEquivalent", "2-bridge classification",
                       {"two_bridge": [[k1.u, k1.v], [k2.u, k2.v]]})
    if k1.l == 1 and k2.l == 1 and k1.u > 1 and k2.u > 1:
        if not two_bridge_equivalent(k1.u, k1.v, k2.u, k2.v):
            return Verdict("NotEquivalent", "2-bridge summands differ",
                           {"two_bridge": [[k1.u, k1.v], [k2.u, k2.v]]})
        c1 = simple_knot_of(ConstrainedParams(p, k1.q, 1, 1, 0))
        c2 = simple_knot_of(ConstrainedParams(p, k2.q, 1, 1, 0))
        if same_oriented and simple_equivalent(c1, c2):
            return Verdict("Equivalent", "equal 2-bridge summands and core summands",
                           {"cores": [str(c1), str(c2)]})
        return Verdict("Indeterminate", "core summands are not related by a lens space diffeomorphism",
                       {"cores": [str(c1), str(c2)]})
    if _in_main_range(k1) and _in_main_range(k2):
        (_, q1, l1, u1, v1), (_, q2, l2, u2, v2) = k1.astuple(), k2.astuple()
        ok = (q1 * q2) % p == 1 and l1 == l2 and l1 in (2, p) and (u1, v1) == (u2, v2)
        cert = {"q1q2_mod_p": (q1 * q2) % p, "l": [l1, l2], "uv": [[u1, v1], [u2, v2]]}
        return Verdict("Equivalent" if ok else "NotEquivalent", "parameter classification", cert)
    # mixed shapes: compare Floer ranks per spin^c class
    r1 = sorted(spinc_blocks(k1))
    r2 = sorted(spinc_blocks(k2))
    if r1 != r2 or not same_oriented:
        return Verdict("NotEquivalent", "knot Floer ranks differ" if r1 != r2 else "ambient orientations differ",
                       {"ranks": [r1, r2]})
    return Verdict("Indeterminate", "mixed shapes with equal knot Floer ranks", {"ranks": [r1, r2]})


def params_to_json(k):
    if isinstance(k, ConstrainedParams):
        return list(k.astuple())
    if isinstance(k, OneOneParams):
        return ["W", *k.astuple(), "+" if k.chirality > 0 else "-"]
    if isinstance(k, SimpleParams):
        return ["S", k.p, k.q, k.k]
    raise TypeError(type(k).__name__)


def params_from_json(data):
    if not isinstance(data, list) or not data:
        raise InvalidParameters("expected a nonempty list")
    if data[0] == "W":
        if len(data) != 6 or data[5] not in ("+", "-"):
            raise InvalidParameters("W form is [\"W\",p,q,r,s,\"+\"|\"-\"]")
        return OneOneParams(*data[1:5], 1 if data[5] == "+" else -1)
    if data[0] == "S":
        if len(data) != 4:
            raise InvalidParameters("S form is [\"S\",p,q,k]")
        return SimpleParams(*data[1:])
    if len(data) != 5:
        raise InvalidParameters("C form is [p,q,l,u,v]")
    return validate_constrained(*data)


def sweep(pmax, umax, normal_only=True):
    """All reduced tuples with p <= pmax, odd u <= umax (mirror-normal by default)."""
    for p in range(1, pmax + 1):
        for q in range(p):
            if gcd(p, q) != 1:
                continue
            for l in range(1, p + 1):
                for u in range(1, umax + 1, 2):
                    vs = [0] if u == 1 else [v for v in range(1, u) if gcd(u, v) == 1 and (2 * v < u or not normal_only)]
                    if u == 1 and not normal_only:
                        vs = [0, 1]
                    for v in vs:
                        yield ConstrainedParams(p, q, l, u, v)
