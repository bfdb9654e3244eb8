"""Knot Floer data of constrained knots from the grading walk.

Gradings live in H1(E(K)) = <a, m> / (p a + k' m), written in coordinates
Z + Z/d via a unimodular change of basis (Smith form of the 1x2 relation).
The free generator is oriented so that [m] = (p/d) t + (torsion).
"""
from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .arith import ext_gcd
from .errors import DegenerateNorm, NotIdentifiable
from .knots import homology_k
from .polynomials import GroupRingElt, LaurentPoly1
from .twobridge import alexander_two_bridge, shrink


@dataclass(frozen=True)
class H1Presentation:
    p: int
    k: int
    k_prime: int
    d: int

    def _basis(self):
        p, kp, d = self.p, self.k_prime, self.d
        p1, k1 = p // d, kp // d
        g, x, y = ext_gcd(p1, k1)
        assert g == 1
        return p1, k1, x, y

    def coords(self, A, M):
        """Image of A[a] + M[m] as (free, torsion mod d)."""
        p1, k1, x, y = self._basis()
        return (p1 * M - k1 * A, (x * A + y * M) % self.d)

    @property
    def meridian(self):
        return self.coords(0, 1)

    @property
    def longitude_a(self):
        return self.coords(1, 0)

    def to_json(self):
        return {"p": self.p, "k": self.k, "k_prime": self.k_prime, "d": self.d}


def homology_presentation(k):
    k = k.normal_form()
    kk = homology_k(k)
    kp = kk - 2 if k.v % 2 else kk
    d = gcd(k.p, abs(kp)) if kp else k.p
    return H1Presentation(k.p, kk, kp, d)


def walk_steps(k):
    """Steps gr(x^{j+1}) - gr(x^j) for j = 0..p-1 as (A, M) coefficients."""
    k = k.normal_form()
    p, q, l, u, v = k.astuple()
    qi = k.q_inv
    kk = homology_k(k)
    steps = []
    for j in range(p):
        if l == 1 and j == 0:
            steps.append((1, 1) if v % 2 == 0 else (1, -1))
        elif j in (0, l - 1):
            steps.append((1, 1) if v % 2 == 0 else (1, 0))
        else:
            steps.append((1, 1) if 1 <= (j * qi) % p <= kk - 2 else (1, 0))
    return steps


def grading_walk(k):
    """Uncentred middle gradings of classes j = 1..p, with gr(x^1) = 0, as (A, M)."""
    steps = walk_steps(k)
    p = len(steps)
    out = [(0, 0)]
    for j in range(1, p):
        A, M = out[-1]
        dA, dM = steps[j]
        out.append((A + dA, M + dM))
    return out


def walk_closes(k):
    """The walk around all p classes returns to its start in H1."""
    h = homology_presentation(k)
    A = sum(s[0] for s in walk_steps(k))
    M = sum(s[1] for s in walk_steps(k))
    return h.coords(A, M) == (0, 0)


def class_polys(k):
    """Local polynomial of each class j = 1..p, in the variable [m]."""
    k = k.normal_form()
    p, q, l, u, v = k.astuple()
    d1 = alexander_two_bridge(u, v)
    d2 = alexander_two_bridge(*shrink(u, v)) if l > 1 else None
    return [d2 if j <= l - 1 else d1 for j in range(1, p + 1)]


def _canonical_shift(h, elems):
    """Doubled shift D (free, torsion mod 2d) with the multiset {2g - D} negation-invariant."""
    d = h.d
    ms = defaultdict(int)
    for g, c in elems:
        ms[g] += c
    keys = list(ms)
    lo = min(g[0] for g in keys)
    hi = max(g[0] for g in keys)
    g0 = min(g for g in keys if g[0] == lo)
    cands = sorted({(g0[0] + g[0], (g0[1] + g[1]) % d) for g in keys if g[0] == hi})
    for Dt, Dr in cands:
        # an even lift is an honest element of Z/d; prefer it
        for lift in sorted((Dr, Dr + d), key=lambda x: (x % 2, x)):
            shifted = {(2 * a - Dt, (2 * b - lift) % (2 * d)): c for (a, b), c in ms.items()}
            if all(shifted.get((-a, (-b) % (2 * d))) == c for (a, b), c in shifted.items()):
                return (Dt, lift)
    return None


@dataclass
class EulerData:
    h1: H1Presentation
    middles: list      # doubled (free, torsion mod 2d) per class j = 1..p
    polys: list        # LaurentPoly1 in [m] per class
    chi: GroupRingElt
    shift: tuple
    l: int

    def meridian2(self):
        t, r = self.h1.meridian
        return (2 * t, 2 * r)

    def class_elements(self, j):
        """Signed generators of class j (1-based) as {(two_a, two_b): coeff}."""
        d = self.h1.d
        mt, mr = self.meridian2()
        a, b = self.middles[j - 1]
        return {(a + e * mt, (b + e * mr) % (2 * d)): c for e, c in self.polys[j - 1].terms.items()}



def hfk_euler(k):
    k = k.normal_form()
    h = homology_presentation(k)
    walk = grading_walk(k)
    polys = class_polys(k)
    d = h.d
    mt, mr = h.meridian
    elems = []
    raw_mid = [h.coords(A, M) for A, M in walk]
    for (a, b), poly in zip(raw_mid, polys):
        for e, c in poly.terms.items():
            elems.append(((a + e * mt, (b + e * mr) % d), c))
    D = _canonical_shift(h, [(g, abs(c)) for g, c in elems])
    if D is None:
        raise ArithmeticError(f"no negation-invariant grading shift for {k}")
    Dt, Dr = D
    middles = [(2 * a - Dt, (2 * b - Dr) % (2 * d)) for a, b in raw_mid]
    terms = defaultdict(int)
    for (a, b), c in elems:
        terms[2 * a - Dt, (2 * b - Dr) % (2 * d)] += c
    chi = GroupRingElt(d, terms)
    return EulerData(h, middles, polys, chi, D, k.l)


def euler_to_json(data):
    classes = []
    for j, (mid, poly) in enumerate(zip(data.middles, data.polys), start=1):
        classes.append({"j": j, "family": "D2" if j <= data.l - 1 else "D1",
                        "middle": list(mid), "poly": poly.to_json()})
    return {"h1": data.h1.to_json(), "classes": classes, "chi": data.chi.to_json()}


def hfk_dimensions(k):
    """{(j, (two_a, two_b)): dim} for each class j = 1..p."""
    data = hfk_euler(k)
    out = {}
    for j in range(1, k.p + 1):
        for g, c in data.class_elements(j).items():
            out[j, g] = abs(c)
    return out


def total_rank(k):
    return sum(hfk_dimensions(k).values())


def middle_gradings(k):
    return hfk_euler(k).middles


def _free_extremes(k):
    dims = hfk_dimensions(k)
    free = defaultdict(int)
    for (_, (a, _)), c in dims.items():
        free[a] += c
    return free


def top_rank(k):
    free = _free_extremes(k)
    return free[max(free)]


def width_genus_fibred(k):
    h = homology_presentation(k)
    free = _free_extremes(k)
    width = (max(free) - min(free)) // 2
    tr = free[max(free)]
    norm = width - h.p // h.d
    n = gcd(h.d, h.p // h.d)
    if norm < n:
        raise DegenerateNorm(f"Thurston norm {norm} < {n}", width=width, top_rank=tr)
    return {"width": width, "thurston_norm": norm, "genus": 1 + (norm - n) // 2,
            "top_rank": tr, "fibred": tr == 1}


@dataclass(frozen=True)
class Automorphism:
    """t -> eps t + x r, r -> y r on Z + Z/d."""
    eps: int
    x: int
    y: int
    d: int

    def apply2(self, a, b):
        return (self.eps * a, (self.x * a + self.y * b) % (2 * self.d))


def identify_h1(h1, h2):
    """Automorphism of Z + Z/d carrying the meridian of h1 to that of h2."""
    if h1.d != h2.d:
        raise NotIdentifiable(f"torsion orders {h1.d} and {h2.d} differ")
    d = h1.d
    (t1, r1), (t2, r2) = h1.meridian, h2.meridian
    for eps in (1, -1):
        if eps * t1 != t2:
            continue
        for x in range(d):
            for y in range(d):
                if gcd(y, d) == 1 and (x * t1 + y * r1 - r2) % d == 0:
                    return Automorphism(eps, x, y, d)
    raise NotIdentifiable("no automorphism matches the meridians")


def identify_all(h1, h2):
    d = h1.d
    (t1, r1), (t2, r2) = h1.meridian, h2.meridian
    if d != h2.d or abs(t1) != abs(t2):
        return []
    eps = 1 if t1 == t2 else -1
    return [Automorphism(eps, x, y, d) for x in range(d) for y in range(d)
            if gcd(y, d) == 1 and (x * t1 + y * r1 - r2) % d == 0]


def transport(data, aut):
    """Middle gradings and chi of data pushed through aut."""
    mids = [aut.apply2(a, b) for a, b in data.middles]
    chi = data.chi.map_keys(aut.apply2)
    return mids, chi


def coset_polys(chi, meridian2, d):
    """Split chi by cosets of <[m]>: {base: LaurentPoly1 in [m]}."""
    mt, mr = meridian2
    out = defaultdict(dict)
    for (a, b), c in chi.terms.items():
        n = a // mt
        base = (a - n * mt, (b - n * mr) % (2 * d))
        out[base][n] = c
    return {b: LaurentPoly1(t) for b, t in out.items()}


def same_class_divisible(data1, data2):
    """Classwise chi differences divisible by ([m] - 1)^2 after identify_h1,
    up to the 2-torsion ambiguity of the canonical shift."""
    aut = identify_h1(data1.h1, data2.h1)
    _, chi1 = transport(data1, aut)
    d = data2.h1.d
    m2 = data2.meridian2()
    c2 = coset_polys(data2.chi, m2, d)
    sq = LaurentPoly1({2: 1, 1: -2, 0: 1})
    for off in alternate_lifts(data2):
        c1 = coset_polys(chi1.map_keys(lambda a, b: (a, b + off)), m2, d)
        if all(sq.divides(c1.get(b, LaurentPoly1()) - c2.get(b, LaurentPoly1()))
               for b in set(c1) | set(c2)):
            return True
    return False


def alternate_lifts(data):
    """Shifts of data's doubled gradings by the order-2 torsion element that
    the canonical shift leaves undetermined (only when d is even)."""
    d = data.h1.d
    return [0, d] if d % 2 == 0 else [0]


def middles_agree(data1, data2):
    """Middle-grading multisets agree after identify_h1, up to the 2-torsion
    ambiguity of the canonical shift."""
    aut = identify_h1(data1.h1, data2.h1)
    mids1, _ = transport(data1, aut)
    d2 = 2 * data2.h1.d
    ref = sorted(data2.middles)
    for off in alternate_lifts(data2):
        if sorted((a, (b + off) % d2) for a, b in mids1) == ref:
            return True
    return False


def euler_equivalent(data1, data2):
    """chi(K1) and chi(K2) agree classwise for some meridian-preserving
    identification of H1, up to sign and the 2-torsion shift ambiguity."""
    d2 = 2 * data2.h1.d
    for aut in identify_all(data1.h1, data2.h1):
        _, chi1 = transport(data1, aut)
        for off in alternate_lifts(data2):
            c = chi1.map_keys(lambda a, b: (a, (b + off) % d2))
            if c == data2.chi or -c == data2.chi:
                return True
    return False
