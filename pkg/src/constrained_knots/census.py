"""Classify lens-space fillings of cusped manifolds from their Alexander data."""
import json
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd

from .arith import mod_inverse
from .errors import KnotError, NonSymmetricInput
from .floer import coset_polys, hfk_euler, identify_all, H1Presentation, alternate_lifts, transport
from .knots import ConstrainedParams, validate_constrained
from .polynomials import GroupRingElt, LaurentPoly1


@dataclass
class FillingRecord:
    name: str
    p: int
    q: int
    d: int
    alexander: LaurentPoly1 = None
    meridian_exponent: int = None
    chi: GroupRingElt = None          # required when d > 1
    meridian: tuple = None            # doubled (free, torsion) image of [m], d > 1

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict):
            raise ValueError("record must be a JSON object")
        try:
            name = str(obj.get("name", ""))
            p, q, d = int(obj["p"]), int(obj["q"]), int(obj.get("d", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"missing or bad field: {exc}") from None
        if p < 1 or d < 1 or p % d:
            raise ValueError("need p >= 1, d >= 1, d | p")
        rec = cls(name, p, q, d)
        if "alexander" in obj:
            rec.alexander = LaurentPoly1.from_json(obj["alexander"])
        rec.meridian_exponent = int(obj.get("meridian_exponent", p // d))
        if d > 1:
            if "chi" not in obj or "meridian" not in obj:
                raise ValueError("records with d > 1 need chi and meridian")
            rec.chi = GroupRingElt(d, {(a, b): c for a, b, c in obj["chi"]})
            rec.meridian = tuple(obj["meridian"])
        elif rec.alexander is None:
            raise ValueError("record needs an alexander polynomial")
        return rec


def chi_from_record(rec):
    """chi = Delta(t) (1 - t^P) / (1 - t) in doubled coordinates, d = 1."""
    if rec.d != 1:
        return rec.chi
    D = rec.alexander
    if not D or not D.is_symmetric():
        raise NonSymmetricInput(f"{rec.name}: Alexander polynomial is not symmetric")
    P = rec.meridian_exponent
    chi = D * LaurentPoly1({i: 1 for i in range(P)})
    # centre it: the product is symmetric about (lo + hi) / 2
    shift2 = -(chi.min_exp() + chi.max_exp())
    return GroupRingElt(1, {(2 * e + shift2, 0): c for e, c in chi.terms.items()})


def _meridian2(rec):
    if rec.d == 1:
        return (2 * rec.meridian_exponent, 0)
    return rec.meridian


def residue_polys(chi, meridian2, d):
    """Residue polynomials F_i in the variable [m], one per spin^c class."""
    cp = coset_polys(chi, meridian2, d)
    return [cp[b] for b in sorted(cp)]


def count_forms(polys):
    forms = []
    for f in polys:
        if not any(f.equivalent_up_to_unit(g) for g in forms):
            forms.append(f)
    return forms


@dataclass
class FillingVerdict:
    kind: str           # SimpleFilling | ConstrainedFilling | GeneralConstrainedFilling | Other
    n_forms: int
    virtual: dict = field(default_factory=dict)
    match: list = None

    def to_json(self):
        return {"verdict": self.kind, "forms": self.n_forms, "virtual": self.virtual,
                "match": self.match}


def _alternating_symmetric(f):
    return f.canonical().is_symmetric() and f.is_alternating()


def _h1_of_record(rec):
    """H1 presentation object carrying the record's meridian, for identification."""
    class _H:
        pass
    h = _H()
    h.d = rec.d
    m2 = _meridian2(rec)
    h.meridian = (m2[0] // 2, (m2[1] // 2) % rec.d)
    return h


def _matches(rec, chi, cand):
    data = hfk_euler(cand)
    if data.h1.d != rec.d or data.h1.p != rec.p:
        return False
    if rec.d == 1:
        return data.chi.equivalent_up_to_unit(chi)
    d2 = 2 * rec.d
    for aut in identify_all(data.h1, _h1_of_record(rec)):
        _, c = transport(data, aut)
        for off in alternate_lifts(data):
            cc = c.map_keys(lambda a, b: (a, (b + off) % d2))
            if cc.equivalent_up_to_unit(chi):
                return True
    return False


def _free_matches(rec, chi, cand):
    a = hfk_euler(cand).chi.free_projection()
    return a.equivalent_up_to_unit(chi.free_projection())


def _q_candidates(p, q):
    if p == 1:
        return [0]
    q %= p
    qi = mod_inverse(q, p)
    return sorted({q, -q % p, qi, -qi % p})


def classify_filling(rec):
    try:
        chi = chi_from_record(rec)
    except NonSymmetricInput:
        raise
    polys = residue_polys(chi, _meridian2(rec), rec.d)
    forms = count_forms(polys)
    n = len(forms)
    p = rec.p
    if all(f.is_monomial() for f in polys):
        return FillingVerdict("SimpleFilling", n)
    if n > 2 or not all(_alternating_symmetric(f) for f in forms):
        return FillingVerdict("Other", n)
    dets = [abs(f.evaluate_at_minus_one()) for f in polys]
    u = max(dets)
    if n == 1:
        l_cands = [1]
        v_cands = [v for v in range(1, (u + 1) // 2) if gcd(u, v) == 1] if u > 1 else [0]
        virtual = {"l": [1], "u": u}
    else:
        small = min(dets)
        if (u - small) % 2:
            return FillingVerdict("Other", n)
        v = (u - small) // 2
        lm1 = sum(1 for x in dets if x == small)
        l = lm1 + 1
        l_cands = sorted({l, (p - l + 2 - 1) % p + 1})
        v_cands = [v]
        virtual = {"l": l_cands, "u": u, "v": v}
    general = None
    for qc in _q_candidates(p, rec.q):
        for l in l_cands:
            for v in v_cands:
                try:
                    cand = validate_constrained(p, qc, l, u, v)
                except KnotError:
                    continue
                if _matches(rec, chi, cand):
                    return FillingVerdict("ConstrainedFilling", n, virtual, list(cand.astuple()))
                if general is None and _free_matches(rec, chi, cand):
                    general = list(cand.astuple())
    if general is not None:
        return FillingVerdict("GeneralConstrainedFilling", n, virtual, general)
    return FillingVerdict("Other", n, virtual)


def record_from_knot(k, name=""):
    """d = 1 filling record with the knot's Alexander polynomial."""
    data = hfk_euler(k)
    if data.h1.d != 1:
        raise ValueError("record_from_knot handles d = 1 only")
    chi2 = data.chi.free_projection()
    chi = LaurentPoly1({a: c for a, c in chi2.substitute_power(1).terms.items()})
    # chi(t^2) (1 - t^2) / (1 - t^{2p}) = Delta(t^2)
    D2 = (chi * LaurentPoly1({0: 1, 2: -1})).divmod_exact(LaurentPoly1({0: 1, 2 * k.p: -1}))
    if any(e % 2 for e in D2.terms):
        D2 = D2.shift(1)
    D = LaurentPoly1({e // 2: c for e, c in D2.terms.items()}).canonical()
    if D.evaluate_at_one() < 0:
        D = -D
    return FillingRecord(name, k.p, k.q_inv if k.p > 1 else 0, 1, D, k.p)


def run_census(lines, out, err):
    """JSON lines in, JSON lines out; returns 0, or 2 when any line was malformed."""
    status = 0
    for n, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            rec = FillingRecord.from_json(json.loads(line))
            verdict = classify_filling(rec)
        except (ValueError, KnotError) as exc:
            err.write(f"line {n}: {exc}\n")
            status = 2
            continue
        obj = {"name": rec.name, "p": rec.p, "q": rec.q}
        obj.update(verdict.to_json())
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    return status
