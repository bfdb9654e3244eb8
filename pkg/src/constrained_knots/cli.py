"""Command line front end; JSON by default, plain tables with --format table."""
import argparse
import json
import sys
from fractions import Fraction

from .census import run_census
from .errors import DegenerateNorm, KnotError
from .floer import euler_to_json, hfk_euler, total_rank, width_genus_fibred
from .groups import verify_isomorphism
from .knots import (classify_special, constrained_to_11, decide_equivalence,
                    is_lspace_knot, params_to_json, simple_knot_of, spinc_blocks,
                    sweep, validate_constrained)
from .surgery import (MagicCandidates, braid_alexander, braid_fill, braid_normalize,
                      constrained_to_braid, magic_classify, simple_interval)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _knot(vals):
    return validate_constrained(*vals)


def cmd_invariants(a):
    k = _knot(a.params)
    data = hfk_euler(k)
    out = {"knot": params_to_json(k), "normal_form": params_to_json(k.normal_form()),
           "rank": total_rank(k), "blocks": list(spinc_blocks(k)),
           "lspace_knot": is_lspace_knot(k), "special": _special(k),
           "euler": euler_to_json(data)}
    try:
        out.update(width_genus_fibred(k))
    except DegenerateNorm as exc:
        out.update({"width": exc.width, "top_rank": exc.top_rank, "genus": None,
                    "fibred": None, "note": str(exc)})
    return out


def _special(k):
    s = classify_special(k)
    return {key: (str(v) if key in ("simple", "core") else v) for key, v in s.items()}


def cmd_convert(a):
    k = _knot(a.params)
    if a.to == "11":
        return {"knot": params_to_json(k), "result": params_to_json(constrained_to_11(k))}
    return {"knot": params_to_json(k), "result": params_to_json(simple_knot_of(k))}


def cmd_equivalent(a):
    k1, k2 = _knot(a.params[:5]), _knot(a.params[5:])
    v = decide_equivalence(k1, k2)
    out = {"knots": [params_to_json(k1), params_to_json(k2)]}
    out.update(v.to_json())
    return out


def cmd_magic(a):
    u, v, p1, q1, p2, q2 = a.params
    res = magic_classify(u, v, (p1, q1), (p2, q2))
    return res.to_json()


def cmd_braid(a):
    s = Fraction(a.n, a.d)
    b = braid_normalize(a.w, s)
    iv = simple_interval(a.w, s)
    out = {"braid": b.to_json(), "interval": iv.to_json(),
           "alexander": braid_alexander(a.w, s).to_json()}
    if a.fill:
        out["fill"] = params_to_json(braid_fill(a.w, s, *a.fill))
    return out


def cmd_braid_from(a):
    k = _knot(a.params)
    r = constrained_to_braid(k)
    iv = simple_interval(r["w"], r["slope"], r["left_limit"])
    return {"knot": params_to_json(k), "w": r["w"],
            "slope": [r["slope"].numerator, r["slope"].denominator],
            "left_limit": True, "mirrored": r["mirrored"], "interval": iv.to_json()}


def cmd_verify(a):
    if a.sweep:
        pmax, umax = a.sweep
        rows = []
        for k in sweep(pmax, umax):
            if k.p >= 2 and k.l in (2, k.p) and k.u > 2 * k.v > 0:
                ok, _ = verify_isomorphism(*k.astuple())
                rows.append({"knot": list(k.astuple()), "ok": ok})
        return {"checked": len(rows), "failed": [r["knot"] for r in rows if not r["ok"]]}
    if not a.params:
        raise _UsageError("verify-iso needs p q l u v or --sweep PMAX UMAX")
    ok, checks = verify_isomorphism(*a.params)
    return {"knot": list(a.params), "ok": ok, "checks": checks}


class _UsageError(Exception):
    pass


def _table(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and any(isinstance(x, (dict, list)) for x in (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines.append(_table(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    elif isinstance(obj, list):
        for val in obj:
            flat = not isinstance(val, (dict, list)) or (
                isinstance(val, list) and not any(isinstance(x, (dict, list)) for x in val))
            lines.append(f"{pad}{json.dumps(val)}" if flat else _table(val, indent))
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def build_parser():
    ap = _Parser(prog="constrained-knots", description=__doc__)
    ap.add_argument("--format", choices=["json", "table"], default="json")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="Floer rank, Euler data, genus, fibredness")
    p.add_argument("params", nargs=5, type=int, metavar="N")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("convert", help="to a (1,1) knot W(...) or simple knot S(...)")
    p.add_argument("params", nargs=5, type=int, metavar="N")
    p.add_argument("--to", choices=["11", "simple"], required=True)
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("equivalent", help="decide whether two constrained knots agree")
    p.add_argument("params", nargs=10, type=int, metavar="N")
    p.set_defaults(fn=cmd_equivalent)

    p = sub.add_parser("surgery-magic", help="u v p1 q1 p2 q2")
    p.add_argument("params", nargs=6, type=int, metavar="N")
    p.set_defaults(fn=cmd_magic)

    p = sub.add_parser("surgery-braid", help="w n d: 1-bridge braid of slope n/d")
    p.add_argument("w", type=int)
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--fill", nargs=2, type=int, metavar=("P", "Q"))
    p.set_defaults(fn=cmd_braid)

    p = sub.add_parser("braid-of", help="1-bridge braid of C(p,q,l,u,+-1)")
    p.add_argument("params", nargs=5, type=int, metavar="N")
    p.set_defaults(fn=cmd_braid_from)

    p = sub.add_parser("census", help="classify JSON-lines filling records from stdin")
    p.set_defaults(fn=None)

    p = sub.add_parser("verify-iso", help="word identities for l in {2, p}")
    p.add_argument("params", nargs="*", type=int, metavar="N")
    p.add_argument("--sweep", nargs=2, type=int, metavar=("PMAX", "UMAX"))
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if a.cmd == "census":
        return run_census(stdin, stdout, stderr)
    if a.cmd == "verify-iso" and a.params and len(a.params) != 5:
        stderr.write("verify-iso takes exactly five integers\n")
        return 1
    try:
        out = a.fn(a)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    except (KnotError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    if isinstance(out, MagicCandidates):
        out = out.to_json()
    text = json.dumps(out, sort_keys=True) if a.format == "json" else _table(out)
    stdout.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
