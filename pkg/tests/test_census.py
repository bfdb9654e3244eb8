import io
import json

import pytest

from constrained_knots.census import (FillingRecord, chi_from_record, classify_filling,
                                      count_forms, record_from_knot, residue_polys,
                                      run_census)
from constrained_knots.errors import NonSymmetricInput
from constrained_knots.knots import sweep, validate_constrained
from constrained_knots.polynomials import LaurentPoly1

V = validate_constrained


def rec(**kw):
    return FillingRecord.from_json(kw)


def test_trivial_alexander():
    r = rec(p=5, q=1, alexander=[[0, 1]])
    polys = residue_polys(chi_from_record(r), (10, 0), 1)
    assert len(polys) == 5 and all(f.is_monomial() for f in polys)
    assert classify_filling(r).kind == "SimpleFilling"


def test_running_example_round_trip():
    r = record_from_knot(V(5, 3, 2, 3, 1))
    polys = residue_polys(chi_from_record(r), (10, 0), 1)
    assert len(count_forms(polys)) == 2
    v = classify_filling(r)
    assert v.kind == "ConstrainedFilling"
    assert v.virtual == {"l": [2, 5], "u": 3, "v": 1}


def test_figure_eight_record():
    r = rec(p=1, q=0, alexander=[[-1, -1], [0, 3], [1, -1]])
    assert len(residue_polys(chi_from_record(r), (2, 0), 1)) == 1
    v = classify_filling(r)
    assert v.kind == "ConstrainedFilling" and v.match == [1, 0, 1, 5, 2]


def test_three_forms_is_other():
    r = rec(p=3, q=1, alexander=[[-2, 1], [-1, -3], [0, -3], [1, -3], [2, 1]])
    v = classify_filling(r)
    assert v.n_forms == 3 and v.kind == "Other"


def test_non_symmetric():
    with pytest.raises(NonSymmetricInput):
        chi_from_record(rec(p=3, q=1, alexander=[[0, 1], [1, -1], [3, 1]]))


def test_torsion_record_needs_chi():
    with pytest.raises(ValueError):
        rec(p=6, q=1, d=2, alexander=[[0, 1]])


@pytest.mark.parametrize("k", [k for k in sweep(9, 7) if k.p > 1][::17])
def test_round_trip_sweep(k):
    try:
        r = record_from_knot(k)
    except ValueError:
        return
    v = classify_filling(r)
    if v.kind == "SimpleFilling":
        return
    assert v.kind in ("ConstrainedFilling", "GeneralConstrainedFilling")
    assert v.virtual["u"] == k.u


def test_run_census_stream():
    lines = [json.dumps({"name": "fig8", "p": 1, "q": 0, "alexander": [[-1, -1], [0, 3], [1, -1]]}),
             "", "{not json", json.dumps({"p": 5, "q": 1, "alexander": [[0, 1]]})]
    out, err = io.StringIO(), io.StringIO()
    assert run_census(lines, out, err) == 2
    rows = [json.loads(x) for x in out.getvalue().splitlines()]
    assert [r["verdict"] for r in rows] == ["ConstrainedFilling", "SimpleFilling"]
    assert "line 3" in err.getvalue()
    out2 = io.StringIO()
    assert run_census(lines[:2], out2, io.StringIO()) == 0
