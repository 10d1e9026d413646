"""Smoke tests for the _polyescape extension module.

They exercise the bound crossing itself: exact strings in, exact strings and
dicts out, with values pinned against the C++ unit oracles.
"""

import json
import math
from fractions import Fraction

import pytest

import _polyescape as pe

GROWTH = json.dumps(
    {
        "mode": "continuous",
        "A": [["1/8"]],
        "B": [["1"], ["-1"]],
        "c": ["2", "-1"],
    }
)

TRAPPED = json.dumps(
    {"mode": "continuous", "A": [["0"]], "B": [["1"], ["-1"]], "c": ["2", "-1"]}
)

DISCRETE_DOUBLE = json.dumps(
    {"mode": "discrete", "A": [["2"]], "B": [["1"], ["-1"]], "c": ["3", "-1"]}
)


def test_instance_round_trip():
    inst = pe.Instance.from_json(GROWTH)
    assert inst.mode == "continuous"
    assert inst.dimension == 1
    assert inst.constraint_count == 2
    again = pe.Instance.from_json(inst.to_json())
    assert again.to_json() == inst.to_json()


def test_decimal_strings_parse_exactly():
    inst = pe.Instance.from_json(
        json.dumps({"mode": "discrete", "A": [["1.01"]], "B": [["1"]], "c": ["2"]})
    )
    matrix = json.loads(inst.to_json())["A"]
    assert matrix == [["101/100"]]


def test_malformed_instance_raises_value_error():
    with pytest.raises(ValueError):
        pe.Instance.from_json('{"mode": "continuous"}')


def test_decide_all_escape():
    result = pe.decide(pe.Instance.from_json(GROWTH))
    assert result["verdict"] == "all-escape"
    assert result["witness"] is None


def test_decide_trapped_witness_is_exact():
    result = pe.decide(pe.Instance.from_json(TRAPPED))
    assert result["verdict"] == "trapped-point-exists"
    (w,) = result["witness"]
    assert 1 <= Fraction(w) <= 2  # an exact fixed point inside P


def test_escape_bound_values():
    cert = pe.escape_bound(pe.Instance.from_json(GROWTH))
    assert cert.mode == "continuous"
    assert cert.dimension == 1
    assert cert.coefficient_bits == 5
    assert cert.total_bound["form"] == "value"
    assert Fraction(cert.total_bound["value"]) == 51200
    # serialization is lossless
    again = pe.EscapeCertificate.from_json(cert.to_json())
    assert again.to_json() == cert.to_json()


def test_escape_bound_requires_all_escape():
    with pytest.raises(ValueError):
        pe.escape_bound(pe.Instance.from_json(TRAPPED))


def test_escape_time_matches_closed_form():
    run = pe.escape_time(pe.Instance.from_json(GROWTH), ["1"], "100")
    assert run["escaped"]
    t = Fraction(run["escape_time"])
    expected = 8 * math.log(2)
    assert abs(float(t) - expected) / expected < 1e-6


def test_discrete_escape_iteration():
    run = pe.escape_time(pe.Instance.from_json(DISCRETE_DOUBLE), ["1"], "50")
    assert run["escaped"]
    assert Fraction(run["escape_time"]) == 2


def test_sample_points_deterministic():
    inst = pe.Instance.from_json(GROWTH)
    a = pe.sample_points(inst, interior=3, seed=9)
    b = pe.sample_points(inst, interior=3, seed=9)
    assert a == b
    assert len(a) == 2 + 3  # two vertices plus the interior points
    for point in a:
        assert 1 <= Fraction(point[0]) <= 2


def test_validate_passes_on_computed_certificate():
    inst = pe.Instance.from_json(GROWTH)
    cert = pe.escape_bound(inst)
    report = pe.validate(inst, cert, samples=2, seed=3)
    assert report["status"] == "pass"
    assert report["bound_within_cap"]
    assert all(s["escaped"] for s in report["samples"])
    assert Fraction(report["max_observed_escape"]) < Fraction(report["horizon"])
