"""Smoke tests for the python bindings."""

import json

import pytest

import riordan as rc


def test_bernoulli_numbers():
    assert rc.bernoulli_numbers(5) == ["1", "-1/2", "1/6", "0", "-1/30"]
    assert rc.bernoulli_numbers(21)[20] == "-174611/330"


def test_poly_arithmetic_and_substitution():
    p = rc.Poly("1+q") * rc.Poly("1-q")
    assert p == rc.Poly("1 - q^2")
    assert str(rc.Poly("1+q+q^2").substitute("q", "1")) == "3"
    with pytest.raises(ValueError):
        rc.Poly("z+1")


def test_pascal_roundtrip():
    pascal = rc.RiordanArray.parse("1/(1-x);x/(1-x)", order=6)
    m = pascal.to_matrix()
    assert str(m.entry(4, 2)) == "6"
    assert m.mul(m.inverse()).is_identity()
    inv = pascal.inverse()
    assert inv.h().coeffs() == ["0", "1", "-1", "1", "-1", "1"]
    assert pascal.subgroup_member("pascal") == {
        "kind": "pascal", "member": True, "witness": {"alpha": "1"}, "order": 6,
    }
    assert not pascal.subgroup_member("appell")["member"]


def test_triangle_json_roundtrip():
    t = rc.Triangle.from_toeplitz(["1", "1", "1/2", "1/6"], 4)
    again = rc.Triangle.from_json(t.to_json())
    assert again == t
    assert json.loads(t.to_json())["order"] == 4


def test_series_reversion():
    h = rc.Series.expression("y - y^2", 5)
    cat = h.revert()
    assert cat.coeffs() == ["0", "1", "1", "2", "5", "14"]


def test_identity_runs():
    rep = rc.run_identity("BERN_INV", order=8)
    assert rep["verdict"] == "pass"
    assert rep["first_mismatch"] is None
    reports = rc.run_all(order=4, q_bound=12)
    assert len(reports) >= 40
    assert all(r["verdict"] == "pass" for r in reports)


def test_pair_check():
    delta = json.dumps({"polys": ["1", "0", "0", "0", "0", "0"]})
    assert rc.pair_check(delta, delta, order=6)["verdict"] == "pass"
    wrong = json.dumps({"polys": ["1", "1", "1", "1", "1", "1"]})
    bad = rc.pair_check(delta, wrong, order=6)
    assert bad["verdict"] == "fail"
    assert bad["first_mismatch"] == {"n": 1, "j": 0, "lhs": "1", "rhs": "0"}


def test_gbt_and_families():
    assert rc.gbt(["1", "1", "1", "1"], "1") == ["1", "2", "4", "8"]
    assert "rogers_szego.R" in rc.list_sequence_families()
    assert rc.sequence_family("hermite.He", 3) == ["1", "x", "x^2 - 1"]
    with pytest.raises(ArithmeticError):
        rc.Triangle.from_toeplitz(["0", "1"], 2).inverse()
