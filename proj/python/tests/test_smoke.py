import math

import pytest

import gcalc


def test_geometric_product():
    g = gcalc.Gram([[1.0, 0.5], [0.5, 1.0]])
    e1 = gcalc.Multivector(2, {"1": 1.0})
    e2 = gcalc.Multivector(2, {"2": 1.0})
    assert gcalc.gp(e1, e2, g).to_dict() == pytest.approx({"": 0.5, "1,2": 1.0}, abs=1e-14)
    assert gcalc.wedge(e1, e1).to_dict() == {}
    mink = gcalc.Gram.diagonal([1, -1, -1, -1])
    assert gcalc.gp(gcalc.Multivector(4, {"2": 1}), gcalc.Multivector(4, {"2": 1}), mink).to_dict() == pytest.approx({"": -1.0})


def test_dual_and_sum():
    i3 = gcalc.Gram.identity(3)
    e1 = gcalc.Multivector.vector([1.0, 0.0, 0.0])
    assert gcalc.dual(e1, i3).to_dict() == pytest.approx({"2,3": -1.0})
    a = gcalc.Multivector(3, {"": 1, "1": 2, "1,2": 3})
    total = gcalc.grade(a, 0) + gcalc.grade(a, 1) + gcalc.grade(a, 2)
    assert total.to_dict() == a.to_dict()
    assert (2 * a)["1,2"] == 6


def test_trace_rot():
    tr, rot = gcalc.trace_rot([[0, 0.7, 0], [-0.7, 0, 0], [0, 0, 0]], gcalc.Gram.identity(3))
    assert tr == 0
    assert rot.to_dict() == pytest.approx({"1,2": 1.4})


def test_jets():
    value, grad, hess = gcalc.jet("x*y", ["x", "y"], [2, 3])
    assert value == 6 and grad == [3, 2] and hess == [[0, 1], [1, 0]]
    assert gcalc.parse("x*y + 1", ["x", "y"]) == gcalc.parse("(x*y)+1", ["x", "y"])
    with pytest.raises(gcalc.GcalcError, match="position 4"):
        gcalc.parse("sin(", ["x"])
    with pytest.raises(gcalc.GcalcError):
        gcalc.jet("1/x", ["x"], [0.0])


def test_operators_on_charts():
    assert "sphere2" in gcalc.charts()
    assert gcalc.eval("grad", "phi: x^2+y^2", {"x": 1, "y": 2}, chart="euclid2") == {"1": 2, "2": 4}
    out = gcalc.eval("mdd", "e_phi", {"theta": math.pi / 4, "phi": 0}, chart="sphere2", dir={1: 1.0})
    assert out == pytest.approx({"2": 1.0})
    conn = gcalc.connection({"theta": math.pi / 4, "phi": 0}, chart="sphere2")
    assert conn["gamma_bar"]["2,2,1"] == pytest.approx(-0.5)
    polar = gcalc.connection({"r": 2, "theta": 0}, chart="polar2", mixed=True)
    assert polar["gamma_mixed"]["2,2,1"] == pytest.approx(-2.0)
    with pytest.raises(gcalc.GcalcError, match="unknown field"):
        gcalc.eval("grad", "nope", {"x": 1, "y": 2}, chart="euclid2")


def test_maxwell():
    r = gcalc.maxwell({"y": "x^2/2"}, {"t": 0, "x": 1.5, "y": 0, "z": 0})
    assert r["F"] == {"2,3": 1.5}
    assert r["dF"] == 0
    assert r["J"] == {"3": 1}


def test_checks():
    r = gcalc.check(suite="algebra", samples=2)
    assert r["passed"] is True
    assert r == gcalc.check(suite="algebra", samples=2)
    assert gcalc.check(suite="algebra", samples=1, tol=1e-30)["passed"] is False
