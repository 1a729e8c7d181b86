from fractions import Fraction

import pytest

import conormal


def test_groebner_and_invariants():
    I = conormal.ideal(31991, ["x", "y"], ["x^2", "y^2"])
    gb = conormal.groebner_basis(I)
    assert gb.elements == ["y^2", "x^2"]
    assert gb.is_zero_dimensional()
    assert conormal.hilbert_function(gb) == [1, 2, 1]
    inv = conormal.invariants(gb)
    assert inv["gorenstein"] and inv["type"] == 1 and inv["length"] == 4
    assert gb.contains("x^2*y")
    assert gb.normal_form("x^2 + x*y") == "x*y"
    assert conormal.groebner_basis(I, order="lex").order == "lex"


def test_square_of_maximal_ideal():
    for c in range(2, 7):
        names = [f"x{i}" for i in range(c)]
        m = conormal.ideal(31991, names, names)
        assert conormal.length(conormal.groebner_basis(conormal.square(m))) == c + 1


def test_parse_errors_are_typed():
    with pytest.raises(conormal.ParseError):
        conormal.parse_ideal("ring p=7 vars=x,y\nx^2 + + y\n")
    with pytest.raises(conormal.ConormalError):
        conormal.parse_ideal("ring p=4 vars=x\nx\n")
    assert issubclass(conormal.ParseError, ValueError)


def test_criteria():
    assert conormal.Q(5, 4) == 6
    assert conormal.Q(2, 8) == Fraction(1, 3)
    assert conormal.Q(3, 4) == -5
    assert conormal.undecided_quadric_counts(5) == [11]
    v = conormal.quadric_count_verdict(5, 12)
    assert v["outcome"] == "NotCM" and v["rule"] == "quadric-count-upper"
    assert conormal.conjectured_point_count(5) == 10
    assert "Q(c, s)" in conormal.criteria_table(4, 4)


def test_example_reproduction():
    r = conormal.verify_example61()
    assert r["ok"]
    assert all(r["facts"].values())
    assert r["invariants"]["hf"] == [1, 5, 4]
    assert r["cm_square"] == "CM" and r["lambda_min"] == 60


def test_points_pipeline():
    pts = conormal.random_general_points(5, 9, seed=3)
    gb = conormal.vanishing_ideal(5, 31991, pts)
    assert conormal.is_cm_square(gb) == "NotCM"
    report = conormal.analyze(gb)
    assert report["multiplicity"] == 9 and report["q"] == 12
    assert report["agreement"]
    assert "cm_square: NotCM\n" in report["text"]


def test_conjecture_counterexample():
    r = conormal.conjecture(5, seed=2)
    assert r["n"] == 10
    assert r["counterexample"]
    with pytest.raises(conormal.ConormalError):
        conormal.conjecture(9)
