import json
from fractions import Fraction

import pytest

import semiform as sf

I2 = "a0*a2^3 - 2*a0*a1*a2*a3 + a0^2*a3^2 + a0*a1^2*a4 - a0^2*a2*a4"


def test_polynomial_arithmetic():
    p = sf.Polynomial(2, "a1^2 + a0*a2")
    assert str(p) == "a0*a2 + a1^2"
    disc = sf.Polynomial(2, "a0*a2 - a1^2")
    assert disc * disc == sf.Polynomial(2, "a0^2*a2^2 - 2*a0*a1^2*a2 + a1^4")
    assert (p - p).is_zero()
    assert p.homogeneity() == (2, 2)
    assert sf.Polynomial(3).homogeneity() is None
    assert sf.Polynomial(1, "1/2*a0").terms() == [([1, 0], Fraction(1, 2))]
    with pytest.raises(sf.ContextMismatch):
        sf.Polynomial(2, "a0") + sf.Polynomial(3, "a0")


def test_json_round_trip():
    p = sf.Polynomial(4, I2)
    doc = json.loads(p.to_json())
    assert doc["n"] == 4
    assert sf.Polynomial.from_json(p.to_json()) == p


def test_counting():
    assert sf.gaussian_coefficient(4, 2) == [1, 1, 2, 2, 3, 2, 2, 1, 1]
    assert sf.count_p(2, 4, 4) == 3
    assert sf.delta_table(4, 4) == [1, 0, 1, 1, 2, 0, 2, 0, 1]
    assert sf.strict_unimodality_report(4, 4)["violations"] == [5, 7]
    assert sf.enumerate_box_partitions(2, 2, 2) == [[2, 0], [1, 1]]
    # Gaussian coefficients outgrow 64 bits quickly; they come back as Python ints.
    assert sum(sf.gaussian_coefficient(40, 40)) == 107507208733336176461620


def test_operators():
    i2 = sf.Polynomial(4, I2)
    assert sf.apply_D(i2).is_zero()
    assert sf.is_semi_invariant(i2) and sf.is_semi_invariant(i2, "shear")
    assert not sf.is_semi_invariant(sf.Polynomial(2, "a1"))
    assert sf.operator_power("D", 3, sf.Polynomial(3, "a3")) == sf.Polynomial(3, "6*a0")
    assert sf.taylor_check(i2, "h") and sf.taylor_check(i2, "v")
    assert sf.hilbert_residual([2, 1], 2, 3, 2).is_zero()
    assert sf.second_hilbert_residual([2, 1], 2, 3, 2).is_zero()
    assert sf.commutator_census([2, 1], 2, 3, 2)["ok"]


def test_invariant_spaces():
    basis = sf.semi_invariant_basis(4, 4, 6)
    assert len(basis) == 2
    assert sf.span_contains(basis, sf.Polynomial(4, I2))
    assert sf.basis_Q(2, 2, 2) == ["a0*a2", "a1^2"]
    report = sf.sylvester_report(2, 2, 2)
    assert report["ok"] and report["chain_dims"] == [2, 1, 1, 0]
    w = sf.additivity_witness(4, 4, 4, 12)
    assert (w["m1"], w["m2"]) == (8, 4)
    assert sf.is_semi_invariant(w["result"])
    with pytest.raises(ValueError):
        sf.additivity_witness(2, 2, 2, 3)


def test_cli_round_trip():
    code, out, err = sf.run_cli(["gauss", "--n", "2", "--k", "2", "--json"])
    assert code == 0 and json.loads(out) == {"coeffs": [1, 1, 2, 1, 1]}
    code, _, _ = sf.run_cli(["no-such-command"])
    assert code == 2
