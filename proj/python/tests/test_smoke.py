from fractions import Fraction

import pytest

import quatrefine as qr


def test_zeta_and_class_number():
    assert qr.zeta(5) == Fraction(1, 30)
    assert qr.class_number(-23) == 3


def test_refined_d7():
    c = qr.refined(7, "Hinf")
    assert c["h_total"] == 3
    assert c["counts"]["S4"] == {"t": 1, "h": 1}
    assert c["checks"] == {"mass_residual": "0", "eichler_residual": "0"}


def test_prime_and_census():
    assert qr.prime(5)["counts"]["A5"]["t"] == 1
    assert qr.crosscheck_prime(7) == []
    assert qr.census(7)["h_pi"] == 3


def test_order_verify():
    assert qr.order_verify("a4-d5mod8", 13)["ok"]


def test_errors():
    with pytest.raises(qr.ValidationError):
        qr.refined(12)
    with pytest.raises(ValueError):
        qr.prime(9)
