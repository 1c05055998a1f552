"""Exact scalar arithmetic: rationals and prime fields never mix silently."""

from fractions import Fraction

import pytest

from ccv import GF, QQ, FieldMismatchError, FpElement, exact_str, field_from_spec
from ccv.fields import is_prime


def test_gf_requires_prime_modulus():
    for bad in (0, 1, 4, 6, 91, -5):
        with pytest.raises(ValueError):
            GF(bad)
    GF(2)
    GF(97)


def test_gf_is_cached():
    assert GF(5) is GF(5)
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
              59, 61, 67, 71, 73, 79, 83, 89, 97, 101}
    for n in range(-2, 102):
        assert is_prime(n) == (n in primes)


def test_fp_arithmetic_mod_7():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a - b == F(5)
    assert a * b == F(1)
    assert a / b == F(2)
    assert -a == F(4)
    assert a ** 6 == F(1)
    assert a ** -1 == F(5)
    assert b.inverse() == F(3)


def test_fp_mixes_with_plain_ints():
    F = GF(5)
    assert F(3) + 4 == F(2)
    assert 4 + F(3) == F(2)
    assert 2 - F(3) == F(4)
    assert F(2) == 7
    assert F(2) != 8


def test_fp_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        GF(5)(0).inverse()
    with pytest.raises(ZeroDivisionError):
        GF(5)(1) / GF(5)(0)


def test_different_primes_never_combine():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        GF(5)(1) == GF(7)(1)
    with pytest.raises(FieldMismatchError):
        GF(5)(1) * Fraction(1, 2)
    with pytest.raises(FieldMismatchError):
        QQ(GF(5)(1))


def test_field_mismatch_is_a_type_error():
    # callers that catch TypeError still see the failure
    assert issubclass(FieldMismatchError, TypeError)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        QQ(0.5)
    with pytest.raises(TypeError):
        GF(5)(0.5)


def test_prime_field_rejects_bool():
    with pytest.raises(TypeError):
        GF(5)(True)


def test_rational_field_coercions():
    assert QQ(3) == Fraction(3)
    assert QQ("3/4") == Fraction(3, 4)
    assert QQ(Fraction(-2, 6)) == Fraction(-1, 3)
    assert QQ.inv(Fraction(2)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)


def test_prime_field_coerces_fractions_via_inverse():
    F = GF(7)
    assert F(Fraction(1, 2)) == F(4)
    assert F("10") == F(3)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


def test_fp_element_hash_consistent_with_eq():
    a = GF(11)(4)
    b = GF(11)(15)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_field_from_spec():
    assert field_from_spec("rational") == QQ
    assert field_from_spec({"prime": 11}) == GF(11)
    with pytest.raises(ValueError):
        field_from_spec({"prime": 4})
    with pytest.raises(ValueError):
        field_from_spec("complex")
    with pytest.raises(ValueError):
        field_from_spec({"prime": 5, "extra": 1})


def test_describe_round_trips_through_spec():
    for field in (QQ, GF(5), GF(101)):
        assert field_from_spec(field.describe()) == field


def test_exact_str():
    assert exact_str(Fraction(5, 2)) == "5/2"
    assert exact_str(Fraction(3)) == "3"
    assert exact_str(Fraction(-1, 2)) == "-1/2"
    assert exact_str(GF(5)(3)) == "3"


def test_fp_repr_is_unambiguous():
    assert repr(FpElement(3, 5)) == "FpElement(3, 5)"
    assert str(FpElement(3, 5)) == "3"
