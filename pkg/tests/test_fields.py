import random
from fractions import Fraction

import pytest

from qdeg.errors import DivisionByZero, NotInvertible, NotPrime
from qdeg.fields import QQ, PrimeField, field_from_name, fp_inv, rat_reduce


def test_rat_reduce_examples():
    assert rat_reduce(2, 4) == Fraction(1, 2)
    r = rat_reduce(-3, -6)
    assert r == Fraction(1, 2) and r.denominator == 2
    z = rat_reduce(0, 5)
    assert z.numerator == 0 and z.denominator == 1


def test_rat_reduce_zero_denominator():
    with pytest.raises(DivisionByZero):
        rat_reduce(1, 0)


def test_fp_inv_examples():
    assert fp_inv(2, 5) == 3
    assert fp_inv(1, 7) == 1
    with pytest.raises(NotInvertible):
        fp_inv(0, 5)


def test_prime_checked_at_construction():
    with pytest.raises(NotPrime):
        PrimeField(6)
    with pytest.raises(NotPrime):
        PrimeField(1)
    PrimeField(2)
    PrimeField(2147483647)  # largest 31-bit prime


def test_field_from_name():
    assert field_from_name("q") == QQ
    assert field_from_name("fp:7") == PrimeField(7)


@pytest.mark.parametrize("field", [QQ, PrimeField(5), PrimeField(2)])
def test_field_axioms_randomized(field):
    rng = random.Random(20240817)

    def sample():
        if field.characteristic == 0:
            return Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        return rng.randrange(field.characteristic)

    for _ in range(1000):
        a, b, c = sample(), sample(), sample()
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b),
                                                          field.mul(a, c))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one


def test_rational_arithmetic_arbitrary_precision():
    big = Fraction(10 ** 50 + 1, 10 ** 50)
    assert QQ.mul(big, big).numerator == (10 ** 50 + 1) ** 2


def test_prime_field_text_form():
    f5 = PrimeField(5)
    assert f5.format(f5.coerce(-1)) == "4"
    assert f5.parse("7") == 2
    assert f5.parse("1/2") == 3  # 2*3 = 6 = 1 mod 5
    assert QQ.format(Fraction(-3, 7)) == "-3/7"
