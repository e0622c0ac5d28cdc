import random
from fractions import Fraction

import pytest

from zinbiel2.errors import DivisionByZero
from zinbiel2.fields import PrimeField, Rationals, field_from_name


def test_rational_arithmetic():
    q = Rationals()
    assert q.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert q.mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)
    assert q.inv(Fraction(-2, 7)) == Fraction(-7, 2)
    assert q.neg(Fraction(5)) == Fraction(-5)


def test_gf5_examples():
    f = PrimeField(5)
    assert f.inv(2) == 3          # 2*3 = 6 = 1 mod 5
    assert f.add(4, 4) == 3       # 8 mod 5
    assert f.mul(f.inv(2), 2) == 1
    assert f.neg(2) == 3


def test_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        Rationals().inv(Fraction(0))
    with pytest.raises(DivisionByZero):
        PrimeField(5).inv(0)


def test_nonprime_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_small_characteristic_needs_override():
    with pytest.raises(ValueError):
        PrimeField(2)
    with pytest.raises(ValueError):
        PrimeField(3)
    f2 = PrimeField(2, allow_small_char=True)
    assert not f2.conforming
    assert PrimeField(5).conforming
    assert Rationals().conforming


def test_field_from_name():
    assert field_from_name("q") == Rationals()
    assert field_from_name("gf7") == PrimeField(7)
    assert field_from_name("GF11") == PrimeField(11)
    with pytest.raises(ValueError):
        field_from_name("gfx")
    with pytest.raises(ValueError):
        field_from_name("reals")


def test_parse_fmt_roundtrip():
    q = Rationals()
    for s in ["3/4", "-5/6", "2", "0", "-7"]:
        assert q.fmt(q.parse(s)) == s
    f = PrimeField(5)
    for s in ["0", "1", "4"]:
        assert f.fmt(f.parse(s)) == s
    assert f.parse("9") == 4


def test_gfp_agrees_with_integer_arithmetic():
    # randomized oracle: GF(p) ops equal integer ops reduced mod p
    rng = random.Random(12)
    for p in (5, 7, 13):
        f = PrimeField(p)
        for _ in range(300):
            a, b = rng.randrange(-50, 50), rng.randrange(-50, 50)
            ar, br = a % p, b % p
            assert f.add(ar, br) == (a + b) % p
            assert f.mul(ar, br) == (a * b) % p
            assert f.sub(ar, br) == (a - b) % p
            assert f.neg(ar) == (-a) % p
            if br:
                assert f.mul(f.inv(br), br) == 1
