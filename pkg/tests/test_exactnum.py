from __future__ import annotations

import pickle
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fermdagger.errors import DivisionByZero, ScalarParseError
from fermdagger.exactnum import I, ONE, ZERO, Scalar, format_scalar, parse_scalar

rats = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
scalars = st.builds(Scalar, rats, rats)
nonzero = scalars.filter(lambda z: not z.is_zero())


@pytest.mark.parametrize("text,re,im", [
    ("0", 0, 0),
    ("3/2-i", Fraction(3, 2), -1),
    ("1/2*i", 0, Fraction(1, 2)),
    ("-i", 0, -1),
    ("i", 0, 1),
    ("-4", -4, 0),
    ("2/4+6/8*i", Fraction(1, 2), Fraction(3, 4)),
])
def test_parse(text, re, im):
    assert parse_scalar(text) == Scalar(re, im)


@pytest.mark.parametrize("z,text", [
    (Scalar(Fraction(3, 2), -1), "3/2-i"),
    (Scalar(0, Fraction(1, 2)), "1/2*i"),
    (-I, "-i"),
    (ZERO, "0"),
    (Scalar(-2, 3), "-2+3*i"),
])
def test_format(z, text):
    assert format_scalar(z) == text


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1++i", "i*i"])
def test_parse_rejects(bad):
    with pytest.raises((ScalarParseError, DivisionByZero)):
        parse_scalar(bad)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_i_squared():
    assert I * I == -ONE
    assert I ** 4 == ONE
    assert I ** -1 == -I


@given(scalars)
def test_round_trip_text(z):
    assert parse_scalar(format_scalar(z)) == z


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(nonzero)
def test_inverse(z):
    assert z * z.inverse() == ONE
    assert z / z == ONE


@given(scalars, scalars)
def test_conj_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a
    assert (a * a.conj()).is_real()
    assert a.norm2() == (a * a.conj()).re


@given(scalars)
def test_hash_and_pickle(z):
    assert hash(z) == hash(Scalar(z.re, z.im))
    assert pickle.loads(pickle.dumps(z)) == z


def test_int_interop():
    assert Scalar(2) == 2
    assert 1 + I == Scalar(1, 1)
    assert 2 * I == Scalar(0, 2)
