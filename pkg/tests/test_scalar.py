import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moyal.errors import DivisionByZero
from moyal.scalar import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    RadicalScalar,
    gq_ops,
    rad_normalize,
    rad_ops,
    squarefree_split,
)

fractions = st.builds(Fraction, st.integers(-(10**6), 10**6), st.integers(1, 50))
gaussians = st.builds(GaussianRational, fractions, fractions)
nonzero_gaussians = gaussians.filter(bool)


def test_additive_inverse_of_imaginary_parts():
    a = GaussianRational(Fraction(1, 2), 1)
    b = GaussianRational(Fraction(1, 2), -1)
    assert gq_ops(a, b, "add") == ONE


def test_i_squared():
    assert gq_ops(I, I, "mul") == -1


def test_division_checked_by_back_multiplication():
    q = gq_ops(GaussianRational(1, 1), GaussianRational(1, -1), "div")
    assert q * GaussianRational(1, -1) == GaussianRational(1, 1)
    assert q == I


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gq_ops(ONE, ZERO, "div")
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_reduced_form_and_accessors():
    z = GaussianRational(Fraction(4, 6), Fraction(-3, 9))
    assert z.re == Fraction(2, 3) and z.im == Fraction(-1, 3)
    assert z.re.denominator > 0 and math.gcd(z.re.numerator, z.re.denominator) == 1
    assert GaussianRational(0, 0) == 0 and not GaussianRational(0, 0)
    assert gq_ops(z, None, "conj") == GaussianRational(Fraction(2, 3), Fraction(1, 3))
    assert gq_ops(z, None, "neg") == -z


def test_rendering():
    assert str(GaussianRational(Fraction(3, 2), Fraction(1, 2))) == "(3/2+1/2i)"
    assert str(GaussianRational(0, -1)) == "-i"
    assert str(GaussianRational(-2)) == "-2"


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == ZERO


@given(nonzero_gaussians, gaussians)
def test_multiplicative_inverse(a, b):
    assert a * (ONE / a) == ONE
    assert (b / a) * a == b


@given(gaussians)
def test_hash_consistent_with_eq(a):
    b = GaussianRational(a.re, a.im)
    assert a == b and hash(a) == hash(b)
    if a.is_real():
        assert hash(a) == hash(a.re)


# -- radicals ---------------------------------------------------------------------


def test_rad_normalize_examples():
    assert rad_normalize(1, 8, 0) == RadicalScalar({(2, 0): 2})
    assert rad_normalize(1, 1, 0) == RadicalScalar({(1, 0): 1})
    assert rad_normalize(1, 12, 2) == RadicalScalar({(3, 2): 2})
    assert rad_normalize(5, 0, 3) == RadicalScalar()


def test_rad_ops_examples():
    s2, s3 = rad_normalize(1, 2), rad_normalize(1, 3)
    assert rad_ops(s2, s3, "mul") == rad_normalize(1, 6)
    assert rad_ops(s2, s2, "mul") == rad_normalize(2, 1)
    assert rad_ops(rad_ops(s2, s3, "add"), rad_normalize(-1, 2), "add") == s3


def test_canonical_rendering():
    s = RadicalScalar({(6, 2): GaussianRational(Fraction(3, 2), Fraction(1, 2)), (1, 0): -1})
    assert str(s) == "-1 + (3/2+1/2i)*sqrt(6)*hbar^2"
    assert str(rad_normalize(1, 2)) == "sqrt(2)"
    assert str(RadicalScalar()) == "0"


@pytest.mark.parametrize("n", range(1, 400))
def test_squarefree_split(n):
    s, r = squarefree_split(n)
    assert s * s * r == n
    assert all(r % (f * f) for f in range(2, r + 1))


radicals = st.dictionaries(
    st.tuples(st.integers(1, 60), st.integers(0, 3)),
    gaussians,
    max_size=4,
).map(RadicalScalar)


@given(radicals, radicals, radicals)
def test_radical_mul_commutative_associative(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(radicals)
def test_normalize_idempotent(a):
    assert RadicalScalar(a.terms) == a
    assert all(squarefree_split(r)[0] == 1 for (r, _) in a.terms)


@given(st.integers(0, 500), gaussians, st.integers(0, 3))
def test_numeric_evaluation_matches(radicand, c, k):
    s = rad_normalize(c, radicand, k)
    expected = complex(c) * math.sqrt(radicand)
    got = s.evaluate(1.0)
    assert abs(got - expected) <= 1e-12 * max(1.0, abs(expected))


@given(radicals, radicals)
def test_numeric_evaluation_of_products(a, b):
    exact = (a * b).evaluate(1.0)
    approx = a.evaluate(1.0) * b.evaluate(1.0)
    assert abs(exact - approx) <= 1e-12 * max(1.0, abs(approx))
