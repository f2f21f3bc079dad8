from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k3cone import linalg
from k3cone.errors import DegenerateFormError, InputError

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


def test_to_fraction_accepts_ints_and_strings():
    assert linalg.to_fraction(3) == 3
    assert linalg.to_fraction("2/5") == Fraction(2, 5)
    assert linalg.to_fraction(Fraction(1, 3)) == Fraction(1, 3)


def test_to_fraction_rejects_floats():
    with pytest.raises(InputError):
        linalg.to_fraction(0.5)


def test_inverse_round_trip():
    m = linalg.matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    inv = linalg.inverse(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(3)


def test_inverse_singular_raises():
    with pytest.raises(DegenerateFormError):
        linalg.inverse(linalg.matrix([[1, 2], [2, 4]]))


def test_solve_exact():
    m = linalg.matrix([[0, 1], [1, 0]])
    assert linalg.solve(m, (Fraction(3), Fraction(5, 2))) == (Fraction(5, 2),
                                                              Fraction(3))


def test_nullspace_deterministic_and_correct():
    m = linalg.matrix([[1, 1, 0, 0], [0, 0, 1, 1]])
    ns = linalg.nullspace(m)
    assert len(ns) == 2
    for v in ns:
        assert all(x == 0 for x in linalg.mat_vec(m, v))
    assert ns == linalg.nullspace(m)


def test_rank():
    assert linalg.rank(linalg.matrix([[1, 2], [2, 4]])) == 1
    assert linalg.rank(linalg.identity(3)) == 3


def test_mat_pow_negative_exponent():
    m = linalg.matrix([[1, 1], [0, 1]])
    assert linalg.mat_pow(m, -2) == linalg.matrix([[1, -2], [0, 1]])
    assert linalg.mat_pow(m, 0) == linalg.identity(2)


@given(st.lists(fractions, min_size=2, max_size=2),
       st.lists(fractions, min_size=2, max_size=2), fractions)
@settings(max_examples=50, deadline=None)
def test_vector_ops_are_linear(u, v, c):
    u, v = linalg.vector(u), linalg.vector(v)
    left = linalg.vec_scale(c, linalg.vec_add(u, v))
    right = linalg.vec_add(linalg.vec_scale(c, u), linalg.vec_scale(c, v))
    assert left == right
    assert linalg.vec_sub(u, u) == linalg.zero_vector(2)
