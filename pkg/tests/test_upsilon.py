import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altknot.algebra import T
from altknot.bounds import torus_corpus
from altknot.invariants import TorusKnot, alexander_torus
from altknot.upsilon import (ExponentSeq, NotStaircaseForm, exponents_of, staircase_of,
                             upsilon1, upsilon_of_poly, upsilon_torus)

coprime_torus = st.tuples(st.integers(2, 6), st.integers(3, 25)).filter(
    lambda pq: pq[0] < pq[1] and math.gcd(*pq) == 1).map(lambda pq: TorusKnot(*pq))


def test_t34_exponents_and_staircase():
    e = exponents_of(alexander_torus(TorusKnot(3, 4)))
    assert e.exponents == (3, 2, 0, -2, -3)
    assert staircase_of(e).vertices == ((0, 3), (1, 3), (1, 1), (3, 1), (3, 0))
    assert staircase_of(e).corners == ((0, 3), (1, 1), (3, 0))


def test_t34_breakpoints():
    f = upsilon_torus(TorusKnot(3, 4))
    assert f.breakpoints == ((0, 0), (Fraction(2, 3), -2), (Fraction(4, 3), -2), (2, 0))


def test_trefoil():
    f = upsilon_of_poly(T - 1 + T ** -1)
    assert f.breakpoints == ((0, 0), (1, -1), (2, 0))


def test_first_step_down_convention_is_wrong():
    # stepping down first would pair the gaps with the wrong axis and give -3 for T(3,4)
    a = exponents_of(alexander_torus(TorusKnot(3, 4))).exponents
    i, j, corners = 0, a[0], [(0, a[0])]
    for k in range(len(a) - 1):
        gap = a[k] - a[k + 1]
        if k % 2 == 0:
            j -= gap
        else:
            i += gap
            corners.append((i, j))
    assert max(-(x + y) for x, y in corners) == -3
    assert upsilon1(TorusKnot(3, 4)) == -2


def test_rejects_non_lspace_polynomial():
    with pytest.raises(NotStaircaseForm):
        exponents_of(-T + 3 - T ** -1)
    with pytest.raises(NotStaircaseForm):
        ExponentSeq((2, 1, 0, -2))
    with pytest.raises(NotStaircaseForm):
        ExponentSeq((3, 1, -2))


@given(coprime_torus)
def test_shape(k):
    f = upsilon_torus(k)
    slopes = f.slopes()
    assert f(0) == 0
    assert slopes[0] == -k.genus
    assert all(f(t) == f(2 - t) for t, _ in f.breakpoints)
    assert all(a <= b for a, b in zip(slopes, slopes[1:]))


@given(coprime_torus)
def test_upsilon1_is_value_at_one(k):
    assert upsilon_torus(k)(1) == upsilon1(k)


@given(coprime_torus)
def test_exponent_polynomial_roundtrip(k):
    delta = alexander_torus(k)
    assert exponents_of(delta).polynomial() == delta


@pytest.mark.parametrize("n", range(1, 7))
def test_family_values(n):
    assert upsilon1(TorusKnot(3, 3 * n + 1)) == -2 * n
    assert upsilon1(TorusKnot(3, 3 * n + 2)) == -2 * n - 1
    assert upsilon1(TorusKnot(4, 2 * n + 1)) == -2 * n


def test_two_strand_upsilon_is_minus_genus():
    for k in torus_corpus((2,), 21):
        assert upsilon1(k) == -k.genus
