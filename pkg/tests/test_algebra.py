from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from altknot.algebra import (ONE, T, LaurentPoly, Line, NotDivisible, NotNormalizable,
                             PiecewiseLinear, inertia, normalize_symmetric, poly_determinant,
                             poly_divide_exact, signature_symmetric, upper_envelope)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def test_zero_coefficients_dropped():
    assert LaurentPoly({3: 0, 1: 2}).terms == {1: 2}
    assert LaurentPoly().is_zero()


def test_integer_equality_and_hash():
    assert LaurentPoly.constant(5) == 5
    assert hash(LaurentPoly.constant(5)) == hash(LaurentPoly({0: 5}))


def test_text_form():
    p = T ** 3 - T ** 2 + 1 - T ** -2 + T ** -3
    assert p.to_text() == "t^3 - t^2 + 1 - t^-2 + t^-3"
    assert (2 * T ** 3 - T).to_text() == "2*t^3 - t"
    assert LaurentPoly().to_text() == "0"


@given(polys)
def test_text_roundtrip(p):
    assert LaurentPoly.from_text(p.to_text()) == p


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


@given(polys, nonzero)
def test_exact_division_recovers_factor(a, b):
    assert poly_divide_exact(a * b, b) == a


def test_inexact_division_raises():
    with pytest.raises(NotDivisible):
        poly_divide_exact(T ** 2 + 1, T + 1)


def test_negative_power_of_nonunit_raises():
    with pytest.raises(ValueError):
        (T + 1) ** -1
    assert (2 * T) ** 0 == ONE
    assert T ** -2 * T ** 2 == ONE


@given(polys, st.integers(-3, 3))
def test_evaluation_is_exact(p, x):
    if x == 0 and min(p.terms, default=0) < 0:
        return
    assert p(x) == sum(Fraction(x) ** e * c for e, c in p.terms.items())


def test_normalize_symmetric_fixes_unit_ambiguity():
    delta = T ** 2 - T + 1
    assert normalize_symmetric(delta) == T - 1 + T ** -1
    assert normalize_symmetric(-(T ** 5) * delta) == T - 1 + T ** -1


def test_normalize_symmetric_rejects_asymmetric():
    with pytest.raises(NotNormalizable):
        normalize_symmetric(T ** 2 + 2 * T + 3)


def test_poly_determinant_matches_expansion():
    m = [[T, ONE, 0], [ONE, T, ONE], [0, ONE, T]]
    assert poly_determinant(m) == T ** 3 - 2 * T
    assert poly_determinant([]) == ONE


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_of_constant_matrix(rows):
    m = [[LaurentPoly.constant(x) for x in r] for r in rows]
    a, b, c = rows
    det = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]))
    assert poly_determinant(m) == det


def test_inertia_examples():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[2, 0, 0], [0, -1, 0], [0, 0, 0]]) == (1, 1, 1)
    assert signature_symmetric([[-2, 1], [1, -2]]) == -2


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4),
       st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=4, max_size=4))
def test_inertia_is_congruence_invariant(rows, p):
    n = 4
    sym = [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]
    pm = [row[:] for row in p]
    for i in range(n):
        pm[i][i] = 1
        for j in range(i):
            pm[i][j] = 0            # unit lower-triangular transpose: invertible over Z
    congruent = [[sum(pm[a][i] * sym[a][b] * pm[b][j] for a in range(n) for b in range(n))
                  for j in range(n)] for i in range(n)]
    assert inertia(congruent) == inertia(sym)


def test_inertia_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        inertia([[0, 1], [0, 0]])


def test_piecewise_linear_merges_collinear():
    f = PiecewiseLinear(((0, 0), (1, 1), (2, 2)))
    assert f.breakpoints == ((0, 0), (2, 2))
    assert f(Fraction(1, 3)) == Fraction(1, 3)


def test_piecewise_linear_domain():
    with pytest.raises(ValueError):
        PiecewiseLinear(((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        PiecewiseLinear(((0, 0), (1, 0), (1, 0), (2, 0)))
    with pytest.raises(ValueError):
        PiecewiseLinear(((0, 0), (2, 0)))(3)


def test_envelope_of_two_lines():
    f = upper_envelope([Line(0, -3), Line(-2, 0), Line(-6, 3)])
    assert f.breakpoints == ((0, 0), (Fraction(2, 3), -2), (Fraction(4, 3), -2), (2, 0))


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=6),
       st.fractions(0, 2))
def test_envelope_is_pointwise_max(params, t):
    lines = [Line(a, b) for a, b in params]
    assert upper_envelope(lines)(t) == max(line(t) for line in lines)
