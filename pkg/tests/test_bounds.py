from fractions import Fraction

import pytest

from altknot.bounds import (TABLE_COLUMNS, AltBounds, abe_bound, alt_exact, asymptotic_lower,
                            asymptotic_status, bounds, kanenobu_braid4_bounds,
                            lipschitz_transfer, pair_lower_bound, table_row, tau_upsilon_bound,
                            torus_corpus)
from altknot.invariants import TorusKnot


def test_pair_lower_bound():
    assert pair_lower_bound(3, -2) == 5
    assert pair_lower_bound(Fraction(1, 2), 1) == Fraction(1, 2)


def test_alt_bounds_validation():
    with pytest.raises(ValueError):
        AltBounds(3, 2)
    with pytest.raises(ValueError):
        AltBounds(1, 2, exact=1)
    with pytest.raises(ValueError):
        AltBounds(-1)


@pytest.mark.parametrize("n", range(1, 7))
def test_tau_upsilon_on_families(n):
    for k in (TorusKnot(3, 3 * n + 1), TorusKnot(3, 3 * n + 2), TorusKnot(4, 2 * n + 1)):
        assert tau_upsilon_bound(k) == n


@pytest.mark.parametrize("p,q,value", [(3, 4, 0), (3, 7, 2), (2, 7, 0), (4, 5, 2)])
def test_abe_bound(p, q, value):
    assert abe_bound(TorusKnot(p, q)) == value


def test_bounds_t49():
    b = bounds(TorusKnot(4, 9))
    assert (b.lower, b.upper, b.exact) == (4, 4, 4)
    assert [kind for kind, _ in b.provenance] == ["exact", "lower", "upper", "certificate"]
    assert ("certificate", "certify --n 4") in b.provenance


def test_bounds_outside_scope():
    b = bounds(TorusKnot(5, 6))
    assert b.exact is None and b.upper is None and b.lower == 4


def test_sandwich_closes_for_small_braid_index():
    for k in torus_corpus((2, 3, 4), 21):
        b = bounds(k)
        want = 0 if k.p == 2 else k.genus // 3
        assert alt_exact(k) == b.lower == b.upper == b.exact == want


def test_alt_exact_unknown_above_four():
    assert alt_exact(TorusKnot(5, 7)) is None


def test_kanenobu_comparison():
    assert kanenobu_braid4_bounds(4) == (4, 6)
    assert kanenobu_braid4_bounds(5) == (4, 7)


def test_asymptotics():
    assert asymptotic_lower(3).lower == 1
    assert asymptotic_lower(4).lower == 2
    assert asymptotic_lower(5).lower == 4
    assert asymptotic_lower(6).lower == 6
    assert asymptotic_status(4).startswith("equality")
    assert asymptotic_status(5).startswith("open")


@pytest.mark.parametrize("p", [3, 4])
def test_alt_grows_by_asymptotic_constant_per_full_twist(p):
    for k in torus_corpus((p,), 40):
        assert alt_exact(TorusKnot(p, k.q + p)) - alt_exact(k) == asymptotic_lower(p).lower


def test_lipschitz_transfer():
    assert lipschitz_transfer(4, 5, 9, 2) == (0, 8)
    assert lipschitz_transfer(3, 4, 5, 1) == (0, 2)
    with pytest.raises(ValueError):
        lipschitz_transfer(4, 6, 9, 2)


def test_lipschitz_transfer_is_consistent_with_exact_values():
    for p in (3, 4):
        ks = torus_corpus((p,), 21)
        for a in ks:
            for b in ks:
                lo, hi = lipschitz_transfer(p, a.q, b.q, alt_exact(a))
                assert lo <= alt_exact(b) <= hi


def test_table_row():
    row = table_row(TorusKnot(3, 7))
    assert tuple(row) == TABLE_COLUMNS
    assert (row["g"], row["tau"], row["upsilon1"], row["lower_tau_upsilon"], row["exact"]) == \
        (6, 6, -4, 2, 2)


def test_corpus_only_knots():
    assert [str(k) for k in torus_corpus((4,), 11)] == ["T(4,5)", "T(4,7)", "T(4,9)", "T(4,11)"]
