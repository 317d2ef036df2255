"""
Bounds on the alternating number of torus knots.

Lower bounds come from pairs of invariants that agree on alternating knots and
move by at most one under a crossing change (|tau + upsilon| and Abe's
signature bound); upper bounds from explicit crossing-change constructions.
For braid index at most 4 the two sides meet.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .invariants import TorusKnot, genus_tau_s, signature_of
from .upsilon import upsilon1

EXACT_34 = "alt = floor(g/3) for braid index 3 and 4 (lower and upper bounds meet)"
EXACT_2 = "braid index 2 torus knots are alternating"
LOWER_TU = "|tau + upsilon| lower bound"
LOWER_ABE = "|s - sigma|/2 lower bound"
UPPER_3 = "3-braid bound alt <= dalt <= n"
UPPER_4 = "4-braid band construction: n crossing changes give T(2,2n+1) # T(2,2n+1)"


@dataclasses.dataclass(frozen=True)
class AltBounds:
    lower: int
    upper: int | None = None
    exact: int | None = None
    provenance: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.lower < 0:
            raise ValueError("lower bound must be nonnegative")
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
        if self.exact is not None and not (self.lower == self.exact == self.upper):
            raise ValueError("exact value must coincide with both bounds")


@dataclasses.dataclass(frozen=True)
class AsymptoticBound:
    p: int
    lower: Fraction


def pair_lower_bound(x, y) -> Fraction:
    """
    |x - y| for two invariants that agree on alternating knots and satisfy
    psi(K-) - 1 <= psi(K+) <= psi(K-) under a positive-to-negative crossing change.
    Checking those hypotheses is the caller's job.
    """
    return abs(Fraction(x) - Fraction(y))


def tau_upsilon_bound(k: TorusKnot) -> int:
    _, tau, _ = genus_tau_s(k)
    # psi_1 = -tau, psi_2 = upsilon
    return int(pair_lower_bound(-tau, upsilon1(k)))


def abe_bound(k: TorusKnot) -> Fraction:
    """
    Abe's |s - sigma|/2, written for the sign convention used here
    (sigma(positive trefoil) = -2, s(positive trefoil) = 2): the two invariants
    agree on alternating knots as s and -sigma, so the bound is |s + sigma|/2.
    """
    _, _, s = genus_tau_s(k)
    return pair_lower_bound(s, -signature_of(k)) / 2


def alt_exact(k: TorusKnot) -> int | None:
    if k.braid_index == 2:
        return 0
    if k.braid_index in (3, 4):
        return k.genus // 3
    return None


def _family_n(k: TorusKnot) -> int:
    """n with q = 3n+1, 3n+2 (p = 3) or q = 2n+1 (p = 4)."""
    if k.p == 3:
        return k.q // 3
    if k.p == 4:
        return (k.q - 1) // 2
    raise ValueError(f"{k} is not of braid index 3 or 4")


def upper_bounds(k: TorusKnot) -> tuple[int | None, tuple[tuple[str, str], ...]]:
    if k.p == 2:
        return 0, (("upper", "the standard 2-braid diagram is already alternating"),)
    if k.p == 3:
        return _family_n(k), (("upper", UPPER_3),)
    if k.p == 4:
        n = _family_n(k)
        return n, (("upper", UPPER_4), ("certificate", f"certify --n {n}"))
    return None, ()


def kanenobu_braid4_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Earlier bounds for T(4, 2n+1), kept for comparison output."""
    if n % 2 == 0:
        return Fraction(n), Fraction(3 * n, 2)
    return Fraction(n - 1), Fraction(3 * n, 2) - Fraction(1, 2)


def bounds(k: TorusKnot) -> AltBounds:
    tu = tau_upsilon_bound(k)
    abe = math.ceil(abe_bound(k))
    exact = alt_exact(k)
    upper, up_prov = upper_bounds(k)
    prov: list[tuple[str, str]] = []
    if exact is not None:
        prov.append(("exact", EXACT_34 if k.p > 2 else EXACT_2))
    prov.append(("lower", LOWER_TU if tu >= abe else LOWER_ABE))
    prov.extend(up_prov)
    return AltBounds(max(tu, abe), upper, exact, tuple(prov))


def asymptotic_lower(p: int) -> AsymptoticBound:
    if p < 2:
        raise ValueError("p must be at least 2")
    if p % 2:
        return AsymptoticBound(p, Fraction((p - 1) ** 2, 4))
    return AsymptoticBound(p, Fraction((p - 2) * p, 4))


def asymptotic_status(p: int) -> str:
    if p <= 4:
        return "equality (exact slope known)"
    return "open: equality not known"


def lipschitz_transfer(p: int, k: int, l: int, alt_k: int) -> tuple[int, int]:
    """Interval for alt(T(p, l)) given alt(T(p, k)) = alt_k."""
    if math.gcd(p, k) != 1 or math.gcd(p, l) != 1:
        raise ValueError("T(p,k) and T(p,l) must be knots")
    slack = (p - 1) * abs(k - l) // 2
    return max(0, alt_k - slack), alt_k + slack


TABLE_COLUMNS = ("p", "q", "g", "tau", "upsilon1", "lower_tau_upsilon", "lower_abe",
                 "upper", "exact", "provenance")


def table_row(k: TorusKnot) -> dict:
    g, tau, _ = genus_tau_s(k)
    b = bounds(k)
    return {
        "p": k.p,
        "q": k.q,
        "g": g,
        "tau": tau,
        "upsilon1": upsilon1(k),
        "lower_tau_upsilon": tau_upsilon_bound(k),
        "lower_abe": str(abe_bound(k)),
        "upper": "" if b.upper is None else b.upper,
        "exact": "" if b.exact is None else b.exact,
        "provenance": "; ".join(text for _, text in b.provenance),
    }


def torus_corpus(p_values, q_max: int) -> list[TorusKnot]:
    out = []
    for p in p_values:
        for q in range(p + 1, q_max + 1):
            if math.gcd(p, q) == 1:
                out.append(TorusKnot(p, q))
    return out
