"""
Upsilon of L-space knots from the Alexander polynomial.

For an L-space knot the Alexander polynomial is sum_k (-1)^k t^(a_k) with
a_0 > a_1 > ... > a_2m. The gaps between consecutive exponents trace a lattice
staircase from (0, g) to (g, 0), first step to the right. Upsilon(t) is the
maximum over the even-indexed (corner) vertices (i, j) of

    -2 * ((t/2) * i + (1 - t/2) * j) = -2j + (j - i) * t,

an upper envelope of lines on [0, 2].
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .algebra import LaurentPoly, Line, PiecewiseLinear, upper_envelope
from .invariants import TorusKnot, alexander_torus


class NotStaircaseForm(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class ExponentSeq:
    exponents: tuple[int, ...]

    def __post_init__(self):
        a = self.exponents
        if len(a) % 2 == 0:
            raise NotStaircaseForm("exponent sequence must have odd length")
        if any(x <= y for x, y in zip(a, a[1:])):
            raise NotStaircaseForm("exponents must strictly decrease")
        if any(a[k] != -a[-1 - k] for k in range(len(a))):
            raise NotStaircaseForm("exponents must be symmetric about 0")

    @property
    def genus(self) -> int:
        return self.exponents[0]

    def polynomial(self) -> LaurentPoly:
        return LaurentPoly({e: (-1) ** k for k, e in enumerate(self.exponents)})


@dataclasses.dataclass(frozen=True)
class Staircase:
    vertices: tuple[tuple[int, int], ...]

    @property
    def corners(self) -> tuple[tuple[int, int], ...]:
        """Even-indexed vertices (the generators of the staircase complex)."""
        return self.vertices[::2]


def exponents_of(delta: LaurentPoly) -> ExponentSeq:
    if delta.is_zero():
        raise NotStaircaseForm("zero polynomial")
    items = sorted(delta.terms.items(), reverse=True)
    for k, (_, c) in enumerate(items):
        if c != (-1) ** k:
            raise NotStaircaseForm(f"{delta} does not have alternating +-1 coefficients")
    return ExponentSeq(tuple(e for e, _ in items))


def staircase_of(e: ExponentSeq) -> Staircase:
    a = e.exponents
    i, j = 0, e.genus
    verts = [(i, j)]
    for k in range(len(a) - 1):
        gap = a[k] - a[k + 1]
        if k % 2 == 0:
            i += gap
        else:
            j -= gap
        verts.append((i, j))
    return Staircase(tuple(verts))


def upsilon_lines(s: Staircase) -> list[Line]:
    return [Line(Fraction(-2 * j), Fraction(j - i)) for i, j in s.corners]


def upsilon_fn(s: Staircase) -> PiecewiseLinear:
    return upper_envelope(upsilon_lines(s))


def upsilon_of_poly(delta: LaurentPoly) -> PiecewiseLinear:
    return upsilon_fn(staircase_of(exponents_of(delta)))


def upsilon_torus(k: TorusKnot) -> PiecewiseLinear:
    return upsilon_of_poly(alexander_torus(k))


def upsilon1(k: TorusKnot) -> int:
    # at t = 1 each corner contributes -(i + j)
    s = staircase_of(exponents_of(alexander_torus(k)))
    return max(-(i + j) for i, j in s.corners)
