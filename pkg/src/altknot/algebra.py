"""
Exact arithmetic substrate.

Integer Laurent polynomials in one variable, piecewise-linear functions with
rational breakpoints (upper envelopes of lines), and signatures of symmetric
integer matrices. Nothing in here ever touches floating point.
"""

from __future__ import annotations

import dataclasses
import re
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from types import MappingProxyType

Rational = Fraction


class NotDivisible(ValueError):
    pass


class NotNormalizable(ValueError):
    pass


class LaurentPoly:
    """
    An element of Z[t, t^-1], stored as a map exponent -> nonzero coefficient.

    Instances are immutable and hashable; two polynomials compare equal iff
    their term maps agree. Integers compare equal to the constant polynomial.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self._terms = MappingProxyType(dict(sorted(clean.items())))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> LaurentPoly:
        return cls({exp: coef})

    @classmethod
    def from_coefficients(cls, lowest: int, coefs: Sequence[int]) -> LaurentPoly:
        """`coefs[k]` is the coefficient of t^(lowest + k)."""
        return cls({lowest + k: c for k, c in enumerate(coefs)})

    @property
    def terms(self) -> Mapping[int, int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def coef(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    # ring operations

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * k: c ** (-k)})
            raise ValueError("only units can be raised to negative powers")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __call__(self, x):
        """Evaluate at an int or Fraction (exactly)."""
        total = Fraction(0) if not isinstance(x, int) else 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * x**e
            else:
                total += c * Fraction(1) / Fraction(x) ** (-e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Replace t by t^k (k may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def inverse_variable(self) -> LaurentPoly:
        return self.substitute_power(-1)

    def divide_exact(self, den: LaurentPoly) -> LaurentPoly:
        return poly_divide_exact(self, den)

    # text / json

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(t(?:\^(-?\d+))?)?")

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse Laurent polynomial: {text!r}")
            sign, digits, mono, exp = m.groups()
            if not digits and not mono:
                raise ValueError(f"cannot parse Laurent polynomial: {text!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            e = 0 if not mono else (int(exp) if exp is not None else 1)
            terms[e] = terms.get(e, 0) + c
            pos = m.end()
        return cls(terms)

    def to_json(self) -> list[dict[str, int]]:
        return [{"exp": e, "coef": c} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> LaurentPoly:
        terms: dict[int, int] = {}
        for item in data:
            terms[item["exp"]] = terms.get(item["exp"], 0) + item["coef"]
        return cls(terms)


T = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient q with q * den == num, or NotDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly()
    # reduce to Z[t] with nonzero constant terms, then long division
    shift = num.min_exp - den.min_exp
    n = [num.coef(e) for e in range(num.min_exp, num.max_exp + 1)]
    d = [den.coef(e) for e in range(den.min_exp, den.max_exp + 1)]
    if len(d) > len(n):
        raise NotDivisible(f"{den} does not divide {num}")
    q = [0] * (len(n) - len(d) + 1)
    rem = n[:]
    lead = d[-1]
    for k in range(len(q) - 1, -1, -1):
        top = rem[k + len(d) - 1]
        if top % lead:
            raise NotDivisible(f"{den} does not divide {num}")
        c = top // lead
        q[k] = c
        if c:
            for j, dj in enumerate(d):
                rem[k + j] -= c * dj
    if any(rem):
        raise NotDivisible(f"{den} does not divide {num}")
    return LaurentPoly.from_coefficients(shift, q)


def normalize_symmetric(p: LaurentPoly) -> LaurentPoly:
    """The unit multiple +-t^k * p that is symmetric under t <-> 1/t with value 1 at t = 1."""
    if p.is_zero():
        raise NotNormalizable("zero polynomial")
    lo, hi = p.min_exp, p.max_exp
    if (lo + hi) % 2:
        raise NotNormalizable(f"{p} has no symmetric unit multiple")
    q = p.shift(-(lo + hi) // 2)
    if q != q.inverse_variable():
        raise NotNormalizable(f"{p} is not symmetric up to units")
    at_one = q(1)
    if at_one not in (1, -1):
        raise NotNormalizable(f"{p} evaluates to {at_one} at t = 1")
    return q if at_one == 1 else -q


# piecewise-linear functions


@dataclasses.dataclass(frozen=True)
class Line:
    intercept: Fraction
    slope: Fraction

    def __post_init__(self):
        object.__setattr__(self, "intercept", Fraction(self.intercept))
        object.__setattr__(self, "slope", Fraction(self.slope))

    def __call__(self, t) -> Fraction:
        return self.intercept + self.slope * t

    def intersect(self, other: Line) -> Fraction | None:
        if self.slope == other.slope:
            return None
        return (other.intercept - self.intercept) / (self.slope - other.slope)


@dataclasses.dataclass(frozen=True)
class PiecewiseLinear:
    """
    Continuous PL function on [0, 2] given by its breakpoints.

    Consecutive collinear breakpoints are merged on construction, so equal
    functions have equal breakpoint tuples.
    """
    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = [(Fraction(t), Fraction(v)) for t, v in self.breakpoints]
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 2:
            raise ValueError("breakpoints must start at t = 0 and end at t = 2")
        if any(a[0] >= b[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("breakpoint t-coordinates must be strictly increasing")
        merged = [pts[0]]
        for k in range(1, len(pts) - 1):
            (t0, v0), (t1, v1), (t2, v2) = merged[-1], pts[k], pts[k + 1]
            if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
                merged.append(pts[k])
        merged.append(pts[-1])
        object.__setattr__(self, "breakpoints", tuple(merged))

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        if not 0 <= t <= 2:
            raise ValueError(f"t = {t} outside [0, 2]")
        for (t0, v0), (t1, v1) in zip(self.breakpoints, self.breakpoints[1:]):
            if t0 <= t <= t1:
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        raise AssertionError("unreachable")

    def slopes(self) -> list[Fraction]:
        return [(v1 - v0) / (t1 - t0)
                for (t0, v0), (t1, v1) in zip(self.breakpoints, self.breakpoints[1:])]

    def to_json(self) -> list[dict[str, str]]:
        return [{"t": str(t), "v": str(v)} for t, v in self.breakpoints]


def upper_envelope(lines: Sequence[Line], lo: Fraction = Fraction(0),
                   hi: Fraction = Fraction(2)) -> PiecewiseLinear:
    """Pointwise maximum of `lines` over [lo, hi] as an exact PL function."""
    if not lines:
        raise ValueError("upper_envelope of an empty family")
    candidates = {Fraction(lo), Fraction(hi)}
    for a in range(len(lines)):
        for b in range(a + 1, len(lines)):
            x = lines[a].intersect(lines[b])
            if x is not None and lo < x < hi:
                candidates.add(x)
    # between consecutive candidates no two lines cross, so the max is affine there
    pts = [(x, max(line(x) for line in lines)) for x in sorted(candidates)]
    return PiecewiseLinear(tuple(pts))


# symmetric matrices


def inertia(m: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """
    (positive, negative, zero) counts of a symmetric matrix via congruent
    diagonalization over the rationals.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(i)):
        raise ValueError("matrix must be symmetric")
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                # zero diagonal, nonzero row: pivot becomes 2*a[k][j]
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg, n - pos - neg


def signature_symmetric(m: Sequence[Sequence[int]]) -> int:
    pos, neg, _ = inertia(m)
    return pos - neg


def poly_determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[t, 1/t] by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return ONE
    a = [[LaurentPoly._coerce(x) for x in row] for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = poly_divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign
