"""
Classical invariants of braid closures and torus knots.

Conventions: the closure of sigma_1^3 is the positive (right-handed) trefoil, with
Jones polynomial t + t^3 - t^4 and signature -2 (signature of V + V^T for a
Seifert matrix V). Positive torus knots therefore have negative signature.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
import threading
from typing import Union

from .algebra import (ONE, T, LaurentPoly, normalize_symmetric, poly_determinant,
                      poly_divide_exact, signature_symmetric)
from .braid import BraidWord, closure_components, torus_braid
from .diagram import MultiComponent, PDCode, closure_diagram


class TooLarge(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class TorusKnot:
    """T(p, q) with gcd(p, q) = 1, stored with p < q."""
    p: int
    q: int

    def __post_init__(self):
        p, q = sorted((self.p, self.q))
        if p < 2:
            raise ValueError(f"T({self.p},{self.q}) needs p, q >= 2")
        if math.gcd(p, q) != 1:
            raise ValueError(f"T({self.p},{self.q}) is a link, not a knot")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def braid_index(self) -> int:
        return self.p

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2

    def braid(self) -> BraidWord:
        return torus_braid(self.p, self.q)

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


@dataclasses.dataclass(frozen=True)
class Unknot:
    pass


@dataclasses.dataclass(frozen=True)
class ConnectedSum:
    summands: tuple[KnotSpec, ...]


@dataclasses.dataclass(frozen=True)
class BraidClosure:
    word: BraidWord

    def __post_init__(self):
        if closure_components(self.word) != 1:
            raise MultiComponent("braid closure is not a knot")


KnotSpec = Union[TorusKnot, Unknot, ConnectedSum, BraidClosure]


@dataclasses.dataclass(frozen=True)
class InvariantSet:
    alexander: LaurentPoly
    jones: LaurentPoly
    signature: int
    determinant: int
    genus: int | None = None
    tau: int | None = None
    s: int | None = None
    upsilon1: int | None = None

    def to_json(self) -> dict:
        out = {
            "alexander": self.alexander.to_text(),
            "jones": self.jones.to_text(),
            "signature": self.signature,
            "determinant": self.determinant,
        }
        for key in ("genus", "tau", "s", "upsilon1"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


# Alexander polynomial


def alexander_torus(k: TorusKnot) -> LaurentPoly:
    p, q = k.p, k.q
    num = (T ** (p * q) - 1) * (T - 1)
    den = (T ** p - 1) * (T ** q - 1)
    return normalize_symmetric(poly_divide_exact(num, den))


def _burau_generator(k: int, x: int) -> list[list[LaurentPoly]]:
    """Reduced Burau matrix of sigma_g^(+-1) on k strands, size (k-1)."""
    n = k - 1
    g = abs(x)
    m = [[ONE if r == c else LaurentPoly() for c in range(n)] for r in range(n)]
    r = g - 1
    if x > 0:
        m[r][r] = -T
        if r > 0:
            m[r][r - 1] = T
        if r < n - 1:
            m[r][r + 1] = ONE
    else:
        tinv = LaurentPoly.monomial(-1)
        m[r][r] = -tinv
        if r > 0:
            m[r][r - 1] = ONE
        if r < n - 1:
            m[r][r + 1] = tinv
    return m


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][l] * b[l][j] for l in range(n)), LaurentPoly()) for j in range(n)]
            for i in range(n)]


def burau_matrix(w: BraidWord) -> list[list[LaurentPoly]]:
    n = w.strands - 1
    m = [[ONE if r == c else LaurentPoly() for c in range(n)] for r in range(n)]
    for x in w.letters:
        m = _matmul(m, _burau_generator(w.strands, x))
    return m


def alexander_burau(w: BraidWord) -> LaurentPoly:
    """det(I - Burau(w)) * (1 - t)/(1 - t^k), unit-normalized."""
    if closure_components(w) != 1:
        raise MultiComponent("Alexander polynomial is only computed for knots")
    k = w.strands
    if k == 1:
        return ONE
    b = burau_matrix(w)
    n = k - 1
    ident_minus = [[(ONE if r == c else LaurentPoly()) - b[r][c] for c in range(n)] for r in range(n)]
    det = poly_determinant(ident_minus)
    return normalize_symmetric(poly_divide_exact(det * (1 - T), 1 - T ** k))


# Jones polynomial via the Temperley-Lieb algebra

A = LaurentPoly.monomial(1)           # bracket variable
LOOP = -(A ** 2) - A ** -2             # value of a closed loop

Matching = tuple[int, ...]


def _compose_tl(m1: Matching, m2: Matching, k: int) -> tuple[Matching, int]:
    """
    Stack diagram m2 on top of m1. Points 0..k-1 are the bottom, k..2k-1 the top
    (point k+i sits above point i). Returns the matching and closed loops.
    """
    out = [-1] * (2 * k)
    used_mid = set()

    def walk(side: int, p: int) -> tuple[int, int]:
        # side 0: currently at a point of m1, side 1: at a point of m2
        while True:
            if side == 0:
                q = m1[p]
                if q < k:
                    return 0, q
                used_mid.add(q - k)
                side, p = 1, q - k
            else:
                q = m2[p]
                if q >= k:
                    return 1, q
                used_mid.add(q)
                side, p = 0, q + k

    for p in range(k):
        if out[p] == -1:
            _, q = walk(0, p)
            out[p] = q
            out[q] = p
    for p in range(k, 2 * k):
        if out[p] == -1:
            _, q = walk(1, p)
            out[p] = q
            out[q] = p
    # middle points not touched by any through-path lie on closed loops
    loops = 0
    seen = set(used_mid)
    for x in range(k):
        if x in seen:
            continue
        loops += 1
        y = x
        while y not in seen:
            seen.add(y)
            y = m2[y]          # middle point x = bottom of m2, top k+x of m1
            seen.add(y)
            y = m1[y + k] - k
    return tuple(out), loops


def _identity_matching(k: int) -> Matching:
    return tuple([p + k for p in range(k)] + list(range(k)))


def _cup_cap(k: int, g: int) -> Matching:
    m = list(_identity_matching(k))
    a, b = g - 1, g
    m[a], m[b] = b, a
    m[a + k], m[b + k] = b + k, a + k
    return tuple(m)


@dataclasses.dataclass(frozen=True)
class TLTable:
    strands: int
    basis: tuple[Matching, ...]
    # times_e[g][b] = (index of basis[b] * e_g, closed loops)
    times_e: dict[int, tuple[tuple[int, int], ...]]
    closure_loops: tuple[int, ...]


_tl_lock = threading.Lock()


@functools.lru_cache(maxsize=None)
def _tl_table_unlocked(k: int) -> TLTable:
    basis = [_identity_matching(k)]
    index = {basis[0]: 0}
    gens = {g: _cup_cap(k, g) for g in range(1, k)}
    frontier = [basis[0]]
    while frontier:
        nxt = []
        for m in frontier:
            for e in gens.values():
                prod, _ = _compose_tl(m, e, k)
                if prod not in index:
                    index[prod] = len(basis)
                    basis.append(prod)
                    nxt.append(prod)
        frontier = nxt
    times_e = {}
    for g, e in gens.items():
        row = []
        for m in basis:
            prod, loops = _compose_tl(m, e, k)
            row.append((index[prod], loops))
        times_e[g] = tuple(row)
    closure = []
    for m in basis:
        closure.append(_closure_loops(m, k))
    return TLTable(k, tuple(basis), times_e, tuple(closure))


def tl_table(k: int) -> TLTable:
    """Multiplication table of the Temperley-Lieb basis on k strands (Catalan(k) elements)."""
    with _tl_lock:
        return _tl_table_unlocked(k)


def _closure_loops(m: Matching, k: int) -> int:
    parent = list(range(2 * k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q in enumerate(m):
        parent[find(p)] = find(q)
    for p in range(k):
        parent[find(p)] = find(p + k)
    return len({find(x) for x in range(2 * k)})


def bracket_braid(w: BraidWord) -> LaurentPoly:
    """Kauffman bracket of the closure of w, in the variable A."""
    table = tl_table(w.strands)
    state: dict[int, LaurentPoly] = {0: ONE}
    a, a_inv = A, A ** -1
    loop_pow = [ONE]
    for _ in range(w.strands + 1):
        loop_pow.append(loop_pow[-1] * LOOP)
    for x in w.letters:
        row = table.times_e[abs(x)]
        keep, smooth = (a, a_inv) if x > 0 else (a_inv, a)
        new: dict[int, LaurentPoly] = {}
        for b, c in state.items():
            new[b] = new.get(b, LaurentPoly()) + keep * c
            target, loops = row[b]
            new[target] = new.get(target, LaurentPoly()) + smooth * c * loop_pow[loops]
        state = {b: c for b, c in new.items() if c}
    total = LaurentPoly()
    for b, c in state.items():
        total = total + c * loop_pow[table.closure_loops[b] - 1]
    return total


def jones_from_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """(-A^3)^(-writhe) <K> with A = t^(-1/4)."""
    f = (-(A ** 3)) ** (-writhe) * bracket
    out = {}
    for e, c in f.terms.items():
        if e % 4:
            raise ValueError("bracket exponent not divisible by 4; not a knot?")
        out[-e // 4] = c
    return LaurentPoly(out)


def jones_braid(w: BraidWord) -> LaurentPoly:
    if closure_components(w) != 1:
        raise MultiComponent("Jones polynomial is only computed for knots")
    return jones_from_bracket(bracket_braid(w), sum(w.signs()))


STATESUM_LIMIT = 22


def _smoothings(x) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    # the A-smoothing of X[i,j,k,l] joins (i,j) and (k,l); the B-smoothing joins (i,l) and (j,k)
    i, j, k, l = x.labels
    return ((i, j), (k, l)), ((i, l), (j, k))


def kauffman_bracket_statesum(d: PDCode) -> LaurentPoly:
    """
    Bracket as a sum over all 2^c smoothings, evaluated crossing by crossing.

    Partial states are grouped by how their open arc ends are joined, so the
    work grows with the width of the diagram rather than with 2^c. Each closed
    loop contributes a factor LOOP; one factor is divided out at the end.
    """
    c = len(d.crossings)
    if c > STATESUM_LIMIT:
        raise TooLarge(f"{c} crossings exceed the state-sum limit {STATESUM_LIMIT}")
    if c == 0:
        return LOOP ** (d.free_loops - 1) if d.free_loops else ONE
    frontier: dict[frozenset, LaurentPoly] = {frozenset(): ONE}
    for x in d.crossings:
        a_pairs, b_pairs = _smoothings(x)
        nxt: dict[frozenset, LaurentPoly] = {}
        for key, value in frontier.items():
            for pairs, weight in ((a_pairs, A), (b_pairs, A ** -1)):
                partner = {}
                for u, v in key:
                    partner[u], partner[v] = v, u
                loops = 0
                for u, v in pairs:
                    if u == v and u not in partner:
                        loops += 1
                        continue
                    if partner.get(u) == v:
                        del partner[u], partner[v]
                        loops += 1
                        continue
                    pu = partner.pop(u, u)
                    pv = partner.pop(v, v)
                    if pu != u:
                        partner.pop(pu, None)
                    if pv != v:
                        partner.pop(pv, None)
                    partner[pu], partner[pv] = pv, pu
                new_key = frozenset((u, v) for u, v in partner.items() if u < v)
                term = value * weight * LOOP ** loops
                nxt[new_key] = nxt.get(new_key, LaurentPoly()) + term
        frontier = nxt
    if set(frontier) != {frozenset()}:
        raise ValueError("malformed diagram: arc ends left unmatched")
    total = frontier[frozenset()] * LOOP ** d.free_loops
    return total.divide_exact(LOOP)


def kauffman_bracket_bruteforce(d: PDCode) -> LaurentPoly:
    """Independent reference: union-find over every one of the 2^c smoothings."""
    c = len(d.crossings)
    if c > 16:
        raise TooLarge(f"{c} crossings is too many for brute force")
    if c == 0:
        return LOOP ** (d.free_loops - 1) if d.free_loops else ONE
    labels = sorted({a for x in d.crossings for a in x.labels})
    pos = {a: n for n, a in enumerate(labels)}
    pairs_a = [((pos[i], pos[j]), (pos[k], pos[l])) for i, j, k, l in (x.labels for x in d.crossings)]
    pairs_b = [((pos[i], pos[l]), (pos[j], pos[k])) for i, j, k, l in (x.labels for x in d.crossings)]
    counts: dict[tuple[int, int], int] = {}
    for state in itertools.product((0, 1), repeat=c):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for n, s in enumerate(state):
            for u, v in (pairs_b[n] if s else pairs_a[n]):
                parent[find(u)] = find(v)
        loops = sum(1 for x in range(len(labels)) if find(x) == x) + d.free_loops
        nb = sum(state)
        key = (c - 2 * nb, loops)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly()
    for (exp, loops), mult in counts.items():
        total = total + LaurentPoly.monomial(exp, mult) * LOOP ** (loops - 1)
    return total


def jones_statesum(d: PDCode) -> LaurentPoly:
    return jones_from_bracket(kauffman_bracket_statesum(d), d.writhe())


# Seifert matrix and signature


def seifert_matrix(w: BraidWord) -> list[list[int]]:
    """
    Seifert matrix of the canonical surface of the closure: one disk per strand,
    one band per letter. Basis: loops through consecutive bands between the same
    pair of disks, ordered by generator, then by position.
    """
    if closure_components(w) != 1:
        raise MultiComponent("Seifert matrix is only computed for knots")
    by_gen: dict[int, list[int]] = {}
    for m, x in enumerate(w.letters):
        by_gen.setdefault(abs(x), []).append(m)
    signs = w.signs()
    loops = []          # (generator, lower band, upper band)
    for g in sorted(by_gen):
        occ = by_gen[g]
        for a, b in zip(occ, occ[1:]):
            loops.append((g, a, b))
    n = len(loops)
    v = [[0] * n for _ in range(n)]
    for r, (g1, a1, b1) in enumerate(loops):
        for c, (g2, a2, b2) in enumerate(loops):
            if r == c:
                v[r][c] = -(signs[a1] + signs[b1]) // 2
            elif g1 == g2 and b1 == a2:
                v[r][c] = 1 if signs[b1] > 0 else 0
            elif g1 == g2 and b2 == a1:
                v[r][c] = -1 if signs[a1] < 0 else 0
            elif g2 == g1 + 1 and a1 < a2 < b1 < b2:
                v[r][c] = -1
            elif g2 == g1 + 1 and a2 < a1 < b2 < b1:
                v[r][c] = 1
    return v


def signature_braid(w: BraidWord) -> int:
    v = seifert_matrix(w)
    n = len(v)
    return signature_symmetric([[v[i][j] + v[j][i] for j in range(n)] for i in range(n)])


def alexander_seifert(w: BraidWord) -> LaurentPoly:
    """det(V - t V^T), unit-normalized; an independent route to the Alexander polynomial."""
    v = seifert_matrix(w)
    n = len(v)
    m = [[LaurentPoly.constant(v[i][j]) - T * v[j][i] for j in range(n)] for i in range(n)]
    return normalize_symmetric(poly_determinant(m))


def signature_of(k: KnotSpec) -> int:
    if isinstance(k, Unknot):
        return 0
    if isinstance(k, ConnectedSum):
        return sum(signature_of(x) for x in k.summands)
    if isinstance(k, TorusKnot):
        return signature_braid(k.braid())
    if isinstance(k, BraidClosure):
        return signature_braid(k.word)
    raise TypeError(f"not a knot spec: {k!r}")


def genus_tau_s(k: TorusKnot) -> tuple[int, int, int]:
    g = k.genus
    return g, g, 2 * g


def determinant(alexander: LaurentPoly) -> int:
    return abs(alexander(-1))


def invariant_set(k: KnotSpec) -> InvariantSet:
    if isinstance(k, Unknot):
        return InvariantSet(ONE, ONE, 0, 1, genus=0, tau=0, s=0, upsilon1=0)
    if isinstance(k, TorusKnot):
        from .upsilon import upsilon1

        delta = alexander_torus(k)
        g, tau, s = genus_tau_s(k)
        return InvariantSet(delta, jones_braid(k.braid()), signature_of(k), determinant(delta),
                            genus=g, tau=tau, s=s, upsilon1=upsilon1(k))
    if isinstance(k, BraidClosure):
        delta = alexander_burau(k.word)
        return InvariantSet(delta, jones_braid(k.word), signature_braid(k.word), determinant(delta))
    if isinstance(k, ConnectedSum):
        parts = [invariant_set(x) for x in k.summands]
        delta, jones = ONE, ONE
        for part in parts:
            delta = delta * part.alexander
            jones = jones * part.jones

        def add(key):
            values = [getattr(part, key) for part in parts]
            return None if any(x is None for x in values) else sum(values)

        return InvariantSet(delta, jones, sum(part.signature for part in parts), determinant(delta),
                            genus=add("genus"), tau=add("tau"), s=add("s"), upsilon1=add("upsilon1"))
    raise TypeError(f"not a knot spec: {k!r}")
