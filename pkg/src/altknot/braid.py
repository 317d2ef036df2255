"""
Braid words and the word problem.

A braid word on k strands is a tuple of nonzero signed integers: `g` stands for
the Artin generator sigma_g and `-g` for its inverse. Equality in the braid group is
decided by the left-greedy Garside normal form Delta^d * x_1 ... x_m, where the
x_i are permutation braids (positive braids in which every pair of strands
crosses at most once), stored as permutations.

Permutation convention: a tuple `p` on 0-based positions with `p[a]` the final
position of the strand that starts at position `a`. Products are read left to
right, like braid words.
"""

from __future__ import annotations

import dataclasses
import functools
from collections.abc import Iterable, Sequence

Perm = tuple[int, ...]


class StrandMismatch(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    @classmethod
    def from_text(cls, text: str, strands: int | None = None) -> BraidWord:
        letters = tuple(int(tok) for tok in text.split())
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(strands, letters)

    def to_text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise StrandMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        """Every crossing changed (the closure is the mirror image)."""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if x > 0 else -1 for x in self.letters)


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 sigma_2 ... sigma_{p-1})^q on p strands."""
    if p < 2 or q < 1:
        raise ValueError("torus_braid needs p >= 2 and q >= 1")
    return BraidWord(p, tuple(range(1, p)) * q)


def transposition(k: int, g: int) -> Perm:
    p = list(range(k))
    p[g - 1], p[g] = g, g - 1
    return tuple(p)


def compose(a: Perm, b: Perm) -> Perm:
    """The permutation of braid a followed by braid b."""
    return tuple(b[x] for x in a)


def perm_inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def permutation(w: BraidWord) -> Perm:
    p: Perm = tuple(range(w.strands))
    for x in w.letters:
        p = compose(p, transposition(w.strands, abs(x)))
    return p


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition with 1-based labels, fixed points included."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append(tuple(cyc))
    return out


def closure_components(w: BraidWord) -> int:
    return len(cycles(permutation(w)))


def writhe(w: BraidWord) -> int:
    return sum(w.signs())


def flip(w: BraidWord, positions: Iterable[int]) -> BraidWord:
    """Crossing changes at the given 0-based letter positions."""
    letters = list(w.letters)
    for i in set(positions):
        if not 0 <= i < len(letters):
            raise IndexOutOfRange(f"position {i} not in word of length {len(letters)}")
        letters[i] = -letters[i]
    return BraidWord(w.strands, tuple(letters))


# permutation braids


def longest(k: int) -> Perm:
    return tuple(range(k - 1, -1, -1))


def left_descents(p: Perm) -> frozenset[int]:
    """Generators g such that the permutation braid of p starts with sigma_g."""
    return frozenset(g for g in range(1, len(p)) if p[g - 1] > p[g])


def right_descents(p: Perm) -> frozenset[int]:
    """Generators g such that the permutation braid of p ends with sigma_g."""
    inv = perm_inverse(p)
    return frozenset(g for g in range(1, len(p)) if inv[g - 1] > inv[g])


def tau(p: Perm) -> Perm:
    """Conjugation by the half twist: sigma_g -> sigma_{k-g}."""
    k = len(p)
    return tuple(k - 1 - p[k - 1 - x] for x in range(k))


def _strip_left(p: Perm, g: int) -> Perm:
    # the permutation p' with sigma_g * p' = p
    q = list(p)
    q[g - 1], q[g] = q[g], q[g - 1]
    return tuple(q)


def simple_word(p: Perm) -> tuple[int, ...]:
    """A positive word for the permutation braid of p (lexicographically least first letters)."""
    out = []
    while True:
        d = left_descents(p)
        if not d:
            return tuple(out)
        g = min(d)
        out.append(g)
        p = _strip_left(p, g)


def half_twist(k: int) -> BraidWord:
    """Delta = (s1 ... s_{k-1})(s1 ... s_{k-2}) ... (s1)."""
    letters: list[int] = []
    for top in range(k - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(k, tuple(letters))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    strands: int
    delta_power: int
    factors: tuple[Perm, ...]

    def to_word(self) -> BraidWord:
        delta = half_twist(self.strands)
        word = delta ** self.delta_power
        for f in self.factors:
            word = word * BraidWord(self.strands, simple_word(f))
        return word

    @property
    def length(self) -> int:
        return len(self.factors)


def left_weight(factors: Sequence[Perm]) -> list[Perm]:
    """
    Make every adjacent pair (a, b) left-weighted: S(b) must lie in F(a).
    Offending generators are slid from the front of b to the back of a until
    nothing moves.
    """
    f = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(f) - 1):
            a, b = f[j], f[j + 1]
            moved = False
            while extra := left_descents(b) - right_descents(a):
                g = min(extra)
                a = compose(a, transposition(len(a), g))
                b = _strip_left(b, g)
                moved = True
            if moved:
                f[j], f[j + 1] = a, b
                changed = True
    return f


def normal_form(w: BraidWord) -> NormalForm:
    return _normal_form(w.strands, w.letters)


@functools.lru_cache(maxsize=4096)
def _normal_form(k: int, letters: tuple[int, ...]) -> NormalForm:
    w0 = longest(k)
    ident = tuple(range(k))
    power = 0
    factors: list[Perm] = []
    for x in letters:
        if x > 0:
            factors.append(transposition(k, x))
        else:
            # sigma^-1 = Delta^-1 (Delta sigma^-1); push Delta^-1 left through the factors
            factors = [tau(f) for f in factors]
            power -= 1
            factors.append(compose(w0, transposition(k, -x)))
    factors = left_weight(factors)
    lead = 0
    while lead < len(factors) and factors[lead] == w0:
        lead += 1
    end = len(factors)
    while end > lead and factors[end - 1] == ident:
        end -= 1
    return NormalForm(k, power + lead, tuple(factors[lead:end]))


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise StrandMismatch(f"{w1.strands} vs {w2.strands} strands")
    return normal_form(w1) == normal_form(w2)


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.strands, tuple(out))


# band pictures of twists on four strands

# two 2-strand bands {1,2} and {3,4} passing across each other as flat bands
BAND_CROSSING = (2, 1, 3, 2)

_BAND_WORDS = {
    # each band gets one full twist, then the bands cross twice
    "full_twist": (1, 1, 3, 3) + BAND_CROSSING * 2,
    # uneven twisting of the bands, then the bands cross three times
    "full_and_half": (1, 1, 1, 1, 3, 3) + BAND_CROSSING * 3,
}

_BAND_TARGETS = {"full_twist": 4, "full_and_half": 6}


def band_words(kind: str) -> BraidWord:
    """
    Four-strand words for one full twist (sigma_1 sigma_2 sigma_3)^4 and for a full and a
    half twist (sigma_1 sigma_2 sigma_3)^6, drawn as two twisting bands that then cross.
    The braid identity is checked on every call.
    """
    if kind not in _BAND_WORDS:
        raise ValueError(f"unknown band word {kind!r}")
    word = BraidWord(4, _BAND_WORDS[kind])
    if not equal(word, torus_braid(4, _BAND_TARGETS[kind])):
        raise AssertionError(f"band word {kind} is not equal to its twist")
    return word


def band_crossing_blocks(kind: str) -> list[range]:
    """Letter ranges of the band crossings inside `band_words(kind)`."""
    letters = _BAND_WORDS[kind]
    start = len(letters) - len(BAND_CROSSING) * (_BAND_TARGETS[kind] // 2)
    return [range(s, s + len(BAND_CROSSING))
            for s in range(start, len(letters), len(BAND_CROSSING))]
