"""
Planar diagram (PD) codes.

A crossing is X[i, j, k, l]: the four arc labels read counterclockwise starting
from the incoming under-arc. The over-strand runs l -> j at a positive crossing
and j -> l at a negative one; the sign is stored with the crossing so that no
assumption on label order is needed.

Braid closures are numbered along the orientation starting with the arc that
passes the bottom-left strand position of the braid, so consecutive labels are
consecutive arcs of the knot.
"""

from __future__ import annotations

import dataclasses
import json
from collections.abc import Iterable

from .braid import BraidWord, permutation as closure_permutation


class MultiComponent(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Crossing:
    labels: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def under(self) -> tuple[int, int]:
        """(incoming, outgoing) labels of the under-strand."""
        i, _, k, _ = self.labels
        return i, k

    @property
    def over(self) -> tuple[int, int]:
        _, j, _, l = self.labels
        return (l, j) if self.sign > 0 else (j, l)

    def flipped(self) -> Crossing:
        i, j, k, l = self.labels
        if self.sign > 0:
            return Crossing((l, i, j, k), -1)
        return Crossing((j, k, l, i), 1)


@dataclasses.dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0     # crossingless components

    def __len__(self) -> int:
        return len(self.crossings)

    def arcs(self) -> list[int]:
        return sorted({a for c in self.crossings for a in c.labels})

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def flipped(self, indices: Iterable[int]) -> PDCode:
        idx = set(indices)
        return PDCode(tuple(c.flipped() if n in idx else c
                            for n, c in enumerate(self.crossings)), self.free_loops)

    def mirror(self) -> PDCode:
        return self.flipped(range(len(self.crossings)))

    def components(self) -> int:
        succ = _successors(self)
        seen = set()
        count = 0
        for a in succ:
            if a in seen:
                continue
            count += 1
            while a not in seen:
                seen.add(a)
                a = succ[a][2]
        return count + self.free_loops

    def to_text(self) -> str:
        inner = ",".join("X[{},{},{},{}]".format(*c.labels) for c in self.crossings)
        return f"PD[{inner}]"

    def to_json(self) -> str:
        return json.dumps({
            "convention": "X[i,j,k,l] counterclockwise from incoming under-arc; "
                          "arcs numbered along the orientation from the braid's bottom-left strand",
            "crossings": [{"labels": list(c.labels), "sign": c.sign} for c in self.crossings],
            "free_loops": self.free_loops,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> PDCode:
        data = json.loads(text)
        return cls(tuple(Crossing(tuple(c["labels"]), c["sign"]) for c in data["crossings"]),
                   data.get("free_loops", 0))


def _successors(d: PDCode) -> dict[int, tuple[int, bool, int]]:
    """incoming arc -> (crossing index, passes over?, outgoing arc)."""
    succ = {}
    for n, c in enumerate(d.crossings):
        a, b = c.under
        succ[a] = (n, False, b)
        a, b = c.over
        succ[a] = (n, True, b)
    return succ


def traversal(d: PDCode) -> list[tuple[int, bool]]:
    """(crossing index, over?) for each crossing passage along a knot, starting at the smallest arc."""
    if d.components() != 1:
        raise MultiComponent("diagram is not a knot")
    if not d.crossings:
        return []
    succ = _successors(d)
    start = min(succ)
    out = []
    a = start
    while True:
        n, over, a = succ[a]
        out.append((n, over))
        if a == start:
            return out


def closure_diagram(w: BraidWord) -> PDCode:
    """PD code of the closure of w, one crossing per letter (letter order)."""
    k, letters = w.strands, w.letters
    L = len(letters)
    involved: dict[int, list[int]] = {}
    for m, x in enumerate(letters):
        g = abs(x)
        involved.setdefault(g - 1, []).append(m)
        involved.setdefault(g, []).append(m)

    def next_crossing(level: int, pos: int) -> int | None:
        hits = involved.get(pos)
        if not hits:
            return None
        for m in hits:
            if m >= level:
                return m
        return hits[0]

    # walk each component once, recording the labels entering/leaving each side
    ins: dict[tuple[int, int], int] = {}
    outs: dict[tuple[int, int], int] = {}
    perm = closure_permutation(w)
    visited: set[int] = set()
    label = 0
    free = 0
    for pos0 in range(k):
        if pos0 in visited:
            continue
        p = pos0
        while p not in visited:
            visited.add(p)
            p = perm[p]
        if not involved.get(pos0):
            free += 1
            continue
        passes: list[tuple[int, int]] = []
        level, pos = 0, pos0
        while True:
            m = next_crossing(level, pos)
            g = abs(letters[m])
            side = pos - (g - 1)          # 0 = left input, 1 = right input
            if passes and (m, side) == passes[0]:
                break
            passes.append((m, side))
            pos = g - side
            level = (m + 1) % L
        n = len(passes)
        for t, (m, side) in enumerate(passes):
            ins[(m, side)] = label + t + 1
            outs[(m, 1 - side)] = label + (t + 1) % n + 1
        label += n

    crossings = []
    for m, x in enumerate(letters):
        in_a, in_b = ins[(m, 0)], ins[(m, 1)]
        out_a, out_b = outs[(m, 0)], outs[(m, 1)]
        if x > 0:
            crossings.append(Crossing((in_b, out_b, out_a, in_a), 1))
        else:
            crossings.append(Crossing((in_a, in_b, out_b, out_a), -1))
    return PDCode(tuple(crossings), free)


def is_alternating(d: PDCode) -> bool:
    return alternating_distance(d) == 0


def alternating_distances(d: PDCode) -> tuple[int, int]:
    """
    Hamming distances from d's over/under choice to the two alternating
    assignments of its shadow: "over on even-numbered passages" and "over on
    odd-numbered passages" along the traversal.
    """
    passes = traversal(d)
    if not passes:
        return 0, 0
    over_at = {}
    for idx, (n, over) in enumerate(passes):
        if over:
            over_at[n] = idx
    if len(over_at) != len(d.crossings):
        raise ValueError("malformed diagram: crossing without an over-passage")
    odd = sum(1 for idx in over_at.values() if idx % 2)
    return odd, len(d.crossings) - odd


def alternating_distance(d: PDCode) -> int:
    return min(alternating_distances(d))


def has_nugatory(d: PDCode) -> bool:
    """True iff deleting some crossing (keeping its four arc ends as loose stubs) disconnects the diagram."""
    n = len(d.crossings)
    if n == 0:
        return False
    ends: dict[int, list[int]] = {}
    for idx, c in enumerate(d.crossings):
        for a in c.labels:
            ends.setdefault(a, []).append(idx)
    for v in range(n):
        parent: dict[object, object] = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        stub = 0
        nodes = set()
        for a, (c1, c2) in ends.items():
            e1 = c1 if c1 != v else ("stub", stub := stub + 1)
            e2 = c2 if c2 != v else ("stub", stub := stub + 1)
            nodes.update((e1, e2))
            parent[find(e1)] = find(e2)
        roots = {find(x) for x in nodes}
        if len(roots) > 1:
            return True
    return False


def _incoming_outgoing(c: Crossing) -> tuple[set[int], set[int]]:
    return {c.under[0], c.over[0]}, {c.under[1], c.over[1]}


def connected_sum(d1: PDCode, d2: PDCode, cut2: int) -> PDCode:
    """
    Band d1's last arc (label 2*c1) into arc `cut2` of d2. Both inputs must be
    knot diagrams numbered consecutively along their orientation from 1.
    """
    n1, n2 = 2 * len(d1.crossings), 2 * len(d2.crossings)
    total = n1 + n2

    def relabel1(c: Crossing) -> Crossing:
        _, outgoing = _incoming_outgoing(c)
        new = []
        for a in c.labels:
            if a == n1 and a not in outgoing:
                new.append(total)
            else:
                new.append(a)
        return Crossing(tuple(new), c.sign)

    def relabel2(c: Crossing) -> Crossing:
        incoming, _ = _incoming_outgoing(c)
        new = []
        for a in c.labels:
            if a == cut2:
                new.append(n1 if a in incoming else total)
            else:
                new.append(n1 + (a - cut2) % n2)
        return Crossing(tuple(new), c.sign)

    return PDCode(tuple(relabel1(c) for c in d1.crossings)
                  + tuple(relabel2(c) for c in d2.crossings))


def connected_sum_T2(q1: int, q2: int) -> PDCode:
    """The reduced alternating diagram of T(2,q1) # T(2,q2) with q1 + q2 crossings."""
    for q in (q1, q2):
        if q < 3 or q % 2 == 0:
            raise ValueError("connected_sum_T2 needs odd q >= 3")
    d1 = closure_diagram(BraidWord(2, (1,) * q1))
    d2 = closure_diagram(BraidWord(2, (1,) * q2))
    for cut in range(1, 2 * q2 + 1):
        d = connected_sum(d1, d2, cut)
        if is_alternating(d):
            return d
    raise AssertionError("no alternating band position found")
