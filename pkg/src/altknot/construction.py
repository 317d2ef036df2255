"""
Crossing-change certificates for T(4, 2n+1).

The torus braid (s1 s2 s3)^(2n+1) is redrawn as two 2-strand bands that first
twist and then cross each other n times as flat bands, followed by one copy of
s1 s2 s3:

    n even:  s1^n     s3^n     X^n  s1 s2 s3
    n odd:   s1^(n+1) s3^(n-1) X^n  s1 s2 s3        X = s2 s1 s3 s2

For n = 2 and n = 3 these are exactly band_words("full_twist") and
band_words("full_and_half") followed by s1 s2 s3; larger n iterate them.
In each band crossing X one of the two middle letters is changed, alternating
between the two bands, which puts the same band in front every time. After
the n changes the closure is T(2,2n+1) # T(2,2n+1).

The certificate is checked algebraically: Garside equality with the torus
braid, then Alexander, Jones, signature and determinant of the modified
closure against the connected sum. Matching invariants are necessary but not
sufficient for the two knots to be isotopic; the isotopy itself is the
geometric argument, which this module does not replay.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

from .braid import BAND_CROSSING, BraidWord, equal, flip, torus_braid, writhe
from .diagram import closure_diagram, connected_sum_T2, has_nugatory, is_alternating
from .invariants import BraidClosure, ConnectedSum, TorusKnot, invariant_set

NOTE = ("invariant agreement is necessary but not sufficient for isotopy; "
        "the band isotopy argument is the mathematical guarantee")

# letter changed in successive band crossings, by parity of n
_FLIP_GENERATORS = {0: (3, 1), 1: (1, 3)}


class ConstructionFailed(RuntimeError):
    def __init__(self, check: Check):
        super().__init__(f"{check.name}: {check.detail}")
        self.check = check


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]
    note: str = NOTE

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)


@dataclasses.dataclass(frozen=True)
class DeformationCertificate:
    n: int
    word: BraidWord
    positions: tuple[int, ...]
    report: VerificationReport | None = None

    @property
    def source(self) -> TorusKnot:
        return TorusKnot(4, 2 * self.n + 1)

    @property
    def target(self) -> ConnectedSum:
        t = TorusKnot(2, 2 * self.n + 1)
        return ConnectedSum((t, t))

    def flipped(self) -> BraidWord:
        return flip(self.word, self.positions)

    def to_json(self) -> dict[str, Any]:
        q = 2 * self.n + 1
        checks = [] if self.report is None else [
            {"name": c.name, "pass": c.passed, "detail": c.detail} for c in self.report.checks]
        return {
            "n": self.n,
            "strands": self.word.strands,
            "word": list(self.word.letters),
            "flip_positions": list(self.positions),
            "target": {"type": "connected_sum", "summands": [[2, q], [2, q]]},
            "checks": checks,
            "note": NOTE,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> DeformationCertificate:
        """Rebuild from JSON; any stored checks are discarded (re-run verify_certificate)."""
        n = int(data["n"])
        q = 2 * n + 1
        expected_target = {"type": "connected_sum", "summands": [[2, q], [2, q]]}
        if data.get("target", expected_target) != expected_target:
            raise ValueError(f"certificate target {data['target']} is not T(2,{q}) # T(2,{q})")
        return cls(n, BraidWord(int(data["strands"]), tuple(data["word"])),
                   tuple(sorted(data["flip_positions"])))


def deformation_word(n: int) -> tuple[BraidWord, tuple[int, ...]]:
    """The band picture of (s1 s2 s3)^(2n+1) and the n letter positions to change."""
    if n < 2:
        raise ValueError("the construction is stated for n >= 2")
    left, right = (n, n) if n % 2 == 0 else (n + 1, n - 1)
    prefix = (1,) * left + (3,) * right
    letters = prefix + BAND_CROSSING * n + (1, 2, 3)
    gens = _FLIP_GENERATORS[n % 2]
    positions = []
    for r in range(n):
        start = len(prefix) + r * len(BAND_CROSSING)
        g = gens[r % 2]
        positions.append(start + BAND_CROSSING.index(g))
    return BraidWord(4, letters), tuple(positions)


def verify_certificate(c: DeformationCertificate) -> VerificationReport:
    n = c.n
    checks: list[Check] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(Check(name, bool(ok), detail))

    q = 2 * n + 1
    add("strands", c.word.strands == 4, f"{c.word.strands} strands")
    in_range = all(0 <= p < len(c.word) for p in c.positions)
    add("positions_in_range", in_range and len(set(c.positions)) == len(c.positions),
        f"positions {list(c.positions)} in word of length {len(c.word)}")
    add("flip_count", len(c.positions) == n, f"{len(c.positions)} flips, expected {n}")
    if c.word.strands != 4 or not in_range:
        return VerificationReport(tuple(checks))

    add("braid_equality", equal(c.word, torus_braid(4, q)),
        f"Garside normal form of word vs (s1 s2 s3)^{q}")
    w0, w1 = writhe(c.word), writhe(c.flipped())
    add("writhe", w0 == 6 * n + 3 and w1 == 4 * n + 3,
        f"writhe {w0} -> {w1}, expected {6 * n + 3} -> {4 * n + 3}")

    flipped = c.flipped()
    try:
        got = invariant_set(BraidClosure(flipped))
    except ValueError as exc:
        add("flipped_closure_is_knot", False, str(exc))
        return VerificationReport(tuple(checks))
    want = invariant_set(c.target)
    for key in ("alexander", "jones"):
        g, w = getattr(got, key), getattr(want, key)
        add(key, g == w, f"{g} vs {w} ({NOTE})")
    add("signature", got.signature == want.signature, f"{got.signature} vs {want.signature}")
    add("determinant", got.determinant == want.determinant,
        f"{got.determinant} vs {want.determinant}")

    # crossing counts: the source diagram cannot be reduced below 6n+3 crossings,
    # while the target has an alternating diagram with only 4n+2
    add("source_crossings", len(c.word) >= 6 * n + 3, f"{len(c.word)} >= {6 * n + 3}")
    target_diagram = connected_sum_T2(q, q)
    add("target_alternating_diagram",
        len(target_diagram) == 4 * n + 2 and is_alternating(target_diagram)
        and not has_nugatory(target_diagram),
        f"{len(target_diagram)} crossings, expected {4 * n + 2}, reduced and alternating")
    add("flipped_diagram_not_alternating", not is_alternating(closure_diagram(flipped)),
        "the modified diagram of T(4,2n+1) is not itself alternating")
    return VerificationReport(tuple(checks))


def build_deformation(n: int) -> DeformationCertificate:
    word, positions = deformation_word(n)
    cert = DeformationCertificate(n, word, positions)
    report = verify_certificate(cert)
    failure = report.first_failure()
    if failure is not None:
        raise ConstructionFailed(failure)
    return dataclasses.replace(cert, report=report)
