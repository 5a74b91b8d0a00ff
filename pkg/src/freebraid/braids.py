"""Classical braid words realized as planar particle motions.

A braid on n strands is read as a motion of n points: the strands start on
exact rational points in convex position near the unit circle, and each
Artin letter occupies one time slot in which the two affected points trade
places along a small outward detour while everything else stands still.
Scanning that motion for horizontal trisecants (collinear triples) yields a
word in G_n^3, the motion-class invariant; the concyclicity variant yields
a word in G_n^4.

The detour of an inverse letter is the exact time reversal of the positive
one, so a letter followed by its inverse produces a palindromic event block
that cancels completely.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import tan, pi

from .dynamics import (
    DynamicalSystem,
    Point,
    collinearity_detector,
    concyclicity_detector,
    perturb,
    type_of,
)
from .errors import (
    BudgetExhaustedError,
    DegenerateSystemError,
    MoveNotApplicableError,
    NotPleasantError,
    NotPureError,
    ParseError,
    RealizationError,
)
from .words import DEFAULT_BUDGET, CyclicWord, Word, complexity

__all__ = [
    "BraidWord",
    "Certificate",
    "parse_artin",
    "format_artin",
    "permutation_of",
    "pure_power",
    "home_positions",
    "realize",
    "invariant_c",
    "invariant_c4",
    "closed_invariant",
    "trisecant_certificate",
    "apply_artin_relation",
    "enumerate_artin_rewrites",
]


@dataclass(frozen=True)
class BraidWord:
    """Artin word: letters are (index, sign) with 1 <= index < n, sign +-1."""

    n: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need at least two strands")
        for idx, sign in self.letters:
            if not 1 <= idx <= self.n - 1:
                raise ValueError(f"generator index {idx} out of range for n={self.n}")
            if sign not in (-1, 1):
                raise ValueError(f"sign must be +-1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)


_ARTIN_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


def parse_artin(text: str, n: int) -> BraidWord:
    """Parse space-separated "s<i>" / "s<i>^-1" tokens; "" is the empty braid."""
    letters = []
    for tok in text.split():
        m = _ARTIN_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad braid token {tok!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= n - 1:
            raise ParseError(f"generator index {idx} out of range for n={n}")
        letters.append((idx, -1 if m.group(2) else 1))
    return BraidWord(n, tuple(letters))


def format_artin(braid: BraidWord) -> str:
    return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in braid.letters)


def permutation_of(braid: BraidWord) -> tuple[int, ...]:
    """perm[j-1] is the final position of the strand starting at position j."""
    pos = list(range(braid.n + 1))  # pos[strand] = current position, 1-based
    for idx, _ in braid.letters:
        at_i = pos.index(idx)
        at_j = pos.index(idx + 1)
        pos[at_i], pos[at_j] = pos[at_j], pos[at_i]
    return tuple(pos[1:])


def pure_power(braid: BraidWord) -> tuple[BraidWord, int]:
    """Smallest power of the braid whose permutation is trivial."""
    identity = tuple(range(1, braid.n + 1))
    perm = permutation_of(braid)
    acc = perm
    m = 1
    while acc != identity:
        acc = tuple(perm[p - 1] for p in acc)
        m += 1
    return BraidWord(braid.n, braid.letters * m), m


# -------------------------------------------------------------- realization

def _cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _orient(a: Point, b: Point, c: Point) -> Fraction:
    return _cross((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1]))


def _concyclic_det(pts: tuple[Point, Point, Point, Point]) -> Fraction:
    total = Fraction(0)
    rows = [(x * x + y * y, x, y) for x, y in pts]
    for r in range(4):
        (a, b, c), (d, e, f), (g, h, i) = [rows[q] for q in range(4) if q != r]
        minor = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        total += minor if (r + 3) % 2 == 0 else -minor
    return total


@lru_cache(maxsize=None)
def home_positions(n: int) -> tuple[Point, ...]:
    """n rational points in convex position approximating the unit circle.

    Slightly distinct radii keep quadruples off common circles; the layout
    is validated exactly (no collinear triple, convex, no concyclic
    quadruple) and the radius spread is bumped deterministically in the
    unlikely case validation fails.
    """
    if n < 3:
        raise ValueError("need at least 3 strands for a convex layout")
    for bump in range(32):
        pts = []
        for j in range(n):
            r = 1 + Fraction(j + 1, 16 * n) + Fraction(bump, 128 * n)
            if 2 * j == n:
                base = (Fraction(-1), Fraction(0))
            else:
                t = Fraction(round(tan(pi * j / n) * 256), 256)
                d = 1 + t * t
                base = ((1 - t * t) / d, 2 * t / d)
            pts.append((r * base[0], r * base[1]))
        ok = all(_orient(*tri) != 0 for tri in itertools.combinations(pts, 3))
        if ok:
            for j in range(n):
                if _orient(pts[j - 1], pts[j], pts[(j + 1) % n]) <= 0:
                    ok = False
                    break
        if ok and n >= 4:
            ok = all(_concyclic_det(q) != 0 for q in itertools.combinations(pts, 4))
        if ok:
            return tuple(pts)
    raise RealizationError(f"no valid home layout found for n={n}")


_LIFT = {"standard": Fraction(1, 8), "wide": Fraction(1, 2)}


def realize(braid: BraidWord, style: str = "standard") -> DynamicalSystem:
    """The braid as a motion of n points, one unit slot per letter.

    In the slot of a positive letter the left occupant of the affected pair
    detours over the right seat (step outward, cross, step back in) while
    the right occupant slides straight into the left seat; a negative
    letter is the exact time reversal.  Deterministic.
    """
    if braid.n < 3:
        raise ValueError("realization needs n >= 3")
    if style not in _LIFT:
        raise ValueError(f"unknown detour style {style!r}")
    homes = home_positions(braid.n)
    L = len(braid.letters)
    if L == 0:
        return DynamicalSystem((Fraction(0), Fraction(1)), tuple((h, h) for h in homes))

    lift = _LIFT[style]
    occupant = list(range(braid.n))  # occupant[position0] = particle0
    times: list[Fraction] = [Fraction(0)]
    rows: list[list[Point]] = [[homes[p] for p in range(braid.n)]]

    def particle_positions(assign: dict[int, Point]) -> list[Point]:
        # current home for everyone not mentioned in assign
        out = []
        for particle in range(braid.n):
            if particle in assign:
                out.append(assign[particle])
            else:
                out.append(homes[occupant.index(particle)])
        return out

    for slot, (idx, sign) in enumerate(braid.letters):
        base = Fraction(slot, L)
        q = Fraction(1, 4 * L)
        left, right = occupant[idx - 1], occupant[idx]
        hl, hr = homes[idx - 1], homes[idx]
        dx, dy = hr[0] - hl[0], hr[1] - hl[1]
        delta = (-dy * lift, dx * lift)
        # outward: away from the hull's interior, which surrounds the origin
        if delta[0] * (hl[0] + hr[0]) + delta[1] * (hl[1] + hr[1]) < 0:
            delta = (-delta[0], -delta[1])
        lifted_l = (hl[0] + delta[0], hl[1] + delta[1])
        lifted_r = (hr[0] + delta[0], hr[1] + delta[1])

        if sign == 1:
            steps = [
                (base + q, {left: lifted_l, right: hr}),
                (base + 3 * q, {left: lifted_r, right: hl}),
                (base + 4 * q, {left: hr, right: hl}),
            ]
        else:
            steps = [
                (base + q, {right: lifted_r, left: hl}),
                (base + 3 * q, {right: lifted_l, left: hr}),
                (base + 4 * q, {right: hl, left: hr}),
            ]
        for t, assign in steps:
            times.append(t)
            rows.append(particle_positions(assign))
        occupant[idx - 1], occupant[idx] = right, left

    times[-1] = Fraction(1)  # guard against Fraction(L, L) form, already 1
    tracks = tuple(tuple(row[p] for row in rows) for p in range(braid.n))
    return DynamicalSystem(tuple(times), tracks)


# -------------------------------------------------- invariants of the motion

_RETRIES = 3
_RETRY_MAGNITUDE = Fraction(1, 1024)


def _motion_word(braid: BraidWord, detector, seed: int, style: str) -> Word:
    last: Exception | None = None
    for attempt in range(_RETRIES + 1):
        system = realize(braid, style)
        if attempt > 0:
            system = perturb(system, 1000 * seed + attempt, _RETRY_MAGNITUDE)
        try:
            return type_of(system, detector)
        except (NotPleasantError, DegenerateSystemError) as exc:
            last = exc
    raise RealizationError(
        f"no pleasant realization of {format_artin(braid) or 'e'} "
        f"after {_RETRIES} perturbation retries"
    ) from last


def invariant_c(braid: BraidWord, seed: int = 0, style: str = "standard") -> Word:
    """The trisecant word of the realized motion, an element of G_n^3."""
    return _motion_word(braid, collinearity_detector(), seed, style)


def invariant_c4(braid: BraidWord, seed: int = 0, style: str = "standard") -> Word:
    """The concyclicity word of the realized motion, an element of G_n^4."""
    if braid.n < 4:
        raise ValueError("the concyclicity invariant needs n >= 4")
    return _motion_word(braid, concyclicity_detector(), seed, style)


def closed_invariant(braid: BraidWord, seed: int = 0) -> CyclicWord:
    """Conjugacy-class representative for a pure braid's closure."""
    if permutation_of(braid) != tuple(range(1, braid.n + 1)):
        raise NotPureError("closed-braid invariant is defined for pure braids only")
    w = invariant_c(braid, seed)
    return CyclicWord(w.signature, w.letters)


@dataclass(frozen=True)
class Certificate:
    """Trisecant count vs. word complexity for one realized braid.

    The claim being certified: the realization's event count is at least the
    complexity of its trisecant word.  With `exact` False the bound is only
    the shortest word seen before the reduction budget ran out (still at
    most the event count, since the trisecant word itself was seen).
    """

    events: int
    lower_bound: int
    ok: bool
    exact: bool


def trisecant_certificate(braid: BraidWord, budget: int = DEFAULT_BUDGET, seed: int = 0) -> Certificate:
    w = invariant_c(braid, seed)
    events = len(w.letters)
    try:
        bound = complexity(w, budget)
        exact = True
    except BudgetExhaustedError as exc:
        bound = exc.shortest_seen
        exact = False
    return Certificate(events, bound, events >= bound, exact)


# ------------------------------------------------------------ Artin moves

RELATIONS = ("cancel", "swap", "yang_baxter")


def apply_artin_relation(braid: BraidWord, relation: str, position: int) -> BraidWord:
    """One elementary rewrite: cancel an inverse pair, swap far letters, or
    flip a braid-relation triple."""
    L = braid.letters
    if relation == "cancel":
        if position < 0 or position + 1 >= len(L):
            raise MoveNotApplicableError(f"no pair at position {position}")
        (i1, s1), (i2, s2) = L[position], L[position + 1]
        if i1 != i2 or s1 != -s2:
            raise MoveNotApplicableError(f"letters at {position} are not inverse")
        return BraidWord(braid.n, L[:position] + L[position + 2:])
    if relation == "swap":
        if position < 0 or position + 1 >= len(L):
            raise MoveNotApplicableError(f"no pair at position {position}")
        (i1, s1), (i2, s2) = L[position], L[position + 1]
        if abs(i1 - i2) < 2:
            raise MoveNotApplicableError(f"indices {i1},{i2} are not far")
        return BraidWord(braid.n, L[:position] + ((i2, s2), (i1, s1)) + L[position + 2:])
    if relation == "yang_baxter":
        if position < 0 or position + 2 >= len(L):
            raise MoveNotApplicableError(f"no triple at position {position}")
        (i1, s1), (i2, s2), (i3, s3) = L[position:position + 3]
        if not (i1 == i3 and abs(i1 - i2) == 1 and s1 == s2 == s3):
            raise MoveNotApplicableError(f"letters at {position} do not match the braid relation")
        flipped = ((i2, s1), (i1, s1), (i2, s1))
        return BraidWord(braid.n, L[:position] + flipped + L[position + 3:])
    raise ValueError(f"unknown relation {relation!r}")


def enumerate_artin_rewrites(braid: BraidWord) -> tuple[tuple[str, int, BraidWord], ...]:
    """Every applicable single-relation rewrite, in scan order."""
    out = []
    for relation in RELATIONS:
        for position in range(len(braid.letters)):
            try:
                out.append((relation, position, apply_artin_relation(braid, relation, position)))
            except MoveNotApplicableError:
                continue
    return tuple(out)
