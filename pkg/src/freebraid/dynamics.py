"""Piecewise-linear particle motions with exact critical-event detection.

A system is n particles moving in the rational plane over [0,1], linear
between breakpoints on a shared time grid.  A property detector (built-in:
collinearity of triples, concyclicity of quadruples) turns every
(k-subset, segment) pair into a univariate rational polynomial whose roots
are the critical moments.  Roots are isolated exactly (square-free part,
then sign-based bisection), compared exactly (gcd arguments decide whether
two algebraic numbers coincide), and never converted to floats.

A pleasant system has finitely many critical moments, each simple (a sign
change) and witnessed by exactly one k-subset, with no (k+1)-subset
satisfying the property at that moment.  The type word of a pleasant system
lists the event multiindices in time order.
"""

from __future__ import annotations

import itertools
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import polys
from .errors import DegenerateSystemError, NotPleasantError, ParseError, UnsupportedSignatureError
from .polys import Poly
from .words import GroupSignature, Word

__all__ = [
    "Point",
    "DynamicalSystem",
    "CriticalEvent",
    "PropertyDetector",
    "PleasantnessReport",
    "Violation",
    "make_system",
    "collinearity_detector",
    "concyclicity_detector",
    "isolate_event_times",
    "pleasantness_check",
    "type_of",
    "perturb",
    "parse_system",
    "format_system",
    "format_events",
]

Point = tuple[Fraction, Fraction]

Breakpoint = tuple[Fraction, Point]


def _frac_point(p: Sequence) -> Point:
    x, y = p
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class DynamicalSystem:
    """n particle tracks sampled on a common strictly increasing time grid.

    tracks[p][i] is the position of particle p at times[i]; motion is linear
    on each segment.  Particle indices are 1-based in the public API (they
    become multiindex entries), 0-based in storage.
    """

    times: tuple[Fraction, ...]
    tracks: tuple[tuple[Point, ...], ...]

    def __post_init__(self) -> None:
        if len(self.times) < 2:
            raise ValueError("need at least the two endpoint times")
        if self.times[0] != 0 or self.times[-1] != 1:
            raise ValueError("time grid must run from 0 to 1")
        for a, b in zip(self.times, self.times[1:]):
            if not a < b:
                raise ValueError("times must be strictly increasing")
        if not self.tracks:
            raise ValueError("no particles")
        for tr in self.tracks:
            if len(tr) != len(self.times):
                raise ValueError("every track must cover the whole grid")
        for i in range(len(self.times)):
            at_t = [tr[i] for tr in self.tracks]
            if len(set(at_t)) != len(at_t):
                raise ValueError(f"coincident particles at t={self.times[i]}")

    @property
    def n(self) -> int:
        return len(self.tracks)

    @property
    def segment_count(self) -> int:
        return len(self.times) - 1

    def position(self, particle: int, t: Fraction) -> Point:
        """Position of a 1-based particle at any time in [0,1]."""
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"time {t} outside [0,1]")
        tr = self.tracks[particle - 1]
        if t == 1:
            return tr[-1]
        s = bisect_right(self.times, t) - 1
        t0, t1 = self.times[s], self.times[s + 1]
        lam = (t - t0) / (t1 - t0)
        (x0, y0), (x1, y1) = tr[s], tr[s + 1]
        return (x0 + lam * (x1 - x0), y0 + lam * (y1 - y0))

    def coordinate_polys(self, particle: int, segment: int) -> tuple[Poly, Poly]:
        """x(tau), y(tau) on the segment, tau being the local [0,1] parameter."""
        (x0, y0), (x1, y1) = self.tracks[particle - 1][segment], self.tracks[particle - 1][segment + 1]
        return polys.poly([x0, x1 - x0]), polys.poly([y0, y1 - y0])


def make_system(trajectories: Sequence[Sequence[Breakpoint]]) -> DynamicalSystem:
    """Build a system from per-particle breakpoint lists.

    Each trajectory is a sequence of (time, (x, y)) pairs with strictly
    increasing times starting at 0 and ending at 1; the common grid is the
    union of all breakpoint times.
    """
    cleaned = []
    for tr in trajectories:
        pts = [(Fraction(t), _frac_point(p)) for t, p in tr]
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("trajectory must span t=0 to t=1")
        for (a, _), (b, _) in zip(pts, pts[1:]):
            if not a < b:
                raise ValueError("breakpoint times must strictly increase")
        cleaned.append(pts)
    grid = sorted(set().union(*[{t for t, _ in tr} for tr in cleaned]))

    def sample(pts: list[Breakpoint], t: Fraction) -> Point:
        ts = [a for a, _ in pts]
        if t == ts[-1]:
            return pts[-1][1]
        s = bisect_right(ts, t) - 1
        t0, t1 = ts[s], ts[s + 1]
        lam = (t - t0) / (t1 - t0)
        (x0, y0), (x1, y1) = pts[s][1], pts[s + 1][1]
        return (x0 + lam * (x1 - x0), y0 + lam * (y1 - y0))

    tracks = tuple(tuple(sample(pts, t) for t in grid) for pts in cleaned)
    return DynamicalSystem(tuple(grid), tracks)


# ------------------------------------------------------------ text formats

def parse_system(text: str) -> DynamicalSystem:
    """Read the "n=<n>" header plus one "t:x,y ..." line per particle.

    Positions accept either "x,y" with rational components or the compact
    integer spelling "x/y".
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ParseError("system text must start with 'n=<n>'")
    try:
        n = int(lines[0].split("=", 1)[1])
    except ValueError as exc:
        raise ParseError(f"bad strand count in {lines[0]!r}") from exc
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} particle lines, found {len(lines) - 1}")
    trajectories = []
    for ln in lines[1:]:
        pts = []
        for tok in ln.split():
            if ":" not in tok:
                raise ParseError(f"bad breakpoint token {tok!r}")
            tpart, ppart = tok.split(":", 1)
            try:
                t = Fraction(tpart)
                if "," in ppart:
                    xs, ys = ppart.split(",", 1)
                    pt = (Fraction(xs), Fraction(ys))
                else:
                    xs, ys = ppart.split("/", 1)
                    pt = (Fraction(int(xs)), Fraction(int(ys)))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad breakpoint token {tok!r}") from exc
            pts.append((t, pt))
        trajectories.append(pts)
    try:
        return make_system(trajectories)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_system(system: DynamicalSystem) -> str:
    lines = [f"n={system.n}"]
    for tr in system.tracks:
        lines.append(" ".join(
            f"{t}:{x},{y}" for t, (x, y) in zip(system.times, tr)
        ))
    return "\n".join(lines)


def format_events(events: Iterable["CriticalEvent"]) -> str:
    """One event per line: interval endpoints, multiindex, sign marker."""
    out = []
    for e in events:
        m = "(" + " ".join(map(str, e.multiindex)) + ")"
        out.append(f"{e.interval[0]} {e.interval[1]} {m} {'sign' if e.sign_change else 'flat'}")
    return "\n".join(out)


# --------------------------------------------------------------- detectors

@dataclass(frozen=True)
class PropertyDetector:
    """Turns particle subsets into event polynomials on each segment.

    event_poly(system, subset, segment) vanishes exactly where the subset
    satisfies the property; extension_poly(system, subset, extra, segment)
    vanishes where subset + extra satisfies it, assuming the subset already
    does.  Degrees stay small (2 for collinearity, 4 for concyclicity), so
    every sign question is decidable.
    """

    k: int
    name: str
    event_poly: Callable[[DynamicalSystem, tuple[int, ...], int], Poly]
    extension_poly: Callable[[DynamicalSystem, tuple[int, ...], int, int], Poly]


def _orientation_poly(system: DynamicalSystem, a: int, b: int, c: int, segment: int) -> Poly:
    ax, ay = system.coordinate_polys(a, segment)
    bx, by = system.coordinate_polys(b, segment)
    cx, cy = system.coordinate_polys(c, segment)
    ux, uy = polys.sub(bx, ax), polys.sub(by, ay)
    vx, vy = polys.sub(cx, ax), polys.sub(cy, ay)
    return polys.sub(polys.mul(ux, vy), polys.mul(uy, vx))


def _det3(m: list[list[Poly]]) -> Poly:
    (a, b, c), (d, e, f), (g, h, i) = m
    t1 = polys.mul(a, polys.sub(polys.mul(e, i), polys.mul(f, h)))
    t2 = polys.mul(b, polys.sub(polys.mul(d, i), polys.mul(f, g)))
    t3 = polys.mul(c, polys.sub(polys.mul(d, h), polys.mul(e, g)))
    return polys.add(polys.sub(t1, t2), t3)


def _circle_poly(system: DynamicalSystem, quad: tuple[int, int, int, int], segment: int) -> Poly:
    # det of rows (x^2+y^2, x, y, 1), expanded along the column of ones
    rows = []
    for p in quad:
        x, y = system.coordinate_polys(p, segment)
        rows.append([polys.add(polys.mul(x, x), polys.mul(y, y)), x, y])
    total: Poly = polys.ZERO
    for r in range(4):
        minor = _det3([rows[i] for i in range(4) if i != r])
        # cofactor sign for entry (r, 3) of the 4x4 matrix
        if (r + 3) % 2:
            total = polys.sub(total, minor)
        else:
            total = polys.add(total, minor)
    return total


@lru_cache(maxsize=None)
def collinearity_detector() -> PropertyDetector:
    """Triples on a common line; event polynomials are orientation determinants."""

    def event(system: DynamicalSystem, subset: tuple[int, ...], segment: int) -> Poly:
        a, b, c = subset
        return _orientation_poly(system, a, b, c, segment)

    def extension(system: DynamicalSystem, subset: tuple[int, ...], extra: int, segment: int) -> Poly:
        # with subset already collinear, a 4th point joins iff it sits on the
        # line through the first two
        a, b = subset[0], subset[1]
        return _orientation_poly(system, a, b, extra, segment)

    return PropertyDetector(3, "collinearity", event, extension)


@lru_cache(maxsize=None)
def concyclicity_detector() -> PropertyDetector:
    """Quadruples on a common circle or line."""

    def event(system: DynamicalSystem, subset: tuple[int, ...], segment: int) -> Poly:
        return _circle_poly(system, tuple(subset), segment)

    def extension(system: DynamicalSystem, subset: tuple[int, ...], extra: int, segment: int) -> Poly:
        a, b, c = subset[0], subset[1], subset[2]
        return _circle_poly(system, (a, b, c, extra), segment)

    return PropertyDetector(4, "concyclicity", event, extension)


# ----------------------------------------------------------------- scanner

@dataclass(frozen=True)
class CriticalEvent:
    """One isolated critical moment.

    interval is a global open time interval containing exactly one root of
    the event polynomial; local_poly/local_interval describe the same root
    in the segment's own [0,1] parameter (used by the pleasantness checks).
    """

    multiindex: tuple[int, ...]
    segment: int
    interval: tuple[Fraction, Fraction]
    sign_change: bool
    local_poly: Poly
    local_interval: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Violation:
    kind: str  # "simultaneous" | "super_tuple" | "tangential"
    multiindices: tuple[tuple[int, ...], ...]
    segment: int
    interval: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PleasantnessReport:
    pleasant: bool
    violations: tuple[Violation, ...]


class _Pending:
    """Mutable event record while roots are being separated."""

    __slots__ = ("multiindex", "segment", "poly", "sqfree", "lo", "hi", "sign_change")

    def __init__(self, multiindex, segment, poly, sqfree, lo, hi):
        self.multiindex = multiindex
        self.segment = segment
        self.poly = poly
        self.sqfree = sqfree
        self.lo = lo
        self.hi = hi
        self.sign_change = (polys.evaluate(poly, lo) > 0) != (polys.evaluate(poly, hi) > 0)

    def refine(self) -> None:
        self.lo, self.hi = polys.bisect_once(self.sqfree, self.lo, self.hi)


def _same_root(a: _Pending, b: _Pending) -> bool:
    """Decide exactly whether two pending events are the same moment."""
    g = polys.poly_gcd(a.sqfree, b.sqfree)
    has_common = polys.degree(g) >= 1
    while True:
        if a.hi <= b.lo or b.hi <= a.lo:
            return False
        if has_common:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # interval endpoints are never roots of the isolated polynomials,
            # hence never roots of their gcd
            if polys.count_roots(g, lo, hi) >= 1:
                return True
            has_common = False  # the shared root, if any, is not this one
        a.refine()
        b.refine()


def _scan(system: DynamicalSystem, detector: PropertyDetector):
    """All events, ordered, plus the groups of exactly simultaneous ones."""
    n = system.n
    if n < detector.k:
        return (), ()
    pending: dict[int, list[_Pending]] = {}
    for subset in itertools.combinations(range(1, n + 1), detector.k):
        for seg in range(system.segment_count):
            p = detector.event_poly(system, subset, seg)
            if polys.is_zero(p):
                raise DegenerateSystemError(
                    f"{detector.name} holds identically for {subset} on segment {seg}"
                )
            if polys.degree(p) == 0:
                continue
            if polys.evaluate(p, Fraction(0)) == 0 or polys.evaluate(p, Fraction(1)) == 0:
                raise DegenerateSystemError(
                    f"{detector.name} event for {subset} lands on a breakpoint of segment {seg}"
                )
            q = polys.squarefree_part(p)
            for lo, hi in polys.isolate_roots(q, Fraction(0), Fraction(1)):
                pending.setdefault(seg, []).append(_Pending(subset, seg, p, q, lo, hi))

    events: list[CriticalEvent] = []
    ties: list[tuple[int, ...]] = []
    for seg in sorted(pending):
        group = pending[seg]
        # exact pairwise separation; ties are kept adjacent, ordered by index
        equal_to: dict[int, int] = {}
        for i, j in itertools.combinations(range(len(group)), 2):
            root_i = equal_to.get(i, i)
            root_j = equal_to.get(j, j)
            if root_i == root_j:
                continue
            if _same_root(group[i], group[j]):
                keep, drop = min(root_i, root_j), max(root_i, root_j)
                for idx, r in list(equal_to.items()):
                    if r == drop:
                        equal_to[idx] = keep
                equal_to[drop] = keep

        def sort_key(idx: int):
            e = group[equal_to.get(idx, idx)]
            return (e.lo, e.hi, group[idx].multiindex)

        order = sorted(range(len(group)), key=sort_key)
        t0, t1 = system.times[seg], system.times[seg + 1]
        width = t1 - t0
        base = len(events)
        for idx in order:
            e = group[idx]
            events.append(CriticalEvent(
                e.multiindex,
                seg,
                (t0 + width * e.lo, t0 + width * e.hi),
                e.sign_change,
                e.sqfree,
                (e.lo, e.hi),
            ))
        cluster: dict[int, list[int]] = {}
        for rank, idx in enumerate(order):
            cluster.setdefault(equal_to.get(idx, idx), []).append(base + rank)
        for members in cluster.values():
            if len(members) > 1:
                ties.append(tuple(members))
    return tuple(events), tuple(ties)


@lru_cache(maxsize=128)
def _scan_cached(system: DynamicalSystem, detector: PropertyDetector):
    return _scan(system, detector)


def isolate_event_times(system: DynamicalSystem, detector: PropertyDetector) -> tuple[CriticalEvent, ...]:
    """Every critical moment, exactly isolated and globally ordered.

    Exactly simultaneous events (a pleasantness violation) are tolerated
    here: they appear adjacent, ordered by multiindex.
    """
    events, _ = _scan_cached(system, detector)
    return events


def pleasantness_check(system: DynamicalSystem, detector: PropertyDetector) -> PleasantnessReport:
    """Simple sign-change events, pairwise distinct moments, no (k+1)-tuple."""
    events, ties = _scan_cached(system, detector)
    violations: list[Violation] = []
    for members in ties:
        group = [events[i] for i in members]
        lo = min(e.interval[0] for e in group)
        hi = max(e.interval[1] for e in group)
        violations.append(Violation(
            "simultaneous",
            tuple(e.multiindex for e in group),
            group[0].segment,
            (lo, hi),
        ))
    for e in events:
        if not e.sign_change:
            violations.append(Violation("tangential", (e.multiindex,), e.segment, e.interval))
    for e in events:
        for extra in range(1, system.n + 1):
            if extra in e.multiindex:
                continue
            h = detector.extension_poly(system, e.multiindex, extra, e.segment)
            hit = polys.is_zero(h) or polys.have_common_root(
                e.local_poly, h, e.local_interval[0], e.local_interval[1]
            )
            if hit:
                bigger = tuple(sorted(e.multiindex + (extra,)))
                violations.append(Violation("super_tuple", (bigger,), e.segment, e.interval))
    return PleasantnessReport(not violations, tuple(violations))


def type_of(system: DynamicalSystem, detector: PropertyDetector) -> Word:
    """The word of event multiindices in time order, for pleasant systems."""
    if system.n < detector.k:
        raise UnsupportedSignatureError(
            f"{detector.name} needs at least {detector.k} particles, system has {system.n}"
        )
    report = pleasantness_check(system, detector)
    if not report.pleasant:
        raise NotPleasantError(report)
    events, _ = _scan_cached(system, detector)
    sig = GroupSignature(system.n, detector.k)
    return Word(sig, tuple(e.multiindex for e in events))


# ------------------------------------------------------------ perturbation

_PERTURB_GRAIN = 1024


def perturb(system: DynamicalSystem, seed: int, magnitude) -> DynamicalSystem:
    """Shift interior breakpoints by seeded rational offsets of at most the
    given magnitude per coordinate; endpoints stay fixed."""
    mag = Fraction(magnitude)
    if mag < 0:
        raise ValueError("magnitude must be nonnegative")
    if mag == 0:
        return system
    for attempt in range(16):
        rng = random.Random(f"perturb:{seed}:{attempt}")
        tracks = []
        for tr in system.tracks:
            row = [tr[0]]
            for (x, y) in tr[1:-1]:
                dx = Fraction(rng.randrange(-_PERTURB_GRAIN, _PERTURB_GRAIN + 1), _PERTURB_GRAIN) * mag
                dy = Fraction(rng.randrange(-_PERTURB_GRAIN, _PERTURB_GRAIN + 1), _PERTURB_GRAIN) * mag
                row.append((x + dx, y + dy))
            row.append(tr[-1])
            tracks.append(tuple(row))
        # collisions at a grid time would violate the system invariant;
        # redraw with a bumped salt instead
        ok = all(
            len({tr[i] for tr in tracks}) == len(tracks)
            for i in range(len(system.times))
        )
        if ok:
            return DynamicalSystem(system.times, tuple(tracks))
    raise DegenerateSystemError("perturbation kept colliding; magnitude too large?")
