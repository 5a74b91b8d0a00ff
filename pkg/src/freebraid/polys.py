"""Dense univariate polynomials over exact rationals.

Coefficient tuples run from the constant term upward and carry no trailing
zeros; the zero polynomial is the empty tuple.  Everything stays inside
fractions.Fraction so that every sign decision is exact.  Root isolation is
Sturm-chain bisection on the square-free part, which is all the degree <= 4
event polynomials of the scanner ever need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]

ZERO: Poly = ()


def poly(coeffs: Iterable[Fraction | int]) -> Poly:
    """Normalise a coefficient sequence: Fractions, no trailing zeros."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    # the zero polynomial gets degree -1
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def scale(p: Poly, c: Fraction | int) -> Poly:
    c = Fraction(c)
    if c == 0:
        return ZERO
    return tuple(a * c for a in p)


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def derivative(p: Poly) -> Poly:
    return poly([i * a for i, a in enumerate(p)][1:])


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if is_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    dq = degree(q)
    lead = q[-1]
    while len(rem) - 1 >= dq and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dq:
            break
        shift = len(rem) - 1 - dq
        factor = rem[-1] / lead
        quot[shift] = factor
        for i, b in enumerate(q):
            rem[shift + i] -= factor * b
        rem.pop()
    return poly(quot), poly(rem)


def monic(p: Poly) -> Poly:
    if is_zero(p):
        return ZERO
    return tuple(a / p[-1] for a in p)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    a, b = p, q
    while not is_zero(b):
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def squarefree_part(p: Poly) -> Poly:
    """p with all repeated roots collapsed to simple ones."""
    if degree(p) < 1:
        return monic(p)
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return monic(p)
    quot, rem = divmod_poly(p, g)
    assert is_zero(rem)
    return monic(quot)


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, derivative(p)]
    while not is_zero(chain[-1]) and degree(chain[-1]) > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if is_zero(r):
            break
        chain.append(scale(r, -1))
    return [c for c in chain if not is_zero(c)]


def _sign_variations(chain: Sequence[Poly], x: Fraction) -> int:
    signs = []
    for c in chain:
        v = evaluate(c, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo: Fraction, hi: Fraction, chain: list[Poly] | None = None) -> int:
    """Number of distinct real roots of square-free p in the open (lo, hi).

    Requires p(lo) != 0 and p(hi) != 0, so open vs closed does not matter.
    """
    if evaluate(p, lo) == 0 or evaluate(p, hi) == 0:
        raise ValueError("Sturm count needs non-root endpoints")
    if chain is None:
        chain = sturm_chain(p)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def isolate_roots(p: Poly, lo: Fraction, hi: Fraction) -> tuple[tuple[Fraction, Fraction], ...]:
    """Disjoint open intervals in (lo, hi), one simple root of p in each.

    p must be square-free with non-root endpoints; the intervals come back in
    increasing order and have non-root endpoints themselves.
    """
    chain = sturm_chain(p)
    out: list[tuple[Fraction, Fraction]] = []

    def recurse(a: Fraction, b: Fraction, n: int) -> None:
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        if evaluate(p, mid) == 0:
            # an exactly rational root sits at the midpoint; carve out an
            # isolating interval around it and recurse on both sides
            delta = (b - a) / 4
            while (
                evaluate(p, mid - delta) == 0
                or evaluate(p, mid + delta) == 0
                or count_roots(p, mid - delta, mid + delta, chain) != 1
            ):
                delta /= 2
            recurse(a, mid - delta, count_roots(p, a, mid - delta, chain))
            out.append((mid - delta, mid + delta))
            recurse(mid + delta, b, count_roots(p, mid + delta, b, chain))
            return
        recurse(a, mid, count_roots(p, a, mid, chain))
        recurse(mid, b, count_roots(p, mid, b, chain))

    recurse(lo, hi, count_roots(p, lo, hi, chain))
    return tuple(out)


def refine_root(p: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of square-free p below the given width."""
    flo = evaluate(p, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = evaluate(p, mid)
        if fmid == 0:
            quarter = (hi - lo) / 8
            while evaluate(p, mid - quarter) == 0 or evaluate(p, mid + quarter) == 0:
                quarter /= 2
            lo, hi = mid - quarter, mid + quarter
            flo = evaluate(p, lo)
            continue
        if (flo < 0) != (fmid < 0):
            hi = mid
        else:
            lo, hi = mid, hi
            flo = fmid
    return lo, hi


def bisect_once(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    return refine_root(p, lo, hi, (hi - lo) * Fraction(3, 4))


def have_common_root(f: Poly, g: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Do f and g share a root inside (lo, hi)?  Exact, via their gcd."""
    h = poly_gcd(f, g)
    if degree(h) < 1:
        return False
    h = squarefree_part(h)
    if evaluate(h, lo) == 0 or evaluate(h, hi) == 0:
        # endpoints of isolating intervals are never roots of f in the
        # scanner's usage, so a root of h here cannot be a root of f
        return False
    return count_roots(h, lo, hi) > 0
