"""Strand diagrams for k-braid words.

Each strand runs from (i,0) to (i,1) along its own vertical lane, with the
height axis split into one band per letter.  At a letter a_m the k strands
of m bend to a single meeting point inside the band, marked by a solid dot,
and return to their lanes; every other crossing the routing produces is an
artifact of the drawing and gets encircled instead.  Convention: strands
meet at the dot and bounce back to their own lanes, which keeps every
strand's endpoints fixed and its height coordinate strictly monotone.

The minimal-form graph of a 2-braid word is the crossing graph of its
canonical form: one vertex per letter, edges joining consecutive crossings
along each strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedSignatureError
from .words import DEFAULT_BUDGET, Word, canonical_form, format_word

__all__ = [
    "Crossing",
    "Diagram",
    "layout",
    "render_svg",
    "render_minimal_graph",
]

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Crossing:
    point: Point
    strands: tuple[int, ...]
    kind: str  # "generator" | "artifact"


@dataclass(frozen=True)
class Diagram:
    n: int
    strands: tuple[tuple[Point, ...], ...]
    crossings: tuple[Crossing, ...]


def _simplify(points: list[Point]) -> tuple[Point, ...]:
    # drop vertices lying on the segment between their neighbors
    out: list[Point] = []
    for p in points:
        while len(out) >= 2:
            (ax, ay), (bx, by) = out[-2], out[-1]
            if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) == 0:
                out.pop()
            else:
                break
        if not out or out[-1] != p:
            out.append(p)
    return tuple(out)


def layout(word: Word) -> Diagram:
    """Deterministic diagram of a word: one band per letter, one dot each."""
    n, k = word.signature.n, word.signature.k
    L = len(word.letters)
    bands = max(L, 1)
    paths: list[list[Point]] = [[(Fraction(i), Fraction(0))] for i in range(1, n + 1)]
    crossings: list[Crossing] = []

    for band, m in enumerate(word.letters):
        y0 = Fraction(band, bands)
        ym = Fraction(2 * band + 1, 2 * bands)
        y1 = Fraction(band + 1, bands)
        # the meeting point sits off every integer lane
        xc = Fraction(sum(m), k) + Fraction(1, 2 * k + 3)
        crossings.append(Crossing((xc, ym), tuple(m), "generator"))
        artifacts = []
        for s in m:
            lane = Fraction(s)
            paths[s - 1].extend([(lane, y0), (xc, ym), (lane, y1)])
            lo, hi = (lane, xc) if lane < xc else (xc, lane)
            for q in range(1, n + 1):
                if q in m or not lo < q < hi:
                    continue
                # the wedge spans lane q twice: on the way in and the way out
                y_in = y0 + (ym - y0) * (q - lane) / (xc - lane)
                y_out = ym + (y1 - ym) * (q - xc) / (lane - xc)
                pair = (min(s, q), max(s, q))
                artifacts.append(Crossing((Fraction(q), y_in), pair, "artifact"))
                artifacts.append(Crossing((Fraction(q), y_out), pair, "artifact"))
        artifacts.sort(key=lambda c: (c.point[1], c.point[0], c.strands))
        crossings.extend(artifacts)

    for i in range(n):
        paths[i].append((Fraction(i + 1), Fraction(1)))
    return Diagram(n, tuple(_simplify(p) for p in paths), tuple(crossings))


# ---------------------------------------------------------------- renderers

_X_STEP = 60.0
_MARGIN = 40.0
_HEIGHT = 520.0


def _sx(x: Fraction) -> str:
    return f"{_MARGIN + _X_STEP * (float(x) - 1.0):.2f}"


def _sy(y: Fraction) -> str:
    return f"{20.0 + _HEIGHT * float(y):.2f}"


def render_svg(diagram: Diagram) -> str:
    """Deterministic SVG: one path per strand, filled dots for generators,
    open circles for artifact crossings."""
    width = int(2 * _MARGIN + _X_STEP * (diagram.n - 1))
    height = 560
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}" '
        f'width="{width}" height="{height}">',
        '<g fill="none" stroke="#333333" stroke-width="1.5">',
    ]
    for path in diagram.strands:
        coords = " L ".join(f"{_sx(x)} {_sy(y)}" for x, y in path)
        lines.append(f'<path d="M {coords}" />')
    lines.append("</g>")
    for c in diagram.crossings:
        cx, cy = _sx(c.point[0]), _sy(c.point[1])
        if c.kind == "generator":
            lines.append(f'<circle cx="{cx}" cy="{cy}" r="5" fill="#000000" class="generator" />')
        else:
            lines.append(
                f'<circle cx="{cx}" cy="{cy}" r="7" fill="none" stroke="#000000" '
                'stroke-width="1.2" class="artifact" />'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_minimal_graph(word: Word, budget: int = DEFAULT_BUDGET) -> str:
    """DOT text of the canonical form's crossing graph (k = 2 only).

    Vertices are the letters of the canonical word in order; an edge joins
    each pair of crossings consecutive along a strand.
    """
    if word.signature.k != 2:
        raise UnsupportedSignatureError("minimal-form graphs are defined for k = 2 only")
    w = canonical_form(word, budget)
    lines = ["graph minimal_form {"]
    for i, m in enumerate(w.letters):
        lines.append(f'  v{i} [label="{format_word(Word(w.signature, (m,)))}"];')
    edges = []
    for s in range(1, w.signature.n + 1):
        hits = [i for i, m in enumerate(w.letters) if s in m]
        edges.extend((a, b, s) for a, b in zip(hits, hits[1:]))
    for a, b, s in sorted(edges):
        lines.append(f'  v{a} -- v{b} [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
