"""Command-line surface.

Subcommands: reduce, equal, conjugate, invariant, lowerbound, draw,
relations.  Exit codes: 0 success, 2 parse/usage errors, 3 search budget
exhausted, 4 degenerate or non-pleasant geometry.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braids, pictures, words
from .errors import (
    BudgetExhaustedError,
    DegenerateSystemError,
    FreebraidError,
    NotPleasantError,
    NotPureError,
    ParseError,
    RealizationError,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DEGENERATE = 4


def _signature_from(args) -> words.GroupSignature | None:
    if args.n is None and args.k is None:
        return None
    if args.n is None or args.k is None:
        raise ParseError("--n and --k must be given together")
    try:
        return words.GroupSignature(args.n, args.k)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _word_from(args, text: str) -> words.Word:
    return words.parse_word(text, _signature_from(args))


def _input_text(args) -> str:
    if args.file is not None:
        if args.text is not None:
            raise ParseError("give the input either inline or via --file, not both")
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    if args.text is None:
        raise ParseError("no input given")
    return args.text


def _emit(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_reduce(args) -> int:
    word = _word_from(args, _input_text(args))
    if word.signature.k == 2:
        best = words.canonical_form(word, args.budget)
    else:
        best = min(words.reduce_word(word, args.budget), key=lambda w: w.letters)
    print(words.format_word(best))
    print(f"complexity {len(best.letters)}")
    return EXIT_OK


def _cmd_equal(args) -> int:
    w1 = _word_from(args, args.first)
    w2 = _word_from(args, args.second)
    print(words.are_equal(w1, w2, args.budget))
    return EXIT_OK


def _cmd_conjugate(args) -> int:
    w1 = _word_from(args, args.first)
    w2 = _word_from(args, args.second)
    c1 = words.CyclicWord(w1.signature, w1.letters)
    c2 = words.CyclicWord(w2.signature, w2.letters)
    print(words.are_conjugate(c1, c2, args.budget))
    return EXIT_OK


def _cmd_invariant(args) -> int:
    braid = braids.parse_artin(_input_text(args), args.n)
    if args.k == 3:
        word = braids.invariant_c(braid, seed=args.seed)
    else:
        word = braids.invariant_c4(braid, seed=args.seed)
    print(words.format_word(word, include_signature=True))
    return EXIT_OK


def _cmd_lowerbound(args) -> int:
    braid = braids.parse_artin(_input_text(args), args.n)
    cert = braids.trisecant_certificate(braid, budget=args.budget, seed=args.seed)
    print(json.dumps({
        "events": cert.events,
        "lower_bound": cert.lower_bound,
        "ok": cert.ok,
        "exact": cert.exact,
    }))
    return EXIT_OK


def _cmd_draw(args) -> int:
    word = _word_from(args, _input_text(args))
    if args.format == "svg":
        payload = pictures.render_svg(pictures.layout(word))
    else:
        payload = pictures.render_minimal_graph(word, args.budget)
    _emit(args, payload)
    return EXIT_OK


def _cmd_relations(args) -> int:
    sig = _signature_from(args)
    if sig is None:
        raise ParseError("--n and --k are required")
    rels = words.enumerate_tetrahedron_relations(sig)
    print(f"count {len(rels)}")
    if rels:
        print(words.format_relations(rels))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freebraid",
        description="Free k-braid words, motion invariants, and diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, word_input=False, braid_input=False):
        p.add_argument("--n", type=int, default=None, help="strand count")
        p.add_argument("--k", type=int, default=None, help="multiindex size")
        p.add_argument("--seed", type=int, default=0, help="perturbation seed")
        p.add_argument("--budget", type=int, default=words.DEFAULT_BUDGET,
                       help="search node budget")
        if word_input or braid_input:
            p.add_argument("text", nargs="?", default=None,
                           help="input text (or use --file)")
            p.add_argument("--file", default=None, help="read the input from a file")

    p = sub.add_parser("reduce", help="minimal representative and complexity")
    common(p, word_input=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("equal", help="word problem: equal / distinct / unknown")
    common(p)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser("conjugate", help="conjugacy problem on cyclic words")
    common(p)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("invariant", help="motion invariant of a braid word")
    common(p, braid_input=True)
    p.set_defaults(func=_cmd_invariant, k=3)

    p = sub.add_parser("lowerbound", help="trisecant certificate for a braid")
    common(p, braid_input=True)
    p.set_defaults(func=_cmd_lowerbound)

    p = sub.add_parser("draw", help="render a word as SVG or DOT")
    common(p, word_input=True)
    p.add_argument("--format", choices=("svg", "dot"), default="svg")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=_cmd_draw)

    p = sub.add_parser("relations", help="list the tetrahedron relations")
    common(p)
    p.set_defaults(func=_cmd_relations)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariant":
        if args.k is None:
            args.k = 3
        if args.k not in (3, 4):
            print("error: invariant --k must be 3 or 4", file=sys.stderr)
            return EXIT_USAGE
        if args.n is None:
            print("error: invariant needs --n", file=sys.stderr)
            return EXIT_USAGE
    if args.command == "lowerbound" and args.n is None:
        print("error: lowerbound needs --n", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DegenerateSystemError, NotPleasantError, RealizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ParseError, NotPureError, FreebraidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
