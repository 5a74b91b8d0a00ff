"""Exact word algebra for the free k-braid groups G_n^k.

The group G_n^k has one involutive generator a_m for every k-element subset
m of {1..n}.  Besides a_m^2 = 1 it satisfies far commutativity
(a_m a_m' = a_m' a_m whenever the multiindices share fewer than k-1 points)
and the tetrahedron relations: any block listing all k+1 of the k-subsets of
a (k+1)-set, each exactly once, equals the reversed block.

Equality reasoning works over the move graph generated by those relations
restricted to non-increasing moves: adjacent-equal cancellation, adjacent
far swaps, and block reversals.  Closures are explored breadth-first under
an explicit node budget; exhausting the budget is reported as an outcome of
its own, never silently treated as an answer.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    BudgetExhaustedError,
    MoveNotApplicableError,
    ParseError,
    SignatureMismatchError,
    UnsupportedSignatureError,
)

__all__ = [
    "DEFAULT_BUDGET",
    "GroupSignature",
    "Multiindex",
    "Word",
    "CyclicWord",
    "ParityVector",
    "make_multiindex",
    "enumerate_generators",
    "enumerate_tetrahedron_relations",
    "format_relations",
    "apply_involution",
    "apply_far_commutativity",
    "apply_tetrahedron",
    "neighbors",
    "reduce_word",
    "canonical_form",
    "complexity",
    "parity_vector",
    "are_equal",
    "cyclic_canonical_form",
    "are_conjugate",
    "joinable_with_insertions",
    "parse_word",
    "format_word",
]

DEFAULT_BUDGET = 10**6

Multiindex = tuple[int, ...]


@dataclass(frozen=True, order=True)
class GroupSignature:
    """The pair (n, k): n strands, generators indexed by k-subsets."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.k, int)):
            raise ValueError("signature components must be integers")
        if not 2 <= self.k <= self.n:
            raise ValueError(f"need 2 <= k <= n, got n={self.n} k={self.k}")

    @property
    def generator_count(self) -> int:
        from math import comb

        return comb(self.n, self.k)


def make_multiindex(values: Iterable[int], sig: GroupSignature) -> Multiindex:
    """Sorted k-tuple of distinct indices in 1..n."""
    vals = list(values)
    out = tuple(sorted(vals))
    if len(set(out)) != len(out):
        raise ValueError(f"duplicate index in {vals}")
    if len(out) != sig.k:
        raise ValueError(f"expected {sig.k} indices, got {len(out)}")
    for v in out:
        if not (isinstance(v, int) and 1 <= v <= sig.n):
            raise ValueError(f"index {v} out of range 1..{sig.n}")
    return out


def enumerate_generators(sig: GroupSignature) -> tuple[Multiindex, ...]:
    """All C(n,k) multiindices in lexicographic order."""
    return tuple(itertools.combinations(range(1, sig.n + 1), sig.k))


def _check_letter(letter: Multiindex, sig: GroupSignature) -> None:
    if len(letter) != sig.k:
        raise ValueError(f"letter {letter} has wrong arity for k={sig.k}")
    prev = 0
    for v in letter:
        if not (isinstance(v, int) and prev < v <= sig.n):
            raise ValueError(f"letter {letter} invalid for n={sig.n}")
        prev = v


@dataclass(frozen=True)
class Word:
    """A finite product of generators; the empty word is the identity."""

    signature: GroupSignature
    letters: tuple[Multiindex, ...]

    def __post_init__(self) -> None:
        for letter in self.letters:
            _check_letter(letter, self.signature)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Multiindex]:
        return iter(self.letters)


def _least_rotation(letters: tuple[Multiindex, ...]) -> tuple[Multiindex, ...]:
    if not letters:
        return letters
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


@dataclass(frozen=True)
class CyclicWord:
    """A word considered up to rotation; stored in least-rotation form."""

    signature: GroupSignature
    letters: tuple[Multiindex, ...]

    def __post_init__(self) -> None:
        for letter in self.letters:
            _check_letter(letter, self.signature)
        object.__setattr__(self, "letters", _least_rotation(self.letters))

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class ParityVector:
    """Occurrence count mod 2 for every generator, in lexicographic order.

    Invariant under all three relation families, so differing vectors prove
    two words distinct.
    """

    signature: GroupSignature
    bits: tuple[int, ...]


# ---------------------------------------------------------------- text form

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s+k\s*=\s*(\d+)\s*:")
_LETTER_RE = re.compile(r"\(\s*([0-9\s]*?)\s*\)")


def parse_word(text: str, signature: GroupSignature | None = None) -> Word:
    """Parse "(1 2) (1 3)" style text; "e" is the empty word.

    An optional leading header "n=<n> k=<k>:" fixes the signature; when both
    the header and the argument are given they must agree.
    """
    rest = text
    header = _HEADER_RE.match(rest)
    if header:
        try:
            sig = GroupSignature(int(header.group(1)), int(header.group(2)))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        if signature is not None and signature != sig:
            raise ParseError(f"header {sig} conflicts with requested {signature}")
        signature = sig
        rest = rest[header.end():]
    if signature is None:
        raise ParseError("no signature: pass one or use a 'n=.. k=..:' header")

    rest = rest.strip()
    if rest == "e" or rest == "":
        if rest == "":
            raise ParseError("empty input; spell the identity as 'e'")
        return Word(signature, ())

    letters = []
    pos = 0
    for match in _LETTER_RE.finditer(rest):
        if rest[pos:match.start()].strip():
            raise ParseError(f"unexpected text {rest[pos:match.start()]!r}")
        body = match.group(1).split()
        if not body:
            raise ParseError("empty letter '()'")
        try:
            values = [int(tok) for tok in body]
        except ValueError as exc:
            raise ParseError(f"bad index in {match.group(0)!r}") from exc
        try:
            letters.append(make_multiindex(values, signature))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        pos = match.end()
    if rest[pos:].strip():
        raise ParseError(f"unexpected trailing text {rest[pos:]!r}")
    if not letters:
        raise ParseError(f"no letters found in {text!r}")
    return Word(signature, tuple(letters))


def format_word(word: Word | CyclicWord, include_signature: bool = False) -> str:
    body = " ".join("(" + " ".join(map(str, m)) + ")" for m in word.letters) or "e"
    if include_signature:
        return f"n={word.signature.n} k={word.signature.k}: {body}"
    return body


# ---------------------------------------------------------------- relations

def enumerate_tetrahedron_relations(sig: GroupSignature) -> tuple[tuple[Word, Word], ...]:
    """All tetrahedron relation instances, one per reversal pair.

    For each (k+1)-subset U and each ordering of U kept up to reversal, the
    left side lists the generators U minus one element in that order and the
    right side is the reversed block.  Count: (k+1)! * C(n, k+1) / 2.
    """
    n, k = sig.n, sig.k
    out = []
    for U in itertools.combinations(range(1, n + 1), k + 1):
        for perm in itertools.permutations(U):
            if perm > perm[::-1]:
                continue
            left = tuple(tuple(x for x in U if x != u) for u in perm)
            out.append((Word(sig, left), Word(sig, left[::-1])))
    return tuple(out)


def format_relations(relations: Iterable[tuple[Word, Word]]) -> str:
    """Two-column text: left word, TAB, right word, one relation per line."""
    return "\n".join(f"{format_word(l)}\t{format_word(r)}" for l, r in relations)


# ------------------------------------------------------------------- moves

def apply_involution(word: Word, position: int) -> Word:
    """Delete the equal adjacent pair at position, position+1."""
    L = word.letters
    if not 0 <= position <= len(L) - 2:
        raise MoveNotApplicableError(f"no adjacent pair at position {position}")
    if L[position] != L[position + 1]:
        raise MoveNotApplicableError(
            f"letters at {position} differ: {L[position]} vs {L[position + 1]}"
        )
    return Word(word.signature, L[:position] + L[position + 2:])


def apply_far_commutativity(word: Word, position: int) -> Word:
    """Swap adjacent letters whose multiindices share fewer than k-1 indices."""
    L = word.letters
    if not 0 <= position <= len(L) - 2:
        raise MoveNotApplicableError(f"no adjacent pair at position {position}")
    a, b = L[position], L[position + 1]
    if len(set(a) & set(b)) >= word.signature.k - 1:
        raise MoveNotApplicableError(f"{a} and {b} share too many indices to commute")
    return Word(word.signature, L[:position] + (b, a) + L[position + 2:])


def apply_tetrahedron(word: Word, position: int) -> Word:
    """Reverse a block of k+1 distinct letters covering a common (k+1)-set."""
    k = word.signature.k
    L = word.letters
    if not 0 <= position <= len(L) - (k + 1):
        raise MoveNotApplicableError(f"no {k + 1}-letter block at position {position}")
    block = L[position:position + k + 1]
    union = set().union(*map(set, block))
    if len(set(block)) != k + 1 or len(union) != k + 1:
        raise MoveNotApplicableError(
            f"block at {position} is not the k-subsets of a {k + 1}-set"
        )
    return Word(word.signature, L[:position] + block[::-1] + L[position + k + 1:])


# --------------------------------------------------- encoded move machinery
#
# Closure searches run over tuples of small generator ids, with per-signature
# tables for the commutation test and the block-cover test.

@lru_cache(maxsize=None)
def _tables(sig: GroupSignature):
    gens = enumerate_generators(sig)
    gid = {m: i for i, m in enumerate(gens)}
    masks = tuple(sum(1 << (v - 1) for v in m) for m in gens)
    commute = tuple(
        tuple((masks[i] & masks[j]).bit_count() < sig.k - 1 for j in range(len(gens)))
        for i in range(len(gens))
    )
    return gens, gid, masks, commute


def _encode(word: Word) -> tuple[int, ...]:
    _, gid, _, _ = _tables(word.signature)
    return tuple(gid[m] for m in word.letters)


def _decode(sig: GroupSignature, state: tuple[int, ...]) -> Word:
    gens, _, _, _ = _tables(sig)
    return Word(sig, tuple(gens[i] for i in state))


def _state_moves(sig: GroupSignature, state: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All states one non-increasing move away: cancellations, swaps, reversals."""
    _, _, masks, commute = _tables(sig)
    k = sig.k
    L = len(state)
    for i in range(L - 1):
        a, b = state[i], state[i + 1]
        if a == b:
            yield state[:i] + state[i + 2:]
        elif commute[a][b]:
            yield state[:i] + (b, a) + state[i + 2:]
    for i in range(L - k):
        block = state[i:i + k + 1]
        if len(set(block)) != k + 1:
            continue
        union = 0
        for g in block:
            union |= masks[g]
        if union.bit_count() == k + 1:
            yield state[:i] + block[::-1] + state[i + k + 1:]


def neighbors(word: Word) -> tuple[Word, ...]:
    """Words one length-preserving move away (swap or block reversal)."""
    sig = word.signature
    state = _encode(word)
    seen = set()
    out = []
    for nb in _state_moves(sig, state):
        if len(nb) != len(state) or nb in seen:
            continue
        seen.add(nb)
        out.append(_decode(sig, nb))
    return tuple(out)


class _Closure:
    """Breadth-first closure under non-increasing moves, with a node budget."""

    def __init__(self, sig: GroupSignature, seeds: Iterable[tuple[int, ...]], budget: int):
        self.sig = sig
        self.budget = budget
        self.visited: set[tuple[int, ...]] = set(seeds)
        self.frontier = deque(self.visited)
        self.explored = 0
        self.min_len = min(map(len, self.visited))

    @property
    def complete(self) -> bool:
        return not self.frontier

    def step(self) -> tuple[tuple[int, ...], ...]:
        """Expand one state; returns the newly discovered states."""
        state = self.frontier.popleft()
        self.explored += 1
        if self.explored > self.budget:
            raise BudgetExhaustedError(self.explored, self.min_len)
        fresh = []
        for nb in _state_moves(self.sig, state):
            if nb in self.visited:
                continue
            self.visited.add(nb)
            self.frontier.append(nb)
            if len(nb) < self.min_len:
                self.min_len = len(nb)
            fresh.append(nb)
        return tuple(fresh)

    def run(self) -> None:
        while self.frontier:
            self.step()


def _full_closure(word: Word, budget: int) -> _Closure:
    closure = _Closure(word.signature, [_encode(word)], budget)
    try:
        closure.run()
    except BudgetExhaustedError as exc:
        exc.witness = None
        raise
    return closure


def reduce_word(word: Word, budget: int = DEFAULT_BUDGET) -> frozenset[Word]:
    """The set of all minimal-length words reachable by non-increasing moves.

    Raises BudgetExhaustedError (carrying the shortest length seen) when the
    closure cannot be completed within the budget.
    """
    closure = _full_closure(word, budget)
    m = closure.min_len
    return frozenset(
        _decode(word.signature, s) for s in closure.visited if len(s) == m
    )


def canonical_form(word: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """Lexicographically least minimal word; complete invariant for k = 2."""
    if word.signature.k != 2:
        raise UnsupportedSignatureError("canonical forms are defined for k = 2 only")
    return min(reduce_word(word, budget), key=lambda w: w.letters)


def complexity(word: Word, budget: int = DEFAULT_BUDGET) -> int:
    """Length of the minimal representative under non-increasing moves."""
    closure = _full_closure(word, budget)
    return closure.min_len


def parity_vector(word: Word | CyclicWord) -> ParityVector:
    gens, gid, _, _ = _tables(word.signature)
    counts = [0] * len(gens)
    for m in word.letters:
        counts[gid[m]] ^= 1
    return ParityVector(word.signature, tuple(counts))


# ---------------------------------------------------------------- equality

def _strip_common(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    # common prefixes and suffixes cancel: u x v = u y v iff x = y
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    a, b = a[i:], b[i:]
    j = 0
    while j < len(a) and j < len(b) and a[len(a) - 1 - j] == b[len(b) - 1 - j]:
        j += 1
    if j:
        a, b = a[:len(a) - j], b[:len(b) - j]
    return a, b


def _meet(sig, s1, s2, budget: int, cyclic: bool = False):
    """Bidirectional closure search.

    Returns (intersected, closure1, closure2); the closures are partial if
    the budget ran out (reported via their .complete flags, never raised).
    """
    moves = _cyc_moves if cyclic else _state_moves
    norm = _cyc_normalize if cyclic else (lambda s: s)
    s1, s2 = norm(s1), norm(s2)
    sides = (_Closure(sig, [s1], budget), _Closure(sig, [s2], budget))
    if s1 == s2:
        return True, sides[0], sides[1]
    if sides[0].visited & sides[1].visited:
        return True, sides[0], sides[1]
    spent = 0
    while spent < budget and not (sides[0].complete and sides[1].complete):
        side = sides[0] if (not sides[0].complete and (
            sides[1].complete or len(sides[0].frontier) <= len(sides[1].frontier)
        )) else sides[1]
        other = sides[1] if side is sides[0] else sides[0]
        state = side.frontier.popleft()
        side.explored += 1
        spent += 1
        for nb in moves(sig, state):
            nb = norm(nb)
            if nb in side.visited:
                continue
            if nb in other.visited:
                return True, sides[0], sides[1]
            side.visited.add(nb)
            side.frontier.append(nb)
            if len(nb) < side.min_len:
                side.min_len = len(nb)
    return False, sides[0], sides[1]


def are_equal(w1: Word, w2: Word, budget: int = DEFAULT_BUDGET) -> str:
    """Three-valued word problem: "equal", "distinct", or "unknown".

    k = 2 compares canonical forms and never answers "unknown".  For k >= 3
    the answer is "equal" when the move closures of the two words meet,
    "distinct" when the parity vectors differ or when both closures complete
    with different minimal lengths, and "unknown" otherwise.
    """
    if w1.signature != w2.signature:
        raise SignatureMismatchError(f"{w1.signature} vs {w2.signature}")
    if parity_vector(w1) != parity_vector(w2):
        return "distinct"
    if w1.signature.k == 2:
        return "equal" if canonical_form(w1, budget) == canonical_form(w2, budget) else "distinct"
    if w1.letters == w2.letters:
        return "equal"

    sig = w1.signature
    s1, s2 = _encode(w1), _encode(w2)
    t1, t2 = _strip_common(s1, s2)
    stripped = (t1, t2) != (s1, s2)
    if stripped:
        # cheap first pass: a meet of the stripped cores settles equality
        hit, _, _ = _meet(sig, t1, t2, budget)
        if hit:
            return "equal"
    # the stripped cores can miss joins that use the stripped context, and
    # the distinct verdict is only sound on the original closures
    hit, c1, c2 = _meet(sig, s1, s2, budget)
    if hit:
        return "equal"
    if c1.complete and c2.complete and c1.min_len != c2.min_len:
        return "distinct"
    return "unknown"


# ------------------------------------------------------------ cyclic words

def _cyc_normalize(state: tuple[int, ...]) -> tuple[int, ...]:
    if not state:
        return state
    return min(state[i:] + state[:i] for i in range(len(state)))


def _cyc_moves(sig: GroupSignature, state: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    L = len(state)
    if L == 0:
        return
    seen_rot = set()
    for r in range(L):
        rot = state[r:] + state[:r]
        if rot in seen_rot:
            continue
        seen_rot.add(rot)
        yield from _state_moves(sig, rot)
        if L >= 2 and rot[0] == rot[-1]:
            yield rot[1:-1]


def cyclic_canonical_form(cword: CyclicWord, budget: int = DEFAULT_BUDGET) -> CyclicWord:
    """Least rotation of the least minimal word in the cyclic closure (k = 2)."""
    if cword.signature.k != 2:
        raise UnsupportedSignatureError("cyclic canonical forms are defined for k = 2 only")
    sig = cword.signature
    _, gid, _, _ = _tables(sig)
    start = _cyc_normalize(tuple(gid[m] for m in cword.letters))
    visited = {start}
    frontier = deque([start])
    explored = 0
    min_len = len(start)
    while frontier:
        state = frontier.popleft()
        explored += 1
        if explored > budget:
            raise BudgetExhaustedError(explored, min_len)
        for nb in _cyc_moves(sig, state):
            nb = _cyc_normalize(nb)
            if nb in visited:
                continue
            visited.add(nb)
            frontier.append(nb)
            min_len = min(min_len, len(nb))
    best = min(s for s in visited if len(s) == min_len)
    gens = _tables(sig)[0]
    return CyclicWord(sig, tuple(gens[i] for i in best))


def are_conjugate(cw1: CyclicWord, cw2: CyclicWord, budget: int = DEFAULT_BUDGET) -> str:
    """Conjugacy test over cyclic closures; "unknown" is an honest outcome.

    k = 2 compares cyclic canonical forms.  For k >= 3: "distinct" only via
    the parity vector (a conjugacy invariant), "equal" via a cyclic-closure
    meet, "unknown" otherwise.
    """
    if cw1.signature != cw2.signature:
        raise SignatureMismatchError(f"{cw1.signature} vs {cw2.signature}")
    if cw1.signature.k == 2:
        same = cyclic_canonical_form(cw1, budget) == cyclic_canonical_form(cw2, budget)
        return "equal" if same else "distinct"
    if parity_vector(cw1) != parity_vector(cw2):
        return "distinct"
    sig = cw1.signature
    _, gid, _, _ = _tables(sig)
    s1 = tuple(gid[m] for m in cw1.letters)
    s2 = tuple(gid[m] for m in cw2.letters)
    hit, _, _ = _meet(sig, s1, s2, budget, cyclic=True)
    return "equal" if hit else "unknown"


# ------------------------------------------------- bounded insertion oracle

def joinable_with_insertions(
    w1: Word,
    w2: Word,
    max_insertions: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Cross-check oracle: can the words be joined allowing a few a_m a_m
    insertions on the first side?

    Strictly stronger than a plain closure meet, but bounded: at most
    max_insertions insertions along any path, so a False is not a proof of
    inequality.  Intended for validating "distinct"/"unknown" answers on
    short words, not as a decision procedure.
    """
    if w1.signature != w2.signature:
        raise SignatureMismatchError(f"{w1.signature} vs {w2.signature}")
    sig = w1.signature
    gens = _tables(sig)[0]
    n_gens = len(gens)

    target = _Closure(sig, [_encode(w2)], budget)
    target.run()

    start = (_encode(w1), 0)
    if start[0] in target.visited:
        return True
    visited = {start}
    frontier = deque([start])
    explored = 0
    while frontier:
        state, used = frontier.popleft()
        explored += 1
        if explored > budget:
            raise BudgetExhaustedError(explored)
        nexts = list(_state_moves(sig, state))
        moves = [(nb, used) for nb in nexts]
        if used < max_insertions:
            for pos in range(len(state) + 1):
                for g in range(n_gens):
                    moves.append((state[:pos] + (g, g) + state[pos:], used + 1))
        for nb, u in moves:
            if nb in target.visited:
                return True
            if (nb, u) in visited:
                continue
            visited.add((nb, u))
            frontier.append((nb, u))
    return False
