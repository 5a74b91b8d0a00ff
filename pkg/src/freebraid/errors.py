"""Exception types shared across the package."""

from __future__ import annotations


class FreebraidError(Exception):
    """Base class for all package-specific failures."""


class ParseError(FreebraidError):
    """Malformed word, braid, or system text."""


class MoveNotApplicableError(FreebraidError):
    """A relation move was requested at a position where it does not apply."""


class UnsupportedSignatureError(FreebraidError):
    """Operation restricted to particular (n, k), e.g. canonical forms need k = 2."""


class SignatureMismatchError(FreebraidError):
    """Two words from different groups were compared."""


class BudgetExhaustedError(FreebraidError):
    """A move-graph search hit its node budget before completing.

    Carries enough state for callers to keep partial information: the number
    of explored states and the shortest word length seen so far (an upper
    bound on the true complexity).
    """

    def __init__(self, explored: int, shortest_seen: int | None = None, witness=None):
        self.explored = explored
        self.shortest_seen = shortest_seen
        self.witness = witness
        msg = f"search budget exhausted after {explored} states"
        if shortest_seen is not None:
            msg += f" (shortest word seen: {shortest_seen})"
        super().__init__(msg)


class DegenerateSystemError(FreebraidError):
    """Event detection hit an unresolvable degeneracy.

    Raised when an event polynomial vanishes identically on a segment, or a
    root lands exactly on a segment boundary.
    """


class NotPleasantError(FreebraidError):
    """Type word requested for a system that fails the pleasantness check."""

    def __init__(self, report):
        self.report = report
        kinds = sorted({v.kind for v in report.violations})
        super().__init__(f"system is not pleasant: {', '.join(kinds)}")


class NotPureError(FreebraidError):
    """Closed-braid invariant requested for a braid with nontrivial permutation."""


class RealizationError(FreebraidError):
    """A braid could not be realized as a pleasant system within the retry budget."""
