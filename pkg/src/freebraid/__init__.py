"""Free k-braid groups, picture-valued motion invariants, and trisecant
certificates, all in exact rational arithmetic."""

from .errors import (
    BudgetExhaustedError,
    DegenerateSystemError,
    FreebraidError,
    MoveNotApplicableError,
    NotPleasantError,
    NotPureError,
    ParseError,
    RealizationError,
    SignatureMismatchError,
    UnsupportedSignatureError,
)
from .words import (
    DEFAULT_BUDGET,
    CyclicWord,
    GroupSignature,
    ParityVector,
    Word,
    apply_far_commutativity,
    apply_involution,
    apply_tetrahedron,
    are_conjugate,
    are_equal,
    canonical_form,
    complexity,
    cyclic_canonical_form,
    enumerate_generators,
    enumerate_tetrahedron_relations,
    format_relations,
    format_word,
    joinable_with_insertions,
    make_multiindex,
    neighbors,
    parity_vector,
    parse_word,
    reduce_word,
)
from .dynamics import (
    CriticalEvent,
    DynamicalSystem,
    PleasantnessReport,
    PropertyDetector,
    Violation,
    collinearity_detector,
    concyclicity_detector,
    format_events,
    format_system,
    isolate_event_times,
    make_system,
    parse_system,
    perturb,
    pleasantness_check,
    type_of,
)
from .braids import (
    RELATIONS,
    BraidWord,
    Certificate,
    apply_artin_relation,
    closed_invariant,
    enumerate_artin_rewrites,
    format_artin,
    home_positions,
    invariant_c,
    invariant_c4,
    parse_artin,
    permutation_of,
    pure_power,
    realize,
    trisecant_certificate,
)
from .pictures import Crossing, Diagram, layout, render_minimal_graph, render_svg

__version__ = "0.1.0"
