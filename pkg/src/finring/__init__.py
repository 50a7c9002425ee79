"""finring: exhaustive structure checking for finite rings.

Finite unital rings are tabulated as explicit Cayley tables; ideal-level
properties (square stability, stable range one, exchange, regularity,
reducedness) become decidable predicates, and the claims tying them
together are verified clause by clause over a corpus of concrete rings.
"""

from .build import elaborate, resolve_ideal
from .elements import (
    ElementProfile,
    classify,
    classify_all,
    classify_in_quotient,
    complete_unit_regular,
    is_dedekind_finite,
)
from .errors import (
    FinringError,
    NotAnIdeal,
    NotCommutative,
    NotFound,
    NotIdempotent,
    PreconditionFailed,
    RingSyntaxError,
    SizeExceeded,
)
from .expr import parse_family, parse_ideal_spec, parse_ring_expr, render, render_ideal
from .predicates import (
    IDEAL_PREDICATES,
    RING_PREDICATES,
    PredicateResult,
    abelian_ring,
    exchange_ideal,
    nil_ideal,
    reduced_ideal,
    regular_ideal,
    ring_square_stable_range_one,
    square_stable_def,
    square_stable_fast,
    square_stable_matrix,
    stable_range_one,
)
from .rings import (
    DEFAULT_MAX_SIZE,
    AxiomReport,
    Ideal,
    RingTable,
    element_index,
    make_corner,
    make_cyclic,
    make_gaussian,
    make_matrix,
    make_product,
    make_quotient,
    make_triangular,
    verify_axioms,
)
from .structure import (
    all_ideals,
    enclosing_corner_idempotent,
    ideal_generated_by,
    idempotent_indices,
    inverse_map,
    is_comaximal,
    jacobson_radical,
    left_set,
    right_set,
    sum_set,
    unit_indices,
    units_lift,
    units_mask,
)
from .theorems import (
    ALL_IDS,
    DEFAULT_CORPUS,
    THEOREM_IDS,
    CorpusReport,
    TheoremVerdict,
    cross_validate_square_stable,
    run_corpus,
    search_counterexamples,
    verify,
    verify_example_41,
)

__version__ = "0.1.0"
