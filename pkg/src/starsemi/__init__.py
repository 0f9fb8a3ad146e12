"""Star operations on numerical semigroups.

Construction and invariants of numerical semigroups, arithmetic of their
fractional ideals, the star order on nondivisorial ideals, exact enumeration
of star operations through antichains, proven lower bounds, and the
exhaustive classification of nonsymmetric semigroups with few operations.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    bound_delta,
    bound_dedekind_type,
    bound_sum_dedekind,
    bound_t_dedekind,
    bound_xi_mu,
    classify_up_to,
    formula_mu3,
    formula_pseudosym_2mu2,
    measure_xi_mu,
    pseudosymmetric_family,
    verify_supporting_bounds,
)
from .enumeration import (
    Poset,
    StarCensus,
    all_atoms_property,
    count_antichains,
    count_star_operations_up_to,
    dedekind,
    enumerate_antichains,
    enumerate_star_operations,
)
from .errors import (
    EmptyInput,
    LimitExceeded,
    NotAnIdeal,
    NotClosed,
    NotNumerical,
    StarSemiError,
)
from .ideals import (
    Ideal,
    enumerate_F0,
    enumerate_nondivisorial,
    ideal_M,
    normalize,
    quotient,
    v_closure,
)
from .ideals import ideal_from_added, maximal_ideal
from .semigroups import (
    NATURALS,
    NumericalSemigroup,
    enumerate_semigroups,
    from_gaps,
    from_generators,
    parse_semigroup,
)
from .stars import (
    StarOperation,
    StarPoset,
    build_star,
    build_star_poset,
    is_atom,
    q_set,
    qm_invariant,
    star_close,
    star_leq,
)

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup", "NATURALS", "from_generators", "from_gaps",
    "enumerate_semigroups", "parse_semigroup",
    "Ideal", "ideal_from_added", "maximal_ideal", "normalize", "quotient", "v_closure",
    "ideal_M", "enumerate_F0", "enumerate_nondivisorial",
    "StarOperation", "StarPoset", "star_close", "build_star", "star_leq",
    "build_star_poset", "is_atom", "q_set", "qm_invariant",
    "Poset", "StarCensus", "enumerate_antichains", "count_antichains",
    "dedekind", "enumerate_star_operations", "count_star_operations_up_to",
    "all_atoms_property",
    "BoundEntry", "BoundReport", "bound_dedekind_type", "bound_sum_dedekind",
    "bound_t_dedekind", "bound_delta", "formula_mu3", "formula_pseudosym_2mu2",
    "pseudosymmetric_family", "bound_xi_mu", "measure_xi_mu", "classify_up_to",
    "verify_supporting_bounds",
    "StarSemiError", "EmptyInput", "NotNumerical", "NotClosed", "NotAnIdeal",
    "LimitExceeded",
]
