"""Finite posets, series-parallel order algebra, dual orders, and entropy
conservation for comparison-based computation, with brute-force oracles and
an instrumented compare/swap engine."""

from ._kernels import NUMBA_ENABLED, backend_name
from .duality import (
    PlacedHasse,
    dot_document,
    dual_expression,
    dual_order,
    place,
    reflect_complement,
)
from .entropy import (
    ConservationRecord,
    DoubleStateSpace,
    EntropyPair,
    GlobalState,
    SortingTransform,
    StateSpaceRef,
    check_conservation,
    double_state_space,
    entropy_pair,
    sorting_global_transform,
)
from .errors import (
    ConservationViolation,
    CycleError,
    DuplicateVariableError,
    MalformedHistory,
    NotASorter,
    PlacementError,
    ProgramError,
    SizeError,
)
from .history import (
    PROGRAMS,
    SORTERS,
    BijectionReport,
    HistoryState,
    Tape,
    decode,
    heap_order_4,
    heapify_distribution,
    invert,
    run_with_history,
    verify_sorting_bijection,
)
from .poset import (
    ENUMERATION_CAP,
    SEARCH_CAP,
    Labeling,
    Poset,
    RootState,
    StateSpace,
    TopSort,
    are_isomorphic,
    count_extensions,
    enumerate_extensions,
    is_topological_sort,
    naive_extensions,
    poset_from_text,
    poset_to_text,
    refines,
    root_state,
)
from .spexpr import (
    Parallel,
    Series,
    SPExpression,
    Var,
    all_expressions,
    build_order,
    chain_expression,
    count_sp,
    discrete_expression,
    is_n_free,
    n_shaped_order,
    normalize,
    parallel,
    parse,
    random_expression,
    series,
    size,
    to_text,
    variables,
)

__version__ = "0.1.0"
