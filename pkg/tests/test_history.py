import itertools
import math

import pytest

from orderentropy import (
    MalformedHistory,
    NotASorter,
    PROGRAMS,
    Poset,
    ProgramError,
    RootState,
    SORTERS,
    Tape,
    decode,
    enumerate_extensions,
    heap_order_4,
    heapify_distribution,
    invert,
    run_with_history,
    verify_sorting_bijection,
)
from orderentropy.history import HistoryState


def reference_sorted_pairs(perm):
    """Independent oracle: where index-label pairs must end up after sorting.

    Sorting puts label a at position a (root-state labels are ranks), and the
    pair keeps its origin, so position i finally holds (sigma^{-1}(i), i).
    """
    return tuple(sorted(((i, a) for i, a in enumerate(perm, start=1)), key=lambda p: p[1]))


class TestTape:
    def test_compare_reports_label_order_and_traces(self):
        t = Tape([(1, 5), (2, 3)])
        assert t.compare(1, 2) == 1
        assert t.compare(2, 1) == -1
        assert t.trace == [("compare", 1, 2, 1), ("compare", 2, 1, -1)]

    def test_swap_moves_whole_pairs(self):
        t = Tape([(1, 5), (2, 3)])
        t.swap(1, 2)
        assert t.snapshot() == ((2, 3), (1, 5))
        assert t.trace[-1] == ("swap", 1, 2)

    def test_out_of_range_positions(self):
        t = Tape([(1, 1), (2, 2)])
        with pytest.raises(ProgramError):
            t.compare(1, 3)
        with pytest.raises(ProgramError):
            t.swap(0, 1)

    def test_trace_contains_only_compares_and_swaps(self):
        t = Tape([(i, v) for i, v in enumerate((3, 1, 2), start=1)])
        SORTERS["quicksort"].program(t)
        assert {event[0] for event in t.trace} <= {"compare", "swap"}


class TestRunWithHistory:
    def test_trivial_sort_swaps_pairs(self):
        state = run_with_history(SORTERS["trivial2"].program, (2, 1))
        assert state.pairs == ((2, 1), (1, 2))

    def test_trivial_sort_leaves_sorted_input_unchanged(self):
        state = run_with_history(SORTERS["trivial2"].program, (1, 2))
        assert state.pairs == ((1, 1), (2, 2))

    def test_origin_sequence_is_inverse_permutation(self):
        perm = (3, 1, 2)
        for name in ("bubble", "insertion", "merge", "quicksort"):
            state = run_with_history(SORTERS[name].program, perm)
            assert state.labels() == (1, 2, 3)
            assert state.origins() == invert(perm) == (2, 3, 1)

    def test_matches_independent_reference_on_all_inputs(self):
        for n in range(1, 6):
            for perm in itertools.permutations(range(1, n + 1)):
                state = run_with_history(SORTERS["insertion"].program, perm)
                assert state.pairs == reference_sorted_pairs(perm)

    def test_accepts_root_state_input(self):
        rs = RootState(Poset.discrete(3), (3, 1, 2))
        state = run_with_history(SORTERS["bubble"].program, rs)
        assert state.labels() == (1, 2, 3)

    def test_rejects_non_discrete_root_state(self):
        rs = RootState(Poset.chain(2), (1, 2))
        with pytest.raises(ValueError):
            run_with_history(SORTERS["bubble"].program, rs)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            run_with_history(SORTERS["bubble"].program, (1, 3))

    def test_value_conservation(self):
        for perm in itertools.permutations(range(1, 6)):
            state = run_with_history(SORTERS["quicksort"].program, perm)
            assert sorted(state.pairs) == sorted((i, v) for i, v in enumerate(perm, 1))

    def test_program_error_propagates(self):
        def rogue(t):
            t.compare(1, t.n + 1)

        with pytest.raises(ProgramError):
            run_with_history(rogue, (1, 2))


class TestDecode:
    def test_swapped_pairs_recover_reversed_input(self):
        rs = decode(((2, 1), (1, 2)))
        assert rs.perm == (2, 1)

    def test_identity_history(self):
        rs = decode(((1, 4), (2, 2), (3, 3), (4, 1)))
        assert rs.perm == (4, 2, 3, 1)

    def test_malformed_origins(self):
        with pytest.raises(MalformedHistory):
            decode(((1, 1), (1, 2)))

    def test_roundtrip_exhaustive_merge_n6(self):
        for perm in itertools.permutations(range(1, 7)):
            state = run_with_history(SORTERS["merge"].program, perm)
            assert decode(state).perm == perm

    def test_roundtrip_all_programs_small(self):
        for n in range(1, 6):
            for name, entry in PROGRAMS.items():
                if not entry.supports(n):
                    continue
                for perm in itertools.permutations(range(1, n + 1)):
                    state = run_with_history(entry.program, perm)
                    assert decode(state).perm == perm

    def test_roundtrip_exhaustive_at_seven(self):
        sorters = [e for e in PROGRAMS.values() if e.supports(7)]
        for perm in itertools.permutations(range(1, 8)):
            for entry in sorters:
                state = run_with_history(entry.program, perm)
                assert decode(state).perm == perm


class TestHistoryState:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            HistoryState(Poset.discrete(2), ((1, 1), (2, 1)))

    def test_labels_must_respect_order(self):
        with pytest.raises(ValueError):
            HistoryState(Poset.chain(2), ((1, 2), (2, 1)))

    def test_projections(self):
        h = HistoryState(Poset.discrete(2), ((2, 1), (1, 2)))
        assert h.labels() == (1, 2)
        assert h.origins() == (2, 1)


class TestBijection:
    def test_bubble_n3_origins_enumerate_all_permutations(self):
        report = verify_sorting_bijection("bubble", 3)
        assert report.passed
        assert report.inputs == 6

    def test_single_element(self):
        for name in SORTERS:
            report = verify_sorting_bijection(name, 1)
            assert report.passed

    def test_quicksort_n6(self):
        report = verify_sorting_bijection("quicksort", 6)
        assert report.passed
        assert report.inputs == 720

    def test_not_a_sorter_raises(self):
        def reverse_only(t):
            for i in range(1, t.n // 2 + 1):
                t.swap(i, t.n + 1 - i)

        with pytest.raises(NotASorter):
            verify_sorting_bijection(reverse_only, 3)

    def test_non_strict_reports_failures(self):
        def do_nothing(t):
            pass

        report = verify_sorting_bijection(do_nothing, 3, strict=False)
        assert not report.passed
        assert not report.outputs_sorted
        assert report.failures

    def test_cap(self):
        with pytest.raises(ValueError):
            verify_sorting_bijection("bubble", 9)

    def test_trivial2_rejects_large_sizes(self):
        with pytest.raises(ValueError):
            verify_sorting_bijection("trivial2", 3)


class TestHeapify:
    def test_outputs_land_in_heap_state_space(self):
        space = set(enumerate_extensions(heap_order_4()))
        dist = heapify_distribution()
        assert set(dist) <= space
        assert set(dist) == space

    def test_total_multiplicity_preserved(self):
        dist = heapify_distribution()
        assert sum(dist.values()) == math.factorial(4)
        # observed per-state multiplicities, reported for the record
        print(f"heapify multiplicities over 4! inputs: {dict(sorted(dist.items()))}")

    def test_heapify_is_reversible(self):
        prog = PROGRAMS["heapify4"].program
        for perm in itertools.permutations(range(1, 5)):
            state = run_with_history(prog, perm)
            assert decode(state).perm == perm

    def test_heapify_not_registered_as_sorter(self):
        assert "heapify4" not in SORTERS
        assert not PROGRAMS["heapify4"].is_sorter
