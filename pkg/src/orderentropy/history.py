"""Comparison-based computation with history.

A program sees the data only through a :class:`Tape`: ``compare(a, b)``
reports the ordering of the labels at two positions and ``swap(a, b)``
exchanges whole (origin, label) pairs.  Origin indices ride along untouched,
so every run can be decoded back to its input; the interface exposes no way
to read them, which enforces the comparison-based restriction by
construction.  Every compare/swap is appended to the run's trace.

Built-in programs: trivial-2-sort (sizes 1-2 only), bubble, insertion,
merge and quicksort, plus a heapify over the 4-element tree order, which is
comparison-based but not a sorter.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import MalformedHistory, NotASorter, ProgramError
from .poset import Poset, RootState, enumerate_extensions, is_topological_sort
from .spexpr import build_order, parse

Pair = tuple[int, int]
TraceEvent = tuple


class Tape:
    """Mutable run state: positions 1..n holding (origin, label) pairs."""

    def __init__(self, pairs: Sequence[Pair]):
        self._pairs: list[Pair] = list(pairs)
        self.trace: list[TraceEvent] = []

    @property
    def n(self) -> int:
        return len(self._pairs)

    def _check(self, pos: int) -> None:
        if not 1 <= pos <= self.n:
            raise ProgramError(f"position {pos} out of range 1..{self.n}")

    def compare(self, a: int, b: int) -> int:
        """-1 when the label at ``a`` is smaller, +1 when larger."""
        self._check(a)
        self._check(b)
        result = -1 if self._pairs[a - 1][1] < self._pairs[b - 1][1] else 1
        self.trace.append(("compare", a, b, result))
        return result

    def less(self, a: int, b: int) -> bool:
        return self.compare(a, b) < 0

    def swap(self, a: int, b: int) -> None:
        self._check(a)
        self._check(b)
        self._pairs[a - 1], self._pairs[b - 1] = self._pairs[b - 1], self._pairs[a - 1]
        self.trace.append(("swap", a, b))

    def snapshot(self) -> tuple[Pair, ...]:
        return tuple(self._pairs)


Program = Callable[[Tape], None]


@dataclass(frozen=True)
class HistoryState:
    """A topological sort labelled by (origin, label) pairs."""

    order: Poset
    pairs: tuple[Pair, ...]
    trace: tuple[TraceEvent, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.pairs) != self.order.n:
            raise ValueError("one pair per element required")
        labels = self.labels()
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        if not is_topological_sort(self.order, labels):
            raise ValueError("label projection must respect the order")

    def labels(self) -> tuple[int, ...]:
        return tuple(label for _, label in self.pairs)

    def origins(self) -> tuple[int, ...]:
        return tuple(origin for origin, _ in self.pairs)


def run_with_history(
    prog: Program, start: RootState | Sequence[int]
) -> HistoryState:
    """Execute a compare/swap program, carrying origin indices through swaps.

    ``start`` is a permutation root state of the discrete order (or a bare
    permutation).  The returned state's label projection is the program's
    ordinary output; its trace records every compare and swap.
    """
    if isinstance(start, RootState):
        if start.order.pairs():
            raise ValueError("history runs start from the discrete order")
        perm = start.perm
    else:
        perm = tuple(int(v) for v in start)
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("input must be a permutation of 1..n")
    tape = Tape([(i, perm[i - 1]) for i in range(1, n + 1)])
    prog(tape)
    return HistoryState(
        Poset.discrete(n), tape.snapshot(), trace=tuple(tape.trace)
    )


def decode(h: HistoryState | Sequence[Pair]) -> RootState:
    """Reconstruct the unique input: pair (i, a) puts label a back at i."""
    pairs = h.pairs if isinstance(h, HistoryState) else tuple(h)
    n = len(pairs)
    origins = [origin for origin, _ in pairs]
    if sorted(origins) != list(range(1, n + 1)):
        raise MalformedHistory("origin indices are not a permutation of 1..n")
    values = [0] * n
    for origin, label in pairs:
        values[origin - 1] = label
    return RootState(Poset.discrete(n), tuple(values))


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    """Inverse permutation: result[v-1] = position of value v."""
    inv = [0] * len(perm)
    for pos, v in enumerate(perm, start=1):
        inv[v - 1] = pos
    return tuple(inv)


# -- built-in programs -----------------------------------------------------


def trivial_two_sort(t: Tape) -> None:
    """Single compare-and-swap; defined for sizes 1 and 2 only."""
    if t.n > 2:
        raise ProgramError("trivial-2-sort handles sizes 1 and 2 only")
    if t.n == 2 and t.compare(1, 2) > 0:
        t.swap(1, 2)


def bubble_sort(t: Tape) -> None:
    for end in range(t.n, 1, -1):
        for i in range(1, end):
            if t.compare(i, i + 1) > 0:
                t.swap(i, i + 1)


def insertion_sort(t: Tape) -> None:
    for i in range(2, t.n + 1):
        j = i
        while j > 1 and t.compare(j - 1, j) > 0:
            t.swap(j - 1, j)
            j -= 1


def merge_sort(t: Tape) -> None:
    """Top-down merge on position lists, then one pass of cycle swaps.

    The merge phase performs the usual comparison pattern without moving
    anything; the final permutation is then applied with at most n-1 swaps.
    """

    def msort(pos: list[int]) -> list[int]:
        if len(pos) <= 1:
            return pos
        mid = len(pos) // 2
        left, right = msort(pos[:mid]), msort(pos[mid:])
        out: list[int] = []
        i = j = 0
        while i < len(left) and j < len(right):
            if t.compare(left[i], right[j]) < 0:
                out.append(left[i])
                i += 1
            else:
                out.append(right[j])
                j += 1
        out.extend(left[i:])
        out.extend(right[j:])
        return out

    by_rank = msort(list(range(1, t.n + 1)))
    dest = [0] * (t.n + 1)
    for rank, pos in enumerate(by_rank, start=1):
        dest[pos] = rank
    for i in range(1, t.n + 1):
        while dest[i] != i:
            j = dest[i]
            t.swap(i, j)
            dest[i], dest[j] = dest[j], dest[i]


def quicksort(t: Tape) -> None:
    """In-place Lomuto partitioning with the last element as pivot."""

    def qs(lo: int, hi: int) -> None:
        if lo >= hi:
            return
        store = lo
        for i in range(lo, hi):
            if t.compare(i, hi) < 0:
                if i != store:
                    t.swap(i, store)
                store += 1
        if store != hi:
            t.swap(store, hi)
        qs(lo, store - 1)
        qs(store + 1, hi)

    qs(1, t.n)


def heapify_program(children: dict[int, tuple[int, ...]]) -> Program:
    """Floyd-style heap construction over an explicit tree of positions.

    Sift-down visits internal nodes deepest-first; afterwards every parent's
    label exceeds its children's, i.e. the labels form a topological sort of
    the tree order.
    """
    parents = {c: p for p, kids in children.items() for c in kids}

    def depth(v: int) -> int:
        d = 0
        while v in parents:
            v = parents[v]
            d += 1
        return d

    internal = sorted(children, key=depth, reverse=True)

    def siftdown(t: Tape, v: int) -> None:
        while True:
            kids = children.get(v, ())
            if not kids:
                return
            largest = kids[0]
            for c in kids[1:]:
                if t.compare(largest, c) < 0:
                    largest = c
            if t.compare(v, largest) < 0:
                t.swap(v, largest)
                v = largest
            else:
                return

    def prog(t: Tape) -> None:
        needed = set(children) | set(parents)
        if needed and max(needed) > t.n:
            raise ProgramError("tape smaller than the heapify tree")
        for v in internal:
            siftdown(t, v)

    return prog


#: The 4-element tree order generated by ((x1*x2)|x3)*x4: covers 1<2, 2<4, 3<4.
HEAP_TREE_4: dict[int, tuple[int, ...]] = {4: (2, 3), 2: (1,)}


def heap_order_4() -> Poset:
    return build_order(parse("((x1*x2)|x3)*x4"))[0]


@dataclass(frozen=True)
class BuiltinProgram:
    name: str
    program: Program
    is_sorter: bool
    supports: Callable[[int], bool]


SORTERS: dict[str, BuiltinProgram] = {
    "trivial2": BuiltinProgram("trivial2", trivial_two_sort, True, lambda n: n <= 2),
    "bubble": BuiltinProgram("bubble", bubble_sort, True, lambda n: True),
    "insertion": BuiltinProgram("insertion", insertion_sort, True, lambda n: True),
    "merge": BuiltinProgram("merge", merge_sort, True, lambda n: True),
    "quicksort": BuiltinProgram("quicksort", quicksort, True, lambda n: True),
}

PROGRAMS: dict[str, BuiltinProgram] = {
    **SORTERS,
    "heapify4": BuiltinProgram(
        "heapify4", heapify_program(HEAP_TREE_4), False, lambda n: n == 4
    ),
}


# -- exhaustive verification ------------------------------------------------


@dataclass(frozen=True)
class BijectionReport:
    """Exhaustive check of the sigma -> sigma^{-1} picture for one sorter."""

    sorter: str
    n: int
    inputs: int
    outputs_sorted: bool
    origins_equal_inverse: bool
    origins_cover_all_permutations: bool
    decode_roundtrip: bool
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return (
            self.outputs_sorted
            and self.origins_equal_inverse
            and self.origins_cover_all_permutations
            and self.decode_roundtrip
            and not self.failures
        )


def verify_sorting_bijection(
    sorter: str | Program, n: int, cap: int = 8, strict: bool = True
) -> BijectionReport:
    """Run a sorter on every permutation of size n and check the bijection.

    For each input sigma: the output labels must be 1..n in order, the
    origin sequence must equal sigma^{-1}, and decoding must recover sigma;
    across inputs the origin sequences must enumerate all n! permutations.
    With ``strict`` an unsorted output raises :class:`NotASorter` at once.
    """
    if n > cap:
        raise ValueError(f"exhaustive verification capped at n={cap}")
    if isinstance(sorter, str):
        entry = SORTERS[sorter]
        name, prog = entry.name, entry.program
        if not entry.supports(n):
            raise ValueError(f"sorter {name} does not support n={n}")
    else:
        name, prog = getattr(sorter, "__name__", "custom"), sorter
    sorted_labels = tuple(range(1, n + 1))
    failures: list[str] = []
    all_sorted = all_inverse = all_decoded = True
    seen_origins: set[tuple[int, ...]] = set()
    count = 0
    for perm in itertools.permutations(range(1, n + 1)):
        count += 1
        state = run_with_history(prog, perm)
        if state.labels() != sorted_labels:
            all_sorted = False
            failures.append(f"{perm}: output labels {state.labels()} not sorted")
            if strict:
                raise NotASorter(f"{name} left {perm} unsorted: {state.labels()}")
            continue
        origins = state.origins()
        if origins != invert(perm):
            all_inverse = False
            failures.append(f"{perm}: origins {origins} != inverse {invert(perm)}")
        seen_origins.add(origins)
        if decode(state).perm != perm:
            all_decoded = False
            failures.append(f"{perm}: decode mismatch")
    covers_all = len(seen_origins) == math.factorial(n)
    return BijectionReport(
        sorter=name,
        n=n,
        inputs=count,
        outputs_sorted=all_sorted,
        origins_equal_inverse=all_inverse,
        origins_cover_all_permutations=covers_all,
        decode_roundtrip=all_decoded,
        failures=tuple(failures),
    )


def heapify_distribution(n: int = 4) -> dict[tuple[int, ...], int]:
    """Output multiplicities of heapify over all n! inputs of the tree order.

    Reported, not asserted: the per-state distribution is tied to open
    average-case questions, but every output must land in the tree's state
    space (checked by the caller against :func:`heap_order_4`).
    """
    if n != 4:
        raise ValueError("only the 4-element tree order is built in")
    prog = PROGRAMS["heapify4"].program
    counts: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        state = run_with_history(prog, perm)
        labels = state.labels()
        counts[labels] = counts.get(labels, 0) + 1
    return counts


def heap_state_space():
    return enumerate_extensions(heap_order_4())
