"""Finite strict partial orders and their linear-extension machinery.

A :class:`Poset` stores its relation as a transitively closed boolean matrix,
so comparability queries are O(1) and the Hasse diagram (cover relation) is
recomputed on demand.  Elements are identified by 1-based index, matching the
position-1 convention for list data structures; labelings, topological sorts,
root states and state spaces are thin immutable values on top.

Everything here is pure and immutable after construction, hence safe to share
across threads.  The exhaustive operations (enumeration, counting, embedding
search) delegate to the kernels in :mod:`orderentropy._kernels` and refuse to
run above their size caps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import CycleError, SizeError

#: Largest n for which a state space may be materialized (10! = 3,628,800).
ENUMERATION_CAP = 10

#: Largest n for counting and backtracking searches (refinement, isomorphism).
SEARCH_CAP = 12


def is_strict_order(matrix: np.ndarray) -> bool:
    """Direct scan: irreflexive, antisymmetric and transitive."""
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        return False
    if matrix.diagonal().any():
        return False
    if (matrix & matrix.T).any():
        return False
    reach = (matrix.astype(np.uint8) @ matrix.astype(np.uint8)) > 0
    if (reach & ~matrix).any():
        return False
    return True


def _closed_matrix(n: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    rel = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"pair ({i}, {j}) out of range for n={n}")
        rel[i - 1, j - 1] = True
    # Warshall closure on the bool matrix.
    for k in range(n):
        rel |= rel[:, k : k + 1] & rel[k : k + 1, :]
    if rel.diagonal().any():
        bad = int(np.flatnonzero(rel.diagonal())[0]) + 1
        raise CycleError(f"relation has a cycle through element {bad}")
    rel.flags.writeable = False
    return rel


class Poset:
    """Strict partial order on elements 1..n, stored transitively closed."""

    __slots__ = ("n", "_lt")

    def __init__(self, n: int, lt: np.ndarray):
        """Internal: use :meth:`from_pairs` / :meth:`from_predicate` instead.

        ``lt`` must be a read-only, transitively closed strict-order matrix
        (0-based: ``lt[i-1, j-1]`` means element i below element j).
        """
        if n < 0:
            raise ValueError("n must be nonnegative")
        if lt.shape != (n, n) or lt.dtype != np.bool_:
            raise ValueError("lt must be an n x n boolean matrix")
        if lt.flags.writeable:
            raise ValueError("lt must be read-only")
        self.n = n
        self._lt = lt

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Close ``pairs`` (1-based i-below-j) transitively and validate.

        Raises :class:`CycleError` when the closure meets the diagonal, i.e.
        the input violates irreflexivity/antisymmetry.
        """
        return cls(n, _closed_matrix(n, pairs))

    @classmethod
    def from_predicate(cls, n: int, relation: Callable[[int, int], bool]) -> "Poset":
        """Build from a binary predicate on {1..n} (closed and validated)."""
        pairs = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and relation(i, j)
        ]
        return cls.from_pairs(n, pairs)

    @classmethod
    def discrete(cls, n: int) -> "Poset":
        """The antichain on n elements (no relations)."""
        return cls.from_pairs(n, [])

    @classmethod
    def chain(cls, n: int) -> "Poset":
        """The linear order 1 < 2 < ... < n."""
        return cls.from_pairs(n, [(i, i + 1) for i in range(1, n)])

    # -- queries -----------------------------------------------------------

    @property
    def lt_matrix(self) -> np.ndarray:
        """Read-only closed strict-order matrix (0-based)."""
        return self._lt

    def less(self, i: int, j: int) -> bool:
        return bool(self._lt[i - 1, j - 1])

    def comparable(self, i: int, j: int) -> bool:
        return i != j and (self.less(i, j) or self.less(j, i))

    def pairs(self) -> frozenset[tuple[int, int]]:
        """All strict pairs (i, j) with i below j."""
        ii, jj = np.nonzero(self._lt)
        return frozenset((int(i) + 1, int(j) + 1) for i, j in zip(ii, jj))

    def covers(self) -> frozenset[tuple[int, int]]:
        """Hasse diagram: the transitive reduction of the relation."""
        lt = self._lt
        via = (lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0
        ii, jj = np.nonzero(lt & ~via)
        return frozenset((int(i) + 1, int(j) + 1) for i, j in zip(ii, jj))

    def comparable_pairs(self) -> frozenset[tuple[int, int]]:
        """Unordered comparable pairs, reported as (min, max) index pairs."""
        return frozenset((min(i, j), max(i, j)) for i, j in self.pairs())

    def incomparable_pairs(self) -> frozenset[tuple[int, int]]:
        all_pairs = {
            (i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)
        }
        return frozenset(all_pairs - self.comparable_pairs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._lt, other._lt))

    def __hash__(self) -> int:
        return hash((self.n, self._lt.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={sorted(self.covers())})"


# -- labelings and topological sorts --------------------------------------


@dataclass(frozen=True)
class Labeling:
    """Injective assignment of integer labels: element i carries values[i-1]."""

    values: tuple[int, ...]

    def __init__(self, values: Sequence[int]):
        vals = tuple(int(v) for v in values)
        if len(set(vals)) != len(vals):
            raise ValueError("labels must be distinct")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def value(self, i: int) -> int:
        return self.values[i - 1]

    def ranks(self) -> tuple[int, ...]:
        """Replace each label by its rank within the used label set."""
        order = sorted(self.values)
        rank = {v: r + 1 for r, v in enumerate(order)}
        return tuple(rank[v] for v in self.values)


def is_topological_sort(p: Poset, labeling: Labeling | Sequence[int]) -> bool:
    """Is ``labeling`` an increasing injection from ``p`` into the integers?

    Accepts raw sequences, so duplicate labels simply yield False.
    """
    values = labeling.values if isinstance(labeling, Labeling) else tuple(labeling)
    if len(values) != p.n:
        raise ValueError(f"labeling has {len(values)} values for n={p.n}")
    if len(set(values)) != len(values):
        return False
    vals = np.asarray(values)
    return not bool((p.lt_matrix & (vals[:, None] >= vals[None, :])).any())


@dataclass(frozen=True)
class TopSort:
    """A poset together with a valid labeling of it."""

    order: Poset
    labeling: Labeling

    def __post_init__(self):
        if not is_topological_sort(self.order, self.labeling):
            raise ValueError("labeling does not respect the order")

    def root_state(self) -> "RootState":
        return RootState(self.order, self.labeling.ranks())


@dataclass(frozen=True)
class RootState:
    """Rank-canonical topological sort; identified with a permutation.

    ``perm[i-1]`` is the rank of element i's label, so the multiset of values
    is exactly {1..n}.
    """

    order: Poset
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))
        n = self.order.n
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        if not is_topological_sort(self.order, self.perm):
            raise ValueError("perm does not respect the order")

    def as_top_sort(self) -> TopSort:
        return TopSort(self.order, Labeling(self.perm))

    def root_state(self) -> "RootState":
        return self


def root_state(t: TopSort | RootState) -> RootState:
    """Canonical representative: replace each label by its rank."""
    return t.root_state()


# -- state spaces ----------------------------------------------------------


class StateSpace:
    """All root states of a poset, canonically sorted.

    Permutations are stored as plain tuples (``perms``); :meth:`states` wraps
    them into :class:`RootState` values on demand.
    """

    __slots__ = ("order", "perms")

    def __init__(self, order: Poset, perms: Iterable[Sequence[int]]):
        self.order = order
        self.perms: tuple[tuple[int, ...], ...] = tuple(
            sorted(tuple(int(v) for v in p) for p in perms)
        )

    def __len__(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.perms)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, RootState):
            return item.order == self.order and item.perm in self.perms
        if isinstance(item, tuple):
            return item in self.perms
        return False

    def states(self) -> tuple[RootState, ...]:
        return tuple(RootState(self.order, p) for p in self.perms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateSpace):
            return NotImplemented
        return self.order == other.order and self.perms == other.perms

    def __repr__(self) -> str:
        return f"StateSpace(n={self.order.n}, size={len(self.perms)})"


def _require_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeError(f"{what} capped at n={cap}, got n={n}")


def count_extensions(p: Poset, cap: int = SEARCH_CAP) -> int:
    """Number of linear extensions ``|R(p)|``, without materializing them."""
    _require_cap(p.n, cap, "extension counting")
    if p.n == 0:
        return 1
    pred = _kernels.predecessor_masks(p.lt_matrix)
    return int(_kernels.count_extensions_kernel(pred))


def enumerate_extensions(p: Poset, cap: int = ENUMERATION_CAP) -> StateSpace:
    """The state space of ``p``: every root state, by exhaustive backtracking."""
    _require_cap(p.n, cap, "extension enumeration")
    if p.n == 0:
        return StateSpace(p, [()])
    pred = _kernels.predecessor_masks(p.lt_matrix)
    total = int(_kernels.count_extensions_kernel(pred))
    rows = _kernels.enumerate_extensions_kernel(pred, total, p.n)
    return StateSpace(p, (tuple(int(v) for v in row) for row in rows))


def refines(a: Poset, b: Poset, same_carrier: bool = False, cap: int = SEARCH_CAP) -> bool:
    """Does ``b`` refine ``a`` (written a ≼ b)?

    True when some permutation embeds a's relation into b's; with
    ``same_carrier=True`` the permutation is forced to be the identity, i.e.
    a's relation must be a subset of b's.
    """
    if a.n != b.n:
        raise ValueError("refinement is defined for equal-size posets")
    _require_cap(a.n, cap, "refinement search")
    if same_carrier:
        return not bool((a.lt_matrix & ~b.lt_matrix).any())
    return bool(_kernels.find_embedding_kernel(a.lt_matrix, b.lt_matrix, False))


def are_isomorphic(a: Poset, b: Poset, cap: int = SEARCH_CAP) -> bool:
    """Does some permutation map a's relation bijectively onto b's?"""
    if a.n != b.n:
        return False
    _require_cap(a.n, cap, "isomorphism search")
    if len(a.pairs()) != len(b.pairs()):
        return False
    return bool(_kernels.find_embedding_kernel(a.lt_matrix, b.lt_matrix, True))


def naive_extensions(p: Poset) -> list[tuple[int, ...]]:
    """Independent oracle: filter all n! permutations for monotonicity.

    Deliberately shares no code with the DFS kernels; used to cross-check
    them in tests and small verification suites.
    """
    out = []
    for perm in itertools.permutations(range(1, p.n + 1)):
        if all(perm[i - 1] < perm[j - 1] for i, j in p.pairs()):
            out.append(perm)
    return out


# -- interchange format ----------------------------------------------------


def poset_from_text(text: str) -> Poset:
    """Parse the ``poset n=<N>`` / ``cover i j`` interchange format.

    Blank lines and ``#`` comments are ignored; the cover pairs are closed
    transitively and validated.
    """
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty poset document")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "poset" or not header[1].startswith("n="):
        raise ValueError(f"bad header line: {lines[0]!r}")
    try:
        n = int(header[1][2:])
    except ValueError:
        raise ValueError(f"bad element count in header: {lines[0]!r}") from None
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "cover":
            raise ValueError(f"bad cover line: {ln!r}")
        pairs.append((int(parts[1]), int(parts[2])))
    return Poset.from_pairs(n, pairs)


def poset_to_text(p: Poset) -> str:
    lines = [f"poset n={p.n}"]
    lines += [f"cover {i} {j}" for i, j in sorted(p.covers())]
    return "\n".join(lines) + "\n"
