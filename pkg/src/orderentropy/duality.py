"""Dual SP-orders, two ways.

The syntactic route interchanges the series and parallel operators of an
expression and regenerates the order.  The geometric route draws the Hasse
diagram in the lower half of the bisected first quadrant (0 < y < x),
reflects every point across the bisector y = x, and connects exactly the
previously-unrelated pairs, directed by the left-to-right order on elements.
The two routes agree up to isomorphism (exactly, on the canonical carrier),
and the comparability graph of the dual is the complement of the original's.

The complementation step is read as producing the dual's *order relation*
(closed transitively; the Hasse diagram is its reduction).  For discrete and
linear orders the raw edge set is already reduced, which is the special case
where the construction is usually drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PlacementError
from .poset import Poset
from .spexpr import (
    Parallel,
    Series,
    SPExpression,
    Var,
    build_order,
    to_text,
)

Coord = tuple[Fraction | int, Fraction | int]


def dual_expression(e: SPExpression) -> SPExpression:
    """Interchange every series and parallel operator; variables unchanged."""
    if isinstance(e, Var):
        return e
    if isinstance(e, Series):
        return Parallel(dual_expression(e.left), dual_expression(e.right))
    return Series(dual_expression(e.left), dual_expression(e.right))


def dual_order(e: SPExpression) -> Poset:
    """The order generated by the dual expression."""
    return build_order(dual_expression(e))[0]


@dataclass(frozen=True)
class PlacedHasse:
    """A Hasse diagram with explicit plane coordinates.

    ``coords[i-1]`` is the point of element i; ``covers`` is the cover-edge
    list of the order being drawn.  Valid placements keep every point
    strictly inside the lower half of the bisected first quadrant.
    """

    coords: tuple[Coord, ...]
    covers: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.coords)

    def validate(self) -> None:
        for i, (x, y) in enumerate(self.coords, start=1):
            if not (0 < y < x):
                raise PlacementError(
                    f"element {i} at ({x}, {y}) leaves the half-quadrant 0 < y < x"
                )
        if len(set(self.coords)) != len(self.coords):
            raise PlacementError("placement points must be distinct")

    def order(self) -> Poset:
        return Poset.from_pairs(self.n, self.covers)

    def reflected(self) -> tuple[Coord, ...]:
        """Mirror image across the bisector y = x."""
        return tuple((y, x) for x, y in self.coords)


def place(p: Poset, var_order: Sequence[int] | None = None) -> PlacedHasse:
    """Standard placement: x tracks the left-to-right order, y the chain level.

    Element at left-to-right position k sits at (n + k, level), where level
    is the longest-chain height from the bottom; this keeps every point
    strictly below the bisector and orders x-coordinates by ``var_order``.
    """
    n = p.n
    vo = tuple(var_order) if var_order is not None else tuple(range(1, n + 1))
    if sorted(vo) != list(range(1, n + 1)):
        raise ValueError("var_order must be a permutation of 1..n")
    lt = p.lt_matrix
    below_counts = lt.sum(axis=0)
    level = [1] * n
    for i in sorted(range(n), key=lambda i: int(below_counts[i])):
        preds = [j for j in range(n) if lt[j, i]]
        if preds:
            level[i] = 1 + max(level[j] for j in preds)
    pos = {e: k for k, e in enumerate(vo, start=1)}
    coords = tuple((n + pos[i], level[i - 1]) for i in range(1, n + 1))
    placed = PlacedHasse(coords, tuple(sorted(p.covers())))
    placed.validate()
    return placed


def reflect_complement(h: PlacedHasse, var_order: Sequence[int]) -> Poset:
    """Geometric dual: reflect the placement, then connect unrelated pairs.

    For every pair unrelated in the drawn order, a relation is added from
    the element occurring earlier in ``var_order`` to the later one; the
    result is closed transitively and returned as a poset.
    """
    h.validate()
    original = h.order()
    n = original.n
    vo = tuple(var_order)
    if sorted(vo) != list(range(1, n + 1)):
        raise ValueError("var_order must be a permutation of 1..n")
    pos = {e: k for k, e in enumerate(vo)}
    pairs = [
        (i, j) if pos[i] < pos[j] else (j, i)
        for i, j in original.incomparable_pairs()
    ]
    return Poset.from_pairs(n, pairs)


# -- DOT export ------------------------------------------------------------


def _coord_str(c: Coord) -> str:
    x, y = c
    return f"{float(x):g},{float(y):g}"


def dot_document(e: SPExpression, include_dual: bool = False) -> str:
    """Hasse diagram(s) as a DOT digraph with pinned positions.

    The primal order is drawn at its half-quadrant placement; with
    ``include_dual`` the dual order appears alongside at the reflected
    coordinates, so rendering with ``neato -n`` reproduces the mirror figure.
    """
    order, vo = build_order(e)
    placed = place(order, vo)
    lines = ["digraph hasse {", "  node [shape=circle];"]
    lines.append("  subgraph cluster_order {")
    lines.append(f'    label="{to_text(e)}";')
    for i in range(1, order.n + 1):
        c = _coord_str(placed.coords[i - 1])
        lines.append(f'    p{i} [label="x{i}", pos="{c}!"];')
    for i, j in sorted(order.covers()):
        lines.append(f"    p{i} -> p{j};")
    lines.append("  }")
    if include_dual:
        dual = dual_order(e)
        reflected = placed.reflected()
        lines.append("  subgraph cluster_dual {")
        lines.append(f'    label="{to_text(dual_expression(e))}";')
        for i in range(1, dual.n + 1):
            c = _coord_str(reflected[i - 1])
            lines.append(f'    d{i} [label="x{i}*", pos="{c}!"];')
        for i, j in sorted(dual.covers()):
            lines.append(f"    d{i} -> d{j};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
