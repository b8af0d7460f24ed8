"""Entropy of state spaces and the exact conservation identity.

Quantitative entropy measures freedom left in label placement, positional
entropy the freedom in element positions; for an SP order and its dual the
two always sum to the maximum log2(n!).  All theorem checks run on exact
integer counts (the product identity |R| * |R*| = n!); the floating log2
values exist for display and for the tolerance-based checks only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .duality import dual_expression
from .errors import ConservationViolation
from .poset import Poset, count_extensions
from .spexpr import (
    Series,
    SPExpression,
    Var,
    check_variables,
    chain_expression,
    count_sp,
    discrete_expression,
    size,
    to_text,
)


@dataclass(frozen=True)
class DoubleStateSpace:
    """An expression's state-space count paired with its dual's.

    The spaces themselves stay unmaterialized; only the exact counts are
    kept, whose product is always n!.
    """

    expr: SPExpression
    primal_count: int
    dual_count: int

    @property
    def n(self) -> int:
        return size(self.expr)

    @property
    def conserved_exact(self) -> bool:
        return self.primal_count * self.dual_count == math.factorial(self.n)


def double_state_space(e: SPExpression) -> DoubleStateSpace:
    return DoubleStateSpace(
        expr=e,
        primal_count=count_sp(e),
        dual_count=count_sp(dual_expression(e)),
    )


@dataclass(frozen=True)
class EntropyPair:
    """Exact primal/dual counts with their log2 views."""

    primal_count: int
    dual_count: int
    n: int

    @property
    def h_q(self) -> float:
        return math.log2(self.primal_count)

    @property
    def h_p(self) -> float:
        return math.log2(self.dual_count)

    @property
    def h_max(self) -> float:
        return math.log2(math.factorial(self.n))

    @property
    def conserved_exact(self) -> bool:
        return self.primal_count * self.dual_count == math.factorial(self.n)


def entropy_pair(e: SPExpression) -> EntropyPair:
    """Exact counts for an expression and its dual, plus entropy views."""
    double = double_state_space(e)
    return EntropyPair(
        primal_count=double.primal_count,
        dual_count=double.dual_count,
        n=double.n,
    )


@dataclass(frozen=True)
class ProofStep:
    """One node of the conservation recursion (base/series/parallel case)."""

    case: str
    expr: str
    n: int
    left_size: int | None
    right_size: int | None
    binomial: int
    primal_count: int
    dual_count: int

    @property
    def product(self) -> int:
        return self.primal_count * self.dual_count


@dataclass(frozen=True)
class ConservationRecord:
    expr: str
    n: int
    primal_count: int
    dual_count: int
    steps: tuple[ProofStep, ...]

    @property
    def product(self) -> int:
        return self.primal_count * self.dual_count

    @property
    def factorial(self) -> int:
        return math.factorial(self.n)

    @property
    def holds(self) -> bool:
        return self.product == self.factorial


def check_conservation(e: SPExpression) -> ConservationRecord:
    """Verify |R(e)| * |R(e*)| = n! exactly, recording the recursion.

    The trace mirrors the inductive argument: variables contribute 1 x 1,
    a series node multiplies primal counts while its dual (a parallel node)
    carries the binomial factor, and symmetrically for parallel nodes.
    :class:`ConservationViolation` firing would mean a counting bug, never a
    property of the input.
    """
    check_variables(e)
    steps: list[ProofStep] = []

    def walk(node: SPExpression) -> tuple[int, int]:
        if isinstance(node, Var):
            steps.append(ProofStep("base", to_text(node), 1, None, None, 1, 1, 1))
            return 1, 1
        p1, d1 = walk(node.left)
        p2, d2 = walk(node.right)
        l1, l2 = size(node.left), size(node.right)
        n = l1 + l2
        binom = math.comb(n, l1)
        if isinstance(node, Series):
            primal, dual = p1 * p2, binom * d1 * d2
            case = "series"
        else:
            primal, dual = binom * p1 * p2, d1 * d2
            case = "parallel"
        if primal * dual != math.factorial(n):
            raise ConservationViolation(
                f"{to_text(node)}: {primal} * {dual} != {n}!"
            )
        steps.append(
            ProofStep(case, to_text(node), n, l1, l2, binom, primal, dual)
        )
        return primal, dual

    primal, dual = walk(e)
    record = ConservationRecord(to_text(e), size(e), primal, dual, tuple(steps))
    if not record.holds:
        raise ConservationViolation(
            f"{record.expr}: {primal} * {dual} != {record.n}!"
        )
    return record


# -- global states ---------------------------------------------------------


@dataclass(frozen=True)
class StateSpaceRef:
    """Names a state space by its poset or generating expression.

    Only the count is ever needed, so the root states themselves are never
    materialized and multiplicities like n! stay exact at any size.
    """

    source: Union[SPExpression, Poset]

    def count(self) -> int:
        if isinstance(self.source, Poset):
            return count_extensions(self.source)
        return count_sp(self.source)

    def describe(self) -> str:
        if isinstance(self.source, Poset):
            return f"poset(n={self.source.n})"
        return to_text(self.source)


@dataclass(frozen=True)
class GlobalState:
    """Finite multiset of state spaces with multiplicities."""

    entries: tuple[tuple[StateSpaceRef, int], ...]

    def __post_init__(self):
        for _, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")

    def total_weight(self) -> int:
        return sum(mult * ref.count() for ref, mult in self.entries)

    def describe(self) -> str:
        inner = ", ".join(
            f"(R({ref.describe()}), {mult})" for ref, mult in self.entries
        )
        return "{" + inner + "}"


@dataclass(frozen=True)
class SortingTransform:
    """Input/output global states (and their doubles) for sorting size n."""

    n: int
    input_state: GlobalState
    output_state: GlobalState
    input_double: tuple[GlobalState, GlobalState]
    output_double: tuple[GlobalState, GlobalState]


def sorting_global_transform(n: int) -> SortingTransform:
    """The sorting transform {(R(disc), 1)} -> {(R(chain), n!)}.

    Also builds the double global states, which swap the label and index
    components; total weights agree (n! root states) on both sides.
    """
    if n < 1:
        raise ValueError("sorting transform needs n >= 1")
    disc = StateSpaceRef(discrete_expression(n))
    chain = StateSpaceRef(chain_expression(n))
    weight = math.factorial(n)
    labels_in = GlobalState(((disc, 1),))
    labels_out = GlobalState(((chain, weight),))
    indices_in = GlobalState(((chain, weight),))
    indices_out = GlobalState(((disc, 1),))
    if labels_in.total_weight() != labels_out.total_weight():
        raise ConservationViolation("sorting transform weight mismatch")
    return SortingTransform(
        n=n,
        input_state=labels_in,
        output_state=labels_out,
        input_double=(labels_in, indices_in),
        output_double=(labels_out, indices_out),
    )
