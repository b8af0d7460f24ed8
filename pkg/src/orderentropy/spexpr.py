"""Series-parallel expressions and the orders they generate.

The AST has three node kinds: ``Var(i)``, ``Series(l, r)`` and
``Parallel(l, r)``.  Concrete syntax: variables ``x<digits>``, ``*`` for the
series operator, ``|`` for parallel, parentheses for grouping.  Both binary
operators are left-associative and ``*`` binds tighter than ``|``; the
printer always emits full parentheses, so ``parse(to_text(e)) == e``.

Orders are generated on the canonical carrier: variables are renumbered
1..n in left-to-right traversal order before composition, so element k of
the generated poset is the k-th leaf of the expression and the left-to-right
order on elements is simply the index order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Union

from . import _kernels
from .errors import DuplicateVariableError, SizeError
from .poset import Poset, SEARCH_CAP


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Series:
    left: "SPExpression"
    right: "SPExpression"


@dataclass(frozen=True)
class Parallel:
    left: "SPExpression"
    right: "SPExpression"


SPExpression = Union[Var, Series, Parallel]


def variables(e: SPExpression) -> tuple[int, ...]:
    """Variable indices in left-to-right (in-order) traversal."""
    if isinstance(e, Var):
        return (e.index,)
    return variables(e.left) + variables(e.right)


def size(e: SPExpression) -> int:
    if isinstance(e, Var):
        return 1
    return size(e.left) + size(e.right)


def check_variables(e: SPExpression) -> tuple[int, ...]:
    """Traversal sequence, after rejecting repeated variables."""
    seq = variables(e)
    if len(set(seq)) != len(seq):
        dup = next(v for v in seq if seq.count(v) > 1)
        raise DuplicateVariableError(f"variable x{dup} occurs more than once")
    return seq


def normalize(e: SPExpression) -> SPExpression:
    """Renumber variables to 1..n in traversal order (canonical carrier)."""
    seq = check_variables(e)
    remap = {v: k for k, v in enumerate(seq, start=1)}

    def rebuild(node: SPExpression) -> SPExpression:
        if isinstance(node, Var):
            return Var(remap[node.index])
        ctor = Series if isinstance(node, Series) else Parallel
        return ctor(rebuild(node.left), rebuild(node.right))

    return rebuild(e)


# -- concrete syntax -------------------------------------------------------


def _tokenize(text: str) -> list[object]:
    tokens: list[object] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "*|()":
            tokens.append(c)
            i += 1
        elif c == "x":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise SyntaxError(f"variable needs digits at position {i}: {text!r}")
            tokens.append(Var(int(text[i + 1 : j])))
            i = j
        else:
            raise SyntaxError(f"unexpected character {c!r} at position {i}")
    return tokens


def parse(text: str) -> SPExpression:
    """Parse the ``x1``/``*``/``|`` grammar; ``*`` binds tighter than ``|``."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> object | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> object:
        nonlocal pos
        if pos >= len(tokens):
            raise SyntaxError("unexpected end of expression")
        tok = tokens[pos]
        pos += 1
        return tok

    def factor() -> SPExpression:
        tok = take()
        if isinstance(tok, Var):
            return tok
        if tok == "(":
            node = expr()
            if take() != ")":
                raise SyntaxError("expected ')'")
            return node
        raise SyntaxError(f"unexpected token {tok!r}")

    def term() -> SPExpression:
        node = factor()
        while peek() == "*":
            take()
            node = Series(node, factor())
        return node

    def expr() -> SPExpression:
        node = term()
        while peek() == "|":
            take()
            node = Parallel(node, term())
        return node

    result = expr()
    if pos != len(tokens):
        raise SyntaxError(f"trailing tokens: {tokens[pos:]!r}")
    check_variables(result)
    return result


def to_text(e: SPExpression) -> str:
    """Fully parenthesized canonical form; round-trips through :func:`parse`."""
    if isinstance(e, Var):
        return f"x{e.index}"
    op = "*" if isinstance(e, Series) else "|"
    return f"({to_text(e.left)}{op}{to_text(e.right)})"


# -- order composition -----------------------------------------------------


def series(a: Poset, b: Poset) -> Poset:
    """Stack ``a`` below ``b``: disjoint union plus every a-element below
    every b-element.  b's elements are renumbered after a's."""
    shift = a.n
    pairs = list(a.pairs())
    pairs += [(i + shift, j + shift) for i, j in b.pairs()]
    pairs += [
        (i, j + shift) for i in range(1, a.n + 1) for j in range(1, b.n + 1)
    ]
    return Poset.from_pairs(a.n + b.n, pairs)


def parallel(a: Poset, b: Poset) -> Poset:
    """Place ``a`` and ``b`` side by side: disjoint union, no new relations."""
    shift = a.n
    pairs = list(a.pairs())
    pairs += [(i + shift, j + shift) for i, j in b.pairs()]
    return Poset.from_pairs(a.n + b.n, pairs)


def build_order(e: SPExpression) -> tuple[Poset, tuple[int, ...]]:
    """Generate the order of an expression, bottom-up on the canonical carrier.

    Returns the poset together with the left-to-right order of its elements,
    which is (1, ..., n) by construction after normalization.
    """
    norm = normalize(e)
    n = size(norm)
    pairs: list[tuple[int, int]] = []

    def walk(node: SPExpression) -> tuple[int, int]:
        # span of leaf indices (inclusive) covered by this subtree
        if isinstance(node, Var):
            return node.index, node.index
        l_lo, l_hi = walk(node.left)
        r_lo, r_hi = walk(node.right)
        if isinstance(node, Series):
            pairs.extend(
                (i, j)
                for i in range(l_lo, l_hi + 1)
                for j in range(r_lo, r_hi + 1)
            )
        return l_lo, r_hi

    walk(norm)
    return Poset.from_pairs(n, pairs), tuple(range(1, n + 1))


def count_sp(e: SPExpression) -> int:
    """State-space size by the exact recursive product/binomial formula.

    Series multiplies the component counts; parallel additionally picks
    which of the |a|+|b| ranks go to the left component.  Arbitrary
    precision, no enumeration.
    """
    check_variables(e)

    def rec(node: SPExpression) -> tuple[int, int]:
        if isinstance(node, Var):
            return 1, 1
        c1, n1 = rec(node.left)
        c2, n2 = rec(node.right)
        n = n1 + n2
        if isinstance(node, Series):
            return c1 * c2, n
        return math.comb(n, n1) * c1 * c2, n

    return rec(e)[0]


# -- N-free recognition ----------------------------------------------------


def is_n_free(p: Poset, cap: int = SEARCH_CAP) -> bool:
    """No quadruple x<y, u<v, x<v with u,y incomparable (an "N" shape).

    Series-parallel orders are exactly the N-free ones, so this recognizes
    SP-generability without searching for a decomposition.
    """
    if p.n > cap:
        raise SizeError(f"N-free scan capped at n={cap}, got n={p.n}")
    if p.n < 4:
        return True
    return not bool(_kernels.has_n_quadruple_kernel(p.lt_matrix))


def n_shaped_order() -> Poset:
    """The canonical forbidden suborder: 1<2, 3<4, 1<4 with 2,3 unrelated."""
    return Poset.from_pairs(4, [(1, 2), (3, 4), (1, 4)])


# -- expression corpora ----------------------------------------------------


def all_expressions(n: int) -> Iterator[SPExpression]:
    """Every normalized expression on n variables.

    All binary tree shapes (Catalan(n-1) of them) times all operator
    assignments, with leaves x1..xn left to right.
    """
    if n < 1:
        raise ValueError("expressions have at least one variable")

    def gen(lo: int, hi: int) -> list[SPExpression]:
        if lo == hi:
            return [Var(lo)]
        out: list[SPExpression] = []
        for split in range(lo, hi):
            for left in gen(lo, split):
                for right in gen(split + 1, hi):
                    out.append(Series(left, right))
                    out.append(Parallel(left, right))
        return out

    yield from gen(1, n)


def random_expression(n: int, rng: random.Random) -> SPExpression:
    """Uniform random tree shape via recursive splits, random operators."""
    if n < 1:
        raise ValueError("expressions have at least one variable")

    def gen(lo: int, hi: int) -> SPExpression:
        if lo == hi:
            return Var(lo)
        split = rng.randint(lo, hi - 1)
        ctor = Series if rng.random() < 0.5 else Parallel
        return ctor(gen(lo, split), gen(split + 1, hi))

    return gen(1, n)


def discrete_expression(n: int) -> SPExpression:
    """x1 | x2 | ... | xn (left-associated)."""
    e: SPExpression = Var(1)
    for i in range(2, n + 1):
        e = Parallel(e, Var(i))
    return e


def chain_expression(n: int) -> SPExpression:
    """x1 * x2 * ... * xn (left-associated)."""
    e: SPExpression = Var(1)
    for i in range(2, n + 1):
        e = Series(e, Var(i))
    return e
