import random

import pytest

from orderentropy import Poset, parse, random_expression

HEAP_EXPR = "((x1*x2)|x3)*x4"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def heap_expr():
    return parse(HEAP_EXPR)


def all_posets(n: int) -> list[Poset]:
    """Every labeled strict partial order on {1..n}, by filtering digraphs.

    Independent of the package's closure machinery: antisymmetry and
    transitivity are checked on raw pair sets.  Counts follow the known
    sequence 1, 1, 3, 19, 219 for n = 0..4.
    """
    ordered = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    found = []
    for bits in range(2 ** len(ordered)):
        rel = {ordered[k] for k in range(len(ordered)) if bits >> k & 1}
        if any((j, i) in rel for (i, j) in rel):
            continue
        if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j2 == j):
            continue
        found.append(Poset.from_pairs(n, rel))
    return found


def random_posets(n: int, count: int, seed: int = 7) -> list[Poset]:
    """Random DAG closures: orient random pairs upward then relabel."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pairs = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < 0.35
        ]
        relabel = list(range(1, n + 1))
        rng.shuffle(relabel)
        out.append(
            Poset.from_pairs(n, [(relabel[i - 1], relabel[j - 1]) for i, j in pairs])
        )
    return out


def expression_sample(n: int, count: int, seed: int = 11):
    rng = random.Random(seed)
    return [random_expression(n, rng) for _ in range(count)]
