"""Aggregated verification suites (also exposed as ``cli suite``).

Each check emits one stable ``PASS|FAIL <check-id> <n> <detail>`` line.
Expression corpora are exhaustive up to 5 variables (all tree shapes times
all operator assignments) and pseudo-randomly sampled with a fixed seed
beyond that, so runs are deterministic and diffable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .entropy import check_conservation
from .errors import SizeError
from .history import SORTERS, verify_sorting_bijection
from .poset import count_extensions
from .spexpr import (
    SPExpression,
    all_expressions,
    build_order,
    count_sp,
    random_expression,
    to_text,
)

SCOPES = ("sp-lemma", "conservation", "sorting", "all")

EXHAUSTIVE_LIMIT = 5
SUITE_CAP = 12
SORTING_CAP = 8
BRUTE_FORCE_LIMIT = 7
SAMPLE_SIZE = 200
SEED = 2024


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    n: int
    passed: bool
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.check_id} {self.n} {self.detail}"


def corpus(n: int, sample: int = SAMPLE_SIZE) -> tuple[list[SPExpression], str]:
    """Expressions on n variables: exhaustive when cheap, sampled when not."""
    if n <= EXHAUSTIVE_LIMIT:
        return list(all_expressions(n)), "exhaustive"
    rng = random.Random(SEED + n)
    return [random_expression(n, rng) for _ in range(sample)], "sampled"


def sp_lemma_suite(max_n: int) -> list[CheckResult]:
    """count_sp against the backtracking oracle on the generated orders."""
    if max_n > SUITE_CAP:
        raise SizeError(f"sp-lemma suite capped at n={SUITE_CAP}")
    results = []
    for n in range(1, max_n + 1):
        exprs, kind = corpus(n)
        bad = []
        for e in exprs:
            order, _ = build_order(e)
            if count_sp(e) != count_extensions(order):
                bad.append(to_text(e))
        detail = f"{kind}: {len(exprs) - len(bad)}/{len(exprs)} formula counts match oracle"
        if bad:
            detail += f"; first mismatch {bad[0]}"
        results.append(CheckResult("sp-lemma", n, not bad, detail))
    return results


def conservation_suite(max_n: int) -> list[CheckResult]:
    """Exact product identity, with brute-force cross-checks where feasible."""
    if max_n > SUITE_CAP:
        raise SizeError(f"conservation suite capped at n={SUITE_CAP}")
    results = []
    for n in range(1, max_n + 1):
        exprs, kind = corpus(n)
        bad = []
        brute_checked = 0
        for e in exprs:
            record = check_conservation(e)
            if not record.holds:
                bad.append(to_text(e))
                continue
            if n <= BRUTE_FORCE_LIMIT:
                order, _ = build_order(e)
                if record.primal_count != count_extensions(order):
                    bad.append(to_text(e))
                    continue
                brute_checked += 1
        detail = (
            f"{kind}: {len(exprs) - len(bad)}/{len(exprs)} satisfy "
            f"|R|*|R*| == {n}!"
        )
        if brute_checked:
            detail += f" ({brute_checked} cross-checked by brute force)"
        if bad:
            detail += f"; first failure {bad[0]}"
        results.append(CheckResult("conservation", n, not bad, detail))
    return results


def sorting_suite(max_n: int) -> list[CheckResult]:
    """Exhaustive sigma -> sigma^{-1} bijection for every built-in sorter."""
    if max_n > SORTING_CAP:
        raise SizeError(f"sorting suite capped at n={SORTING_CAP}")
    results = []
    for name, entry in SORTERS.items():
        for n in range(1, max_n + 1):
            if not entry.supports(n):
                continue
            report = verify_sorting_bijection(name, n, strict=False)
            detail = (
                f"{report.inputs} inputs: sorted={report.outputs_sorted} "
                f"inverse={report.origins_equal_inverse} "
                f"bijection={report.origins_cover_all_permutations} "
                f"decode={report.decode_roundtrip}"
            )
            results.append(CheckResult(f"sorting-{name}", n, report.passed, detail))
    return results


def run_suite(scope: str, max_n: int) -> list[CheckResult]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; pick one of {SCOPES}")
    results: list[CheckResult] = []
    if scope in ("sp-lemma", "all"):
        results += sp_lemma_suite(min(max_n, SUITE_CAP) if scope == "all" else max_n)
    if scope in ("conservation", "all"):
        results += conservation_suite(
            min(max_n, SUITE_CAP) if scope == "all" else max_n
        )
    if scope in ("sorting", "all"):
        results += sorting_suite(min(max_n, SORTING_CAP) if scope == "all" else max_n)
    return results


def format_report(results: Iterable[CheckResult], scope: str) -> str:
    results = list(results)
    failures = sum(not r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"SUMMARY scope={scope} checks={len(results)} failures={failures}")
    return "\n".join(lines)
