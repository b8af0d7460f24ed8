import math
import random

import pytest
from hypothesis import given, strategies as st

from orderentropy import (
    DuplicateVariableError,
    Parallel,
    Poset,
    Series,
    SizeError,
    Var,
    all_expressions,
    are_isomorphic,
    build_order,
    count_extensions,
    count_sp,
    is_n_free,
    n_shaped_order,
    naive_extensions,
    normalize,
    parallel,
    parse,
    random_expression,
    series,
    to_text,
    variables,
)

from conftest import all_posets, expression_sample


@st.composite
def expressions(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_expression(n, random.Random(seed))


class TestParse:
    def test_heap_expression_shape(self):
        e = parse("((x1*x2)|x3)*x4")
        assert e == Series(Parallel(Series(Var(1), Var(2)), Var(3)), Var(4))

    def test_atom(self):
        assert parse("x1") == Var(1)

    def test_duplicate_variable(self):
        with pytest.raises(DuplicateVariableError):
            parse("(x1*x2)|x2")

    def test_series_binds_tighter_than_parallel(self):
        assert parse("x1*x2|x3*x4") == Parallel(
            Series(Var(1), Var(2)), Series(Var(3), Var(4))
        )

    def test_left_associativity(self):
        assert parse("x1|x2|x3") == Parallel(Parallel(Var(1), Var(2)), Var(3))
        assert parse("x1*x2*x3") == Series(Series(Var(1), Var(2)), Var(3))

    def test_whitespace_allowed(self):
        assert parse(" ( x1 * x2 ) | x3 ") == Parallel(Series(Var(1), Var(2)), Var(3))

    @pytest.mark.parametrize(
        "bad",
        ["", "x", "x1*", "*x1", "(x1", "x1)", "x1 x2", "x1&x2", "()", "x1**x2"],
    )
    def test_syntax_errors(self, bad):
        with pytest.raises(SyntaxError):
            parse(bad)

    @given(expressions())
    def test_round_trip(self, e):
        assert parse(to_text(e)) == e

    def test_printer_fully_parenthesizes(self):
        assert to_text(parse("x1*x2|x3")) == "((x1*x2)|x3)"


class TestNormalize:
    def test_traversal_renumbering(self):
        assert normalize(parse("(x1*x3)|x2")) == parse("(x1*x2)|x3")
        assert normalize(parse("x2|x1")) == parse("x1|x2")

    def test_already_normal_is_fixed_point(self):
        for e in all_expressions(4):
            assert normalize(e) == e

    def test_sparse_indices(self):
        assert normalize(Series(Var(9), Var(2))) == Series(Var(1), Var(2))

    @given(expressions())
    def test_variables_read_in_order_after_normalize(self, e):
        assert variables(normalize(e)) == tuple(range(1, len(variables(e)) + 1))


class TestCompositionOperators:
    def test_series_of_singletons_is_chain(self):
        assert series(Poset.discrete(1), Poset.discrete(1)) == Poset.chain(2)

    def test_parallel_of_singletons_is_discrete(self):
        assert parallel(Poset.discrete(1), Poset.discrete(1)) == Poset.discrete(2)

    def test_series_of_vee_and_wedge(self):
        vee = Poset.from_pairs(3, [(1, 2), (1, 3)])
        wedge = Poset.from_pairs(3, [(1, 3), (2, 3)])
        combined = series(vee, wedge)
        assert combined.covers() == {
            (1, 2),
            (1, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        }

    def test_series_not_commutative_at_relation_level(self):
        a, b = Poset.discrete(1), Poset.discrete(2)
        assert series(a, b).pairs() != series(b, a).pairs()
        assert not are_isomorphic(series(a, b), series(b, a))

    def test_parallel_yields_disjoint_union(self):
        p = parallel(Poset.chain(2), Poset.chain(3))
        assert p.pairs() == {(1, 2), (3, 4), (4, 5), (3, 5)}


class TestBuildOrder:
    def test_heap_order(self):
        order, vo = build_order(parse("((x1*x2)|x3)*x4"))
        assert order.covers() == {(1, 2), (2, 4), (3, 4)}
        assert vo == (1, 2, 3, 4)

    def test_all_parallel_is_discrete(self):
        for n in (1, 3, 6):
            e = parse("|".join(f"x{i}" for i in range(1, n + 1)))
            assert build_order(e)[0] == Poset.discrete(n)

    def test_all_series_is_chain(self):
        for n in (1, 3, 6):
            e = parse("*".join(f"x{i}" for i in range(1, n + 1)))
            assert build_order(e)[0] == Poset.chain(n)

    def test_dual_shape(self):
        order, _ = build_order(parse("((x1|x2)*x3)|x4"))
        assert order.covers() == {(1, 3), (2, 3)}

    def test_build_normalizes_first(self):
        direct, _ = build_order(parse("(x1*x2)|x3"))
        jumbled, _ = build_order(parse("(x1*x3)|x2"))
        assert direct == jumbled

    def test_swapped_parallel_operands_give_isomorphic_orders(self):
        a, _ = build_order(parse("x1|x2"))
        b, _ = build_order(parse("x2|x1"))
        assert a == b == Poset.discrete(2)
        assert are_isomorphic(a, b)

    def test_matches_composition_operators(self):
        built, _ = build_order(parse("(x1*x2)|(x3*x4)"))
        composed = parallel(Poset.chain(2), Poset.chain(2))
        assert built == composed

    def test_associativity_up_to_isomorphism(self):
        x, y, z = Var(1), Var(2), Var(3)
        for ctor in (Series, Parallel):
            left = build_order(ctor(ctor(x, y), z))[0]
            right = build_order(ctor(x, ctor(y, z)))[0]
            assert are_isomorphic(left, right)
            assert left == right  # associativity is exact on the carrier


class TestCountSP:
    def test_heap_example(self):
        assert count_sp(parse("((x1*x2)|x3)*x4")) == 3

    def test_large_discrete_exercises_big_integers(self):
        e = parse("|".join(f"x{i}" for i in range(1, 21)))
        assert count_sp(e) == math.factorial(20) == 2432902008176640000

    def test_dual_heap_counts_eight(self):
        e = parse("((x1|x2)*x3)|x4")
        assert count_sp(e) == 8
        assert count_extensions(build_order(e)[0]) == 8
        assert len(naive_extensions(build_order(e)[0])) == 8

    def test_formula_matches_oracle_exhaustively(self):
        for n in range(1, 6):
            for e in all_expressions(n):
                order, _ = build_order(e)
                assert count_sp(e) == count_extensions(order)
                if n <= 5:
                    assert count_sp(e) == len(naive_extensions(order))

    def test_formula_matches_oracle_sampled(self):
        for n in (6, 7):
            for e in expression_sample(n, 30, seed=n):
                assert count_sp(e) == count_extensions(build_order(e)[0])

    def test_parallel_count_symmetric(self):
        for e in expression_sample(6, 20):
            if isinstance(e, Parallel):
                swapped = Parallel(e.right, e.left)
                assert count_sp(e) == count_sp(swapped)

    def test_duplicate_variables_rejected(self):
        with pytest.raises(DuplicateVariableError):
            count_sp(Series(Var(1), Var(1)))


class TestNFree:
    def test_generated_orders_are_n_free(self):
        for n in range(1, 6):
            for e in all_expressions(n):
                assert is_n_free(build_order(e)[0])
        for e in expression_sample(7, 40):
            assert is_n_free(build_order(e)[0])

    def test_explicit_n_order(self):
        assert not is_n_free(n_shaped_order())

    def test_discrete_is_n_free(self):
        assert is_n_free(Poset.discrete(6))

    def test_small_sizes_trivially_n_free(self):
        for n in range(4):
            for p in all_posets(n):
                assert is_n_free(p)

    def test_cap(self):
        with pytest.raises(SizeError):
            is_n_free(Poset.discrete(13))

    def test_n_free_iff_sp_generable_exhaustive(self):
        # on <= 4 elements: the N-free posets are exactly those isomorphic
        # to some generated order
        for n in range(1, 5):
            generated = []
            for e in all_expressions(n):
                order, _ = build_order(e)
                if not any(are_isomorphic(order, g) for g in generated):
                    generated.append(order)
            for p in all_posets(n):
                generable = any(are_isomorphic(p, g) for g in generated)
                assert is_n_free(p) == generable


class TestGenerators:
    def test_exhaustive_counts_follow_catalan(self):
        # Catalan(n-1) shapes times 2^(n-1) operator assignments
        expected = {1: 1, 2: 2, 3: 8, 4: 40, 5: 224}
        for n, count in expected.items():
            exprs = list(all_expressions(n))
            assert len(exprs) == count
            assert len(set(exprs)) == count

    def test_all_expressions_are_normalized(self):
        for e in all_expressions(4):
            assert variables(e) == (1, 2, 3, 4)

    @given(st.integers(1, 8), st.integers(0, 10**6))
    def test_random_expression_is_normalized(self, n, seed):
        e = random_expression(n, random.Random(seed))
        assert variables(e) == tuple(range(1, n + 1))
