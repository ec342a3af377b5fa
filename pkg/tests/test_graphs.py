"""Graph-attached nilpotent algebras and the free-nilpotent machinery."""

import pytest
import sympy

from nicebasis import (
    DimensionCapExceeded,
    GraphSpec,
    PredicateFalse,
    carnot_check,
    check_nice,
    construct_nice_basis,
    fixtures,
    free_nice_predicate,
    free_nilpotent,
    graph_algebra,
    lyndon_words,
    nice_predicate,
    parse_graph,
    serialize_graph,
    standard_factorization,
    witt_dimension,
)


def is_lyndon(w):
    return all(w < w[i:] for i in range(1, len(w)))


class TestLyndon:
    def test_small_alphabet(self):
        words = lyndon_words(2, 3)
        assert words == [(0,), (1,), (0, 1), (0, 0, 1), (0, 1, 1)]

    @pytest.mark.parametrize("d,c", [(2, 6), (3, 4), (4, 3)])
    def test_all_lyndon_and_complete(self, d, c):
        words = lyndon_words(d, c)
        assert len(set(words)) == len(words)
        assert all(is_lyndon(w) for w in words)
        # brute force: every Lyndon word of length <= c shows up
        import itertools

        brute = sum(
            1
            for l in range(1, c + 1)
            for w in itertools.product(range(d), repeat=l)
            if is_lyndon(w)
        )
        assert len(words) == brute

    @pytest.mark.parametrize("d,l", [(2, k) for k in range(1, 9)] + [(3, 5), (5, 4)])
    def test_witt_counts_lyndon_words(self, d, l):
        by_len = sum(1 for w in lyndon_words(d, l) if len(w) == l)
        assert witt_dimension(d, l) == by_len

    @pytest.mark.parametrize("d,l", [(2, 12), (3, 7), (7, 3)])
    def test_witt_mobius_formula(self, d, l):
        expect = sum(
            sympy.mobius(l // e) * d**e for e in sympy.divisors(l)
        ) // l
        assert witt_dimension(d, l) == expect

    def test_standard_factorization(self):
        u, v = standard_factorization((0, 1, 1))
        assert (u, v) == ((0, 1), (1,))
        for w in lyndon_words(3, 5):
            if len(w) < 2:
                continue
            u, v = standard_factorization(w)
            assert u + v == w
            assert is_lyndon(u) and is_lyndon(v)
            # v is the lexicographically least proper suffix
            assert v == min(w[i:] for i in range(1, len(w)))


class TestFreeNilpotent:
    @pytest.mark.parametrize(
        "d,c,dim",
        [(1, 5, 1), (2, 2, 3), (2, 3, 5), (2, 4, 8), (3, 2, 6), (5, 4, 205)],
    )
    def test_dimensions(self, d, c, dim):
        alg, basis = free_nilpotent(d, c)
        assert alg.dim == dim
        assert len(basis.words) == dim
        assert alg.dim == sum(witt_dimension(d, l) for l in range(1, c + 1))

    def test_heisenberg_is_free(self):
        alg, basis = free_nilpotent(2, 2)
        assert alg.bracket_basis(0, 1) == {2: 1}
        assert alg.lower_central_series()[-1].dim == 0

    def test_nilpotency_class(self):
        alg, _ = free_nilpotent(2, 4)
        series = alg.lower_central_series()
        assert len(series) == 5  # g down to g^5 = 0
        assert series[-1].dim == 0

    def test_dimension_cap(self):
        with pytest.raises(DimensionCapExceeded):
            free_nilpotent(5, 5)

    @pytest.mark.parametrize(
        "d,c,ok",
        [(1, 9, True), (2, 2, True), (2, 4, True), (2, 5, False),
         (3, 2, True), (3, 3, False), (4, 5, False)],
    )
    def test_free_nice_predicate(self, d, c, ok):
        assert free_nice_predicate(d, c) is ok


def spec(n, edges, c):
    return GraphSpec.of(n, edges, c)


class TestGraphAlgebra:
    @pytest.mark.parametrize(
        "g,dim",
        [
            (spec(3, [(0, 1), (1, 2)], 3), 10),
            (spec(3, [(0, 1), (1, 2)], 4), 20),
            (spec(3, [(0, 1), (1, 2), (0, 2)], 3), 14),
            (spec(2, [(0, 1)], 4), 8),  # one edge: the whole free algebra
            (spec(4, [], 6), 4),  # edgeless: abelian
        ],
    )
    def test_dimensions(self, g, dim):
        alg, words, _ = graph_algebra(g)
        assert alg.dim == dim
        assert len(words) == dim

    def test_edge_brackets_survive(self):
        g = spec(3, [(0, 1)], 2)
        alg, words, _ = graph_algebra(g)
        assert alg.bracket_basis(0, 1) != {}
        assert alg.bracket_basis(0, 2) == {}
        assert alg.bracket_basis(1, 2) == {}

    def test_projection_kills_ideal(self):
        g = spec(3, [(0, 1)], 2)
        alg, words, project = graph_algebra(g)
        free, _ = free_nilpotent(3, 2)
        vec = [0] * free.dim
        for k, c in free.bracket_basis(0, 2).items():
            vec[k] = c
        assert all(x == 0 for x in project(vec))


class TestNicePredicate:
    cases = [
        (spec(3, [(0, 1), (1, 2), (0, 2)], 2), True, "class-at-most-2"),
        (spec(3, [(0, 1), (1, 2), (0, 2)], 3), False, "contains-3-cycle"),
        (spec(4, [(0, 1), (1, 2)], 3), True, "triangle-free"),
        (spec(4, [(0, 1), (2, 3)], 4), True, "matching"),
        (spec(3, [(0, 1), (1, 2)], 4), False, "contains-path-on-3-vertices"),
        (spec(2, [(0, 1)], 5), False, "has-edge-in-class-5-or-more"),
        (spec(3, [], 9), True, "edgeless"),
    ]

    @pytest.mark.parametrize("g,ok,tag", cases)
    def test_tags(self, g, ok, tag):
        assert nice_predicate(g) == (ok, tag)

    @pytest.mark.parametrize("g,ok,tag", cases)
    def test_construction_agrees(self, g, ok, tag):
        if ok:
            p = construct_nice_basis(g)
            alg, _, _ = graph_algebra(g)
            assert p.rows == p.cols == alg.dim
            assert check_nice(alg.change_basis(p))
        else:
            with pytest.raises(PredicateFalse):
                construct_nice_basis(g)

    def test_unsorted_inner_bracket_case(self):
        # path 0-2-1: the degree-3 chunk needs [v0,[v2,v1]], not [v0,[v1,v2]]
        g = spec(3, [(0, 2), (1, 2)], 3)
        p = construct_nice_basis(g)
        alg, _, _ = graph_algebra(g)
        assert p.rows == alg.dim == 10
        assert check_nice(alg.change_basis(p))


class TestCarnot:
    def test_filiform_layers(self):
        ok, info = carnot_check(fixtures.standard_filiform(5))
        assert ok
        assert info["layer_dims"] == [2, 1, 1, 1]

    def test_n6_layers(self):
        ok, info = carnot_check(fixtures.n6())
        assert ok
        assert info["layer_dims"] == [3, 1, 1, 1]
        assert info["car"].dim == 6

    def test_not_nilpotent(self):
        ok, info = carnot_check(fixtures.sl2())
        assert not ok
        assert info["error"] == "not nilpotent"


class TestGraphIO:
    def test_round_trip(self):
        g = spec(4, [(0, 2), (1, 3)], 4)
        assert parse_graph(serialize_graph(g)) == g

    def test_one_based_format(self):
        g = parse_graph("vertices 3\nclass 3\nedge 1 2\nedge 2 3\n")
        assert g == spec(3, [(0, 1), (1, 2)], 3)

    def test_bad_vertex_rejected(self):
        with pytest.raises(ValueError):
            parse_graph("vertices 2\nclass 2\nedge 1 3\n")
