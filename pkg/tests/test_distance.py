import itertools
import random
from math import factorial

import pytest

from planesort.distance import (
    apply_moves,
    augment,
    bid_census_formula,
    bid_exact,
    expand_interchange,
    find_gain_interchange,
    max_cycle_gap,
    plane_of,
    sort_by_block_interchanges,
    td_bounds,
)
from planesort.oracle import census, cycle_graph_counts, distance_of, exhaustive_max_gap
from planesort.perm import GroundSet, Permutation, PermutationError, cycle_stats
from planesort.plane import Interchange, all_interchanges, classify_gain


def ident(n):
    return tuple(range(1, n + 1))


class TestBounds:
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_sorted(self, n):
        b = td_bounds(ident(n))
        assert (b.lower_cycles, b.lower_odd, b.lower_even, b.upper) == (0, 0, 0, 0)

    def test_321(self):
        b = td_bounds("3 2 1")
        assert (b.lower_cycles, b.lower_odd, b.upper) == (1, 2, 2)
        assert b.lower_best == 2 == distance_of((3, 2, 1), "transposition")

    def test_321_identity_gamma(self):
        b = td_bounds("3 2 1", Permutation.identity(GroundSet.starred(3)))
        assert b.lower_cycles == 1 and b.parity_ok

    def test_wrong_ground(self):
        with pytest.raises(PermutationError):
            td_bounds("3 2 1", Permutation.identity(GroundSet.range(4)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_every_gamma_is_a_lower_bound(self, n):
        g = GroundSet.starred(n)
        gammas = [Permutation(g, img) for img in itertools.permutations(range(n + 1))]
        for a in itertools.permutations(range(1, n + 1)):
            td = distance_of(a, "transposition")
            best = 0
            for gamma in gammas:
                b = td_bounds(a, gamma)
                assert b.parity_ok
                best = max(best, b.lower_best)
            assert best <= td <= td_bounds(a).upper


class TestBid:
    @pytest.mark.parametrize("a,want", [((1, 2, 3), 0), ((3, 2, 1), 1), ((2, 4, 1, 3), 2)])
    def test_examples(self, a, want):
        assert bid_exact(a) == want == distance_of(a, "block")

    def test_2413_single_cycle(self):
        assert augment("2 4 1 3").product.cycle_count() == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_bfs(self, n):
        for a in itertools.permutations(range(1, n + 1)):
            assert bid_exact(a) == distance_of(a, "block")


class TestFinder:
    def test_walkthrough(self):
        p = plane_of("3 2 1")
        h = find_gain_interchange(p)
        assert h == Interchange(1, 1, 3, 3)
        assert classify_gain(p, h).delta_C == 2

    def test_sorted_rejected(self):
        with pytest.raises(PermutationError):
            find_gain_interchange(plane_of("1 2 3 4"))

    @pytest.mark.parametrize("n", range(2, 6))
    def test_one_move_sortable(self, n):
        for a in itertools.permutations(range(1, n + 1)):
            if distance_of(a, "block") != 1:
                continue
            h = find_gain_interchange(plane_of(a))
            assert apply_moves(a, [h]) == ident(n)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_always_gains(self, n):
        for a in itertools.permutations(range(1, n + 1)):
            if a == ident(n):
                continue
            p = plane_of(a)
            h = find_gain_interchange(p)
            h.validate(n + 1)
            assert classify_gain(p, h).delta_C == 2


class TestSorter:
    def test_sorted(self):
        assert len(sort_by_block_interchanges((1, 2, 3))) == 0

    def test_321(self):
        tr = sort_by_block_interchanges("3 2 1")
        assert len(tr) == 1 and tr.final == (1, 2, 3)
        ex = sort_by_block_interchanges("3 2 1", expand_to_transpositions=True)
        assert all(m.is_transpose for m in ex.moves)
        assert len(ex) == 2 == distance_of((3, 2, 1), "transposition")

    def test_2413(self):
        tr = sort_by_block_interchanges("2 4 1 3")
        assert len(tr) == 2 and tr.final == ident(4)
        assert [(st.C_before, st.C_after) for st in tr.steps] == [(1, 3), (3, 5)]

    def test_sampled_n7(self):
        rng = random.Random(7)
        for _ in range(300):
            a = list(range(1, 8))
            rng.shuffle(a)
            tr = sort_by_block_interchanges(a)
            assert len(tr) == bid_exact(a) and tr.final == ident(7)
            assert all(st.C_after - st.C_before == 2 for st in tr.steps)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_expansion(self, n):
        for a in itertools.permutations(range(1, n + 1)):
            ex = sort_by_block_interchanges(a, expand_to_transpositions=True)
            assert apply_moves(a, ex.moves) == ident(n)
            assert all(m.is_transpose for m in ex.moves)
            assert len(ex) <= 2 * bid_exact(a) == td_bounds(a).upper

    @pytest.mark.parametrize("size", [4, 5, 6, 7])
    def test_expand_interchange_equivalent(self, size):
        seq = tuple(range(size))
        for h in all_interchanges(size):
            out = seq
            for t in expand_interchange(h):
                out = t.apply_to(out)
            assert out == h.apply_to(seq)
            assert len(expand_interchange(h)) == (1 if h.is_transpose else 2)


class TestCensusFormula:
    def test_small(self):
        assert bid_census_formula(1) == {0: 1}
        assert bid_census_formula(3) == {0: 1, 1: 5}
        assert bid_census_formula(4) == {0: 1, 1: 15, 2: 8}

    @pytest.mark.parametrize("n", range(1, 16))
    def test_sums_to_factorial(self, n):
        assert sum(bid_census_formula(n).values()) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_bfs(self, n):
        assert census(n, "block") == bid_census_formula(n)


class TestMaxCycleGap:
    def test_identity(self):
        assert max_cycle_gap(Permutation.identity(GroundSet.range(4))).value == 0

    def test_four_cycle(self):
        g = GroundSet.range(4)
        alpha = Permutation.cycle_of((1, 2, 3, 4), g)
        r = max_cycle_gap(alpha)
        assert r.value == 3 and r.witness == alpha.inverse()

    def test_double_swap(self):
        alpha = Permutation.from_cycles(GroundSet.range(4), [(1, 2), (3, 4)])
        assert max_cycle_gap(alpha).value == 2 == exhaustive_max_gap(alpha)


class TestCycleGraph:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_product_matches_graph(self, n):
        for a in itertools.permutations(range(1, n + 1)):
            st = cycle_stats(augment(a).product)
            assert cycle_graph_counts(a) == (st.C, st.C_odd)
