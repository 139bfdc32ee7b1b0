import pytest
from hypothesis import given
from hypothesis import strategies as st

from planesort.oracle import bfs_distance, distance_of, iter_signed, two_row_pi
from planesort.perm import Permutation, PermutationError, cycle_stats
from planesort.plane import apply_interchange, classify_gain, diagonal
from planesort.signed import (
    Reversal,
    all_reversals,
    apply_reversal,
    breakpoint_metrics,
    find_two_reversal,
    greedy_sort_reversals,
    is_fixed_point_free_involution,
    is_skew_symmetric,
    mirrored_pairs,
    mirror_reversal,
    p_r,
    reversal_gain,
    reversal_lower_bound,
    scan_two_reversal,
    skew_embed,
)


def signed_perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(st.permutations(list(range(1, n + 1))), st.lists(st.booleans(), min_size=n, max_size=n))
    ).map(lambda t: tuple(-x if neg else x for x, neg in zip(*t)))


class TestEmbedding:
    def test_first_example(self):
        e = skew_embed("-3 1 2 -4")
        assert e.s == (0, -3, 1, 2, -4, 4, -2, -1, 3)
        assert str(cycle_stats(e.pi)) == "(0,-4,3,-1,2,4,-3)(1)(-2)"
        assert e.exact

    def test_second_example(self):
        e = skew_embed("2 -4 -1 3")
        assert e.pi == Permutation.from_cycles(e.pi.ground, [(0, 1, 3, -4, -2, -1, 2, 4, -3)])

    def test_sorted(self):
        e = skew_embed((1, 2))
        assert e.s == (0, 1, 2, -2, -1)
        assert e.pi.is_identity() and not e.exact

    def test_p_r_wraps(self):
        pr = p_r(3)
        assert [pr(x) for x in (-1, -2, -3, 3, 2, 1, 0)] == [-2, -3, 3, 2, 1, 0, -1]

    @given(signed_perms())
    def test_invariants(self, a):
        e = skew_embed(a)
        assert is_skew_symmetric(e.s)
        assert diagonal(e.plane) == e.p_r.inverse()
        assert e.pi.as_dict() == two_row_pi(a)

    @pytest.mark.parametrize("bad", ["1 1", "0 1", "1 3", "-1 -1"])
    def test_rejects(self, bad):
        with pytest.raises(PermutationError):
            skew_embed(bad)


class TestReversal:
    def test_single_flip(self):
        assert apply_reversal((-1,), Reversal(1, 1)) == (1,)

    def test_segment(self):
        assert apply_reversal((1, -3, -2, 4), Reversal(2, 3)) == (1, 2, 3, 4)

    @given(signed_perms(), st.data())
    def test_involution(self, a, data):
        n = len(a)
        i = data.draw(st.integers(1, n))
        j = data.draw(st.integers(i, n))
        r = Reversal(i, j)
        assert apply_reversal(apply_reversal(a, r), r) == a

    def test_invalid(self):
        with pytest.raises(PermutationError):
            apply_reversal((1, 2), Reversal(2, 3))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_commutes_with_embedding(self, n):
        for a in iter_signed(n):
            e = skew_embed(a)
            plane = e.plane
            for r in all_reversals(n):
                moved = apply_interchange(plane, r.interchange(n))
                direct = skew_embed(apply_reversal(a, r))
                assert moved.s == direct.s and moved.pi == direct.pi
                assert is_skew_symmetric(moved.s)


class TestLowerBound:
    @pytest.mark.parametrize("a,want", [("-3 1 2 -4", 3), ("2 -4 -1 3", 4), ("1 2 3 4 5", 0)])
    def test_examples(self, a, want):
        assert reversal_lower_bound(a) == want

    @pytest.mark.parametrize("n", range(1, 5))
    def test_below_bfs(self, n):
        for a in iter_signed(n):
            assert reversal_lower_bound(a) <= distance_of(a, "reversal")


class TestTwoReversal:
    def test_minus_n_case(self):
        e = skew_embed("-3 1 2 -4")
        assert mirrored_pairs(e) == [(3, 5)]
        r = find_two_reversal(e)
        assert r == Reversal(4, 4)
        g = classify_gain(e.plane, r.interchange(4))
        assert g.case_label == "Case2" and g.delta_C == 2

    def test_sorted_has_none(self):
        assert find_two_reversal(skew_embed((1, 2, 3))) is None

    def test_second_example(self):
        e = skew_embed("2 -4 -1 3")
        gains = [r for r in all_reversals(4) if reversal_gain(e, r) == 2]
        assert gains
        assert find_two_reversal(e) in gains

    @pytest.mark.parametrize("n", range(1, 6))
    def test_mirror_against_scan(self, n):
        for a in iter_signed(n):
            e = skew_embed(a)
            scan = scan_two_reversal(e)
            found = find_two_reversal(e)
            assert (found is None) == (scan is None)
            if found is not None:
                assert reversal_gain(e, found) == 2
            cand = mirror_reversal(e)
            if cand is not None and any(q != 2 * n - p for p, q in mirrored_pairs(e)):
                # mirrored-pair candidates always gain; only the -n fallback is conjectural
                assert reversal_gain(e, cand) == 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_pair_exists_when_exact(self, n):
        for a in iter_signed(n):
            e = skew_embed(a)
            if e.exact:
                assert mirrored_pairs(e)


class TestGreedy:
    def test_sorted(self):
        res = greedy_sort_reversals((1, 2, 3))
        assert res.success and len(res.trace) == 0

    def test_example(self):
        res = greedy_sort_reversals("-3 1 2 -4")
        assert res.success and len(res.trace) == 3 == res.lower_bound == bfs_distance((-3, 1, 2, -4), "reversal")
        assert res.trace.final == (1, 2, 3, 4)

    def test_single(self):
        res = greedy_sort_reversals((-1,))
        assert res.success and len(res.trace) == 1

    @pytest.mark.parametrize("n", range(1, 5))
    def test_valid_traces(self, n):
        for a in iter_signed(n):
            res = greedy_sort_reversals(a)
            cur = a
            for st_ in res.trace.steps:
                assert st_.before == cur
                cur = apply_reversal(cur, st_.move)
                assert st_.after == cur
            if res.success:
                assert cur == tuple(range(1, n + 1))
                assert len(res.trace) >= distance_of(a, "reversal")


class TestBreakpoint:
    def test_example(self):
        m = breakpoint_metrics("-3 1 2 -4")
        assert m.b == (0, 3, -3, -1, 1, -2, 2, 4, -4, -5)
        assert (m.C_theta, m.C_BG, m.bg_bound, m.relation_holds) == (4, 2, 3, True)

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_sorted(self, n):
        m = breakpoint_metrics(tuple(range(1, n + 1)))
        assert m.C_BG == n + 1 and m.bg_bound == 0

    def test_second_example(self):
        assert breakpoint_metrics("2 -4 -1 3").bg_bound == 4 == reversal_lower_bound("2 -4 -1 3")

    @given(signed_perms())
    def test_involutions(self, a):
        m = breakpoint_metrics(a)
        assert is_fixed_point_free_involution(m.theta1)
        assert is_fixed_point_free_involution(m.theta2)
        assert 2 * m.C_BG == m.C_theta
        assert m.bg_bound == m.theta_bound
        assert -(len(a) + 1) in m.theta1.ground
