"""Pair classification, the table rows, and poset statistics."""
from __future__ import annotations

import pytest

import _helpers as H
from treelap import (
    LimitError,
    PairTag,
    ParameterError,
    classification_table,
    classify,
    classify_all,
    enumerate_trees,
    laplacian_coeffs,
    poset_stats,
)
from treelap.ordering import (
    _balanced_ranges,
    _count_range_numpy,
    _count_range_python,
    _percent_2dp,
)


class TestClassify:
    def test_equal(self):
        r = classify((1, 5, 0), (1, 5, 0))
        assert r.tag is PairTag.EQUAL
        assert r.smaller is None and r.first_diff is None

    def test_dominates_first_smaller(self):
        r = classify((1, 4, 0), (1, 5, 0))
        assert r.tag is PairTag.DOMINATES
        assert r.smaller == 0
        assert r.first_diff == 1 and r.last_diff == 1

    def test_dominates_second_smaller(self):
        r = classify((1, 9, 2, 0), (1, 8, 2, 0))
        assert r.tag is PairTag.DOMINATES
        assert r.smaller == 1

    def test_type1_opposite_ends(self):
        # first disagreement and last disagreement point different ways
        r = classify((1, 3, 7, 0), (1, 4, 6, 0))
        assert r.tag is PairTag.INCOMPARABLE_TYPE1
        assert (r.first_diff, r.last_diff) == (1, 2)

    def test_type2_same_ends(self):
        # ends agree but the middle crosses twice
        r = classify((1, 3, 9, 3, 0), (1, 4, 8, 4, 0))
        assert r.tag is PairTag.INCOMPARABLE_TYPE2

    def test_tag_wire_values(self):
        assert PairTag.EQUAL.value == "Equal"
        assert PairTag.DOMINATES.value == "Dominates"
        assert PairTag.INCOMPARABLE_TYPE1.value == "IncomparableType1"
        assert PairTag.INCOMPARABLE_TYPE2.value == "IncomparableType2"

    def test_length_mismatch(self):
        with pytest.raises(ParameterError):
            classify((1, 0), (1, 2, 0))


class TestWitnessPair:
    def test_n8_type1_polynomials(self):
        va = (1, 14, 75, 196, 267, 190, 65, 8, 0)
        vb = (1, 14, 74, 190, 259, 188, 66, 8, 0)
        hits = [
            t for t in enumerate_trees(8)
            if laplacian_coeffs(t) in (va, vb)
        ]
        assert len(hits) == 2
        r = classify(va, vb)
        assert r.tag is PairTag.INCOMPARABLE_TYPE1
        assert r.first_diff == 2 and r.last_diff == 6


class TestClassifyAll:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_rows_match_frozen_table(self, n):
        row = classify_all(n)
        got = (row.n, row.trees, row.type1, row.type2, row.incomparable, row.percent)
        assert got == H.TABLE_ROWS[n]

    def test_equal_pairs_seen_from_n11(self):
        assert classify_all(10).equal_pairs == 0
        assert classify_all(11).equal_pairs == 3
        assert classify_all(12).equal_pairs == 3

    def test_jobs_do_not_change_the_answer(self):
        a = classify_all(12)
        b = classify_all(12, jobs=4)
        assert a == b

    def test_guard(self):
        with pytest.raises(LimitError):
            classify_all(13)

    def test_n_domain(self):
        with pytest.raises(ParameterError):
            classify_all(2)

    def test_table_shape(self):
        rows = classification_table(8)
        assert [r.n for r in rows] == list(range(3, 9))

    @pytest.mark.parametrize("n", (13, 14))
    def test_forced_rows_match_frozen_table(self, n):
        row = classify_all(n, jobs=4, force=True)
        got = (row.n, row.trees, row.type1, row.type2, row.incomparable, row.percent)
        assert got == H.TABLE_ROWS[n]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", (15, 16))
    def test_large_rows_match_frozen_table(self, n):
        row = classify_all(n, jobs=4, force=True)
        got = (row.n, row.trees, row.type1, row.type2, row.incomparable, row.percent)
        assert got == H.TABLE_ROWS[n]


class TestCountingKernels:
    def test_python_and_numpy_agree(self):
        vecs = [laplacian_coeffs(t) for t in enumerate_trees(9)]
        total = len(vecs)
        for a0, a1 in _balanced_ranges(total, 5):
            assert _count_range_python(vecs, a0, a1) == _count_range_numpy(vecs, a0, a1)

    def test_python_kernel_handles_huge_entries(self):
        # entries past the int64 window must still classify exactly
        big = 2**70
        vecs = [(1, big, 0), (1, big + 1, 0), (1, big - 1, 0)]
        assert _count_range_python(vecs, 0, 3) == (0, 0, 0)
        vecs = [(1, big, 5, 0), (1, big + 1, 4, 0)]
        t1, t2, eq = _count_range_python(vecs, 0, 2)
        assert (t1, t2, eq) == (1, 0, 0)

    def test_balanced_ranges_partition(self):
        for total, parts in ((0, 3), (1, 1), (10, 3), (551, 16), (7, 20)):
            ranges = _balanced_ranges(total, parts)
            flat = [i for a0, a1 in ranges for i in range(a0, a1)]
            assert flat == list(range(total))


class TestPercentFormatting:
    def test_exact_two_decimals(self):
        assert _percent_2dp(0, 10) == "0.00"
        assert _percent_2dp(7, 253) == "2.77"
        assert _percent_2dp(19087, 151525) == "12.60"

    def test_round_half_up(self):
        # 1/800 of the total is exactly 0.125 percent
        assert _percent_2dp(1, 800) == "0.13"
        assert _percent_2dp(1, 8) == "12.50"


class TestPosetStats:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_against_brute_force(self, n):
        vecs = [laplacian_coeffs(t) for t in enumerate_trees(n)]
        stats = poset_stats(n)
        assert stats.trees == len(vecs)
        assert stats.distinct_vectors == len(set(vecs))
        assert stats.longest_chain == H.brute_longest_chain(vecs)
        distinct = sorted(set(vecs))

        def incomparable(i, j):
            a, b = distinct[i], distinct[j]
            return any(x < y for x, y in zip(a, b)) and any(
                x > y for x, y in zip(a, b)
            )

        assert stats.max_antichain == max(
            1, H.brute_max_clique(len(distinct), incomparable)
        )

    def test_known_small_values(self):
        s = poset_stats(4)
        assert (s.distinct_vectors, s.longest_chain, s.max_antichain) == (2, 2, 1)
        s = poset_stats(7)
        assert (s.longest_chain, s.max_antichain) == (11, 1)
        s = poset_stats(8)
        assert (s.longest_chain, s.max_antichain) == (19, 3)

    def test_guard(self):
        with pytest.raises(LimitError):
            poset_stats(13)
