"""Exact oracles against classical references and each other."""

import random

import pytest

from mcskit import SizeGuardError, enumerate_mcs, is_maximal, is_subsequence, lcs_dp
from tests.conftest import random_instance


def classic_lcs_len(a, b):
    """Independent reference: textbook two-string DP, lengths only."""
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, 1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


class TestLcsDp:
    def test_examples(self):
        assert lcs_dp(["TEGAP", "GAEPR"]) == "GAP"
        assert lcs_dp(["fabecd", "acdef"]) == "acd"
        assert lcs_dp(["ABBA", "ABBA"]) == "ABBA"

    def test_edge_cases(self):
        assert lcs_dp(["ABC"]) == "ABC"
        assert lcs_dp(["ABC", ""]) == ""
        assert lcs_dp(["abc", "xyz"]) == ""

    def test_three_and_four_strings(self):
        assert lcs_dp(["abcde", "ace", "aXcYe"]) == "ace"
        assert lcs_dp(["ab", "ab", "ab", "ab"]) == "ab"

    def test_matches_classical_two_string_dp_on_500_pairs(self):
        rng = random.Random(31)
        for _ in range(500):
            a, b = random_instance(rng, 2, 25, rng.randint(2, 8), min_len=0)
            got = lcs_dp([a, b])
            assert len(got) == classic_lcs_len(a, b)
            assert is_subsequence(got, a) and is_subsequence(got, b)

    def test_result_is_common_and_deterministic(self, rng):
        for _ in range(40):
            strs = random_instance(rng, rng.randint(2, 4), 12, rng.randint(2, 5))
            got = lcs_dp(strs)
            assert all(is_subsequence(got, s) for s in strs)
            assert lcs_dp(strs) == got

    def test_guards(self):
        with pytest.raises(SizeGuardError):
            lcs_dp(["a"] * 5)
        with pytest.raises(SizeGuardError):
            lcs_dp(["x" * 100, "x" * 100, "x" * 100, "x" * 100])


class TestEnumerateMcs:
    def test_examples(self):
        assert enumerate_mcs(["TEGAP", "GAEPR"]) == {"GAP", "EP"}
        assert enumerate_mcs(["fabecd", "acdef"]) == {"f", "acd", "ae"}
        assert enumerate_mcs(["AB", "BA"]) == {"A", "B"}

    def test_disjoint_alphabets(self):
        assert enumerate_mcs(["abc", "xyz"]) == {""}

    def test_guards(self):
        with pytest.raises(SizeGuardError):
            enumerate_mcs(["a" * 13, "a" * 13])
        with pytest.raises(SizeGuardError):
            enumerate_mcs(["ab"] * 5)

    def test_members_are_maximal_and_cover_all_maximal(self, rng):
        for _ in range(25):
            strs = random_instance(rng, rng.choice([2, 3]), 8, rng.randint(2, 4))
            result = enumerate_mcs(strs)
            for w in result:
                assert is_maximal(strs, w)
            # Completeness: every maximal subsequence of the shortest
            # string shows up.
            shortest = min(strs, key=len)
            from itertools import combinations

            seen = set()
            for r in range(len(shortest) + 1):
                for picks in combinations(shortest, r):
                    w = "".join(picks)
                    if w not in seen:
                        seen.add(w)
                        if is_maximal(strs, w):
                            assert w in result


class TestLcsIsLongestMcs:
    def test_on_random_small_instances(self, rng):
        for _ in range(30):
            strs = random_instance(rng, rng.choice([2, 3]), 9, rng.randint(2, 5))
            best = max(len(w) for w in enumerate_mcs(strs))
            assert len(lcs_dp(strs)) == best
