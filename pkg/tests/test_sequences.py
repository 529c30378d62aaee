import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hmcseq.modp import is_prime
from hmcseq.sequences import (
    HmcSequence,
    SequenceSet,
    hmc_sequence,
    hmc_set,
    min_adjacent_distance,
    prime_sequence,
)
from table_fixtures import (
    HMC_D_P7,
    HMC_D_P19,
    HMC_ROWS_P7,
    HMC_ROWS_P19_PRINTED,
    PRIME_ROWS_P7,
    PRIME_ROWS_P19,
    TYPO_CELLS_P19,
)

PRIMES_TO_199 = tuple(n for n in range(3, 200) if is_prime(n))


class TestPrimeSequence:
    def test_p7_rows(self):
        for k, expected in PRIME_ROWS_P7.items():
            assert prime_sequence(7, k).elements == expected

    def test_p19_rows(self):
        for k, expected in PRIME_ROWS_P19.items():
            assert prime_sequence(19, k).elements == expected

    def test_zero_row(self):
        assert prime_sequence(7, 0).elements == (0,) * 7

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            prime_sequence(7, 7)
        with pytest.raises(ValueError):
            prime_sequence(7, -1)

    def test_composite_p(self):
        with pytest.raises(ValueError, match="9 is not prime"):
            prime_sequence(9, 1)

    @given(st.sampled_from(PRIMES_TO_199), st.data())
    def test_nonzero_rows_are_permutations(self, p, data):
        k = data.draw(st.integers(1, p - 1))
        elems = prime_sequence(p, k).elements
        assert sorted(elems) == list(range(p))
        assert elems[0] == 0


class TestHmcSequence:
    def test_p7_rows(self):
        for k, expected in HMC_ROWS_P7.items():
            seq = hmc_sequence(7, k)
            assert seq.elements == expected
            assert seq.min_distance == HMC_D_P7[k]

    def test_p19_rows_match_print_except_documented_cells(self):
        for k, printed in HMC_ROWS_P19_PRINTED.items():
            computed = hmc_sequence(19, k).elements
            for pos1, (a, b) in enumerate(zip(printed, computed), 1):
                if (k, pos1) in TYPO_CELLS_P19:
                    bad, good = TYPO_CELLS_P19[k, pos1]
                    assert a == bad and b == good
                else:
                    assert a == b, (k, pos1)

    def test_printed_typo_rows_break_identities(self):
        # The printed k=13 row repeats a value; the printed k=15 row
        # breaks the position-mirror sum. The computed rows satisfy both.
        row13 = HMC_ROWS_P19_PRINTED[13]
        assert len(set(row13)) < len(row13)
        assert len(set(hmc_sequence(19, 13).elements)) == 19
        row15 = HMC_ROWS_P19_PRINTED[15]
        assert row15[5] + row15[13] != 2 * 19
        comp15 = hmc_sequence(19, 15).elements
        assert comp15[5] + comp15[13] == 2 * 19

    def test_p19_distances(self):
        for k, d in HMC_D_P19.items():
            assert hmc_sequence(19, k).min_distance == d

    def test_p3_set(self):
        s = hmc_set(3)
        assert [q.elements for q in s] == [(1, 3, 2), (2, 3, 1)]

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            hmc_sequence(7, 0)

    def test_deterministic(self):
        assert hmc_sequence(19, 5) == hmc_sequence(19, 5)


class TestSetInvariants:
    @pytest.mark.parametrize("p", PRIMES_TO_199)
    def test_structure(self, p):
        t = (p - 1) // 2
        arr = np.array([s.elements for s in hmc_set(p)], dtype=np.int64)
        assert arr.shape == (p - 1, p)
        # distinct elements per row
        assert all(len(set(row)) == p for row in arr.tolist())
        # range
        assert arr.min() >= 1 and arr.max() <= 2 * p - 3
        # constant center column
        assert (arr[:, t] == p).all()
        # endpoints
        assert (arr[:, -1] == p - arr[:, 0]).all()
        # mirror sums for 2 <= i <= t (the center pair included)
        for i in range(2, t + 1):
            assert (arr[:, i - 1] + arr[:, p - i] == 2 * p).all(), (p, i)
        # row k reversed is row p-k; equivalent to a 180-degree flip
        assert (arr == arr[::-1, ::-1]).all()
        # column i read down equals column p+1-i read up (1-based)
        for i in range(1, p + 1):
            assert (arr[::-1, i - 1] == arr[:, p - i]).all()

    @pytest.mark.parametrize("p", PRIMES_TO_199)
    def test_distances(self, p):
        t = (p - 1) // 2
        dists = {s.k: s.min_distance for s in hmc_set(p)}
        # paired rows share a distance, so the d column is a palindrome
        for k in range(1, p):
            assert dists[k] == dists[p - k]
        assert dists[t] == 1 and dists[t + 1] == 1
        if p >= 5:
            assert dists[1] == 2 and dists[p - 1] == 2
        else:
            # p=3 has t=1: the extreme and center rows coincide and d=1
            assert dists == {1: 1, 2: 1}


class TestMinAdjacentDistance:
    def test_examples(self):
        assert min_adjacent_distance(hmc_sequence(7, 2)) == 3
        assert min_adjacent_distance(hmc_sequence(19, 9)) == 1
        assert min_adjacent_distance(hmc_sequence(19, 5)) == 9

    def test_not_cyclic(self):
        # H_1 at p=7 wraps 6 -> 1 (gap 5), but the reading is non-cyclic
        # and the adjacent gaps give 2.
        assert min_adjacent_distance((1, 3, 5, 7, 9, 11, 6)) == 2

    def test_plain_sequences_accepted(self):
        assert min_adjacent_distance([10, 4, 5]) == 1

    def test_too_short(self):
        with pytest.raises(ValueError):
            min_adjacent_distance([1])


class TestSequenceSet:
    def test_duplicate_k_rejected(self):
        a = hmc_sequence(7, 1)
        clone = HmcSequence(7, 1, a.elements, a.min_distance)
        with pytest.raises(ValueError, match="duplicate k"):
            SequenceSet(7, (a, clone))

    def test_mixed_p_rejected(self):
        with pytest.raises(ValueError, match="p=7"):
            SequenceSet(19, (hmc_sequence(7, 1),))

    def test_lookup_and_subset(self):
        s = hmc_set(7)
        assert len(s) == 6
        assert s.ks() == (1, 2, 3, 4, 5, 6)
        assert s.by_k(2).elements == HMC_ROWS_P7[2]
        with pytest.raises(KeyError):
            s.by_k(9)
        sub = s.subset([2, 5])
        assert sub.ks() == (2, 5)

    @settings(max_examples=20)
    @given(st.sampled_from((3, 5, 7, 11, 19)))
    def test_full_set_sizes(self, p):
        s = hmc_set(p)
        assert len(s) == p - 1
        assert s.ks() == tuple(range(1, p))
