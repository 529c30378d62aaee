import pytest
from hypothesis import given, settings, strategies as st

from hmcseq.analysis import (
    CHECK_NAMES,
    CorrelationProfile,
    correlation_profile,
    hamming_cross_correlation,
    verify_lemmas,
    verify_one_coincidence,
)
from hmcseq.modp import Residue, inv_mod, mul_mod, sub_mod
from hmcseq.sequences import HmcSequence, SequenceSet, hmc_sequence, hmc_set, min_adjacent_distance


def brute_count(x, y, tau):
    L = len(x)
    return sum(1 for i in range(L) if x[i] == y[(i + tau) % L])


class TestHammingCrossCorrelation:
    def test_in_phase_autocorrelation(self):
        h1 = hmc_sequence(7, 1)
        assert hamming_cross_correlation(h1, h1, 0) == 7

    def test_out_of_phase_autocorrelation(self):
        h1 = hmc_sequence(7, 1)
        for tau in range(1, 7):
            assert hamming_cross_correlation(h1, h1, tau) == 0

    def test_pair_example(self):
        # 2,6,10,7,4,8,5 vs 5,8,4,7,10,6,2 agree only at the shared center
        assert hamming_cross_correlation(hmc_sequence(7, 2), hmc_sequence(7, 5), 0) == 1

    def test_arbitrary_alphabet(self):
        assert hamming_cross_correlation([1, 1], [1, 2], 0) == 1
        assert hamming_cross_correlation([1, 1], [1, 2], 1) == 1

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            hamming_cross_correlation([1, 2], [1, 2, 3], 0)

    def test_tau_out_of_range(self):
        with pytest.raises(ValueError):
            hamming_cross_correlation([1, 2], [1, 2], 2)
        with pytest.raises(ValueError):
            hamming_cross_correlation([1, 2], [1, 2], -1)

    @given(
        st.lists(st.integers(0, 5), min_size=1, max_size=12),
        st.lists(st.integers(0, 5), min_size=1, max_size=12),
        st.data(),
    )
    def test_matches_direct_count(self, x, y, data):
        y = (y * ((len(x) // len(y)) + 1))[: len(x)]
        tau = data.draw(st.integers(0, len(x) - 1))
        assert hamming_cross_correlation(x, y, tau) == brute_count(x, y, tau)


class TestCorrelationProfile:
    def test_self_profile_of_distinct_elements(self):
        h1 = hmc_sequence(7, 1)
        assert correlation_profile(h1, h1).values == (7, 0, 0, 0, 0, 0, 0)

    def test_two_entry_example(self):
        assert correlation_profile([1, 1], [1, 2]).values == (1, 1)

    def test_pair_bound_p19(self):
        s = hmc_set(19)
        for k in range(1, 19):
            for l in range(k + 1, 19):
                prof = correlation_profile(s.by_k(k), s.by_k(l))
                assert prof.max <= 1

    def test_properties_object(self):
        prof = CorrelationProfile((1, 0, 2))
        assert prof.length == 3
        assert prof.max == 2
        assert prof.total == 3

    @given(
        st.integers(2, 10).flatmap(
            lambda n: st.tuples(
                st.lists(st.integers(0, 4), min_size=n, max_size=n),
                st.lists(st.integers(0, 4), min_size=n, max_size=n),
            )
        )
    )
    def test_shift_symmetry_and_total(self, pair):
        x, y = pair
        L = len(x)
        fwd = correlation_profile(x, y)
        rev = correlation_profile(y, x)
        for tau in range(L):
            assert rev.values[tau] == fwd.values[(L - tau) % L]
        shared = sum(1 for a in x for b in y if a == b)
        assert fwd.total == shared


class TestClosedFormHitPosition:
    def test_unique_hit_position_p19(self):
        # A coincidence between rows k and l at shift tau forces the mod-p
        # congruence whose single root is (tau * l * (k-l)^-1 - 2^-1) mod p,
        # in 0-based positions. So any hit sits exactly there; at that
        # position the two values are always congruent, and a miss means
        # they differ by exactly p. Reversal pairs share all p values, so
        # for them the hit exists at every shift.
        p = 19
        s = hmc_set(p)
        half = inv_mod(Residue(2, p))
        for k in range(1, p):
            for l in range(1, p):
                if k == l:
                    continue
                x, y = s.by_k(k).elements, s.by_k(l).elements
                coeff = mul_mod(
                    Residue(l, p), inv_mod(sub_mod(Residue(k, p), Residue(l, p)))
                )
                for tau in range(p):
                    hits = [i for i in range(p) if x[i] == y[(i + tau) % p]]
                    want = sub_mod(mul_mod(Residue(tau, p), coeff), half).value
                    assert len(hits) <= 1, (k, l, tau)
                    if hits:
                        assert hits == [want], (k, l, tau)
                    diff = x[want] - y[(want + tau) % p]
                    assert abs(diff) in (0, p), (k, l, tau)
                    assert (diff == 0) == bool(hits), (k, l, tau)
                    if l == p - k:
                        assert hits, (k, l, tau)


class TestVerifyOneCoincidence:
    def test_full_sets_pass(self):
        for p in (3, 7, 19):
            result = verify_one_coincidence(hmc_set(p))
            assert result.ok
            assert result.worst.count == 1

    def test_single_member_set(self):
        result = verify_one_coincidence(hmc_set(7).subset([3]))
        assert result.ok and result.worst is None

    def test_duplicate_rows_under_distinct_labels(self):
        h1 = hmc_sequence(7, 1)
        fake = HmcSequence(7, 2, h1.elements, h1.min_distance)
        result = verify_one_coincidence(SequenceSet(7, (h1, fake)))
        assert not result.ok
        assert (result.worst.k, result.worst.l) == (1, 2)
        assert result.worst.tau == 0
        assert result.worst.count == 7

    def test_worst_is_lexicographically_smallest(self):
        sset = hmc_set(7)
        best = None
        for i, a in enumerate(sset.sequences):
            for b in sset.sequences[i + 1 :]:
                for tau in range(7):
                    c = brute_count(a.elements, b.elements, tau)
                    if best is None or c > best[3]:
                        best = (a.k, b.k, tau, c)
        k, l, tau, count = best
        worst = verify_one_coincidence(sset).worst
        assert (worst.k, worst.l, worst.tau, worst.count) == (k, l, tau, count)

    def test_input_order_does_not_matter(self):
        sset = hmc_set(7)
        shuffled = SequenceSet(7, tuple(reversed(sset.sequences)))
        assert verify_one_coincidence(shuffled) == verify_one_coincidence(sset)

    def test_rows_with_repeats_use_direct_counting(self):
        a = HmcSequence(7, 1, (1, 1, 2, 3, 4, 5, 6), 0)
        b = HmcSequence(7, 2, (1, 9, 9, 9, 9, 9, 1), 0)
        result = verify_one_coincidence(SequenceSet(7, (a, b)))
        expected_max = max(
            brute_count(a.elements, b.elements, tau) for tau in range(7)
        )
        assert result.worst.count == expected_max == 2
        assert not result.ok


class TestVerifyLemmas:
    @pytest.mark.parametrize("p", (3, 5, 7, 19, 101))
    def test_all_pass(self, p):
        report = verify_lemmas(p)
        assert report.all_pass, report.failures()
        assert report.p == p
        assert report.max_cross_correlation == 1
        assert report.max_out_of_phase_autocorrelation == 0

    def test_check_names_fixed(self):
        report = verify_lemmas(7)
        assert tuple(c.name for c in report.checks) == CHECK_NAMES

    def test_passing_checks_carry_no_detail(self):
        for c in verify_lemmas(19).checks:
            assert c.passed and c.detail == ""

    def test_invalid_p(self):
        with pytest.raises(ValueError, match="9 is not prime"):
            verify_lemmas(9)


def test_min_adjacent_distance_reexported():
    assert min_adjacent_distance(hmc_sequence(7, 2)) == 3
