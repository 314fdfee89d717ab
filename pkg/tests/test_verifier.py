import pytest

from gadic import (BasisSpec, DomainError, GadicSequence,
                   HypothesisViolatedError, PartitionSpec, construct_witness,
                   count_reps_bruteforce, cross_check_witness,
                   removability_scan, verify_minimality, verify_theorem1,
                   verify_theorem2, verify_witness)


class TestTheorem1:
    def test_binary_pairs(self, binary_pairs):
        report = verify_theorem1(binary_pairs, 5000)
        assert report.passed and report.gaps == [0, 1]

    def test_h3(self, binary):
        spec = BasisSpec(seq=binary,
                         partition=PartitionSpec(h=3, period_colors=[0, 1, 2]))
        report = verify_theorem1(spec, 5000)
        assert report.passed and report.gaps == [0, 1, 2]

    def test_degenerate_window(self, binary_pairs):
        report = verify_theorem1(binary_pairs, 2)
        assert report.gaps == [0, 1] and report.passed


class TestTheorem2:
    def test_binary_pairs(self, binary_pairs):
        with_zero, without = verify_theorem2(binary_pairs, 5000)
        assert with_zero.passed and with_zero.gaps == []
        assert without.passed

    def test_h3(self, binary):
        spec = BasisSpec(seq=binary,
                         partition=PartitionSpec(h=3, period_colors=[0, 1, 2]))
        with_zero, without = verify_theorem2(spec, 2000)
        assert with_zero.passed and without.passed


class TestConstructWitness:
    def test_a_equals_one(self, binary_pairs):
        cert = construct_witness(binary_pairs, 2, 1)
        assert cert.M0 == 0
        assert cert.chosen_Ms == {1: 3}
        assert cert.n_value == 9

    def test_a_equals_three(self, binary_pairs):
        cert = construct_witness(binary_pairs, 2, 3)
        assert cert.M0 == 1 and cert.chosen_Ms == {1: 3}
        assert cert.n_value == 11

    def test_a_in_other_class(self, binary_pairs):
        # a = 4 lives in class 1; the class-0 summand gets the maximal
        # digits below M0 plus a single 1 at M = 5
        cert = construct_witness(binary_pairs, 2, 4)
        assert cert.removed_class == 1 and cert.M0 == 2
        assert cert.chosen_Ms == {0: 5}
        assert binary_pairs.seq.evaluate(cert.summands[0]) == 35
        assert cert.n_value == 39

    def test_non_member_rejected(self, binary_pairs):
        with pytest.raises(DomainError):
            construct_witness(binary_pairs, 2, 5)

    def test_t_below_threshold_guard(self, binary_pairs):
        with pytest.raises(HypothesisViolatedError):
            construct_witness(binary_pairs, 1, 1)
        construct_witness(binary_pairs, 1, 1, override=True)

    def test_witness_sum_identity(self, mixed23_pairs):
        for a in mixed23_pairs.enumerate(100).members:
            cert = construct_witness(mixed23_pairs, 2, a)
            total = sum(mixed23_pairs.seq.evaluate(rep)
                        for rep in cert.summands.values())
            assert cert.n_value == total == mixed23_pairs.seq.evaluate(cert.n_rep)


class TestVerifyWitness:
    def test_certifies_hand_checked_pair(self, binary_pairs):
        cert = verify_witness(binary_pairs, construct_witness(binary_pairs, 2, 1))
        assert (cert.expected_count, cert.measured_count) == (2, 2)
        assert cert.verdict == "certified"

    def test_certifies_a_three(self, binary_pairs):
        cert = verify_witness(binary_pairs, construct_witness(binary_pairs, 2, 3))
        assert cert.verdict == "certified"
        # brute force: no other member pair sums to 11
        w = binary_pairs.enumerate(20)
        res = count_reps_bruteforce(w, 11, 2)
        assert sorted(res.enumeration) == [(3, 8), (8, 3)]

    def test_cross_check(self, binary_pairs):
        w = binary_pairs.enumerate(50)
        for a in (1, 2, 3, 4):
            cert = verify_witness(binary_pairs, construct_witness(binary_pairs, 2, a))
            assert cross_check_witness(binary_pairs, cert, w)

    def test_expected_count_is_permutation_count(self, binary):
        # witness summands are pairwise distinct, so the expected ordered
        # count is h! exactly
        import math
        spec = BasisSpec(seq=binary,
                         partition=PartitionSpec(
                             h=3, period_colors=[0, 0, 0, 1, 1, 1, 2, 2, 2]))
        cert = verify_witness(spec, construct_witness(spec, 3, 1))
        values = cert.multiset(spec)
        assert len(set(values)) == 3
        assert cert.expected_count == math.factorial(3)
        assert cert.verdict == "certified"


class TestMinimalityBatch:
    def test_corollary_preset(self, binary_pairs):
        batch = verify_minimality(binary_pairs, t=2, K=20, W=3)
        assert len(batch.certificates) == 60
        assert batch.passed

    def test_distinct_choices_give_increasing_witnesses(self, binary_pairs):
        batch = verify_minimality(binary_pairs, t=2, K=3, W=4)
        per_member = {}
        for cert in batch.certificates:
            per_member.setdefault(cert.removed, []).append(cert.n_value)
        for ns in per_member.values():
            assert ns == sorted(ns) and len(set(ns)) == len(ns)

    def test_hypothesis_violation_empty_family(self, binary):
        spec = BasisSpec(seq=binary,
                         partition=PartitionSpec(h=2, period_colors=[0, 1]))
        with pytest.raises(HypothesisViolatedError):
            verify_minimality(spec, t=2, K=1, W=1)

    def test_t_guard(self, binary_pairs):
        with pytest.raises(HypothesisViolatedError):
            verify_minimality(binary_pairs, t=1, K=1, W=1)


class TestRemovabilityScan:
    def test_removing_zero_keeps_window_basis(self, binary_pairs):
        rows = removability_scan(binary_pairs, 500, elem_bound=4)
        by_removed = {r.removed: r for r in rows}
        assert by_removed[0].covered_from == 2
        assert all("evidence" in r.evidence for r in rows)

    def test_removing_one_leaves_misses(self, binary_pairs):
        rows = removability_scan(binary_pairs, 500, elem_bound=1)
        row = {r.removed: r for r in rows}[1]
        assert row.miss_count > 2  # constructed witnesses (9, 13, ...) go missing
