"""Symmetric group statistics against independent brute-force oracles."""

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

import mpmath
import pytest

from repstat.partitions import Partition, conjugate, enumerate_partitions, partition_count
from repstat.symstats import (
    CapExceededError,
    angle_decay_constant,
    angle_report,
    asymptotic_estimates,
    class_size,
    cos_sq_exact,
    dimension,
    fraction_near_max,
    histogram,
    interval_counts,
    involution_count,
    layer_sums,
    ln_big,
    ln_fraction,
    max_dimension,
    plancherel_mass,
    sweep,
    vk_ratio,
)


@lru_cache(maxsize=None)
def syt_count(shape):
    """Oracle: standard Young tableaux counted by corner removal.

    Completely independent of the hook-length formula.
    """
    if sum(shape) <= 1:
        return 1
    total = 0
    for i in range(len(shape)):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if shape[i] > below:
            new = list(shape)
            new[i] -= 1
            if new[-1] == 0:
                new.pop()
            total += syt_count(tuple(new))
    return total


def cycle_type(perm):
    """Cycle type of a permutation given in one-line notation on 1..n."""
    n = len(perm)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


class TestDimension:
    def test_worked_example(self):
        assert dimension(Partition([5, 2])) == 14

    def test_trivial_and_sign(self):
        for n in range(1, 12):
            assert dimension(Partition([n])) == 1
            assert dimension(Partition([1] * n)) == 1

    def test_s3_squares(self):
        dims = [dimension(lam) for lam in enumerate_partitions(3)]
        assert sorted(d * d for d in dims) == [1, 1, 4]
        assert sum(d * d for d in dims) == 6

    def test_against_syt_oracle(self):
        for n in range(1, 9):
            for lam in enumerate_partitions(n):
                assert dimension(lam) == syt_count(lam.parts)

    def test_conjugation_invariance(self):
        for n in range(1, 26):
            for lam in enumerate_partitions(n):
                assert dimension(lam) == dimension(conjugate(lam))


class TestClassSize:
    def test_worked_example(self):
        assert class_size(Partition([3, 2, 2, 2, 1])) == 25200

    def test_identity_class(self):
        for n in range(1, 10):
            assert class_size(Partition([1] * n)) == 1

    def test_s4_multiset(self):
        sizes = sorted(class_size(lam) for lam in enumerate_partitions(4))
        assert sizes == [1, 3, 6, 6, 8]

    def test_against_permutation_oracle(self):
        for n in range(1, 7):
            tally = {}
            for perm in permutations(range(1, n + 1)):
                t = cycle_type(perm)
                tally[t] = tally.get(t, 0) + 1
            for lam in enumerate_partitions(n):
                assert class_size(lam) == tally[lam.parts]


class TestInvolutions:
    def test_brute_force(self):
        for n in range(1, 8):
            brute = sum(
                1
                for perm in permutations(range(1, n + 1))
                if all(perm[perm[i] - 1] == i + 1 for i in range(n))
            )
            assert involution_count(n) == brute

    def test_examples(self):
        assert involution_count(0) == 1
        assert involution_count(3) == 4
        assert involution_count(4) == 10


class TestSweep:
    def test_n3_records(self):
        recs = list(sweep(3))
        assert [r.lam.parts for r in recs] == [(3,), (2, 1), (1, 1, 1)]
        assert [r.dim for r in recs] == [1, 2, 1]
        assert [r.class_size for r in recs] == [2, 3, 1]

    def test_n1(self):
        (rec,) = list(sweep(1))
        assert rec.dim == 1 and rec.class_size == 1

    def test_moment_identities(self):
        for n in range(1, 16):
            recs = list(sweep(n))
            assert sum(r.dim for r in recs) == involution_count(n)
            assert sum(r.dim**2 for r in recs) == factorial(n)
            assert sum(r.class_size for r in recs) == factorial(n)

    def test_log_fields(self):
        for rec in sweep(12):
            assert rec.log_dim_sq == pytest.approx(2 * math.log(rec.dim), rel=1e-9, abs=1e-12)
            assert rec.log_class == pytest.approx(math.log(rec.class_size), rel=1e-9, abs=1e-12)

    def test_cap(self):
        with pytest.raises(CapExceededError) as err:
            list(sweep(51))
        assert "50" in str(err.value)
        with pytest.raises(CapExceededError):
            list(sweep(13, cap=12))

    def test_n20_length_and_identity(self):
        recs = list(sweep(20))
        assert len(recs) == 627
        assert sum(r.dim**2 for r in recs) == factorial(20)


class TestMaxDimension:
    def test_examples(self):
        m, arg = max_dimension(5)
        assert m == 6
        assert [a.parts for a in arg] == [(3, 1, 1)]
        assert max_dimension(1) == (1, [Partition([1])])
        m4, arg4 = max_dimension(4)
        assert m4 == 3
        assert sorted(a.parts for a in arg4) == [(2, 1, 1), (3, 1)]

    def test_argmax_closed_under_conjugation(self):
        for n in range(1, 20):
            _, arg = max_dimension(n)
            shapes = {a.parts for a in arg}
            assert all(conjugate(a).parts in shapes for a in arg)


class TestPlancherelMass:
    def test_examples(self):
        assert plancherel_mass(Partition([2])) == Fraction(1, 2)
        assert plancherel_mass(Partition([3, 1, 1])) == Fraction(3, 10)

    def test_total_mass_one(self):
        for n in range(1, 16):
            total = sum(plancherel_mass(lam) for lam in enumerate_partitions(n))
            assert total == 1


class TestLnBig:
    def test_matches_math_log_for_small(self):
        for x in (1, 2, 17, 10**15, factorial(20)):
            assert ln_big(x) == pytest.approx(math.log(x), rel=1e-14)

    def test_matches_mpmath_for_huge(self):
        mpmath.mp.prec = 120
        for x in (factorial(50), factorial(500), 17**3000, 2**100000 + 12345):
            ref = float(mpmath.log(mpmath.mpf(x)))
            assert ln_big(x) == pytest.approx(ref, rel=1e-12)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ln_big(0)

    def test_fraction_log(self):
        assert ln_fraction(Fraction(3, 4)) == pytest.approx(math.log(0.75), rel=1e-12)


class TestAngle:
    def test_n3(self):
        rep = angle_report(3)
        assert cos_sq_exact(3) == Fraction(16, 18)
        assert rep.cos_sq == pytest.approx(16 / 18, rel=1e-12)
        assert rep.sum_dim == 4 and rep.sum_dim_sq == 6 and rep.count == 3

    def test_n1_is_one(self):
        assert cos_sq_exact(1) == 1

    def test_cauchy_schwarz_range(self):
        for n in range(1, 30):
            assert 0 < cos_sq_exact(n) <= 1

    def test_monotone_decrease_sample(self):
        assert cos_sq_exact(30) < cos_sq_exact(20)

    def test_log_ratio_consistent_with_cos_sq(self):
        for n in (5, 15, 25):
            rep = angle_report(n)
            assert rep.log_ratio == pytest.approx(math.log(rep.cos_sq), rel=1e-9)


class TestAsymptotics:
    def test_partition_estimate(self):
        log_alpha, _, _, _ = asymptotic_estimates(20)
        exact = math.log(partition_count(20))
        assert abs(log_alpha - exact) / exact < 0.05

    def test_involution_estimate(self):
        _, log_beta, _, _ = asymptotic_estimates(30)
        exact = ln_big(involution_count(30))
        assert abs(log_beta - exact) / exact < 0.02

    def test_stirling(self):
        _, _, log_gamma, _ = asymptotic_estimates(50)
        assert abs(log_gamma - ln_big(factorial(50))) < 0.002


class TestIntervals:
    def test_full_window_holds_everything(self):
        counts = interval_counts(5, 0.0, 1.0)
        assert counts.count_dim_sq == 7 and counts.count_class == 7

    def test_top_window_empty(self):
        counts = interval_counts(10, 0.99, 1.0)
        assert counts.count_dim_sq == 0

    def test_figure_windows_frozen(self):
        # Frozen from the first full enumeration at n=20.
        counts = interval_counts(20, 0.4, 0.8)
        assert (counts.count_dim_sq, counts.count_class) == (563, 582)
        counts = interval_counts(20, 0.2, 0.6)
        assert (counts.count_dim_sq, counts.count_class) == (489, 489)

    def test_validation(self):
        with pytest.raises(ValueError):
            interval_counts(5, 0.8, 0.2)


class TestLayerSums:
    def test_largest_part_n(self):
        for n in (5, 9, 14):
            a, b = layer_sums(n, n)
            assert a == 0.0
            assert b == pytest.approx(math.log(factorial(n - 1)), rel=1e-12)

    def test_five_five(self):
        _, b = layer_sums(5, 5)
        assert b == pytest.approx(math.log(24), rel=1e-12)

    def test_layers_partition_the_sums(self):
        n = 12
        total_a = sum(layer_sums(n, k)[0] for k in range(1, n + 1))
        total_b = sum(layer_sums(n, k)[1] for k in range(1, n + 1))
        ref_a = sum(rec.log_dim_sq for rec in sweep(n))
        ref_b = sum(rec.log_class for rec in sweep(n))
        assert total_a == pytest.approx(ref_a, rel=1e-12)
        assert total_b == pytest.approx(ref_b, rel=1e-12)

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            layer_sums(5, 6)


class TestFractionNearMax:
    def test_n5_half(self):
        c, _ = fraction_near_max(5, Fraction(1, 2))
        assert c == Fraction(5, 7)

    def test_argmax_always_counted(self):
        for n in (3, 8, 13):
            c, _ = fraction_near_max(n, Fraction(99, 100))
            assert c >= Fraction(1, partition_count(n))

    def test_forty_below_twenty(self):
        c40, _ = fraction_near_max(40, Fraction(1, 2))
        c20, _ = fraction_near_max(20, Fraction(1, 2))
        assert c40 < c20

    def test_decay_constant_closed_form(self):
        a0 = angle_decay_constant()
        assert a0 == math.pi * math.sqrt(2.0 / 3.0) - 2.0
        assert a0 == pytest.approx(0.56510, abs=5e-6)

    def test_threshold_validation(self):
        with pytest.raises(ValueError):
            fraction_near_max(5, Fraction(3, 2))


class TestVkRatio:
    def test_n5(self):
        assert vk_ratio(5) == pytest.approx(-math.log(36 / 120) / math.sqrt(5), rel=1e-9)
        assert vk_ratio(5) == pytest.approx(0.538, abs=5e-4)

    def test_n1_zero(self):
        assert vk_ratio(1) == 0.0

    def test_window_and_frozen_values(self):
        # Band plus point regressions frozen from the first full run.
        frozen = {10: 0.574533075, 20: 0.819812753, 30: 0.791279583, 40: 0.863013234}
        for n in range(10, 41):
            r = vk_ratio(n)
            assert 0.3 < r < 1.5
            if n in frozen:
                assert r == pytest.approx(frozen[n], abs=1e-6)


class TestHistogram:
    def test_trivial_example(self):
        hist = histogram([0.0, 1.0, 2.0, 3.0], 2)
        assert hist.bin_edges == (0.0, 1.5, 3.0)
        assert hist.counts == (2, 2)

    def test_conservation_on_sweep_data(self):
        values = [rec.log_dim_sq for rec in sweep(20)]
        hist = histogram(values, 20)
        assert sum(hist.counts) == 627

    def test_interior_edge_goes_right(self):
        hist = histogram([0.0, 1.0, 2.0], 2)
        # 1.0 sits on the interior edge, so it lands in the right bin.
        assert hist.counts == (1, 2)

    def test_degenerate_range_single_bin(self):
        hist = histogram([4.0] * 9, 5)
        assert len(hist.counts) == 1
        assert hist.counts[0] == 9
        assert hist.bin_edges[0] < 4.0 < hist.bin_edges[1]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            histogram([], 3)

    def test_edges_strictly_increasing(self):
        for bins in (1, 3, 7):
            hist = histogram([0.1, 0.4, 0.40001, 2.5], bins)
            assert all(a < b for a, b in zip(hist.bin_edges, hist.bin_edges[1:]))
            assert sum(hist.counts) == 4
