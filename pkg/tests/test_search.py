import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from chordgirth.bounds import gamma_bounds
from chordgirth.io import parse_decomp, serialize_decomp
from chordgirth.search import (
    CyclePartition,
    SearchOptions,
    automorphism_count,
    cycle_partition_weight,
    enumerate_cycle_partitions,
    enumerate_two_factor_types,
    exhaustive_gamma,
    exhaustive_gamma_table,
    factor_automorphisms,
    first_partner_candidates,
    max_partition_weight,
    part_weight,
)
from chordgirth.graph import validate
from chordgirth.solver import min_chord_cycle


class TestCyclePartitions:
    def test_half_shift_partition(self):
        assert cycle_partition_weight(CyclePartition(4, ((1, 3), (2, 4)))) == 8

    def test_single_part(self):
        assert cycle_partition_weight(CyclePartition(4, ((1, 2, 3, 4),))) == 6

    def test_pair_counted_twice(self):
        assert cycle_partition_weight(CyclePartition(2, ((1, 2),))) == 2

    @pytest.mark.parametrize("k", [2, 4, 6, 8, 10])
    def test_half_shift_attains_k2_over_2(self, k):
        parts = tuple((i, i + k // 2) for i in range(1, k // 2 + 1))
        assert cycle_partition_weight(CyclePartition(k, parts)) == k * k // 2

    @pytest.mark.parametrize("k,expected", [(2, 2), (4, 8), (6, 18), (8, 32)])
    def test_max_weight(self, k, expected):
        assert max_partition_weight(k) == expected

    def test_invalid(self):
        with pytest.raises(ValueError):
            CyclePartition(4, ((1, 2, 3), (4,)))
        with pytest.raises(ValueError):
            CyclePartition(3, ((1, 2, 3),))
        with pytest.raises(ValueError):
            max_partition_weight(5)

    def test_enumeration_count_k4(self):
        # {1234} in 3 cyclic orders, plus 3 pairings into two pairs.
        assert len(list(enumerate_cycle_partitions(4))) == 6

    @pytest.mark.parametrize("k", [4, 6])
    def test_enumeration_is_exhaustive(self, k):
        # Independent count: set partitions into blocks >= 2, weighted by (s-1)!/2 orders.
        def orders(s):
            return 1 if s == 2 else math.factorial(s - 1) // 2

        def count(items):
            if not items:
                return 1
            head, rest = items[0], items[1:]
            total = 0
            for size in range(1, len(rest) + 1):
                for mates in itertools.combinations(rest, size):
                    left = [x for x in rest if x not in mates]
                    total += orders(size + 1) * count(left)
            return total

        assert len(list(enumerate_cycle_partitions(k))) == count(list(range(1, k + 1)))

    @settings(max_examples=100)
    @given(st.permutations(range(1, 9)), st.integers(1, 3))
    def test_rotation_reflection_invariant(self, perm, shift):
        part = tuple(perm)
        assert part_weight(part) == part_weight(part[shift:] + part[:shift])
        assert part_weight(part) == part_weight(tuple(reversed(part)))


class TestTwoFactorTypes:
    def test_examples(self):
        assert enumerate_two_factor_types(6) == [(6,), (3, 3)]
        assert enumerate_two_factor_types(7) == [(7,), (4, 3)]
        assert enumerate_two_factor_types(9) == [(9,), (6, 3), (5, 4), (3, 3, 3)]

    @pytest.mark.parametrize("n", range(3, 16))
    def test_sums(self, n):
        types = enumerate_two_factor_types(n)
        assert len(set(types)) == len(types)
        for t in types:
            assert sum(t) == n and min(t) >= 3 and list(t) == sorted(t, reverse=True)

    @pytest.mark.parametrize("ct", [(6,), (3, 3), (4, 3, 3), (5, 5)])
    def test_automorphisms(self, ct):
        autos = [tuple(s) for s in factor_automorphisms(ct)]
        assert len(set(autos)) == len(autos) == automorphism_count(ct)

    def test_first_partner_candidates(self):
        assert first_partner_candidates((10,)) == [2, 3, 4, 5]
        assert first_partner_candidates((4, 3, 3)) == [2, 4]


class TestExhaustive:
    def test_gamma1_8(self):
        assert exhaustive_gamma(8, 1).gamma == 5

    def test_gamma0_6(self):
        assert exhaustive_gamma(6, 0).gamma == 6

    def test_gamma1_10(self):
        res = exhaustive_gamma(10, 1)
        assert res.gamma == 6
        # The witness must reach the value; the antipodal C10 is one such graph.
        assert min_chord_cycle(res.witness, 1).length == 6

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_tables(self, n):
        vals = [r.gamma for r in exhaustive_gamma_table(n, 5)]
        assert vals[0] == n and vals[1] == n // 2 + 1
        assert all(b <= a for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_pruning_sound(self, n):
        full = [r.gamma for r in exhaustive_gamma_table(n, 4)]
        first = [r.gamma for r in exhaustive_gamma_table(n, 4, SearchOptions(prune="first"))]
        none = [r.gamma for r in exhaustive_gamma_table(n, 4, SearchOptions(prune="none"))]
        assert full == first == none

    def test_pruning_reduces_work(self):
        full = exhaustive_gamma(10, 2).decompositions_examined
        none = exhaustive_gamma(10, 2, SearchOptions(prune="none")).decompositions_examined
        assert full < none

    @pytest.mark.parametrize("n", [6, 8, 10])
    def test_witness_reproducible(self, n):
        for r in exhaustive_gamma_table(n, 3):
            again = parse_decomp(serialize_decomp(r.witness))
            assert validate(again) == []
            assert min_chord_cycle(again, r.k).length == r.gamma

    @pytest.mark.parametrize("n", [6, 8, 10])
    def test_within_bounds(self, n):
        for r in exhaustive_gamma_table(n, 6):
            rep = gamma_bounds(r.k, n)
            lo, hi = rep.assertable_lower(), rep.assertable_upper()
            assert lo is None or lo <= r.gamma
            assert hi is None or r.gamma <= hi

    def test_deterministic_witness(self):
        a = exhaustive_gamma(8, 2)
        b = exhaustive_gamma(8, 2)
        assert serialize_decomp(a.witness) == serialize_decomp(b.witness)

    def test_threads_do_not_change_result(self):
        one = exhaustive_gamma_table(10, 3)
        many = exhaustive_gamma_table(10, 3, SearchOptions(threads=2))
        assert [(r.gamma, serialize_decomp(r.witness)) for r in one] == \
               [(r.gamma, serialize_decomp(r.witness)) for r in many]

    def test_limits(self):
        with pytest.raises(ValueError):
            exhaustive_gamma(16, 2)
        with pytest.raises(ValueError):
            exhaustive_gamma(9, 2)


class TestCheckpoint:
    def test_resume(self, tmp_path):
        path = tmp_path / "ckpt.txt"
        first = exhaustive_gamma_table(10, 3, SearchOptions(checkpoint=path))
        lines = path.read_text().splitlines()
        assert lines[0].startswith("#") and "n=10 k_max=3" in lines[1]
        units = [l for l in lines if not l.startswith("#")]
        assert len(units) == sum(len(first_partner_candidates(t)) for t in enumerate_two_factor_types(10))
        # Drop half the units, as if interrupted, and resume.
        path.write_text("\n".join(lines[:2] + units[: len(units) // 2]) + "\n")
        again = exhaustive_gamma_table(10, 3, SearchOptions(checkpoint=path))
        assert [r.gamma for r in again] == [r.gamma for r in first]
        assert len([l for l in path.read_text().splitlines() if not l.startswith("#")]) == len(units)

    def test_mismatched_checkpoint(self, tmp_path):
        path = tmp_path / "ckpt.txt"
        exhaustive_gamma_table(8, 2, SearchOptions(checkpoint=path))
        with pytest.raises(ValueError):
            exhaustive_gamma_table(8, 3, SearchOptions(checkpoint=path))
