"""Labeled enumeration, canonical codes, class streams and sharding."""

import pytest

from mopcount.enumeration import (
    CanonicalCode,
    _unique_sorted_codes,
    canonical_code,
    class_codes,
    enumerate_classes,
    enumerate_labeled,
    shard,
    triangulation_from_code,
)
from mopcount.triangulations import Triangulation, to_graph, validate_triangulation

import oracles


class TestLabeled:
    def test_counts_match_catalan(self):
        for n in range(3, 13):
            assert sum(1 for _ in enumerate_labeled(n)) == oracles.catalan(n - 2)

    def test_triangle_is_empty_set(self):
        (only,) = list(enumerate_labeled(3))
        assert only.diagonals == frozenset()

    def test_square(self):
        got = {t.diagonals for t in enumerate_labeled(4)}
        assert got == {frozenset({(1, 3)}), frozenset({(2, 4)})}

    def test_no_duplicates(self):
        for n in range(3, 11):
            seen = [t.diagonals for t in enumerate_labeled(n)]
            assert len(seen) == len(set(seen))

    def test_all_valid(self):
        for n in range(3, 10):
            for t in enumerate_labeled(n):
                assert validate_triangulation(t) is None

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_labeled(2))
        with pytest.raises(ValueError):
            list(enumerate_labeled(21))


class TestCanonicalCode:
    def test_rotation_equivalence(self):
        a = Triangulation.of(5, [(1, 3), (1, 4)])
        b = Triangulation.of(5, [(2, 4), (2, 5)])
        assert canonical_code(a) == canonical_code(b)

    def test_distinct_for_distinct_degrees(self):
        fan6 = Triangulation.of(6, [(1, 3), (1, 4), (1, 5)])
        rotor6 = Triangulation.of(6, [(1, 3), (3, 5), (1, 5)])
        assert canonical_code(fan6) != canonical_code(rotor6)

    def test_reflection_equivalence(self):
        for n in range(4, 9):
            for t in enumerate_labeled(n):
                mirrored = Triangulation.of(
                    n, [(n + 1 - a, n + 1 - b) for a, b in t.diagonals]
                )
                assert canonical_code(t) == canonical_code(mirrored)

    def test_code_roundtrip(self):
        for n in range(3, 9):
            for t in enumerate_labeled(n):
                code = canonical_code(t)
                rep = triangulation_from_code(code)
                assert canonical_code(rep) == code
                assert validate_triangulation(rep) is None

    def test_hex_roundtrip(self):
        code = canonical_code(Triangulation.of(5, [(1, 3), (1, 4)]))
        assert CanonicalCode.from_hex(code.hex()) == code


class TestClasses:
    def test_counts_match_burnside_oracle(self):
        for n in range(3, 11):
            diagonal_sets = [t.diagonals for t in enumerate_labeled(n)]
            expected = oracles.burnside_class_count(n, diagonal_sets)
            assert len(class_codes(n)) == expected

    def test_seven_gon_has_four_classes(self):
        assert len(list(enumerate_classes(7))) == 4

    def test_square_single_class(self):
        assert len(list(enumerate_classes(4))) == 1

    def test_hexagon_three_classes(self):
        assert len(list(enumerate_classes(6))) == 3

    def test_emitted_in_ascending_code_order(self):
        for n in (6, 7, 8):
            codes = [canonical_code(t) for t in enumerate_classes(n)]
            assert codes == sorted(codes)
            assert len(set(codes)) == len(codes)

    def test_distinct_codes_are_nonisomorphic(self):
        for n in range(4, 10):
            reps = [to_graph(t) for t in enumerate_classes(n)]
            for i in range(len(reps)):
                for j in range(i + 1, len(reps)):
                    assert not oracles.graphs_isomorphic(reps[i], reps[j])

    def test_every_labeled_matches_some_class(self):
        for n in (6, 7, 8):
            classes = set(class_codes(n))
            for t in enumerate_labeled(n):
                assert canonical_code(t) in classes

    def test_spill_dedup_matches_in_memory(self):
        raw = [canonical_code(t).code for t in enumerate_labeled(9)]
        assert _unique_sorted_codes(iter(raw), spill=True) == _unique_sorted_codes(
            iter(raw), spill=False
        )


class TestShard:
    def test_depth_zero_single_shard(self):
        shards = shard(8, 0)
        assert len(shards) == 1
        assert sum(1 for _ in shards[0]) == oracles.catalan(6)

    def test_square_depth_one(self):
        shards = shard(4, 1)
        assert len(shards) == 2
        assert sum(sum(1 for _ in s) for s in shards) == 2

    def test_disjoint_union_equals_labeled(self):
        full = {t.diagonals for t in enumerate_labeled(10)}
        for depth in (1, 2, 3):
            seen = []
            for s in shard(10, depth):
                seen.extend(t.diagonals for t in s)
            assert len(seen) == oracles.catalan(8)
            assert set(seen) == full

    def test_deterministic_assignment(self):
        a = [[t.diagonals for t in s] for s in shard(9, 2)]
        b = [[t.diagonals for t in s] for s in shard(9, 2)]
        assert a == b
