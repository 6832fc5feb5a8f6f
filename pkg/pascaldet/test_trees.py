"""
Test cases for the even symplectic tree and the sympletric search.
Run with: pytest pascaldet/test_trees.py -v
"""

from itertools import combinations
from unittest.mock import patch

import pytest

from pascaldet.errors import DegreeAssertionFailed, DomainError, PatternViolated
from pascaldet.trees import (
    SympletricPath,
    enumerate_even_tree,
    even_symplectic_det,
    explore_sympletric,
    format_even_tree_table,
    next_even_beta,
    sympletric_det,
    sympletric_extensions,
    sympletric_target,
)


class TestEvenTree:
    """Test the even symplectic unimodular tree."""

    def test_single_term_prefix(self):
        assert even_symplectic_det((1,)) == 1

    def test_next_center(self):
        assert next_even_beta(()) == 0
        assert next_even_beta((1, 1, 1, 1, 1)) == 0
        assert next_even_beta((1, 1, -1, -7, 69)) == 434748

    def test_enumerate_depth_six(self):
        paths = enumerate_even_tree(6)
        assert len(paths) == 16
        assert paths[0].choices == (1, 1, 1, 1, 1)
        assert paths[0].next_center == 0
        assert paths[1].choices == (1, 1, 1, 1, -1)
        assert paths[1].next_center == -100

    def test_negative_root_is_global_negation(self):
        plus = enumerate_even_tree(4)
        minus = enumerate_even_tree(4, root_sign=-1)
        assert [p.negated() for p in plus] == minus
        assert minus[0].choices[0] == -1

    def test_depth_one_ignores_sign(self):
        """The single depth-1 path is the bare root center."""
        paths = enumerate_even_tree(1, root_sign=-1)
        assert paths == enumerate_even_tree(1)
        assert len(paths) == 1
        assert paths[0].choices == ()
        assert paths[0].next_center == 0

    def test_paths_diverge_around_shared_center(self):
        """Two paths first differ by 2 in one column, straddling the center forced by their common prefix."""
        paths = enumerate_even_tree(6)
        for left, right in combinations(paths, 2):
            m = next(i for i, (x, y) in enumerate(zip(left.prefix, right.prefix)) if x != y)
            assert left.prefix[:m] == right.prefix[:m]
            assert abs(left.prefix[m] - right.prefix[m]) == 2
            center = next_even_beta(left.prefix[:m])
            assert left.prefix[m] + right.prefix[m] == 2 * center
            assert left.centers[m] == right.centers[m] == center

    def test_prefix_from_centers(self):
        path = enumerate_even_tree(6)[4]
        assert path.prefix == (1, 1, -1, -7, 69)

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            enumerate_even_tree(0)
        with pytest.raises(DomainError):
            enumerate_even_tree(3, root_sign=2)

    def test_table_layout(self):
        frame = format_even_tree_table(enumerate_even_tree(3))
        assert list(frame.columns) == ["1", "2", "next"]
        assert frame.iloc[0]["1"] == "0+"
        assert frame.iloc[1]["2"] == "0-"


class TestSympletric:
    """Test the sympletric extension search."""

    def test_targets(self):
        assert [sympletric_target(k) for k in range(1, 6)] == [0, 1, 2, 4, 8]

    def test_root_determinants(self):
        assert [sympletric_det((0, 1, 1)[:k]) for k in (1, 2, 3)] == [0, 1, 2]

    def test_extensions(self):
        assert sympletric_extensions((0, 1, 1)) == [2, 0]
        assert sympletric_extensions((0, 1, 1, 2, 3, 5, 8)) == [13, 11]
        assert sympletric_extensions((0, 1, 1, 0, -1, -1, 0)) == [3, 1]

    @pytest.mark.parametrize("alpha", [
        (0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610),
        (0, 1, 1, 0, -1, -1) * 2 + (0, 1, 1, 0),
    ])
    def test_sympletric_sequences(self, alpha):
        """Fibonacci and the 6-periodic sequence hit every target up to order 16."""
        for k in range(1, 17):
            assert sympletric_det(alpha[:k]) == sympletric_target(k)

    def test_pattern_violated(self):
        with pytest.raises(PatternViolated):
            sympletric_extensions((0, 1, 2))
        with pytest.raises(PatternViolated):
            sympletric_extensions((0, 1, 1, 5))

    def test_constant_miss_has_no_extension(self):
        def fake(alpha):
            return sympletric_target(len(alpha)) if len(alpha) <= 3 else 5

        with patch("pascaldet.trees.sympletric_det", side_effect=fake):
            assert sympletric_extensions((0, 1, 1)) == []

    def test_constant_hit_is_rejected(self):
        def fake(alpha):
            return sympletric_target(len(alpha))

        with patch("pascaldet.trees.sympletric_det", side_effect=fake):
            with pytest.raises(DegreeAssertionFailed):
                sympletric_extensions((0, 1, 1))

    def test_explore_one_level(self):
        leaves = explore_sympletric(4)
        assert [leaf.prefix for leaf in leaves] == [(0, 1, 1, 2), (0, 1, 1, 0)]
        assert [leaf.extensions for leaf in leaves] == [(5, 3), (1, -1)]
        assert [leaf.label() for leaf in leaves] == ["4±1", "0±1"]

    def test_explore_too_short(self):
        with pytest.raises(DomainError):
            explore_sympletric(2)

    def test_label_without_pair(self):
        path = SympletricPath(prefix=(0, 1, 1), extensions=(3,))
        assert path.center is None
        assert path.label() == "{3}"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
