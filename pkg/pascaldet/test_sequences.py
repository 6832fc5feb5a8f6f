"""
Test cases for sequence specs and transforms.
Run with: pytest pascaldet/test_sequences.py -v
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from pascaldet.errors import InsufficientTerms, SpecError
from pascaldet.sequences import (
    alternate_signs,
    duplicate_terms,
    explicit,
    generate,
    geometric,
    interleave_even,
    linear_recurrence,
    named,
    parse_sequence,
    periodic,
    transformed,
)


class TestNamedSequences:
    """Test the built-in named sequences."""

    def test_fibonacci(self):
        assert generate(named("fibonacci"), 7) == [0, 1, 1, 2, 3, 5, 8]

    def test_catalan(self):
        assert generate(named("catalan"), 6) == [1, 1, 2, 5, 14, 42]

    def test_central_binomial(self):
        assert generate(named("central_binomial"), 4) == [1, 2, 6, 20]

    def test_shifted_symplectic(self):
        """The symplectic variants start with a zero."""
        assert generate(named("catalan_shifted_symplectic"), 4) == [0, 1, 1, 2]
        assert generate(named("binomial_shifted_symplectic"), 4) == [0, 1, 2, 6]


class TestSpecKinds:
    """Test each sequence kind."""

    def test_periodic(self):
        assert generate(periodic([1, 2]), 5) == [1, 2, 1, 2, 1]

    def test_geometric(self):
        assert generate(geometric(2, first=3), 4) == [3, 6, 12, 24]

    def test_linear_recurrence(self):
        """Order-2 recurrence from (0, 1) is Fibonacci."""
        assert generate(linear_recurrence((1, 1), (0, 1)), 7) == generate(named("fibonacci"), 7)

    def test_linear_recurrence_checks_extra_initial_terms(self):
        with pytest.raises(ValidationError):
            linear_recurrence((1, 1), (0, 1, 5))

    def test_linear_recurrence_needs_enough_initial_terms(self):
        with pytest.raises(ValidationError):
            linear_recurrence((1, 1, 1), (0, 1))

    def test_explicit_runs_out(self):
        with pytest.raises(InsufficientTerms):
            generate(explicit([1, 2]), 3)

    def test_negative_count(self):
        with pytest.raises(SpecError):
            generate(periodic([1]), -1)

    def test_zero_count(self):
        assert generate(named("catalan"), 0) == []

    def test_parse_from_json_document(self):
        """Scalars arrive as strings in JSON."""
        spec = parse_sequence({"kind": "periodic", "period": ["1", "1/2"]})
        assert generate(spec, 3) == [1, Fraction(1, 2), 1]

    def test_parse_rejects_unknown_kind(self):
        with pytest.raises(ValidationError):
            parse_sequence({"kind": "random"})


class TestTransforms:
    """Test the sequence transforms."""

    def test_alternate_signs(self):
        assert alternate_signs([1, 2, 3]) == [1, -2, 3]

    def test_interleave_even(self):
        assert interleave_even([1, 2]) == [0, 1, 0, 2]

    def test_duplicate_terms(self):
        assert duplicate_terms([1, 2]) == [0, 1, 1, 2]

    def test_transformed_negate(self):
        assert generate(transformed("negate", periodic([1, 2])), 3) == [-1, -2, -1]

    def test_transformed_interleave_odd_count(self):
        spec = transformed("interleave_even", named("fibonacci"))
        assert generate(spec, 5) == [0, 0, 0, 1, 0]

    def test_twist(self):
        assert generate(transformed("twist", periodic([1]), factor=2), 3) == [1, 2, 4]

    def test_twist_needs_nonzero_factor(self):
        with pytest.raises(ValidationError):
            transformed("twist", periodic([1]))
        with pytest.raises(ValidationError):
            transformed("twist", periodic([1]), factor=0)

    def test_shift_and_prepend(self):
        fib = named("fibonacci")
        assert generate(transformed("shift", fib, offset=2), 3) == [1, 2, 3]
        assert generate(transformed("prepend_zero", periodic([1])), 3) == [0, 1, 1]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
