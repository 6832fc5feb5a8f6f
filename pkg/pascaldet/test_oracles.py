"""
Test cases for closed-form oracles and relational identities.
Run with: pytest pascaldet/test_oracles.py -v
"""

import random
from fractions import Fraction
from unittest.mock import patch

import pytest

from pascaldet.determinants import det, det_values
from pascaldet.errors import DegenerateKernel, DomainError, NoRecursionFound, SpecError, UnsupportedFamily
from pascaldet.matrices import GeneralizedPascalSpec
from pascaldet.oracles import (
    IDENTITIES,
    OracleFamily,
    counterpart_spec,
    cross_check,
    oracle_det,
    periodic3_pair_recursion,
    symmetric_order3_initial,
    symmetric_order3_recursion,
    symmetric_periodic3_recursion,
    verify_identity,
)
from pascaldet.recurrence import detect, hankel, verify
from pascaldet.sequences import linear_recurrence, periodic

ORACLE_CASES = [
    ("shifted_pascal", {"s": 1, "t": 2}),
    ("shifted_pascal", {"s": 3, "t": 0}),
    ("inverse_binomial", {"s": 0, "t": 0}),
    ("inverse_binomial", {"s": 1, "t": 2}),
    ("rank_one_driven", {"alpha": {"kind": "periodic", "period": ["2", "1"]},
                         "beta": {"kind": "geometric", "ratio": "3", "first": "5"}}),
    ("weighted_pascal", {"rho": "2", "sigma": "3", "x": "5"}),
    ("weighted_pascal_antisymmetric", {"rho": "2", "x": "3"}),
    ("symplectic_ones", {}),
    ("symplectic_naturals", {}),
    ("geometric_pair", {"A": "2", "B": "3"}),
    ("symplectic_geometric", {"A": "2", "B": "3"}),
    ("ballot_difference_a", {"k": 0}),
    ("ballot_difference_a", {"k": 3}),
    ("ballot_difference_b", {"k": 2}),
    ("symplectic_ballot_sqrt", {"k": 3}),
    ("diagonal_geometric", {"u1": "1", "u2": "2", "l1": "3", "l2": "1", "x": "2"}),
    ("power_distance", {"a": "2"}),
    ("diagonal_degenerate", {"gamma": {"kind": "periodic", "period": ["1", "2"]},
                             "u1": "1", "l1": "1", "l2": "1"}),
]


def _assert_printed(dets, printed):
    """The printed recursion holds, and detection at its order recovers it when the kernel is unique."""
    assert verify(dets, printed)
    try:
        found = detect(dets, d_max=printed.d, min_verify=3)
    except (DegenerateKernel, NoRecursionFound):
        return
    assert verify(dets, found)
    assert found.d <= printed.d
    if found.d == printed.d and det(hankel(dets, printed.d - 1)) != 0:
        assert found.coeffs == printed.coeffs


class TestOracleValues:
    """Test closed forms at known points."""

    def test_shifted_pascal(self):
        assert oracle_det("shifted_pascal", {"s": 1, "t": 1}, 5) == 6
        assert oracle_det("shifted_pascal", {"s": 2, "t": 2}, 2) == 20

    def test_inverse_binomial(self):
        assert oracle_det("inverse_binomial", {"s": 0, "t": 0}, 2) == Fraction(-1, 2)

    def test_weighted_pascal(self):
        assert oracle_det("weighted_pascal", {"rho": 2, "sigma": 3, "x": 5}, 2) == 4

    def test_symplectic_ballot_sqrt(self):
        assert oracle_det("symplectic_ballot_sqrt", {"k": 2}, 3) == 4

    def test_diagonal_geometric(self):
        params = {"u1": 1, "u2": 1, "l1": 1, "l2": 1, "x": 2}
        assert oracle_det("diagonal_geometric", params, 3) == 98

    def test_power_distance(self):
        assert oracle_det("power_distance", {"a": 2}, 4) == -27

    def test_accepts_enum(self):
        assert oracle_det(OracleFamily.POWER_DISTANCE, {"a": 2}, 2) == -3


class TestOracleParams:
    """Test parameter validation."""

    def test_unknown_family(self):
        with pytest.raises(UnsupportedFamily):
            oracle_det("mystery", {}, 2)

    def test_missing_parameter(self):
        with pytest.raises(UnsupportedFamily):
            oracle_det("shifted_pascal", {"s": 1}, 2)

    def test_unexpected_parameter(self):
        with pytest.raises(UnsupportedFamily):
            oracle_det("power_distance", {"a": 2, "b": 3}, 2)

    def test_negative_shift(self):
        with pytest.raises(UnsupportedFamily):
            oracle_det("shifted_pascal", {"s": -1, "t": 0}, 2)

    def test_float_rejected(self):
        with pytest.raises(UnsupportedFamily):
            oracle_det("power_distance", {"a": 0.5}, 2)

    def test_counterpart_for_symplectic_family(self):
        spec = counterpart_spec("symplectic_ones")
        assert isinstance(spec, GeneralizedPascalSpec)


class TestCrossCheck:
    """Test every oracle against the engine."""

    @pytest.mark.parametrize("family,params", ORACLE_CASES)
    def test_oracle_matches_engine(self, family, params):
        report = cross_check(family, params, (1, 5))
        assert report.holds, report.first_failure
        assert report.checked == (1, 2, 3, 4, 5)

    @pytest.mark.parametrize("s", range(5))
    def test_shifted_pascal_grid(self, s):
        for t in range(5):
            assert cross_check("shifted_pascal", {"s": s, "t": t}, (1, 12)).holds

    @pytest.mark.parametrize("s", range(4))
    def test_inverse_binomial_grid(self, s):
        for t in range(4):
            assert cross_check("inverse_binomial", {"s": s, "t": t}, (1, 10)).holds

    @pytest.mark.parametrize("family", ["symplectic_ones", "symplectic_naturals"])
    def test_symplectic_alternation(self, family):
        report = cross_check(family, {}, (1, 40))
        assert report.holds, report.first_failure

    @pytest.mark.parametrize("k", range(6))
    def test_symplectic_ballot_roots(self, k):
        assert cross_check("symplectic_ballot_sqrt", {"k": k}, (1, 6)).holds

    def test_random_geometric_parameters(self):
        rng = random.Random(7)
        for _ in range(10):
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            assert cross_check("geometric_pair", {"A": a, "B": b}, (1, 8)).holds
            assert cross_check("symplectic_geometric", {"A": a, "B": b}, (1, 8)).holds

    def test_random_diagonal_geometric(self):
        rng = random.Random(8)
        for _ in range(10):
            params = {name: rng.randint(-3, 3) for name in ("u1", "u2", "l1", "l2")}
            params["x"] = rng.choice([-3, -2, -1, 1, 2, 3])
            report = cross_check("diagonal_geometric", params, (1, 7))
            assert report.holds, (params, report.first_failure)

    def test_failure_is_reported(self):
        """A wrong closed form fails at the first order."""
        with patch.dict("pascaldet.oracles._FORMULAS",
                        {OracleFamily.POWER_DISTANCE: lambda p, n: Fraction(7)}):
            report = cross_check("power_distance", {"a": 2}, (1, 3))
        assert not report.holds
        assert report.first_failure.n == 1
        assert report.first_failure.left == 1
        assert report.first_failure.right == 7
        assert report.model_dump(mode="json")["first_failure"]["right"] == "7"

    def test_bad_range(self):
        with pytest.raises(DomainError):
            cross_check("power_distance", {"a": 2}, (3, 1))


class TestIdentities:
    """Test the relational identities."""

    @pytest.mark.parametrize("identity,params,n_range", [
        ("pascal_closed_form", {"alpha": {"kind": "named", "name": "catalan"},
                                "beta": {"kind": "periodic", "period": ["1", "3"]}}, (1, 6)),
        ("perturbed_pascal", {"coefficients": [[0, 0, "1"]]}, (1, 5)),
        ("perturbed_pascal", {"coefficients": [[0, 1, "2"], [1, 0, "-1"]]}, (1, 5)),
        ("gram_binomial", {"k": 1}, (1, 4)),
        ("rank_one_entries", {"alpha": {"kind": "named", "name": "fibonacci"},
                              "beta": {"kind": "periodic", "period": ["1"]}}, (1, 5)),
        ("ballot_entries", {}, (1, 6)),
        ("interleave_duplicate", {"beta": {"kind": "explicit", "terms": ["1", "1", "-1"]}}, (1, 3)),
        ("diagonal_scaling", {"gamma": {"kind": "periodic", "period": ["1", "2"]},
                              "u1": "1", "u2": "2", "l1": "3", "l2": "1",
                              "lam": "2", "mu": "3"}, (1, 4)),
        ("catalan_binomial_ratio", {}, (1, 5)),
        ("factorial_hankel", {"k": 0}, (1, 5)),
        ("factorial_hankel", {"k": 2}, (1, 4)),
        ("inverse_factorial_hankel", {"k": 1}, (1, 4)),
    ])
    def test_identity_holds(self, identity, params, n_range):
        report = verify_identity(identity, params, n_range)
        assert report.holds, report.first_failure

    def test_interleave_duplicate_fails_for_catalan(self):
        """Beyond the established instance the identity breaks and the failure is reported."""
        report = verify_identity("interleave_duplicate", {"beta": {"kind": "named", "name": "catalan"}}, (1, 5))
        assert not report.holds
        assert report.first_failure.n == 4
        assert (report.first_failure.left, report.first_failure.right) == (64, 121)
        assert report.checked == (1, 2, 3, 4)

    def test_every_identity_is_listed(self):
        assert len(IDENTITIES) == 10

    def test_unknown_identity(self):
        with pytest.raises(UnsupportedFamily):
            verify_identity("nope", {}, (1, 2))

    def test_perturbed_needs_coefficients(self):
        with pytest.raises(UnsupportedFamily):
            verify_identity("perturbed_pascal", {}, (1, 2))

    def test_diagonal_scaling_rejects_zero_factor(self):
        params = {"gamma": {"kind": "periodic", "period": ["1"]},
                  "u1": 1, "u2": 1, "l1": 1, "l2": 1, "lam": 0, "mu": 1}
        with pytest.raises(DomainError):
            verify_identity("diagonal_scaling", params, (1, 2))


class TestPrintedRecursions:
    """Test printed recursions against computed determinants."""

    def test_symmetric_order3_constant(self):
        ones = linear_recurrence((1, 0, 0), (1, 1, 1))
        report = symmetric_order3_recursion(ones)
        assert report.coeffs == (5, -10, 10, -5, 1)
        assert symmetric_order3_initial(ones) == (1, 1, 1)
        dets = det_values(GeneralizedPascalSpec(alpha=ones, beta=ones), 10)
        assert verify(dets, report)

    def test_symmetric_order3_needs_order_three(self):
        with pytest.raises(SpecError):
            symmetric_order3_recursion(linear_recurrence((1, 1), (0, 1)))

    def test_symmetric_periodic3_constant(self):
        report = symmetric_periodic3_recursion(1, 1, 1)
        assert report.coeffs[:2] == (16, -87)
        assert sum(report.coeffs) == 1

    def test_symmetric_periodic3_against_engine(self):
        alpha = periodic([1, 2, 3])
        dets = det_values(GeneralizedPascalSpec(alpha=alpha, beta=alpha), 14)
        assert verify(dets, symmetric_periodic3_recursion(1, 2, 3))

    def test_periodic3_pair_constant(self):
        report = periodic3_pair_recursion(1, 1, 1, 1, 1)
        assert report.coeffs[:3] == (19, -135, 522)
        assert sum(report.coeffs) == 1

    def test_symmetric_order3_specializes_to_periodic(self):
        """A 3-periodic sequence is the order-3 recurrence (0, 0, 1)."""
        alpha = linear_recurrence((0, 0, 1), (2, -1, 3))
        assert symmetric_order3_recursion(alpha).coeffs == symmetric_periodic3_recursion(2, -1, 3).coeffs

    def test_symmetric_order3_random(self):
        rng = random.Random(11)
        for _ in range(5):
            coeffs = (rng.randint(-2, 2), rng.randint(-2, 2), rng.choice([-2, -1, 1, 2]))
            initial = (rng.choice([-2, -1, 1, 2]), rng.randint(-3, 3), rng.randint(-3, 3))
            alpha = linear_recurrence(coeffs, initial)
            dets = det_values(GeneralizedPascalSpec(alpha=alpha, beta=alpha), 16)
            assert symmetric_order3_initial(alpha) == tuple(dets[:3])
            _assert_printed(dets, symmetric_order3_recursion(alpha))

    def test_symmetric_periodic3_random(self):
        rng = random.Random(12)
        for _ in range(5):
            values = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(3)]
            alpha = periodic(values)
            dets = det_values(GeneralizedPascalSpec(alpha=alpha, beta=alpha), 14)
            _assert_printed(dets, symmetric_periodic3_recursion(*values))

    def test_periodic3_pair_random(self):
        rng = random.Random(13)
        for _ in range(5):
            g0, a1, a2, b1, b2 = (rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(5))
            alpha, beta = periodic([g0, a1, a2]), periodic([g0, b1, b2])
            dets = det_values(GeneralizedPascalSpec(alpha=alpha, beta=beta), 16)
            _assert_printed(dets, periodic3_pair_recursion(g0, a1, a2, b1, b2))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
