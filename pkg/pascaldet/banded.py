"""Recursions for banded periodic matrices and periodic diagonal constructions.

The only transfer matrix built explicitly is the 6 x 6 one for constant
pentadiagonal matrices; everything else goes through bounded detection.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from pascaldet.determinants import characteristic_polynomial, det_values
from pascaldet.errors import DegenerateKernel, DomainError, NoRecursionFound, SpecError
from pascaldet.exact import UniPolynomial, to_scalar
from pascaldet.matrices import BandedPeriodicSpec, DenseMatrix, DiagonalConstructionSpec
from pascaldet.recurrence import RecursionReport, detect, feasible_order, symmetry_check
from pascaldet.sequences import GeometricSequence, PeriodicSequence, SequenceSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransferMatrix22:
    """Transfer matrix of a constant (2, 2)-bounded matrix with bands a..e."""

    bands: tuple
    matrix: DenseMatrix

    def char_poly(self) -> UniPolynomial:
        return characteristic_polynomial(self.matrix)


def transfer_matrix_22(a, b, c, d, e) -> TransferMatrix22:
    a, b, c, d, e = map(to_scalar, (a, b, c, d, e))
    rows = (
        (c, -b, a, 0, 0, 0),
        (d, 0, 0, -b, a, 0),
        (0, d, 0, -c, 0, a),
        (e, 0, 0, 0, 0, 0),
        (0, e, 0, 0, 0, 0),
        (0, 0, 0, e, 0, 0),
    )
    return TransferMatrix22(bands=(a, b, c, d, e), matrix=DenseMatrix.from_rows(rows))


def recursion_order_bound(s: int, t: int) -> int:
    if s < 0 or t < 0 or s + t < 1:
        raise DomainError(f"need s, t >= 0 and s + t >= 1, got ({s}, {t})")
    return math.comb(s + t, s)


def _detect_shifting(w, step: int, d_cap: Optional[int], min_verify: int, label: str) -> RecursionReport:
    """Detect from the earliest window start that yields a verified recursion."""
    start = 1
    last_error: Exception = NoRecursionFound(f"{label}: no terms")
    while True:
        d_max = feasible_order(len(w), step, min_verify, start)
        if d_cap is not None:
            d_max = min(d_max, d_cap)
        if d_max < 1:
            raise NoRecursionFound(f"{label}: {last_error} (ran out of terms at start {start})")
        try:
            report = detect(w, step, d_max, min_verify, start=start)
        except (DegenerateKernel, NoRecursionFound) as exc:
            last_error = exc
            logger.info("%s: %s; moving window start to %d", label, exc, start + 1)
            start += 1
            continue
        logger.debug("%s: order %d recursion from n=%d", label, report.d, report.valid_from)
        return report


def detect_banded_recursion(spec: BandedPeriodicSpec, n_budget: int, jobs: int = 1,
                            min_verify: int = 5) -> RecursionReport:
    """Step-p recursion of order <= C(s+t, s) for det(A(n)), n = 1..n_budget.

    Residue classes modulo p are fitted jointly, so their coefficients agree
    by construction.
    """
    bound = recursion_order_bound(spec.s, spec.t)
    needed = spec.p * (2 * bound + 1 + min_verify)
    if n_budget < needed:
        raise DomainError(f"n_budget {n_budget} below the {needed} terms the order bound requires")
    w = det_values(spec, n_budget, jobs=jobs)
    return _detect_shifting(w, spec.p, bound, min_verify, f"banded (s={spec.s}, t={spec.t}, p={spec.p})")


def diagonal_period(gamma: SequenceSpec) -> int:
    if isinstance(gamma, PeriodicSequence):
        return len(gamma.period)
    if isinstance(gamma, GeometricSequence) and gamma.ratio in (1, -1):
        return 1 if gamma.ratio == 1 else 2
    raise SpecError(
        f"{gamma.kind} diagonal has no constant-coefficient recursion; use the diagonal_geometric oracle"
    )


def detect_diagonal_recursion(gamma: SequenceSpec, u1, u2, l1, l2, n_budget: int,
                              rho=None, jobs: int = 1, min_verify: int = 2) -> RecursionReport:
    """Step-p recursion for det(D_gamma(n)) with p the period of gamma.

    When ``rho`` is given, the squared symmetry of the coefficients is
    checked and a mismatch is logged.
    """
    p = diagonal_period(gamma)
    spec = DiagonalConstructionSpec(gamma=gamma, u1=u1, u2=u2, l1=l1, l2=l2)
    w = det_values(spec, n_budget, jobs=jobs)
    report = _detect_shifting(w, p, None, min_verify, f"diagonal (p={p})")
    if rho is not None:
        if symmetry_check(report.normalized(), rho):
            logger.info("coefficients symmetric for rho=%s", rho)
        else:
            logger.warning("coefficients not symmetric for rho=%s", rho)
    return report
