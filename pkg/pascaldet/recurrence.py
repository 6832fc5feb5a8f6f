"""Linear recursion detection and verification for determinant sequences.

Detection follows the Hankel procedure: for increasing d, solve for a kernel
vector (D_d, ..., D_1, -1) of the order-(d+1) Hankel matrix of the window,
then check the resulting recursion on every remaining term.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pascaldet.determinants import det_values
from pascaldet.errors import DegenerateKernel, InsufficientTerms, NoRecursionFound, SpecError, SpecMismatch
from pascaldet.exact import ScalarField, UniPolynomial, format_scalar, to_scalar
from pascaldet.matrices import DenseMatrix, GeneralizedPascalSpec
from pascaldet.sequences import (
    GeometricSequence,
    LinearRecurrenceSequence,
    PeriodicSequence,
    SequenceSpec,
    generate,
)

logger = logging.getLogger(__name__)

# observed orders for symmetric triangles P_{alpha,alpha}, indexed by the order of alpha
SYMMETRIC_ORDERS = {1: 1, 2: 2, 3: 5, 4: 14, 5: 41, 6: 122}


class RecursionReport(BaseModel):
    """w_n = sum_{i=1..d} D_i w_{n - i*step} for every n >= valid_from."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=1)
    coeffs: tuple[ScalarField, ...]
    step: int = Field(default=1, ge=1)
    valid_from: int = Field(ge=1)
    verified_extra: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.coeffs) != self.d:
            raise ValueError(f"order {self.d} needs {self.d} coefficients, got {len(self.coeffs)}")
        if self.valid_from < self.d * self.step + 1:
            raise ValueError("valid_from must leave room for d * step earlier terms")
        return self

    def char_poly(self) -> UniPolynomial:
        coefficients = [Fraction(0)] * (self.d + 1)
        coefficients[self.d] = Fraction(1)
        for i, value in enumerate(self.coeffs, start=1):
            coefficients[self.d - i] = -value
        return UniPolynomial(tuple(coefficients))

    def normalized(self) -> "RecursionReport":
        """Drop trailing zero coefficients; the recursion itself is unchanged."""
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return self.model_copy(update={"d": len(coeffs), "coeffs": tuple(coeffs)})

    def extend(self, w: Sequence, count: int) -> list[Fraction]:
        """Append ``count`` terms to ``w`` by running the recursion forward."""
        out = [to_scalar(v) for v in w]
        for _ in range(count):
            n = len(out)
            out.append(sum(
                (c * out[n - i * self.step] for i, c in enumerate(self.coeffs, start=1)),
                Fraction(0),
            ))
        return out

    def describe(self) -> str:
        terms = " + ".join(
            f"({format_scalar(c)}) w(n-{i * self.step})" for i, c in enumerate(self.coeffs, start=1)
        )
        return f"w(n) = {terms} for n >= {self.valid_from}"


def hankel(w: Sequence, d: int) -> DenseMatrix:
    """(d+1) x (d+1) Hankel matrix H[r][c] = w_{r+c+1} (w_1 is w[0])."""
    if d < 0:
        raise InsufficientTerms(f"order must be nonnegative, got {d}")
    if len(w) < 2 * d + 1:
        raise InsufficientTerms(f"Hankel matrix of order {d + 1} needs {2 * d + 1} terms, got {len(w)}")
    return DenseMatrix.from_function(d + 1, lambda r, c: w[r + c])


def _reduce(rows: list[list[Fraction]], unknowns: int) -> tuple[int, bool, list[Fraction]]:
    """Reduced row echelon form of [A | b].

    Returns rank(A), whether the system is inconsistent, and the solution with
    free unknowns set to zero.
    """
    m = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(unknowns + 1):
        swap = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if swap is None:
            continue
        m[r], m[swap] = m[swap], m[r]
        pivot = m[r][c]
        m[r] = [v / pivot for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    inconsistent = unknowns in pivots
    solution = [Fraction(0)] * unknowns
    for row_index, c in enumerate(pivots):
        if c < unknowns:
            solution[c] = m[row_index][unknowns]
    rank_a = sum(1 for c in pivots if c < unknowns)
    return rank_a, inconsistent, solution


def feasible_order(n_terms: int, step: int = 1, min_verify: int = 0, start: int = 1) -> int:
    """Largest d_max that ``detect`` accepts for a window of ``n_terms``."""
    available = n_terms - (start - 1) - min_verify * step
    return max((available // step - 1) // 2, 0)


def _count_extra(n_terms: int, d: int, step: int, valid_from: int) -> int:
    return max(n_terms - (valid_from + (d + 1) * step) + 1, 0)


def detect(w: Sequence, step: int = 1, d_max: int = 4, min_verify: int = 0,
           start: int = 1) -> RecursionReport:
    """Minimal recursion of step ``step`` fitting w_start, w_start+1, ...

    Residue classes modulo ``step`` share the coefficients; classes that are
    identically zero in the window are skipped.
    """
    w = [to_scalar(v) for v in w]
    if step < 1 or d_max < 1 or min_verify < 0 or start < 1:
        raise SpecError("step, d_max and start must be positive, min_verify nonnegative")
    needed = start - 1 + step * (2 * d_max + 1) + min_verify * step
    if len(w) < needed:
        raise InsufficientTerms(
            f"detecting order <= {d_max} with step {step} needs {needed} terms, got {len(w)}"
        )

    firsts = [
        f for f in range(start, start + step)
        if any(w[n - 1] != 0 for n in range(f, len(w) + 1, step))
    ]
    if not firsts:
        valid_from = start + step
        return RecursionReport(
            d=1, coeffs=(Fraction(0),), step=step, valid_from=valid_from,
            verified_extra=_count_extra(len(w), 1, step, valid_from),
        )

    for d in range(1, d_max + 1):
        rows = []
        for first in firsts:
            for m in range(d + 1):
                n = first + (d + m) * step
                rows.append([w[n - 1 - i * step] for i in range(d, 0, -1)] + [w[n - 1]])
        rank_a, inconsistent, solution = _reduce(rows, d)
        if inconsistent:
            if rank_a < d:
                raise DegenerateKernel(
                    f"Hankel kernel at order {d} has no vector ending in -1 (start {start})"
                )
            logger.debug("order %d: Hankel matrix nonsingular, trying %d", d, d + 1)
            continue
        valid_from = start + d * step
        report = RecursionReport(
            d=d,
            coeffs=tuple(reversed(solution)),
            step=step,
            valid_from=valid_from,
            verified_extra=_count_extra(len(w), d, step, valid_from),
        )
        if verify(w, report):
            logger.debug("found order %d recursion: %s", d, report.describe())
            return report
        logger.debug("order %d kernel vector fails on later terms", d)
    raise NoRecursionFound(f"no recursion of order <= {d_max} (step {step}) from index {start}")


def verify(w: Sequence, report: RecursionReport) -> bool:
    w = [to_scalar(v) for v in w]
    for n in range(report.valid_from, len(w) + 1):
        expected = sum(
            (c * w[n - 1 - i * report.step] for i, c in enumerate(report.coeffs, start=1)),
            Fraction(0),
        )
        if expected != w[n - 1]:
            return False
    return True


def first_failure(w: Sequence, report: RecursionReport) -> Optional[int]:
    """Smallest n >= valid_from where the recursion fails, or None."""
    w = [to_scalar(v) for v in w]
    for n in range(report.valid_from, len(w) + 1):
        expected = sum(
            (c * w[n - 1 - i * report.step] for i, c in enumerate(report.coeffs, start=1)),
            Fraction(0),
        )
        if expected != w[n - 1]:
            return n
    return None


# --- order-two pairs ---

def order_two_pair_coeffs(g0, a1, b1, A1, A2, B1, B2) -> tuple[Fraction, Fraction]:
    """(D_1, D_2) of the order-2 recursion of det(P_{alpha,beta}(n)).

    alpha, beta start with g0 and satisfy alpha_k = A1 alpha_{k-1} + A2 alpha_{k-2},
    beta_k = B1 beta_{k-1} + B2 beta_{k-2}, with alpha_1 = a1, beta_1 = b1.
    """
    g0, a1, b1, A1, A2, B1, B2 = map(to_scalar, (g0, a1, b1, A1, A2, B1, B2))
    d1 = -(A1 * b1 + B1 * a1 - 2 * (a1 + b1) + g0 * (A1 * B2 + A2 * B1 - (A2 + B2) + A2 * B2))
    d2 = -order_two_pair_q(g0, a1, b1, A1, A2, B1, B2)
    return d1, d2


def order_two_pair_q(g0, a1, b1, A1, A2, B1, B2) -> Fraction:
    g0, a1, b1, A1, A2, B1, B2 = map(to_scalar, (g0, a1, b1, A1, A2, B1, B2))
    return (A2 * g0 + a1 + (1 - A1 - A2) * b1) * (B2 * g0 + b1 + (1 - B1 - B2) * a1)


def order_two_pair_initial(g0, a1, b1) -> tuple[Fraction, Fraction]:
    """d(1), d(2) of the same family."""
    g0, a1, b1 = map(to_scalar, (g0, a1, b1))
    return g0, g0 * (a1 + b1) - a1 * b1


def order_three_pair_q(g0, alpha: Sequence, beta: Sequence, A: Sequence, B: Sequence) -> Fraction:
    """Observed symmetry form for two order-3 sequences (alpha, beta give terms 1 and 2)."""
    g0 = to_scalar(g0)
    a1, a2 = map(to_scalar, alpha[:2])
    b1, b2 = map(to_scalar, beta[:2])
    A1, A2, A3 = map(to_scalar, A)
    B1, B2, B3 = map(to_scalar, B)
    return (A3 * g0 + a1 + a2 + (1 - A1 - A2 - A3) * b1) * (B3 * g0 + b1 + b2 + (1 - B1 - B2 - B3) * a1)


def symmetry_check(report: RecursionReport, q) -> bool:
    """D_{d-i}^2 == q^(d-2i) * D_i^2 for 0 <= i <= d/2, with D_0 = -1."""
    q = to_scalar(q)
    coeffs = [Fraction(-1)] + list(report.coeffs)
    d = report.d
    return all(coeffs[d - i] ** 2 == q ** (d - 2 * i) * coeffs[i] ** 2 for i in range(d // 2 + 1))


# --- harness for pairs of recurrence sequences ---

def recurrence_order(spec: SequenceSpec) -> int:
    if isinstance(spec, LinearRecurrenceSequence):
        return len(spec.coeffs)
    if isinstance(spec, PeriodicSequence):
        return len(spec.period)
    if isinstance(spec, GeometricSequence):
        return 1
    raise SpecError(f"{spec.kind} sequence does not carry a linear recurrence")


class HarnessReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: Literal["found", "open"]
    report: Optional[RecursionReport] = None
    order_alpha: int
    order_beta: int
    generic_order: int
    matches_generic: Optional[bool] = None
    symmetric: bool
    symmetric_order: Optional[int] = None
    symmetric_guess: Optional[int] = None
    matches_symmetric: Optional[bool] = None
    start: int = 1
    n_budget: int


def recursion_harness(alpha: SequenceSpec, beta: SequenceSpec, d_guess: int, n_budget: int,
                      jobs: int = 1, min_verify: int = 2) -> HarnessReport:
    """Run the Hankel procedure on det(P_{alpha,beta}(n)), n = 1..n_budget.

    A degenerate kernel moves the window start forward by one. No recursion
    within the budget is reported as an open instance.
    """
    a, b = recurrence_order(alpha), recurrence_order(beta)
    if generate(alpha, 1)[0] != generate(beta, 1)[0]:
        raise SpecMismatch("alpha and beta must share their first term")
    w = det_values(GeneralizedPascalSpec(alpha=alpha, beta=beta), n_budget, jobs=jobs)

    symmetric = alpha == beta
    generic = math.comb(a + b - 2, a - 1)
    found: Optional[RecursionReport] = None
    start = 1
    while True:
        d_max = min(d_guess, feasible_order(len(w), 1, min_verify, start))
        if d_max < 1:
            logger.warning("budget of %d determinants exhausted before a recursion was found", n_budget)
            break
        try:
            found = detect(w, 1, d_max, min_verify, start=start)
            break
        except DegenerateKernel as exc:
            logger.info("%s; moving window start to %d", exc, start + 1)
            start += 1
        except NoRecursionFound as exc:
            logger.warning("open instance: %s", exc)
            break

    fields = dict(
        order_alpha=a,
        order_beta=b,
        generic_order=generic,
        symmetric=symmetric,
        start=start,
        n_budget=n_budget,
    )
    if symmetric:
        fields["symmetric_order"] = SYMMETRIC_ORDERS.get(a)
        fields["symmetric_guess"] = (3 ** (a - 1) + 1) // 2
    if found is None:
        return HarnessReport(status="open", **fields)
    normalized = found.normalized()
    fields["matches_generic"] = normalized.d == generic
    if symmetric and fields["symmetric_order"] is not None:
        fields["matches_symmetric"] = normalized.d == fields["symmetric_order"]
    return HarnessReport(status="found", report=found, **fields)
