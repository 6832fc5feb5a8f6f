"""Exact determinants, ranks and determinant sequences.

Two engines compute determinants: fraction-free (Bareiss) / rational
elimination, and Dodgson condensation. A memoized cofactor expansion serves
as a brute-force oracle for small orders.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Literal, NamedTuple, Union

import pandas as pd
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict

from pascaldet.errors import (
    DomainError,
    InvariantViolated,
    NotAntisymmetric,
    OddOrder,
    OrderTooLarge,
)
from pascaldet.exact import ScalarField, UniPolynomial, format_scalar, integer_sqrt_exact
from pascaldet.matrices import BandedPeriodicSpec, DenseMatrix, FamilySpec, build

logger = logging.getLogger(__name__)

COFACTOR_MAX_ORDER = 8
Engine = Literal["elimination", "condensation"]


def _bareiss(cells: list[list[int]]) -> int:
    n = len(cells)
    sign, previous = 1, 1
    for k in range(n - 1):
        if cells[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if cells[r][k] != 0), None)
            if swap is None:
                return 0
            cells[k], cells[swap] = cells[swap], cells[k]
            sign = -sign
        pivot = cells[k][k]
        for i in range(k + 1, n):
            lead = cells[i][k]
            row, pivot_row = cells[i], cells[k]
            for j in range(k + 1, n):
                value, rest = divmod(row[j] * pivot - lead * pivot_row[j], previous)
                if rest:
                    raise InvariantViolated("inexact division in fraction-free elimination")
                row[j] = value
        previous = pivot
    return sign * cells[n - 1][n - 1]


def _gauss(cells: list[list[Fraction]]) -> Fraction:
    n = len(cells)
    result = Fraction(1)
    for k in range(n):
        swap = next((r for r in range(k, n) if cells[r][k] != 0), None)
        if swap is None:
            return Fraction(0)
        if swap != k:
            cells[k], cells[swap] = cells[swap], cells[k]
            result = -result
        pivot = cells[k][k]
        result *= pivot
        for i in range(k + 1, n):
            factor = cells[i][k] / pivot
            if factor:
                row, pivot_row = cells[i], cells[k]
                for j in range(k + 1, n):
                    row[j] -= factor * pivot_row[j]
    return result


def det(matrix: DenseMatrix) -> Fraction:
    """Exact determinant; integer matrices take the fraction-free path."""
    if matrix.order == 0:
        return Fraction(1)
    if matrix.is_integer():
        return Fraction(_bareiss([[v.numerator for v in row] for row in matrix.rows]))
    return _gauss([list(row) for row in matrix.rows])


class CondensationResult(NamedTuple):
    value: Fraction
    fallback_used: bool


def det_condensation(matrix: DenseMatrix) -> CondensationResult:
    """Determinant by Dodgson condensation over contiguous minors.

    A zero interior minor makes the condensation step unsolvable; that
    minor is then computed by elimination and ``fallback_used`` is set.
    """
    n = matrix.order
    if n == 0:
        return CondensationResult(Fraction(1), False)
    # minors[(r, c)] holds the size-k contiguous minor at (r, c)
    older = {(r, c): Fraction(1) for r in range(n + 1) for c in range(n + 1)}
    current = {(r, c): matrix[r, c] for r in range(n) for c in range(n)}
    fallback = False
    for size in range(2, n + 1):
        span = n - size + 1
        nxt = {}
        for r in range(span):
            for c in range(span):
                interior = older[(r + 1, c + 1)]
                cross = current[(r, c)] * current[(r + 1, c + 1)] - current[(r, c + 1)] * current[(r + 1, c)]
                if interior == 0:
                    fallback = True
                    logger.debug("condensation fallback at size %d, block (%d, %d)", size, r, c)
                    nxt[(r, c)] = det(matrix.block(r, c, size))
                else:
                    nxt[(r, c)] = cross / interior
        older, current = current, nxt
    return CondensationResult(current[(0, 0)], fallback)


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = math.gcd(g, v)
    return [v // g for v in row] if g > 1 else row


def row_echelon(matrix: DenseMatrix) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form (rows kept primitive) and its pivot columns."""
    n = matrix.order
    cells = []
    for row in matrix.rows:
        scale = math.lcm(*(v.denominator for v in row)) if row else 1
        cells.append(_primitive([int(v * scale) for v in row]))
    pivots: list[int] = []
    r = 0
    for c in range(n):
        swap = next((i for i in range(r, n) if cells[i][c] != 0), None)
        if swap is None:
            continue
        cells[r], cells[swap] = cells[swap], cells[r]
        pivot_row = cells[r]
        for i in range(r + 1, n):
            lead = cells[i][c]
            if lead:
                cells[i] = _primitive([
                    a * pivot_row[c] - lead * b for a, b in zip(cells[i], pivot_row)
                ])
        pivots.append(c)
        r += 1
        if r == n:
            break
    return cells, pivots


def rank(matrix: DenseMatrix) -> int:
    return len(row_echelon(matrix)[1])


def sqrt_det_antisymmetric(matrix: DenseMatrix) -> int:
    """Nonnegative r with r^2 = det for an even-order integer antisymmetric matrix."""
    if not matrix.is_antisymmetric():
        raise NotAntisymmetric("matrix is not antisymmetric")
    if matrix.order % 2:
        raise OddOrder(f"order {matrix.order} is odd")
    if not matrix.is_integer():
        raise DomainError("entries must be integers")
    return integer_sqrt_exact(det(matrix))


def det_oracle_cofactor(matrix: DenseMatrix) -> Fraction:
    """Full Laplace expansion along rows, memoized on the used-column mask."""
    n = matrix.order
    if n > COFACTOR_MAX_ORDER:
        raise OrderTooLarge(f"cofactor oracle limited to order {COFACTOR_MAX_ORDER}, got {n}")
    rows = matrix.rows

    @lru_cache(maxsize=None)
    def expand(row: int, free: int) -> Fraction:
        if row == n:
            return Fraction(1)
        total = Fraction(0)
        position = 0
        for col in range(n):
            if not free >> col & 1:
                continue
            entry = rows[row][col]
            if entry:
                term = entry * expand(row + 1, free & ~(1 << col))
                total += -term if position % 2 else term
            position += 1
        return total

    return expand(0, (1 << n) - 1)


def characteristic_polynomial(matrix: DenseMatrix) -> UniPolynomial:
    """Monic det(z Id - M) by the Faddeev-LeVerrier recursion."""
    n = matrix.order
    a = [list(row) for row in matrix.rows]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    work = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # work <- A * work + c_{n-k+1} * Id
        product_ = [
            [sum((a[i][m] * work[m][j] for m in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            product_[i][i] += coeffs[n - k + 1]
        work = product_
        trace = sum((a[i][m] * work[m][i] for i in range(n) for m in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return UniPolynomial(tuple(coeffs))


# --- determinant sequences ---

class DetSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: FamilySpec
    values: tuple[tuple[int, ScalarField], ...]

    @property
    def dets(self) -> list[Fraction]:
        return [value for _, value in self.values]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(n, format_scalar(value)) for n, value in self.values], columns=["n", "det"]
        )


class RankSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: FamilySpec
    values: tuple[tuple[int, int], ...]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(list(self.values), columns=["n", "rank"])


def _det_at(spec, n: int, engine: Engine) -> Fraction:
    matrix = build(spec, n)
    if engine == "condensation":
        return det_condensation(matrix).value
    return det(matrix)


def _rank_at(spec, n: int) -> int:
    return rank(build(spec, n))


def det_values(spec, n_max: int, jobs: int = 1, engine: Engine = "elimination",
               start: int = 1) -> list[Fraction]:
    """det(build(spec, n)) for n = start..n_max, merged in index order."""
    if n_max < start:
        return []
    logger.debug("determinants of %s for n=%d..%d (jobs=%d)", spec.family, start, n_max, jobs)
    return Parallel(n_jobs=jobs)(delayed(_det_at)(spec, n, engine) for n in range(start, n_max + 1))


def det_sequence(spec: Union[FamilySpec, BandedPeriodicSpec], n_max: int, jobs: int = 1,
                 engine: Engine = "elimination") -> DetSequence:
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    values = det_values(spec, n_max, jobs=jobs, engine=engine)
    return DetSequence(family=spec, values=tuple(zip(range(1, n_max + 1), values)))


def rank_sequence(spec, n_max: int, jobs: int = 1) -> RankSequence:
    if n_max < 1:
        raise DomainError(f"n_max must be positive, got {n_max}")
    ranks = Parallel(n_jobs=jobs)(delayed(_rank_at)(spec, n) for n in range(1, n_max + 1))
    return RankSequence(family=spec, values=tuple(zip(range(1, n_max + 1), ranks)))


def antisymmetric_roots(spec, half_max: int, jobs: int = 1) -> list[int]:
    """sqrt(det(build(spec, 2n))) for n = 1..half_max."""
    return Parallel(n_jobs=jobs)(
        delayed(_root_at)(spec, 2 * n) for n in range(1, half_max + 1)
    )


def _root_at(spec, order: int) -> int:
    return sqrt_det_antisymmetric(build(spec, order))
