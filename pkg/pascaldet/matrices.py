"""Dense exact matrices and the declarative matrix families.

Builders fill entries by the defining recurrences (Pascal rule, rank-one
driven rule, diagonal propagation). Closed forms live in ``oracles`` so
the two paths stay independent.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Annotated, Literal, Optional, Sequence, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from pascaldet.errors import DomainError, SpecMismatch
from pascaldet.exact import ScalarField, binomial, format_scalar, to_scalar
from pascaldet.sequences import SequenceSpec, generate

logger = logging.getLogger(__name__)

# band letter -> offset j - i
BAND_OFFSETS = {"a": -2, "b": -1, "c": 0, "d": 1, "e": 2}


@dataclass(frozen=True)
class DenseMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise DomainError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMatrix":
        return cls(tuple(tuple(to_scalar(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(tuple(
            tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
        ))

    @classmethod
    def from_function(cls, n: int, entry) -> "DenseMatrix":
        return cls(tuple(tuple(to_scalar(entry(i, j)) for j in range(n)) for i in range(n)))

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if other.order != self.order:
            raise DomainError("orders differ")
        return DenseMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        ))

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(tuple(zip(*self.rows))) if self.rows else self

    def corner(self, k: int) -> "DenseMatrix":
        """Top-left k x k block."""
        return DenseMatrix(tuple(row[:k] for row in self.rows[:k]))

    def block(self, row_start: int, col_start: int, size: int) -> "DenseMatrix":
        """Contiguous size x size block starting at (row_start, col_start)."""
        return DenseMatrix(tuple(
            row[col_start:col_start + size] for row in self.rows[row_start:row_start + size]
        ))

    def is_integer(self) -> bool:
        return all(v.denominator == 1 for row in self.rows for v in row)

    def is_antisymmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(i, n))

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(v) for v in row] for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.to_json())


# --- family specs ---

class _FamilyBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class PascalShiftedSpec(_FamilyBase):
    family: Literal["pascal_shifted"] = "pascal_shifted"
    s: int = Field(ge=0)
    t: int = Field(ge=0)


class InverseBinomialSpec(_FamilyBase):
    family: Literal["inverse_binomial"] = "inverse_binomial"
    s: int = Field(ge=0)
    t: int = Field(ge=0)


class GeneralizedPascalSpec(_FamilyBase):
    family: Literal["generalized_pascal"] = "generalized_pascal"
    alpha: SequenceSpec
    beta: SequenceSpec


class PerturbedPascalSpec(_FamilyBase):
    """C(i+j, i) + q(i, j) with q(x, y) = sum c_{s,t} C(x, s) C(y, t)."""

    family: Literal["perturbed_pascal"] = "perturbed_pascal"
    coefficients: tuple[tuple[int, int, ScalarField], ...]

    @model_validator(mode="after")
    def _check_support(self):
        seen = set()
        for s, t, _ in self.coefficients:
            if s < 0 or t < 0:
                raise ValueError("coefficient indices must be nonnegative")
            if (s, t) in seen:
                raise ValueError(f"duplicate coefficient c_{s},{t}")
            seen.add((s, t))
        return self

    def grid(self) -> dict[tuple[int, int], Fraction]:
        return {(s, t): c for s, t, c in self.coefficients if c != 0}


class GramBinomialSpec(_FamilyBase):
    family: Literal["gram_binomial"] = "gram_binomial"
    k: int = Field(ge=0)


class RankOneDrivenSpec(_FamilyBase):
    family: Literal["rank_one_driven"] = "rank_one_driven"
    alpha: SequenceSpec
    beta: SequenceSpec


class WeightedPascalSpec(_FamilyBase):
    family: Literal["weighted_pascal"] = "weighted_pascal"
    rho: ScalarField
    sigma: ScalarField
    x: ScalarField


class WeightedPascalAntisymmetricSpec(_FamilyBase):
    family: Literal["weighted_pascal_antisymmetric"] = "weighted_pascal_antisymmetric"
    rho: ScalarField
    x: ScalarField


class BallotDifferenceASpec(_FamilyBase):
    family: Literal["ballot_difference_a"] = "ballot_difference_a"
    k: int = Field(ge=0)


class BallotDifferenceBSpec(_FamilyBase):
    family: Literal["ballot_difference_b"] = "ballot_difference_b"
    k: int = Field(ge=0)


class SymplecticBallotSpec(_FamilyBase):
    family: Literal["symplectic_ballot"] = "symplectic_ballot"
    k: int = Field(ge=0)


class DiagonalConstructionSpec(_FamilyBase):
    family: Literal["diagonal_construction"] = "diagonal_construction"
    gamma: SequenceSpec
    u1: ScalarField = Fraction(1)
    u2: ScalarField = Fraction(1)
    l1: ScalarField = Fraction(1)
    l2: ScalarField = Fraction(1)


class PowerDistanceSpec(_FamilyBase):
    family: Literal["power_distance"] = "power_distance"
    a: ScalarField


class BandedPeriodicSpec(_FamilyBase):
    """(s, t)-bounded, p-periodic band data plus a finite perturbation.

    ``bands`` maps an offset j - i in [-s, t] to its p periodic values;
    entry (i, j) on that band is ``bands[j - i][i % p]``.
    """

    family: Literal["banded_periodic"] = "banded_periodic"
    s: int = Field(ge=0)
    t: int = Field(ge=0)
    p: int = Field(default=1, ge=1)
    bands: dict[int, tuple[ScalarField, ...]]
    perturbation: tuple[tuple[int, int, ScalarField], ...] = ()
    support: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_bands(self):
        if self.s + self.t < 1:
            raise ValueError("need s + t >= 1")
        for offset, values in self.bands.items():
            if not -self.s <= offset <= self.t:
                raise ValueError(f"band offset {offset} outside [-{self.s}, {self.t}]")
            if len(values) != self.p:
                raise ValueError(f"band {offset} needs {self.p} periodic values, got {len(values)}")
        for i, j, _ in self.perturbation:
            if i < 0 or j < 0:
                raise ValueError("perturbation indices must be nonnegative")
        return self

    @classmethod
    def pentadiagonal(cls, a, b, c, d, e) -> "BandedPeriodicSpec":
        values = dict(zip("abcde", (a, b, c, d, e)))
        return cls(s=2, t=2, p=1, bands={BAND_OFFSETS[k]: (to_scalar(v),) for k, v in values.items()})

    def entry(self, i: int, j: int) -> Fraction:
        values = self.bands.get(j - i)
        if values is None:
            return Fraction(0)
        return values[i % self.p]


MatrixSpec = Annotated[
    Union[
        PascalShiftedSpec,
        InverseBinomialSpec,
        GeneralizedPascalSpec,
        PerturbedPascalSpec,
        GramBinomialSpec,
        RankOneDrivenSpec,
        WeightedPascalSpec,
        WeightedPascalAntisymmetricSpec,
        BallotDifferenceASpec,
        BallotDifferenceBSpec,
        SymplecticBallotSpec,
        DiagonalConstructionSpec,
        PowerDistanceSpec,
    ],
    Field(discriminator="family"),
]
FamilySpec = Annotated[
    Union[
        PascalShiftedSpec,
        InverseBinomialSpec,
        GeneralizedPascalSpec,
        PerturbedPascalSpec,
        GramBinomialSpec,
        RankOneDrivenSpec,
        WeightedPascalSpec,
        WeightedPascalAntisymmetricSpec,
        BallotDifferenceASpec,
        BallotDifferenceBSpec,
        SymplecticBallotSpec,
        DiagonalConstructionSpec,
        PowerDistanceSpec,
        BandedPeriodicSpec,
    ],
    Field(discriminator="family"),
]
FAMILY_ADAPTER = TypeAdapter(FamilySpec)


def parse_family(data) -> Union[MatrixSpec, BandedPeriodicSpec]:
    return FAMILY_ADAPTER.validate_python(data)


# --- builders ---

def _zeros(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def _freeze(cells: list[list[Fraction]]) -> DenseMatrix:
    return DenseMatrix(tuple(tuple(row) for row in cells))


def pascal_table(rows: int, cols: int) -> list[list[int]]:
    """Rows x cols corner of the Pascal triangle filled by the Pascal rule."""
    table = [[1] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            table[i][j] = table[i - 1][j] + table[i][j - 1]
    return table


def pascal_from_terms(alpha: Sequence, beta: Sequence) -> DenseMatrix:
    """P_{alpha,beta}(n) for explicit first column ``alpha`` and first row ``beta``."""
    n = len(alpha)
    if len(beta) != n:
        raise SpecMismatch("first row and first column need the same length")
    if n and to_scalar(alpha[0]) != to_scalar(beta[0]):
        raise SpecMismatch(
            f"alpha_0 = {format_scalar(alpha[0])} differs from beta_0 = {format_scalar(beta[0])}"
        )
    cells = _zeros(n)
    for i in range(n):
        cells[i][0] = to_scalar(alpha[i])
        cells[0][i] = to_scalar(beta[i])
    for i in range(1, n):
        for j in range(1, n):
            cells[i][j] = cells[i - 1][j] + cells[i][j - 1]
    return _freeze(cells)


def symplectic_pascal(alpha: Sequence) -> DenseMatrix:
    """P_{alpha,-alpha}; antisymmetric when alpha_0 = 0."""
    return pascal_from_terms(alpha, [-to_scalar(v) for v in alpha])


def _build_pascal_shifted(spec: PascalShiftedSpec, n: int) -> DenseMatrix:
    table = pascal_table(n + spec.s, n + spec.t)
    return DenseMatrix.from_function(n, lambda i, j: table[i + spec.s][j + spec.t])


def _build_inverse_binomial(spec: InverseBinomialSpec, n: int) -> DenseMatrix:
    table = pascal_table(n + spec.s, n + spec.t)
    return DenseMatrix.from_function(n, lambda i, j: Fraction(1, table[i + spec.s][j + spec.t]))


def _build_generalized_pascal(spec: GeneralizedPascalSpec, n: int) -> DenseMatrix:
    return pascal_from_terms(generate(spec.alpha, n), generate(spec.beta, n))


def _build_perturbed_pascal(spec: PerturbedPascalSpec, n: int) -> DenseMatrix:
    table = pascal_table(n, n)
    grid = spec.grid()

    def entry(i, j):
        q = sum((c * math.comb(i, s) * math.comb(j, t) for (s, t), c in grid.items()), Fraction(0))
        return table[i][j] + q

    return DenseMatrix.from_function(n, entry)


def _build_gram_binomial(spec: GramBinomialSpec, n: int) -> DenseMatrix:
    upper = n + spec.k - 1

    def entry(i, j):
        return sum(math.comb(r, i) * math.comb(r, j) for r in range(upper + 1))

    return DenseMatrix.from_function(n, entry)


def _build_rank_one_driven(spec: RankOneDrivenSpec, n: int) -> DenseMatrix:
    alpha, beta = generate(spec.alpha, n), generate(spec.beta, n)
    cells = _zeros(n)
    for i in range(n):
        for j in range(n):
            up = cells[i - 1][j] if i > 0 else 0
            left = cells[i][j - 1] if j > 0 else 0
            cells[i][j] = up + left + alpha[i] * beta[j]
    return _freeze(cells)


def _weighted_fill(cells: list[list[Fraction]], x: Fraction) -> DenseMatrix:
    n = len(cells)
    for i in range(1, n):
        for j in range(1, n):
            cells[i][j] = cells[i - 1][j] + cells[i][j - 1] + x * cells[i - 1][j - 1]
    return _freeze(cells)


def _build_weighted_pascal(spec: WeightedPascalSpec, n: int) -> DenseMatrix:
    cells = _zeros(n)
    for i in range(n):
        cells[i][0] = spec.rho ** i
        cells[0][i] = spec.sigma ** i
    return _weighted_fill(cells, spec.x)


def _build_weighted_pascal_antisymmetric(spec: WeightedPascalAntisymmetricSpec, n: int) -> DenseMatrix:
    cells = _zeros(n)
    for i in range(1, n):
        cells[i][0] = spec.rho ** (i - 1)
        cells[0][i] = -spec.rho ** (i - 1)
    return _weighted_fill(cells, spec.x)


def _build_ballot_difference_a(spec: BallotDifferenceASpec, n: int) -> DenseMatrix:
    def entry(i, j):
        top = 2 * i + 2 * j + spec.k
        return binomial(top, i, "extended") - binomial(top, i - 1, "extended")

    return DenseMatrix.from_function(n, entry)


def _build_ballot_difference_b(spec: BallotDifferenceBSpec, n: int) -> DenseMatrix:
    def entry(i, j):
        top = 2 * i + 2 * j + spec.k
        return binomial(top, i + 1, "extended") - binomial(top, i, "extended")

    return DenseMatrix.from_function(n, entry)


def _build_symplectic_ballot(spec: SymplecticBallotSpec, n: int) -> DenseMatrix:
    k = spec.k

    def entry(i, j):
        top = 2 * k + i + j - 1
        return binomial(top, k + j, "extended") - binomial(top, k + j - 1, "extended")

    return DenseMatrix.from_function(n, entry)


def _build_diagonal_construction(spec: DiagonalConstructionSpec, n: int) -> DenseMatrix:
    gamma = generate(spec.gamma, n)
    cells = _zeros(n)
    for i in range(n):
        cells[i][i] = gamma[i]
    # each off-diagonal only needs the one closer to the diagonal
    for offset in range(1, n):
        for i in range(n - offset):
            j = i + offset
            cells[i][j] = spec.u1 * cells[i][j - 1] + spec.u2 * cells[i + 1][j]
            cells[j][i] = spec.l1 * cells[j - 1][i] + spec.l2 * cells[j][i + 1]
    return _freeze(cells)


def _build_power_distance(spec: PowerDistanceSpec, n: int) -> DenseMatrix:
    return DenseMatrix.from_function(n, lambda i, j: spec.a ** abs(i - j))


def build_banded(spec: BandedPeriodicSpec, n: int) -> DenseMatrix:
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    cells = [[spec.entry(i, j) for j in range(n)] for i in range(n)]
    for i, j, value in spec.perturbation:
        if spec.support is not None and (i >= spec.support or j >= spec.support):
            raise DomainError(f"perturbation ({i}, {j}) outside support {spec.support}")
        if i < n and j < n:
            cells[i][j] += value
    return _freeze(cells)


_BUILDERS = {
    "pascal_shifted": _build_pascal_shifted,
    "inverse_binomial": _build_inverse_binomial,
    "generalized_pascal": _build_generalized_pascal,
    "perturbed_pascal": _build_perturbed_pascal,
    "gram_binomial": _build_gram_binomial,
    "rank_one_driven": _build_rank_one_driven,
    "weighted_pascal": _build_weighted_pascal,
    "weighted_pascal_antisymmetric": _build_weighted_pascal_antisymmetric,
    "ballot_difference_a": _build_ballot_difference_a,
    "ballot_difference_b": _build_ballot_difference_b,
    "symplectic_ballot": _build_symplectic_ballot,
    "diagonal_construction": _build_diagonal_construction,
    "power_distance": _build_power_distance,
    "banded_periodic": build_banded,
}


def build(spec, n: int) -> DenseMatrix:
    """The n x n matrix of ``spec`` (any MatrixSpec or BandedPeriodicSpec)."""
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    builder = _BUILDERS.get(getattr(spec, "family", None))
    if builder is None:
        raise SpecMismatch(f"no builder for {spec!r}")
    matrix = builder(spec, n)
    logger.debug("built %s of order %d", spec.family, n)
    return matrix
