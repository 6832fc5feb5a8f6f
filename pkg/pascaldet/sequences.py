"""Declarative sequence specifications and the sequence transforms.

A spec describes an infinite sequence (or a finite prefix for ``explicit``);
``generate`` materialises its first terms as exact scalars.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Annotated, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator

from pascaldet.errors import InsufficientTerms, SpecError
from pascaldet.exact import ScalarField, format_scalar, to_scalar

NamedSequenceName = Literal[
    "fibonacci",
    "catalan",
    "central_binomial",
    "catalan_shifted_symplectic",
    "binomial_shifted_symplectic",
]
TransformName = Literal[
    "negate",
    "alternate_signs",
    "interleave_even",
    "duplicate_terms",
    "prepend_zero",
    "twist",
    "shift",
]


class _SequenceBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def head(self, count: int) -> list[Fraction]:
        raise NotImplementedError


class ExplicitSequence(_SequenceBase):
    kind: Literal["explicit"] = "explicit"
    terms: tuple[ScalarField, ...]

    def head(self, count: int) -> list[Fraction]:
        if count > len(self.terms):
            raise InsufficientTerms(
                f"explicit sequence has {len(self.terms)} terms, {count} requested"
            )
        return list(self.terms[:count])


class LinearRecurrenceSequence(_SequenceBase):
    """sigma_n = sum_i coeffs[i-1] * sigma_{n-i} for n >= len(coeffs)."""

    kind: Literal["linear_recurrence"] = "linear_recurrence"
    coeffs: tuple[ScalarField, ...] = Field(min_length=1)
    initial: tuple[ScalarField, ...]

    @model_validator(mode="after")
    def _check_initial(self):
        order = len(self.coeffs)
        if len(self.initial) < order:
            raise ValueError(
                f"linear recurrence of order {order} needs at least {order} initial terms"
            )
        for n in range(order, len(self.initial)):
            expected = sum(a * self.initial[n - i - 1] for i, a in enumerate(self.coeffs))
            if expected != self.initial[n]:
                raise ValueError(f"initial term {n} does not satisfy the recurrence")
        return self

    def head(self, count: int) -> list[Fraction]:
        out = list(self.initial[:count])
        while len(out) < count:
            n = len(out)
            out.append(sum((a * out[n - i - 1] for i, a in enumerate(self.coeffs)), Fraction(0)))
        return out


class PeriodicSequence(_SequenceBase):
    kind: Literal["periodic"] = "periodic"
    period: tuple[ScalarField, ...] = Field(min_length=1)

    def head(self, count: int) -> list[Fraction]:
        return [self.period[i % len(self.period)] for i in range(count)]


class GeometricSequence(_SequenceBase):
    kind: Literal["geometric"] = "geometric"
    first: ScalarField = Fraction(1)
    ratio: ScalarField

    def head(self, count: int) -> list[Fraction]:
        out, value = [], self.first
        for _ in range(count):
            out.append(value)
            value *= self.ratio
        return out


class NamedSequence(_SequenceBase):
    kind: Literal["named"] = "named"
    name: NamedSequenceName

    def head(self, count: int) -> list[Fraction]:
        if self.name == "fibonacci":
            out, a, b = [], 0, 1
            for _ in range(count):
                out.append(Fraction(a))
                a, b = b, a + b
            return out
        if self.name == "catalan":
            return [Fraction(c) for c in _catalan(count)]
        if self.name == "central_binomial":
            return [Fraction(math.comb(2 * k, k)) for k in range(count)]
        if self.name == "catalan_shifted_symplectic":
            return [Fraction(0)] + [Fraction(c) for c in _catalan(count - 1)]
        # binomial_shifted_symplectic
        return [Fraction(0)] + [Fraction(math.comb(2 * k, k)) for k in range(count - 1)]


class TransformedSequence(_SequenceBase):
    kind: Literal["transformed"] = "transformed"
    transform: TransformName
    base: "SequenceSpec"
    factor: Optional[ScalarField] = None
    offset: int = Field(default=0, ge=0)

    @field_validator("factor")
    @classmethod
    def _nonzero_factor(cls, value):
        if value is not None and value == 0:
            raise ValueError("twist factor must be nonzero")
        return value

    @model_validator(mode="after")
    def _check_payload(self):
        if self.transform == "twist" and self.factor is None:
            raise ValueError("twist needs a factor")
        return self

    def head(self, count: int) -> list[Fraction]:
        if self.transform == "negate":
            return [-v for v in generate(self.base, count)]
        if self.transform == "alternate_signs":
            return alternate_signs(generate(self.base, count))
        if self.transform == "interleave_even":
            return interleave_even(generate(self.base, (count + 1) // 2))[:count]
        if self.transform == "duplicate_terms":
            return duplicate_terms(generate(self.base, (count + 1) // 2))[:count]
        if self.transform == "prepend_zero":
            return ([Fraction(0)] + generate(self.base, max(count - 1, 0)))[:count]
        if self.transform == "twist":
            return [self.factor ** i * v for i, v in enumerate(generate(self.base, count))]
        # shift
        return generate(self.base, count + self.offset)[self.offset:]


SequenceSpec = Annotated[
    Union[
        ExplicitSequence,
        LinearRecurrenceSequence,
        PeriodicSequence,
        GeometricSequence,
        NamedSequence,
        TransformedSequence,
    ],
    Field(discriminator="kind"),
]
TransformedSequence.model_rebuild()

SEQUENCE_ADAPTER = TypeAdapter(SequenceSpec)


def _catalan(count: int) -> list[int]:
    out, c = [], 1
    for k in range(count):
        out.append(c)
        c = c * 2 * (2 * k + 1) // (k + 2)
    return out


def parse_sequence(data) -> SequenceSpec:
    return SEQUENCE_ADAPTER.validate_python(data)


def generate(spec: SequenceSpec, count: int) -> list[Fraction]:
    """First ``count`` terms of ``spec``."""
    if count < 0:
        raise SpecError(f"count must be nonnegative, got {count}")
    if count == 0:
        return []
    return spec.head(count)


def alternate_signs(terms: Sequence) -> list[Fraction]:
    return [to_scalar(v) if i % 2 == 0 else -to_scalar(v) for i, v in enumerate(terms)]


def interleave_even(beta: Sequence) -> list[Fraction]:
    """(b0, b1, ...) -> (0, b0, 0, b1, ...)."""
    out: list[Fraction] = []
    for value in beta:
        out.extend((Fraction(0), to_scalar(value)))
    return out


def duplicate_terms(beta: Sequence) -> list[Fraction]:
    """(b0, b1, ...) -> (0, b0, b0, b1, b1, ...), same length as interleave_even."""
    values = [to_scalar(v) for v in beta]
    out: list[Fraction] = []
    for i, value in enumerate(values):
        out.append(Fraction(0) if i == 0 else values[i - 1])
        out.append(value)
    return out


# --- constructors used across the package ---

def explicit(values: Sequence) -> ExplicitSequence:
    return ExplicitSequence(terms=tuple(to_scalar(v) for v in values))


def named(name: NamedSequenceName) -> NamedSequence:
    return NamedSequence(name=name)


def periodic(values: Sequence) -> PeriodicSequence:
    return PeriodicSequence(period=tuple(to_scalar(v) for v in values))


def geometric(ratio, first=1) -> GeometricSequence:
    return GeometricSequence(first=to_scalar(first), ratio=to_scalar(ratio))


def linear_recurrence(coeffs: Sequence, initial: Sequence) -> LinearRecurrenceSequence:
    return LinearRecurrenceSequence(
        coeffs=tuple(to_scalar(v) for v in coeffs),
        initial=tuple(to_scalar(v) for v in initial),
    )


def transformed(transform: TransformName, base, factor=None, offset: int = 0) -> TransformedSequence:
    return TransformedSequence(
        transform=transform,
        base=base,
        factor=None if factor is None else to_scalar(factor),
        offset=offset,
    )


def describe(spec) -> str:
    """Short human label, used in log lines and table headers."""
    if isinstance(spec, NamedSequence):
        return spec.name
    if isinstance(spec, TransformedSequence):
        return f"{spec.transform}({describe(spec.base)})"
    if isinstance(spec, ExplicitSequence):
        return "(" + ", ".join(format_scalar(v) for v in spec.terms) + ")"
    head = ", ".join(format_scalar(v) for v in generate(spec, 4))
    return f"{spec.kind}({head}, ...)"
