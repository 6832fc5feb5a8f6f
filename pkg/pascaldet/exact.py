"""Exact scalars, binomial coefficients and univariate polynomials.

Every value in the library is a ``fractions.Fraction``; integers are accepted
on input and promoted. Floats are rejected outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Annotated, Iterable, Literal

from pydantic import BeforeValidator, PlainSerializer, WithJsonSchema

from pascaldet.errors import DomainError, NegativeInput, NotAPerfectSquare

Scalar = Fraction
BinomialConvention = Literal["standard", "extended"]


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact scalar: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact scalar: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_scalar(value) -> str:
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_integer(value) -> bool:
    return to_scalar(value).denominator == 1


def as_int(value) -> int:
    value = to_scalar(value)
    if value.denominator != 1:
        raise DomainError(f"expected an integer, got {format_scalar(value)}")
    return value.numerator


# pydantic field type: parses like to_scalar, dumps as "p/q"
ScalarField = Annotated[
    Fraction,
    BeforeValidator(to_scalar),
    PlainSerializer(format_scalar, return_type=str),
    WithJsonSchema({"type": "string", "pattern": r"^-?\d+(/\d+)?$"}),
]


def binomial(n: int, k: int, convention: BinomialConvention = "standard") -> int:
    """Binomial coefficient C(n, k) for arbitrary integers.

    ``standard``: zero for k < 0, the usual value for 0 <= k <= n, and the
    polynomial value n(n-1)...(n-k+1)/k! for negative n.
    ``extended``: additionally C(-1, -1) = 1 and C(m, -1) = 0 for m >= 0.
    """
    if convention not in ("standard", "extended"):
        raise DomainError(f"unknown binomial convention {convention!r}")
    if convention == "extended" and k < 0:
        if n == -1 and k == -1:
            return 1
        if n >= -1 and k == -1:
            return 0
        if n < -1 and k < -1:
            raise DomainError(f"C({n}, {k}) is undefined under the extended convention")
        if k < -1 and n >= 0:
            return 0
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    return (-1) ** k * math.comb(k - n - 1, k)


def integer_sqrt_exact(value) -> int:
    value = to_scalar(value)
    if value < 0:
        raise NegativeInput(f"square root of negative value {format_scalar(value)}")
    if value.denominator != 1:
        raise NotAPerfectSquare(f"{format_scalar(value)} is not an integer")
    root = math.isqrt(value.numerator)
    if root * root != value.numerator:
        raise NotAPerfectSquare(f"{value.numerator} is not a perfect square")
    return root


def product(values: Iterable) -> Fraction:
    result = Fraction(1)
    for value in values:
        result *= value
    return result


@dataclass(frozen=True)
class UniPolynomial:
    """Polynomial over exact scalars, coefficients stored low degree first."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [to_scalar(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "UniPolynomial":
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def evaluate(self, x) -> Fraction:
        x = to_scalar(x)
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    __call__ = evaluate

    def __add__(self, other: "UniPolynomial") -> "UniPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (size - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (size - len(other.coefficients))
        return UniPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "UniPolynomial":
        return UniPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "UniPolynomial") -> "UniPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "UniPolynomial":
        if not isinstance(other, UniPolynomial):
            other = UniPolynomial((to_scalar(other),))
        if self.is_zero() or other.is_zero():
            return UniPolynomial(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UniPolynomial(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, divisor: "UniPolynomial"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coefficients)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / divisor.leading
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return UniPolynomial(tuple(quotient)), UniPolynomial(tuple(remainder))

    def divides(self, other: "UniPolynomial") -> bool:
        return divmod(other, self)[1].is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            body = format_scalar(c)
            if power > 0 and c in (1, -1):
                body = "-" if c == -1 else ""
            if power == 0:
                terms.append(format_scalar(c))
            elif power == 1:
                terms.append(f"{body}z")
            else:
                terms.append(f"{body}z^{power}")
        return " + ".join(terms).replace("+ -", "- ")
