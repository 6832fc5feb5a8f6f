"""The even symplectic unimodular tree and the sympletric extension search."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import pandas as pd
from pydantic import BaseModel, ConfigDict

from pascaldet.determinants import det
from pascaldet.errors import (
    DegreeAssertionFailed,
    DomainError,
    InvariantViolated,
    PatternViolated,
    QuadraticFitFailed,
)
from pascaldet.exact import as_int, format_scalar
from pascaldet.matrices import pascal_from_terms, symplectic_pascal
from pascaldet.sequences import alternate_signs, interleave_even

logger = logging.getLogger(__name__)


class EvenTreePath(BaseModel):
    """One root-to-leaf path: beta_i = centers_i + choices_i."""

    model_config = ConfigDict(frozen=True)

    choices: tuple[int, ...]
    centers: tuple[int, ...]
    next_center: int

    @property
    def prefix(self) -> tuple[int, ...]:
        return tuple(c + e for c, e in zip(self.centers, self.choices))

    def negated(self) -> "EvenTreePath":
        return EvenTreePath(
            choices=tuple(-e for e in self.choices),
            centers=tuple(-c for c in self.centers),
            next_center=-self.next_center,
        )


class SympletricPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    prefix: tuple[int, ...]
    extensions: tuple[int, ...]

    @property
    def center(self) -> Optional[Fraction]:
        if len(self.extensions) != 2:
            return None
        return Fraction(sum(self.extensions), 2)

    def label(self) -> str:
        """Row as "center±radius" when there are exactly two extensions."""
        if self.center is None:
            return "{" + ", ".join(str(x) for x in self.extensions) + "}"
        radius = Fraction(abs(self.extensions[0] - self.extensions[1]), 2)
        return f"{format_scalar(self.center)}±{format_scalar(radius)}"


# --- even symplectic tree ---

def even_symplectic_det(prefix: Sequence[int]) -> Fraction:
    """det of the order 2*len(prefix) even-symplectic matrix of ``prefix``."""
    return det(symplectic_pascal(interleave_even(prefix)))


@lru_cache(maxsize=None)
def _next_center(prefix: tuple[int, ...]) -> int:
    if even_symplectic_det(prefix) != 1:
        raise InvariantViolated(f"prefix {prefix} does not give determinant 1")
    at = {x: even_symplectic_det(prefix + (x,)) for x in (-1, 0, 1)}
    # D(x) = (a x + b)^2
    a_squared = (at[1] + at[-1]) / 2 - at[0]
    ab = (at[1] - at[-1]) / 4
    if a_squared != 1:
        raise QuadraticFitFailed(f"leading coefficient {format_scalar(a_squared)} after prefix {prefix}")
    center = as_int(-ab)
    if center % 2:
        raise InvariantViolated(f"center {center} after prefix {prefix} is odd")
    checks = (
        even_symplectic_det(prefix + (center,)),
        even_symplectic_det(prefix + (center + 1,)),
        even_symplectic_det(prefix + (center - 1,)),
    )
    if checks != (0, 1, 1):
        raise InvariantViolated(f"center {center} after prefix {prefix} gives determinants {checks}")
    return center


def next_even_beta(prefix: Sequence[int]) -> int:
    """The even center value for the term following ``prefix``."""
    return _next_center(tuple(as_int(v) for v in prefix))


def enumerate_even_tree(depth: int, root_sign: int = 1) -> list[EvenTreePath]:
    """All paths with ``depth`` columns, +1 choices ordered first.

    The -1 tree is the global sign change of the +1 tree. At depth 1 the
    only path carries the root center 0 and no choices, so both signs give
    the same result.
    """
    if depth < 1:
        raise DomainError(f"depth must be positive, got {depth}")
    if root_sign not in (1, -1):
        raise DomainError(f"root_sign must be 1 or -1, got {root_sign}")

    frontier: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for level in range(depth - 1):
        grown = []
        for choices, centers in frontier:
            prefix = tuple(c + e for c, e in zip(centers, choices))
            center = next_even_beta(prefix)
            options = (1,) if level == 0 else (1, -1)
            for choice in options:
                grown.append((choices + (choice,), centers + (center,)))
        frontier = grown
        logger.debug("even tree level %d: %d nodes", level + 1, len(frontier))

    paths = []
    for choices, centers in frontier:
        prefix = tuple(c + e for c, e in zip(centers, choices))
        paths.append(EvenTreePath(choices=choices, centers=centers, next_center=next_even_beta(prefix)))
    paths.sort(key=lambda path: tuple(-e for e in path.choices))
    if root_sign == -1:
        return [path.negated() for path in paths]
    return paths


def format_even_tree_table(paths: Sequence[EvenTreePath]) -> pd.DataFrame:
    """Center with choice subscript per column, then the forced next center."""
    rows = []
    for path in paths:
        row = {
            str(i + 1): f"{c}{'+' if e > 0 else '-'}"
            for i, (c, e) in enumerate(zip(path.centers, path.choices))
        }
        row["next"] = f"{path.next_center}±"
        rows.append(row)
    return pd.DataFrame(rows)


# --- sympletric search ---

def sympletric_det(alpha: Sequence[int]) -> Fraction:
    """det(P_{alpha, alternate_signs(alpha)}) at order len(alpha)."""
    return det(pascal_from_terms(list(alpha), alternate_signs(alpha)))


def sympletric_target(k: int) -> int:
    return 0 if k == 1 else 2 ** (k - 2)


def _check_pattern(prefix: tuple[int, ...]) -> None:
    if prefix[:3] != (0, 1, 1):
        raise PatternViolated(f"sympletric prefix must start with 0, 1, 1: {prefix}")
    for k in range(1, len(prefix) + 1):
        value = sympletric_det(prefix[:k])
        if value != sympletric_target(k):
            raise PatternViolated(
                f"order {k} determinant is {format_scalar(value)}, expected {sympletric_target(k)}"
            )


def _square_root(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def sympletric_extensions(prefix: Sequence[int]) -> list[int]:
    """Every integer x keeping the pattern at order len(prefix) + 1, largest first."""
    prefix = tuple(as_int(v) for v in prefix)
    _check_pattern(prefix)
    m = len(prefix)
    at = [sympletric_det(prefix + (x,)) for x in range(4)]
    c = at[0]
    a = (at[2] - 2 * at[1] + at[0]) / 2
    b = at[1] - at[0] - a
    if 9 * a + 3 * b + c != at[3]:
        raise DegreeAssertionFailed(f"determinant is not quadratic in the next term after {prefix}")
    target = 2 ** (m - 1)
    c -= target
    if a == 0:
        if b == 0:
            if c == 0:
                raise DegreeAssertionFailed(f"every next term keeps the pattern after {prefix}")
            logger.warning("prefix %s: determinant is constant in the next term and misses %d",
                           prefix, target)
            return []
        roots = [-c / b]
    else:
        root = _square_root(b * b - 4 * a * c)
        roots = [] if root is None else [(-b + root) / (2 * a), (-b - root) / (2 * a)]
    found = sorted({int(r) for r in roots if r.denominator == 1}, reverse=True)
    if len(found) != 2:
        logger.warning("prefix %s has %d extensions: %s", prefix, len(found), found)
    return found


def explore_sympletric(length: int, root: Sequence[int] = (0, 1, 1)) -> list[SympletricPath]:
    """Grow every admissible prefix from ``root`` to ``length`` terms.

    Leaves come out depth first with larger extensions first, each with its
    own extension set.
    """
    root = tuple(as_int(v) for v in root)
    if length < len(root):
        raise DomainError(f"length {length} is shorter than the root {root}")
    leaves: list[SympletricPath] = []

    def grow(prefix: tuple[int, ...]) -> None:
        extensions = sympletric_extensions(prefix)
        if len(prefix) == length:
            leaves.append(SympletricPath(prefix=prefix, extensions=tuple(extensions)))
            return
        for x in extensions:
            grow(prefix + (x,))

    grow(root)
    logger.info("sympletric exploration to length %d: %d leaves", length, len(leaves))
    return leaves
