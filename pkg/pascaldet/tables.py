"""Regenerate the published tables and diff them against the bundled fixtures.

Fixtures under ``fixtures/`` are data; nothing here rewrites them.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import pandas as pd

from pascaldet.determinants import det_values, rank_sequence, sqrt_det_antisymmetric
from pascaldet.errors import UnsupportedFamily
from pascaldet.exact import format_scalar
from pascaldet.matrices import SymplecticBallotSpec, build, parse_family, symplectic_pascal
from pascaldet.sequences import generate, named
from pascaldet.trees import enumerate_even_tree, explore_sympletric

logger = logging.getLogger(__name__)

FIXTURES = Path(__file__).parent / "fixtures"
TABLES = {
    "central-binomial": "central_binomial.json",
    "even-tree": "even_tree.json",
    "sympletric": "sympletric.json",
    "symplectic-sqrt": "symplectic_sqrt.json",
    "catalan-ratio": "catalan_ratio.json",
}


@dataclass
class Mismatch:
    key: str
    expected: str
    actual: str


@dataclass
class TableReproduction:
    table_id: str
    frame: pd.DataFrame
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.mismatches

    def compare(self, key: str, expected, actual) -> None:
        expected, actual = str(expected), str(actual)
        if expected != actual:
            self.mismatches.append(Mismatch(key, expected, actual))

    def summary(self) -> dict:
        return {
            "table": self.table_id,
            "matches": self.matches,
            "rows": len(self.frame),
            "mismatches": [vars(m) for m in self.mismatches],
        }


def load_fixture(table_id: str) -> dict:
    name = TABLES.get(table_id)
    if name is None:
        raise UnsupportedFamily(f"unknown table {table_id!r}; choose from {', '.join(TABLES)}")
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


def multiply_out(entry: dict) -> int:
    value = entry["sign"]
    for base, exponent in entry["factors"]:
        value *= base ** exponent
    return value


def _central_binomial(fixture: dict, jobs: int) -> TableReproduction:
    spec = parse_family(fixture["family"])
    n_max = fixture["det_n_max"]
    dets = det_values(spec, n_max, jobs=jobs)
    ranks = [r for _, r in rank_sequence(spec, len(fixture["ranks"]), jobs=jobs).values]
    nonzero = {int(n): multiply_out(entry) for n, entry in fixture["nonzero_dets"].items()}

    result = TableReproduction("central-binomial", pd.DataFrame({
        "n": range(1, len(ranks) + 1),
        "det": [format_scalar(d) for d in dets] + [""] * (len(ranks) - len(dets)),
        "rank": ranks,
    }))
    for n, value in enumerate(dets, start=1):
        result.compare(f"det[{n}]", nonzero.get(n, 0), format_scalar(value))
    for n, (expected, actual) in enumerate(zip(fixture["ranks"], ranks), start=1):
        result.compare(f"rank[{n}]", expected, actual)
    return result


def _even_tree(fixture: dict, jobs: int) -> TableReproduction:
    paths = enumerate_even_tree(fixture["depth"], fixture["root_sign"])
    rows = fixture["rows"]
    result = TableReproduction("even-tree", pd.DataFrame([path.model_dump() for path in paths]))
    result.compare("row count", len(rows), len(paths))
    for i, (expected, path) in enumerate(zip(rows, paths), start=1):
        result.compare(f"row {i} choices", expected["choices"], list(path.choices))
        result.compare(f"row {i} centers", expected["centers"], list(path.centers))
        result.compare(f"row {i} next_center", expected["next_center"], path.next_center)
    return result


def _sympletric(fixture: dict, jobs: int) -> TableReproduction:
    leaves = explore_sympletric(fixture["length"])
    rows = fixture["rows"]
    result = TableReproduction("sympletric", pd.DataFrame(
        [{"prefix": " ".join(map(str, leaf.prefix)), "next": leaf.label()} for leaf in leaves]
    ))
    result.compare("row count", len(rows), len(leaves))
    for i, (expected, leaf) in enumerate(zip(rows, leaves), start=1):
        result.compare(f"row {i} prefix", expected["prefix"], list(leaf.prefix))
        extensions = [expected["center"] + expected["radius"], expected["center"] - expected["radius"]]
        result.compare(f"row {i} extensions", extensions, list(leaf.extensions))
    return result


def _symplectic_sqrt(fixture: dict, jobs: int) -> TableReproduction:
    table = {}
    result = TableReproduction("symplectic-sqrt", pd.DataFrame())
    for n_text, expected_row in fixture["rows"].items():
        n = int(n_text)
        row = [
            sqrt_det_antisymmetric(build(SymplecticBallotSpec(k=k), 2 * n))
            for k in range(len(expected_row))
        ]
        table[n] = row
        for k, (expected, actual) in enumerate(zip(expected_row, row)):
            result.compare(f"D_{k}({n})", expected, actual)
    result.frame = pd.DataFrame.from_dict(table, orient="index")
    result.frame.index.name = "n"
    return result


def _catalan_ratio(fixture: dict, jobs: int) -> TableReproduction:
    count = len(fixture["r_C"])
    catalan = generate(named("catalan_shifted_symplectic"), 2 * count)
    central = generate(named("binomial_shifted_symplectic"), 2 * count)
    r_c = [sqrt_det_antisymmetric(symplectic_pascal(catalan[:2 * n])) for n in range(1, count + 1)]
    r_b = [sqrt_det_antisymmetric(symplectic_pascal(central[:2 * n])) for n in range(1, count + 1)]
    result = TableReproduction("catalan-ratio", pd.DataFrame({
        "n": range(1, count + 1),
        "r_C": [str(v) for v in r_c],
        "r_B": [str(v) for v in r_b],
    }))
    for n in range(1, count + 1):
        result.compare(f"r_C({n})", fixture["r_C"][n - 1], r_c[n - 1])
        result.compare(f"r_B({n})", fixture["r_B"][n - 1], r_b[n - 1])
        result.compare(f"r_B({n}) / r_C({n})", 2 ** (n - 1), Fraction(r_b[n - 1], r_c[n - 1]))
    return result


_REPRODUCERS = {
    "central-binomial": _central_binomial,
    "even-tree": _even_tree,
    "sympletric": _sympletric,
    "symplectic-sqrt": _symplectic_sqrt,
    "catalan-ratio": _catalan_ratio,
}


def reproduce(table_id: str, jobs: int = 1) -> TableReproduction:
    fixture = load_fixture(table_id)
    result = _REPRODUCERS[table_id](fixture, jobs)
    if result.matches:
        logger.info("%s reproduced (%d rows)", table_id, len(result.frame))
    else:
        logger.warning("%s differs from its fixture in %d places", table_id, len(result.mismatches))
    return result
