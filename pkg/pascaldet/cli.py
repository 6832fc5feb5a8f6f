"""
cli.py
Command-line front end for pascaldet.

Examples:
  python -m pascaldet.cli det-seq --spec '{"family": "generalized_pascal", "alpha": {"kind": "named", "name": "central_binomial"}, "beta": {"kind": "named", "name": "central_binomial"}}' --n-max 9
  python -m pascaldet.cli verify --identity diagonal_scaling --params params.json --n-range 1:4
  python -m pascaldet.cli tree --depth 6
  python -m pascaldet.cli reproduce even-tree

Exit codes: 0 success, 1 verification failure or no recursion found, 2 malformed input.
"""
import argparse
import json
import logging
import sys

import pandas as pd
from pydantic import ValidationError

from pascaldet.banded import detect_banded_recursion
from pascaldet.determinants import det_sequence, rank_sequence
from pascaldet.errors import DomainError, PascalDetError, SpecError
from pascaldet.exact import format_scalar, to_scalar
from pascaldet.matrices import BandedPeriodicSpec, build
from pascaldet.oracles import IDENTITIES, OracleFamily, cross_check, verify_identity
from pascaldet.recurrence import RecursionReport, detect
from pascaldet.specfile import SpecLoader, load_family
from pascaldet.tables import TABLES, reproduce
from pascaldet.trees import (
    enumerate_even_tree,
    explore_sympletric,
    format_even_tree_table,
    sympletric_extensions,
)

logger = logging.getLogger("pascaldet")

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def emit(payload, fmt, frame: pd.DataFrame = None) -> None:
    if fmt in (None, "json") or frame is None:
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif fmt == "csv":
        print(frame.to_csv(index=False), end="")
    else:
        print(frame.to_string(index=False))


def _parse_values(text: str):
    try:
        return [to_scalar(part) for part in text.split(",") if part.strip()]
    except (TypeError, ValueError) as exc:
        raise SpecError(f"bad --values entry: {exc}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    try:
        low, high = (int(part) for part in text.split(":"))
    except ValueError:
        raise SpecError(f"--n-range must look like A:B, got {text!r}") from None
    if low < 1 or high < low:
        raise DomainError(f"bad --n-range {text}")
    return low, high


def _report_payload(report: RecursionReport) -> dict:
    payload = report.model_dump(mode="json")
    payload["char_poly"] = str(report.char_poly())
    return payload


# --- commands ---

def cmd_build(args) -> int:
    spec = load_family(args.spec)
    matrix = build(spec, args.n)
    payload = {"family": spec.model_dump(mode="json"), "n": args.n, "matrix": matrix.to_json()}
    emit(payload, args.format, matrix.to_frame())
    return EXIT_OK


def cmd_det_seq(args) -> int:
    spec = load_family(args.spec)
    engine = "condensation" if args.condensation else "elimination"
    sequence = det_sequence(spec, args.n_max, jobs=args.jobs, engine=engine)
    payload = sequence.model_dump(mode="json")
    payload["engine"] = engine
    emit(payload, args.format, sequence.to_frame())
    return EXIT_OK


def cmd_rank_seq(args) -> int:
    spec = load_family(args.spec)
    sequence = rank_sequence(spec, args.n_max, jobs=args.jobs)
    emit(sequence.model_dump(mode="json"), args.format, sequence.to_frame())
    return EXIT_OK


def cmd_detect(args) -> int:
    if args.values:
        values = _parse_values(args.values)
        report = detect(values, args.step, args.d_max, args.min_verify)
    else:
        if args.n_max is None:
            raise SpecError("--spec needs --n-max")
        spec = load_family(args.spec)
        if isinstance(spec, BandedPeriodicSpec) and args.banded:
            report = detect_banded_recursion(spec, args.n_max, jobs=args.jobs)
        else:
            values = det_sequence(spec, args.n_max, jobs=args.jobs).dets
            report = detect(values, args.step, args.d_max, args.min_verify)
    frame = pd.DataFrame({
        "i": range(1, report.d + 1),
        "D_i": [format_scalar(c) for c in report.coeffs],
    })
    emit(_report_payload(report), args.format, frame)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = SpecLoader.parse_params(args.params)
    n_range = _parse_range(args.n_range)
    if args.identity:
        report = verify_identity(args.identity, params, n_range)
    else:
        report = cross_check(args.oracle, params, n_range)
    emit(report.model_dump(mode="json"), "json")
    if report.holds:
        return EXIT_OK
    failure = report.first_failure
    print(
        f"{report.id} fails at n={failure.n}: {format_scalar(failure.left)} != {format_scalar(failure.right)}",
        file=sys.stderr,
    )
    return EXIT_FAILED


def cmd_tree(args) -> int:
    paths = enumerate_even_tree(args.depth, args.root_sign)
    payload = {"depth": args.depth, "root_sign": args.root_sign, "rows": [p.model_dump() for p in paths]}
    emit(payload, args.format or "table", format_even_tree_table(paths))
    return EXIT_OK


def cmd_sympletric(args) -> int:
    if args.explore is not None:
        leaves = explore_sympletric(args.explore)
        payload = {"length": args.explore, "rows": [leaf.model_dump() for leaf in leaves]}
        frame = pd.DataFrame(
            [{"prefix": " ".join(map(str, leaf.prefix)), "next": leaf.label()} for leaf in leaves]
        )
        emit(payload, args.format, frame)
        return EXIT_OK
    try:
        prefix = [int(part) for part in args.prefix.split(",") if part.strip()]
    except ValueError:
        raise SpecError(f"--prefix must be comma-separated integers, got {args.prefix!r}") from None
    extensions = sympletric_extensions(prefix)
    emit({"prefix": prefix, "extensions": extensions}, args.format,
         pd.DataFrame({"extension": extensions}))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    result = reproduce(args.table_id, jobs=args.jobs)
    emit(result.summary(), args.format, result.frame)
    for mismatch in result.mismatches:
        print(f"{mismatch.key}: expected {mismatch.expected}, got {mismatch.actual}", file=sys.stderr)
    return EXIT_OK if result.matches else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    common.add_argument("--format", choices=("json", "csv", "table"), help="Default json (table for tree)")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes for determinant windows")

    p = argparse.ArgumentParser(prog="pascaldet", description="Exact Pascal-triangle determinant toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    build_p = sub.add_parser("build", parents=[common], help="Build one matrix")
    build_p.add_argument("--spec", required=True, help="Matrix spec: JSON file path or inline JSON")
    build_p.add_argument("--n", type=int, required=True)
    build_p.set_defaults(handler=cmd_build)

    det_p = sub.add_parser("det-seq", parents=[common], help="Determinants for n = 1..n-max")
    det_p.add_argument("--spec", required=True)
    det_p.add_argument("--n-max", type=int, required=True)
    det_p.add_argument("--condensation", action="store_true", help="Use Dodgson condensation")
    det_p.set_defaults(handler=cmd_det_seq)

    rank_p = sub.add_parser("rank-seq", parents=[common], help="Ranks for n = 1..n-max")
    rank_p.add_argument("--spec", required=True)
    rank_p.add_argument("--n-max", type=int, required=True)
    rank_p.set_defaults(handler=cmd_rank_seq)

    detect_p = sub.add_parser("detect", parents=[common], help="Detect a linear recursion")
    source = detect_p.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec")
    source.add_argument("--values", help="Comma-separated exact values, e.g. 1,0,-9,135")
    detect_p.add_argument("--n-max", type=int)
    detect_p.add_argument("--step", type=int, default=1)
    detect_p.add_argument("--d-max", type=int, default=4)
    detect_p.add_argument("--min-verify", type=int, default=0)
    detect_p.add_argument("--banded", action="store_true",
                          help="For banded_periodic specs: step p, bounded order, shifting window")
    detect_p.set_defaults(handler=cmd_detect)

    verify_p = sub.add_parser("verify", parents=[common], help="Check an identity or a closed form")
    target = verify_p.add_mutually_exclusive_group(required=True)
    target.add_argument("--identity", choices=IDENTITIES)
    target.add_argument("--oracle", choices=[f.value for f in OracleFamily])
    verify_p.add_argument("--params", default="{}", help="JSON object: file path or inline")
    verify_p.add_argument("--n-range", required=True, help="Inclusive range A:B")
    verify_p.set_defaults(handler=cmd_verify)

    tree_p = sub.add_parser("tree", parents=[common], help="Enumerate the even symplectic tree")
    tree_p.add_argument("--depth", type=int, default=6)
    tree_p.add_argument("--root-sign", type=int, choices=(1, -1), default=1)
    tree_p.set_defaults(handler=cmd_tree)

    symp_p = sub.add_parser("sympletric", parents=[common], help="Sympletric extensions")
    mode = symp_p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--prefix", help="Comma-separated prefix starting 0,1,1")
    mode.add_argument("--explore", type=int, metavar="LENGTH")
    symp_p.set_defaults(handler=cmd_sympletric)

    repro_p = sub.add_parser("reproduce", parents=[common], help="Regenerate a table and diff it")
    repro_p.add_argument("table_id", choices=sorted(TABLES))
    repro_p.set_defaults(handler=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (SpecError, DomainError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except PascalDetError as exc:
        # NoRecursionFound, failed invariants and open findings
        print(f"failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
