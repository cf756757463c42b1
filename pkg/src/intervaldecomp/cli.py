"""Command-line front end.

Exit codes: 0 success, 1 bad input or flags, 2 internal invariant failure,
3 certificate rejected or oracle disagreement, 4 oracle preconditions unmet.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .decomposer import (
    CertificateFormatError,
    DecompositionError,
    certify,
    decompose,
    parse_certificate,
    serialize_certificate,
)
from .linalg import DEFAULT_PRIME, is_prime
from .oracles import (
    OracleError,
    counterexample_demo,
    format_barcode,
    idempotent_bruteforce_barcode,
    rank_formula_barcode,
)
from .representation import RepresentationError, parse_representation, random_representation, serialize_representation

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_REJECTED, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; our contract reserves 2 for internal failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        return parse_representation(Path(path).read_text())
    except OSError as exc:
        raise RepresentationError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_decompose(args) -> int:
    r = _load(args.input)
    try:
        d = decompose(r)
    except DecompositionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    for line in format_barcode(d.barcode):
        print(line)
    if args.certificate and not args.barcode_only:
        Path(args.certificate).write_text(serialize_certificate(d))
    return EXIT_OK


def cmd_verify(args) -> int:
    r = _load(args.input)
    try:
        d = parse_certificate(Path(args.certificate).read_text())
    except OSError as exc:
        raise RepresentationError(f"cannot read {args.certificate}: {exc.strerror}") from exc
    report = certify(r, d)
    print(report.render())
    return EXIT_OK if report.ok else EXIT_REJECTED


def cmd_oracle(args) -> int:
    r = _load(args.input)
    oracle = {"rank": rank_formula_barcode, "idempotent": idempotent_bruteforce_barcode}[args.method]
    try:
        expected = oracle(r)
    except OracleError as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    for line in format_barcode(expected):
        print(line)
    got = decompose(r).barcode
    if got == expected:
        print("AGREE")
        return EXIT_OK
    print("DISAGREE")
    for line in format_barcode(got):
        print(f"decompose: {line}")
    return EXIT_REJECTED


def cmd_gen(args) -> int:
    if args.window < 1 or args.max_dim < 0 or not is_prime(args.p):
        print("gen: need --window >= 1, --max-dim >= 0 and a prime --p", file=sys.stderr)
        return EXIT_INPUT
    r = random_representation(args.window, args.max_dim, args.p, tuple(args.tails.split(",")), args.seed)
    Path(args.out).write_text(serialize_representation(r))
    return EXIT_OK


def cmd_demo(args) -> int:
    if args.n_max < 1:
        print("demo: --n-max must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    print(counterexample_demo(args.n_max))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intervaldecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="print the barcode, optionally write a certificate")
    p.add_argument("input")
    p.add_argument("--certificate", metavar="OUT")
    p.add_argument("--barcode-only", action="store_true", help="never write a certificate")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("verify", help="check a certificate against a representation")
    p.add_argument("input")
    p.add_argument("certificate")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("oracle", help="compare decompose with an independent oracle")
    p.add_argument("input")
    p.add_argument("--method", choices=("rank", "idempotent"), required=True)
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("gen", help="write a seeded random representation")
    p.add_argument("out")
    p.add_argument("--window", type=int, default=4)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p.add_argument("--tails", default="zero,zero",
                   choices=[f"{a},{b}" for a in ("zero", "constant") for b in ("zero", "constant")])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("demo", help="decompose truncations of the sequence-space module")
    p.add_argument("--n-max", type=int, default=5)
    p.set_defaults(run=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # bad flags or --help
        return int(exc.code or 0)
    try:
        return args.run(args)
    except (RepresentationError, CertificateFormatError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
