"""Command-line interface: ``bergeknots <subcommand> ...``.

Exit codes: 0 success, 1 semantic failure (no match, failed verification),
2 usage error.  Reports go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Sequence

from .hyperbolicity import (
    alexander_certificate,
    alexander_excludes_cable,
    alexander_excludes_torus,
    verify_hyperbolic,
)
from .knots import StandardParam, genus_berge
from .lens import LensSpace, identify_from_lens, identify_from_pg, lens_from_berge, surgery_coefficient
from .tables import (
    TABLE_FORMATS,
    alexander_collisions,
    berge_params,
    berge_table,
    format_collisions,
    format_rows,
    genus_collisions,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _max_p(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("max-p must be at least 2")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _describe(par: StandardParam) -> str:
    p = surgery_coefficient(par)
    head = f"{par} p={p} g={genus_berge(par)} {lens_from_berge(par)}"
    if par.is_trivial:
        r, s = par.torus_type()
        return f"{head}: torus knot T({r},{s}), not hyperbolic"
    cert = verify_hyperbolic(par)
    status = "hyperbolic" if cert.valid else "hyperbolicity NOT verified"
    return f"{head}: {status}"


def cmd_table(args: argparse.Namespace) -> int:
    sys.stdout.write(format_rows(berge_table(args.max_p), args.format))
    return EXIT_OK


def cmd_identify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.p < 2:
        parser.error("--p must be at least 2")
    if args.g is not None:
        if args.g < 0:
            parser.error("--g must be non-negative")
        found = identify_from_pg(args.p, 2 * args.g)
        matches = [found] if found is not None and found.n > 1 else []
    else:
        if gcd(args.q, args.p) != 1:
            parser.error(f"--q must be coprime to --p (gcd({args.q}, {args.p}) != 1)")
        matches = [par for par in identify_from_lens(LensSpace(args.p, args.q)) if par.n > 1]
    if not matches:
        print("none")
        return EXIT_FAIL
    for par in matches:
        print(_describe(par))
    return EXIT_OK


def _verify_one(par: StandardParam) -> tuple[bool, list[str]]:
    torsion = verify_hyperbolic(par)
    alexander = alexander_certificate(par)
    agree = alexander_excludes_torus(par) and alexander_excludes_cable(par)
    ok = torsion.valid and alexander.valid and agree
    return ok, [torsion.summary(), alexander.summary()]


def cmd_verify(args: argparse.Namespace) -> int:
    params = berge_params(args.max_p, nontrivial=True)
    if args.jobs > 1 and len(params) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, params, chunksize=16))
    else:
        results = [_verify_one(par) for par in params]
    failures = []
    for par, (ok, lines) in zip(params, results):
        for line in lines:
            print(line)
        if not ok:
            failures.append(par)
    if failures:
        print(f"FAILED: {len(failures)} of {len(params)} parameters")
        for par in failures:
            print(f"  {par}")
        print(f"verification failed for {len(failures)} parameters", file=sys.stderr)
        return EXIT_FAIL
    if not params:
        print(f"no nontrivial parameters with p <= {args.max_p}; nothing to verify")
    else:
        print(f"verified {len(params)} parameters with p <= {args.max_p}: all certificates valid")
    return EXIT_OK


def cmd_genus_collisions(args: argparse.Namespace) -> int:
    sys.stdout.write(format_collisions(genus_collisions(args.max_p), args.format))
    return EXIT_OK


def cmd_alexander_collisions(args: argparse.Namespace) -> int:
    report = alexander_collisions(args.max_p)
    print(
        f"parameters: {report.parameters}; pairs compared: {report.pairs_compared}; "
        f"collisions: {len(report.collisions)}"
    )
    if report.pairs_compared == 0:
        print("nothing to compare")
    for group in report.collisions:
        print("  " + " = ".join(str(par) for par in group))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergeknots",
        description="Berge knots of types VII and VIII: tables, identification and hyperbolicity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="table of p, (sign, m, n), g")
    p_table.add_argument("--max-p", type=_max_p, required=True)
    p_table.add_argument("--format", choices=TABLE_FORMATS, default="csv")

    p_ident = sub.add_parser("identify", help="find the knot with given p and genus or lens space")
    p_ident.add_argument("--p", type=int, required=True)
    which = p_ident.add_mutually_exclusive_group(required=True)
    which.add_argument("--g", type=int)
    which.add_argument("--q", type=int)

    p_verify = sub.add_parser("verify", help="hyperbolicity certificates for every nontrivial parameter")
    p_verify.add_argument("--max-p", type=_max_p, required=True)
    p_verify.add_argument("--jobs", type=_positive, default=1, help="worker processes (output order is fixed)")

    p_genus = sub.add_parser("genus-collisions", help="groups of knots sharing a genus")
    p_genus.add_argument("--max-p", type=_max_p, required=True)
    p_genus.add_argument("--format", choices=TABLE_FORMATS, default="csv")

    p_alex = sub.add_parser("alexander-collisions", help="report coinciding Alexander polynomials")
    p_alex.add_argument("--max-p", type=_max_p, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        return cmd_table(args)
    if args.command == "identify":
        return cmd_identify(args, parser)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "genus-collisions":
        return cmd_genus_collisions(args)
    return cmd_alexander_collisions(args)


if __name__ == "__main__":
    sys.exit(main())
