"""Command-line interface: gen, filter, verify, correlate, simulate.

Data goes to standard output (or --out) in CSV or JSON; diagnostics go to
standard error. The exit status is 0 only when the command's semantic
checks pass: bad input exits 2, and a verification run with any failing
check exits 1. Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from ._version import __version__
from .analysis import correlation_profile, verify_lemmas
from .designer import DesignSpec, design
from .modp import is_prime, validate_prime
from .sequences import hmc_sequence, hmc_set
from .simulate import load_scenario, simulate_period
from .tables import (
    FORMATS,
    filtered_set_document,
    hit_report_document,
    hmc_set_document,
    prime_set_document,
    profile_document,
    report_document,
    serialize,
    serialize_many,
)

__all__ = ["main"]

P_CAP = 2**20


def _check_p(p: int) -> None:
    # Cap before the primality scan so absurd inputs fail fast.
    if p > P_CAP:
        raise ValueError("p must be <= %d, got %d" % (P_CAP, p))
    validate_prime(p)


def _expand_p(args) -> list[int]:
    if args.pmax is not None:
        if args.pmax > P_CAP:
            raise ValueError("pmax must be <= %d, got %d" % (P_CAP, args.pmax))
        ps = [n for n in range(3, args.pmax + 1) if is_prime(n)]
        if not ps:
            raise ValueError("no odd primes up to %d" % args.pmax)
        return ps
    _check_p(args.p)
    return [args.p]


def _bad_list(text: str) -> list[int]:
    return [int(cell) for cell in text.split(",") if cell != ""]


def _emit(args, docs) -> str:
    if getattr(args, "pmax", None) is not None:
        return serialize_many(docs, args.format)
    return serialize(docs[0], args.format)


def _cmd_gen(args) -> tuple[str, int]:
    docs = []
    for p in _expand_p(args):
        if args.family == "prime":
            docs.append(prime_set_document(p))
        else:
            docs.append(hmc_set_document(p))
    return _emit(args, docs), 0


def _cmd_filter(args) -> tuple[str, int]:
    _check_p(args.p)
    spec = DesignSpec(args.dreq, frozenset(args.bad))
    result = design(hmc_set(args.p), spec)
    return serialize(filtered_set_document(result, spec), args.format), 0


def _cmd_verify(args) -> tuple[str, int]:
    docs = []
    status = 0
    for p in _expand_p(args):
        report = verify_lemmas(p)
        if not report.all_pass:
            status = 1
        docs.append(report_document(report))
    return _emit(args, docs), status


def _cmd_correlate(args) -> tuple[str, int]:
    _check_p(args.p)
    for name, value in (("k", args.k), ("l", args.l)):
        if not 1 <= value <= args.p - 1:
            raise ValueError(
                "%s must be in [1, %d], got %d" % (name, args.p - 1, value)
            )
    profile = correlation_profile(
        hmc_sequence(args.p, args.k), hmc_sequence(args.p, args.l)
    )
    return serialize(profile_document(args.p, args.k, args.l, profile), args.format), 0


def _cmd_simulate(args) -> tuple[str, int]:
    assignments = load_scenario(args.scenario, seed=args.seed)
    report = simulate_period(assignments)
    return serialize(hit_report_document(report), args.format), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hmcseq",
        description="Construct, analyze, filter and simulate one-coincidence "
        "frequency-hopping sequence sets built over a prime p.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--format", choices=FORMATS, default="csv")
        sp.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")

    def add_p(sp, with_range=False):
        if with_range:
            group = sp.add_mutually_exclusive_group(required=True)
            group.add_argument("--p", type=int, help="single prime")
            group.add_argument("--pmax", type=int, help="all odd primes 3..pmax")
        else:
            sp.add_argument("--p", type=int, required=True, help="odd prime >= 3")

    gen = sub.add_parser("gen", help="emit a prime-set or hmc-set table")
    add_p(gen, with_range=True)
    gen.add_argument("--family", choices=("prime", "hmc"), default="hmc")
    add_common(gen)
    gen.set_defaults(func=_cmd_gen)

    flt = sub.add_parser("filter", help="drop sequences by distance or bad frequencies")
    add_p(flt)
    flt.add_argument("--dreq", type=int, default=1, help="required minimum adjacent distance")
    flt.add_argument("--bad", type=_bad_list, default=[], help="comma-separated bad frequencies")
    add_common(flt)
    flt.set_defaults(func=_cmd_filter)

    ver = sub.add_parser("verify", help="check every claimed set property")
    add_p(ver, with_range=True)
    add_common(ver)
    ver.set_defaults(func=_cmd_verify)

    cor = sub.add_parser("correlate", help="emit the full correlation profile of a pair")
    add_p(cor)
    cor.add_argument("--k", type=int, required=True)
    cor.add_argument("--l", type=int, required=True)
    add_common(cor)
    cor.set_defaults(func=_cmd_correlate)

    sim = sub.add_parser("simulate", help="run a scenario file for one period")
    sim.add_argument("scenario", type=Path, help="scenario JSON path")
    sim.add_argument("--seed", type=int, default=None, help="fill missing delays")
    add_common(sim)
    sim.set_defaults(func=_cmd_simulate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, status = args.func(args)
    except (ValueError, OSError) as e:
        print(e, file=sys.stderr)
        return 2
    if args.out is not None:
        args.out.write_bytes(text.encode())
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
