"""Command-line entry point.

Exit status is 0 on success, 1 when the arithmetic or a key is invalid, and
2 for usage errors.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import census, cipher, expansion, keystream, numtheory
from .errors import DomainError

_FRACTION = re.compile(r"(-?\d+)/(-?\d+)")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> expansion.ExactRational:
    m = _FRACTION.fullmatch(text.strip())
    if not m:
        raise UsageError(f"expected a fraction A/B, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2))
    if num < 0 or den < 0:
        raise DomainError("negative fractions are not supported")
    return expansion.make_rational(num, den)


def _cmd_expand(args, out):
    r = _fraction(args.fraction)
    e = expansion.expand(r, args.max_digits)
    if args.verify and expansion.reconstruct(e) != r:
        raise DomainError(f"round trip failed for {r}")
    out.write(f"{e}\n")


def _cmd_period(args, out):
    d = args.denominator
    if d < 1:
        raise DomainError(f"denominator must be positive, got {d}")
    out.write(f"period={expansion.period_length(d)}\n")
    if d >= 2:
        out.write(f"factors={numtheory.factorize(d)}\n")
    out.write(f"phi={numtheory.euler_phi(d)}\n")
    out.write(f"prime={'yes' if numtheory.is_prime(d) else 'no'}\n")
    out.write(f"full_reptend_prime={'yes' if numtheory.is_full_reptend_prime(d) else 'no'}\n")


def _cmd_keygen(args, out):
    policy = numtheory.SearchPolicy.PRIMES_ONLY if args.primes_only else numtheory.SearchPolicy.ANY_COPRIME_TO_10
    key = keystream.generate_key(args.min_period, policy, args.seed)
    if args.out:
        keystream.save_key(key, args.out)
    else:
        out.write(keystream.format_key(key))


def _read_text(args) -> str:
    if args.text is not None:
        return args.text
    if args.infile:
        return Path(args.infile).read_bytes().decode("ascii", errors="replace")
    return sys.stdin.read()


def _cmd_crypt(args, out):
    key = keystream.load_key(args.key)
    text = _read_text(args)
    result = cipher.encrypt(text, key) if args.command == "encrypt" else cipher.decrypt(text, key)
    out.write(result if result.endswith("\n") else result + "\n")


def _cmd_census(args, out):
    report = census.repetend_census(args.max)
    out.write(report.to_table() if args.format == "table" else report.to_csv())


def _cmd_coprimes(args, out):
    pairs = census.count_coprime_pairs(args.max, odd_only=args.odd_only)
    out.write(f"max={args.max}\n")
    out.write(f"{'odd_coprime_pairs' if args.odd_only else 'coprime_pairs'}={pairs}\n")
    out.write(f"primes={census.prime_count(args.max)}\n")


def _cmd_odd_analysis(args, out):
    o = args.odd
    out.write(f"odd={o}\nfirst_position={census.first_position(o)}\n")
    out.write("multiplier,position,value\n")
    for m, pos, value in census.odd_multiple_positions(o, args.multipliers):
        out.write(f"{m},{pos},{value}\n")
    density = census.odd_window_density(o)
    out.write(f"window_coprimes={density.coprime_count}\n")
    verdict = "agrees" if density.agrees else "disagrees"
    out.write(f"prime_rule={density.prime_rule_count} ({verdict})\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="repetend", description="Repeating-decimal keys and counts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="exact decimal expansion of A/B")
    p.add_argument("fraction")
    p.add_argument("--max-digits", type=int, default=expansion.DEFAULT_MAX_DIGITS)
    p.add_argument("--verify", action="store_true", help="check the expansion reconstructs A/B")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("period", help="repetend length for a denominator")
    p.add_argument("denominator", type=int)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("keygen", help="generate a key descriptor")
    p.add_argument("--min-period", type=int, default=500)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_keygen)

    for name in ("encrypt", "decrypt"):
        p = sub.add_parser(name, help=f"{name} text with a key file")
        p.add_argument("--key", required=True)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--in", dest="infile")
        src.add_argument("--text")
        p.set_defaults(func=_cmd_crypt)

    p = sub.add_parser("census", help="count pure-repetend fractions")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "table"), default="csv")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("coprimes", help="count coprime pairs up to N")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--odd-only", action="store_true")
    p.set_defaults(func=_cmd_coprimes)

    p = sub.add_parser("odd-analysis", help="odd multiples in the series of odd numbers")
    p.add_argument("--odd", type=int, required=True)
    p.add_argument("--multipliers", type=int, required=True)
    p.set_defaults(func=_cmd_odd_analysis)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse would read "-1/3" as an option; route it to the positional
    for i, tok in enumerate(argv):
        if tok.startswith("-") and _FRACTION.fullmatch(tok) and "--" not in argv[:i]:
            argv.insert(i, "--")
            break
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        err.write(f"repetend: usage error: {exc}\n")
        return 2
    except (DomainError, OSError, ValueError) as exc:
        err.write(f"repetend: error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
