"""Repetend keys: choosing a denominator and streaming its digits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import KeyFormatError, KeyValidationError
from .expansion import ExactRational, digit_stream, period_length
from .numtheory import DEFAULT_SEARCH_CAP, SearchPolicy, find_denominator_with_min_order

HEADER = "REPETEND-KEY v1"
_FIELDS = ("numerator", "denominator", "offset")


@dataclass(frozen=True)
class KeyDescriptor:
    """Identifies the digit stream of ``numerator/denominator`` from ``offset`` on."""

    numerator: int
    denominator: int
    offset: int = 0

    def __post_init__(self):
        if self.numerator < 1 or self.denominator < 1 or self.offset < 0:
            raise KeyValidationError("numerator and denominator must be positive, offset non-negative")
        if self.numerator >= self.denominator:
            raise KeyValidationError(f"numerator {self.numerator} must be below denominator {self.denominator}")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise KeyValidationError(f"{self.numerator}/{self.denominator} is not reduced")
        if math.gcd(self.denominator, 10) != 1:
            raise KeyValidationError(f"denominator {self.denominator} shares a factor with 10")

    @property
    def period(self) -> int:
        return period_length(self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}+{self.offset}"


def generate_key(
    message_length: int,
    policy: SearchPolicy = SearchPolicy.ANY_COPRIME_TO_10,
    numerator_seed: int = 0,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> KeyDescriptor:
    """Pick the smallest denominator whose period covers ``message_length`` digits."""
    if message_length < 1:
        raise KeyValidationError(f"message_length must be >= 1, got {message_length}")
    if numerator_seed < 0:
        raise KeyValidationError("numerator_seed must be non-negative")
    den = find_denominator_with_min_order(message_length, policy, search_cap)
    num = max(1, numerator_seed % den)
    # den - 1 is always coprime to den, so this stays below den
    while math.gcd(num, den) != 1:
        num += 1
    key = KeyDescriptor(num, den, 0)
    if period_length(den) < message_length:
        raise KeyValidationError(f"denominator {den} has period shorter than {message_length}")
    return key


def keystream_digits(key: KeyDescriptor, count: int) -> str:
    if count < 0:
        raise KeyValidationError("count must be non-negative")
    # skipping k digits leaves the fraction (numerator * 10^k mod d) / d
    den = key.denominator
    start = key.numerator * pow(10, key.offset, den) % den
    return digit_stream(ExactRational(start, den)).take(count)


def format_key(key: KeyDescriptor) -> str:
    return (
        f"{HEADER}\n"
        f"numerator={key.numerator}\n"
        f"denominator={key.denominator}\n"
        f"offset={key.offset}\n"
    )


def parse_key(text: str) -> KeyDescriptor:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        raise KeyFormatError(f"missing {HEADER!r} header")
    values: dict[str, int] = {}
    for line in lines[1:]:
        name, sep, raw = line.partition("=")
        if not sep or name not in _FIELDS:
            raise KeyFormatError(f"unknown line {line!r}")
        if name in values:
            raise KeyFormatError(f"duplicate field {name!r}")
        if not raw or not raw.isascii() or not raw.isdigit():
            raise KeyFormatError(f"{name} is not a decimal integer: {raw!r}")
        values[name] = int(raw)
    missing = [f for f in _FIELDS if f not in values]
    if missing:
        raise KeyFormatError(f"missing field(s): {', '.join(missing)}")
    return KeyDescriptor(**values)


def save_key(key: KeyDescriptor, path) -> None:
    Path(path).write_bytes(format_key(key).encode("ascii"))


def load_key(path) -> KeyDescriptor:
    try:
        text = Path(path).read_bytes().decode("ascii")
    except UnicodeDecodeError as exc:
        raise KeyFormatError(f"{path}: key file is not ASCII") from exc
    return parse_key(text)
