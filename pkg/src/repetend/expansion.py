"""Exact decimal expansion of non-negative rationals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, ExpansionBoundExceeded
from .numtheory import gcd, multiplicative_order

try:
    from . import _longdiv
except ImportError:  # extension not built
    _longdiv = None

DEFAULT_MAX_DIGITS = 10**6

# Stay under the interpreter's int <-> str conversion limit.
_CHUNK = 4000

# The compiled path keeps a flat table of 4-byte positions (64 MiB at most).
_TABLE_MAX = 1 << 24


@dataclass(frozen=True)
class ExactRational:
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise DomainError(f"denominator must be positive, got {self.denominator}")
        if self.numerator < 0:
            raise DomainError(f"numerator must be non-negative, got {self.numerator}")
        g = gcd(self.numerator, self.denominator)
        if g != 1:
            object.__setattr__(self, "numerator", self.numerator // g)
            object.__setattr__(self, "denominator", self.denominator // g)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def make_rational(numerator: int, denominator: int) -> ExactRational:
    if denominator == 0:
        raise DomainError("denominator must not be zero")
    return ExactRational(numerator, denominator)


@dataclass(frozen=True)
class DecimalExpansion:
    integer_part: str
    pre_period: str = ""
    repetend: str = ""

    def __str__(self):
        """Canonical rendering, e.g. ``0.(142857)``, ``0.1(6)``, ``0.5``, ``3``."""
        text = self.integer_part
        if self.pre_period or self.repetend:
            text += "." + self.pre_period
        if self.repetend:
            text += f"({self.repetend})"
        return text

    @property
    def period(self) -> int:
        return len(self.repetend)


def _strip_2_5(n: int) -> tuple[int, int]:
    """Split ``n`` into (cofactor prime to 10, max exponent of 2 and 5)."""
    twos = fives = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    while n % 5 == 0:
        n //= 5
        fives += 1
    return n, max(twos, fives)


def period_length(denominator: int) -> int:
    if denominator < 1:
        raise DomainError(f"denominator must be positive, got {denominator}")
    cofactor, _ = _strip_2_5(denominator)
    if cofactor == 1:
        return 0
    return multiplicative_order(10, cofactor)


def _digits(rem: int, den: int, count: int) -> str:
    """``count`` fractional digits of rem/den, one big division per chunk."""
    out = []
    while count > 0:
        k = min(count, _CHUNK)
        q, rem = divmod(rem * 10**k, den)
        out.append(str(q).zfill(k))
        count -= k
    return "".join(out)


def _long_division_py(rem: int, den: int, limit: int):
    """Same contract as the C ``long_division`` but returns ``(digit_count, start)``."""
    seen: dict[int, int] = {}
    n = 0
    while rem and rem not in seen:
        if n >= limit:
            return None
        seen[rem] = n
        n += 1
        rem = rem * 10 % den
    return n, (seen[rem] if rem else -1)


def expand(r: ExactRational, max_total_digits: int = DEFAULT_MAX_DIGITS) -> DecimalExpansion:
    """Long division with remainder-cycle detection.

    The first remainder that recurs marks where the repetend starts. Raises
    :class:`ExpansionBoundExceeded` rather than truncating when more than
    ``max_total_digits`` fractional digits would be needed.
    """
    if max_total_digits < 1:
        raise DomainError("max_total_digits must be positive")
    den = r.denominator
    integer, rem = divmod(r.numerator, den)
    if _longdiv is not None and den <= _TABLE_MAX and max_total_digits < 2**32:
        found = _longdiv.long_division(rem, den, max_total_digits)
        if found is not None:
            text, start = found
    else:
        found = _long_division_py(rem, den, max_total_digits)
        if found is not None:
            n, start = found
            text = _digits(rem, den, n)
    if found is None:
        raise ExpansionBoundExceeded(f"expansion of {r} needs more than {max_total_digits} digits")
    if start < 0:
        return DecimalExpansion(str(integer), text, "")
    return DecimalExpansion(str(integer), text[:start], text[start:])


class DigitStream:
    """Unbounded source of the fractional digits of a rational.

    Terminating expansions continue with zeros forever. One instance holds
    one mutable remainder, so share it between threads only with care.
    """

    def __init__(self, r: ExactRational):
        self.denominator = r.denominator
        self.remainder = r.numerator % r.denominator

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        digit, self.remainder = divmod(self.remainder * 10, self.denominator)
        return digit

    def take(self, count: int) -> str:
        """Next ``count`` digits as a string."""
        text = _digits(self.remainder, self.denominator, count)
        self.remainder = self.remainder * pow(10, count, self.denominator) % self.denominator
        return text


def digit_stream(r: ExactRational) -> DigitStream:
    return DigitStream(r)


def _digits_to_int(s: str) -> int:
    value = 0
    for i in range(0, len(s), _CHUNK):
        chunk = s[i:i + _CHUNK]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def reconstruct(e: DecimalExpansion) -> ExactRational:
    """Invert :func:`expand` using the geometric-series identity."""
    for part in (e.integer_part, e.pre_period, e.repetend):
        if not isinstance(part, str) or (part and not (part.isascii() and part.isdigit())):
            raise DomainError(f"malformed digit string {part!r}")
    if not e.integer_part:
        raise DomainError("integer part must not be empty")
    k, p = len(e.pre_period), len(e.repetend)
    integer = _digits_to_int(e.integer_part)
    pre = _digits_to_int(e.pre_period) if k else 0
    if p == 0:
        return ExactRational(integer * 10**k + pre, 10**k)
    rep = _digits_to_int(e.repetend)
    nines = 10**p - 1
    # I + pre/10^k + rep/(10^k * (10^p - 1))
    num = (integer * 10**k + pre) * nines + rep
    return ExactRational(num, 10**k * nines)
