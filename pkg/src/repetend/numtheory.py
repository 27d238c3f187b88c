"""Integer number-theory primitives.

Everything here is a pure function of its arguments. Factorization uses
trial division followed by Brent's variant of Pollard rho, seeded from the
input so that repeated calls behave identically.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DomainError, FactorizationTimeout, SearchExhausted

DEFAULT_MAX_VALUE = 2**64
DEFAULT_SEARCH_CAP = 10**7

_TRIAL_BOUND = 1000
_SMALL_PRIMES = [p for p in range(2, _TRIAL_BOUND) if all(p % q for q in range(2, math.isqrt(p) + 1))]

# Deterministic Miller-Rabin for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class SearchPolicy(enum.Enum):
    PRIMES_ONLY = "primes_only"
    ANY_COPRIME_TO_10 = "any_coprime_to_10"


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending ``(prime, exponent)`` pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise DomainError("primes must be strictly increasing")
        for p, e in self.factors:
            if e < 1 or not is_prime(p):
                raise DomainError(f"invalid factor {p}^{e}")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self):
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError("gcd is defined here for non-negative integers")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if base < 0 or exponent < 0:
        raise DomainError("base and exponent must be non-negative")
    # Python integers are arbitrary precision, so no intermediate overflows.
    return pow(base, exponent, modulus)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:  # every prime below 100, witnesses included
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = mod_pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int, rng: random.Random, deadline: Optional[float]) -> int:
    """Return a nontrivial factor of the odd composite ``n`` (Brent)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                if deadline is not None and time.monotonic() > deadline:
                    raise FactorizationTimeout(f"factorization of {n} timed out")
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, max_value: int = DEFAULT_MAX_VALUE, timeout: Optional[float] = None) -> Factorization:
    """Factor ``n`` completely.

    ``timeout`` is in seconds; exceeding it raises :class:`FactorizationTimeout`
    instead of returning a partial result.
    """
    if n < 2:
        raise DomainError(f"cannot factor {n}; need n >= 2")
    if n >= max_value:
        raise DomainError(f"{n} exceeds the factorization bound {max_value}")
    deadline = None if timeout is None else time.monotonic() + timeout
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    rng = random.Random(n)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m < _TRIAL_BOUND * _TRIAL_BOUND or is_prime(m):
            # every cofactor left here has no prime factor below _TRIAL_BOUND
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _rho(m, rng, deadline)
        stack.extend((d, m // d))
    return Factorization(tuple(sorted(counts.items())))


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"totient needs n >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Least ``k >= 1`` with ``a**k == 1 (mod n)``.

    Starts from phi(n) and divides out prime factors while the power stays 1.
    """
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    if a < 1 or math.gcd(a, n) != 1:
        raise DomainError(f"{a} is not a unit modulo {n}")
    phi = euler_phi(n)
    order = phi
    if phi == 1:
        return 1
    for q, _ in factorize(phi):
        while order % q == 0 and mod_pow(a, order // q, n) == 1:
            order //= q
    return order


def is_full_reptend_prime(p: int) -> bool:
    if p < 2 or not is_prime(p) or 10 % p == 0:
        return False
    return multiplicative_order(10, p) == p - 1


def find_denominator_with_min_order(
    min_order: int,
    policy: SearchPolicy = SearchPolicy.ANY_COPRIME_TO_10,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> int:
    """Smallest d > 2, coprime to 10, whose decimal period is at least ``min_order``.

    Denominators are scanned in ascending order up to ``search_cap``. Since the
    order of 10 divides phi(d) <= d - 1, nothing below ``min_order + 1`` can
    qualify and the scan starts there.
    """
    if min_order < 1:
        raise DomainError(f"min_order must be >= 1, got {min_order}")
    policy = SearchPolicy(policy)
    for d in range(max(3, min_order + 1), search_cap + 1):
        if d % 2 == 0 or d % 5 == 0:
            continue
        if policy is SearchPolicy.PRIMES_ONLY and not is_prime(d):
            continue
        if multiplicative_order(10, d) >= min_order:
            return d
    raise SearchExhausted(f"no denominator <= {search_cap} has period >= {min_order} ({policy.value})")
