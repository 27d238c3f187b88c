"""Finite counting over fractions, coprime pairs and the series of odd numbers.

The series of odd numbers starts at 3, so position 1 holds 3, position 2
holds 5, and position ``k`` holds ``2k + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .numtheory import euler_phi, is_prime


@dataclass(frozen=True)
class CensusReport:
    max_denominator: int
    qualifying_denominators: list[int]
    fraction_count: int
    per_denominator_counts: list[tuple[int, int]] = field(default_factory=list)

    def to_csv(self) -> str:
        rows = ["denominator,count"]
        rows += [f"{d},{c}" for d, c in self.per_denominator_counts]
        rows.append(f"TOTAL,{self.fraction_count}")
        return "\n".join(rows) + "\n"

    def to_table(self) -> str:
        width = max(len("denominator"), len(str(self.max_denominator)), len("TOTAL"))
        cwidth = max(len("count"), len(str(self.fraction_count)))
        rows = [f"{'denominator':>{width}}  {'count':>{cwidth}}"]
        rows.append(f"{'-' * width}  {'-' * cwidth}")
        rows += [f"{d:>{width}}  {c:>{cwidth}}" for d, c in self.per_denominator_counts]
        rows.append(f"{'-' * width}  {'-' * cwidth}")
        rows.append(f"{'TOTAL':>{width}}  {self.fraction_count:>{cwidth}}")
        return "\n".join(rows) + "\n"


def repetend_census(max_denominator: int) -> CensusReport:
    """Count reduced proper fractions whose expansion is a pure repetend.

    A denominator qualifies when it is at least 3 and coprime to 10; each one
    contributes phi(d) reduced numerators, so 3/9 is never counted beside 1/3.
    """
    if max_denominator < 3:
        raise DomainError(f"max_denominator must be >= 3, got {max_denominator}")
    dens = [d for d in range(3, max_denominator + 1) if d % 2 and d % 5]
    counts = [(d, euler_phi(d)) for d in dens]
    return CensusReport(max_denominator, dens, sum(c for _, c in counts), counts)


def count_coprime_pairs(n: int, odd_only: bool = False) -> int:
    """Number of pairs 1 <= a < b <= n with gcd(a, b) == 1.

    For each b the partners are the phi(b) residues coprime to b. For odd b
    those residues pair off as a <-> b - a with opposite parity, so exactly
    half of them are odd.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if odd_only:
        return sum(euler_phi(b) // 2 for b in range(3, n + 1, 2))
    return sum(euler_phi(b) for b in range(2, n + 1))


def prime_count(n: int) -> int:
    return sum(1 for k in range(2, n + 1) if is_prime(k))


def _odd_window(n: int, first: int) -> int:
    return sum(1 for o in range(first, first + 2 * n, 2) if math.gcd(o, n) == 1)


def coprime_count_in_odd_window(n: int, sample_windows: int = 4) -> int:
    """Members coprime to ``n`` among ``n`` consecutive odd integers.

    Counts the window starting at 1, then re-counts a few shifted windows and
    raises if any disagree.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"n must be odd and >= 3, got {n}")
    count = _odd_window(n, 1)
    for k in range(1, sample_windows + 1):
        first = 1 + 2 * (k * k + 7 * k)
        if _odd_window(n, first) != count:
            raise RuntimeError(f"window count for {n} depends on the window start {first}")
    return count


@dataclass(frozen=True)
class WindowDensity:
    """Coprime density of ``n`` in the odd series, exact versus the (n-1)/n rule."""

    n: int
    coprime_count: int
    prime_rule_count: int

    @property
    def agrees(self) -> bool:
        return self.coprime_count == self.prime_rule_count


def odd_window_density(n: int) -> WindowDensity:
    return WindowDensity(n, coprime_count_in_odd_window(n), n - 1)


def odd_at(position: int) -> int:
    if position < 1:
        raise DomainError(f"position must be >= 1, got {position}")
    return 2 * position + 1


def _check_odd(o: int) -> None:
    if o < 3 or o % 2 == 0:
        raise DomainError(f"expected an odd number >= 3, got {o}")


def first_position(o: int) -> int:
    _check_odd(o)
    return (o - 1) // 2


def odd_multiple_positions(o: int, max_multiplier: int) -> list[tuple[int, int, int]]:
    """Rows ``(m, position, value)`` locating the odd multiples of ``o``.

    The position of the m-th odd multiple is ``first_position(o) + o*m`` and
    its value is ``o * (2m + 1)``.
    """
    _check_odd(o)
    if max_multiplier < 1:
        raise DomainError(f"max_multiplier must be >= 1, got {max_multiplier}")
    f = first_position(o)
    rows = []
    for m in range(1, max_multiplier + 1):
        pos = f + o * m
        value = odd_at(pos)
        assert value == o * (2 * m + 1)
        rows.append((m, pos, value))
    return rows
