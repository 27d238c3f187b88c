"""Repeating decimals as digit keystreams."""

from .census import (
    CensusReport,
    coprime_count_in_odd_window,
    count_coprime_pairs,
    first_position,
    odd_at,
    odd_multiple_positions,
    repetend_census,
)
from .cipher import decrypt, encrypt
from .errors import (
    DomainError,
    ExpansionBoundExceeded,
    FactorizationTimeout,
    KeyFormatError,
    KeyValidationError,
    SearchExhausted,
)
from .expansion import (
    DecimalExpansion,
    DigitStream,
    ExactRational,
    digit_stream,
    expand,
    make_rational,
    period_length,
    reconstruct,
)
from .keystream import KeyDescriptor, format_key, generate_key, keystream_digits, load_key, parse_key, save_key
from .numtheory import (
    Factorization,
    SearchPolicy,
    euler_phi,
    factorize,
    find_denominator_with_min_order,
    gcd,
    is_full_reptend_prime,
    is_prime,
    mod_pow,
    multiplicative_order,
)

__version__ = "0.1.0"
