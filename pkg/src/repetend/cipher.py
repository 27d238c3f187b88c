"""Digit-keyed shift cipher (Gronsfeld style) driven by a repetend keystream.

This is a demonstration only. A keystream of decimal digits gives ten
possible shifts per letter and is breakable with classical techniques.

Letters are folded to upper case and shifted by the next key digit; any other
ASCII character passes through unchanged without consuming a digit.
"""

from __future__ import annotations

from .errors import DomainError
from .keystream import KeyDescriptor, keystream_digits


def _shift(text: str, key: KeyDescriptor, sign: int) -> str:
    if not text.isascii():
        raise DomainError("only ASCII text is supported")
    letters = sum(1 for ch in text if ch.isalpha())
    digits = iter(keystream_digits(key, letters))
    out = []
    for ch in text:
        if "a" <= ch <= "z":
            ch = ch.upper()
        if "A" <= ch <= "Z":
            idx = (ord(ch) - 65 + sign * int(next(digits))) % 26
            out.append(chr(65 + idx))
        else:
            out.append(ch)
    return "".join(out)


def encrypt(plaintext: str, key: KeyDescriptor) -> str:
    return _shift(plaintext, key, 1)


def decrypt(ciphertext: str, key: KeyDescriptor) -> str:
    """Inverse of :func:`encrypt`; lower-case input is treated as upper case."""
    return _shift(ciphertext, key, -1)
