"""Binary words without adjacent 1s, their cyclic variant, and enumeration.

A word of length n is written b1...bn with b1 the leftmost symbol; the
integer encoding keeps b1 as the most significant bit, so numeric order
on equal-length words is exactly lexicographic order with 0 < 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class WordClass(Enum):
    FIBONACCI = "fibonacci"  # no two adjacent 1s
    LUCAS = "lucas"  # additionally the first and last bit are not both 1
    UNRESTRICTED = "unrestricted"


@dataclass(frozen=True, order=True)
class BitWord:
    """A fixed-length binary word; position 1 is the leftmost symbol."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("word length must be >= 0")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits 0b{self.bits:b} do not fit in length {self.n}")

    @classmethod
    def from_string(cls, s: str) -> "BitWord":
        return cls(len(s), int(s, 2) if s else 0)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def bit(self, i: int) -> int:
        """Symbol at position i, counted 1..n from the left."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} outside 1..{self.n}")
        return (self.bits >> (self.n - i)) & 1

    def flip(self, i: int) -> "BitWord":
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} outside 1..{self.n}")
        return BitWord(self.n, self.bits ^ (1 << (self.n - i)))

    def hamming(self, other: "BitWord") -> int:
        if self.n != other.n:
            raise ValueError("Hamming distance needs equal lengths")
        return (self.bits ^ other.bits).bit_count()

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord(self.n + other.n, (self.bits << other.n) | other.bits)


def _fibonacci_bits(bits: int) -> bool:
    return bits & (bits >> 1) == 0


def _lucas_bits(n: int, bits: int) -> bool:
    # first-and-last test: (bits >> (n-1)) & bits & 1 is 1 iff b1 = bn = 1
    return _fibonacci_bits(bits) and not (n >= 1 and (bits >> (n - 1)) & bits & 1)


def is_fibonacci(w: BitWord) -> bool:
    """True iff the word has no two consecutive 1s (the empty word passes)."""
    return _fibonacci_bits(w.bits)


def is_lucas(w: BitWord) -> bool:
    """True iff no two consecutive 1s, cyclically: first and last not both 1.

    For n = 1 the word "1" fails since its first and last symbol coincide.
    """
    return _lucas_bits(w.n, w.bits)


@lru_cache(maxsize=None)
def _fibonacci_words(n: int) -> tuple[int, ...]:
    # Lexicographic: "0" + (length n-1 words) precedes "10" + (length n-2 words).
    if n == 0:
        return (0,)
    if n == 1:
        return (0, 1)
    top = 1 << (n - 1)
    return _fibonacci_words(n - 1) + tuple(top | b for b in _fibonacci_words(n - 2))


def enumerate_bits(n: int, word_class: WordClass) -> list[int]:
    """Integer encodings of all words of the class, in lexicographic order."""
    if n < 0:
        raise ValueError("word length must be >= 0")
    if word_class is WordClass.UNRESTRICTED:
        return list(range(1 << n))
    fib = _fibonacci_words(n)
    if word_class is WordClass.FIBONACCI:
        return list(fib)
    return [b for b in fib if _lucas_bits(n, b)]


def enumerate_words(n: int, word_class: WordClass) -> list[BitWord]:
    """All words of the class and length n, lexicographically ordered."""
    return [BitWord(n, b) for b in enumerate_bits(n, word_class)]


class SuffixCase(Enum):
    """How a word of length >= 2 decomposes by its last two symbols.

    ENDS_00 strips both trailing zeros; the other two strip one symbol,
    leaving a parent that ends in 1 (ENDS_10) or in 0 (ENDS_01).
    """

    ENDS_00 = "00"
    ENDS_10 = "10"
    ENDS_01 = "01"


def suffix_class(w: BitWord) -> tuple[SuffixCase, BitWord]:
    """Classify a word by its last two symbols and return the stripped parent."""
    if w.n < 2:
        raise ValueError("decomposition undefined for words shorter than 2")
    last_two = w.bits & 3
    if last_two == 0b00:
        return SuffixCase.ENDS_00, BitWord(w.n - 2, w.bits >> 2)
    if last_two == 0b10:
        return SuffixCase.ENDS_10, BitWord(w.n - 1, w.bits >> 1)
    if last_two == 0b01:
        return SuffixCase.ENDS_01, BitWord(w.n - 1, w.bits >> 1)
    raise ValueError("word ends in 11, so it has adjacent 1s")
